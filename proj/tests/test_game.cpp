#include "doctest.h"
#include "idealgames/game.hpp"

using namespace ig;

namespace {

// prefix chain family over five atoms; every member is itself a generator
IdealInstance chain_instance() {
  IdealInstance inst;
  inst.ground = {"a", "b", "c", "d", "e"};
  for (int i = 0; i < 4; ++i) inst.generators.push_back(AtomSet::first_n(i + 1));
  inst.generators.push_back(AtomSet::from({4}));
  inst.sigma_stage_bound = 2;
  FamilySpec fam;
  for (int i = 0; i < 4; ++i) fam.members.push_back({{i}, AtomSet::first_n(i + 1)});
  inst.family = fam;
  return inst;
}

std::vector<AtomSet> chain_menu(const IdealInstance& inst) {
  std::vector<AtomSet> menu;
  for (const auto& m : inst.family->members) menu.push_back(m.realized);
  return menu;
}

Tactic copy_tactic() {
  Tactic t;
  t.name = "copy";
  t.move_fn = [](const std::vector<AtomSet>& w, int) -> TwoMove { return {w.back(), {}}; };
  return t;
}

Tactic silent_tactic() {
  Tactic t;
  t.name = "silent";
  t.move_fn = [](const std::vector<AtomSet>&, int) -> TwoMove { return {AtomSet{}, {}}; };
  return t;
}

Inning inning(AtomSet one, AtomSet t) { return {one, TwoMove{t, {}}}; }

}  // namespace

TEST_SUITE("game") {

TEST_CASE("finite win owes moves older than the lag") {
  std::vector<Inning> play{inning(AtomSet::from({0}), AtomSet::from({0})),
                           inning(AtomSet::from({1}), AtomSet{}),
                           inning(AtomSet::from({2}), AtomSet{})};
  AtomSet uncovered;
  CHECK(!finite_win(play, 1, &uncovered));
  CHECK(uncovered == AtomSet::single(1));
  CHECK(finite_win(play, 2, &uncovered));
  CHECK(uncovered.empty());
  CHECK(finite_win(play, 3));
  CHECK(finite_win({}, 0));
  // late responses cover early debt
  play[2].two.t = AtomSet::from({1});
  CHECK(finite_win(play, 1));
}

TEST_CASE("move legality by kind") {
  IdealInstance inst = chain_instance();
  auto menu = chain_menu(inst);
  CHECK(legal_one_move(GameKind::MG_family, inst, {}, menu[0]).ok);
  CHECK(!legal_one_move(GameKind::MG_family, inst, {}, AtomSet::from({1})).ok);
  CHECK(legal_one_move(GameKind::MG_full, inst, {}, AtomSet::from({1})).ok);

  std::vector<Inning> hist{inning(menu[1], AtomSet::from({0}))};
  CHECK(legal_one_move(GameKind::MG_family, inst, hist, menu[2]).ok);
  CHECK(!legal_one_move(GameKind::MG_family, inst, hist, menu[1]).ok);
  CHECK(!legal_one_move(GameKind::MG_family, inst, hist, menu[0]).ok);
  // the monotone game only asks the next move to absorb the inning
  CHECK(legal_one_move(GameKind::SMG, inst, hist, menu[1]).ok);

  CHECK(legal_two_move(GameKind::MG_family, inst, {}, menu[0], {AtomSet::from({4}), {}}).ok);
  CHECK(!legal_two_move(GameKind::MG_family, inst, {}, menu[0], {AtomSet::from({2, 4}), {}}).ok);
  TwoMove with_sigma{AtomSet{}, SigmaSet{{0}, AtomSet::first_n(1)}};
  CHECK(!legal_two_move(GameKind::MG_family, inst, {}, menu[0], with_sigma).ok);
  CHECK(legal_two_move(GameKind::VSG, inst, {}, menu[0], with_sigma).ok);
  CHECK(!legal_two_move(GameKind::VSG, inst, {}, menu[0], {AtomSet{}, {}}).ok);
  // sigma realization and stage bound are both enforced
  CHECK(!legal_two_move(GameKind::VSG, inst, {}, menu[0],
                        {AtomSet{}, SigmaSet{{0}, AtomSet::first_n(2)}})
             .ok);
  CHECK(!legal_two_move(GameKind::VSG, inst, {}, menu[0],
                        {AtomSet{}, SigmaSet{{0, 1, 2}, AtomSet::first_n(3)}})
             .ok);
}

TEST_CASE("copying the move wins every chain") {
  IdealInstance inst = chain_instance();
  VerifyConfig cfg{3, 1, chain_menu(inst), kDefaultNodeBudget};
  TacticVerdict v = verify_tactic(GameKind::MG_family, inst, copy_tactic(), cfg);
  CHECK(v.all_wins);
  CHECK(v.nodes == 14);
  CHECK(v.leaves == 8);
}

TEST_CASE("silence loses exactly under the lag") {
  IdealInstance inst = chain_instance();
  VerifyConfig cfg{3, 1, chain_menu(inst), kDefaultNodeBudget};
  TacticVerdict v = verify_tactic(GameKind::MG_family, inst, silent_tactic(), cfg);
  REQUIRE(!v.all_wins);
  REQUIRE(v.defeat.has_value());
  // first losing leaf in menu order is the full low chain
  CHECK(v.defeat->innings.size() == 3);
  CHECK(v.defeat->innings[0].one == AtomSet::first_n(1));
  CHECK(v.defeat->uncovered == AtomSet::single(0));
  CHECK(v.defeat->fault.empty());

  cfg.lag = 3;
  CHECK(verify_tactic(GameKind::MG_family, inst, silent_tactic(), cfg).all_wins);
}

TEST_CASE("stuck chains are judged as leaves") {
  IdealInstance inst = chain_instance();
  std::vector<AtomSet> menu{inst.family->members[0].realized, inst.family->members[1].realized};
  VerifyConfig cfg{2, 2, menu, kDefaultNodeBudget};
  TacticVerdict v = verify_tactic(GameKind::MG_family, inst, silent_tactic(), cfg);
  CHECK(v.all_wins);
  CHECK(v.nodes == 3);
  CHECK(v.leaves == 2);
  // with lag 1 the stuck one-move chain still wins, the full chain owes its head
  cfg.lag = 1;
  v = verify_tactic(GameKind::MG_family, inst, silent_tactic(), cfg);
  CHECK(!v.all_wins);
}

TEST_CASE("verifier rejects unusable configurations") {
  IdealInstance inst = chain_instance();
  VerifyConfig cfg{3, 1, {}, kDefaultNodeBudget};
  CHECK_THROWS_AS(verify_tactic(GameKind::MG_family, inst, copy_tactic(), cfg), input_error);
  cfg.menu = chain_menu(inst);
  cfg.depth = 5;
  CHECK_THROWS_AS(verify_tactic(GameKind::MG_family, inst, copy_tactic(), cfg), input_error);
  cfg.depth = 3;
  cfg.node_budget = 2;
  CHECK_THROWS_AS(verify_tactic(GameKind::MG_family, inst, copy_tactic(), cfg), resource_error);
}

TEST_CASE("fault attribution in played games") {
  IdealInstance inst = chain_instance();
  auto menu = chain_menu(inst);
  VerifyConfig cfg{4, 1, menu, kDefaultNodeBudget};

  SUBCASE("one playing a shrinking chain forfeits") {
    Transcript tr =
        run_play(GameKind::MG_family, inst, chain_strategy({menu[1], menu[0]}), copy_tactic(), cfg);
    CHECK(tr.verdict == Transcript::Verdict::Win);
    CHECK(tr.fault == "one");
    CHECK(!tr.legality.back().ok);
  }
  SUBCASE("two leaving the ideal forfeits") {
    Tactic big;
    big.move_fn = [&](const std::vector<AtomSet>&, int) -> TwoMove {
      return {AtomSet::from({2, 4}), {}};
    };
    Transcript tr =
        run_play(GameKind::MG_family, inst, chain_strategy({menu[0]}), big, cfg);
    CHECK(tr.verdict == Transcript::Verdict::Lose);
    CHECK(tr.fault == "two");
    CHECK(tr.legality.back().reason.find("ideal") != std::string::npos);
  }
  SUBCASE("impure tactics are caught") {
    auto counter = std::make_shared<int>(0);
    Tactic impure;
    impure.move_fn = [counter](const std::vector<AtomSet>&, int) -> TwoMove {
      return {AtomSet::from({(*counter)++ % 2 ? 0 : 4}), {}};
    };
    Transcript tr =
        run_play(GameKind::MG_family, inst, chain_strategy({menu[0]}), impure, cfg);
    CHECK(tr.verdict == Transcript::Verdict::Lose);
    CHECK(tr.fault == "two");
    CHECK(tr.legality.back().reason.find("purity") != std::string::npos);
  }
}

TEST_CASE("transcripts replay against the tactic") {
  IdealInstance inst = chain_instance();
  auto menu = chain_menu(inst);
  VerifyConfig cfg{3, 1, menu, kDefaultNodeBudget};
  Transcript tr =
      run_play(GameKind::MG_family, inst, chain_strategy({menu[0], menu[1]}), copy_tactic(), cfg);
  CHECK(tr.verdict == Transcript::Verdict::Win);
  CHECK(replay_matches(GameKind::MG_family, inst, tr, copy_tactic()));
  // a tampered response no longer replays
  Transcript bad = tr;
  bad.innings[0].two.t = AtomSet::from({3});
  CHECK(!replay_matches(GameKind::MG_family, inst, bad, copy_tactic()));
  // a forged verdict no longer replays
  bad = tr;
  bad.verdict = Transcript::Verdict::Lose;
  CHECK(!replay_matches(GameKind::MG_family, inst, bad, copy_tactic()));
}

}
