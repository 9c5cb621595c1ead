#include "doctest.h"
#include "idealgames/fixtures.hpp"
#include "idealgames/tactic.hpp"

using namespace ig;

namespace {

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

int member_of(const FamilySpec& fam, const AtomSet& s) {
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    if (fam.members[i].realized == s) return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

AtomSet first_extension(const FamilySpec& fam, const AtomSet& x) {
  for (const auto& m : fam.members)
    if (x.proper_subset_of(m.realized)) return m.realized;
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_SUITE("tactic") {

TEST_CASE("window tactic follows the stage formula") {
  WindowFixture fx = window_fixture(1);
  const FamilySpec& fam = *fx.inst.family;
  Tactic ups = build_mg_tactic(fam, fx.dec, fx.col, 2);
  CoherenceResult coh = verify_coherence(fam, fx.dec);

  // short windows take first stages
  int c = member_of(fam, fx.mg_menu[2]);
  CHECK(ups.move_fn({fx.mg_menu[2]}, 1).t == fx.dec.stages[static_cast<std::size_t>(c)][0]);

  // full windows take the least stage above the color and the thresholds
  int a = member_of(fam, fx.mg_menu[1]);
  int b = member_of(fam, fx.mg_menu[4]);
  int m = std::max(fx.col.color_of({a, b}), coh.thresholds.at({a, b}));
  AtomSet expect = fx.dec.stages[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] |
                   fx.dec.stages[static_cast<std::size_t>(b)][static_cast<std::size_t>(m)];
  CHECK(ups.move_fn({fx.mg_menu[1], fx.mg_menu[4]}, 2).t == expect);

  // windows that are not chains have no thresholds
  CHECK_THROWS_AS(ups.move_fn({fx.mg_menu[4], fx.mg_menu[1]}, 2), input_error);
  CHECK_THROWS_AS(build_mg_tactic(fam, fx.dec, fx.col, 3), input_error);
}

TEST_CASE("stage demands beyond the chain length are refused") {
  FamilySpec fam;
  fam.members.push_back({{}, AtomSet::from({0})});
  fam.members.push_back({{}, AtomSet::from({0, 1})});
  Decomposition dec;
  dec.stage_count = 1;
  dec.stages = {{AtomSet::from({0})}, {AtomSet::from({0, 1})}};
  Coloring col;
  col.arity = 2;
  col.palette_size = 5;
  col.colors[{0, 1}] = 3;
  Tactic ups = build_mg_tactic(fam, dec, col, 2);
  try {
    ups.move_fn({AtomSet::from({0}), AtomSet::from({0, 1})}, 2);
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("exceeds the stage count") != std::string::npos);
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("monotone lift composes the escape maps") {
  WindowFixture fx = window_fixture(1);
  const FamilySpec& fam = *fx.inst.family;
  Tactic ups = build_mg_tactic(fam, fx.dec, fx.col, 2);
  PhiMaps maps = build_phi_maps(fx.inst, fam, fx.enumeration, fx.mg_menu);
  REQUIRE(maps.validated);
  Tactic smg = build_smg_two_tactic(ups, maps);

  AtomSet a = fx.smg_menu[0];
  AtomSet l1 = maps.phi2(a), l2 = maps.phi2(l1);
  AtomSet expect = maps.phi1(a) | maps.phi1(l1) | maps.phi1(l2) | ups.move_fn({l1}, 1).t |
                   ups.move_fn({l1, l2}, 2).t;
  CHECK(smg.move_fn({a}, 1).t == expect);

  // a window that does not continue the ladder restarts from its last move
  AtomSet big = fx.smg_menu[3];
  CHECK(smg.move_fn({big, a}, 2).t == smg.move_fn({a}, 1).t);
}

TEST_CASE("very strong lift certifies through member ladders") {
  WindowFixture fx = window_fixture(1);
  const FamilySpec& fam = *fx.inst.family;
  Tactic ups = build_mg_tactic(fam, fx.dec, fx.col, 2);
  Tactic vsg = build_vsg_two_tactic(ups, fam);

  AtomSet x = fx.vsg_menu[0];
  AtomSet r1 = first_extension(fam, x);
  AtomSet r2 = first_extension(fam, r1);
  AtomSet r3 = first_extension(fam, r2);
  TwoMove mv = vsg.move_fn({x}, 1);
  REQUIRE(mv.s.has_value());
  CHECK(mv.s->realized == r3);
  CHECK(fx.inst.in_sigma(*mv.s));
  CHECK(mv.t == (ups.move_fn({r1}, 1).t | ups.move_fn({r1, r2}, 2).t));

  // non-nested windows restart as well
  AtomSet big = fx.vsg_menu[3];
  TwoMove restart = vsg.move_fn({big, x}, 2);
  TwoMove single = vsg.move_fn({x}, 1);
  CHECK(restart.t == single.t);
  CHECK(restart.s->realized == single.s->realized);
}

TEST_CASE("translations wrap and fold between the lifted games") {
  WindowFixture fx = window_fixture(1);
  const FamilySpec& fam = *fx.inst.family;
  Tactic ups = build_mg_tactic(fam, fx.dec, fx.col, 2);
  PhiMaps maps = build_phi_maps(fx.inst, fam, fx.enumeration, fx.mg_menu);
  Tactic smg = build_smg_two_tactic(ups, maps);

  Tactic wrapped = translate_smg_vsg(fx.inst, smg, TranslateDirection::SmgToVsg, fx.chain);
  AtomSet a = fx.smg_menu[0];
  TwoMove mv = wrapped.move_fn({a}, 1);
  CHECK(mv.t == smg.move_fn({a}, 1).t);
  REQUIRE(mv.s.has_value());
  CHECK((a | mv.t).subset_of(mv.s->realized));
  CHECK(fx.inst.in_sigma(*mv.s));

  Tactic folded = translate_smg_vsg(fx.inst, wrapped, TranslateDirection::VsgToSmg, fx.chain);
  const auto& ch = fx.chain;
  // an increasing window lifts to chain members and keeps the escape atom
  TwoMove up = folded.move_fn({ch.members[0], ch.members[1]}, 2);
  AtomSet z2 = AtomSet::single(ch.escape[2]);
  CHECK(up.t == (wrapped.move_fn({ch.members[0], ch.members[1]}, 2).t | z2));
  // a non-increasing window only plays the next escape atom
  TwoMove down = folded.move_fn({ch.members[1], ch.members[0]}, 2);
  CHECK(down.t == AtomSet::single(ch.escape[1]));
  CHECK(!down.s.has_value());
}

TEST_CASE("cofinal chain validation") {
  CofinalChain chain;
  chain.members = {AtomSet::from({0}), AtomSet::from({0, 1})};
  chain.escape = {1, 2};
  chain.validate();
  chain.escape[1] = 0;  // inside its member
  CHECK_THROWS_AS(chain.validate(), input_error);
  chain.escape = {1};
  CHECK_THROWS_AS(chain.validate(), input_error);
  chain.members = {AtomSet::from({0, 1}), AtomSet::from({0})};
  chain.escape = {2, 1};
  CHECK_THROWS_AS(chain.validate(), input_error);
}

TEST_CASE("coloring extraction reads cumulative response sizes") {
  std::vector<AtomSet> chain;
  for (int i = 1; i <= 4; ++i) chain.push_back(AtomSet::first_n(i));
  Tactic copy2;
  copy2.window_size = 2;
  copy2.move_fn = [](const std::vector<AtomSet>& w, int) -> TwoMove { return {w.back(), {}}; };
  Coloring col = extract_coloring(copy2, chain, SizeLadder{{2, 3}});
  CHECK(col.arity == 2);
  CHECK(col.palette_size == 3);
  CHECK(col.colors.size() == 6);
  CHECK(col.color_of({0, 1}) == 0);
  CHECK(col.color_of({0, 2}) == 1);
  CHECK(col.color_of({1, 2}) == 1);
  CHECK(col.color_of({0, 3}) == 2);
  CHECK(col.color_of({2, 3}) == 2);
}

TEST_CASE("defeat search finds silent tactics and spares covering ones") {
  IdealInstance inst = chain_instance();
  std::vector<AtomSet> menu;
  for (const auto& m : inst.family->members) menu.push_back(m.realized);
  Coloring uni = uniform_pair_coloring(static_cast<int>(menu.size()));

  Tactic silent;
  silent.move_fn = [](const std::vector<AtomSet>&, int) -> TwoMove { return {AtomSet{}, {}}; };
  DefeatConfig cfg;
  cfg.length = 3;
  cfg.lag = 1;
  auto d = targeted_defeat(GameKind::MG_family, inst, silent, menu, uni, cfg);
  REQUIRE(d.has_value());
  CHECK(d->verdict == Transcript::Verdict::Lose);
  CHECK(!d->uncovered.empty());
  CHECK(replay_matches(GameKind::MG_family, inst, *d, silent));

  Tactic copy;
  copy.move_fn = [](const std::vector<AtomSet>& w, int) -> TwoMove { return {w.back(), {}}; };
  CHECK(!targeted_defeat(GameKind::MG_family, inst, copy, menu, uni, cfg).has_value());
}

TEST_CASE("random window tactics are pure and seeded") {
  IdealInstance inst = chain_instance();
  Tactic t1 = random_window_tactic(inst, 2, 9);
  Tactic t2 = random_window_tactic(inst, 2, 9);
  std::vector<AtomSet> w{AtomSet::first_n(1), AtomSet::first_n(2)};
  CHECK(t1.move_fn(w, 2).t == t2.move_fn(w, 2).t);
  CHECK(t1.window_size == 2);
  CHECK(inst.in_ideal(t1.move_fn(w, 2).t));

  Tactic greedy = greedy_cover_tactic(inst, 2);
  // the largest prefix generator meets the top move best
  CHECK(greedy.move_fn(w, 2).t == AtomSet::first_n(2));
}

}
