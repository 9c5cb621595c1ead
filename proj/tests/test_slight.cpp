#include "doctest.h"
#include "idealgames/fixtures.hpp"
#include "idealgames/slight.hpp"

using namespace ig;

namespace {

// every strictly increasing pick of chain_len order positions
std::vector<std::vector<int>> increasing_picks(int order_size, int chain_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(chain_len));
  for (int i = 0; i < chain_len; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(pick);
    int j = chain_len - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == order_size - chain_len + j) --j;
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
    for (int u = j + 1; u < chain_len; ++u)
      pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

}  // namespace

TEST_SUITE("slight") {

TEST_CASE("two-part ground encoding") {
  SlightBundle sb = slight_bundle();
  const SlightInstance& si = sb.instance;
  CHECK(si.n == 2);
  CHECK(si.lambda_size == 4);
  CHECK(si.order_size == 8);
  CHECK(si.point_count() == 15);
  CHECK(si.menu.size() == 8);
  CHECK(si.inst.generators.size() == 37);
  CHECK(validate_instance(si.inst).ok());

  CHECK(si.t_atom(2) == 4);
  CHECK(si.x_alpha(1) == AtomSet::from({0, 1, 4, 5, 8, 9, 12, 13}));
  CHECK(si.x_alpha(0) == AtomSet::from({0, 2, 4, 6, 8, 10, 12, 14}));
  CHECK(si.order_prefix(3) == AtomSet::from({15, 16, 17}));
  CHECK(si.order_mask() == AtomSet::from({15, 16, 17, 18, 19, 20, 21, 22}));

  for (std::size_t i = 0; i + 1 < si.menu.size(); ++i)
    CHECK(si.menu[i].proper_subset_of(si.menu[i + 1]));
  CHECK(si.phi_of(si.menu[3]) == 3);
  AtomSet gap = (si.menu[3] & si.point_mask()) | AtomSet::single(si.order_atom(2));
  CHECK_THROWS_AS(si.phi_of(gap), input_error);
}

TEST_CASE("window clauses of the three-window tactic") {
  SlightBundle sb = slight_bundle();
  const SlightInstance& si = sb.instance;
  CHECK(sb.tactic.window_size == 3);

  // short windows respond empty
  CHECK(sb.tactic.move_fn({si.menu[0]}, 1).t.empty());
  CHECK(sb.tactic.move_fn({si.menu[0], si.menu[4]}, 2).t.empty());

  // increasing order positions read the witness coloring
  AtomSet t = sb.tactic.move_fn({si.menu[1], si.menu[3], si.menu[5]}, 3).t;
  int color = si.witness.color_of({1, 3, 5});
  CHECK(t == (si.x_alpha(color) | (si.menu[5] & si.order_mask())));

  // repeated positions chase the least fresh singleton-mask atom
  AtomSet w0 = AtomSet::from({0});
  AtomSet w1 = AtomSet::from({0, 4});
  AtomSet w2 = AtomSet::from({0, 4, 8});
  CHECK(sb.tactic.move_fn({w0, w1, w2}, 3).t == si.x_alpha(2));

  // no singleton-mask atom in the differences falls back to alpha zero
  AtomSet v1 = AtomSet::from({0, 5});
  AtomSet v2 = AtomSet::from({0, 5, 6});
  CHECK(sb.tactic.move_fn({w0, v1, v2}, 3).t == si.x_alpha(0));
}

TEST_CASE("witness coloring covers every long chain") {
  SlightBundle sb = slight_bundle();
  const SlightInstance& si = sb.instance;
  for (const auto& chain : increasing_picks(si.order_size, si.n * 3)) {
    AtomSet colors;
    for (std::size_t i = 0; i + 2 < chain.size(); ++i)
      colors.insert(si.witness.color_of({chain[i], chain[i + 1], chain[i + 2]}));
    for (int c = 1; c < si.lambda_size; ++c) CHECK(colors.contains(c));
  }
}

TEST_CASE("witness search is deterministic per seed") {
  std::uint64_t seed = 0;
  std::optional<Coloring> first;
  for (; seed < 32; ++seed) {
    first = search_witness_coloring(2, 4, 8, 6, seed);
    if (first) break;
  }
  REQUIRE(first.has_value());
  auto again = search_witness_coloring(2, 4, 8, 6, seed);
  REQUIRE(again.has_value());
  CHECK(first->colors == again->colors);
  CHECK(first->arity == 3);
}

TEST_CASE("trace coloring enumerates cover registry indices") {
  SlightBundle sb = slight_bundle();
  Coloring tr = extract_trace_coloring(sb.instance, sb.tactic, sb.instance.menu);
  CHECK(tr.arity == 3);
  CHECK(tr.colors.size() == 56);
  Coloring tr2 = extract_trace_coloring(sb.instance, sb.tactic, sb.instance.menu);
  CHECK(tr.colors == tr2.colors);
  CHECK(tr.palette_size >= 1);
}

TEST_CASE("three windows win where two windows lose") {
  SlightBundle sb = slight_bundle();
  const SlightInstance& si = sb.instance;

  VerifyConfig cfg;
  cfg.depth = 6;
  cfg.lag = 5;
  cfg.menu = si.menu;
  TacticVerdict vr = verify_tactic(GameKind::MG_family, si.inst, sb.tactic, cfg);
  CHECK(vr.all_wins);
  CHECK(vr.nodes == 246);
  CHECK(vr.leaves == 127);

  Coloring uni = uniform_pair_coloring(static_cast<int>(si.menu.size()));
  DefeatConfig self_cfg;
  self_cfg.lag = 5;
  CHECK(!targeted_defeat(GameKind::MG_family, si.inst, sb.tactic, si.menu, uni, self_cfg)
             .has_value());

  // every two-window tactic on this instance is beatable
  for (std::uint64_t s = 0; s < 3; ++s) {
    Tactic rnd = random_window_tactic(si.inst, 2, s);
    auto d = targeted_defeat(GameKind::MG_family, si.inst, rnd, si.menu, uni, DefeatConfig{});
    REQUIRE(d.has_value());
    CHECK(d->verdict == Transcript::Verdict::Lose);
    CHECK(replay_matches(GameKind::MG_family, si.inst, *d, rnd));
  }
  Tactic greedy = greedy_cover_tactic(si.inst, 2);
  CHECK(targeted_defeat(GameKind::MG_family, si.inst, greedy, si.menu, uni, DefeatConfig{})
            .has_value());
}

}
