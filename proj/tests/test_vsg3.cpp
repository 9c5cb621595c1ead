#include <algorithm>

#include "doctest.h"
#include "idealgames/fixtures.hpp"
#include "idealgames/tactic.hpp"

using namespace ig;

namespace {

// reference enumerator for the admissible sequences: grow from (b, a), each
// new entry drawn from the predecessor's down-set at an index whose
// reference set fits inside the entry before the predecessor
std::vector<std::vector<int>> enumerate_tau(const VsgThreeInputs& in, int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> work{{b, a}};
  std::size_t cap = 2 * in.family.members.size() + 2;
  while (!work.empty()) {
    std::vector<int> seq = work.back();
    work.pop_back();
    out.push_back(seq);
    REQUIRE(seq.size() <= cap);
    int last = seq.back();
    int prev = seq[seq.size() - 2];
    const auto& en = in.enumerations[static_cast<std::size_t>(last)];
    std::size_t lim = std::min(en.size(), in.c_chain.size());
    for (std::size_t xi = 0; xi < lim; ++xi) {
      if (!in.c_chain[xi].subset_of(in.family.members[static_cast<std::size_t>(prev)].realized))
        continue;
      std::vector<int> next = seq;
      next.push_back(en[xi]);
      work.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("vsg3") {

TEST_CASE("admissible sequence trees match the reference enumerator") {
  VsgThreeInputs in = three_inputs();
  int n = static_cast<int>(in.family.members.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto got = tau_tree(in, a, b);
      std::sort(got.begin(), got.end());
      auto want = enumerate_tau(in, a, b);
      CHECK(got == want);
      AtomSet trace;
      for (const auto& seq : want)
        for (int x : seq) trace.insert(x);
      CHECK(tau_members(in, a, b) == trace);
    }
  }
  CHECK(tau_tree(in, 0, 0).size() == 1);
  CHECK(tau_tree(in, 0, 1).size() == 2);
  CHECK(tau_tree(in, 1, 1).size() == 3);
  CHECK(tau_tree(in, 1, 2).size() == 6);
  CHECK(tau_tree(in, 2, 2).size() == 9);
  CHECK(tau_tree(in, 2, 3).size() == 18);
}

TEST_CASE("escape indices and covering maps") {
  VsgThreeInputs in = three_inputs();
  int n = static_cast<int>(in.family.members.size());
  for (int a = 0; a < n; ++a) CHECK(escape_index(in, a) == a);

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int p1 = three_phi1(in, a, b);
      REQUIRE(p1 >= 0);
      CHECK(tau_members(in, a, b).subset_of(in.b_family[static_cast<std::size_t>(p1)]));

      int p2 = three_phi2(in, a, b);
      REQUIRE(p2 >= 0);
      const AtomSet& target = in.family.members[static_cast<std::size_t>(p2)].realized;
      CHECK(in.c_chain[static_cast<std::size_t>(a)].subset_of(target));
      CHECK(in.c_chain[static_cast<std::size_t>(escape_index(in, b))].subset_of(target));
      for (int x : in.b_family[static_cast<std::size_t>(p1)].to_vector())
        CHECK(in.family.members[static_cast<std::size_t>(x)].realized.subset_of(target));
    }
  }
}

TEST_CASE("input validation flags tampered bundles") {
  CHECK(validate_vsg_inputs(three_inputs()).empty());

  VsgThreeInputs flat = three_inputs();
  flat.c_chain[2] = flat.c_chain[1];
  auto v1 = validate_vsg_inputs(flat);
  REQUIRE(!v1.empty());
  CHECK(v1.front().find("chain") != std::string::npos);

  VsgThreeInputs blind = three_inputs();
  blind.phi3[0] = 0;
  auto v2 = validate_vsg_inputs(blind);
  REQUIRE(!v2.empty());
  bool mentions_phi3 = false;
  for (const auto& msg : v2) mentions_phi3 |= msg.find("phi3") != std::string::npos;
  CHECK(mentions_phi3);

  VsgThreeInputs torn = three_inputs();
  torn.b_decomposition.stages[3][6] = AtomSet::first_n(2);
  CHECK(!validate_vsg_inputs(torn).empty());
}

TEST_CASE("three-window responses by window shape") {
  VsgThreeInputs in = three_inputs();
  Tactic t3 = build_vsg_three_tactic(in);
  CHECK(t3.window_size == 3);
  std::vector<AtomSet> menu = three_menu();

  // one-window moves certify through the covering member map
  TwoMove one = t3.move_fn({menu[1]}, 1);
  CHECK(one.t.empty());
  REQUIRE(one.s.has_value());
  CHECK(one.s->realized == in.family.members[2].realized);
  CHECK_THROWS_AS(t3.move_fn({in.family.members[6].realized}, 1), input_error);

  // two-window moves certify through the absorbing member
  TwoMove two = t3.move_fn({menu[1], menu[2]}, 2);
  CHECK(two.t.empty());
  REQUIRE(two.s.has_value());
  int p2 = three_phi2(in, 1, 2);
  CHECK(two.s->realized == in.family.members[static_cast<std::size_t>(p2)].realized);

  // a window whose absorbing member escapes the last move restarts
  TwoMove fall = t3.move_fn({menu[1], menu[2], menu[2]}, 3);
  int pf = three_phi2(in, 2, 2);
  CHECK(fall.t.empty());
  CHECK(fall.s->realized == in.family.members[static_cast<std::size_t>(pf)].realized);

  // nested windows walk the second-level stages above the pair color
  TwoMove full = t3.move_fn({menu[1], menu[2], menu[3]}, 3);
  CHECK(full.t == AtomSet::first_n(4));
  REQUIRE(full.s.has_value());
  int pb = three_phi2(in, 2, 3);
  CHECK(full.s->realized == in.family.members[static_cast<std::size_t>(pb)].realized);
}

TEST_CASE("three-window tactic wins at depth six") {
  VsgThreeInputs in = three_inputs();
  Tactic t3 = build_vsg_three_tactic(in);
  VerifyConfig cfg;
  cfg.depth = 6;
  cfg.lag = 4;
  cfg.menu = three_menu();
  TacticVerdict vr = verify_tactic(GameKind::VSG, three_instance(), t3, cfg);
  CHECK(vr.all_wins);
  CHECK(vr.nodes == 63);
  CHECK(vr.leaves == 32);
  CHECK(!vr.defeat.has_value());
}

}
