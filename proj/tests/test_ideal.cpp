#include "doctest.h"
#include "idealgames/ideal.hpp"

using namespace ig;

namespace {

// diamond: {0} below {0,1} and {0,2}, both below {0,1,2}
IdealInstance diamond_instance() {
  IdealInstance inst;
  inst.ground = {"a", "b", "c", "d"};
  inst.generators = {AtomSet::from({0}), AtomSet::from({1}), AtomSet::from({2}),
                     AtomSet::from({3})};
  inst.sigma_stage_bound = 3;
  FamilySpec fam;
  fam.members.push_back({{0}, AtomSet::from({0})});
  fam.members.push_back({{0, 1}, AtomSet::from({0, 1})});
  fam.members.push_back({{0, 2}, AtomSet::from({0, 2})});
  fam.members.push_back({{0, 1, 2}, AtomSet::from({0, 1, 2})});
  inst.family = fam;
  return inst;
}

}  // namespace

TEST_SUITE("ideal") {

TEST_CASE("atom set basics") {
  AtomSet s = AtomSet::from({1, 3, 5});
  CHECK(s.count() == 3);
  CHECK(s.contains(3));
  CHECK(!s.contains(2));
  CHECK(s.least() == 1);
  CHECK(AtomSet{}.least() == -1);
  CHECK(AtomSet::first_n(3) == AtomSet::from({0, 1, 2}));
  CHECK((s - AtomSet::from({3})) == AtomSet::from({1, 5}));
  CHECK(AtomSet::from({1}).proper_subset_of(s));
  CHECK(!s.proper_subset_of(s));
  CHECK(to_string(s) == "{1,3,5}");
  CHECK(s.to_vector() == std::vector<int>{1, 3, 5});
}

TEST_CASE("ideal and sigma membership") {
  IdealInstance inst = diamond_instance();
  CHECK(inst.in_ideal(AtomSet::from({2})));
  CHECK(inst.in_ideal(AtomSet{}));
  CHECK(!inst.in_ideal(AtomSet::from({0, 1})));
  CHECK(inst.realize({0, 2}) == AtomSet::from({0, 2}));
  CHECK(inst.in_sigma(SigmaSet{{0, 1, 2}, AtomSet::from({0, 1, 2})}));
  // four stages exceed the bound of three
  CHECK(!inst.in_sigma(SigmaSet{{0, 1, 2, 3}, AtomSet::from({0, 1, 2, 3})}));
}

TEST_CASE("sigma certificates") {
  IdealInstance inst;
  inst.ground = {"a", "b", "c", "d", "e"};
  inst.generators = {AtomSet::from({0, 1}), AtomSet::from({2}), AtomSet::from({3}),
                     AtomSet::from({4})};
  inst.sigma_stage_bound = 2;

  auto c1 = sigma_certify(inst, AtomSet::from({0, 2}));
  REQUIRE(c1.has_value());
  CHECK(static_cast<int>(c1->stages.size()) <= 2);
  CHECK(c1->realized == AtomSet::from({0, 2}));
  CHECK(c1->realized.subset_of(inst.realize(c1->stages)));

  // needs three distinct generators, bound is two
  CHECK(!sigma_certify(inst, AtomSet::from({0, 2, 3})).has_value());
  // empty set certified by an empty stage list
  auto c0 = sigma_certify(inst, AtomSet{});
  REQUIRE(c0.has_value());
  CHECK(c0->stages.empty());
  // outside the ground set
  CHECK(!sigma_certify(inst, AtomSet::from({7})).has_value());
}

TEST_CASE("instance validation") {
  IdealInstance inst = diamond_instance();
  CHECK(validate_instance(inst).ok());

  SUBCASE("generator equal to ground") {
    inst.generators.push_back(inst.ground_mask());
    auto rep = validate_instance(inst);
    CHECK(!rep.ok());
    CHECK(rep.violations.front().find("equals ground") != std::string::npos);
  }
  SUBCASE("uncovered atom") {
    inst.generators.pop_back();  // drop {3}
    auto rep = validate_instance(inst);
    CHECK(!rep.ok());
    CHECK(rep.violations.front().find("uncovered") != std::string::npos);
  }
  SUBCASE("stage list over the bound") {
    inst.sigma_stage_bound = 2;
    auto rep = validate_instance(inst);
    CHECK(!rep.ok());
    CHECK(rep.violations.front().find("exceeds stage bound") != std::string::npos);
  }
  SUBCASE("realized set out of step with stages") {
    inst.family->members[1].realized = AtomSet::from({0, 3});
    auto rep = validate_instance(inst);
    CHECK(!rep.ok());
  }
}

TEST_CASE("rank of a diamond family") {
  FamilySpec fam = *diamond_instance().family;
  auto rank = rank_family(fam);
  CHECK(rank.at(0) == 0);
  CHECK(rank.at(1) == 1);
  CHECK(rank.at(2) == 1);
  CHECK(rank.at(3) == 2);
}

TEST_CASE("rank rejects duplicate realized sets") {
  FamilySpec fam;
  fam.members.push_back({{0}, AtomSet::from({0})});
  fam.members.push_back({{1}, AtomSet::from({0})});
  CHECK_THROWS_AS(rank_family(fam), input_error);
}

TEST_CASE("local smallness counts members below") {
  FamilySpec fam = *diamond_instance().family;
  CHECK(locally_small_check(fam, 4).ok);
  auto res = locally_small_check(fam, 3);
  CHECK(!res.ok);
  CHECK(res.violations == std::vector<int>{3});
  // member 0 has only itself below
  CHECK(locally_small_check(fam, 1).violations == std::vector<int>({1, 2, 3}));
}

}
