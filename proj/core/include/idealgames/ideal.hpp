// ideal.hpp
// Finite representations of free ideals, their sigma completions, families
// of sets, and structural validation (rank, local smallness).
//
// The ground set stands in for an infinite carrier. Ideal membership is
// intensional: a set is small iff it fits inside a single generator; a set
// is sigma-small iff it is a union of at most sigma_stage_bound generators,
// certified by an explicit stage list.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idealgames/atoms.hpp"

namespace ig {

// member of the sigma completion: generator indices plus their realized union
struct SigmaSet {
  std::vector<int> stages;
  AtomSet realized;
};

// family of sigma sets ordered by proper inclusion of realized sets
struct FamilySpec {
  std::vector<SigmaSet> members;

  bool edge(int a, int b) const {
    return members[a].realized.proper_subset_of(members[b].realized);
  }
};

struct IdealInstance {
  // ground atom labels in canonical order; atoms are referenced by index
  std::vector<std::string> ground;
  std::vector<AtomSet> generators;
  int sigma_stage_bound = 1;
  std::optional<FamilySpec> family;

  int ground_size() const { return static_cast<int>(ground.size()); }
  AtomSet ground_mask() const { return AtomSet::first_n(ground_size()); }

  // small set: subset of a single generator
  bool in_ideal(const AtomSet& s) const {
    for (const auto& g : generators)
      if (s.subset_of(g)) return true;
    return false;
  }
  // realized union of a stage list
  AtomSet realize(const std::vector<int>& stages) const {
    AtomSet s;
    for (int i : stages) s |= generators.at(static_cast<std::size_t>(i));
    return s;
  }
  // sigma-small with certificate: stage list valid and within the bound
  bool in_sigma(const SigmaSet& s) const {
    return static_cast<int>(s.stages.size()) <= sigma_stage_bound &&
           s.realized.subset_of(realize(s.stages));
  }
};

// stage certificate for an arbitrary set: greedy cover first, exhaustive
// search over stage combinations within the bound as fallback
std::optional<SigmaSet> sigma_certify(const IdealInstance& inst, const AtomSet& s);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// checks the instance invariants: singletons covered, generators proper,
// family stage lists within bound and realized correctly
ValidationReport validate_instance(const IdealInstance& inst);

// rank = height in the proper-inclusion order; throws input_error when two
// members realize the same set (the order would not be well founded)
std::map<int, int> rank_family(const FamilySpec& fam);

struct LocalSmallness {
  bool ok = true;
  std::vector<int> violations;  // members with too many family members below
};

// every member has at most `bound` members below-or-equal (itself included)
LocalSmallness locally_small_check(const FamilySpec& fam, int bound);

}  // namespace ig
