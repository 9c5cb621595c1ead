// decomp.hpp
// Coherent decompositions: every family member gets an increasing stage
// chain ending at the member itself, such that comparable members have
// stage inclusion from a finite threshold on.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "idealgames/ideal.hpp"

namespace ig {

struct Decomposition {
  int stage_count = 0;
  // stages[i][n] = n-th stage of member i; increasing, final stage = member
  std::vector<std::vector<AtomSet>> stages;
};

struct SizeLadder {
  std::vector<int> bounds;  // strictly increasing positive bounds
};

// generators for lifting mode; empty selects plain atom exhaustion
struct DecompOptions {
  std::vector<AtomSet> generators;
};

// rank-driven construction: rank-0 members get canonical prefix exhaustions,
// higher ranks exhaust along an index function dominating every proper
// subset's demand, so stage inclusion holds for all comparable pairs
Decomposition decompose_locally_small(const FamilySpec& fam, int stage_count,
                                      const DecompOptions& opt = {});

// same recursion with per-stage size caps |A^n| <= bounds[n]; the down-set
// core is reserved against the ladder in full, so the "ladder too tight"
// error can fire slightly early (documented trade for monotone stages)
Decomposition decompose_bounded(const FamilySpec& fam, const SizeLadder& ladder);

struct CoherenceFailure {
  int a = -1, b = -1;   // member indices with realized(a) proper subset of realized(b)
  int stage = -1;       // stage where final-stage inclusion fails
  int element = -1;     // atom witnessing the failure
};

struct CoherenceResult {
  // least m such that stage inclusion holds at every stage >= m
  std::map<std::pair<int, int>, int> thresholds;
  std::vector<CoherenceFailure> failures;
  bool ok() const { return failures.empty(); }
};

CoherenceResult verify_coherence(const FamilySpec& fam, const Decomposition& dec);

}  // namespace ig
