// bmgame.hpp
// Banach-Mazur games on finite set-algebra spaces and truncated cone
// spaces: nonempty opens split into finitely many intersecting families,
// yielding a one-move tactic; a window tactic that also reads the inning
// number folds into a plain window tactic through disjoint refinements.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idealgames/atoms.hpp"
#include "idealgames/cantor.hpp"

namespace ig {

struct FiniteSpace {
  int points = 0;
  std::vector<AtomSet> opens;  // closed under union and intersection, full set present
  void validate() const;       // throws input_error on violations
};

struct FipDecomposition {
  int n = 0;                               // exact maximum pairwise-disjoint family size
  std::vector<int> seeds;                  // open indices of one maximum disjoint family
  std::vector<std::vector<int>> families;  // greedy-maximal intersecting families per seed
};

// exhaustive maximum disjoint family, then greedy-maximal intersecting
// families seeded at its members; together they cover the nonempty opens
FipDecomposition fip_decompose(const FiniteSpace& space);

// move rule: each response must be a nonempty open inside the last move
struct BmTactic {
  int window_size = 1;
  bool markov = false;
  std::string name;
  std::function<AtomSet(const std::vector<AtomSet>&, int inning)> move_fn;
};

// respond with the first seed meeting the move, intersected with it
BmTactic fip_one_tactic(const FiniteSpace& space, const FipDecomposition& dec);

struct BmVerdict {
  bool all_wins = false;
  std::vector<AtomSet> defeat;  // ONE's moves of the first losing play
  std::string fault;            // "two" when the response broke the move rule
  long long leaves = 0;
};

// exhaustive over ONE's legal descending choices up to the given depth
BmVerdict bm_verify(const FiniteSpace& space, const BmTactic& tactic, int depth,
                    long long node_budget = 50'000'000);

// truncated cone space: opens are cones [s] over binary words; ONE's moves
// are capped at depth, refinement moves may grow to the word capacity
struct ConeSpace {
  int depth = 10;
};

// [a] inside [b] iff b is a prefix of a
bool cone_subset(const Word& a, const Word& b);

// disjoint refinements of an open, bijectively indexed from 1
struct RefinementScheme {
  std::function<Word(const Word&, int)> j_map;
};

// m-th refinement of [s] is the cone at s followed by m-1 zeros and a one
RefinementScheme cone_scheme();

// containment and pairwise disjointness up to the index bound
std::vector<std::string> validate_scheme(const RefinementScheme& scheme,
                                         const std::vector<Word>& opens, int index_bound);

struct BmConeTactic {
  int window_size = 1;
  bool markov = false;
  std::string name;
  std::function<Word(const std::vector<Word>&, int inning)> move_fn;
};

// folds the inning number away: the response to a window is the inning-aware
// response to the matching refinement window, with the start index recovered
// from the nesting pattern
BmConeTactic markov_to_plain(const BmConeTactic& markov, const RefinementScheme& scheme,
                             int index_bound);

struct BmConeVerdict {
  bool all_wins = false;
  std::vector<Word> defeat;  // ONE's cone words of the first faulting play
  std::string fault;
  long long leaves = 0;
};

// exhaustive over ONE's cone choices within the depth cap; every fault-free
// play ends in a nonempty cone, so losing means a broken response
BmConeVerdict bm_verify(const ConeSpace& space, const BmConeTactic& tactic, int depth,
                        long long node_budget = 50'000'000);

// ONE picks the next cone from the previous response and the history depth
using ConeStrategy = std::function<std::optional<Word>(const std::vector<Word>& one_moves,
                                                       const std::vector<Word>& two_moves)>;

struct ConePlay {
  std::vector<Word> one_moves, two_moves;
  bool two_fault = false;
  std::string fault_reason;
};

// plays up to `innings`; stops early when ONE has no move under the cap
ConePlay bm_cone_play(const ConeSpace& space, const BmConeTactic& tactic,
                      const ConeStrategy& one, int innings);

// recomputes the refinement sequence S_n from ONE's moves and checks that
// every response equals the inning-aware tactic on the S-window
bool embedding_identity_holds(const ConePlay& play, const BmConeTactic& markov,
                              const RefinementScheme& scheme);

// seeded ONE strategy: extends the previous response by a random suffix
// within the cap, resigning when even the bare response is too deep
ConeStrategy random_cone_strategy(const ConeSpace& space, std::uint64_t seed, int max_extend);

}  // namespace ig
