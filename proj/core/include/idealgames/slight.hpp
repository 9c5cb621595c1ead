// slight.hpp
// The two-part ground instance separating window sizes: point atoms indexed
// by the proper subsets of a small index range, a linear tail order, and
// the three-clause window tactic driven by a caller-supplied witness
// coloring on order positions.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idealgames/game.hpp"
#include "idealgames/ideal.hpp"
#include "idealgames/pathrel.hpp"
#include "idealgames/tactic.hpp"

namespace ig {

struct SlightOrderSpec {
  int order_size = 8;
  Coloring witness;  // arity n+1 over order positions, colors in [1, lambda)
};

struct SlightInstance {
  int n = 2;            // the tactic needs windows of n+1
  int lambda_size = 4;  // point atoms are the proper subsets of [0, lambda)
  int order_size = 8;
  IdealInstance inst;
  std::vector<AtomSet> menu;  // one member per order position, strictly increasing
  Coloring witness;

  int point_count() const { return (1 << lambda_size) - 1; }
  int order_atom(int i) const { return point_count() + i; }
  int t_atom(int alpha) const { return 1 << alpha; }  // singleton-mask point atom
  AtomSet x_alpha(int alpha) const;                   // point atoms whose mask misses alpha
  AtomSet order_prefix(int z) const;                  // order atoms strictly below z
  AtomSet order_mask() const;
  AtomSet point_mask() const { return AtomSet::first_n(point_count()); }

  // generator formed by one alpha part and one order prefix; w may equal
  // order_size to take the whole tail
  int generator_index(int alpha, int w) const { return alpha * (order_size + 1) + w; }

  // position z with move-part equal to the prefix below z; throws when the
  // order part is not an initial segment
  int phi_of(const AtomSet& move) const;
};

struct SlightBundle {
  SlightInstance instance;
  Tactic tactic;
};

// instance plus the (n+1)-window tactic: short windows respond empty,
// strictly increasing order positions read the witness coloring, repeated
// positions take the least fresh singleton-mask atom
SlightBundle build_slight_instance(int n, int lambda_size, const SlightOrderSpec& order);

// deterministic min-conflicts search for a witness coloring where every
// increasing chain of chain_len order positions covers colors 1..lambda-1
// across its consecutive windows; nullopt when the step budget runs out
std::optional<Coloring> search_witness_coloring(int n, int lambda_size, int order_size,
                                                int chain_len, std::uint64_t seed,
                                                long long max_steps = 200000);

// set-trace coloring: color of each window = first-seen registry index of
// the minimal alpha cover of the cumulative point response over prefixes
Coloring extract_trace_coloring(const SlightInstance& si, const Tactic& tactic,
                                const std::vector<AtomSet>& chain);

}  // namespace ig
