// fixtures.hpp
// Seeded corpora and hand-built instances shared by the test suites and
// the acceptance runs: block-system pairs with planned verdict shapes,
// locally small families, the prefix-chain window-game fixture with menus
// folded from its own lifted tactics, the seven-member three-window
// fixture, the two-part order bundle, small set-algebra spaces, and
// increasing trie chains.
#pragma once

#include <cstdint>
#include <vector>

#include "idealgames/bmgame.hpp"
#include "idealgames/cantor.hpp"
#include "idealgames/decomp.hpp"
#include "idealgames/ideal.hpp"
#include "idealgames/pathrel.hpp"
#include "idealgames/slight.hpp"
#include "idealgames/tactic.hpp"

namespace ig {

struct BlockPairCase {
  BlockSystem a, b;
  SubsetVerdict::Kind built;  // the shape the generator aimed for
};

// equal-horizon pairs with 3 to 8 blocks each, cycling through four shapes:
// complemented words (never a subset), independent draws, refinements with
// a planted threshold, and head merges sharing a long cut tail (equal up
// to a shift). Every fiftieth pair runs at the full horizon.
std::vector<BlockPairCase> block_pairs(int count, std::uint64_t seed, int max_horizon = 24);

// families of at most ten distinct members over grounds of at most sixteen
// atoms, grown union-closed from a few random seed sets
std::vector<FamilySpec> locally_small_corpus(int count, std::uint64_t seed);

// prefix-chain instance: members M_i = {0..i} over 33 atoms with prefix
// generators, a ramp decomposition saturating at stage 6 (thresholds all
// zero), and a menu-slot parity coloring. The lifted-game menus are folded
// from the tactics themselves: each entry absorbs every response to every
// window over the earlier entries, so all reachable plays stay legal.
struct WindowFixture {
  IdealInstance inst;
  Decomposition dec;
  Coloring col;                  // arity 2 over member index pairs
  std::vector<int> enumeration;  // atom a first appears in member a
  std::vector<AtomSet> mg_menu;  // eight members from the low chain
  FinitePoset cert_poset;        // inclusion order on the menu slots
  Coloring cert_coloring;        // col restricted to menu slot pairs
  std::vector<AtomSet> smg_menu;
  std::vector<AtomSet> vsg_menu;
  std::vector<AtomSet> round_menu;  // for the twice-translated tactic
  CofinalChain chain;               // member chain for the fold direction
};
WindowFixture window_fixture(std::uint64_t seed);

// seven prefix members A_0..A_6 over eight atoms: reference chain
// C_xi = {0..xi+1}, identity down-set enumerations, prefix second-level
// family and decompositions, max-index pair coloring, and phi3 = a + 1
// left undefined at the top member
VsgThreeInputs three_inputs();
IdealInstance three_instance();
std::vector<AtomSet> three_menu();  // A_0..A_5

// two-part order instance with the first witness coloring found by a
// deterministic seed scan; throws input_error when the scan is exhausted
SlightBundle slight_bundle();

// every union/intersection-closed open family over the given points
std::vector<FiniteSpace> all_small_spaces(int points);

// increasing chains of full-depth branch lists, at most four levels
std::vector<TrieChain> trie_corpus(int count, std::uint64_t seed, int max_horizon = 24);

// total order on the first n node indices
FinitePoset chain_poset(int nodes);

// arity-2 coloring assigning color zero to every increasing pair, so a
// bounded-path sweep enumerates all increasing paths
Coloring uniform_pair_coloring(int nodes);

}  // namespace ig
