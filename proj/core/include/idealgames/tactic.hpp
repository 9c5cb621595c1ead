// tactic.hpp
// Constructive tactic builders and adversaries: the decomposition-driven
// window tactic for menu games, its liftings to the strongly monotone and
// very strong games, the three-window very-strong tactic built from
// well-founded down-set enumerations, tactic-to-coloring extraction, and
// the bounded-palette defeat search.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idealgames/decomp.hpp"
#include "idealgames/game.hpp"
#include "idealgames/ideal.hpp"
#include "idealgames/pathrel.hpp"

namespace ig {

// window tactic from a coherent decomposition: short windows get first
// stages, full windows get stage m where m is the least index at or above
// both the window's color and every consecutive coherence threshold
Tactic build_mg_tactic(const FamilySpec& fam, const Decomposition& dec, const Coloring& col,
                       int k);

// escape maps into the family: phi2 strictly enlarges, phi1 is a two-atom
// set forcing phi2 to grow whenever absorbed
struct PhiMaps {
  std::function<AtomSet(const AtomSet&)> phi1;
  std::function<AtomSet(const AtomSet&)> phi2;
  bool validated = false;
  std::vector<std::string> violations;  // witnesses when validation failed
};

// phi2 = first family member strictly containing the enumeration closure,
// phi1 = {least atom outside phi2, least escape index}; validation checks
// growth and monotonicity over the menu closed under both maps
PhiMaps build_phi_maps(const IdealInstance& inst, const FamilySpec& fam,
                       const std::vector<int>& enumeration, const std::vector<AtomSet>& menu,
                       int closure_steps = 4);

// strongly monotone 2-tactic composed from a window tactic and phi maps
Tactic build_smg_two_tactic(const Tactic& base, const PhiMaps& maps);

// very strong 2-tactic from a window tactic via canonical member ladders
Tactic build_vsg_two_tactic(const Tactic& base, const FamilySpec& fam);

// strictly increasing chain with a designated escape atom per level
struct CofinalChain {
  std::vector<AtomSet> members;
  std::vector<int> escape;  // escape[i] lies outside members[i]
  void validate() const;    // throws input_error on violations
};

enum class TranslateDirection { SmgToVsg, VsgToSmg };

// SmgToVsg pairs each move with a certificate for top-move-plus-response;
// VsgToSmg folds the tactic through the chain with escape points
Tactic translate_smg_vsg(const IdealInstance& inst, const Tactic& tactic,
                         TranslateDirection dir, const CofinalChain& chain);

// inputs for the three-window very strong tactic: a well-founded family
// with bijective down-set enumerations, an escaping reference chain, a
// second-level family of member-index sets with its own decomposition, a
// pair coloring on that family, and a per-member escape map
struct VsgThreeInputs {
  FamilySpec family;
  std::vector<AtomSet> c_chain;                 // strictly increasing, escapes every member
  std::vector<std::vector<int>> enumerations;   // enumerations[a] = down-set of member a
  std::vector<AtomSet> b_family;                // sets of member indices
  Decomposition b_decomposition;                // stages over the member-index ground
  Decomposition a_decomposition;                // per-member stage chains over the atom ground
  Coloring k_coloring;                          // arity-2 coloring on b_family indices
  std::vector<int> phi3;                        // phi3[a] contains member a and C_{xi_a};
                                                // -1 marks the map undefined at a top member
};

// empty when sound, otherwise human-readable violations
std::vector<std::string> validate_vsg_inputs(const VsgThreeInputs& in);

// least xi with C_xi not inside member a
int escape_index(const VsgThreeInputs& in, int a);

// admissible sequences seeded (b, a): each later entry is enumerated in its
// predecessor's down-set at an index whose reference set fits the entry
// before that; lexicographic order, capped to guard well-foundedness
std::vector<std::vector<int>> tau_tree(const VsgThreeInputs& in, int a, int b);

// member-index trace of the tau tree
AtomSet tau_members(const VsgThreeInputs& in, int a, int b);

// b_family index covering every trace reachable inside tau sequences
int three_phi1(const VsgThreeInputs& in, int a, int b);

// family index absorbing the reference sets and the phi1 trace union
int three_phi2(const VsgThreeInputs& in, int a, int b);

Tactic build_vsg_three_tactic(const VsgThreeInputs& in);

// ladder variant: color = least ladder index bounding the cumulative
// response size over window prefixes, with one extra overflow color
Coloring extract_coloring(const Tactic& tactic, const std::vector<AtomSet>& chain,
                          const SizeLadder& ladder);

struct DefeatConfig {
  int length = 6;
  int palette = 2;
  int lag = -1;  // defaults to window size + 1
  long long node_budget = kDefaultNodeBudget;
  long long path_budget = kDefaultSearchBudget;
};

// enumerates bounded-palette increasing paths through the chain and replays
// each as ONE's moves; returns the first genuine defeat, none if the path
// space is exhausted
std::optional<Transcript> targeted_defeat(GameKind kind, const IdealInstance& inst,
                                          const Tactic& tactic,
                                          const std::vector<AtomSet>& menu_chain,
                                          const Coloring& col, const DefeatConfig& cfg = {});

// baseline adversary candidates for defeat sweeps: a pure hash of the
// window picking a generator, and the largest-overlap greedy cover
Tactic random_window_tactic(const IdealInstance& inst, int k, std::uint64_t seed);
Tactic greedy_cover_tactic(const IdealInstance& inst, int k);

}  // namespace ig
