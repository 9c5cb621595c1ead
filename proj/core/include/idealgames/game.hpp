// game.hpp
// Rules, play loop, and the exhaustive bounded-depth tactic verifier for the
// four covering games. Plays are finite: ONE draws moves from an explicit
// menu, and the win rule is checked with a lag so that every move older than
// `lag` innings must already be covered at the final inning.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idealgames/ideal.hpp"

namespace ig {

enum class GameKind {
  MG_family,  // ONE plays a strictly increasing chain from the instance family
  MG_full,    // ONE plays any strictly increasing chain of ground subsets
  SMG,        // ONE must absorb TWO's response: O_n ∪ T_n ⊆ O_{n+1}
  VSG,        // TWO plays pairs (T, S); ONE must absorb O_n ∪ T_n ∪ S_n
};

std::string to_string(GameKind kind);

struct TwoMove {
  AtomSet t;                   // ideal member
  std::optional<SigmaSet> s;   // sigma-ideal component, VSG only
};

// pure map from the window of the last <= k ONE moves to a TWO move; markov
// tactics additionally see the 1-based inning number
struct Tactic {
  int window_size = 1;
  bool markov = false;
  std::string name;
  std::function<TwoMove(const std::vector<AtomSet>&, int inning)> move_fn;
};

struct Inning {
  AtomSet one;
  TwoMove two;
};

struct MoveCheck {
  bool ok = true;
  std::string reason;
};

struct Transcript {
  GameKind kind = GameKind::MG_family;
  std::vector<Inning> innings;
  std::vector<MoveCheck> legality;  // one verdict per recorded move
  enum class Verdict { Win, Lose, Inconclusive } verdict = Verdict::Inconclusive;
  int lag = 0;          // finite win parameter the verdict was computed with
  std::string fault;    // "one" or "two" when truncated at an illegal move
  AtomSet uncovered;    // least witness element when TWO loses
};

std::string to_string(Transcript::Verdict v);

inline constexpr long long kDefaultNodeBudget = 50'000'000;

struct VerifyConfig {
  int depth = 4;
  int lag = 2;
  std::vector<AtomSet> menu;
  long long node_budget = kDefaultNodeBudget;
};

// legality of the next move given the completed innings so far; pass the
// pending ONE move when checking TWO's reply
MoveCheck legal_one_move(GameKind kind, const IdealInstance& inst,
                         const std::vector<Inning>& history, const AtomSet& move,
                         const std::vector<AtomSet>* menu = nullptr);
MoveCheck legal_two_move(GameKind kind, const IdealInstance& inst,
                         const std::vector<Inning>& history, const AtomSet& one_move,
                         const TwoMove& move);

using OneStrategy = std::function<std::optional<AtomSet>(const std::vector<Inning>&)>;

// strategy playing a fixed move list, then resigning
OneStrategy chain_strategy(std::vector<AtomSet> moves);

// TWO wins iff every ONE move older than `lag` innings is covered by the
// union of all TWO responses
bool finite_win(const std::vector<Inning>& innings, int lag, AtomSet* uncovered = nullptr);

Transcript run_play(GameKind kind, const IdealInstance& inst, const OneStrategy& one,
                    const Tactic& two, const VerifyConfig& cfg);

struct TacticVerdict {
  bool all_wins = false;
  std::optional<Transcript> defeat;  // lexicographically first over menu order
  long long nodes = 0;
  long long leaves = 0;
};

// exhaustive DFS over every maximal legal ONE move sequence from the menu, cut
// off at `depth` innings; each leaf (depth reached or menu exhausted) is judged
// by the finite win rule
TacticVerdict verify_tactic(GameKind kind, const IdealInstance& inst, const Tactic& tactic,
                            const VerifyConfig& cfg);

// recomputes TWO moves, legality, and verdict from the stored ONE moves and
// compares with the stored transcript
bool replay_matches(GameKind kind, const IdealInstance& inst, const Transcript& tr,
                    const Tactic& tactic);

}  // namespace ig
