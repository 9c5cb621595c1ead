// cantor.hpp
// Block calculus on finite-horizon binary words: a block system is a cut
// sequence plus a reference word; its stage-n set holds the words that
// differ from the reference on every block from index n on. Includes the
// subset decision procedure, separating witnesses, the greedy cover recipe
// for chains of nowhere dense tries, and an exhaustive inclusion oracle.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealgames/atoms.hpp"

namespace ig {

// bit word, index 0 is the first character of the serialized form
struct Word {
  std::uint64_t bits = 0;
  int len = 0;

  static Word from_string(const std::string& s);
  std::string str() const;
  bool bit(int i) const { return (bits >> i) & 1; }
  void set(int i, bool v) {
    bits = (bits & ~(std::uint64_t{1} << i)) | (std::uint64_t{v ? 1u : 0u} << i);
  }
  bool operator==(const Word&) const = default;
};

struct BlockSystem {
  std::vector<int> cuts;  // cuts[0] = 0 < cuts[1] < ... < cuts[K]
  Word word;              // reference word of length cuts[K]

  int block_count() const { return static_cast<int>(cuts.size()) - 1; }
  int horizon() const { return cuts.back(); }
  void validate() const;
};

// chain of nowhere dense closed sets, each given by its full-depth branches
struct TrieChain {
  int horizon = 0;
  std::vector<std::vector<Word>> branches;  // per level, increasing chain

  void validate() const;
};

inline constexpr int kBruteHorizonLimit = 26;
inline constexpr int kDefaultTailSlack = 3;

// true iff z differs from the reference on every block with index >= n
bool stage_membership(const Word& z, const BlockSystem& sys, int n);

struct SubsetVerdict {
  enum Kind { ProperSubsetFrom, Equal, NotSubset, Inconclusive } kind;
  int threshold = -1;           // ProperSubsetFrom: stage inclusion holds on [threshold, K)
  int shift = 0;                // Equal: block index shift between the systems
  std::vector<int> bad_blocks;  // NotSubset: coarse blocks with no usable agreement block
};

// decides the eventual relation between the realized meager sets: equality
// via tail shift, proper inclusion via the least tail-stable stage, refusal
// when fewer than `slack` blocks support the tail quantifier
SubsetVerdict subset_decide(const BlockSystem& a, const BlockSystem& b,
                            int slack = kDefaultTailSlack);

struct SeparatingWitness {
  Word z;
  int stage = 0;  // z is in a's stage set but not b's at this stage
};

// requires subset_decide(a, b) = NotSubset
SeparatingWitness separating_witness(const BlockSystem& a, const BlockSystem& b,
                                     int slack = kDefaultTailSlack);

// g(n) - f(n) >= gap for every index in [from, min(K_f, K_g))
bool domination_check(const std::vector<int>& f, const std::vector<int>& g, int gap, int from);

// least m such that the stage sets of a sit inside those of b at every
// stage in [m, K); requires subset_decide(a, b) = ProperSubsetFrom
int coherence_threshold(const BlockSystem& a, const BlockSystem& b,
                        int slack = kDefaultTailSlack);

// greedy cover: concatenates, per level, the first word that no branch of
// the current trie contains at any admissible offset
BlockSystem cover_build(const TrieChain& chain);

// extension t of s forcing a reference-block match, so no completion of
// s + t stays in the stage-n set
Word nowhere_dense_extend(const Word& s, const BlockSystem& sys, int n);

// independent oracle: exhaustively checks that every word in a's stage-n
// set lies in b's stage-m set; refuses beyond the horizon limit
bool brute_inclusion(const BlockSystem& a, const BlockSystem& b, int n, int m);

// one enumeration pass answering every (n, m) query for a pair:
// worst[n] = the largest stage b needs for any word a admits at stage n
struct InclusionTable {
  std::vector<int> worst;
  bool includes(int n, int m) const { return worst[static_cast<std::size_t>(n)] <= m; }
};
InclusionTable brute_inclusion_table(const BlockSystem& a, const BlockSystem& b);

}  // namespace ig
