#include "idealgames/cantor.hpp"

#include <algorithm>
#include <string>

namespace ig {

Word Word::from_string(const std::string& s) {
  if (s.size() > 64) throw input_error("word longer than 64 bits");
  Word w;
  w.len = static_cast<int>(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      w.bits |= std::uint64_t{1} << i;
    else if (s[i] != '0')
      throw input_error("word must consist of 0s and 1s");
  }
  return w;
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

void BlockSystem::validate() const {
  if (cuts.size() < 2 || cuts.front() != 0)
    throw input_error("block system needs cuts starting at 0 with at least one block");
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1]) throw input_error("cuts must be strictly increasing");
  if (cuts.back() > 64) throw input_error("horizon exceeds 64 bits");
  if (word.len != cuts.back()) throw input_error("word length must equal the last cut");
}

void TrieChain::validate() const {
  if (horizon < 1 || horizon > 64) throw input_error("trie chain horizon out of range");
  if (branches.empty()) throw input_error("trie chain is empty");
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (const Word& b : branches[i])
      if (b.len != horizon) throw input_error("branch length must equal the horizon");
    if (i > 0)
      for (const Word& b : branches[i - 1])
        if (std::find(branches[i].begin(), branches[i].end(), b) == branches[i].end())
          throw input_error("trie chain must be increasing");
  }
}

namespace {

// mask covering [cuts[k], cuts[k+1])
std::uint64_t block_mask(const BlockSystem& sys, int k) {
  const int lo = sys.cuts[static_cast<std::size_t>(k)];
  const int hi = sys.cuts[static_cast<std::size_t>(k + 1)];
  const std::uint64_t upto_hi = hi >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
  const std::uint64_t upto_lo = (std::uint64_t{1} << lo) - 1;
  return upto_hi & ~upto_lo;
}

bool matches_block(const Word& z, const BlockSystem& sys, int k) {
  return ((z.bits ^ sys.word.bits) & block_mask(sys, k)) == 0;
}

// least stage admitting z: one past the highest block where z matches the
// reference word
int entry_stage(const Word& z, const BlockSystem& sys) {
  for (int k = sys.block_count() - 1; k >= 0; --k)
    if (matches_block(z, sys, k)) return k + 1;
  return 0;
}

// amax[j]: the largest index of an a-block lying inside b's block j on
// which the two reference words agree, or -1
std::vector<int> agreement_indices(const BlockSystem& a, const BlockSystem& b) {
  std::vector<int> amax(static_cast<std::size_t>(b.block_count()), -1);
  for (int j = 0; j < b.block_count(); ++j) {
    const int lo = b.cuts[static_cast<std::size_t>(j)];
    const int hi = b.cuts[static_cast<std::size_t>(j + 1)];
    for (int k = 0; k < a.block_count(); ++k) {
      if (a.cuts[static_cast<std::size_t>(k)] < lo) continue;
      if (a.cuts[static_cast<std::size_t>(k + 1)] > hi) break;
      if (((a.word.bits ^ b.word.bits) & block_mask(a, k)) == 0)
        amax[static_cast<std::size_t>(j)] = k;
    }
  }
  return amax;
}

// least m such that every stage n in [m, K_b) has amax[j] >= n for all
// blocks j in [n, K_b); K_b if none
int tail_threshold(const std::vector<int>& amax) {
  const int kb = static_cast<int>(amax.size());
  int m = kb;
  // suffix minima let each stage check run in constant time
  std::vector<int> sufmin(static_cast<std::size_t>(kb) + 1, kb + 64);
  for (int j = kb - 1; j >= 0; --j)
    sufmin[static_cast<std::size_t>(j)] =
        std::min(sufmin[static_cast<std::size_t>(j) + 1], amax[static_cast<std::size_t>(j)]);
  for (int n = kb - 1; n >= 0; --n) {
    if (sufmin[static_cast<std::size_t>(n)] >= n)
      m = n;
    else
      break;
  }
  return m;
}

// largest count of trailing cut positions the two systems share
int common_cut_suffix(const BlockSystem& a, const BlockSystem& b) {
  int r = 0;
  int ia = static_cast<int>(a.cuts.size()) - 1;
  int ib = static_cast<int>(b.cuts.size()) - 1;
  while (ia >= 0 && ib >= 0 && a.cuts[static_cast<std::size_t>(ia)] ==
                                   b.cuts[static_cast<std::size_t>(ib)]) {
    ++r;
    --ia;
    --ib;
  }
  return r;  // number of shared cut values, blocks shared = r - 1
}

}  // namespace

bool stage_membership(const Word& z, const BlockSystem& sys, int n) {
  sys.validate();
  if (z.len < sys.horizon()) throw input_error("word shorter than the horizon");
  if (n < 0 || n >= sys.block_count()) throw input_error("stage index out of range");
  for (int k = n; k < sys.block_count(); ++k)
    if (matches_block(z, sys, k)) return false;
  return true;
}

SubsetVerdict subset_decide(const BlockSystem& a, const BlockSystem& b, int slack) {
  a.validate();
  b.validate();
  if (a.horizon() != b.horizon()) throw input_error("subset_decide: horizons differ");

  if (a.cuts == b.cuts && a.word == b.word) return SubsetVerdict{SubsetVerdict::Equal, -1, 0, {}};

  // tail shift equality: shared trailing cuts with agreeing words
  {
    const int shared_cuts = common_cut_suffix(a, b);
    const int shared_blocks = shared_cuts - 1;
    const int k0 = a.block_count() - b.block_count();
    const int max_shift = std::max(a.block_count(), b.block_count()) / 2;
    if (shared_blocks >= slack && std::abs(k0) <= max_shift) {
      const int tail_from =
          b.cuts[static_cast<std::size_t>(b.block_count() - shared_blocks)];
      const std::uint64_t tail_mask =
          tail_from >= 64 ? 0 : ~((std::uint64_t{1} << tail_from) - 1);
      const std::uint64_t upto_h = a.horizon() >= 64
                                       ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << a.horizon()) - 1;
      if (((a.word.bits ^ b.word.bits) & tail_mask & upto_h) == 0)
        return SubsetVerdict{SubsetVerdict::Equal, -1, k0, {}};
    }
  }

  const std::vector<int> amax = agreement_indices(a, b);
  const int kb = b.block_count();
  const int m = tail_threshold(amax);
  if (m < kb && kb - m >= slack)
    return SubsetVerdict{SubsetVerdict::ProperSubsetFrom, m, 0, {}};
  if (m < kb) return SubsetVerdict{SubsetVerdict::Inconclusive, m, 0, {}};

  // a block only certifies non-inclusion when the induced witness stage
  // amax[j]+1 is a legal stage for both systems; blocks past a's range with
  // an agreeing copy of a's final block certify nothing
  std::vector<int> bad;
  for (int j = 0; j < kb; ++j) {
    const int v = amax[static_cast<std::size_t>(j)];
    if (v < j && v + 1 < a.block_count()) bad.push_back(j);
  }
  if (bad.empty()) return SubsetVerdict{SubsetVerdict::Inconclusive, -1, 0, {}};
  return SubsetVerdict{SubsetVerdict::NotSubset, -1, 0, bad};
}

SeparatingWitness separating_witness(const BlockSystem& a, const BlockSystem& b, int slack) {
  const SubsetVerdict v = subset_decide(a, b, slack);
  if (v.kind != SubsetVerdict::NotSubset)
    throw contract_error("separating_witness: systems are not in the NotSubset case");
  const std::vector<int> amax = agreement_indices(a, b);
  const int j0 = v.bad_blocks.back();
  const int stage = amax[static_cast<std::size_t>(j0)] + 1;

  // complement of a's word everywhere, b's word on the chosen block
  Word z;
  z.len = a.horizon();
  const std::uint64_t upto_h =
      z.len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << z.len) - 1;
  z.bits = ~a.word.bits & upto_h;
  const std::uint64_t jm = [&] {
    const int lo = b.cuts[static_cast<std::size_t>(j0)];
    const int hi = b.cuts[static_cast<std::size_t>(j0 + 1)];
    const std::uint64_t uh = hi >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
    return uh & ~((std::uint64_t{1} << lo) - 1);
  }();
  z.bits = (z.bits & ~jm) | (b.word.bits & jm);
  return SeparatingWitness{z, stage};
}

bool domination_check(const std::vector<int>& f, const std::vector<int>& g, int gap, int from) {
  const int upto = static_cast<int>(std::min(f.size(), g.size()));
  if (from < 0 || from >= upto) throw input_error("domination_check: empty index window");
  for (int n = from; n < upto; ++n)
    if (g[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(n)] < gap) return false;
  return true;
}

int coherence_threshold(const BlockSystem& a, const BlockSystem& b, int slack) {
  const SubsetVerdict v = subset_decide(a, b, slack);
  if (v.kind != SubsetVerdict::ProperSubsetFrom)
    throw contract_error("coherence_threshold: subset_decide is not ProperSubsetFrom");
  return v.threshold;
}

BlockSystem cover_build(const TrieChain& chain) {
  chain.validate();
  const int H = chain.horizon;
  const auto& levels = chain.branches;

  // does any branch of the level contain w at an offset <= max_off
  auto occurs = [&](const std::vector<Word>& level, const Word& w, int max_off) {
    const std::uint64_t wmask = w.len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w.len) - 1;
    for (const Word& z : level)
      for (int off = 0; off <= max_off && off + w.len <= z.len; ++off)
        if ((((z.bits >> off) ^ w.bits) & wmask) == 0) return true;
    return false;
  };

  BlockSystem sys;
  sys.cuts.push_back(0);
  std::uint64_t xbits = 0;
  int pos = 0;
  for (int j = 0;; ++j) {
    const std::vector<Word>& level =
        levels[std::min<std::size_t>(static_cast<std::size_t>(j), levels.size() - 1)];
    // length-lex first word avoiding the level at every offset up to pos
    std::optional<Word> found;
    for (int len = 1; len <= H - pos && !found; ++len) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        // candidate bits read index 0 first; enumerate with bit 0 as the
        // most significant digit so 0 precedes 1 in the lex order
        Word w;
        w.len = len;
        for (int i = 0; i < len; ++i)
          if ((v >> (len - 1 - i)) & 1) w.set(i, true);
        if (!occurs(level, w, pos)) {
          found = w;
          break;
        }
      }
    }
    if (!found) {
      if (pos == 0)
        throw input_error("cover_build: level " + std::to_string(j + 1) +
                          " is dense at every admissible depth");
      break;  // horizon budget exhausted
    }
    xbits |= found->bits << pos;
    pos += found->len;
    sys.cuts.push_back(pos);
    if (pos >= H) break;
  }
  sys.word.bits = xbits;
  sys.word.len = pos;
  sys.validate();
  return sys;
}

Word nowhere_dense_extend(const Word& s, const BlockSystem& sys, int n) {
  sys.validate();
  int m = -1;
  for (int k = 0; k < sys.block_count(); ++k) {
    if (sys.cuts[static_cast<std::size_t>(k)] > s.len && k > n &&
        sys.cuts[static_cast<std::size_t>(k + 1)] <= sys.horizon()) {
      m = k;
      break;
    }
  }
  if (m < 0) throw input_error("nowhere_dense_extend: no usable block within the horizon");
  const int lo = sys.cuts[static_cast<std::size_t>(m)];
  const int hi = sys.cuts[static_cast<std::size_t>(m + 1)];
  // zeros up to the block, then copy the reference word across it
  Word t;
  t.len = hi - s.len;
  for (int i = lo; i < hi; ++i) t.set(i - s.len, sys.word.bit(i));
  return t;
}

InclusionTable brute_inclusion_table(const BlockSystem& a, const BlockSystem& b) {
  a.validate();
  b.validate();
  if (a.horizon() != b.horizon()) throw input_error("brute_inclusion: horizons differ");
  const int H = a.horizon();
  if (H > kBruteHorizonLimit)
    throw input_error("brute_inclusion: horizon " + std::to_string(H) + " exceeds the limit of " +
                      std::to_string(kBruteHorizonLimit) + " bits");

  InclusionTable tab;
  tab.worst.assign(static_cast<std::size_t>(a.block_count()) + 1, 0);
  Word z;
  z.len = H;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << H); ++v) {
    z.bits = v;
    const int na = entry_stage(z, a);
    const int nb = entry_stage(z, b);
    if (nb > tab.worst[static_cast<std::size_t>(na)])
      tab.worst[static_cast<std::size_t>(na)] = nb;
  }
  for (std::size_t n = 1; n < tab.worst.size(); ++n)
    tab.worst[n] = std::max(tab.worst[n], tab.worst[n - 1]);
  return tab;
}

bool brute_inclusion(const BlockSystem& a, const BlockSystem& b, int n, int m) {
  if (n < 0 || n >= a.block_count() || m < 0 || m >= b.block_count())
    throw contract_error("brute_inclusion: stage out of range");
  return brute_inclusion_table(a, b).includes(n, m);
}

}  // namespace ig
