#include "idealgames/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "idealgames/rng.hpp"

namespace ig {

namespace {

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

Word random_word(Rng& rng, int len) {
  Word w;
  w.len = len;
  w.bits = rng.word() & low_mask(len);
  return w;
}

// random composition of `total` into `parts` pieces, each at least min_len
std::vector<int> random_cuts(Rng& rng, int total, int parts, int min_len) {
  std::vector<int> lens(static_cast<std::size_t>(parts), min_len);
  for (int extra = total - parts * min_len; extra > 0; --extra)
    ++lens[static_cast<std::size_t>(rng.below(parts))];
  std::vector<int> cuts{0};
  for (int l : lens) cuts.push_back(cuts.back() + l);
  return cuts;
}

}  // namespace

std::vector<BlockPairCase> block_pairs(int count, std::uint64_t seed, int max_horizon) {
  if (max_horizon < 12 || max_horizon > kBruteHorizonLimit)
    throw input_error("block_pairs: horizon cap must lie in [12, " +
                      std::to_string(kBruteHorizonLimit) + "]");
  Rng rng(seed);
  std::vector<BlockPairCase> out;
  while (static_cast<int>(out.size()) < count) {
    const int i = static_cast<int>(out.size());
    // mostly short horizons keep the brute oracle affordable over a corpus
    const int h = i % 50 == 49 ? max_horizon : 12 + rng.below(9);
    BlockPairCase c;
    switch (i % 4) {
      case 0: {  // complemented words: no block can ever agree
        c.a.cuts = random_cuts(rng, h, rng.range(3, 8), 1);
        c.a.word = random_word(rng, h);
        c.b.cuts = random_cuts(rng, h, rng.range(3, 8), 1);
        c.b.word.len = h;
        c.b.word.bits = ~c.a.word.bits & low_mask(h);
        c.built = SubsetVerdict::NotSubset;
        break;
      }
      case 1: {  // independent draws
        c.a.cuts = random_cuts(rng, h, rng.range(3, 8), 1);
        c.a.word = random_word(rng, h);
        c.b.cuts = random_cuts(rng, h, rng.range(3, 8), 1);
        c.b.word = random_word(rng, h);
        c.built = SubsetVerdict::NotSubset;
        break;
      }
      case 2: {  // refinement with a planted threshold
        const int t = rng.below(3);
        const int kb = rng.range(std::max(3, t + 3), 6);
        c.b.cuts = random_cuts(rng, h, kb, 2);
        // split some blocks, always the last so no long cut tail is shared
        const int splits = rng.range(1, std::min(8 - kb, kb));
        std::set<int> chosen{kb - 1};
        while (static_cast<int>(chosen.size()) < splits) chosen.insert(rng.below(kb));
        std::set<int> acuts(c.b.cuts.begin(), c.b.cuts.end());
        for (int j : chosen) {
          const int lo = c.b.cuts[static_cast<std::size_t>(j)];
          const int hi = c.b.cuts[static_cast<std::size_t>(j + 1)];
          acuts.insert(rng.range(lo + 1, hi - 1));
        }
        c.a.cuts.assign(acuts.begin(), acuts.end());
        c.a.word = random_word(rng, h);
        c.b.word = c.a.word;
        // break agreement on each early block by flipping every inner piece
        for (int j = 0; j < t; ++j) {
          const int lo = c.b.cuts[static_cast<std::size_t>(j)];
          const int hi = c.b.cuts[static_cast<std::size_t>(j + 1)];
          for (std::size_t k = 0; k + 1 < c.a.cuts.size(); ++k)
            if (c.a.cuts[k] >= lo && c.a.cuts[k + 1] <= hi)
              c.b.word.set(c.a.cuts[k], !c.b.word.bit(c.a.cuts[k]));
        }
        c.built = SubsetVerdict::ProperSubsetFrom;
        break;
      }
      default: {  // merge the head blocks, keep the tail: equal up to shift
        const int d = rng.range(1, 2);
        const int ka = rng.range(d + 4, 8);
        c.a.cuts = random_cuts(rng, h, ka, 1);
        c.a.word = random_word(rng, h);
        c.b.cuts.push_back(0);
        for (std::size_t j = static_cast<std::size_t>(d) + 1; j < c.a.cuts.size(); ++j)
          c.b.cuts.push_back(c.a.cuts[j]);
        c.b.word = c.a.word;
        c.built = SubsetVerdict::Equal;
        break;
      }
    }
    c.a.validate();
    c.b.validate();
    out.push_back(c);
  }
  return out;
}

std::vector<FamilySpec> locally_small_corpus(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<FamilySpec> out;
  while (static_cast<int>(out.size()) < count) {
    const int ground = rng.range(6, 16);
    std::set<AtomSet> sets;
    const int base = rng.range(2, 4);
    for (int b = 0; b < base; ++b) {
      // intersecting two draws biases toward small seeds
      AtomSet s{rng.word() & rng.word() & low_mask(ground)};
      if (!s.empty()) sets.insert(s);
    }
    for (bool grew = true; grew && sets.size() <= 10;) {
      grew = false;
      std::vector<AtomSet> cur(sets.begin(), sets.end());
      for (std::size_t i = 0; i < cur.size() && sets.size() <= 10; ++i)
        for (std::size_t j = i + 1; j < cur.size() && sets.size() <= 10; ++j)
          grew |= sets.insert(cur[i] | cur[j]).second;
    }
    if (sets.empty() || sets.size() > 10) continue;
    FamilySpec fam;
    for (const AtomSet& s : sets) fam.members.push_back(SigmaSet{{}, s});
    out.push_back(fam);
  }
  return out;
}

namespace {

constexpr int kChainMembers = 33;

AtomSet prefix(int h) { return AtomSet::first_n(h + 1); }

// each entry absorbs every response to every window over earlier entries,
// so any legal play over the menu finds its next absorbing move
std::vector<AtomSet> fold_menu(const Tactic& t, const AtomSet& start, int entries,
                               bool with_cert) {
  std::vector<AtomSet> menu{start};
  while (static_cast<int>(menu.size()) < entries) {
    AtomSet next = menu.back();
    for (std::size_t j = 0; j < menu.size(); ++j) {
      TwoMove one = t.move_fn({menu[j]}, 1);
      next |= one.t;
      if (with_cert && one.s) next |= one.s->realized;
      for (std::size_t i = 0; i <= j; ++i) {
        TwoMove two = t.move_fn({menu[i], menu[j]}, 2);
        next |= two.t;
        if (with_cert && two.s) next |= two.s->realized;
      }
    }
    menu.push_back(next);
  }
  return menu;
}

}  // namespace

WindowFixture window_fixture(std::uint64_t seed) {
  Rng rng(seed);
  WindowFixture fx;
  const int H = kChainMembers;

  for (int a = 0; a < H; ++a) fx.inst.ground.push_back("a" + std::to_string(a));
  for (int i = 0; i + 1 < H; ++i) fx.inst.generators.push_back(prefix(i));
  fx.inst.generators.push_back(AtomSet::single(H - 1));
  fx.inst.sigma_stage_bound = 2;

  FamilySpec fam;
  for (int i = 0; i + 1 < H; ++i) fam.members.push_back(SigmaSet{{i}, prefix(i)});
  fam.members.push_back(SigmaSet{{H - 2, H - 1}, prefix(H - 1)});
  fx.inst.family = fam;

  // ramp ranks: stage n realizes the prefix at rank r[n], saturating at 6
  std::vector<int> r(7);
  r[0] = rng.below(2);
  std::set<int> mids;
  while (mids.size() < 5) mids.insert(rng.range(r[0] + 1, H - 2));
  int n = 1;
  for (int m : mids) r[static_cast<std::size_t>(n++)] = m;
  r[6] = H - 1;
  fx.dec.stage_count = 8;
  fx.dec.stages.resize(static_cast<std::size_t>(H));
  for (int i = 0; i < H; ++i) {
    for (int s = 0; s < 7; ++s)
      fx.dec.stages[static_cast<std::size_t>(i)].push_back(prefix(std::min(i, r[s])));
    fx.dec.stages[static_cast<std::size_t>(i)].push_back(prefix(i));
  }

  std::set<int> pos_set;
  while (pos_set.size() < 8) pos_set.insert(rng.below(12));
  std::vector<int> pos(pos_set.begin(), pos_set.end());
  const int off = rng.below(2);

  std::map<int, int> slot;
  for (int u = 0; u < 8; ++u) slot[pos[static_cast<std::size_t>(u)]] = u;

  fx.col.arity = 2;
  fx.col.palette_size = 8;
  for (int i = 0; i < H; ++i)
    for (int j = i + 1; j < H; ++j) {
      auto it = slot.find(j);
      fx.col.colors[{i, j}] = it == slot.end() ? 7 : 6 + (it->second + off) % 2;
    }

  for (int a = 0; a < H; ++a) fx.enumeration.push_back(a);
  for (int p : pos) fx.mg_menu.push_back(prefix(p));

  // six same-parity slots cannot exist among eight, so no length-6 path
  // keeps one window color
  fx.cert_poset = chain_poset(8);
  fx.cert_coloring.arity = 2;
  fx.cert_coloring.palette_size = 2;
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) fx.cert_coloring.colors[{u, v}] = 6 + (v + off) % 2;

  for (int i = 0; i + 1 < H; ++i) {
    fx.chain.members.push_back(prefix(i));
    fx.chain.escape.push_back(i + 1);
  }

  Tactic base = build_mg_tactic(fam, fx.dec, fx.col, 2);
  PhiMaps maps = build_phi_maps(fx.inst, fam, fx.enumeration, fx.mg_menu);
  Tactic smg = build_smg_two_tactic(base, maps);
  Tactic vsg = build_vsg_two_tactic(base, fam);
  Tactic wrapped = translate_smg_vsg(fx.inst, smg, TranslateDirection::SmgToVsg, fx.chain);
  Tactic folded = translate_smg_vsg(fx.inst, wrapped, TranslateDirection::VsgToSmg, fx.chain);

  // starts kept low so every folded response stays inside a generator
  const int s_smg = 2 + rng.below(2);
  const int s_vsg = 2 + rng.below(3);
  const int s_round = 2 + rng.below(2);
  fx.smg_menu = fold_menu(smg, prefix(s_smg), 7, false);
  fx.vsg_menu = fold_menu(vsg, prefix(s_vsg), 7, true);
  fx.round_menu = fold_menu(folded, prefix(s_round), 6, false);
  return fx;
}

VsgThreeInputs three_inputs() {
  VsgThreeInputs in;
  for (int a = 0; a < 7; ++a) in.family.members.push_back(SigmaSet{{a}, prefix(a)});
  for (int xi = 0; xi < 7; ++xi) in.c_chain.push_back(prefix(xi + 1));
  for (int a = 0; a < 7; ++a) {
    std::vector<int> en;
    for (int d = 0; d <= a; ++d) en.push_back(d);
    in.enumerations.push_back(en);
  }
  for (int t = 0; t < 7; ++t) in.b_family.push_back(prefix(t));
  in.b_decomposition.stage_count = 7;
  in.a_decomposition.stage_count = 7;
  for (int t = 0; t < 7; ++t) {
    std::vector<AtomSet> stages;
    for (int s = 0; s < 7; ++s) stages.push_back(prefix(std::min(t, s)));
    in.b_decomposition.stages.push_back(stages);
    in.a_decomposition.stages.push_back(stages);
  }
  in.k_coloring.arity = 2;
  in.k_coloring.palette_size = 7;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) in.k_coloring.colors[{i, j}] = j;
  for (int a = 0; a < 6; ++a) in.phi3.push_back(a + 1);
  in.phi3.push_back(-1);
  return in;
}

IdealInstance three_instance() {
  IdealInstance inst;
  for (int a = 0; a < 8; ++a) inst.ground.push_back("p" + std::to_string(a));
  for (int i = 0; i < 7; ++i) inst.generators.push_back(prefix(i));
  inst.generators.push_back(AtomSet::single(7));
  inst.sigma_stage_bound = 2;
  inst.family = three_inputs().family;
  return inst;
}

std::vector<AtomSet> three_menu() {
  std::vector<AtomSet> menu;
  for (int a = 0; a < 6; ++a) menu.push_back(prefix(a));
  return menu;
}

SlightBundle slight_bundle() {
  // deterministic scan: the first witness found is frozen by construction
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    auto w = search_witness_coloring(2, 4, 8, 6, seed);
    if (w) {
      SlightOrderSpec order;
      order.order_size = 8;
      order.witness = *w;
      return build_slight_instance(2, 4, order);
    }
  }
  throw input_error("slight fixture: witness search exhausted its seed scan");
}

std::vector<FiniteSpace> all_small_spaces(int points) {
  if (points < 1 || points > 4)
    throw input_error("all_small_spaces: expected between one and four points");
  const int full = (1 << points) - 1;
  std::vector<FiniteSpace> out;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << (full - 1)); ++pick)
    for (int with_empty = 0; with_empty < 2; ++with_empty) {
      FiniteSpace sp;
      sp.points = points;
      if (with_empty) sp.opens.push_back(AtomSet{});
      for (int m = 1; m < full; ++m)
        if ((pick >> (m - 1)) & 1) sp.opens.push_back(AtomSet{static_cast<std::uint64_t>(m)});
      sp.opens.push_back(AtomSet{static_cast<std::uint64_t>(full)});
      try {
        sp.validate();
      } catch (const input_error&) {
        continue;
      }
      out.push_back(sp);
    }
  return out;
}

std::vector<TrieChain> trie_corpus(int count, std::uint64_t seed, int max_horizon) {
  Rng rng(seed);
  std::vector<TrieChain> out;
  while (static_cast<int>(out.size()) < count) {
    TrieChain tc;
    tc.horizon = rng.range(12, max_horizon);
    const int levels = rng.range(1, 4);
    std::vector<Word> cur;
    for (int l = 0; l < levels; ++l) {
      const int grow = l == 0 ? rng.range(1, 3) : rng.range(0, 2);
      for (int g = 0; g < grow; ++g) {
        Word w = random_word(rng, tc.horizon);
        if (std::find(cur.begin(), cur.end(), w) == cur.end()) cur.push_back(w);
      }
      tc.branches.push_back(cur);
    }
    tc.validate();
    out.push_back(tc);
  }
  return out;
}

FinitePoset chain_poset(int nodes) {
  FinitePoset p;
  p.nodes = nodes;
  for (int i = 0; i < nodes; ++i)
    for (int j = i + 1; j < nodes; ++j) p.less.push_back({i, j});
  p.validate();
  return p;
}

Coloring uniform_pair_coloring(int nodes) {
  Coloring col;
  col.arity = 2;
  col.palette_size = 1;
  for (int i = 0; i < nodes; ++i)
    for (int j = i + 1; j < nodes; ++j) col.colors[{i, j}] = 0;
  return col;
}

}  // namespace ig
