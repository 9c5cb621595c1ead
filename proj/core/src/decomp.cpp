#include "idealgames/decomp.hpp"

#include <algorithm>
#include <string>

namespace ig {

namespace {

// exhaustion units of one member: either its atoms in canonical order or,
// in lifting mode, its stage list's generators
struct Units {
  std::vector<AtomSet> prefix;  // prefix[p] = union of the first p units
};

Units member_units(const SigmaSet& m, const DecompOptions& opt) {
  Units u;
  u.prefix.push_back(AtomSet{});
  if (!opt.generators.empty() && !m.stages.empty()) {
    AtomSet acc;
    for (int gi : m.stages) {
      acc |= opt.generators.at(static_cast<std::size_t>(gi));
      u.prefix.push_back(acc & m.realized);
    }
  } else {
    AtomSet acc;
    for (int a : m.realized.to_vector()) {
      acc.insert(a);
      u.prefix.push_back(acc);
    }
  }
  return u;
}

std::vector<int> by_rank_order(const FamilySpec& fam) {
  auto rank = rank_family(fam);
  std::vector<int> order;
  for (auto& [i, r] : rank) order.push_back(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rank.at(a) < rank.at(b); });
  return order;
}

}  // namespace

Decomposition decompose_locally_small(const FamilySpec& fam, int stage_count,
                                      const DecompOptions& opt) {
  if (stage_count < 1) throw input_error("decompose_locally_small: stage_count must be >= 1");
  const int n_members = static_cast<int>(fam.members.size());
  const int N = stage_count;
  Decomposition dec;
  dec.stage_count = N;
  dec.stages.assign(static_cast<std::size_t>(n_members), {});

  for (int b : by_rank_order(fam)) {
    const Units u = member_units(fam.members[static_cast<std::size_t>(b)], opt);
    const int len = static_cast<int>(u.prefix.size()) - 1;
    std::vector<AtomSet> st(static_cast<std::size_t>(N));
    int f_prev = 0;
    for (int n = 0; n < N; ++n) {
      // saturation ramp so the final stage always reaches the member
      int f = (len * (n + 1) + N - 1) / N;
      // dominate the demand of every proper subset already decomposed
      for (int a = 0; a < n_members; ++a) {
        if (!fam.edge(a, b)) continue;
        const AtomSet an = dec.stages[static_cast<std::size_t>(a)][static_cast<std::size_t>(n)];
        int g = 0;
        while (g < len && !an.subset_of(u.prefix[static_cast<std::size_t>(g)])) ++g;
        f = std::max(f, g + 1);
      }
      f = std::max(f, f_prev);
      f = std::min(f, len);
      f_prev = f;
      st[static_cast<std::size_t>(n)] = u.prefix[static_cast<std::size_t>(f)];
    }
    dec.stages[static_cast<std::size_t>(b)] = std::move(st);
  }
  return dec;
}

Decomposition decompose_bounded(const FamilySpec& fam, const SizeLadder& ladder) {
  const int N = static_cast<int>(ladder.bounds.size());
  if (N < 1) throw input_error("decompose_bounded: ladder is empty");
  for (int i = 1; i < N; ++i)
    if (ladder.bounds[static_cast<std::size_t>(i)] <=
        ladder.bounds[static_cast<std::size_t>(i - 1)])
      throw input_error("decompose_bounded: ladder must be strictly increasing");

  const int n_members = static_cast<int>(fam.members.size());
  Decomposition dec;
  dec.stage_count = N;
  dec.stages.assign(static_cast<std::size_t>(n_members), {});

  for (int b : by_rank_order(fam)) {
    const AtomSet full = fam.members[static_cast<std::size_t>(b)].realized;
    if (full.count() > ladder.bounds.back())
      throw input_error("decompose_bounded: ladder too tight for member " + std::to_string(b));

    // canonical down-set listing; members join the core one per stage
    std::vector<int> below;
    for (int a = 0; a < n_members; ++a)
      if (fam.edge(a, b)) below.push_back(a);
    AtomSet final_core;
    for (int a : below)
      final_core |= fam.members[static_cast<std::size_t>(a)].realized;
    const int core_reserve = final_core.count();
    const auto atoms = full.to_vector();

    std::vector<AtomSet> st(static_cast<std::size_t>(N));
    int budget_prev = 0;
    for (int n = 0; n < N; ++n) {
      AtomSet core;
      const int joined = std::min<int>(n, static_cast<int>(below.size()));
      for (int i = 0; i < joined; ++i)
        core |= dec.stages[static_cast<std::size_t>(below[static_cast<std::size_t>(i)])]
                          [static_cast<std::size_t>(n)];
      int budget =
          std::max(budget_prev, ladder.bounds[static_cast<std::size_t>(n)] - core_reserve);
      budget = std::max(budget, 0);
      budget_prev = budget;
      AtomSet s = core;
      for (int i = 0; i < budget && i < static_cast<int>(atoms.size()); ++i)
        s.insert(atoms[static_cast<std::size_t>(i)]);
      if (s.count() > ladder.bounds[static_cast<std::size_t>(n)])
        throw input_error("decompose_bounded: ladder too tight for member " + std::to_string(b));
      st[static_cast<std::size_t>(n)] = s;
    }
    if (st.back() != full)
      throw input_error("decompose_bounded: ladder too tight for member " + std::to_string(b));
    dec.stages[static_cast<std::size_t>(b)] = std::move(st);
  }
  return dec;
}

CoherenceResult verify_coherence(const FamilySpec& fam, const Decomposition& dec) {
  CoherenceResult out;
  const int n_members = static_cast<int>(fam.members.size());
  const int N = dec.stage_count;
  for (int a = 0; a < n_members; ++a) {
    for (int b = 0; b < n_members; ++b) {
      if (!fam.edge(a, b)) continue;
      const auto& sa = dec.stages[static_cast<std::size_t>(a)];
      const auto& sb = dec.stages[static_cast<std::size_t>(b)];
      // least m with stage inclusion on the whole tail [m, N)
      int m = N;
      for (int n = N - 1; n >= 0; --n) {
        if (sa[static_cast<std::size_t>(n)].subset_of(sb[static_cast<std::size_t>(n)]))
          m = n;
        else
          break;
      }
      if (m == N) {
        const AtomSet diff =
            sa[static_cast<std::size_t>(N - 1)] - sb[static_cast<std::size_t>(N - 1)];
        out.failures.push_back(CoherenceFailure{a, b, N - 1, diff.least()});
      } else {
        out.thresholds[{a, b}] = m;
      }
    }
  }
  return out;
}

}  // namespace ig
