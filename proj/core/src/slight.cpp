#include "idealgames/slight.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "idealgames/rng.hpp"

namespace ig {

AtomSet SlightInstance::x_alpha(int alpha) const {
  AtomSet s;
  for (int m = 0; m < point_count(); ++m)
    if (((m >> alpha) & 1) == 0) s.insert(m);
  return s;
}

AtomSet SlightInstance::order_prefix(int z) const {
  AtomSet s;
  for (int i = 0; i < z; ++i) s.insert(order_atom(i));
  return s;
}

AtomSet SlightInstance::order_mask() const { return order_prefix(order_size); }

int SlightInstance::phi_of(const AtomSet& move) const {
  AtomSet tail = move & order_mask();
  int z = tail.count();
  if (tail != order_prefix(z))
    throw input_error("move's order part is not an initial segment: " + to_string(move));
  return z;
}

SlightBundle build_slight_instance(int n, int lambda_size, const SlightOrderSpec& order) {
  if (n < 1) throw input_error("slight: n must be at least 1");
  if (lambda_size < 2) throw input_error("slight: lambda must be at least 2");
  if (order.order_size < n + 1)
    throw input_error("slight: order must be longer than the window");
  if (order.witness.arity != n + 1)
    throw input_error("slight: witness coloring arity must be n+1");

  SlightInstance si;
  si.n = n;
  si.lambda_size = lambda_size;
  si.order_size = order.order_size;
  si.witness = order.witness;

  const int points = si.point_count();
  if (points + si.order_size > kMaxAtoms)
    throw input_error("slight: ground would exceed the atom limit");
  for (const auto& [w, c] : si.witness.colors) {
    if (c < 1 || c >= lambda_size)
      throw input_error("slight: witness color " + std::to_string(c) + " outside [1, lambda)");
    for (int v : w)
      if (v < 0 || v >= si.order_size)
        throw input_error("slight: witness window position out of range");
  }

  IdealInstance& inst = si.inst;
  for (int m = 0; m < points; ++m)
    inst.ground.push_back("p" + to_string(AtomSet{static_cast<std::uint64_t>(m)}));
  for (int i = 0; i < si.order_size; ++i) inst.ground.push_back("l" + std::to_string(i));
  inst.sigma_stage_bound = lambda_size;

  for (int a = 0; a < lambda_size; ++a)
    for (int w = 0; w <= si.order_size; ++w)
      inst.generators.push_back(si.x_alpha(a) | si.order_prefix(w));
  inst.generators.push_back(si.order_mask());

  // menu members union every alpha part except the zeroth, so covering them
  // forces responses through all the nonzero alpha indices
  AtomSet shared;
  for (int a = 1; a < lambda_size; ++a) shared |= si.x_alpha(a);
  FamilySpec fam;
  for (int z = 0; z < si.order_size; ++z) {
    SigmaSet mem;
    for (int a = 1; a < lambda_size; ++a) mem.stages.push_back(si.generator_index(a, z));
    mem.realized = shared | si.order_prefix(z);
    fam.members.push_back(mem);
    si.menu.push_back(mem.realized);
  }
  inst.family = fam;

  auto rep = validate_instance(inst);
  if (!rep.ok()) throw input_error("slight: instance invalid: " + rep.violations.front());

  SlightInstance frozen = si;
  Tactic t;
  t.window_size = n + 1;
  t.name = "slight" + std::to_string(n + 1);
  t.move_fn = [frozen, n](const std::vector<AtomSet>& window, int) -> TwoMove {
    if (static_cast<int>(window.size()) < n + 1) return {AtomSet{}, std::nullopt};
    std::vector<int> phis;
    for (const auto& u : window) phis.push_back(frozen.phi_of(u));
    AtomSet tail = window.back() & frozen.order_mask();

    bool strict = true;
    for (std::size_t i = 0; i + 1 < phis.size(); ++i)
      if (phis[i] >= phis[i + 1]) { strict = false; break; }
    if (strict) {
      int alpha = frozen.witness.color_of(phis);
      return {frozen.x_alpha(alpha) | tail, std::nullopt};
    }
    // least alpha whose marker atom is new in some step of the window
    for (int alpha = 0; alpha < frozen.lambda_size; ++alpha) {
      for (std::size_t i = 0; i + 1 < window.size(); ++i) {
        AtomSet diff = window[i + 1] - window[i];
        if (diff.contains(frozen.t_atom(alpha)))
          return {frozen.x_alpha(alpha) | tail, std::nullopt};
      }
    }
    return {frozen.x_alpha(0) | tail, std::nullopt};
  };
  return {si, t};
}

std::optional<Coloring> search_witness_coloring(int n, int lambda_size, int order_size,
                                                int chain_len, std::uint64_t seed,
                                                long long max_steps) {
  const int arity = n + 1;
  if (chain_len < arity || order_size < chain_len)
    throw input_error("witness search: need arity <= chain_len <= order_size");
  const int colors = lambda_size - 1;  // palette 1..lambda-1

  // enumerate all increasing windows and chains once
  std::vector<std::vector<int>> windows, chains;
  std::vector<int> pick;
  std::function<void(int, int, std::vector<std::vector<int>>&)> gen =
      [&](int from, int want, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(pick.size()) == want) {
          out.push_back(pick);
          return;
        }
        for (int i = from; i < order_size; ++i) {
          pick.push_back(i);
          gen(i + 1, want, out);
          pick.pop_back();
        }
      };
  gen(0, arity, windows);
  gen(0, chain_len, chains);

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < windows.size(); ++i) index.emplace(windows[i], static_cast<int>(i));

  // chains reference their windows by index
  std::vector<std::vector<int>> chain_windows;
  for (const auto& ch : chains) {
    std::vector<int> refs;
    for (int j = 0; j + arity <= chain_len; ++j)
      refs.push_back(index.at(std::vector<int>(ch.begin() + j, ch.begin() + j + arity)));
    chain_windows.push_back(refs);
  }

  Rng rng(seed);
  std::vector<int> assign(windows.size());
  for (auto& a : assign) a = 1 + rng.below(colors);

  auto violated = [&](const std::vector<int>& refs) {
    AtomSet seen;
    for (int r : refs) seen.insert(assign[static_cast<std::size_t>(r)]);
    return seen.count() < colors;
  };

  for (long long step = 0; step < max_steps; ++step) {
    std::vector<int> bad;
    for (std::size_t c = 0; c < chain_windows.size(); ++c)
      if (violated(chain_windows[c])) bad.push_back(static_cast<int>(c));
    if (bad.empty()) {
      Coloring col;
      col.arity = arity;
      col.palette_size = lambda_size;
      for (std::size_t i = 0; i < windows.size(); ++i) col.colors.emplace(windows[i], assign[i]);
      return col;
    }
    const auto& refs = chain_windows[static_cast<std::size_t>(bad[static_cast<std::size_t>(
        rng.below(static_cast<int>(bad.size())))])];
    AtomSet seen;
    for (int r : refs) seen.insert(assign[static_cast<std::size_t>(r)]);
    std::vector<int> missing;
    for (int c = 1; c <= colors; ++c)
      if (!seen.contains(c)) missing.push_back(c);
    int target = missing[static_cast<std::size_t>(rng.below(static_cast<int>(missing.size())))];
    int slot = refs[static_cast<std::size_t>(rng.below(static_cast<int>(refs.size())))];
    assign[static_cast<std::size_t>(slot)] = target;
  }
  return std::nullopt;
}

Coloring extract_trace_coloring(const SlightInstance& si, const Tactic& tactic,
                                const std::vector<AtomSet>& chain) {
  const int k = tactic.window_size;
  const int n = static_cast<int>(chain.size());

  // alpha subsets ordered by size then numeric mask, for canonical minima
  std::vector<int> masks;
  for (int m = 0; m < (1 << si.lambda_size); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](int a, int b) {
    return std::popcount(static_cast<unsigned>(a)) < std::popcount(static_cast<unsigned>(b));
  });

  Coloring col;
  col.arity = k;
  std::map<std::vector<int>, int> registry;

  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      AtomSet cum;
      std::vector<AtomSet> window;
      for (int i : pick) {
        window.push_back(chain[static_cast<std::size_t>(i)]);
        cum |= tactic.move_fn(window, static_cast<int>(window.size())).t;
      }
      AtomSet pts = cum & si.point_mask();
      std::vector<int> trace;
      for (int f : masks) {
        bool covers = true;
        for (int p : pts.to_vector()) {
          bool hit = false;
          for (int a = 0; a < si.lambda_size; ++a)
            if (((f >> a) & 1) && ((p >> a) & 1) == 0) { hit = true; break; }
          if (!hit) { covers = false; break; }
        }
        if (covers) {
          for (int a = 0; a < si.lambda_size; ++a)
            if ((f >> a) & 1) trace.push_back(a);
          break;
        }
      }
      auto [it, fresh] = registry.emplace(trace, static_cast<int>(registry.size()));
      col.colors.emplace(pick, it->second);
      return;
    }
    for (int i = from; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  col.palette_size = static_cast<int>(registry.size());
  return col;
}

}  // namespace ig
