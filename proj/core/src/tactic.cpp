#include "idealgames/tactic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace ig {

namespace {

std::map<AtomSet, int> member_index(const FamilySpec& fam) {
  std::map<AtomSet, int> idx;
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    idx.emplace(fam.members[i].realized, static_cast<int>(i));
  return idx;
}

int lookup_member(const std::map<AtomSet, int>& idx, const AtomSet& s, const char* who) {
  auto it = idx.find(s);
  if (it == idx.end())
    throw input_error(std::string(who) + ": move " + to_string(s) + " is outside the family");
  return it->second;
}

std::string window_string(const std::vector<int>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

AtomSet call_t(const Tactic& t, const std::vector<AtomSet>& window) {
  return t.move_fn(window, static_cast<int>(window.size())).t;
}

}  // namespace

Tactic build_mg_tactic(const FamilySpec& fam, const Decomposition& dec, const Coloring& col,
                       int k) {
  if (k < 1) throw input_error("build_mg_tactic: window size must be positive");
  if (col.arity != k) throw input_error("build_mg_tactic: coloring arity differs from k");
  if (dec.stages.size() != fam.members.size())
    throw input_error("build_mg_tactic: decomposition size differs from family size");
  CoherenceResult coh = verify_coherence(fam, dec);
  if (!coh.ok())
    throw input_error("build_mg_tactic: decomposition is not coherent between members " +
                      std::to_string(coh.failures.front().a) + " and " +
                      std::to_string(coh.failures.front().b));

  auto idx = member_index(fam);
  auto stages = dec.stages;
  auto thresholds = coh.thresholds;
  int stage_count = dec.stage_count;

  Tactic t;
  t.window_size = k;
  t.name = "upsilon" + std::to_string(k);
  t.move_fn = [=](const std::vector<AtomSet>& window, int) -> TwoMove {
    std::vector<int> w;
    w.reserve(window.size());
    for (const auto& o : window) w.push_back(lookup_member(idx, o, "upsilon"));

    AtomSet out;
    if (static_cast<int>(w.size()) < k) {
      for (int i : w) out |= stages[static_cast<std::size_t>(i)][0];
      return {out, std::nullopt};
    }
    int m = col.color_of(w);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      auto it = thresholds.find({w[i], w[i + 1]});
      if (it == thresholds.end())
        throw input_error("upsilon: window " + window_string(w) + " is not a chain");
      m = std::max(m, it->second);
    }
    if (m >= stage_count)
      throw input_error("upsilon: stage " + std::to_string(m) + " for window " +
                        window_string(w) + " exceeds the stage count");
    for (int i : w) out |= stages[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    return {out, std::nullopt};
  };
  return t;
}

PhiMaps build_phi_maps(const IdealInstance& inst, const FamilySpec& fam,
                       const std::vector<int>& enumeration, const std::vector<AtomSet>& menu,
                       int closure_steps) {
  if (static_cast<int>(enumeration.size()) != inst.ground_size())
    throw input_error("build_phi_maps: enumeration must list one member per atom");
  for (int a = 0; a < inst.ground_size(); ++a) {
    int m = enumeration[static_cast<std::size_t>(a)];
    if (m < 0 || m >= static_cast<int>(fam.members.size()))
      throw input_error("build_phi_maps: enumeration index for atom " + std::to_string(a) +
                        " is out of range");
    if (!fam.members[static_cast<std::size_t>(m)].realized.contains(a))
      throw input_error("build_phi_maps: enumerated member for atom " + std::to_string(a) +
                        " does not contain it");
  }

  auto hull = [enumeration, &fam](AtomSet x) {
    // iterate the union of enumerated members until stable
    for (;;) {
      AtomSet next = x;
      for (int a : x.to_vector())
        next |= fam.members[static_cast<std::size_t>(enumeration[static_cast<std::size_t>(a)])]
                    .realized;
      if (next == x) return x;
      x = next;
    }
  };

  auto members = fam.members;
  auto phi2 = [hull, members](const AtomSet& x) -> AtomSet {
    AtomSet h = hull(x);
    for (const auto& m : members)
      if (h.subset_of(m.realized) && x.proper_subset_of(m.realized)) return m.realized;
    throw input_error("phi2: no family member strictly contains the closure of " + to_string(x));
  };

  AtomSet ground = inst.ground_mask();
  auto phi1 = [phi2, members, enumeration, ground](const AtomSet& x) -> AtomSet {
    AtomSet big = phi2(x);
    AtomSet outside = ground - big;
    if (outside.empty()) throw input_error("phi1: no atom escapes phi2 of " + to_string(x));
    int z = outside.least();
    int rho = -1;
    for (int a : outside.to_vector()) {
      const AtomSet& mem =
          members[static_cast<std::size_t>(enumeration[static_cast<std::size_t>(a)])].realized;
      if (big.proper_subset_of(mem)) { rho = a; break; }
    }
    if (rho < 0)
      throw input_error("phi1: no escape index enlarges phi2 of " + to_string(x));
    return AtomSet::single(z) | AtomSet::single(rho);
  };

  PhiMaps maps;
  maps.phi1 = phi1;
  maps.phi2 = phi2;

  // close the menu under both maps, then check growth and monotonicity
  std::set<AtomSet> reach(menu.begin(), menu.end());
  try {
    for (int step = 0; step < closure_steps; ++step) {
      std::set<AtomSet> next = reach;
      for (const auto& x : reach) {
        next.insert(phi2(x));
        next.insert(x | phi1(x));
      }
      if (next == reach) break;
      reach.swap(next);
    }
    for (const auto& x : reach)
      if (!x.proper_subset_of(phi2(x)))
        maps.violations.push_back("phi2 does not strictly enlarge " + to_string(x));
    for (const auto& a : reach) {
      AtomSet lifted = a | phi1(a);
      for (const auto& b : reach)
        if (lifted.subset_of(b) && !phi2(a).proper_subset_of(phi2(b)))
          maps.violations.push_back("phi2 not monotone from " + to_string(a) + " into " +
                                    to_string(b));
    }
  } catch (const input_error& e) {
    maps.violations.push_back(e.what());
  }
  maps.validated = maps.violations.empty();
  return maps;
}

namespace {

// phi2-iterated ladder A_1 = phi2(A), A_{j+1} = phi2(A_j)
std::vector<AtomSet> phi_ladder(const PhiMaps& maps, const AtomSet& a, int k) {
  std::vector<AtomSet> lad;
  AtomSet cur = a;
  for (int i = 0; i < k; ++i) {
    cur = maps.phi2(cur);
    lad.push_back(cur);
  }
  return lad;
}

}  // namespace

Tactic build_smg_two_tactic(const Tactic& base, const PhiMaps& maps) {
  if (!maps.validated)
    throw input_error("build_smg_two_tactic: phi maps failed validation: " +
                      (maps.violations.empty() ? std::string("not validated")
                                               : maps.violations.front()));
  const int k = base.window_size;

  auto psi = [maps, k](const AtomSet& a, const std::vector<AtomSet>& lad) {
    AtomSet out = maps.phi1(a);
    for (const auto& m : lad) out |= maps.phi1(m);
    return out;
  };
  auto single = [base, maps, psi, k](const AtomSet& a) {
    auto lad = phi_ladder(maps, a, k);
    AtomSet out = psi(a, lad);
    for (int j = 1; j <= k; ++j)
      out |= call_t(base, {lad.begin(), lad.begin() + j});
    return out;
  };

  Tactic t;
  t.window_size = 2;
  t.name = base.name + "+smg2";
  t.move_fn = [=](const std::vector<AtomSet>& window, int) -> TwoMove {
    if (window.size() == 1) return {single(window[0]), std::nullopt};
    const AtomSet &a = window[window.size() - 2], &b = window.back();
    auto la = phi_ladder(maps, a, k);
    auto lb = phi_ladder(maps, b, k);
    if (!la.back().proper_subset_of(lb.front())) return {single(b), std::nullopt};
    AtomSet out = psi(b, lb);
    for (int i = 1; i <= k; ++i) {
      // window i keeps the last k-i rungs of a's ladder, then b's first i
      std::vector<AtomSet> w(la.begin() + i, la.end());
      w.insert(w.end(), lb.begin(), lb.begin() + i);
      out |= call_t(base, w);
    }
    return {out, std::nullopt};
  };
  return t;
}

Tactic build_vsg_two_tactic(const Tactic& base, const FamilySpec& fam) {
  const int k = base.window_size;
  auto members = fam.members;

  // canonical ladder: first strict extension of x, iterated k+1 times
  auto ladder = [members, k](const AtomSet& x) {
    std::vector<int> lad;
    AtomSet cur = x;
    for (int i = 0; i < k + 1; ++i) {
      int found = -1;
      for (std::size_t m = 0; m < members.size(); ++m)
        if (cur.proper_subset_of(members[m].realized)) { found = static_cast<int>(m); break; }
      if (found < 0)
        throw input_error("vsg ladder: family has no strict extension of " + to_string(cur));
      lad.push_back(found);
      cur = members[static_cast<std::size_t>(found)].realized;
    }
    return lad;  // k rungs plus the psi member at the back
  };
  auto realize = [members](const std::vector<int>& lad, int from, int to) {
    std::vector<AtomSet> w;
    for (int i = from; i < to; ++i)
      w.push_back(members[static_cast<std::size_t>(lad[static_cast<std::size_t>(i)])].realized);
    return w;
  };
  auto single = [base, members, ladder, realize, k](const AtomSet& x) -> TwoMove {
    auto lad = ladder(x);
    AtomSet u;
    for (int j = 1; j <= k; ++j) u |= call_t(base, realize(lad, 0, j));
    return {u, members[static_cast<std::size_t>(lad.back())]};
  };

  Tactic t;
  t.window_size = 2;
  t.name = base.name + "+vsg2";
  t.move_fn = [=](const std::vector<AtomSet>& window, int) -> TwoMove {
    if (window.size() == 1) return single(window[0]);
    const AtomSet &x = window[window.size() - 2], &y = window.back();
    auto lx = ladder(x);
    if (!members[static_cast<std::size_t>(lx.back())].realized.subset_of(y)) return single(y);
    auto ly = ladder(y);
    AtomSet u;
    for (int i = 1; i <= k; ++i) {
      std::vector<AtomSet> w = realize(lx, i, k);
      auto head = realize(ly, 0, i);
      w.insert(w.end(), head.begin(), head.end());
      u |= call_t(base, w);
    }
    return {u, members[static_cast<std::size_t>(ly.back())]};
  };
  return t;
}

void CofinalChain::validate() const {
  if (members.empty()) throw input_error("cofinal chain is empty");
  if (escape.size() != members.size())
    throw input_error("cofinal chain needs one escape atom per member");
  for (std::size_t i = 0; i + 1 < members.size(); ++i)
    if (!members[i].proper_subset_of(members[i + 1]))
      throw input_error("cofinal chain not strictly increasing at index " + std::to_string(i));
  for (std::size_t i = 0; i < members.size(); ++i)
    if (escape[i] < 0 || escape[i] >= kMaxAtoms || members[i].contains(escape[i]))
      throw input_error("escape atom at index " + std::to_string(i) +
                        " does not leave its member");
}

Tactic translate_smg_vsg(const IdealInstance& inst, const Tactic& tactic,
                         TranslateDirection dir, const CofinalChain& chain) {
  Tactic t;
  t.window_size = tactic.window_size;
  t.markov = tactic.markov;

  if (dir == TranslateDirection::SmgToVsg) {
    t.name = tactic.name + "+vsg-wrap";
    t.move_fn = [inst, tactic](const std::vector<AtomSet>& window, int inning) -> TwoMove {
      TwoMove m = tactic.move_fn(window, inning);
      AtomSet target = window.back() | m.t;
      auto cert = sigma_certify(inst, target);
      if (!cert)
        throw input_error("vsg wrap: no stage certificate for " + to_string(target));
      return {m.t, *cert};
    };
    return t;
  }

  chain.validate();
  auto members = chain.members;
  auto escape = chain.escape;
  t.name = tactic.name + "+smg-fold";
  t.move_fn = [tactic, members, escape](const std::vector<AtomSet>& window,
                                        int inning) -> TwoMove {
    std::vector<int> alpha;
    for (const auto& x : window) {
      int a = -1;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (x.subset_of(members[i])) { a = static_cast<int>(i); break; }
      if (a < 0)
        throw input_error("smg fold: chain is not cofinal over " + to_string(x));
      alpha.push_back(a);
    }
    int next = alpha.back() + 1;
    if (next >= static_cast<int>(members.size()))
      throw input_error("smg fold: chain exhausted above index " + std::to_string(alpha.back()));
    AtomSet z = AtomSet::single(escape[static_cast<std::size_t>(next)]);
    bool increasing = true;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
      if (alpha[i] >= alpha[i + 1]) { increasing = false; break; }
    if (!increasing) return {z, std::nullopt};
    std::vector<AtomSet> lifted;
    for (int a : alpha) lifted.push_back(members[static_cast<std::size_t>(a)]);
    TwoMove g = tactic.move_fn(lifted, inning);
    return {g.t | z, std::nullopt};
  };
  return t;
}

int escape_index(const VsgThreeInputs& in, int a) {
  const AtomSet& mem = in.family.members[static_cast<std::size_t>(a)].realized;
  for (std::size_t xi = 0; xi < in.c_chain.size(); ++xi)
    if (!in.c_chain[xi].subset_of(mem)) return static_cast<int>(xi);
  throw input_error("reference chain never escapes member " + std::to_string(a));
}

std::vector<std::vector<int>> tau_tree(const VsgThreeInputs& in, int a, int b) {
  // indices may repeat once before the two-back reference forces a strict drop
  const int cap = 2 * static_cast<int>(in.family.members.size()) + 2;
  std::vector<std::vector<int>> out;
  std::vector<int> seq = {b, a};
  long long nodes = 0;

  std::function<void()> expand = [&]() {
    if (++nodes > 1'000'000) throw resource_error("tau tree budget exhausted");
    out.push_back(seq);
    if (static_cast<int>(seq.size()) > cap)
      throw input_error("tau tree is not well founded at pair (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
    int last = seq.back(), prev = seq[seq.size() - 2];
    const auto& en = in.enumerations[static_cast<std::size_t>(last)];
    const AtomSet& prev_set = in.family.members[static_cast<std::size_t>(prev)].realized;
    for (std::size_t xi = 0; xi < en.size() && xi < in.c_chain.size(); ++xi) {
      if (!in.c_chain[xi].subset_of(prev_set)) continue;
      seq.push_back(en[xi]);
      expand();
      seq.pop_back();
    }
  };
  expand();
  return out;
}

AtomSet tau_members(const VsgThreeInputs& in, int a, int b) {
  AtomSet trace;
  for (const auto& seq : tau_tree(in, a, b))
    for (int s : seq) trace.insert(s);
  return trace;
}

namespace {

struct ThreeState {
  std::map<std::pair<int, int>, AtomSet> f_memo;
  std::map<std::pair<int, int>, int> phi1_memo, phi2_memo;
};

AtomSet tau_members_memo(const VsgThreeInputs& in, int a, int b, ThreeState& st) {
  auto key = std::make_pair(a, b);
  if (auto it = st.f_memo.find(key); it != st.f_memo.end()) return it->second;
  AtomSet trace = tau_members(in, a, b);
  st.f_memo.emplace(key, trace);
  return trace;
}

// union of member traces over strictly nested pairs sharing a tau sequence
AtomSet phi1_trace(const VsgThreeInputs& in, int a, int b, ThreeState& st) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& seq : tau_tree(in, a, b))
    for (int x : seq)
      for (int y : seq) {
        const AtomSet& sx = in.family.members[static_cast<std::size_t>(x)].realized;
        const AtomSet& sy = in.family.members[static_cast<std::size_t>(y)].realized;
        if (sx.proper_subset_of(sy)) pairs.emplace(x, y);
      }
  AtomSet u;
  for (const auto& [x, y] : pairs) u |= tau_members_memo(in, x, y, st);
  return u;
}

int phi1_impl(const VsgThreeInputs& in, int a, int b, ThreeState& st) {
  auto key = std::make_pair(a, b);
  if (auto it = st.phi1_memo.find(key); it != st.phi1_memo.end()) return it->second;
  AtomSet u = phi1_trace(in, a, b, st);
  for (std::size_t i = 0; i < in.b_family.size(); ++i)
    if (u.subset_of(in.b_family[i])) {
      st.phi1_memo[key] = static_cast<int>(i);
      return static_cast<int>(i);
    }
  throw input_error("no second-level member covers the tau trace of pair (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
}

int phi2_impl(const VsgThreeInputs& in, int a, int b, ThreeState& st) {
  auto key = std::make_pair(a, b);
  if (auto it = st.phi2_memo.find(key); it != st.phi2_memo.end()) return it->second;
  const auto& en = in.enumerations[static_cast<std::size_t>(b)];
  auto pos = std::find(en.begin(), en.end(), a);
  if (pos == en.end())
    throw input_error("member " + std::to_string(a) + " is not enumerated below " +
                      std::to_string(b));
  int xi = static_cast<int>(pos - en.begin());
  AtomSet v = in.c_chain[static_cast<std::size_t>(xi)] |
              in.c_chain[static_cast<std::size_t>(escape_index(in, b))];
  int bf = phi1_impl(in, a, b, st);
  for (int m : in.b_family[static_cast<std::size_t>(bf)].to_vector())
    v |= in.family.members[static_cast<std::size_t>(m)].realized;
  for (std::size_t i = 0; i < in.family.members.size(); ++i)
    if (v.subset_of(in.family.members[i].realized)) {
      st.phi2_memo[key] = static_cast<int>(i);
      return static_cast<int>(i);
    }
  throw input_error("no family member absorbs the reference sets of pair (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
}

}  // namespace

int three_phi1(const VsgThreeInputs& in, int a, int b) {
  ThreeState st;
  return phi1_impl(in, a, b, st);
}

int three_phi2(const VsgThreeInputs& in, int a, int b) {
  ThreeState st;
  return phi2_impl(in, a, b, st);
}

std::vector<std::string> validate_vsg_inputs(const VsgThreeInputs& in) {
  std::vector<std::string> bad;
  const auto& mem = in.family.members;
  const std::size_t n = mem.size();
  if (n == 0) { bad.push_back("family is empty"); return bad; }
  if (n > 64) { bad.push_back("family exceeds 64 members"); return bad; }

  for (std::size_t i = 0; i + 1 < in.c_chain.size(); ++i)
    if (!in.c_chain[i].proper_subset_of(in.c_chain[i + 1]))
      bad.push_back("reference chain not strictly increasing at " + std::to_string(i));
  for (std::size_t a = 0; a < n; ++a) {
    bool escapes = false;
    for (const auto& c : in.c_chain)
      if (!c.subset_of(mem[a].realized)) { escapes = true; break; }
    if (!escapes) bad.push_back("reference chain never escapes member " + std::to_string(a));
  }

  if (in.enumerations.size() != n) {
    bad.push_back("enumerations must list every member");
    return bad;
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::set<int> listed(in.enumerations[a].begin(), in.enumerations[a].end());
    if (listed.size() != in.enumerations[a].size())
      bad.push_back("enumeration of member " + std::to_string(a) + " repeats an entry");
    if (in.enumerations[a].size() > in.c_chain.size())
      bad.push_back("enumeration of member " + std::to_string(a) +
                    " is longer than the reference chain");
    for (std::size_t x = 0; x < n; ++x) {
      bool below = mem[x].realized.subset_of(mem[a].realized);
      if (below != (listed.count(static_cast<int>(x)) > 0))
        bad.push_back("enumeration of member " + std::to_string(a) +
                      (below ? " misses " : " wrongly lists ") + std::to_string(x));
    }
  }

  for (std::size_t i = 0; i < in.b_family.size(); ++i)
    if (!in.b_family[i].subset_of(AtomSet::first_n(static_cast<int>(n))))
      bad.push_back("second-level member " + std::to_string(i) + " indexes outside the family");

  // stage chains for both levels must be coherent
  FamilySpec bspec;
  for (const auto& s : in.b_family) bspec.members.push_back(SigmaSet{{}, s});
  if (in.b_decomposition.stages.size() != in.b_family.size()) {
    bad.push_back("second-level decomposition size mismatch");
  } else if (!verify_coherence(bspec, in.b_decomposition).ok()) {
    bad.push_back("second-level decomposition is not coherent");
  }
  if (in.a_decomposition.stages.size() != n) {
    bad.push_back("member decomposition size mismatch");
  } else if (!verify_coherence(in.family, in.a_decomposition).ok()) {
    bad.push_back("member decomposition is not coherent");
  }

  if (in.k_coloring.arity != 2) bad.push_back("pair coloring must have arity 2");
  if (in.phi3.size() != n) {
    bad.push_back("phi3 must map every member");
    return bad;
  }
  for (std::size_t a = 0; a < n; ++a) {
    int p = in.phi3[a];
    if (p == -1) continue;  // declared undefined (top of a finite family)
    if (p < 0 || p >= static_cast<int>(n)) {
      bad.push_back("phi3 of member " + std::to_string(a) + " is out of range");
      continue;
    }
    bool escapes = false;
    for (const auto& c : in.c_chain)
      if (!c.subset_of(mem[a].realized)) { escapes = true; break; }
    if (!escapes) continue;  // already reported
    AtomSet need = mem[a].realized | in.c_chain[static_cast<std::size_t>(escape_index(in, static_cast<int>(a)))];
    if (!need.subset_of(mem[static_cast<std::size_t>(p)].realized))
      bad.push_back("phi3 of member " + std::to_string(a) + " misses its escape set");
  }
  return bad;
}

Tactic build_vsg_three_tactic(const VsgThreeInputs& in) {
  auto bad = validate_vsg_inputs(in);
  if (!bad.empty()) throw input_error("vsg3 inputs invalid: " + bad.front());

  auto idx = member_index(in.family);
  auto state = std::make_shared<ThreeState>();

  auto two_case = [in, state](int a, int b) -> TwoMove {
    int p2 = phi2_impl(in, a, b, *state);
    return {AtomSet{}, in.family.members[static_cast<std::size_t>(p2)]};
  };

  Tactic t;
  t.window_size = 3;
  t.name = "vsg3";
  t.move_fn = [=](const std::vector<AtomSet>& window, int) -> TwoMove {
    std::vector<int> w;
    for (const auto& o : window) w.push_back(lookup_member(idx, o, "vsg3"));
    if (w.size() == 1) {
      int p = in.phi3[static_cast<std::size_t>(w[0])];
      if (p < 0)
        throw input_error("vsg3: phi3 is undefined at member " + std::to_string(w[0]));
      return {AtomSet{}, in.family.members[static_cast<std::size_t>(p)]};
    }
    if (w.size() == 2) return two_case(w[0], w[1]);

    int a = w[0], b = w[1], c = w[2];
    int pab = phi2_impl(in, a, b, *state);
    if (!in.family.members[static_cast<std::size_t>(pab)].realized.subset_of(window.back()))
      return two_case(b, c);

    int b1 = phi1_impl(in, a, b, *state);
    int b2 = phi1_impl(in, b, c, *state);
    int kc = 0;
    if (b1 != b2) kc = in.k_coloring.color_of({std::min(b1, b2), std::max(b1, b2)});
    const auto& s1 = in.b_decomposition.stages[static_cast<std::size_t>(b1)];
    const auto& s2 = in.b_decomposition.stages[static_cast<std::size_t>(b2)];
    int m = -1;
    for (int cand = std::max(kc, 0); cand < in.b_decomposition.stage_count; ++cand) {
      bool ok = true;
      for (int u = cand; u < in.b_decomposition.stage_count; ++u)
        if (!s1[static_cast<std::size_t>(u)].subset_of(s2[static_cast<std::size_t>(u)])) {
          ok = false;
          break;
        }
      if (ok) { m = cand; break; }
    }
    if (m < 0)
      throw input_error("vsg3: no admissible stage for triple (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    AtomSet d;
    for (int x : s2[static_cast<std::size_t>(m)].to_vector())
      d |= in.a_decomposition.stages[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)];
    int pbc = phi2_impl(in, b, c, *state);
    return {d, in.family.members[static_cast<std::size_t>(pbc)]};
  };
  return t;
}

Coloring extract_coloring(const Tactic& tactic, const std::vector<AtomSet>& chain,
                          const SizeLadder& ladder) {
  const int k = tactic.window_size;
  const int n = static_cast<int>(chain.size());
  Coloring col;
  col.arity = k;
  col.palette_size = static_cast<int>(ladder.bounds.size()) + 1;

  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      AtomSet cum;
      std::vector<AtomSet> window;
      for (int i : pick) {
        window.push_back(chain[static_cast<std::size_t>(i)]);
        cum |= tactic.move_fn(window, static_cast<int>(window.size())).t;
      }
      int color = static_cast<int>(ladder.bounds.size());  // overflow
      for (std::size_t i = 0; i < ladder.bounds.size(); ++i)
        if (cum.count() <= ladder.bounds[i]) { color = static_cast<int>(i); break; }
      col.colors.emplace(pick, color);
      return;
    }
    for (int i = from; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return col;
}

std::optional<Transcript> targeted_defeat(GameKind kind, const IdealInstance& inst,
                                          const Tactic& tactic,
                                          const std::vector<AtomSet>& menu_chain,
                                          const Coloring& col, const DefeatConfig& cfg) {
  FinitePoset order;
  order.nodes = static_cast<int>(menu_chain.size());
  for (int i = 0; i < order.nodes; ++i)
    for (int j = i + 1; j < order.nodes; ++j) order.less.emplace_back(i, j);
  order.validate();

  VerifyConfig vc;
  vc.depth = cfg.length;
  vc.lag = cfg.lag < 0 ? tactic.window_size + 1 : cfg.lag;
  vc.menu = menu_chain;
  vc.node_budget = cfg.node_budget;

  std::optional<Transcript> found;
  for_each_bounded_path(
      order, col, cfg.length, cfg.palette,
      [&](const std::vector<int>& path) {
        std::vector<AtomSet> moves;
        for (int i : path) moves.push_back(menu_chain[static_cast<std::size_t>(i)]);
        Transcript tr = run_play(kind, inst, chain_strategy(moves), tactic, vc);
        if (tr.verdict != Transcript::Verdict::Lose) return false;
        if (tr.fault.empty() && tr.uncovered.empty()) return false;
        found = tr;
        return true;
      },
      nullptr, cfg.path_budget);
  return found;
}

Tactic random_window_tactic(const IdealInstance& inst, int k, std::uint64_t seed) {
  auto generators = inst.generators;
  Tactic t;
  t.window_size = k;
  t.name = "random-window-" + std::to_string(seed);
  t.move_fn = [generators, seed](const std::vector<AtomSet>& window, int) -> TwoMove {
    // fnv-style mix of the window bits; pure in the window by construction
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (const auto& o : window) {
      h ^= o.bits;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return {generators[h % generators.size()], std::nullopt};
  };
  return t;
}

Tactic greedy_cover_tactic(const IdealInstance& inst, int k) {
  auto generators = inst.generators;
  Tactic t;
  t.window_size = k;
  t.name = "greedy-cover";
  t.move_fn = [generators](const std::vector<AtomSet>& window, int) -> TwoMove {
    const AtomSet& top = window.back();
    int best = 0, gain = -1;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      int g = (generators[i] & top).count();
      if (g > gain) { gain = g; best = static_cast<int>(i); }
    }
    return {generators[static_cast<std::size_t>(best)], std::nullopt};
  };
  return t;
}

}  // namespace ig
