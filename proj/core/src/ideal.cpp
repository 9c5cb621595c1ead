#include "idealgames/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ig {

std::string to_string(const AtomSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int a : s.to_vector()) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  os << '}';
  return os.str();
}

std::optional<SigmaSet> sigma_certify(const IdealInstance& inst, const AtomSet& s) {
  if (!s.subset_of(inst.ground_mask())) return std::nullopt;
  const int n = static_cast<int>(inst.generators.size());

  // greedy: repeatedly take the generator covering the most missing atoms
  std::vector<int> stages;
  AtomSet missing = s;
  while (!missing.empty() && static_cast<int>(stages.size()) < inst.sigma_stage_bound) {
    int best = -1, best_gain = 0;
    for (int i = 0; i < n; ++i) {
      int gain = (missing & inst.generators[static_cast<std::size_t>(i)]).count();
      if (gain > best_gain) { best_gain = gain; best = i; }
    }
    if (best < 0) break;
    stages.push_back(best);
    missing = missing - inst.generators[static_cast<std::size_t>(best)];
  }
  if (missing.empty()) return SigmaSet{stages, s};

  // exhaustive: all index combinations of each size up to the bound
  std::vector<int> combo;
  std::function<std::optional<SigmaSet>(int, int, AtomSet)> rec =
      [&](int from, int left, AtomSet uncovered) -> std::optional<SigmaSet> {
    if (uncovered.empty()) return SigmaSet{combo, s};
    if (left == 0) return std::nullopt;
    for (int i = from; i < n; ++i) {
      AtomSet next = uncovered - inst.generators[static_cast<std::size_t>(i)];
      if (next == uncovered) continue;
      combo.push_back(i);
      if (auto got = rec(i + 1, left - 1, next)) return got;
      combo.pop_back();
    }
    return std::nullopt;
  };
  return rec(0, inst.sigma_stage_bound, s);
}

ValidationReport validate_instance(const IdealInstance& inst) {
  ValidationReport rep;
  if (inst.ground.empty()) rep.violations.push_back("ground set is empty");
  if (inst.ground_size() > kMaxAtoms)
    rep.violations.push_back("ground set exceeds " + std::to_string(kMaxAtoms) + " atoms");
  if (inst.sigma_stage_bound < 1) rep.violations.push_back("sigma_stage_bound must be positive");

  const AtomSet ground = inst.ground_mask();
  for (std::size_t i = 0; i < inst.generators.size(); ++i) {
    const AtomSet& g = inst.generators[i];
    if (!g.subset_of(ground))
      rep.violations.push_back("generator " + std::to_string(i) + " leaves the ground set");
    if (g == ground)
      rep.violations.push_back("generator " + std::to_string(i) + " equals ground");
  }
  for (int a = 0; a < inst.ground_size(); ++a) {
    bool covered = false;
    for (const auto& g : inst.generators)
      if (g.contains(a)) { covered = true; break; }
    if (!covered) rep.violations.push_back("atom " + std::to_string(a) + " uncovered");
  }
  if (inst.family) {
    const auto& mem = inst.family->members;
    for (std::size_t i = 0; i < mem.size(); ++i) {
      if (static_cast<int>(mem[i].stages.size()) > inst.sigma_stage_bound)
        rep.violations.push_back("family member " + std::to_string(i) + " exceeds stage bound");
      for (int s : mem[i].stages)
        if (s < 0 || s >= static_cast<int>(inst.generators.size())) {
          rep.violations.push_back("family member " + std::to_string(i) + " has bad stage index");
          return rep;
        }
      if (mem[i].realized != inst.realize(mem[i].stages))
        rep.violations.push_back("family member " + std::to_string(i) +
                                 " realized set does not match its stages");
      for (std::size_t j = 0; j < i; ++j)
        if (mem[i].realized == mem[j].realized)
          rep.violations.push_back("family members " + std::to_string(j) + " and " +
                                   std::to_string(i) + " realize the same set");
    }
  }
  return rep;
}

std::map<int, int> rank_family(const FamilySpec& fam) {
  const int n = static_cast<int>(fam.members.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (fam.members[i].realized == fam.members[j].realized)
        throw input_error("rank_family: members " + std::to_string(i) + " and " +
                          std::to_string(j) + " realize the same set");

  // height in a finite strict order: longest chain below
  std::map<int, int> rank;
  // process members in increasing set size so all predecessors are ranked
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return fam.members[a].realized.count() < fam.members[b].realized.count();
  });
  for (int i : order) {
    int r = 0;
    for (int j = 0; j < n; ++j)
      if (fam.edge(j, i)) r = std::max(r, rank.at(j) + 1);
    rank[i] = r;
  }
  return rank;
}

LocalSmallness locally_small_check(const FamilySpec& fam, int bound) {
  LocalSmallness out;
  const int n = static_cast<int>(fam.members.size());
  for (int i = 0; i < n; ++i) {
    int below = 0;
    for (int j = 0; j < n; ++j)
      if (fam.members[j].realized.subset_of(fam.members[i].realized)) ++below;
    if (below > bound) {
      out.ok = false;
      out.violations.push_back(i);
    }
  }
  return out;
}

}  // namespace ig
