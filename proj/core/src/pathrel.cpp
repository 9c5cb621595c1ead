#include "idealgames/pathrel.hpp"

#include <algorithm>
#include <string>

namespace ig {

void FinitePoset::validate() {
  if (nodes <= 0) throw input_error("poset needs at least one node");
  lt_.assign(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes), 0);
  for (auto [a, b] : less) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) throw input_error("poset pair out of range");
    if (a == b) throw input_error("poset relation must be irreflexive");
    lt_[static_cast<std::size_t>(a * nodes + b)] = 1;
  }
  for (int a = 0; a < nodes; ++a)
    for (int b = 0; b < nodes; ++b) {
      if (!lt(a, b)) continue;
      if (lt(b, a)) throw input_error("poset relation contains a 2-cycle");
      for (int c = 0; c < nodes; ++c)
        if (lt(b, c) && !lt(a, c)) throw input_error("poset relation is not transitive");
    }
}

namespace {

struct PathSearch {
  const FinitePoset& p;
  const Coloring& col;
  int length;
  int palette;
  PathSearchStats* stats;
  long long budget;
  long long visited = 0;

  std::vector<int> path;
  std::vector<int> used;  // sorted distinct window colors
  // exact maximum extension length per (window suffix, colors used), written
  // only for states fully explored without reaching a complete path
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> memo;

  const std::function<bool(const std::vector<int>&)>& visit;
  bool done = false;

  PathSearch(const FinitePoset& p_, const Coloring& col_, int length_, int palette_,
             PathSearchStats* stats_, long long budget_,
             const std::function<bool(const std::vector<int>&)>& visit_)
      : p(p_), col(col_), length(length_), palette(palette_), stats(stats_), budget(budget_),
        visit(visit_) {}

  std::pair<std::vector<int>, std::vector<int>> key() const {
    int k = col.arity - 1;
    int from = static_cast<int>(path.size()) > k ? static_cast<int>(path.size()) - k : 0;
    return {std::vector<int>(path.begin() + from, path.end()), used};
  }

  // returns (max extension length explored, subtree reached a complete path)
  std::pair<int, bool> dfs() {
    if (++visited > budget) {
      if (stats) stats->visited = visited;
      throw resource_error("path search budget exceeded");
    }
    int need = length - static_cast<int>(path.size());
    if (need == 0) {
      if (visit(path)) done = true;
      return {0, true};
    }
    auto k = key();
    if (auto it = memo.find(k); it != memo.end() && it->second < need) return {it->second, false};

    int best = 0;
    bool completed = false;
    for (int w = 0; w < p.nodes && !done; ++w) {
      if (!path.empty() && !p.lt(path.back(), w)) continue;
      int added_color = -1;
      if (static_cast<int>(path.size()) >= col.arity - 1) {
        std::vector<int> window(path.end() - (col.arity - 1), path.end());
        window.push_back(w);
        int c = col.color_of(window);
        auto pos = std::lower_bound(used.begin(), used.end(), c);
        if (pos == used.end() || *pos != c) {
          if (static_cast<int>(used.size()) >= palette) continue;
          used.insert(pos, c);
          added_color = c;
        }
      }
      path.push_back(w);
      auto [ext, sub_completed] = dfs();
      path.pop_back();
      if (added_color >= 0)
        used.erase(std::lower_bound(used.begin(), used.end(), added_color));
      best = std::max(best, 1 + ext);
      completed = completed || sub_completed;
      if (done) break;
    }
    if (!completed && !done) memo.emplace(std::move(k), best);
    return {best, completed};
  }
};

}  // namespace

bool for_each_bounded_path(const FinitePoset& p, const Coloring& col, int length, int palette,
                           const std::function<bool(const std::vector<int>&)>& visit,
                           PathSearchStats* stats, long long budget) {
  if (length < 1) throw input_error("path length must be positive");
  if (palette < 1) throw input_error("palette bound must be positive");
  if (col.arity < 2) throw input_error("coloring arity must be at least 2");
  PathSearch s(p, col, length, palette, stats, budget, visit);
  // roots in canonical order; the shared memo keeps none-verdicts exact
  for (int r = 0; r < p.nodes && !s.done; ++r) {
    s.path.assign(1, r);
    s.used.clear();
    s.dfs();
  }
  if (stats) stats->visited = s.visited;
  return s.done;
}

std::optional<std::vector<int>> find_bounded_path(const FinitePoset& p, const Coloring& col,
                                                  int length, int palette, PathSearchStats* stats,
                                                  long long budget) {
  std::optional<std::vector<int>> out;
  for_each_bounded_path(
      p, col, length, palette,
      [&](const std::vector<int>& path) {
        out = path;
        return true;
      },
      stats, budget);
  return out;
}

FinitePoset domination_poset(const std::vector<std::vector<int>>& seqs, int horizon, int gap) {
  if (horizon < 2) throw input_error("domination horizon must be at least 2");
  if (gap < 1) throw input_error("domination gap must be positive");
  for (const auto& f : seqs)
    if (static_cast<int>(f.size()) < horizon)
      throw input_error("sequence shorter than the horizon");
  FinitePoset p;
  p.nodes = static_cast<int>(seqs.size());
  for (int a = 0; a < p.nodes; ++a)
    for (int b = 0; b < p.nodes; ++b) {
      if (a == b) continue;
      bool dominated = true;
      for (int n = horizon / 2; n < horizon && dominated; ++n)
        dominated = seqs[b][n] - seqs[a][n] >= gap;
      if (dominated) p.less.emplace_back(a, b);
    }
  p.validate();
  return p;
}

}  // namespace ig
