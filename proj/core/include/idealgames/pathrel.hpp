// pathrel.hpp
// Finite shadow of the path partition relation: exhaustive search for
// increasing paths whose window colors stay within a bounded palette, and
// the eventual-domination order on integer sequences.
//
// A none-verdict certifies only the finite parameters (length, palette)
// it was asked about; a genuine infinite path yields bounded finite paths,
// never conversely.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "idealgames/atoms.hpp"

namespace ig {

struct FinitePoset {
  int nodes = 0;
  std::vector<std::pair<int, int>> less;  // strict pairs (a, b) meaning a < b

  // validates irreflexivity and transitivity, builds the adjacency matrix
  void validate();
  bool lt(int a, int b) const { return lt_[static_cast<std::size_t>(a * nodes + b)]; }

 private:
  std::vector<char> lt_;
};

// color assignment on increasing k-tuples of nodes (or family members)
struct Coloring {
  int arity = 2;
  int palette_size = 0;
  std::map<std::vector<int>, int> colors;

  int color_of(const std::vector<int>& window) const {
    auto it = colors.find(window);
    if (it == colors.end()) throw input_error("coloring undefined on a window");
    return it->second;
  }
};

struct PathSearchStats {
  long long visited = 0;  // DFS states expanded
};

inline constexpr long long kDefaultSearchBudget = 200'000'000;

// exhaustive DFS for an increasing node sequence of the given length whose
// consecutive k-windows use at most `palette` distinct colors; returns the
// lexicographically first such path. The memo stores, per (window suffix,
// colors used), the exact maximum extension length reached on failure, so
// none-verdicts remain sound.
std::optional<std::vector<int>> find_bounded_path(const FinitePoset& p, const Coloring& col,
                                                  int length, int palette,
                                                  PathSearchStats* stats = nullptr,
                                                  long long budget = kDefaultSearchBudget);

// enumerates bounded-color paths in lexicographic order until the visitor
// returns true; returns whether any visit did
bool for_each_bounded_path(const FinitePoset& p, const Coloring& col, int length, int palette,
                           const std::function<bool(const std::vector<int>&)>& visit,
                           PathSearchStats* stats = nullptr,
                           long long budget = kDefaultSearchBudget);

// strict order: f < g iff g(n) - f(n) >= gap for every n >= horizon / 2
FinitePoset domination_poset(const std::vector<std::vector<int>>& seqs, int horizon, int gap);

}  // namespace ig
