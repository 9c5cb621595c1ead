#include "idealgames/bmgame.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "idealgames/rng.hpp"

namespace ig {
namespace {

std::vector<int> nonempty_indices(const FiniteSpace& space) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(space.opens.size()); ++i)
    if (!space.opens[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

bool pairwise_disjoint(const FiniteSpace& space, const std::vector<int>& picked, int next) {
  for (int i : picked)
    if (!(space.opens[static_cast<std::size_t>(i)] & space.opens[static_cast<std::size_t>(next)])
             .empty())
      return false;
  return true;
}

// first maximum pairwise-disjoint family in index order
void max_disjoint(const FiniteSpace& space, const std::vector<int>& pool, std::size_t from,
                  std::vector<int>& cur, std::vector<int>& best) {
  if (cur.size() > best.size()) best = cur;
  for (std::size_t p = from; p < pool.size(); ++p) {
    if (!pairwise_disjoint(space, cur, pool[p])) continue;
    cur.push_back(pool[p]);
    max_disjoint(space, pool, p + 1, cur, best);
    cur.pop_back();
  }
}

Word j_cone(const Word& u, int m) {
  if (m < 1) throw input_error("refinement index must be at least 1");
  if (u.len + m > 64)
    throw input_error("refinement of '" + u.str() + "' at index " + std::to_string(m) +
                      " exceeds the word capacity");
  Word out = u;
  out.len = u.len + m;
  out.set(out.len - 1, true);
  return out;
}

template <typename T>
std::vector<T> tail_window(const std::vector<T>& moves, int k) {
  std::size_t take = std::min(moves.size(), static_cast<std::size_t>(k));
  return {moves.end() - static_cast<std::ptrdiff_t>(take), moves.end()};
}

}  // namespace

void FiniteSpace::validate() const {
  if (points < 1 || points > kMaxAtoms) throw input_error("point count out of range");
  AtomSet full;
  for (int p = 0; p < points; ++p) full.insert(p);
  auto find = [&](const AtomSet& s) {
    return std::find(opens.begin(), opens.end(), s) != opens.end();
  };
  if (!find(full)) throw input_error("opens must contain the full point set");
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (!opens[i].subset_of(full)) throw input_error("open " + std::to_string(i) + " leaves the point set");
    for (std::size_t j = 0; j < i; ++j) {
      if (opens[i] == opens[j]) throw input_error("duplicate open at index " + std::to_string(i));
      if (!find(opens[i] | opens[j]))
        throw input_error("opens are not closed under union at " + std::to_string(j) + "," +
                          std::to_string(i));
      if (!find(opens[i] & opens[j]))
        throw input_error("opens are not closed under intersection at " + std::to_string(j) + "," +
                          std::to_string(i));
    }
  }
}

FipDecomposition fip_decompose(const FiniteSpace& space) {
  space.validate();
  std::vector<int> pool = nonempty_indices(space);
  if (pool.empty()) throw input_error("space has no nonempty open");
  FipDecomposition dec;
  std::vector<int> cur;
  max_disjoint(space, pool, 0, cur, dec.seeds);
  dec.n = static_cast<int>(dec.seeds.size());
  for (int seed : dec.seeds) {
    std::vector<int> fam{seed};
    for (int cand : pool) {
      if (cand == seed) continue;
      bool meets_all = true;
      for (int m : fam)
        if ((space.opens[static_cast<std::size_t>(m)] &
             space.opens[static_cast<std::size_t>(cand)])
                .empty()) {
          meets_all = false;
          break;
        }
      if (meets_all) fam.push_back(cand);
    }
    std::sort(fam.begin(), fam.end());
    dec.families.push_back(std::move(fam));
  }
  return dec;
}

BmTactic fip_one_tactic(const FiniteSpace& space, const FipDecomposition& dec) {
  if (dec.seeds.empty()) throw input_error("decomposition has no seeds");
  BmTactic t;
  t.window_size = 1;
  t.markov = false;
  t.name = "fip" + std::to_string(dec.n);
  t.move_fn = [space, dec](const std::vector<AtomSet>& window, int) -> AtomSet {
    if (window.empty()) throw input_error("fip tactic needs a move to respond to");
    AtomSet u = window.back();
    for (int seed : dec.seeds) {
      AtomSet meet = space.opens[static_cast<std::size_t>(seed)] & u;
      if (!meet.empty()) return meet;
    }
    throw input_error("move avoids every seed of a maximum disjoint family");
  };
  return t;
}

BmVerdict bm_verify(const FiniteSpace& space, const BmTactic& tactic, int depth,
                    long long node_budget) {
  space.validate();
  if (depth < 1) throw input_error("verification depth must be positive");
  std::vector<int> pool = nonempty_indices(space);
  BmVerdict verdict;
  verdict.all_wins = true;
  long long nodes = 0;
  std::vector<AtomSet> one_moves;
  auto legal_open = [&](const AtomSet& s) {
    return std::find(space.opens.begin(), space.opens.end(), s) != space.opens.end();
  };
  // returns false to abort once a defeat is recorded
  auto dfs = [&](auto&& self, const AtomSet& inside, int inning) -> bool {
    if (inning > depth) {
      ++verdict.leaves;
      return true;
    }
    for (int i : pool) {
      const AtomSet& o = space.opens[static_cast<std::size_t>(i)];
      if (!o.subset_of(inside)) continue;
      if (++nodes > node_budget) throw resource_error("verification budget exhausted");
      one_moves.push_back(o);
      AtomSet resp;
      bool bad = false;
      std::string why;
      try {
        resp = tactic.move_fn(tail_window(one_moves, tactic.window_size), inning);
      } catch (const input_error& e) {
        bad = true;
        why = std::string("two: ") + e.what();
      }
      if (!bad && (resp.empty() || !resp.subset_of(o) || !legal_open(resp))) {
        bad = true;
        why = "two: response is not a nonempty open inside the move";
      }
      if (bad) {
        verdict.all_wins = false;
        verdict.defeat = one_moves;
        verdict.fault = why;
        one_moves.pop_back();
        return false;
      }
      bool keep = self(self, resp, inning + 1);
      one_moves.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  AtomSet full;
  for (int p = 0; p < space.points; ++p) full.insert(p);
  dfs(dfs, full, 1);
  return verdict;
}

BmConeVerdict bm_verify(const ConeSpace& space, const BmConeTactic& tactic, int depth,
                        long long node_budget) {
  if (space.depth < 1 || space.depth > 64) throw input_error("cone depth out of range");
  if (depth < 1) throw input_error("verification depth must be positive");
  BmConeVerdict verdict;
  verdict.all_wins = true;
  long long nodes = 0;
  std::vector<Word> one_moves;
  // ONE extends the previous response by any suffix that stays under the cap
  auto dfs = [&](auto&& self, const Word& inside, int inning) -> bool {
    if (inning > depth || inside.len > space.depth) {
      ++verdict.leaves;
      return true;
    }
    for (int extra = 0; extra + inside.len <= space.depth; ++extra) {
      for (std::uint64_t suffix = 0; suffix < (std::uint64_t{1} << extra); ++suffix) {
        if (++nodes > node_budget) throw resource_error("verification budget exhausted");
        Word o = inside;
        for (int i = 0; i < extra; ++i) {
          o.len += 1;
          o.set(o.len - 1, (suffix >> i) & 1);
        }
        one_moves.push_back(o);
        Word resp;
        bool bad = false;
        std::string why;
        try {
          resp = tactic.move_fn(tail_window(one_moves, tactic.window_size), inning);
        } catch (const input_error& e) {
          bad = true;
          why = std::string("two: ") + e.what();
        }
        if (!bad && !cone_subset(resp, o)) {
          bad = true;
          why = "two: response is not inside the move";
        }
        if (bad) {
          verdict.all_wins = false;
          verdict.defeat = one_moves;
          verdict.fault = why;
          one_moves.pop_back();
          return false;
        }
        bool keep = self(self, resp, inning + 1);
        one_moves.pop_back();
        if (!keep) return false;
      }
    }
    return true;
  };
  dfs(dfs, Word{}, 1);
  return verdict;
}

bool cone_subset(const Word& a, const Word& b) {
  if (b.len > a.len) return false;
  for (int i = 0; i < b.len; ++i)
    if (a.bit(i) != b.bit(i)) return false;
  return true;
}

RefinementScheme cone_scheme() {
  RefinementScheme s;
  s.j_map = [](const Word& u, int m) { return j_cone(u, m); };
  return s;
}

std::vector<std::string> validate_scheme(const RefinementScheme& scheme,
                                         const std::vector<Word>& opens, int index_bound) {
  std::vector<std::string> failures;
  for (const Word& u : opens) {
    std::vector<Word> children;
    for (int m = 1; m <= index_bound; ++m) {
      Word v;
      try {
        v = scheme.j_map(u, m);
      } catch (const input_error& e) {
        failures.push_back("'" + u.str() + "' index " + std::to_string(m) + ": " + e.what());
        continue;
      }
      if (!cone_subset(v, u) || v == u)
        failures.push_back("'" + v.str() + "' does not refine '" + u.str() + "'");
      for (std::size_t p = 0; p < children.size(); ++p)
        if (cone_subset(v, children[p]) || cone_subset(children[p], v))
          failures.push_back("refinements " + std::to_string(p + 1) + " and " +
                             std::to_string(m) + " of '" + u.str() + "' overlap");
      children.push_back(v);
    }
  }
  return failures;
}

BmConeTactic markov_to_plain(const BmConeTactic& markov, const RefinementScheme& scheme,
                             int index_bound) {
  if (!markov.markov) throw input_error("tactic does not read the inning number");
  if (index_bound < 1) throw input_error("index bound must be positive");
  BmConeTactic plain;
  plain.window_size = markov.window_size;
  plain.markov = false;
  plain.name = markov.name + "+plain";
  plain.move_fn = [markov, scheme, index_bound](const std::vector<Word>& window,
                                                int) -> Word {
    if (window.empty()) throw input_error("plain tactic needs a move to respond to");
    auto single = [&](const Word& u) { return markov.move_fn({scheme.j_map(u, 2)}, 1); };
    int j = static_cast<int>(window.size());
    if (j == 1) return single(window[0]);
    // recover the start index from the nesting pattern; refinements at a
    // fixed open are disjoint, so at most one index can match
    std::vector<int> matches;
    for (int l = 0; l + j + 1 <= index_bound; ++l) {
      bool ok = true;
      for (int i = 1; i < j && ok; ++i) {
        const Word& prev = window[static_cast<std::size_t>(i - 1)];
        const Word& next = window[static_cast<std::size_t>(i)];
        int m = l + i + 1;
        if (prev.len + m > next.len || prev.len + m > 64 ||
            !cone_subset(next, scheme.j_map(prev, m)))
          ok = false;
      }
      if (ok) matches.push_back(l);
    }
    if (matches.size() > 1)
      throw input_error("refinement scheme admits several start indices for the window");
    if (matches.empty()) return single(window.back());
    int l = matches[0];
    std::vector<Word> refined;
    for (int i = 0; i < j; ++i)
      refined.push_back(scheme.j_map(window[static_cast<std::size_t>(i)], l + i + 2));
    return markov.move_fn(refined, l + j);
  };
  return plain;
}

ConePlay bm_cone_play(const ConeSpace& space, const BmConeTactic& tactic,
                      const ConeStrategy& one, int innings) {
  if (space.depth < 1 || space.depth > 64) throw input_error("cone depth out of range");
  ConePlay play;
  for (int n = 1; n <= innings; ++n) {
    std::optional<Word> o = one(play.one_moves, play.two_moves);
    if (!o) break;
    if (o->len > space.depth) {
      play.fault_reason = "one: move deeper than the space";
      break;
    }
    if (!play.two_moves.empty() && !cone_subset(*o, play.two_moves.back())) {
      play.fault_reason = "one: move leaves the previous response";
      break;
    }
    play.one_moves.push_back(*o);
    Word resp;
    try {
      resp = tactic.move_fn(tail_window(play.one_moves, tactic.window_size), n);
    } catch (const input_error& e) {
      play.two_fault = true;
      play.fault_reason = std::string("two: ") + e.what();
      break;
    }
    if (!cone_subset(resp, *o)) {
      play.two_fault = true;
      play.fault_reason = "two: response is not inside the move";
      break;
    }
    play.two_moves.push_back(resp);
  }
  return play;
}

bool embedding_identity_holds(const ConePlay& play, const BmConeTactic& markov,
                              const RefinementScheme& scheme) {
  if (play.two_fault || play.two_moves.size() != play.one_moves.size()) return false;
  std::vector<Word> refined;
  for (std::size_t n = 0; n < play.one_moves.size(); ++n)
    refined.push_back(scheme.j_map(play.one_moves[n], static_cast<int>(n) + 2));
  for (std::size_t n = 0; n < play.two_moves.size(); ++n) {
    const std::vector<Word> upto(refined.begin(),
                                 refined.begin() + static_cast<std::ptrdiff_t>(n) + 1);
    std::vector<Word> window = tail_window(upto, markov.window_size);
    Word expected = markov.move_fn(window, static_cast<int>(n) + 1);
    if (!(expected == play.two_moves[n])) return false;
  }
  return true;
}

ConeStrategy random_cone_strategy(const ConeSpace& space, std::uint64_t seed, int max_extend) {
  auto rng = std::make_shared<Rng>(seed);
  int depth = space.depth;
  return [rng, depth, max_extend](const std::vector<Word>& one_moves,
                                  const std::vector<Word>& two_moves) -> std::optional<Word> {
    (void)one_moves;
    Word base;
    if (!two_moves.empty()) base = two_moves.back();
    if (base.len > depth) return std::nullopt;
    int room = std::min(max_extend, depth - base.len);
    int extend = room > 0 ? static_cast<int>(rng->below(static_cast<std::uint64_t>(room) + 1)) : 0;
    Word out = base;
    for (int i = 0; i < extend; ++i) {
      out.len += 1;
      out.set(out.len - 1, rng->coin());
    }
    return out;
  };
}

}  // namespace ig
