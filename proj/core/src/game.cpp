#include "idealgames/game.hpp"

#include <algorithm>
#include <utility>

namespace ig {

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::MG_family: return "mg";
    case GameKind::MG_full: return "mg-full";
    case GameKind::SMG: return "smg";
    case GameKind::VSG: return "vsg";
  }
  return "?";
}

std::string to_string(Transcript::Verdict v) {
  switch (v) {
    case Transcript::Verdict::Win: return "win";
    case Transcript::Verdict::Lose: return "lose";
    case Transcript::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// everything TWO put on the table in the previous inning
AtomSet absorbed(GameKind kind, const Inning& prev) {
  AtomSet req = prev.one;
  if (kind == GameKind::SMG || kind == GameKind::VSG) req |= prev.two.t;
  if (kind == GameKind::VSG && prev.two.s) req |= prev.two.s->realized;
  return req;
}

bool in_family(const IdealInstance& inst, const AtomSet& move) {
  if (!inst.family) return false;
  for (const auto& m : inst.family->members)
    if (m.realized == move) return true;
  return false;
}

}  // namespace

MoveCheck legal_one_move(GameKind kind, const IdealInstance& inst,
                         const std::vector<Inning>& history, const AtomSet& move,
                         const std::vector<AtomSet>* menu) {
  if (!move.subset_of(inst.ground_mask())) return {false, "move leaves the ground set"};
  if (menu && std::find(menu->begin(), menu->end(), move) == menu->end())
    return {false, "move not on the configured menu"};
  if (kind == GameKind::MG_family && !in_family(inst, move))
    return {false, "move not a family member"};
  if (!history.empty()) {
    const Inning& prev = history.back();
    if (kind == GameKind::MG_family || kind == GameKind::MG_full) {
      if (!prev.one.proper_subset_of(move)) return {false, "move is not a proper superset"};
    } else {
      if (!absorbed(kind, prev).subset_of(move))
        return {false, "move does not absorb the previous inning"};
    }
  }
  return {true, ""};
}

MoveCheck legal_two_move(GameKind kind, const IdealInstance& inst,
                         const std::vector<Inning>& history, const AtomSet& one_move,
                         const TwoMove& move) {
  (void)history;
  (void)one_move;
  if (!move.t.subset_of(inst.ground_mask())) return {false, "response leaves the ground set"};
  if (!inst.in_ideal(move.t)) return {false, "response is not in the ideal"};
  if (kind == GameKind::VSG) {
    if (!move.s) return {false, "vsg response needs a sigma component"};
    if (static_cast<int>(move.s->stages.size()) > inst.sigma_stage_bound)
      return {false, "sigma component exceeds the stage bound"};
    for (int i : move.s->stages)
      if (i < 0 || i >= static_cast<int>(inst.generators.size()))
        return {false, "sigma component names an unknown generator"};
    if (!(inst.realize(move.s->stages) == move.s->realized))
      return {false, "sigma component realization mismatch"};
  } else if (move.s) {
    return {false, "sigma component only allowed in vsg"};
  }
  return {true, ""};
}

OneStrategy chain_strategy(std::vector<AtomSet> moves) {
  return [moves = std::move(moves)](const std::vector<Inning>& hist) -> std::optional<AtomSet> {
    if (hist.size() >= moves.size()) return std::nullopt;
    return moves[hist.size()];
  };
}

bool finite_win(const std::vector<Inning>& innings, int lag, AtomSet* uncovered) {
  AtomSet owed, covered;
  int n = static_cast<int>(innings.size());
  for (int i = 0; i < n - lag; ++i) owed |= innings[static_cast<std::size_t>(i)].one;
  for (const auto& in : innings) covered |= in.two.t;
  AtomSet missing = owed - covered;
  if (uncovered) *uncovered = missing.empty() ? AtomSet{} : AtomSet::single(missing.least());
  return missing.empty();
}

namespace {

std::vector<AtomSet> window_of(const std::vector<Inning>& hist, const AtomSet& current, int k) {
  std::vector<AtomSet> w;
  int from = static_cast<int>(hist.size()) - (k - 1);
  for (int i = std::max(from, 0); i < static_cast<int>(hist.size()); ++i)
    w.push_back(hist[static_cast<std::size_t>(i)].one);
  w.push_back(current);
  return w;
}

bool same_move(const TwoMove& a, const TwoMove& b) {
  if (!(a.t == b.t)) return false;
  if (a.s.has_value() != b.s.has_value()) return false;
  if (a.s && (a.s->stages != b.s->stages || !(a.s->realized == b.s->realized))) return false;
  return true;
}

void assert_rule_inclusion(GameKind kind, const std::vector<Inning>& innings) {
  if (kind != GameKind::SMG && kind != GameKind::VSG) return;
  AtomSet ones, twos;
  for (std::size_t i = 0; i < innings.size(); ++i) {
    ones |= innings[i].one;
    if (i + 1 < innings.size()) twos |= innings[i].two.t;
  }
  if (!twos.subset_of(ones))
    throw contract_error("legal play violated the absorption inclusion");
}

}  // namespace

Transcript run_play(GameKind kind, const IdealInstance& inst, const OneStrategy& one,
                    const Tactic& two, const VerifyConfig& cfg) {
  Transcript tr;
  tr.kind = kind;
  tr.lag = cfg.lag;
  const std::vector<AtomSet>* menu = cfg.menu.empty() ? nullptr : &cfg.menu;
  for (int n = 1; n <= cfg.depth; ++n) {
    auto o = one(tr.innings);
    if (!o) break;  // resignation ends the play early
    MoveCheck c1 = legal_one_move(kind, inst, tr.innings, *o, menu);
    if (!c1.ok) {
      tr.innings.push_back({*o, {}});
      tr.legality.push_back(c1);
      tr.fault = "one";
      tr.verdict = Transcript::Verdict::Win;
      return tr;
    }
    TwoMove t = two.move_fn(window_of(tr.innings, *o, two.window_size), n);
    TwoMove probe = two.move_fn(window_of(tr.innings, *o, two.window_size), n);
    if (!same_move(t, probe)) {
      tr.innings.push_back({*o, t});
      tr.legality.push_back(c1);
      tr.legality.push_back({false, "tactic purity violation"});
      tr.fault = "two";
      tr.verdict = Transcript::Verdict::Lose;
      return tr;
    }
    MoveCheck c2 = legal_two_move(kind, inst, tr.innings, *o, t);
    tr.innings.push_back({*o, t});
    tr.legality.push_back(c1);
    tr.legality.push_back(c2);
    if (!c2.ok) {
      tr.fault = "two";
      tr.verdict = Transcript::Verdict::Lose;
      return tr;
    }
  }
  assert_rule_inclusion(kind, tr.innings);
  tr.verdict = finite_win(tr.innings, cfg.lag, &tr.uncovered) ? Transcript::Verdict::Win
                                                              : Transcript::Verdict::Lose;
  return tr;
}

namespace {

struct Verifier {
  GameKind kind;
  const IdealInstance& inst;
  const Tactic& tactic;
  const VerifyConfig& cfg;
  std::vector<int> chain_depth;  // longest strict menu chain from each member
  std::vector<char> family_ok;
  TacticVerdict out;
  std::vector<Inning> play;

  bool mg() const { return kind == GameKind::MG_family || kind == GameKind::MG_full; }

  int depth_from(int i, std::vector<int>& memo) {
    int& d = memo[static_cast<std::size_t>(i)];
    if (d) return d;
    d = 1;
    for (int j = 0; j < static_cast<int>(cfg.menu.size()); ++j)
      if (cfg.menu[static_cast<std::size_t>(i)].proper_subset_of(cfg.menu[static_cast<std::size_t>(j)]))
        d = std::max(d, 1 + depth_from(j, memo));
    return d;
  }

  void prepare() {
    if (cfg.menu.empty()) throw input_error("verify needs a nonempty menu");
    if (cfg.depth < 1) throw input_error("verify depth must be positive");
    for (const auto& m : cfg.menu)
      if (!m.subset_of(inst.ground_mask())) throw input_error("menu member leaves the ground set");
    if (mg()) {
      chain_depth.assign(cfg.menu.size(), 0);
      std::vector<int> memo(cfg.menu.size(), 0);
      for (int i = 0; i < static_cast<int>(cfg.menu.size()); ++i)
        chain_depth[static_cast<std::size_t>(i)] = depth_from(i, memo);
      if (*std::max_element(chain_depth.begin(), chain_depth.end()) < cfg.depth)
        throw input_error("menu admits no chain of the requested depth");
    }
    if (kind == GameKind::MG_family) {
      family_ok.resize(cfg.menu.size());
      for (std::size_t i = 0; i < cfg.menu.size(); ++i)
        family_ok[i] = in_family(inst, cfg.menu[i]);
    }
  }

  bool candidate_ok(int i) const {
    const AtomSet& m = cfg.menu[static_cast<std::size_t>(i)];
    if (mg()) {
      if (kind == GameKind::MG_family && !family_ok[static_cast<std::size_t>(i)]) return false;
      return play.empty() || play.back().one.proper_subset_of(m);
    }
    return play.empty() || absorbed(kind, play.back()).subset_of(m);
  }

  Transcript defeat(MoveCheck bad_two, AtomSet uncovered) const {
    Transcript tr;
    tr.kind = kind;
    tr.lag = cfg.lag;
    tr.innings = play;
    for (std::size_t i = 0; i < play.size(); ++i) {
      tr.legality.push_back({true, ""});
      bool last = i + 1 == play.size();
      tr.legality.push_back(last && !bad_two.ok ? bad_two : MoveCheck{true, ""});
    }
    tr.verdict = Transcript::Verdict::Lose;
    if (!bad_two.ok) tr.fault = "two";
    tr.uncovered = uncovered;
    return tr;
  }

  // depth-first over menu order; returns the first defeating transcript.
  // a position with no menu extension is a maximal leaf: the play simply
  // stops there and the finite win rule decides it.
  std::optional<Transcript> dfs(int inning) {
    bool extended = false;
    if (inning <= cfg.depth) {
      for (int i = 0; i < static_cast<int>(cfg.menu.size()); ++i) {
        if (!candidate_ok(i)) continue;
        extended = true;
        if (++out.nodes > cfg.node_budget) throw resource_error("verify node budget exceeded");
        const AtomSet& o = cfg.menu[static_cast<std::size_t>(i)];
        TwoMove t = tactic.move_fn(window_of(play, o, tactic.window_size), inning);
        MoveCheck c2 = legal_two_move(kind, inst, play, o, t);
        play.push_back({o, t});
        if (!c2.ok) {
          Transcript tr = defeat(c2, AtomSet{});
          play.pop_back();
          return tr;
        }
        auto d = dfs(inning + 1);
        play.pop_back();
        if (d) return d;
      }
    }
    if (!extended) {
      ++out.leaves;
      AtomSet uncovered;
      if (!finite_win(play, cfg.lag, &uncovered)) return defeat({true, ""}, uncovered);
    }
    return std::nullopt;
  }
};

}  // namespace

TacticVerdict verify_tactic(GameKind kind, const IdealInstance& inst, const Tactic& tactic,
                            const VerifyConfig& cfg) {
  Verifier v{kind, inst, tactic, cfg, {}, {}, {}, {}};
  v.prepare();
  auto d = v.dfs(1);
  v.out.all_wins = !d.has_value();
  v.out.defeat = std::move(d);
  return v.out;
}

bool replay_matches(GameKind kind, const IdealInstance& inst, const Transcript& tr,
                    const Tactic& tactic) {
  std::vector<Inning> sofar;
  for (std::size_t i = 0; i < tr.innings.size(); ++i) {
    const Inning& in = tr.innings[i];
    MoveCheck c1 = legal_one_move(kind, inst, sofar, in.one);
    if (2 * i < tr.legality.size() && c1.ok != tr.legality[2 * i].ok) return false;
    if (!c1.ok) return tr.fault == "one";
    TwoMove t = tactic.move_fn(window_of(sofar, in.one, tactic.window_size),
                               static_cast<int>(i) + 1);
    if (!same_move(t, in.two)) return false;
    MoveCheck c2 = legal_two_move(kind, inst, sofar, in.one, t);
    if (2 * i + 1 < tr.legality.size() && c2.ok != tr.legality[2 * i + 1].ok) return false;
    sofar.push_back(in);
    if (!c2.ok) return tr.fault == "two";
  }
  AtomSet uncovered;
  bool win = finite_win(sofar, tr.lag, &uncovered);
  auto expect = win ? Transcript::Verdict::Win : Transcript::Verdict::Lose;
  return tr.verdict == expect;
}

}  // namespace ig
