#include <benchmark/benchmark.h>

#include "idealgames/bmgame.hpp"
#include "idealgames/cantor.hpp"
#include "idealgames/fixtures.hpp"
#include "idealgames/game.hpp"
#include "idealgames/pathrel.hpp"
#include "idealgames/tactic.hpp"

static void BM_subset_decide(benchmark::State& state) {
  std::vector<ig::BlockPairCase> pairs = ig::block_pairs(32, 7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& pc : pairs) benchmark::DoNotOptimize(ig::subset_decide(pc.a, pc.b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(pairs.size()));
}

static void BM_brute_inclusion_table(benchmark::State& state) {
  std::vector<ig::BlockPairCase> pairs = ig::block_pairs(8, 7, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& pc : pairs) benchmark::DoNotOptimize(ig::brute_inclusion_table(pc.a, pc.b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(pairs.size()));
}

static void BM_verify_window_tactic(benchmark::State& state) {
  ig::WindowFixture fx = ig::window_fixture(1);
  ig::Tactic tac = ig::build_mg_tactic(*fx.inst.family, fx.dec, fx.col, 2);
  ig::VerifyConfig cfg;
  cfg.depth = static_cast<int>(state.range(0));
  cfg.lag = 3;
  cfg.menu = fx.mg_menu;
  for (auto _ : state)
    benchmark::DoNotOptimize(ig::verify_tactic(ig::GameKind::MG_family, fx.inst, tac, cfg));
}

static void BM_find_bounded_path(benchmark::State& state) {
  int nodes = static_cast<int>(state.range(0));
  ig::FinitePoset poset = ig::chain_poset(nodes);
  ig::Coloring col = ig::uniform_pair_coloring(nodes);
  for (auto _ : state)
    benchmark::DoNotOptimize(ig::find_bounded_path(poset, col, nodes, 2));
}

static void BM_verify_cone_fold(benchmark::State& state) {
  ig::RefinementScheme scheme = ig::cone_scheme();
  ig::BmConeTactic markov;
  markov.window_size = 2;
  markov.markov = true;
  markov.name = "descend-by-inning";
  markov.move_fn = [scheme](const std::vector<ig::Word>& win, int inning) {
    return scheme.j_map(win.back(), inning);
  };
  ig::BmConeTactic plain = ig::markov_to_plain(markov, scheme, 14);
  for (auto _ : state)
    benchmark::DoNotOptimize(ig::bm_verify(ig::ConeSpace{10}, plain, static_cast<int>(state.range(0))));
}

BENCHMARK(BM_subset_decide)->Arg(12)->Arg(18)->Arg(24);
BENCHMARK(BM_brute_inclusion_table)->Arg(12)->Arg(18)->Arg(24);
BENCHMARK(BM_verify_window_tactic)->DenseRange(3, 6);
BENCHMARK(BM_find_bounded_path)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_verify_cone_fold)->DenseRange(4, 6);

BENCHMARK_MAIN();
