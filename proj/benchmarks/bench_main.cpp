#include "milnor/braid.hpp"
#include "milnor/families.hpp"
#include "milnor/move_dsl.hpp"
#include "milnor/roots.hpp"
#include "milnor/search.hpp"
#include "milnor/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace milnor;

void BM_ApplyMove(benchmark::State& state) {
  const Basis b = build_family({Family::T, 7, 3, 2}).basis;
  for (auto _ : state) benchmark::DoNotOptimize(apply_move(b, Move::beta(5)));
}
BENCHMARK(BM_ApplyMove);

void BM_ApplyMoveToGram(benchmark::State& state) {
  const IntMatrix g = build_family({Family::T, 7, 3, 2}).lattice.ref_gram();
  for (auto _ : state) benchmark::DoNotOptimize(apply_move_to_gram(g, Move::beta(5)));
}
BENCHMARK(BM_ApplyMoveToGram);

void BM_TripleOrbit(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_triple_orbit(k));
}
BENCHMARK(BM_TripleOrbit)->Arg(100)->Arg(1000);

void BM_E8PositiveRoots(benchmark::State& state) {
  const FamilySpec t{Family::T, 7, 3, 2};
  std::vector<std::size_t> idx;
  for (std::size_t v : e_subdiagram_vertices(t)) idx.push_back(v - 1);
  const IntMatrix e8 = build_family(t).lattice.ref_gram().submatrix(idx);
  for (auto _ : state) benchmark::DoNotOptimize(positive_roots(e8));
}
BENCHMARK(BM_E8PositiveRoots);

void BM_TToS(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_t_to_s(TsCase::T732));
}
BENCHMARK(BM_TToS);

void BM_SearchScramble(benchmark::State& state) {
  const Basis s = build_family({Family::S, 3, 3, 3}).basis;
  const IntMatrix target = gram_of_basis(apply_sequence(s, parse_moves("a2, b5, g3, a7, b3")));
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(find_sequence({s, target, std::nullopt, depth, {}, SearchMode::GramOnly}));
}
BENCHMARK(BM_SearchScramble)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
