#include "cpg/abelian.hpp"
#include "cpg/classify.hpp"
#include "cpg/coset.hpp"
#include "cpg/data_dir.hpp"
#include "cpg/ledger.hpp"
#include "cpg/stargraph.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cpg;

void BM_SmithNormalForm(benchmark::State& state) {
  const long n = state.range(0);
  const IntMatrix m = relation_matrix(n, 1, n / 2 - 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(12)->Arg(24)->Arg(48);

void BM_Determinant(benchmark::State& state) {
  const IntMatrix m = relation_matrix(state.range(0), 1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(24)->Arg(48);

void BM_ToddCoxeter(benchmark::State& state) {
  const FinitePresentation p = cyclic_presentation(state.range(0), 1, 0);
  const auto strategy = state.range(1) == 0 ? Strategy::HLT : Strategy::Felsch;
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, 10000, strategy));
}
BENCHMARK(BM_ToddCoxeter)->Args({5, 0})->Args({5, 1})->Args({7, 0})->Args({7, 1})->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    for (long k = 0; k < n; ++k) {
      for (long l = 0; l < n; ++l) benchmark::DoNotOptimize(classify(n, k, l));
    }
  }
}
BENCHMARK(BM_Classify)->Arg(24)->Arg(60);

void BM_Labels(benchmark::State& state) {
  LabelQuery query;
  query.variant = state.range(0) == 0 ? GraphVariant::FigV : GraphVariant::FigVi;
  query.max_degree = static_cast<std::size_t>(state.range(1));
  const StarGraph graph = load_variant(query.variant, data_dir());
  for (const StarEdge& e : graph.edges()) query.interior.insert(e.label);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_labels(graph, query));
}
BENCHMARK(BM_Labels)->Args({0, 6})->Args({1, 6})->Args({0, 8})->Unit(benchmark::kMillisecond);

void BM_LedgerReplay(benchmark::State& state) {
  const std::vector<Assertion> ledger = load_ledger(data_dir() / "ledger" / "ledger.json");
  for (auto _ : state) benchmark::DoNotOptimize(run_ledger(ledger));
}
BENCHMARK(BM_LedgerReplay)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
