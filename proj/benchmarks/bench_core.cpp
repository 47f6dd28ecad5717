#include <benchmark/benchmark.h>

#include "plie/catalog.hpp"
#include "plie/classify.hpp"
#include "plie/numcheck.hpp"

namespace {

using namespace plie;

void BM_FullReport(benchmark::State& state) {
  const auto& entries = catalog();
  const Triple& t = entries[static_cast<std::size_t>(state.range(0)) % entries.size()].triple;
  state.SetLabel(entries[static_cast<std::size_t>(state.range(0)) % entries.size()].name);
  for (auto _ : state) benchmark::DoNotOptimize(full_report(t));
}
BENCHMARK(BM_FullReport)->DenseRange(0, 15, 5);

void BM_CatalogVerifyAll(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& e : catalog()) benchmark::DoNotOptimize(verify_against(e));
}
BENCHMARK(BM_CatalogVerifyAll);

void BM_CocycleSpace(benchmark::State& state) {
  const LieAlgebra alg = state.range(0) == 3 ? milnor_dim3(1) : milnor_dim4();
  const Metric metric = Metric::identity(alg.dim());
  const ConstraintFlags flags = ConstraintFlags::parse("cocycle,flat");
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_space(alg, metric, flags));
}
BENCHMARK(BM_CocycleSpace)->Arg(3)->Arg(4);

void BM_QuadraticConstraintsDim4(benchmark::State& state) {
  const CocycleSpace s = cocycle_space(milnor_dim4(), Metric::identity(4), ConstraintFlags::parse("cocycle,flat"));
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_constraints(s));
}
BENCHMARK(BM_QuadraticConstraintsDim4);

// d on a generic 2-form over the Milnor algebra with one s-direction and r planes.
void BM_CeDifferential(benchmark::State& state) {
  std::vector<Vector> u;
  for (int j = 0; j < state.range(0); ++j) u.push_back({Rational(j + 1)});
  const LieAlgebra alg = milnor_from_vectors(u);
  KVector w(alg.dim(), 2, Space::Dual);
  for (const auto& idx : combinations(alg.dim(), 2)) w.add_term(idx, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(ce_differential(alg, w));
}
BENCHMARK(BM_CeDifferential)->DenseRange(1, 3);

void BM_VolumeNumeric(benchmark::State& state) {
  const auto& model = numeric::find_model("dim4-nonunimodular");
  for (auto _ : state)
    benchmark::DoNotOptimize(numeric::check_volume_condition(model, static_cast<int>(state.range(0)), {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VolumeNumeric)->Arg(100)->Arg(1000);

void BM_Multiplicativity(benchmark::State& state) {
  const auto& model = numeric::find_model("dim4-nonunimodular");
  for (auto _ : state) benchmark::DoNotOptimize(numeric::check_multiplicativity(model, 100, {}));
}
BENCHMARK(BM_Multiplicativity);

}  // namespace

BENCHMARK_MAIN();
