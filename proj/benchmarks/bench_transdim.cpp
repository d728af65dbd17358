#include "transdim/dsl.hpp"
#include "transdim/engine.hpp"
#include "transdim/finite_metric.hpp"
#include "transdim/ordinal_laws.hpp"
#include "transdim/phi.hpp"
#include "transdim/smirnov.hpp"

#include <benchmark/benchmark.h>

using namespace transdim;

namespace {

constexpr const char* kExpr =
    "alex(excise(prod(S(w^2+w*2+3), I^2), cantor(1/2)), cunion(C(w_1+w), Dsub(w_1)), "
    "lfunion(aug(S(w+1)), sub(S(w^w)), ...), ...)";

void BM_OrdinalAdd(benchmark::State& state) {
  OrdinalSampler s(1);
  std::vector<Ordinal> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(s.any());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(add(xs[i % 256], xs[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_OrdinalAdd);

void BM_OrdinalCompare(benchmark::State& state) {
  OrdinalSampler s(2);
  std::vector<Ordinal> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(s.any());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare(xs[i % 256], xs[(i + 7) % 256]));
    ++i;
  }
}
BENCHMARK(BM_OrdinalCompare);

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse(kExpr));
}
BENCHMARK(BM_Parse);

void BM_Evaluate(benchmark::State& state) {
  SpaceRef e = parse(kExpr).expr();
  BoundEngine engine;
  for (auto _ : state) benchmark::DoNotOptimize(engine.evaluate(*e));
}
BENCHMARK(BM_Evaluate);

void BM_MetricCheckSmirnovOmega(benchmark::State& state) {
  TruncationOptions o;
  o.blocks = static_cast<std::size_t>(state.range(0));
  FiniteMetricSpace m = realize(truncate_smirnov(Ordinal::omega(), o));
  for (auto _ : state) benchmark::DoNotOptimize(check_metric_axioms(m));
  state.counters["points"] = static_cast<double>(m.size());
}
BENCHMARK(BM_MetricCheckSmirnovOmega)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PhiEndpoints(benchmark::State& state) {
  CantorSet c = fat_cantor(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_endpoint_report(c));
}
BENCHMARK(BM_PhiEndpoints)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PhiOmega(benchmark::State& state) {
  CantorSet c = fat_cantor(8);
  for (auto _ : state) {
    PhiMap m = build_phi_alpha(Ordinal::omega(), c);
    benchmark::DoNotOptimize(phi_alpha_report(m, c));
  }
}
BENCHMARK(BM_PhiOmega)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
