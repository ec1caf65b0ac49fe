#include <benchmark/benchmark.h>

#include "positroid/cli.hpp"
#include "positroid/divisor.hpp"
#include "positroid/edge_vectors.hpp"
#include "positroid/network.hpp"
#include "positroid/soliton.hpp"

using namespace positroid;

namespace {

const RunConfig& big_example() {
  static RunConfig rc = example_config("gr492");
  return rc;
}

const RunConfig& small_example() {
  static RunConfig rc = example_config("gr24");
  return rc;
}

}  // namespace

static void BM_BuildNetwork(benchmark::State& state) {
  const auto& rc = big_example();
  for (auto _ : state) {
    LeNetwork net = build_network(rc.tableau);
    benchmark::DoNotOptimize(net.edges.size());
  }
}
BENCHMARK(BM_BuildNetwork);

static void BM_BoundaryMeasurement(benchmark::State& state) {
  const auto& rc = big_example();
  LeNetwork net = build_network(rc.tableau);
  for (auto _ : state) {
    RatMatrix a = boundary_measurement(net);
    benchmark::DoNotOptimize(a.at(0, 0));
  }
}
BENCHMARK(BM_BoundaryMeasurement);

static void BM_BasisChain(benchmark::State& state) {
  const auto& rc = big_example();
  for (auto _ : state) {
    BasisChain chain = basis_chain(rc.tableau);
    benchmark::DoNotOptimize(chain.E.size());
  }
}
BENCHMARK(BM_BasisChain);

static void BM_EdgeVectors(benchmark::State& state) {
  const auto& rc = big_example();
  LeNetwork net = modify_network(build_network(rc.tableau));
  BasisChain chain = basis_chain(rc.tableau);
  for (auto _ : state) {
    EdgeVectorSystem sys = edge_vectors(net, chain);
    benchmark::DoNotOptimize(sys.vec(0));
  }
}
BENCHMARK(BM_EdgeVectors);

static void BM_PathSumOracle(benchmark::State& state) {
  const auto& rc = big_example();
  LeNetwork net = modify_network(build_network(rc.tableau));
  for (auto _ : state) {
    std::vector<Rational> v = path_sum_vector(net, 0);
    benchmark::DoNotOptimize(v.size());
  }
}
BENCHMARK(BM_PathSumOracle);

static void BM_TauEvaluation(benchmark::State& state) {
  const auto& rc = big_example();
  SolitonData data = make_soliton_data(rc.tableau, rc.phases);
  TauMinorSum tau(data);
  Times tm{0.37, -0.21, 0.11, {}};
  for (auto _ : state) {
    auto ev = tau.eval<double>(tm);
    benchmark::DoNotOptimize(ev.value());
  }
}
BENCHMARK(BM_TauEvaluation);

static void BM_DivisorPipeline(benchmark::State& state) {
  const auto& rc = small_example();
  LeNetwork net = modify_network(build_network(rc.tableau));
  BasisChain chain = basis_chain(rc.tableau);
  EdgeVectorSystem sys = edge_vectors(net, chain);
  OvalMap om = trace_ovals(net);
  SolitonData data = make_soliton_data(rc.tableau, rc.phases);
  for (auto _ : state) {
    auto t0 = choose_t0<double>(data, net, sys, true);
    auto cfg = assemble_divisors<double>(data, net, sys, om, t0.t0);
    benchmark::DoNotOptimize(cfg.kp.size());
  }
}
BENCHMARK(BM_DivisorPipeline);

BENCHMARK_MAIN();
