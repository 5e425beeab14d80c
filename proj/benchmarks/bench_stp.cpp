#include <random>

#include <benchmark/benchmark.h>

#include "dimfree/dimfree.hpp"

using namespace dimfree;

namespace {

Mat random_mat(Index m, Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat A(m, n);
  for (Index i = 0; i < A.size(); ++i) A.data()[i] = u(gen);
  return A;
}

// Arg k: A is k×(2k), B is (3k)×k, so every product has to inflate.
void BM_MmStp(benchmark::State& state) {
  const Index k = state.range(0);
  const Mat A = random_mat(k, 2 * k, 1), B = random_mat(3 * k, k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ltimes(A, B));
}
BENCHMARK(BM_MmStp)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_DkStp(benchmark::State& state) {
  const Index k = state.range(0);
  const Mat A = random_mat(k, 2 * k, 3), B = random_mat(3 * k, k, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dk_stp(A, B));
}
BENCHMARK(BM_DkStp)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_PseudoStp(benchmark::State& state) {
  const Index k = state.range(0);
  const Mat A = random_mat(k, 2 * k, 5), B = random_mat(3 * k, k, 6);
  for (auto _ : state) benchmark::DoNotOptimize(pseudo_stp(A, B));
}
BENCHMARK(BM_PseudoStp)->Arg(1)->Arg(2)->Arg(4);

void BM_HatAdd(benchmark::State& state) {
  const Index k = state.range(0);
  const Mat A = random_mat(2 * k, 3 * k, 7), B = random_mat(3 * k, 2 * k, 8);
  for (auto _ : state) benchmark::DoNotOptimize(hat_add(A, B));
}
BENCHMARK(BM_HatAdd)->Arg(1)->Arg(4)->Arg(16);

void BM_CharPoly(benchmark::State& state) {
  const Index m = state.range(0);
  const Mat A = random_mat(m, m + 1, 9);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(A));
}
BENCHMARK(BM_CharPoly)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ExtInvert(benchmark::State& state) {
  const Index m = state.range(0);
  const auto method = state.range(1) ? InvertMethod::LinearSolve : InvertMethod::ClosedForm;
  const ExtMat X{1.0, Mat(0.1 * random_mat(m, m + 1, 10))};
  for (auto _ : state) benchmark::DoNotOptimize(ext_invert(X, method));
}
BENCHMARK(BM_ExtInvert)->ArgsProduct({{2, 4, 8}, {0, 1}});

void BM_ExtExp(benchmark::State& state) {
  const Index m = state.range(0);
  const Mat B = 0.2 * random_mat(m, m + 1, 11);
  for (auto _ : state) benchmark::DoNotOptimize(ext_exp(B));
}
BENCHMARK(BM_ExtExp)->Arg(2)->Arg(4)->Arg(8);

void BM_ReduceVec(benchmark::State& state) {
  const Index k = state.range(0);
  const HVec x = stretch(as_hvec(random_mat(7, 1, 12)), k);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_vec(x));
}
BENCHMARK(BM_ReduceVec)->Arg(4)->Arg(60)->Arg(720);

void BM_SimulateDiscrete(benchmark::State& state) {
  SystemSpec spec;
  spec.structure = Structure::Aleph2;
  spec.M = {random_mat(4, 6, 13)};
  spec.x0 = as_hvec(random_mat(6, 1, 14));
  spec.horizon = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_discrete(spec));
}
BENCHMARK(BM_SimulateDiscrete)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
