#include <benchmark/benchmark.h>

#include "tdga/attack.hpp"
#include "tdga/circulant.hpp"
#include "tdga/protocol.hpp"

namespace {

using namespace tdga;

PublicParams invertible_params(std::size_t n) {
  for (std::uint64_t seed = 1;; ++seed) {
    auto p = gen_params(n, n, seed);
    const auto& f = p.algebra.field();
    const FieldVector c(p.h.avec().begin(), p.h.avec().end());
    const FieldVector d(p.h.bvec().begin(), p.h.bvec().end());
    if (circ_is_invertible(Circulant(f, c)) && circ_is_invertible(Circulant(f, d))) return p;
  }
}

void BM_AlgMul(benchmark::State& state) {
  const auto p = gen_params(state.range(0), state.range(0), 1);
  Rng rng(2);
  const auto u = sample_algebra_element(p.algebra, rng);
  const auto v = sample_algebra_element(p.algebra, rng);
  for (auto _ : state) benchmark::DoNotOptimize(alg_mul(u, v));
}
BENCHMARK(BM_AlgMul)->Arg(19)->Arg(41);

void BM_CircSolve(benchmark::State& state) {
  const auto p = invertible_params(state.range(0));
  const auto& f = p.algebra.field();
  const Circulant c(f, FieldVector(p.h.avec().begin(), p.h.avec().end()));
  const FieldVector w(p.h.bvec().begin(), p.h.bvec().end());
  for (auto _ : state) benchmark::DoNotOptimize(circ_solve(c, w));
}
BENCHMARK(BM_CircSolve)->Arg(19)->Arg(41);

void BM_DpdAttack(benchmark::State& state) {
  const auto p = invertible_params(state.range(0));
  Rng rng(3);
  const auto sk = keygen(p, rng);
  const DPDInstance inst(p, compute_pk(sk, p).pk);
  for (auto _ : state) benchmark::DoNotOptimize(dpd_attack(inst, rng));
}
BENCHMARK(BM_DpdAttack)->Arg(19)->Arg(41);

void BM_KeyExchange(benchmark::State& state) {
  const auto p = gen_params(state.range(0), state.range(0), 4);
  Rng rng(5);
  for (auto _ : state) {
    const auto a = keygen(p, rng);
    const auto b = keygen(p, rng);
    benchmark::DoNotOptimize(derive_key(a, compute_pk(b, p), p));
  }
}
BENCHMARK(BM_KeyExchange)->Arg(19)->Arg(41);

}  // namespace
BENCHMARK_MAIN();
