// Microbenchmarks for the hot paths: the closed-form endpoint against the
// materialized walk, the trig kernel, Koblitz embedding and one full
// encrypt+decrypt cycle.

#include <benchmark/benchmark.h>

#include "dragoncrypto/bench.hpp"
#include "dragoncrypto/dragon.hpp"
#include "dragoncrypto/pipeline.hpp"

namespace dc = dragoncrypto;

namespace {

dc::PrivateKey bench_key() {
  dc::KeygenOptions options;
  options.bits = 24;
  options.iterations = 15;
  options.size = 1;
  options.angle_deg = 30;
  options.precision = 10;
  options.d = 100;
  options.mode = dc::KeyMode::kPerCharacter;
  options.seed = 1;
  return dc::generate_key(options);
}

void BM_ClosedFormEndpoint(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const dc::PlanePoint start{dc::FixedPoint::from_integer(9, 10),
                             dc::FixedPoint::from_integer(16, 10)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dc::dragon::endpoint(start, 1, 30, n, 10));
  }
}
BENCHMARK(BM_ClosedFormEndpoint)->Arg(15)->Arg(26)->Arg(64);

void BM_TurtleEndpoint(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const dc::PlanePoint start{dc::FixedPoint::from_integer(9, 10),
                             dc::FixedPoint::from_integer(16, 10)};
  for (auto _ : state) {
    dc::PlanePoint last = start;
    dc::dragon::trace_walk(start, 1, 30, n,
                           [&last](const dc::PlanePoint& p) { last = p; });
    benchmark::DoNotOptimize(last);
  }
}
BENCHMARK(BM_TurtleEndpoint)->Arg(10)->Arg(15)->Arg(20);

void BM_SinCos(benchmark::State& state) {
  const auto scale = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dc::sin_cos_deg(29, scale));
  }
}
BENCHMARK(BM_SinCos)->Arg(10)->Arg(50)->Arg(500);

void BM_KoblitzEncode(benchmark::State& state) {
  const auto key = bench_key();
  const auto params = dc::codec::validate_key(key);
  dc::Bigint m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dc::koblitz::encode(m, params, key.d));
    m = m % 65535 + 1;
  }
}
BENCHMARK(BM_KoblitzEncode);

void BM_EncryptDecryptCycle(benchmark::State& state) {
  const auto key = bench_key();
  std::mt19937_64 rng(7);
  const std::u32string text = dc::bench::random_keyboard_text(
      static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    const auto ct = dc::encrypt_text(key, text);
    benchmark::DoNotOptimize(dc::decrypt_text(key, ct));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_EncryptDecryptCycle)->Arg(26)->Arg(1066);

}  // namespace

BENCHMARK_MAIN();
