#include <benchmark/benchmark.h>

#include "goodfilt/chars.hpp"
#include "goodfilt/jantzen.hpp"
#include "goodfilt/rootsys.hpp"
#include "goodfilt/verifier.hpp"

namespace {

using goodfilt::rootsys::build;
using goodfilt::rootsys::TypeLabel;
using goodfilt::rootsys::Weight;
namespace chars = goodfilt::chars;
namespace jantzen = goodfilt::jantzen;
namespace verifier = goodfilt::verifier;

void BM_FreudenthalA3(benchmark::State& state) {
  auto rs = build(TypeLabel::A, 3);
  Weight lam{3, 3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(chars::freudenthal(rs, lam));
}
BENCHMARK(BM_FreudenthalA3);

void BM_FreudenthalG2(benchmark::State& state) {
  auto rs = build(TypeLabel::G, 2);
  Weight lam{3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(chars::freudenthal(rs, lam));
}
BENCHMARK(BM_FreudenthalG2);

// clear_caches keeps these from measuring the memo instead of the work.
void BM_SumFormulaG2(benchmark::State& state) {
  auto rs = build(TypeLabel::G, 2);
  Weight lam{3, 3};
  for (auto _ : state) {
    jantzen::clear_caches();
    benchmark::DoNotOptimize(jantzen::jsf(rs, 7, lam));
  }
}
BENCHMARK(BM_SumFormulaG2);

void BM_VerifyRankB2(benchmark::State& state) {
  auto rs = build(TypeLabel::B, 2);
  for (auto _ : state) {
    jantzen::clear_caches();
    benchmark::DoNotOptimize(verifier::verify_rank(rs, 5));
  }
}
BENCHMARK(BM_VerifyRankB2);

}  // namespace

BENCHMARK_MAIN();
