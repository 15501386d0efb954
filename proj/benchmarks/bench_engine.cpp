#include <benchmark/benchmark.h>

#include "ckf/catalog.hpp"
#include "ckf/cohomology.hpp"
#include "ckf/obstructions.hpp"
#include "ckf/report.hpp"

namespace {

const ckf::Catalog& catalog() {
  static const ckf::Catalog c = ckf::load_catalog_path(CKF_BENCH_DATA_DIR);
  return c;
}

void BM_GroupPoincare(benchmark::State& state, const char* type) {
  const auto t = ckf::ReductiveType::parse(type);
  for (auto _ : state) benchmark::DoNotOptimize(ckf::poincare_compact_group(t));
}
BENCHMARK_CAPTURE(BM_GroupPoincare, D4, "D4");
BENCHMARK_CAPTURE(BM_GroupPoincare, E6, "E6");
BENCHMARK_CAPTURE(BM_GroupPoincare, E8, "E8");
BENCHMARK_CAPTURE(BM_GroupPoincare, A20, "A20");

void BM_EqualRankQuotient(benchmark::State& state, const char* g, const char* h) {
  const auto G = ckf::ReductiveType::parse(g);
  const auto H = ckf::ReductiveType::parse(h);
  for (auto _ : state) benchmark::DoNotOptimize(ckf::poincare_equal_rank_quotient(G, H));
}
BENCHMARK_CAPTURE(BM_EqualRankQuotient, C4_C2C2, "C4", "C2+C2");
BENCHMARK_CAPTURE(BM_EqualRankQuotient, E8_D8, "E8", "D8");
BENCHMARK_CAPTURE(BM_EqualRankQuotient, E8_T8, "E8", "T8");

void BM_LoadCatalog(benchmark::State& state) {
  const std::string text = ckf::serialize_catalog(catalog());
  for (auto _ : state) benchmark::DoNotOptimize(ckf::load_catalog(text));
}
BENCHMARK(BM_LoadCatalog);

void BM_Classify(benchmark::State& state) {
  static constexpr int kIndex[] = {2};
  for (auto _ : state)
    benchmark::DoNotOptimize(ckf::classify(catalog(), ckf::FamilyFilter::All, kIndex));
}
BENCHMARK(BM_Classify);

} // namespace

BENCHMARK_MAIN();
