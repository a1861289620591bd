#include <benchmark/benchmark.h>

#include "wdrd/classify.hpp"
#include "wdrd/families.hpp"
#include "wdrd/scheme.hpp"

using namespace wdrd;

namespace {

const Digraph& viii6() {
  static Digraph d = build_family({FamilyTag::viii, {}, 6});  // 108 vertices
  return d;
}

void BM_TwoWayProfile(benchmark::State& state) {
  const Digraph& d = viii6();
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_way_profile(d));
  }
}
BENCHMARK(BM_TwoWayProfile);

void BM_CheckWdrdFull(benchmark::State& state) {
  const Digraph& d = viii6();
  const TwoWayProfile profile = two_way_profile(d);
  const RelationPartition partition = relation_partition(profile);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_wdrd(d, profile, partition));
  }
}
BENCHMARK(BM_CheckWdrdFull);

void BM_SchemeIdentities(benchmark::State& state) {
  const Digraph& d = viii6();
  const TwoWayProfile profile = two_way_profile(d);
  const RelationPartition partition = relation_partition(profile);
  const SchemeData scheme = intersection_tensor(d, profile, partition);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_scheme_identities(scheme));
  }
}
BENCHMARK(BM_SchemeIdentities);

void BM_CanonicalCertificateSporadic(benchmark::State& state) {
  const Digraph d = sporadic18_search();
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_certificate(d));
  }
}
BENCHMARK(BM_CanonicalCertificateSporadic);

void BM_SporadicSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sporadic18_search());
  }
}
BENCHMARK(BM_SporadicSearch);

void BM_EnumerateOrder13(benchmark::State& state) {
  GroupCatalog catalog;
  catalog.by_order[13].push_back(make_cyclic(13));
  catalog.complete_orders.insert(13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_cayley(catalog, 13));
  }
}
BENCHMARK(BM_EnumerateOrder13);

}  // namespace

BENCHMARK_MAIN();
