#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wdrd/scheme.hpp"

using namespace wdrd;

namespace {

Digraph cay_z(int n, std::vector<int> set) {
  const FiniteGroup g = make_cyclic(n);
  return cayley_digraph(g, make_connection_set(g, std::move(set)));
}

Digraph cay_q8() {
  const FiniteGroup q8 = make_quaternion();
  return cayley_digraph(q8, make_connection_set(q8, {2, 4, 6}));
}

Digraph directed_cycle(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return make_digraph(n, arcs);
}

struct Built {
  Digraph d;
  TwoWayProfile profile;
  RelationPartition partition;
};

Built build(Digraph d) {
  TwoWayProfile p = two_way_profile(d);
  RelationPartition part = relation_partition(p);
  return {std::move(d), std::move(p), std::move(part)};
}

std::vector<TwoWayPair> labels_of(const std::vector<std::pair<int, int>>& v) {
  std::vector<TwoWayPair> out;
  for (auto [a, b] : v) out.push_back({a, b});
  return out;
}

}  // namespace

TEST_CASE("relation partition labels") {
  const Built z7 = build(cay_z(7, {1, 2, 4}));
  CHECK(z7.partition.labels == labels_of({{0, 0}, {1, 2}, {2, 1}}));
  CHECK(z7.partition.labels[0] == TwoWayPair{0, 0});

  const Built q8 = build(cay_q8());
  CHECK(q8.partition.labels == labels_of({{0, 0}, {1, 2}, {2, 1}, {2, 2}}));

  const Built c3 = build(directed_cycle(3));
  CHECK(c3.partition.labels == labels_of({{0, 0}, {1, 2}, {2, 1}}));

  // closure under reversal and consistency with the profile
  const Built z13 = build(cay_z(13, {1, 3, 9}));
  for (int i = 0; i < z13.partition.rank(); ++i) CHECK(z13.partition.dual(i) >= 0);
  for (int x = 0; x < 13; ++x)
    for (int y = 0; y < 13; ++y)
      CHECK(z13.partition.labels[z13.partition.rel(x, y)] == z13.profile.at(x, y));
}

TEST_CASE("check_wdrd on the classified examples") {
  const Built z7 = build(cay_z(7, {1, 2, 4}));
  const WdrdReport r7 = check_wdrd(z7.d, z7.profile, z7.partition);
  CHECK(r7.is_wdrd);
  CHECK(r7.is_commutative == true);
  CHECK_FALSE(r7.witness.has_value());

  const Built q8 = build(cay_q8());
  const WdrdReport r8 = check_wdrd(q8.d, q8.profile, q8.partition);
  CHECK(r8.is_wdrd);
  CHECK(r8.is_commutative == true);
  CHECK(r8.thinness == ThinClass::neither);
  CHECK(r8.thinness_with_diagonal == ThinClass::neither);

  const Built c4 = build(directed_cycle(4));
  const WdrdReport r4 = check_wdrd(c4.d, c4.profile, c4.partition);
  CHECK(r4.is_wdrd);
  CHECK(r4.thinness == ThinClass::thin);
  CHECK(r4.thinness_with_diagonal == ThinClass::thin);
  CHECK(r4.conventions_agree);
}

TEST_CASE("thinness conventions can disagree and both are reported") {
  // Oracle: compute both maxima from recounted intersection numbers.
  const Built z7 = build(cay_z(7, {1, 2, 4}));
  const auto fw = oracle::floyd_warshall(z7.d);
  long long max_all = 0, max_off = 0;
  for (int x = 0; x < 7; ++x) {
    for (int y = 0; y < 7; ++y) {
      for (const auto& [ij, c] : oracle::pair_counts(fw, x, y)) {
        max_all = std::max(max_all, c);
        if (x != y) max_off = std::max(max_off, c);
      }
    }
  }
  CHECK(max_off == 2);
  CHECK(max_all == 3);

  const WdrdReport r = check_wdrd(z7.d, z7.profile, z7.partition);
  CHECK(r.thinness == ThinClass::quasi_thin);
  CHECK(r.thinness_with_diagonal == ThinClass::neither);
  CHECK_FALSE(r.conventions_agree);
}

TEST_CASE("check_wdrd produces a verified witness on a non-WDRD digraph") {
  std::mt19937 rng(4242);
  int tested = 0;
  while (tested < 5) {
    const Digraph d = oracle::random_digraph(rng, 8, 0.3);
    if (!is_strongly_connected(d)) continue;
    const Built b = build(d);
    const WdrdReport r = check_wdrd(b.d, b.profile, b.partition);
    if (r.is_wdrd) continue;  // rare at this size, skip
    ++tested;
    REQUIRE(r.witness.has_value());
    const WdrdWitness& w = *r.witness;
    CHECK(b.profile.at(w.x1, w.y1) == w.label);
    CHECK(b.profile.at(w.x2, w.y2) == w.label);
    const auto fw = oracle::floyd_warshall(d);
    auto c1 = oracle::pair_counts(fw, w.x1, w.y1);
    auto c2 = oracle::pair_counts(fw, w.x2, w.y2);
    const auto key = std::make_pair(std::make_pair(w.i.forward, w.i.backward),
                                    std::make_pair(w.j.forward, w.j.backward));
    CHECK(c1[key] == w.count1);
    CHECK(c2[key] == w.count2);
    CHECK(w.count1 != w.count2);
    CHECK_FALSE(r.is_commutative.has_value());
    CHECK_FALSE(r.thinness.has_value());
  }
}

TEST_CASE("intersection tensor entries match the classified parameters") {
  const Built z13 = build(cay_z(13, {1, 3, 9}));
  const SchemeData s13 = intersection_tensor(z13.d, z13.profile, z13.partition);
  const int h23 = z13.partition.index_of({2, 3});
  const int i12 = z13.partition.index_of({1, 2});
  REQUIRE(h23 >= 0);
  REQUIRE(i12 >= 0);
  CHECK(s13.p(h23, i12, i12) == 1);
  CHECK(s13.valencies[h23] == 3);

  const Built q8 = build(cay_q8());
  const SchemeData s8 = intersection_tensor(q8.d, q8.profile, q8.partition);
  const int h22 = q8.partition.index_of({2, 2});
  const int j12 = q8.partition.index_of({1, 2});
  CHECK(s8.p(h22, j12, j12) == 3);
  CHECK(s8.valencies[h22] == 1);

  // p[h][(0,0)][j] = delta_{h,j}
  for (int h = 0; h < s13.rank(); ++h)
    for (int j = 0; j < s13.rank(); ++j) CHECK(s13.p(h, 0, j) == (h == j ? 1 : 0));

  // valency sum and pairing invariants
  for (const auto& b : {z13, q8}) {
    const SchemeData s = intersection_tensor(b.d, b.profile, b.partition);
    long long total = 0;
    for (int i = 0; i < s.rank(); ++i) {
      total += s.valencies[i];
      CHECK(s.valencies[i] == s.valencies[b.partition.dual(i)]);
      for (int h = 0; h < s.rank(); ++h)
        for (int j = 0; j < s.rank(); ++j)
          CHECK(s.p(h, i, j) <= std::min(s.valencies[i], s.valencies[j]));
    }
    CHECK(total == b.d.n);
    CHECK(s.valencies[0] == 1);
  }
}

TEST_CASE("tensor requires a verified WDRD") {
  std::mt19937 rng(515);
  while (true) {
    const Digraph d = oracle::random_digraph(rng, 8, 0.3);
    if (!is_strongly_connected(d)) continue;
    const Built b = build(d);
    if (check_wdrd(b.d, b.profile, b.partition).is_wdrd) continue;
    CHECK_THROWS_AS(intersection_tensor(b.d, b.profile, b.partition), Error);
    break;
  }
}

TEST_CASE("brute-force tensor equivalence on small corpus digraphs") {
  std::vector<Digraph> corpus = {cay_z(7, {1, 2, 4}), cay_q8(), directed_cycle(4),
                                 directed_cycle(7), cay_z(9, {1, 4, 7}),
                                 cay_z(10, {1, 2})};
  std::mt19937 rng(88);
  while (corpus.size() < 10) {
    Digraph d = oracle::random_digraph(rng, 9, 0.35);
    if (is_strongly_connected(d)) corpus.push_back(std::move(d));
  }
  for (const Digraph& d : corpus) {
    const Built b = build(d);
    const WdrdReport r = check_wdrd(b.d, b.profile, b.partition);
    if (!r.is_wdrd) continue;
    const SchemeData s = intersection_tensor(b.d, b.profile, b.partition, r);
    const auto fw = oracle::floyd_warshall(d);
    // every ordered pair recounted independently must match the stored slice
    for (int x = 0; x < d.n; ++x) {
      for (int y = 0; y < d.n; ++y) {
        const int h = b.partition.rel(x, y);
        auto counts = oracle::pair_counts(fw, x, y);
        for (int i = 0; i < s.rank(); ++i) {
          for (int j = 0; j < s.rank(); ++j) {
            const auto li = b.partition.labels[i];
            const auto lj = b.partition.labels[j];
            const auto key = std::make_pair(std::make_pair(li.forward, li.backward),
                                            std::make_pair(lj.forward, lj.backward));
            const auto it = counts.find(key);
            const long long expected = it == counts.end() ? 0 : it->second;
            CHECK(s.p(h, i, j) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("reversal symmetry p[h*][j*][i*] == p[h][i][j]") {
  for (const Digraph& d : {cay_z(13, {1, 3, 9}), cay_q8()}) {
    const Built b = build(d);
    const SchemeData s = intersection_tensor(b.d, b.profile, b.partition);
    for (int h = 0; h < s.rank(); ++h)
      for (int i = 0; i < s.rank(); ++i)
        for (int j = 0; j < s.rank(); ++j)
          CHECK(s.p(h, i, j) ==
                s.p(b.partition.dual(h), b.partition.dual(j), b.partition.dual(i)));
  }
}

TEST_CASE("fast mode equals full mode on every acceptance instance") {
  std::vector<Digraph> instances = {cay_z(7, {1, 2, 4}), cay_z(13, {1, 3, 9}), cay_q8()};
  {
    const FiniteGroup z3 = make_cyclic(3);
    const FiniteGroup z27 = make_direct_product(make_direct_product(z3, z3), z3);
    instances.push_back(cayley_digraph(z27, make_connection_set(z27, {9, 3, 1})));
  }
  for (int g = 3; g <= 10; ++g) {
    const FiniteGroup grp = make_direct_product(make_cyclic(g), make_cyclic(3));
    instances.push_back(cayley_digraph(grp, make_connection_set(grp, {3, 4, 5})));
  }
  for (int n : {3, 4, 5, 7, 8}) {
    const FiniteGroup grp = make_direct_product(make_cyclic(n), make_cyclic(n));
    instances.push_back(
        cayley_digraph(grp, make_connection_set(grp, {n, 1, (n - 1) * n + n - 1})));
  }
  for (int n = 2; n <= 6; ++n) {
    const FiniteGroup grp = make_direct_product(make_cyclic(n), make_cyclic(3 * n));
    instances.push_back(cayley_digraph(
        grp, make_connection_set(grp, {1, 3 * n + 1, (n - 1) * 3 * n + 3 * n - 2})));
  }
  for (const Digraph& d : instances) {
    const Built b = build(d);
    const WdrdReport full = check_wdrd(b.d, b.profile, b.partition, CheckMode::full);
    const WdrdReport fast = check_wdrd(b.d, b.profile, b.partition, CheckMode::transitive_fast);
    CHECK(full.is_wdrd == fast.is_wdrd);
    CHECK(full.is_commutative == fast.is_commutative);
    CHECK(full.thinness == fast.thinness);
    CHECK(full.thinness_with_diagonal == fast.thinness_with_diagonal);
    CHECK(full.conventions_agree == fast.conventions_agree);
  }
}

TEST_CASE("fast mode refuses digraphs missing a relation at vertex 0") {
  // 4-cycle with the chord 1->3: the label (1,2) occurs at (1,3) only
  const Digraph d = make_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
  const Built b = build(d);
  bool missing = false;
  for (int h = 0; h < b.partition.rank(); ++h) {
    bool at_zero = false;
    for (int y = 0; y < d.n; ++y) at_zero |= b.partition.rel(0, y) == h;
    missing |= !at_zero;
  }
  REQUIRE(missing);
  CHECK_THROWS_AS(check_wdrd(b.d, b.profile, b.partition, CheckMode::transitive_fast), Error);
}

TEST_CASE("relation products") {
  const Built z7 = build(cay_z(7, {1, 2, 4}));
  const SchemeData s7 = intersection_tensor(z7.d, z7.profile, z7.partition);
  const int i12 = z7.partition.index_of({1, 2});
  const int i21 = z7.partition.index_of({2, 1});
  CHECK(relation_product(s7, {i12}, {i12}) == std::set<int>{i12, i21});
  // identity relation acts as a unit
  CHECK(relation_product(s7, {0}, {i12, i21}) == std::set<int>{i12, i21});

  const Built q8 = build(cay_q8());
  const SchemeData s8 = intersection_tensor(q8.d, q8.profile, q8.partition);
  const int h22 = q8.partition.index_of({2, 2});
  const int j12 = q8.partition.index_of({1, 2});
  const int j21 = q8.partition.index_of({2, 1});
  CHECK(relation_product(s8, {h22}, {j12}) == std::set<int>{j21});
}

TEST_CASE("the six scheme identities hold and corruption is caught") {
  for (const Digraph& d : {cay_z(7, {1, 2, 4}), cay_q8(), cay_z(13, {1, 3, 9})}) {
    const Built b = build(d);
    SchemeData s = intersection_tensor(b.d, b.profile, b.partition);
    const IdentityReport ok = verify_scheme_identities(s);
    CHECK(ok.all_pass());
    for (const auto& c : ok.checks) CHECK(c.witness.empty());

    // corrupt one entry: the row-sum identity (iv) must fail with a witness
    s.tensor[s.tensor.size() / 2] += 1;
    const IdentityReport bad = verify_scheme_identities(s);
    CHECK_FALSE(bad.all_pass());
    CHECK_FALSE(bad.checks[3].pass);
    CHECK_FALSE(bad.checks[3].witness.empty());
  }
}
