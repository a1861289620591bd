#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "wdrd/families.hpp"
#include "wdrd/scheme.hpp"

using namespace wdrd;

namespace {

FamilySpec spec_i{FamilyTag::i, {}, {}};
FamilySpec spec_vi(int g) { return {FamilyTag::vi, g, {}}; }
FamilySpec spec_vii(int n) { return {FamilyTag::vii, {}, n}; }
FamilySpec spec_viii(int n) { return {FamilyTag::viii, {}, n}; }

}  // namespace

TEST_CASE("family tags parse") {
  CHECK(parse_family_tag("vi") == FamilyTag::vi);
  CHECK(parse_family_tag("VIII") == FamilyTag::viii);
  CHECK_FALSE(parse_family_tag("ix").has_value());
  CHECK(FamilySpec{FamilyTag::vi, 4, {}}.describe() == "vi g=4");
}

TEST_CASE("family constructions") {
  const Digraph d1 = build_family(spec_i);
  CHECK(d1.n == 7);
  CHECK(d1.out[0] == std::vector<int>{1, 2, 4});

  const Digraph d2 = build_family({FamilyTag::ii, {}, {}});
  CHECK(d2.n == 8);
  CHECK(d2.out[0] == std::vector<int>{2, 4, 6});  // i, j, k

  const Digraph d5 = build_family({FamilyTag::v, {}, {}});
  CHECK(d5.n == 27);
  CHECK(d5.out[0] == std::vector<int>{1, 3, 9});

  const Digraph d6 = build_family(spec_vi(3));
  CHECK(d6.n == 9);
  CHECK(girth(d6) == 3);

  // family viii at n=2 is literally Cay(Z2 x Z6, {(0,1),(1,1),(1,4)})
  const Digraph d8 = build_family(spec_viii(2));
  const FiniteGroup z2z6 = make_direct_product(make_cyclic(2), make_cyclic(6));
  const Digraph ref = cayley_digraph(z2z6, make_connection_set(z2z6, {1, 7, 10}));
  CHECK(d8.out == ref.out);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(build_family(spec_vi(2)), Error);
  CHECK_THROWS_AS(build_family(spec_vii(6)), Error);   // 6 in 3Z \ {3}
  CHECK_THROWS_AS(build_family(spec_vii(9)), Error);
  CHECK_THROWS_AS(build_family(spec_vii(1)), Error);
  CHECK_THROWS_AS(build_family(spec_viii(1)), Error);
  CHECK_THROWS_AS(build_family({FamilyTag::i, 3, {}}), Error);
  CHECK_NOTHROW(build_family(spec_vii(3)));
  CHECK_NOTHROW(build_family(spec_vii(2)));  // buildable, flagged by verify_family
  try {
    build_family(spec_vii(6));
  } catch (const Error& e) {
    CHECK(e.code() == errc::parameter_out_of_range);
    CHECK(std::string(e.what()).find("3Z") != std::string::npos);
  }
}

TEST_CASE("family vi has 3g vertices and girth g") {
  for (int g = 3; g <= 10; ++g) {
    const Digraph d = build_family(spec_vi(g));
    CHECK(d.n == 3 * g);
    CHECK(girth(d) == g);
  }
}

TEST_CASE("families vii and viii have girth 3") {
  for (int n : {3, 4, 5, 7, 8}) CHECK(girth(build_family(spec_vii(n))) == 3);
  for (int n = 2; n <= 6; ++n) CHECK(girth(build_family(spec_viii(n))) == 3);
}

TEST_CASE("verify_family accepts every hypothesis instance") {
  std::vector<FamilySpec> specs = {spec_i, {FamilyTag::ii, {}, {}}, {FamilyTag::iii, {}, {}},
                                   {FamilyTag::v, {}, {}}};
  for (int g = 3; g <= 6; ++g) specs.push_back(spec_vi(g));
  for (int n : {3, 4, 5}) specs.push_back(spec_vii(n));
  for (int n = 2; n <= 4; ++n) specs.push_back(spec_viii(n));
  for (const auto& spec : specs) {
    const FamilyCheck check = verify_family(spec);
    CAPTURE(spec.describe());
    CHECK(check.pass());
    CHECK(check.out_valency == 3);
    CHECK(check.arc_types.size() == 1);
    CHECK(check.arc_types[0] == TwoWayPair{1, check.girth - 1});
  }
}

TEST_CASE("family vii n=2 is flagged, not rejected") {
  const FamilyCheck check = verify_family(spec_vii(2));
  CHECK(check.vertices == 4);
  CHECK(check.girth == 2);
  CHECK_FALSE(check.girth_hypothesis_ok);
  CHECK_FALSE(check.pass());
  CHECK(check.wdrd.is_wdrd);  // it is a WDRD, just outside the hypothesis class
}

TEST_CASE("table1 closed forms") {
  CHECK(table1_two_way(spec_vi(5), 2, 1) == TwoWayPair{2, 3});
  CHECK(table1_two_way(spec_vi(5), 0, 1) == TwoWayPair{5, 5});
  CHECK(table1_two_way(spec_vii(4), 1, 1) == TwoWayPair{2, 1});
  CHECK_THROWS_AS(table1_two_way(spec_vi(5), 0, 0), Error);
  CHECK_THROWS_AS(table1_two_way(spec_i, 1, 0), Error);
  try {
    table1_two_way(spec_i, 1, 0);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_family);
  }
  // coordinates reduce modulo the group moduli
  CHECK(table1_two_way(spec_vi(5), 7, 4) == table1_two_way(spec_vi(5), 2, 1));
}

TEST_CASE("table1 agrees with BFS for every acceptance parameterization") {
  for (int g = 3; g <= 10; ++g) {
    const Table1Report r = verify_table1(spec_vi(g));
    CAPTURE(g);
    CHECK(r.all_match());
    CHECK(r.checked == 3 * g - 1);
  }
  for (int n : {3, 4, 5, 7, 8}) {
    const Table1Report r = verify_table1(spec_vii(n));
    CAPTURE(n);
    CHECK(r.all_match());
    CHECK(r.checked == n * n - 1);
  }
  for (int n = 2; n <= 6; ++n) {
    const Table1Report r = verify_table1(spec_viii(n));
    CAPTURE(n);
    CHECK(r.all_match());
    CHECK(r.checked == 3 * n * n - 1);
  }
}

TEST_CASE("classified members at an order") {
  auto labels = [](int order) {
    std::vector<std::string> out;
    for (const auto& inst : classified_members_at_order(order)) out.push_back(inst.label);
    return out;
  };
  CHECK(labels(7) == std::vector<std::string>{"i"});
  CHECK(labels(8) == std::vector<std::string>{"ii"});
  CHECK(labels(9) == std::vector<std::string>{"vi g=3", "vii n=3"});
  CHECK(labels(11).empty());
  CHECK(labels(12) == std::vector<std::string>{"vi g=4", "viii n=2"});
  CHECK(labels(13) == std::vector<std::string>{"iii"});
  CHECK(labels(15) == std::vector<std::string>{"vi g=5"});
  CHECK(labels(16) == std::vector<std::string>{"vii n=4"});
  CHECK(labels(18) == std::vector<std::string>{"iv", "vi g=6"});
  CHECK(labels(27) == std::vector<std::string>{"v", "vi g=9", "viii n=3"});
  CHECK(labels(4).empty());  // vii n=2 fails the girth hypothesis

  for (const auto& inst : classified_members_at_order(18)) {
    if (inst.label == "iv") CHECK_FALSE(inst.cayley);
    if (inst.label == "vi g=6") CHECK(inst.cayley);
  }
}

TEST_CASE("sporadic search finds the 18-vertex digraph deterministically") {
  const Digraph d = sporadic18_search();
  CHECK(d.n == 18);
  CHECK(matches_sporadic_parameters(d));

  const TwoWayProfile profile = two_way_profile(d);
  CHECK(girth(d, profile) == 4);
  CHECK(arc_types(d, profile) == std::vector<TwoWayPair>{{1, 3}});

  const RelationPartition part = relation_partition(profile);
  const SchemeData scheme = intersection_tensor(d, profile, part);
  CHECK(scheme.valencies[part.index_of({3, 3})] == 3);
  CHECK(scheme.valencies[part.index_of({2, 2})] == 6);
  CHECK(scheme.valencies[part.index_of({2, 4})] == 1);
  CHECK(verify_scheme_identities(scheme).all_pass());

  const Digraph again = sporadic18_search();
  CHECK(again.out == d.out);

  const FamilyCheck check = verify_family({FamilyTag::iv, {}, {}});
  CHECK(check.pass());
  CHECK(check.girth == 4);
}

TEST_CASE("sporadic cache loads and detects corruption") {
  namespace fs = std::filesystem;
  const fs::path cache = fs::path(WDRD_DATA_DIR) / "sporadic18.json";
  REQUIRE(fs::exists(cache));
  const Digraph d = sporadic18_from_cache(cache);
  CHECK(matches_sporadic_parameters(d));
  CHECK(build_sporadic_18({cache}).out == d.out);

  // corrupt copy: remove one arc, add a different one
  const fs::path tmp = fs::temp_directory_path() / "wdrd_sporadic_corrupt.json";
  Digraph bad = d;
  const int w = bad.out[0].back();
  bad.out[0].pop_back();
  bad.out[1].push_back(bad.out[1].back() == 17 ? 16 : 17);
  std::sort(bad.out[1].begin(), bad.out[1].end());
  (void)w;
  {
    std::ofstream out(tmp);
    out << "{\"n\": 18, \"arcs\": [";
    bool first = true;
    for (int u = 0; u < bad.n; ++u)
      for (int v : bad.out[u]) {
        if (!first) out << ", ";
        first = false;
        out << "[" << u << ", " << v << "]";
      }
    out << "]}";
  }
  CHECK_THROWS_AS(sporadic18_from_cache(tmp), Error);
  try {
    sporadic18_from_cache(tmp);
  } catch (const Error& e) {
    CHECK(e.code() == errc::cache_corrupt);
  }
  fs::remove(tmp);
}
