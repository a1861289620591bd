#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>

#include "wdrd/families.hpp"
#include "wdrd/isomorphism.hpp"

namespace wdrd {

// Groups keyed by order, loaded from a directory of table files plus a
// completeness manifest. Completeness is an explicit per-order claim, never
// inferred.
struct GroupCatalog {
  std::map<int, std::vector<FiniteGroup>> by_order;
  std::set<int> complete_orders;

  bool is_complete(int order) const { return complete_orders.count(order) > 0; }
  const std::vector<FiniteGroup>& at(int order) const;
};

// Reads every *.grp file (validated on load) and the `completeness.toml`
// manifest (`complete = [7, 8, ...]`) from dir.
GroupCatalog load_catalog(const std::filesystem::path& dir);

// True iff all arcs share one type (1,r).
bool one_arc_type(const Digraph& d, const TwoWayProfile& profile);

struct CayleyCandidate {
  std::string group_name;
  std::vector<int> connection;  // element indices, ascending
  Digraph digraph;
};

// All valency-3 Cayley digraphs over the catalog groups of this order that
// pass the hypothesis filters: connection set disjoint from its inverses
// (girth > 2), generating (strong connectivity), one arc type, and a
// commutative weakly distance-regular scheme. Connection sets are
// deduplicated up to group automorphism only for groups whose table file
// supplies automorphism generators. `examined` counts the candidates that
// reached digraph construction.
std::vector<CayleyCandidate> enumerate_cayley(const GroupCatalog& catalog, int order,
                                              std::uint64_t* examined = nullptr);

struct QualifyingClass {
  IsoCertificate certificate;
  CayleyCandidate representative;
  std::vector<std::string> matches;  // classified member labels; empty = UNMATCHED
};

struct ExpectedMember {
  std::string label;
  bool cayley = true;
  bool found = false;
};

struct ClassificationReport {
  int order = 0;
  std::uint64_t candidates_examined = 0;
  bool complete_catalog = false;
  std::vector<QualifyingClass> classes;  // sorted by certificate
  std::vector<ExpectedMember> expected;

  int unmatched_count() const;
  bool all_expected_cayley_found() const;
};

ClassificationReport classify_order(const GroupCatalog& catalog, int order,
                                    const SporadicOptions& sporadic = {});

// True iff d is isomorphic to some Cayley digraph Cay(G,S) with G in the
// catalog at this order and |S| equal to the out-degree of d. Requires the
// catalog completeness flag; otherwise a negative answer would be unsound.
bool is_cayley_over(const Digraph& d, const GroupCatalog& catalog, int order);

}  // namespace wdrd
