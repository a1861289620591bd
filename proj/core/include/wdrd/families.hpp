#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "wdrd/digraph.hpp"
#include "wdrd/scheme.hpp"

namespace wdrd {

// The eight built-in digraph families:
//   i    Cay(Z7, {1,2,4})
//   ii   Cay(Q8, {i,j,k})
//   iii  Cay(Z13, {1,3,9})
//   iv   the sporadic 18-vertex digraph (not a Cayley digraph)
//   v    Cay(Z3xZ3xZ3, {(1,0,0),(0,1,0),(0,0,1)})
//   vi   Cay(Zg x Z3, {(1,0),(1,1),(1,2)}), g >= 3
//   vii  Cay(Zn x Zn, {(1,0),(0,1),(n-1,n-1)}), n not in 3Z \ {3}
//   viii Cay(Zn x Z3n, {(0,1),(1,1),(n-1,3n-2)}), n >= 2
enum class FamilyTag { i, ii, iii, iv, v, vi, vii, viii };

const char* family_name(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(std::string_view text);

struct FamilySpec {
  FamilyTag tag = FamilyTag::i;
  std::optional<int> g;  // family vi
  std::optional<int> n;  // families vii and viii

  std::string describe() const;  // "vi g=4", "iii", ...
};

// Throws Error(errc::parameter_out_of_range) naming the violated constraint.
// Family vii keeps n=2 buildable; the girth hypothesis failure for that case
// is reported by verify_family, not by construction.
void validate_family_spec(const FamilySpec& spec);

// Group and connection set underlying a Cayley family member (all but iv).
FiniteGroup family_group(const FamilySpec& spec);
ConnectionSet family_connection_set(const FamilySpec& spec, const FiniteGroup& group);

struct SporadicOptions {
  // When set, the digraph is loaded from this cache file and re-verified;
  // otherwise the deterministic backtracking search runs from scratch.
  std::optional<std::filesystem::path> cache;
};

Digraph build_family(const FamilySpec& spec, const SporadicOptions& sporadic = {});

// Closed-form two-way distance from the identity element to (a,b), for
// families vi, vii and viii. Coordinates are reduced modulo the group
// moduli first. Throws domain-error for the identity and unsupported-family
// for tags without a closed form.
TwoWayPair table1_two_way(const FamilySpec& spec, int a, int b);

struct Table1Mismatch {
  int a = 0, b = 0;
  TwoWayPair formula, bfs;
};

struct Table1Report {
  FamilySpec spec;
  int checked = 0;
  std::vector<Table1Mismatch> mismatches;
  bool all_match() const { return mismatches.empty(); }
};

// Builds the digraph and compares the closed form against the BFS profile at
// the identity vertex, for every non-identity element.
Table1Report verify_table1(const FamilySpec& spec);

// Per-family hypothesis verification (strong connectivity, valency, girth,
// arc types, WDRD, commutativity); used by the CLI and the acceptance suite.
struct FamilyCheck {
  FamilySpec spec;
  int vertices = 0;
  bool strongly_connected = false;
  int out_valency = -1;  // -1 when not regular
  int girth = 0;
  std::vector<TwoWayPair> arc_types;
  WdrdReport wdrd;
  bool identities_pass = false;
  bool girth_hypothesis_ok = false;  // girth > 2; fails only for vii n=2
  bool pass() const;
};

FamilyCheck verify_family(const FamilySpec& spec, const SporadicOptions& sporadic = {});

// --- sporadic 18-vertex digraph -------------------------------------------

// Deterministic canonical-first backtracking search. Throws
// Error(errc::search_exhausted) if no digraph meets the target parameters,
// which would contradict the classification this library verifies.
Digraph sporadic18_search();

// True iff d has the sporadic target scheme: 18 vertices, relation labels
// {(0,0),(1,3),(2,2),(2,4),(3,1),(3,3),(4,2)}, valencies 1,3,6,1,3,3,1 in
// that label order, and is a commutative WDRD.
bool matches_sporadic_parameters(const Digraph& d);

// Loads the cache, verifies the optional sidecar digest (<file>.fnv1a) and
// re-verifies the scheme; throws Error(errc::cache_corrupt) on any mismatch.
Digraph sporadic18_from_cache(const std::filesystem::path& cache_file);

Digraph build_sporadic_18(const SporadicOptions& options = {});

// --- classification targets -------------------------------------------------

struct ClassifiedMember {
  FamilySpec spec;
  std::string label;
  bool cayley = true;  // false for the sporadic family iv
};

// All family members with the given vertex count (family vii only for n >= 3;
// the n=2 construction fails the girth hypothesis).
std::vector<ClassifiedMember> classified_members_at_order(int order);

}  // namespace wdrd
