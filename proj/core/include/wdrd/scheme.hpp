#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "wdrd/digraph.hpp"

namespace wdrd {

// Partition of ordered vertex pairs by their two-way distance, with relation
// labels in lexicographic order. labels[0] is always (0,0).
struct RelationPartition {
  int n = 0;
  std::vector<TwoWayPair> labels;
  std::vector<int> rel_index;  // row-major n*n, index into labels

  int rel(int x, int y) const { return rel_index[static_cast<size_t>(x) * n + y]; }
  int rank() const { return static_cast<int>(labels.size()); }
  int index_of(TwoWayPair p) const;
  // Index of the reversed label (b,a); every label has one.
  int dual(int i) const { return index_of(reversed(labels[i])); }
};

RelationPartition relation_partition(const TwoWayProfile& profile);

enum class ThinClass { thin, quasi_thin, neither };
const char* thin_class_name(ThinClass t);

struct WdrdWitness {
  int x1 = 0, y1 = 0;  // first ordered pair
  int x2 = 0, y2 = 0;  // second ordered pair with the same label
  TwoWayPair label;
  TwoWayPair i, j;  // the (i,j) count that differs
  std::int64_t count1 = 0, count2 = 0;
};

struct WdrdReport {
  bool is_wdrd = false;
  std::optional<WdrdWitness> witness;
  std::optional<bool> is_commutative;
  // Maximum intersection number excluding the p^{(0,0)} slice decides the
  // primary label; the diagonal slice carries p^{(0,0)}_{i,i*} = k_i, which
  // can exceed 2 even in thin schemes, so both conventions are reported.
  std::optional<ThinClass> thinness;
  std::optional<ThinClass> thinness_with_diagonal;
  bool conventions_agree = true;
};

enum class CheckMode { full, transitive_fast };

// Full mode compares the count vector of every ordered pair against the
// representative of its relation. The fast mode only checks pairs (0, y) and
// is valid for vertex-transitive digraphs; its equivalence to the full mode
// is a tested property, not an assumption.
WdrdReport check_wdrd(const Digraph& d, const TwoWayProfile& profile,
                      const RelationPartition& partition, CheckMode mode = CheckMode::full);

struct SchemeData {
  RelationPartition partition;
  std::vector<int> valencies;        // k_i, indexed like labels
  std::vector<std::int64_t> tensor;  // p[h][i][j], r^3 row-major

  int rank() const { return partition.rank(); }
  std::int64_t p(int h, int i, int j) const {
    const auto r = static_cast<size_t>(rank());
    return tensor[(static_cast<size_t>(h) * r + i) * r + j];
  }
};

// Requires a verified weakly distance-regular digraph; the overload without a
// report runs check_wdrd itself and throws Error(errc::invalid_state) if the
// property fails.
SchemeData intersection_tensor(const Digraph& d, const TwoWayProfile& profile,
                               const RelationPartition& partition, const WdrdReport& report);
SchemeData intersection_tensor(const Digraph& d, const TwoWayProfile& profile,
                               const RelationPartition& partition);

// Complex product EF: relations h with sum_{i in e, j in f} p[h][i][j] != 0.
std::set<int> relation_product(const SchemeData& scheme, const std::set<int>& e,
                               const std::set<int>& f);

struct IdentityCheck {
  bool pass = true;
  std::string witness;  // empty iff pass
};

// The six standard intersection-number identities:
//   (i)   k_d k_e = sum_f p[f][d][e] k_f
//   (ii)  p[f][d][e] k_f = p[d][f][e*] k_d = p[e][d*][f] k_e
//   (iii) |Gamma_d Gamma_e| <= gcd(k_d, k_e)
//   (iv)  sum_e p[f][d][e] = k_d
//   (v)   sum_f p[f][d][e] p[h][g][f] = sum_l p[l][g][d] p[h][l][e]
//   (vi)  lcm(k_d, k_e) divides p[f][d][e] k_f
struct IdentityReport {
  std::array<IdentityCheck, 6> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

IdentityReport verify_scheme_identities(const SchemeData& scheme);

}  // namespace wdrd
