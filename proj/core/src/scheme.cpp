#include "wdrd/scheme.hpp"

#include <algorithm>
#include <numeric>

namespace wdrd {

namespace {

std::string label_str(TwoWayPair p) {
  return "(" + std::to_string(p.forward) + "," + std::to_string(p.backward) + ")";
}

ThinClass classify_max(std::int64_t m) {
  if (m <= 1) return ThinClass::thin;
  if (m == 2) return ThinClass::quasi_thin;
  return ThinClass::neither;
}

// Count vector c[i*r+j] = |{z : rel(x,z)=i and rel(z,y)=j}| for one pair.
void count_vector(const RelationPartition& part, int x, int y, std::vector<std::int64_t>& c) {
  const int r = part.rank();
  std::fill(c.begin(), c.end(), 0);
  const int n = part.n;
  const int* row_x = part.rel_index.data() + static_cast<size_t>(x) * n;
  for (int z = 0; z < n; ++z) {
    const int i = row_x[z];
    const int j = part.rel_index[static_cast<size_t>(z) * n + y];
    ++c[static_cast<size_t>(i) * r + j];
  }
}

}  // namespace

const char* thin_class_name(ThinClass t) {
  switch (t) {
    case ThinClass::thin: return "thin";
    case ThinClass::quasi_thin: return "quasi-thin";
    case ThinClass::neither: return "neither";
  }
  return "?";
}

int RelationPartition::index_of(TwoWayPair p) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(), p);
  if (it == labels.end() || *it != p) return -1;
  return static_cast<int>(it - labels.begin());
}

RelationPartition relation_partition(const TwoWayProfile& profile) {
  RelationPartition part;
  part.n = profile.n;
  part.labels = profile.pairs;
  std::sort(part.labels.begin(), part.labels.end());
  part.labels.erase(std::unique(part.labels.begin(), part.labels.end()), part.labels.end());
  part.rel_index.resize(profile.pairs.size());
  for (size_t k = 0; k < profile.pairs.size(); ++k) {
    part.rel_index[k] = part.index_of(profile.pairs[k]);
  }
  return part;
}

WdrdReport check_wdrd(const Digraph& d, const TwoWayProfile& profile,
                      const RelationPartition& partition, CheckMode mode) {
  (void)d;
  (void)profile;
  const int n = partition.n;
  const int r = partition.rank();
  WdrdReport report;

  // reference count vector and representative pair per relation
  std::vector<std::vector<std::int64_t>> ref(r);
  std::vector<std::pair<int, int>> rep(r, {-1, -1});
  std::vector<std::int64_t> cur(static_cast<size_t>(r) * r);

  auto visit = [&](int x, int y) -> bool {
    const int h = partition.rel(x, y);
    count_vector(partition, x, y, cur);
    if (rep[h].first < 0) {
      rep[h] = {x, y};
      ref[h] = cur;
      return true;
    }
    if (ref[h] == cur) return true;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        const auto a = ref[h][static_cast<size_t>(i) * r + j];
        const auto b = cur[static_cast<size_t>(i) * r + j];
        if (a != b) {
          WdrdWitness w;
          w.x1 = rep[h].first;
          w.y1 = rep[h].second;
          w.x2 = x;
          w.y2 = y;
          w.label = partition.labels[h];
          w.i = partition.labels[i];
          w.j = partition.labels[j];
          w.count1 = a;
          w.count2 = b;
          report.witness = w;
          return false;
        }
      }
    }
    return true;  // unreachable
  };

  if (mode == CheckMode::full) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!visit(x, y)) {
          report.is_wdrd = false;
          return report;
        }
      }
    }
  } else {
    for (int y = 0; y < n; ++y) {
      if (!visit(0, y)) {
        report.is_wdrd = false;
        return report;
      }
    }
    for (int h = 0; h < r; ++h) {
      if (rep[h].first < 0)
        throw Error(errc::invalid_state,
                    "fast mode needs every relation at vertex 0; missing " +
                        label_str(partition.labels[h]));
    }
  }

  report.is_wdrd = true;
  bool commutative = true;
  std::int64_t max_all = 0, max_off = 0;
  for (int h = 0; h < r; ++h) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        const auto v = ref[h][static_cast<size_t>(i) * r + j];
        if (v != ref[h][static_cast<size_t>(j) * r + i]) commutative = false;
        max_all = std::max(max_all, v);
        if (h != 0) max_off = std::max(max_off, v);
      }
    }
  }
  report.is_commutative = commutative;
  report.thinness = classify_max(max_off);
  report.thinness_with_diagonal = classify_max(max_all);
  report.conventions_agree = *report.thinness == *report.thinness_with_diagonal;
  return report;
}

SchemeData intersection_tensor(const Digraph& d, const TwoWayProfile& profile,
                               const RelationPartition& partition, const WdrdReport& report) {
  (void)d;
  if (!report.is_wdrd)
    throw Error(errc::invalid_state, "intersection tensor requested for a non-WDRD digraph");
  const int n = partition.n;
  const int r = partition.rank();
  SchemeData scheme;
  scheme.partition = partition;
  scheme.valencies.assign(r, 0);
  for (int y = 0; y < n; ++y) ++scheme.valencies[partition.rel(0, y)];
  scheme.tensor.assign(static_cast<size_t>(r) * r * r, 0);
  std::vector<char> have(r, 0);
  std::vector<std::int64_t> cur(static_cast<size_t>(r) * r);
  int remaining = r;
  for (int x = 0; x < n && remaining > 0; ++x) {
    for (int y = 0; y < n && remaining > 0; ++y) {
      const int h = partition.rel(x, y);
      if (have[h]) continue;
      have[h] = 1;
      --remaining;
      count_vector(partition, x, y, cur);
      std::copy(cur.begin(), cur.end(),
                scheme.tensor.begin() + static_cast<size_t>(h) * r * r);
    }
  }
  (void)profile;
  return scheme;
}

SchemeData intersection_tensor(const Digraph& d, const TwoWayProfile& profile,
                               const RelationPartition& partition) {
  const WdrdReport report = check_wdrd(d, profile, partition);
  return intersection_tensor(d, profile, partition, report);
}

std::set<int> relation_product(const SchemeData& scheme, const std::set<int>& e,
                               const std::set<int>& f) {
  const int r = scheme.rank();
  std::set<int> result;
  for (int h = 0; h < r; ++h) {
    std::int64_t total = 0;
    for (int i : e)
      for (int j : f) total += scheme.p(h, i, j);
    if (total != 0) result.insert(h);
  }
  return result;
}

IdentityReport verify_scheme_identities(const SchemeData& scheme) {
  const int r = scheme.rank();
  const auto& part = scheme.partition;
  const auto& k = scheme.valencies;
  IdentityReport report;

  auto fail = [&](int idx, const std::string& msg) {
    if (report.checks[idx].pass) {
      report.checks[idx].pass = false;
      report.checks[idx].witness = msg;
    }
  };

  std::vector<int> dual(r);
  for (int i = 0; i < r; ++i) dual[i] = part.dual(i);

  for (int d = 0; d < r; ++d) {
    for (int e = 0; e < r; ++e) {
      // (i) row expansion of k_d k_e
      std::int64_t sum = 0;
      for (int f = 0; f < r; ++f) sum += scheme.p(f, d, e) * k[f];
      if (sum != static_cast<std::int64_t>(k[d]) * k[e])
        fail(0, "d=" + label_str(part.labels[d]) + " e=" + label_str(part.labels[e]));

      // (iii) size of the complex product vs gcd of valencies
      int nonzero = 0;
      for (int f = 0; f < r; ++f)
        if (scheme.p(f, d, e) != 0) ++nonzero;
      if (nonzero > std::gcd(k[d], k[e]))
        fail(2, "d=" + label_str(part.labels[d]) + " e=" + label_str(part.labels[e]));

      const std::int64_t lcm = std::lcm<std::int64_t>(k[d], k[e]);
      for (int f = 0; f < r; ++f) {
        const std::int64_t pk = scheme.p(f, d, e) * k[f];
        // (ii) triangle symmetry
        if (pk != scheme.p(d, f, dual[e]) * k[d] || pk != scheme.p(e, dual[d], f) * k[e])
          fail(1, "d=" + label_str(part.labels[d]) + " e=" + label_str(part.labels[e]) +
                      " f=" + label_str(part.labels[f]));
        // (vi) divisibility
        if (pk % lcm != 0)
          fail(5, "d=" + label_str(part.labels[d]) + " e=" + label_str(part.labels[e]) +
                      " f=" + label_str(part.labels[f]));
      }
    }
  }

  // (iv) row sums
  for (int d = 0; d < r && report.checks[3].pass; ++d) {
    for (int f = 0; f < r; ++f) {
      std::int64_t sum = 0;
      for (int e = 0; e < r; ++e) sum += scheme.p(f, d, e);
      if (sum != k[d]) {
        fail(3, "d=" + label_str(part.labels[d]) + " f=" + label_str(part.labels[f]));
        break;
      }
    }
  }

  // (v) associativity of the tensor
  for (int d = 0; d < r && report.checks[4].pass; ++d) {
    for (int e = 0; e < r && report.checks[4].pass; ++e) {
      for (int g = 0; g < r && report.checks[4].pass; ++g) {
        for (int h = 0; h < r; ++h) {
          std::int64_t lhs = 0, rhs = 0;
          for (int f = 0; f < r; ++f) lhs += scheme.p(f, d, e) * scheme.p(h, g, f);
          for (int l = 0; l < r; ++l) rhs += scheme.p(l, g, d) * scheme.p(h, l, e);
          if (lhs != rhs) {
            fail(4, "d=" + label_str(part.labels[d]) + " e=" + label_str(part.labels[e]) +
                        " g=" + label_str(part.labels[g]) + " h=" + label_str(part.labels[h]));
            break;
          }
        }
      }
    }
  }

  return report;
}

}  // namespace wdrd
