#include "wdrd/classify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wdrd/digraph_io.hpp"
#include "wdrd/scheme.hpp"

namespace wdrd {

const std::vector<FiniteGroup>& GroupCatalog::at(int order) const {
  const auto it = by_order.find(order);
  if (it == by_order.end())
    throw Error(errc::incomplete_catalog,
                "catalog has no groups of order " + std::to_string(order));
  return it->second;
}

namespace {

std::set<int> parse_completeness(const std::filesystem::path& file) {
  std::set<int> orders;
  std::ifstream in(file);
  if (!in) return orders;
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    if (key != "complete") continue;
    std::string rest = line.substr(eq + 1);
    for (char& c : rest) {
      if (c == '[' || c == ']' || c == ',') c = ' ';
    }
    std::istringstream nums(rest);
    int v;
    while (nums >> v) orders.insert(v);
  }
  return orders;
}

}  // namespace

GroupCatalog load_catalog(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error(errc::format_error, "catalog directory not found: " + dir.string());
  GroupCatalog catalog;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".grp")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    std::ifstream in(file);
    FiniteGroup g;
    try {
      g = load_group_table(in);
    } catch (const Error& e) {
      throw Error(e.code(), file.filename().string() + ": " + e.what());
    }
    catalog.by_order[g.order].push_back(std::move(g));
  }
  catalog.complete_orders = parse_completeness(dir / "completeness.toml");
  return catalog;
}

namespace {

// Lexicographically least image of the set under the permutation group
// generated by `gens` (closure over sorted triples).
std::vector<int> orbit_min(const std::vector<int>& set, const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen{set};
  std::vector<std::vector<int>> frontier{set};
  std::vector<int> best = set;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (const auto& p : gens) {
        std::vector<int> img(s.size());
        for (size_t i = 0; i < s.size(); ++i) img[i] = p[s[i]];
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second) {
          if (img < best) best = img;
          next.push_back(std::move(img));
        }
      }
    }
    frontier = std::move(next);
  }
  return best;
}

bool qualifies(const Digraph& d) {
  if (!is_strongly_connected(d)) return false;
  const TwoWayProfile profile = two_way_profile(d);
  if (!one_arc_type(d, profile)) return false;
  const RelationPartition partition = relation_partition(profile);
  const WdrdReport report = check_wdrd(d, profile, partition);
  return report.is_wdrd && report.is_commutative.value_or(false);
}

}  // namespace

bool one_arc_type(const Digraph& d, const TwoWayProfile& profile) {
  return arc_types(d, profile).size() == 1;
}

std::vector<CayleyCandidate> enumerate_cayley(const GroupCatalog& catalog, int order,
                                              std::uint64_t* examined) {
  const auto& groups = catalog.at(order);
  std::vector<CayleyCandidate> found;
  std::uint64_t built = 0;
  for (const auto& g : groups) {
    std::vector<int> elements;
    for (int x = 0; x < g.order; ++x)
      if (x != g.identity) elements.push_back(x);
    const int m = static_cast<int>(elements.size());
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        for (int k = j + 1; k < m; ++k) {
          const std::vector<int> set{elements[i], elements[j], elements[k]};
          // girth > 2 at the connection-set level
          bool inverse_free = true;
          for (int s : set) {
            if (std::find(set.begin(), set.end(), g.inverse(s)) != set.end()) {
              inverse_free = false;
              break;
            }
          }
          if (!inverse_free) continue;
          const ConnectionSet cs{set};
          if (!generates(g, cs)) continue;
          if (!g.automorphisms.empty() && orbit_min(set, g.automorphisms) != set) continue;
          ++built;
          Digraph d = cayley_digraph(g, cs);
          if (!qualifies(d)) continue;
          found.push_back({g.name, set, std::move(d)});
        }
      }
    }
  }
  if (examined) *examined = built;
  return found;
}

int ClassificationReport::unmatched_count() const {
  int count = 0;
  for (const auto& c : classes)
    if (c.matches.empty()) ++count;
  return count;
}

bool ClassificationReport::all_expected_cayley_found() const {
  for (const auto& e : expected)
    if (e.cayley && !e.found) return false;
  return true;
}

ClassificationReport classify_order(const GroupCatalog& catalog, int order,
                                    const SporadicOptions& sporadic) {
  ClassificationReport report;
  report.order = order;
  report.complete_catalog = catalog.is_complete(order);
  const auto candidates = enumerate_cayley(catalog, order, &report.candidates_examined);

  std::map<IsoCertificate, CayleyCandidate> classes;
  for (const auto& c : candidates) {
    IsoCertificate cert = canonical_certificate(c.digraph);
    classes.emplace(std::move(cert), c);  // first representative wins
  }

  struct Instance {
    std::string label;
    bool cayley;
    IsoCertificate cert;
    bool found = false;
  };
  std::vector<Instance> instances;
  for (const auto& inst : classified_members_at_order(order)) {
    const Digraph d = build_family(inst.spec, sporadic);
    instances.push_back({inst.label, inst.cayley, canonical_certificate(d), false});
  }

  for (const auto& [cert, rep] : classes) {
    QualifyingClass qc;
    qc.certificate = cert;
    qc.representative = rep;
    for (auto& inst : instances) {
      if (inst.cert == cert) {
        qc.matches.push_back(inst.label);
        inst.found = true;
      }
    }
    report.classes.push_back(std::move(qc));
  }
  for (const auto& inst : instances) {
    report.expected.push_back({inst.label, inst.cayley, inst.found});
  }
  return report;
}

bool is_cayley_over(const Digraph& d, const GroupCatalog& catalog, int order) {
  if (!catalog.is_complete(order))
    throw Error(errc::incomplete_catalog,
                "order " + std::to_string(order) +
                    " is not marked complete; a negative answer would be unsound");
  const auto& groups = catalog.at(order);
  if (d.n != order) return false;
  // Cayley digraphs are out- and in-regular.
  const int k = static_cast<int>(d.out[0].size());
  for (const auto& row : d.out)
    if (static_cast<int>(row.size()) != k) return false;
  {
    const Digraph rev = reverse(d);
    for (const auto& row : rev.out)
      if (static_cast<int>(row.size()) != k) return false;
  }
  const bool d_connected = is_strongly_connected(d);
  std::vector<TwoWayPair> d_labels;
  if (d_connected) {
    const TwoWayProfile p = two_way_profile(d);
    d_labels = relation_partition(p).labels;
  }
  const IsoCertificate d_cert = canonical_certificate(d);

  for (const auto& g : groups) {
    std::vector<int> elements;
    for (int x = 0; x < g.order; ++x)
      if (x != g.identity) elements.push_back(x);
    std::vector<int> set(k);
    // all k-subsets of the non-identity elements
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const int m = static_cast<int>(elements.size());
    if (m < k) continue;
    for (;;) {
      for (int i = 0; i < k; ++i) set[i] = elements[idx[i]];
      const Digraph cand = cayley_digraph(g, ConnectionSet{set});
      if (is_strongly_connected(cand) == d_connected) {
        bool plausible = true;
        if (d_connected) {
          const TwoWayProfile p = two_way_profile(cand);
          plausible = relation_partition(p).labels == d_labels;
        }
        if (plausible && canonical_certificate(cand) == d_cert) return true;
      }
      // next combination
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == m - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return false;
}

}  // namespace wdrd
