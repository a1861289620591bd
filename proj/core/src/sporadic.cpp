#include <algorithm>
#include <array>

#include "wdrd/digraph_io.hpp"
#include "wdrd/families.hpp"

// Reconstruction of the sporadic 18-vertex digraph by canonical-first
// backtracking. The target scheme pins down a lot of structure, which the
// search uses as exact pruning rules:
//
//   * the only arc type is (1,3), so the girth is 4: no circuit of length
//     2 or 3 may ever appear;
//   * counting 2-paths from a vertex x against the labels and valencies
//     (k_{2,2}=6, k_{2,4}=1) forces the 2-path count decomposition
//     "one target three times, six targets once": no arc is parallel to a
//     2-path, and the triple target sigma(x) is the unique vertex at
//     two-way distance (2,4) from x;
//   * k_{2,4}=1 makes sigma a permutation; the product identities force
//     sigma^3 = id with no fixed points, and the triple count forces
//     Out(x) = In(sigma(x)), i.e. arc(x,w) <=> arc(w, sigma(x)).
//
// Fixing sigma as the blockwise rotation x -> 3*(x/3) + (x%3+1)%3 (all
// fixed-point-free order-3 permutations are conjugate, so this loses no
// digraph up to isomorphism), arcs close under T(x,w) = (w, sigma(x)) into
// orbits of size 6 that contribute one out-arc to each member. The search
// extends orbit by orbit in lexicographic order and accepts the first full
// assignment whose scheme matches the target exactly.

namespace wdrd {

namespace {

constexpr int kN = 18;

constexpr std::array<TwoWayPair, 7> kTargetLabels = {{
    {0, 0}, {1, 3}, {2, 2}, {2, 4}, {3, 1}, {3, 3}, {4, 2},
}};
constexpr std::array<int, 7> kTargetValencies = {1, 3, 6, 1, 3, 3, 1};

int sigma(int x) { return 3 * (x / 3) + (x % 3 + 1) % 3; }

struct SearchState {
  std::array<std::array<bool, kN>, kN> arc{};
  std::array<std::vector<int>, kN> out;
  std::array<std::vector<int>, kN> in;
  std::array<std::array<int, kN>, kN> two_paths{};  // count of 2-paths x -> z

  bool can_add(int u, int w) const {
    if (w == u || arc[u][w]) return false;
    if (out[u].size() >= 3 || in[w].size() >= 3) return false;
    if (arc[w][u]) return false;  // 2-circuit
    for (int x : out[w])
      if (arc[x][u]) return false;  // 3-circuit u -> w -> x -> u
    if (two_paths[u][w] > 0) return false;
    for (int x : in[u])
      if (arc[x][w]) return false;  // 2-path x -> u -> w beside arc x -> w
    for (int y : out[w])
      if (arc[u][y]) return false;  // 2-path u -> w -> y beside arc u -> y
    for (int x : in[u])
      if (two_paths[x][w] + 1 > 3) return false;
    for (int y : out[w])
      if (two_paths[u][y] + 1 > 3) return false;
    // two vertices share at most two out-neighbours, and dually
    for (int v2 : in[w]) {
      if (v2 == u) continue;
      int shared = 0;
      for (int t : out[v2]) shared += arc[u][t] ? 1 : 0;
      if (shared >= 2) return false;
    }
    for (int z2 : out[u]) {
      if (z2 == w) continue;
      int shared = 0;
      for (int s : in[z2]) shared += arc[s][w] ? 1 : 0;
      if (shared >= 2) return false;
    }
    return true;
  }

  void add(int u, int w) {
    arc[u][w] = true;
    out[u].push_back(w);
    in[w].push_back(u);
    for (int x : in[u])
      if (x != w) ++two_paths[x][w];
    for (int y : out[w])
      if (y != u) ++two_paths[u][y];
  }

  void remove(int u, int w) {
    arc[u][w] = false;
    out[u].pop_back();
    in[w].erase(std::find(in[w].begin(), in[w].end(), u));
    for (int x : in[u])
      if (x != w) --two_paths[x][w];
    for (int y : out[w])
      if (y != u) --two_paths[u][y];
  }

  Digraph to_digraph() const {
    Digraph d;
    d.n = kN;
    d.out.assign(kN, {});
    for (int v = 0; v < kN; ++v) {
      d.out[v] = out[v];
      std::sort(d.out[v].begin(), d.out[v].end());
    }
    return d;
  }
};

// Adds the whole T-orbit of (v,w); undoes everything and returns false if
// any member fails the arc-level pruning rules.
bool try_orbit(SearchState& st, int v, int w, std::vector<std::pair<int, int>>& added) {
  int a = v, b = w;
  for (int step = 0; step < 6; ++step) {
    if (!st.can_add(a, b)) {
      for (auto it = added.rbegin(); it != added.rend(); ++it) st.remove(it->first, it->second);
      added.clear();
      return false;
    }
    st.add(a, b);
    added.emplace_back(a, b);
    const int next_b = sigma(a);
    a = b;
    b = next_b;
  }
  return true;
}

bool search(SearchState& st, Digraph& result) {
  int v = -1;
  for (int x = 0; x < kN; ++x) {
    if (st.out[x].size() < 3) {
      v = x;
      break;
    }
  }
  if (v < 0) {
    Digraph d = st.to_digraph();
    if (matches_sporadic_parameters(d)) {
      result = std::move(d);
      return true;
    }
    return false;
  }
  std::vector<std::pair<int, int>> added;
  for (int w = 0; w < kN; ++w) {
    if (w / 3 == v / 3) continue;  // same sigma block: loop, digon or 3-circuit
    if (!try_orbit(st, v, w, added)) continue;
    if (search(st, result)) return true;
    for (auto it = added.rbegin(); it != added.rend(); ++it) st.remove(it->first, it->second);
    added.clear();
  }
  return false;
}

}  // namespace

bool matches_sporadic_parameters(const Digraph& d) {
  if (d.n != kN) return false;
  if (!is_strongly_connected(d)) return false;
  const TwoWayProfile profile = two_way_profile(d);
  const RelationPartition partition = relation_partition(profile);
  if (partition.rank() != static_cast<int>(kTargetLabels.size())) return false;
  for (size_t i = 0; i < kTargetLabels.size(); ++i) {
    if (partition.labels[i] != kTargetLabels[i]) return false;
  }
  for (int x = 0; x < d.n; ++x) {
    std::array<int, 7> counts{};
    for (int y = 0; y < d.n; ++y) ++counts[partition.rel(x, y)];
    for (size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] != kTargetValencies[i]) return false;
    }
  }
  if (girth(d, profile) != 4) return false;
  const WdrdReport report = check_wdrd(d, profile, partition);
  return report.is_wdrd && report.is_commutative.value_or(false);
}

Digraph sporadic18_search() {
  SearchState st;
  Digraph result;
  if (!search(st, result)) {
    throw Error(errc::search_exhausted,
                "no 18-vertex digraph matches the sporadic scheme parameters; "
                "this contradicts the classification and must be investigated");
  }
  return result;
}

Digraph sporadic18_from_cache(const std::filesystem::path& cache_file) {
  std::string bytes;
  try {
    bytes = read_text_file(cache_file);
  } catch (const Error& e) {
    throw Error(errc::cache_corrupt, e.what());
  }
  const std::filesystem::path sidecar = cache_file.string() + ".fnv1a";
  if (std::filesystem::exists(sidecar)) {
    std::string want = read_text_file(sidecar);
    while (!want.empty() && (want.back() == '\n' || want.back() == '\r')) want.pop_back();
    if (want != fnv1a64_hex(bytes))
      throw Error(errc::cache_corrupt, "digest mismatch for " + cache_file.string());
  }
  Digraph d;
  try {
    d = digraph_from_json(bytes);
  } catch (const Error& e) {
    throw Error(errc::cache_corrupt, e.what());
  }
  if (!matches_sporadic_parameters(d))
    throw Error(errc::cache_corrupt,
                "cached digraph fails scheme re-verification: " + cache_file.string());
  return d;
}

Digraph build_sporadic_18(const SporadicOptions& options) {
  if (options.cache) return sporadic18_from_cache(*options.cache);
  return sporadic18_search();
}

}  // namespace wdrd
