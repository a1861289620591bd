#include "wdrd/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace wdrd {

int Digraph::arc_count() const {
  int m = 0;
  for (const auto& row : out) m += static_cast<int>(row.size());
  return m;
}

bool Digraph::has_arc(int u, int v) const {
  const auto& row = out[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n < 1) throw Error(errc::invalid_parameter, "digraph needs at least one vertex");
  Digraph d;
  d.n = n;
  d.out.assign(n, {});
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(errc::invalid_parameter, "arc endpoint out of range");
    if (u == v) throw Error(errc::loop_error, "loop at vertex " + std::to_string(u));
    d.out[u].push_back(v);
  }
  for (auto& row : d.out) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw Error(errc::invalid_parameter, "duplicate arc");
  }
  return d;
}

Digraph reverse(const Digraph& d) {
  Digraph r;
  r.n = d.n;
  r.out.assign(d.n, {});
  for (int u = 0; u < d.n; ++u)
    for (int v : d.out[u]) r.out[v].push_back(u);
  for (auto& row : r.out) std::sort(row.begin(), row.end());
  return r;
}

Digraph cayley_digraph(const FiniteGroup& g, const ConnectionSet& s) {
  for (int e : s.elements) {
    if (e < 0 || e >= g.order)
      throw Error(errc::invalid_parameter, "connection element out of range");
    if (e == g.identity) throw Error(errc::loop_error, "connection set contains the identity");
  }
  {
    auto sorted = s.elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(errc::invalid_parameter, "connection set has repeated elements");
  }
  Digraph d;
  d.n = g.order;
  d.out.assign(g.order, {});
  for (int x = 0; x < g.order; ++x) {
    for (int e : s.elements) d.out[x].push_back(g.table[x][e]);
    std::sort(d.out[x].begin(), d.out[x].end());
  }
  return d;
}

std::vector<int> bfs_distances(const Digraph& d, int source) {
  std::vector<int> dist(d.n, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : d.out[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_strongly_connected(const Digraph& d) {
  const auto fwd = bfs_distances(d, 0);
  if (std::find(fwd.begin(), fwd.end(), -1) != fwd.end()) return false;
  const auto bwd = bfs_distances(reverse(d), 0);
  return std::find(bwd.begin(), bwd.end(), -1) == bwd.end();
}

std::optional<std::pair<int, int>> unreachable_witness(const Digraph& d) {
  const auto fwd = bfs_distances(d, 0);
  for (int y = 0; y < d.n; ++y)
    if (fwd[y] < 0) return std::make_pair(0, y);
  const auto bwd = bfs_distances(reverse(d), 0);
  for (int x = 0; x < d.n; ++x)
    if (bwd[x] < 0) return std::make_pair(x, 0);
  return std::nullopt;
}

TwoWayProfile two_way_profile(const Digraph& d) {
  if (auto w = unreachable_witness(d)) {
    throw Error(errc::connectivity_error,
                "no path from " + std::to_string(w->first) + " to " + std::to_string(w->second));
  }
  TwoWayProfile p;
  p.n = d.n;
  p.pairs.assign(static_cast<size_t>(d.n) * d.n, {});
  const Digraph rev = reverse(d);
  for (int x = 0; x < d.n; ++x) {
    const auto df = bfs_distances(d, x);
    const auto db = bfs_distances(rev, x);
    for (int y = 0; y < d.n; ++y) {
      p.pairs[static_cast<size_t>(x) * d.n + y] = {df[y], db[y]};
    }
  }
  return p;
}

int girth(const Digraph& d, const TwoWayProfile& profile) {
  int best = -1;
  for (int u = 0; u < d.n; ++u) {
    for (int v : d.out[u]) {
      const int len = 1 + profile.at(v, u).forward;
      if (best < 0 || len < best) best = len;
    }
  }
  if (best < 0) throw Error(errc::no_circuit, "digraph has no arcs");
  return best;
}

int girth(const Digraph& d) {
  if (d.arc_count() == 0) throw Error(errc::no_circuit, "digraph has no arcs");
  return girth(d, two_way_profile(d));
}

std::vector<TwoWayPair> arc_types(const Digraph& d, const TwoWayProfile& profile) {
  std::vector<TwoWayPair> types;
  for (int u = 0; u < d.n; ++u)
    for (int v : d.out[u]) types.push_back({1, profile.at(u, v).backward});
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  return types;
}

}  // namespace wdrd
