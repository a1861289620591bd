#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "wdrd/group.hpp"

namespace wdrd {

// Simple finite digraph: no loops, no parallel arcs, sorted out-lists.
struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;

  int arc_count() const;
  bool has_arc(int u, int v) const;
};

// Validates vertex range, simplicity; sorts and rejects duplicates.
Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs);
Digraph reverse(const Digraph& d);

// The ordered pair (dist(x,y), dist(y,x)).
struct TwoWayPair {
  int forward = 0;
  int backward = 0;
  friend auto operator<=>(const TwoWayPair&, const TwoWayPair&) = default;
};

inline TwoWayPair reversed(TwoWayPair p) { return {p.backward, p.forward}; }

struct TwoWayProfile {
  int n = 0;
  std::vector<TwoWayPair> pairs;  // row-major n*n

  TwoWayPair at(int x, int y) const { return pairs[static_cast<size_t>(x) * n + y]; }
};

// Right-multiplication convention: arc x -> x*s for every s in the connection
// set, so left translations act as automorphisms.
Digraph cayley_digraph(const FiniteGroup& g, const ConnectionSet& s);

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Digraph& d, int source);

bool is_strongly_connected(const Digraph& d);
// Some ordered pair (x,y) with no path x -> y, if one exists.
std::optional<std::pair<int, int>> unreachable_witness(const Digraph& d);

// Requires strong connectivity; throws Error(errc::connectivity_error) with a
// witness pair otherwise.
TwoWayProfile two_way_profile(const Digraph& d);

// Length of a shortest circuit, computed as min over arcs (u,v) of
// 1 + dist(v,u). Throws Error(errc::no_circuit) when d has no arcs.
int girth(const Digraph& d, const TwoWayProfile& profile);
int girth(const Digraph& d);

// Sorted distinct arc types (1, dist(v,u)) over all arcs (u,v).
std::vector<TwoWayPair> arc_types(const Digraph& d, const TwoWayProfile& profile);

}  // namespace wdrd
