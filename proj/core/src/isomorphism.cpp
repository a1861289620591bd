#include "wdrd/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace wdrd {

namespace {

// Edge colours: the pair (dist(x,y), dist(y,x)) with unreachable encoded as n,
// compressed to dense ids. This is a relabelling-equivariant edge colouring,
// strictly stronger than adjacency for the digraphs handled here.
struct EdgeColours {
  int n = 0;
  std::vector<int> colour;  // n*n dense ids

  int at(int x, int y) const { return colour[static_cast<size_t>(x) * n + y]; }
};

EdgeColours edge_colours(const Digraph& d) {
  const int n = d.n;
  const Digraph rev = reverse(d);
  EdgeColours ec;
  ec.n = n;
  std::vector<int> packed(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const auto df = bfs_distances(d, x);
    const auto db = bfs_distances(rev, x);
    for (int y = 0; y < n; ++y) {
      const int f = df[y] < 0 ? n : df[y];
      const int b = db[y] < 0 ? n : db[y];
      packed[static_cast<size_t>(x) * n + y] = f * (n + 1) + b;
    }
  }
  std::vector<int> values = packed;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ec.colour.resize(packed.size());
  for (size_t k = 0; k < packed.size(); ++k) {
    ec.colour[k] = static_cast<int>(
        std::lower_bound(values.begin(), values.end(), packed[k]) - values.begin());
  }
  return ec;
}

// One-dimensional refinement over the complete edge-coloured digraph. Colour
// ids are renumbered by sorted signature, which keeps them equivariant under
// relabelling.
std::vector<int> refine(const EdgeColours& ec, std::vector<int> col) {
  const int n = ec.n;
  std::vector<std::vector<long long>> sig(n);
  std::vector<int> order(n);
  for (;;) {
    for (int x = 0; x < n; ++x) {
      auto& s = sig[x];
      s.clear();
      s.push_back(col[x]);
      for (int y = 0; y < n; ++y) {
        if (y != x) s.push_back(static_cast<long long>(ec.at(x, y)) * (n + 1) + col[y]);
      }
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> ncol(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      ncol[order[i]] = c;
    }
    if (ncol == col) return col;
    col = std::move(ncol);
  }
}

// Individualization-refinement search with automorphism orbit pruning: the
// certificate is the least leaf encoding, and equal leaves reveal
// automorphisms whose orbits collapse sibling branches (pruned siblings lead
// to leaves equal to retained ones, so the minimum is unchanged).
struct Canonizer {
  const Digraph& d;
  EdgeColours ec;
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> first_leaf;
  std::vector<int> first_perm;                 // vertex -> canonical position
  std::vector<std::vector<int>> automorphisms;  // discovered generators
  std::vector<int> base;                        // individualized vertices on the path

  explicit Canonizer(const Digraph& digraph) : d(digraph), ec(edge_colours(digraph)) {}

  std::vector<std::uint32_t> encode(const std::vector<int>& col) const {
    std::vector<std::uint32_t> words;
    words.push_back(static_cast<std::uint32_t>(d.n));
    words.push_back(static_cast<std::uint32_t>(d.arc_count()));
    std::vector<std::uint32_t> arcs;
    for (int u = 0; u < d.n; ++u) {
      for (int v : d.out[u]) {
        arcs.push_back(static_cast<std::uint32_t>(col[u]) * d.n + col[v]);
      }
    }
    std::sort(arcs.begin(), arcs.end());
    words.insert(words.end(), arcs.begin(), arcs.end());
    return words;
  }

  void leaf(const std::vector<int>& col) {
    auto words = encode(col);
    if (first_leaf.empty()) {
      first_leaf = words;
      first_perm = col;
    } else if (words == first_leaf) {
      // col and first_perm are both vertex -> position maps onto the same
      // arc encoding, so first_perm^{-1} . col is an automorphism
      std::vector<int> pos_to_vertex(d.n);
      for (int v = 0; v < d.n; ++v) pos_to_vertex[first_perm[v]] = v;
      std::vector<int> gamma(d.n);
      for (int v = 0; v < d.n; ++v) gamma[v] = pos_to_vertex[col[v]];
      bool identity = true;
      for (int v = 0; v < d.n; ++v) {
        if (gamma[v] != v) {
          identity = false;
          break;
        }
      }
      if (!identity) automorphisms.push_back(std::move(gamma));
    }
    if (best.empty() || words < best) best = std::move(words);
  }

  // Orbits of the subgroup generated by the discovered automorphisms that fix
  // every base vertex; pruning with a subgroup is sound, it only under-prunes.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(d.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms) {
      bool fixes_base = true;
      for (int b : base) {
        if (gamma[b] != b) {
          fixes_base = false;
          break;
        }
      }
      if (!fixes_base) continue;
      for (int v = 0; v < d.n; ++v) {
        const int a = find(v), b2 = find(gamma[v]);
        if (a != b2) parent[a] = b2;
      }
    }
    std::vector<int> root(d.n);
    for (int v = 0; v < d.n; ++v) root[v] = find(v);
    return root;
  }

  void descend(const std::vector<int>& col) {
    const int n = d.n;
    std::vector<int> size(n, 0);
    for (int x = 0; x < n; ++x) ++size[col[x]];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    if (target < 0) {
      leaf(col);
      return;
    }
    std::vector<char> tried_orbit(n, 0);
    for (int v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      const std::vector<int> orbit = stabilizer_orbits();
      if (tried_orbit[orbit[v]]) continue;
      tried_orbit[orbit[v]] = 1;
      std::vector<int> branched = col;
      branched[v] = n;  // fresh colour
      base.push_back(v);
      descend(refine(ec, branched));
      base.pop_back();
    }
  }
};

}  // namespace

std::string IsoCertificate::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(words.size() * 8);
  for (std::uint32_t w : words) {
    for (int shift = 28; shift >= 0; shift -= 4) s.push_back(digits[(w >> shift) & 0xf]);
  }
  return s;
}

IsoCertificate canonical_certificate(const Digraph& d) {
  Canonizer canon(d);
  canon.descend(refine(canon.ec, std::vector<int>(d.n, 0)));
  return IsoCertificate{std::move(canon.best)};
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.n != b.n || a.arc_count() != b.arc_count()) return false;
  auto degree_profile = [](const Digraph& d) {
    const Digraph rev = reverse(d);
    std::vector<std::pair<int, int>> prof(d.n);
    for (int v = 0; v < d.n; ++v) {
      prof[v] = {static_cast<int>(d.out[v].size()), static_cast<int>(rev.out[v].size())};
    }
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  if (degree_profile(a) != degree_profile(b)) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace wdrd
