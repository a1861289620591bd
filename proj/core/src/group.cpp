#include "wdrd/group.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace wdrd {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::format_error: return "format-error";
    case errc::not_a_group: return "not-a-group";
    case errc::loop_error: return "loop-error";
    case errc::connectivity_error: return "connectivity-error";
    case errc::no_circuit: return "no-circuit-error";
    case errc::domain_error: return "domain-error";
    case errc::unsupported_family: return "unsupported-family";
    case errc::parameter_out_of_range: return "parameter-out-of-range";
    case errc::search_exhausted: return "search-exhausted";
    case errc::cache_corrupt: return "cache-corrupt";
    case errc::incomplete_catalog: return "incomplete-catalog";
    case errc::invalid_state: return "invalid-state";
  }
  return "unknown-error";
}

namespace {

std::vector<int> right_inverses(const std::vector<std::vector<int>>& table, int identity) {
  const int n = static_cast<int>(table.size());
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == identity) {
        inv[a] = b;
        break;
      }
    }
  }
  return inv;
}

}  // namespace

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw Error(errc::invalid_parameter, "cyclic group order must be at least 1");
  FiniteGroup g;
  g.order = n;
  g.name = "Z" + std::to_string(n);
  g.table.assign(n, std::vector<int>(n));
  g.inverses.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    g.inverses[a] = (n - a) % n;
  }
  g.identity = 0;
  return g;
}

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  FiniteGroup p;
  p.order = g.order * h.order;
  p.name = g.name + "x" + h.name;
  p.identity = g.identity * h.order + h.identity;
  p.table.assign(p.order, std::vector<int>(p.order));
  p.inverses.resize(p.order);
  for (int a1 = 0; a1 < g.order; ++a1) {
    for (int a2 = 0; a2 < h.order; ++a2) {
      const int a = a1 * h.order + a2;
      p.inverses[a] = g.inverses[a1] * h.order + h.inverses[a2];
      for (int b1 = 0; b1 < g.order; ++b1) {
        for (int b2 = 0; b2 < h.order; ++b2) {
          p.table[a][b1 * h.order + b2] = g.table[a1][b1] * h.order + h.table[a2][b2];
        }
      }
    }
  }
  return p;
}

FiniteGroup make_quaternion() {
  // Elements as (axis, sign): axis 0 is the real unit, 1,2,3 are i,j,k.
  // Index = 2*axis + (sign < 0).
  auto mul = [](int x, int y) {
    const int ax = x / 2, sx = (x % 2 == 0) ? 1 : -1;
    const int ay = y / 2, sy = (y % 2 == 0) ? 1 : -1;
    int az, sz = sx * sy;
    if (ax == 0) {
      az = ay;
    } else if (ay == 0) {
      az = ax;
    } else if (ax == ay) {
      az = 0;
      sz = -sz;
    } else {
      az = 6 - ax - ay;  // the remaining axis
      const bool forward = (ay - ax + 3) % 3 == 1;  // i*j=k, j*k=i, k*i=j
      if (!forward) sz = -sz;
    }
    return 2 * az + (sz < 0 ? 1 : 0);
  };
  FiniteGroup q;
  q.order = 8;
  q.name = "Q8";
  q.identity = 0;
  q.table.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) q.table[a][b] = mul(a, b);
  q.inverses = right_inverses(q.table, 0);
  return q;
}

FiniteGroup make_dihedral(int m) {
  if (m < 1) throw Error(errc::invalid_parameter, "dihedral parameter must be at least 1");
  const int n = 2 * m;
  FiniteGroup g;
  g.order = n;
  g.name = "D" + std::to_string(m);
  g.identity = 0;
  g.table.assign(n, std::vector<int>(n));
  auto mul = [m](int x, int y) {
    const int i = x % m, fx = x / m;
    const int j = y % m, fy = y / m;
    const int rot = fx == 0 ? (i + j) % m : (i - j + m) % m;
    return rot + ((fx + fy) % 2) * m;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = mul(a, b);
  g.inverses = right_inverses(g.table, 0);
  return g;
}

void validate_group(const FiniteGroup& g) {
  const int n = g.order;
  if (n < 1) throw Error(errc::not_a_group, "order must be positive");
  if (static_cast<int>(g.table.size()) != n)
    throw Error(errc::not_a_group, "table has wrong number of rows");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(g.table[a].size()) != n)
      throw Error(errc::not_a_group, "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = g.table[a][b];
      if (v < 0 || v >= n)
        throw Error(errc::not_a_group, "entry (" + std::to_string(a) + "," +
                                           std::to_string(b) + ") out of range");
    }
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      if (seen[g.table[a][b]]++)
        throw Error(errc::not_a_group, "row " + std::to_string(a) + " repeats value " +
                                           std::to_string(g.table[a][b]));
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      if (seen[g.table[a][b]]++)
        throw Error(errc::not_a_group, "column " + std::to_string(b) + " repeats value " +
                                           std::to_string(g.table[a][b]));
    }
  }
  const int e = g.identity;
  if (e < 0 || e >= n) throw Error(errc::not_a_group, "identity index out of range");
  for (int x = 0; x < n; ++x) {
    if (g.table[e][x] != x || g.table[x][e] != x)
      throw Error(errc::not_a_group, "claimed identity fails at element " + std::to_string(x));
  }
  if (static_cast<int>(g.inverses.size()) != n)
    throw Error(errc::not_a_group, "inverse table has wrong length");
  for (int x = 0; x < n; ++x) {
    const int y = g.inverses[x];
    if (y < 0 || y >= n || g.table[x][y] != e)
      throw Error(errc::not_a_group, "inverse fails at element " + std::to_string(x));
  }
  // Full associativity scan; first violating triple reported in lex order.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = g.table[a][b];
      for (int c = 0; c < n; ++c) {
        if (g.table[ab][c] != g.table[a][g.table[b][c]])
          throw Error(errc::not_a_group,
                      "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (g.table[g.inverses[x]][x] != e)
      throw Error(errc::not_a_group, "left inverse fails at element " + std::to_string(x));
  }
}

FiniteGroup load_group_table(std::istream& in) {
  FiniteGroup g;
  std::string line;
  int order = -1;
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> auts;
  std::string name;
  while (std::getline(in, line)) {
    // strip trailing CR and surrounding whitespace
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line[0] == '#') continue;
    if (line.rfind("order=", 0) == 0) {
      if (order >= 0) throw Error(errc::format_error, "duplicate order= line");
      try {
        order = std::stoi(line.substr(6));
      } catch (const std::exception&) {
        throw Error(errc::format_error, "cannot parse order= line");
      }
      if (order < 1) throw Error(errc::format_error, "order must be positive");
      continue;
    }
    if (line.rfind("name=", 0) == 0) {
      name = line.substr(5);
      continue;
    }
    if (line.rfind("aut=", 0) == 0 || order >= 0) {
      const bool is_aut = line.rfind("aut=", 0) == 0;
      std::istringstream row_in(is_aut ? line.substr(4) : line);
      std::vector<int> row;
      int v;
      while (row_in >> v) row.push_back(v);
      if (!row_in.eof()) throw Error(errc::format_error, "non-integer token in table row");
      if (order < 0) throw Error(errc::format_error, "aut= line before order=");
      if (static_cast<int>(row.size()) != order)
        throw Error(errc::format_error, "row has " + std::to_string(row.size()) +
                                            " entries, expected " + std::to_string(order));
      (is_aut ? auts : rows).push_back(std::move(row));
      continue;
    }
    throw Error(errc::format_error, "unexpected line before order=: " + line);
  }
  if (order < 0) throw Error(errc::format_error, "missing order= line");
  if (static_cast<int>(rows.size()) != order)
    throw Error(errc::format_error, "expected " + std::to_string(order) + " table rows, got " +
                                        std::to_string(rows.size()));
  g.order = order;
  g.table = std::move(rows);
  g.name = name.empty() ? ("order" + std::to_string(order)) : name;
  for (const auto& row : g.table) {
    for (int v : row) {
      if (v < 0 || v >= order) throw Error(errc::not_a_group, "table entry out of range");
    }
  }
  // Locate the two-sided identity.
  g.identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = g.table[e][x] == x && g.table[x][e] == x;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw Error(errc::not_a_group, "no identity element");
  g.inverses = right_inverses(g.table, g.identity);
  for (int x = 0; x < order; ++x) {
    if (g.inverses[x] < 0)
      throw Error(errc::not_a_group, "no right inverse for element " + std::to_string(x));
  }
  for (const auto& a : auts) {
    std::vector<char> hit(order, 0);
    for (int v : a) {
      if (v < 0 || v >= order || hit[v]++)
        throw Error(errc::format_error, "aut= line is not a permutation");
    }
    for (int x = 0; x < order; ++x) {
      for (int y = 0; y < order; ++y) {
        if (a[g.table[x][y]] != g.table[a[x]][a[y]])
          throw Error(errc::format_error, "aut= line is not an automorphism");
      }
    }
  }
  g.automorphisms = std::move(auts);
  validate_group(g);
  return g;
}

FiniteGroup load_group_table(const std::string& text) {
  std::istringstream in(text);
  return load_group_table(in);
}

std::string format_group_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << "order=" << g.order << "\n";
  if (!g.name.empty()) out << "name=" << g.name << "\n";
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (b) out << ' ';
      out << g.table[a][b];
    }
    out << "\n";
  }
  for (const auto& aut : g.automorphisms) {
    out << "aut=";
    for (size_t i = 0; i < aut.size(); ++i) {
      if (i) out << ' ';
      out << aut[i];
    }
    out << "\n";
  }
  return out.str();
}

ConnectionSet make_connection_set(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int s : elements) {
    if (s < 0 || s >= g.order)
      throw Error(errc::invalid_parameter, "connection element " + std::to_string(s) +
                                               " out of range for group of order " +
                                               std::to_string(g.order));
    if (s == g.identity)
      throw Error(errc::loop_error, "connection set contains the identity");
  }
  return ConnectionSet{std::move(elements)};
}

bool generates(const FiniteGroup& g, const ConnectionSet& s) {
  std::vector<char> reached(g.order, 0);
  std::vector<int> frontier{g.identity};
  reached[g.identity] = 1;
  int count = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int e : s.elements) {
        const int y = g.table[x][e];
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return count == g.order;
}

}  // namespace wdrd
