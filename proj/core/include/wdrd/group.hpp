#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wdrd/error.hpp"

namespace wdrd {

// A finite group given by its full multiplication table over elements
// 0..order-1. Immutable after construction; all operations are table lookups.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;
  std::vector<int> inverses;
  std::string name;
  // Optional automorphism generators (permutations of element indices) read
  // from a table file; empty unless the file supplies `aut=` lines.
  std::vector<std::vector<int>> automorphisms;

  int product(int a, int b) const { return table[a][b]; }
  int inverse(int a) const { return inverses[a]; }
};

// A set of non-identity group elements used to define a Cayley digraph.
struct ConnectionSet {
  std::vector<int> elements;  // sorted, distinct, identity excluded
};

FiniteGroup make_cyclic(int n);
// Order |g|*|h|; element (a,b) has index a*|h| + b.
FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h);
// Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k, so i=2, j=4, k=6.
FiniteGroup make_quaternion();
// Dihedral group of order 2m: indices 0..m-1 are rotations r^i, m..2m-1 are
// reflections r^(i-m) s.
FiniteGroup make_dihedral(int m);

// Checks the Latin-square, identity, inverse and associativity axioms.
// Throws Error(errc::not_a_group) with a witness description on failure.
void validate_group(const FiniteGroup& g);

// Table document format: `order=<n>` first, optional `name=` and `aut=` lines,
// and n rows of n integers. `#` starts a comment line.
FiniteGroup load_group_table(std::istream& in);
FiniteGroup load_group_table(const std::string& text);
std::string format_group_table(const FiniteGroup& g);

// Validates element range and absence of the identity; sorts and dedups.
ConnectionSet make_connection_set(const FiniteGroup& g, std::vector<int> elements);

// True iff products of elements of s reach every element of g.
bool generates(const FiniteGroup& g, const ConnectionSet& s);

}  // namespace wdrd
