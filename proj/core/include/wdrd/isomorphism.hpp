#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdrd/digraph.hpp"

namespace wdrd {

// Canonical form of a digraph: vertex count, arc count, then the arc list of
// the canonically relabelled digraph. Equal certificates iff isomorphic.
struct IsoCertificate {
  std::vector<std::uint32_t> words;

  std::string hex() const;
  friend bool operator==(const IsoCertificate&, const IsoCertificate&) = default;
  friend auto operator<=>(const IsoCertificate&, const IsoCertificate&) = default;
};

// Canonical labelling by colour refinement seeded with two-way distance
// pairs, followed by individualization backtracking; the certificate is the
// lexicographically least arc-list encoding over all refinement leaves.
IsoCertificate canonical_certificate(const Digraph& d);

bool are_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace wdrd
