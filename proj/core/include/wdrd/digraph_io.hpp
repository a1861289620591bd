#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "wdrd/digraph.hpp"

namespace wdrd {

// Digraph document: {"n": <int>, "arcs": [[u,v], ...]} with 0-based vertices
// and arcs sorted lexicographically. Serialization is byte-stable.
std::string digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const std::string& text);

void write_digraph_file(const Digraph& d, const std::filesystem::path& path);
Digraph read_digraph_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// FNV-1a 64-bit digest, used as the integrity stamp for shipped data files.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace wdrd
