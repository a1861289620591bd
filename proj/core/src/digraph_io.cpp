#include "wdrd/digraph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wdrd {

std::string digraph_to_json(const Digraph& d) {
  // hand-formatted for stable bytes and one arc per pair
  std::ostringstream out;
  out << "{\n  \"n\": " << d.n << ",\n  \"arcs\": [";
  bool first = true;
  for (int u = 0; u < d.n; ++u) {
    for (int v : d.out[u]) {
      if (!first) out << ",";
      first = false;
      out << "\n    [" << u << ", " << v << "]";
    }
  }
  if (!first) out << "\n  ";
  out << "]\n}\n";
  return out.str();
}

Digraph digraph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::format_error, std::string("digraph document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("arcs") ||
      !doc["n"].is_number_integer() || !doc["arcs"].is_array())
    throw Error(errc::format_error, "digraph document needs integer \"n\" and array \"arcs\"");
  const int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> arcs;
  for (const auto& a : doc["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw Error(errc::format_error, "each arc must be a pair of integers");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  try {
    return make_digraph(n, arcs);
  } catch (const Error& e) {
    throw Error(errc::format_error, std::string("digraph document: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::format_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::format_error, "cannot write " + path.string());
  out << text;
}

void write_digraph_file(const Digraph& d, const std::filesystem::path& path) {
  write_text_file(path, digraph_to_json(d));
}

Digraph read_digraph_file(const std::filesystem::path& path) {
  return digraph_from_json(read_text_file(path));
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace wdrd
