// Command-line front end: family construction, scheme checking, closed-form
// distance verification, enumeration and classification reports.
//
// Exit status: 0 verified/pass, 1 reported failure or mismatch, 2 usage or
// format errors.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdrd/classify.hpp"
#include "wdrd/digraph_io.hpp"
#include "wdrd/families.hpp"
#include "wdrd/scheme.hpp"

using json = nlohmann::ordered_json;
using namespace wdrd;

namespace {

json pair_json(TwoWayPair p) { return json::array({p.forward, p.backward}); }

json pairs_json(const std::vector<TwoWayPair>& v) {
  json a = json::array();
  for (auto p : v) a.push_back(pair_json(p));
  return a;
}

// dump with two-space indent, keeping arrays of primitives on one line
void dump_report(const json& j, std::string& out, int indent) {
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out.append(indent + 2, ' ');
      out += json(it.key()).dump() + ": ";
      dump_report(it.value(), out, indent + 2);
    }
    out += "\n";
    out.append(indent, ' ');
    out += "}";
    return;
  }
  if (j.is_array() && !j.empty()) {
    bool leaf = true;
    for (const auto& e : j) leaf = leaf && !e.is_structured();
    if (!leaf) {
      out += "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ",\n";
        first = false;
        out.append(indent + 2, ' ');
        dump_report(e, out, indent + 2);
      }
      out += "\n";
      out.append(indent, ' ');
      out += "]";
      return;
    }
  }
  if (j.is_array()) {
    out += "[";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ", ";
      first = false;
      out += e.dump();
    }
    out += "]";
    return;
  }
  out += j.dump();
}

void emit(const json& doc, const std::string& out_path) {
  std::string text;
  dump_report(doc, text, 0);
  text += "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

FamilySpec spec_from(const std::string& family, int g, int n) {
  const auto tag = parse_family_tag(family);
  if (!tag) throw Error(errc::invalid_parameter, "unknown family tag: " + family);
  FamilySpec spec{*tag, {}, {}};
  if (g > 0) spec.g = g;
  if (n > 0) spec.n = n;
  return spec;
}

json wdrd_json(const WdrdReport& r) {
  json j;
  j["wdrd"] = r.is_wdrd;
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"label", pair_json(w.label)},
                    {"pair1", json::array({w.x1, w.y1})},
                    {"pair2", json::array({w.x2, w.y2})},
                    {"i", pair_json(w.i)},
                    {"j", pair_json(w.j)},
                    {"count1", w.count1},
                    {"count2", w.count2}};
  } else {
    j["witness"] = nullptr;
  }
  j["commutative"] = r.is_commutative ? json(*r.is_commutative) : json(nullptr);
  j["thin_class"] = r.thinness ? json(thin_class_name(*r.thinness)) : json(nullptr);
  j["thin_class_with_diagonal"] =
      r.thinness_with_diagonal ? json(thin_class_name(*r.thinness_with_diagonal)) : json(nullptr);
  j["thin_conventions_agree"] = r.is_wdrd ? json(r.conventions_agree) : json(nullptr);
  return j;
}

struct CheckResult {
  json report;
  bool pass = false;
};

CheckResult run_check(const Digraph& d) {
  CheckResult result;
  json& j = result.report;
  j["n"] = d.n;
  int valency = static_cast<int>(d.out[0].size());
  for (const auto& row : d.out) {
    if (static_cast<int>(row.size()) != valency) {
      valency = -1;
      break;
    }
  }
  j["out_valency"] = valency;
  if (auto w = unreachable_witness(d)) {
    j["strongly_connected"] = false;
    j["unreachable"] = json::array({w->first, w->second});
    j["wdrd"] = false;
    j["notes"] = json::array({"not strongly connected; no two-way profile exists"});
    result.pass = false;
    return result;
  }
  j["strongly_connected"] = true;
  const TwoWayProfile profile = two_way_profile(d);
  const RelationPartition partition = relation_partition(profile);
  json notes = json::array();
  if (d.arc_count() > 0) {
    const int gi = girth(d, profile);
    j["girth"] = gi;
    if (gi <= 2) notes.push_back("girth 2: outside the girth > 2 hypothesis class");
  } else {
    j["girth"] = nullptr;
    notes.push_back("no arcs: girth undefined");
  }
  j["arc_types"] = pairs_json(arc_types(d, profile));
  j["labels"] = pairs_json(partition.labels);
  const WdrdReport report = check_wdrd(d, profile, partition);
  j.update(wdrd_json(report));
  const bool hypothesis = valency == 3 && d.arc_count() > 0 && girth(d, profile) > 2 &&
                          arc_types(d, profile).size() == 1;
  j["hypothesis_class"] = hypothesis;
  j["notes"] = notes;
  result.pass = report.is_wdrd;
  return result;
}

json scheme_json(const SchemeData& s, const IdentityReport& identities) {
  json j;
  j["n"] = s.partition.n;
  j["labels"] = pairs_json(s.partition.labels);
  j["valencies"] = s.valencies;
  const int r = s.rank();
  json tensor = json::array();
  for (int h = 0; h < r; ++h) {
    json plane = json::array();
    for (int i = 0; i < r; ++i) {
      json row = json::array();
      for (int jx = 0; jx < r; ++jx) row.push_back(s.p(h, i, jx));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  j["tensor"] = std::move(tensor);
  static const char* names[6] = {"i", "ii", "iii", "iv", "v", "vi"};
  json checks = json::array();
  for (int k = 0; k < 6; ++k) {
    json c;
    c["identity"] = names[k];
    c["pass"] = identities.checks[k].pass;
    c["witness"] =
        identities.checks[k].pass ? json(nullptr) : json(identities.checks[k].witness);
    checks.push_back(std::move(c));
  }
  j["identities"] = std::move(checks);
  return j;
}

json classify_json(const ClassificationReport& r) {
  json j;
  j["order"] = r.order;
  j["complete_catalog"] = r.complete_catalog;
  j["candidates_examined"] = r.candidates_examined;
  json classes = json::array();
  for (const auto& c : r.classes) {
    json cj;
    cj["vertices"] = c.representative.digraph.n;
    cj["group"] = c.representative.group_name;
    cj["connection"] = c.representative.connection;
    cj["certificate"] = c.certificate.hex();
    cj["matches"] = c.matches;
    cj["unmatched"] = c.matches.empty();
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  j["unmatched"] = r.unmatched_count();
  json expected = json::array();
  for (const auto& e : r.expected) {
    expected.push_back({{"label", e.label}, {"cayley", e.cayley}, {"found", e.found}});
  }
  j["expected_members"] = std::move(expected);
  j["all_expected_cayley_found"] = r.all_expected_cayley_found();
  return j;
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> orders;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto dots = token.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(token.substr(0, dots));
      const int hi = std::stoi(token.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) orders.push_back(v);
    } else {
      orders.push_back(std::stoi(token));
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      token.push_back(c);
    }
  }
  flush();
  if (orders.empty()) throw Error(errc::invalid_parameter, "no orders given");
  return orders;
}

void print_human_check(const json& j) {
  std::cout << "vertices:            " << j["n"] << "\n"
            << "strongly connected:  " << j["strongly_connected"] << "\n";
  if (j.contains("girth")) std::cout << "girth:               " << j["girth"] << "\n";
  if (j.contains("arc_types")) std::cout << "arc types:           " << j["arc_types"].dump() << "\n";
  if (j.contains("labels")) std::cout << "relations:           " << j["labels"].dump() << "\n";
  std::cout << "weakly distance-regular: " << j["wdrd"] << "\n";
  if (j.contains("commutative")) std::cout << "commutative:         " << j["commutative"] << "\n";
  if (j.contains("thin_class"))
    std::cout << "thin class:          " << j["thin_class"]
              << " (with diagonal: " << j["thin_class_with_diagonal"] << ")\n";
  if (j.contains("witness") && !j["witness"].is_null())
    std::cout << "witness:             " << j["witness"].dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weakly distance-regular digraph toolkit"};
  app.require_subcommand(1);

  std::string family, out_path, in_path, in_path_b, orders_text;
  std::string catalog_dir = env_or("WDRD_CATALOG_DIR", "data/groups");
  std::string data_dir = env_or("WDRD_DATA_DIR", "data");
  int g = 0, n = 0, order = 0;
  bool human = false, rederive = false;

  auto* construct = app.add_subcommand("construct", "build a family member digraph");
  construct->add_option("--family", family, "family tag i..viii")->required();
  construct->add_option("--g", g, "parameter g (family vi)");
  construct->add_option("--n", n, "parameter n (families vii, viii)");
  construct->add_option("--out", out_path, "output digraph document");

  auto* check = app.add_subcommand("check", "weak distance-regularity report for a digraph file");
  check->add_option("file", in_path, "digraph document")->required();
  check->add_flag("--human", human, "plain-text output");
  check->add_option("--out", out_path, "write the report to a file");

  auto* scheme_cmd = app.add_subcommand("scheme", "scheme data and identity checks");
  scheme_cmd->add_option("file", in_path, "digraph document")->required();
  scheme_cmd->add_option("--out", out_path, "write the report to a file");

  auto* table1 = app.add_subcommand("table1", "closed-form two-way distances vs BFS");
  table1->add_option("--family", family, "vi, vii or viii")->required();
  table1->add_option("--g", g, "parameter g (family vi)");
  table1->add_option("--n", n, "parameter n (families vii, viii)");
  table1->add_flag("--human", human, "plain-text output");
  table1->add_option("--out", out_path, "write the report to a file");

  auto* enumerate = app.add_subcommand("enumerate", "qualifying Cayley digraphs at one order");
  enumerate->add_option("--order", order, "group order")->required();
  enumerate->add_option("--catalog", catalog_dir, "group catalog directory");
  enumerate->add_option("--out", out_path, "write the report to a file");

  auto* classify = app.add_subcommand("classify", "classification census over orders");
  classify->add_option("--orders", orders_text, "e.g. 7..16 or 7,8,13")->required();
  classify->add_option("--catalog", catalog_dir, "group catalog directory");
  classify->add_option("--data", data_dir, "data directory (sporadic cache)");
  classify->add_flag("--human", human, "plain-text output");
  classify->add_option("--out", out_path, "write the report to a file");

  auto* sporadic = app.add_subcommand("sporadic", "emit the 18-vertex sporadic digraph");
  sporadic->add_flag("--rederive", rederive, "run the backtracking search instead of the cache");
  sporadic->add_option("--data", data_dir, "data directory (cache location)");
  sporadic->add_option("--out", out_path, "output digraph document");

  auto* iso = app.add_subcommand("iso", "isomorphism verdict for two digraph files");
  iso->add_option("a", in_path, "first digraph document")->required();
  iso->add_option("b", in_path_b, "second digraph document")->required();
  iso->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (construct->parsed()) {
      const FamilySpec spec = spec_from(family, g, n);
      SporadicOptions options;
      const auto cache = std::filesystem::path(data_dir) / "sporadic18.json";
      if (spec.tag == FamilyTag::iv && std::filesystem::exists(cache)) options.cache = cache;
      const Digraph d = build_family(spec, options);
      const std::string text = digraph_to_json(d);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_text_file(out_path, text);
      }
      return 0;
    }

    if (check->parsed()) {
      const Digraph d = read_digraph_file(in_path);
      const CheckResult result = run_check(d);
      if (human) {
        print_human_check(result.report);
      } else {
        emit(result.report, out_path);
      }
      return result.pass ? 0 : 1;
    }

    if (scheme_cmd->parsed()) {
      const Digraph d = read_digraph_file(in_path);
      if (auto w = unreachable_witness(d)) {
        json j;
        j["wdrd"] = false;
        j["strongly_connected"] = false;
        j["unreachable"] = json::array({w->first, w->second});
        emit(j, out_path);
        return 1;
      }
      const TwoWayProfile profile = two_way_profile(d);
      const RelationPartition partition = relation_partition(profile);
      const WdrdReport report = check_wdrd(d, profile, partition);
      if (!report.is_wdrd) {
        json j = wdrd_json(report);
        emit(j, out_path);
        return 1;
      }
      const SchemeData scheme = intersection_tensor(d, profile, partition, report);
      const IdentityReport identities = verify_scheme_identities(scheme);
      json j = scheme_json(scheme, identities);
      j.update(wdrd_json(report));
      emit(j, out_path);
      return identities.all_pass() ? 0 : 1;
    }

    if (table1->parsed()) {
      const FamilySpec spec = spec_from(family, g, n);
      const Table1Report report = verify_table1(spec);
      json j;
      j["family"] = spec.describe();
      j["checked"] = report.checked;
      j["mismatch_count"] = static_cast<int>(report.mismatches.size());
      json mm = json::array();
      for (const auto& m : report.mismatches) {
        mm.push_back({{"element", json::array({m.a, m.b})},
                      {"formula", pair_json(m.formula)},
                      {"bfs", pair_json(m.bfs)}});
      }
      j["mismatches"] = std::move(mm);
      if (human) {
        std::cout << "family " << spec.describe() << ": " << report.checked
                  << " elements checked, " << report.mismatches.size() << " mismatches\n";
      } else {
        emit(j, out_path);
      }
      return report.all_match() ? 0 : 1;
    }

    if (enumerate->parsed()) {
      const GroupCatalog catalog = load_catalog(catalog_dir);
      std::uint64_t examined = 0;
      const auto found = enumerate_cayley(catalog, order, &examined);
      json j;
      j["order"] = order;
      j["complete_catalog"] = catalog.is_complete(order);
      j["candidates_examined"] = examined;
      json list = json::array();
      for (const auto& c : found) {
        list.push_back({{"group", c.group_name},
                        {"connection", c.connection},
                        {"certificate", canonical_certificate(c.digraph).hex()}});
      }
      j["qualifying"] = std::move(list);
      emit(j, out_path);
      return 0;
    }

    if (classify->parsed()) {
      const GroupCatalog catalog = load_catalog(catalog_dir);
      SporadicOptions options;
      const auto cache = std::filesystem::path(data_dir) / "sporadic18.json";
      if (std::filesystem::exists(cache)) options.cache = cache;
      json reports = json::array();
      bool all_pass = true;
      for (int o : parse_orders(orders_text)) {
        const ClassificationReport r = classify_order(catalog, o, options);
        if (r.unmatched_count() > 0 || !r.all_expected_cayley_found()) all_pass = false;
        if (human) {
          std::cout << "order " << o << ": " << r.classes.size() << " classes, "
                    << r.unmatched_count() << " unmatched, examined " << r.candidates_examined
                    << "\n";
          for (const auto& c : r.classes) {
            std::cout << "  " << c.representative.group_name << " {";
            for (size_t i = 0; i < c.representative.connection.size(); ++i)
              std::cout << (i ? "," : "") << c.representative.connection[i];
            std::cout << "} -> ";
            if (c.matches.empty()) {
              std::cout << "UNMATCHED";
            } else {
              for (size_t i = 0; i < c.matches.size(); ++i)
                std::cout << (i ? ", " : "") << c.matches[i];
            }
            std::cout << "\n";
          }
        }
        reports.push_back(classify_json(r));
      }
      if (!human) emit(json{{"reports", std::move(reports)}}, out_path);
      return all_pass ? 0 : 1;
    }

    if (sporadic->parsed()) {
      const auto cache = std::filesystem::path(data_dir) / "sporadic18.json";
      if (!rederive) {
        const Digraph d = sporadic18_from_cache(cache);
        const std::string text = digraph_to_json(d);
        if (out_path.empty()) {
          std::cout << text;
        } else {
          write_text_file(out_path, text);
        }
        return 0;
      }
      const Digraph d = sporadic18_search();
      const std::string text = digraph_to_json(d);
      if (!out_path.empty()) write_text_file(out_path, text);
      json j;
      j["rederived"] = true;
      if (std::filesystem::exists(cache)) {
        const bool same = read_text_file(cache) == text;
        j["cache"] = cache.string();
        j["matches_cache_bytes"] = same;
        { std::string t; dump_report(j, t, 0); std::cout << t << "\n"; }
        return same ? 0 : 1;
      }
      j["cache"] = nullptr;
      j["matches_cache_bytes"] = nullptr;
      { std::string t; dump_report(j, t, 0); std::cout << t << "\n"; }
      return 0;
    }

    if (iso->parsed()) {
      const Digraph a = read_digraph_file(in_path);
      const Digraph b = read_digraph_file(in_path_b);
      const bool same = are_isomorphic(a, b);
      json j;
      j["a"] = in_path;
      j["b"] = in_path_b;
      j["n"] = json::array({a.n, b.n});
      j["isomorphic"] = same;
      emit(j, out_path);
      return same ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::search_exhausted:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
