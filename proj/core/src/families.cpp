#include "wdrd/families.hpp"

#include <algorithm>

#include "wdrd/digraph_io.hpp"

namespace wdrd {

const char* family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::i: return "i";
    case FamilyTag::ii: return "ii";
    case FamilyTag::iii: return "iii";
    case FamilyTag::iv: return "iv";
    case FamilyTag::v: return "v";
    case FamilyTag::vi: return "vi";
    case FamilyTag::vii: return "vii";
    case FamilyTag::viii: return "viii";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_tag(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  for (FamilyTag tag : {FamilyTag::i, FamilyTag::ii, FamilyTag::iii, FamilyTag::iv, FamilyTag::v,
                        FamilyTag::vi, FamilyTag::vii, FamilyTag::viii}) {
    if (t == family_name(tag)) return tag;
  }
  return std::nullopt;
}

std::string FamilySpec::describe() const {
  std::string s = family_name(tag);
  if (tag == FamilyTag::vi) s += " g=" + std::to_string(g.value_or(0));
  if (tag == FamilyTag::vii || tag == FamilyTag::viii) s += " n=" + std::to_string(n.value_or(0));
  return s;
}

void validate_family_spec(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::i:
    case FamilyTag::ii:
    case FamilyTag::iii:
    case FamilyTag::iv:
    case FamilyTag::v:
      if (spec.g || spec.n)
        throw Error(errc::parameter_out_of_range,
                    std::string("family ") + family_name(spec.tag) + " takes no parameters");
      return;
    case FamilyTag::vi:
      if (!spec.g || *spec.g < 3)
        throw Error(errc::parameter_out_of_range, "family vi requires g >= 3");
      return;
    case FamilyTag::vii: {
      if (!spec.n) throw Error(errc::parameter_out_of_range, "family vii requires n");
      const int n = *spec.n;
      if (n < 2)
        throw Error(errc::parameter_out_of_range,
                    "family vii requires n >= 2 (distinct non-identity generators)");
      if (n % 3 == 0 && n != 3)
        throw Error(errc::parameter_out_of_range,
                    "family vii requires n not in 3Z \\ {3}; n=" + std::to_string(n));
      return;
    }
    case FamilyTag::viii:
      if (!spec.n || *spec.n < 2)
        throw Error(errc::parameter_out_of_range, "family viii requires n >= 2");
      return;
  }
}

FiniteGroup family_group(const FamilySpec& spec) {
  validate_family_spec(spec);
  switch (spec.tag) {
    case FamilyTag::i: return make_cyclic(7);
    case FamilyTag::ii: return make_quaternion();
    case FamilyTag::iii: return make_cyclic(13);
    case FamilyTag::iv:
      throw Error(errc::unsupported_family, "family iv is not a Cayley digraph");
    case FamilyTag::v:
      return make_direct_product(make_direct_product(make_cyclic(3), make_cyclic(3)),
                                 make_cyclic(3));
    case FamilyTag::vi: return make_direct_product(make_cyclic(*spec.g), make_cyclic(3));
    case FamilyTag::vii: return make_direct_product(make_cyclic(*spec.n), make_cyclic(*spec.n));
    case FamilyTag::viii:
      return make_direct_product(make_cyclic(*spec.n), make_cyclic(3 * *spec.n));
  }
  throw Error(errc::invalid_parameter, "bad family tag");
}

ConnectionSet family_connection_set(const FamilySpec& spec, const FiniteGroup& group) {
  validate_family_spec(spec);
  switch (spec.tag) {
    case FamilyTag::i: return make_connection_set(group, {1, 2, 4});
    case FamilyTag::ii: return make_connection_set(group, {2, 4, 6});  // i, j, k
    case FamilyTag::iii: return make_connection_set(group, {1, 3, 9});
    case FamilyTag::iv:
      throw Error(errc::unsupported_family, "family iv is not a Cayley digraph");
    case FamilyTag::v:
      // index of (a,b,c) in (Z3xZ3)xZ3 is (3a+b)*3+c
      return make_connection_set(group, {9, 3, 1});
    case FamilyTag::vi: {
      // (1,b) -> 3+b
      return make_connection_set(group, {3, 4, 5});
    }
    case FamilyTag::vii: {
      const int n = *spec.n;
      return make_connection_set(group, {1 * n + 0, 0 * n + 1, (n - 1) * n + (n - 1)});
    }
    case FamilyTag::viii: {
      const int n = *spec.n, m = 3 * n;
      return make_connection_set(group, {0 * m + 1, 1 * m + 1, (n - 1) * m + (m - 2)});
    }
  }
  throw Error(errc::invalid_parameter, "bad family tag");
}

Digraph build_family(const FamilySpec& spec, const SporadicOptions& sporadic) {
  validate_family_spec(spec);
  if (spec.tag == FamilyTag::iv) return build_sporadic_18(sporadic);
  const FiniteGroup group = family_group(spec);
  return cayley_digraph(group, family_connection_set(spec, group));
}

namespace {

int reduce_mod(int a, int m) { return ((a % m) + m) % m; }

TwoWayPair table1_vi(int g, int a, int b) {
  const int ah = reduce_mod(a, g);
  (void)b;
  if (ah == 0) return {g, g};
  return {ah, g - ah};
}

TwoWayPair table1_vii(int n, int a, int b) {
  const int ah = reduce_mod(a, n);
  const int bh = reduce_mod(b, n);
  auto axis = [n](int xh) {
    return TwoWayPair{std::min(xh, 2 * n - 2 * xh), std::min(n - xh, 2 * xh)};
  };
  if (bh == 0) return axis(ah);
  if (ah == 0) return axis(bh);
  if (ah == bh) return {std::min(n - ah, 2 * ah), std::min(ah, 2 * n - 2 * ah)};
  auto h = [&](int i) {
    return std::min({ah + bh, (i + 1) * n + ah - 2 * bh, (2 - i) * n - 2 * ah + bh});
  };
  auto l = [&](int i) {
    return std::min({2 * n - ah - bh, (1 - i) * n - ah + 2 * bh, i * n - bh + 2 * ah});
  };
  if (ah > bh) return {h(0), l(0)};
  return {h(1), l(1)};
}

TwoWayPair table1_viii(int n, int a, int b) {
  const int ah = reduce_mod(a, n);
  const int bh = reduce_mod(b, 3 * n);
  const int diff = bh - ah;  // in (-n, 3n)
  if (diff < 0)
    return {std::min(3 * n - 3 * ah + bh, 3 * ah - 2 * bh),
            std::min(3 * ah - bh, 3 * n + 2 * bh - 3 * ah)};
  if (diff < n) return {bh, std::max(3 * ah - bh, 2 * bh - 3 * ah)};
  if (diff < 2 * n)
    return {std::max(3 * n + 3 * ah - 2 * bh, bh - 3 * ah), 3 * n - bh};
  return {std::min(6 * n + 3 * ah - 2 * bh, bh - 3 * ah),
          std::min(3 * n + 3 * ah - bh, 2 * bh - 3 * ah - 3 * n)};
}

}  // namespace

TwoWayPair table1_two_way(const FamilySpec& spec, int a, int b) {
  validate_family_spec(spec);
  switch (spec.tag) {
    case FamilyTag::vi: {
      const int g = *spec.g;
      if (reduce_mod(a, g) == 0 && reduce_mod(b, 3) == 0)
        throw Error(errc::domain_error, "identity element has no table row");
      return table1_vi(g, a, b);
    }
    case FamilyTag::vii: {
      const int n = *spec.n;
      if (reduce_mod(a, n) == 0 && reduce_mod(b, n) == 0)
        throw Error(errc::domain_error, "identity element has no table row");
      return table1_vii(n, a, b);
    }
    case FamilyTag::viii: {
      const int n = *spec.n;
      if (reduce_mod(a, n) == 0 && reduce_mod(b, 3 * n) == 0)
        throw Error(errc::domain_error, "identity element has no table row");
      return table1_viii(n, a, b);
    }
    default:
      throw Error(errc::unsupported_family,
                  std::string("no closed-form table row for family ") + family_name(spec.tag));
  }
}

Table1Report verify_table1(const FamilySpec& spec) {
  validate_family_spec(spec);
  if (spec.tag != FamilyTag::vi && spec.tag != FamilyTag::vii && spec.tag != FamilyTag::viii)
    throw Error(errc::unsupported_family,
                std::string("no closed-form table row for family ") + family_name(spec.tag));
  Table1Report report;
  report.spec = spec;
  const Digraph d = build_family(spec);
  const TwoWayProfile profile = two_way_profile(d);
  // second modulus of the direct product layout
  int m2 = 0;
  switch (spec.tag) {
    case FamilyTag::vi: m2 = 3; break;
    case FamilyTag::vii: m2 = *spec.n; break;
    default: m2 = 3 * *spec.n; break;
  }
  for (int v = 1; v < d.n; ++v) {
    const int a = v / m2, b = v % m2;
    const TwoWayPair formula = table1_two_way(spec, a, b);
    const TwoWayPair bfs = profile.at(0, v);
    ++report.checked;
    if (formula != bfs) report.mismatches.push_back({a, b, formula, bfs});
  }
  return report;
}

bool FamilyCheck::pass() const {
  return strongly_connected && out_valency == 3 && girth_hypothesis_ok && arc_types.size() == 1 &&
         wdrd.is_wdrd && wdrd.is_commutative.value_or(false) && identities_pass;
}

FamilyCheck verify_family(const FamilySpec& spec, const SporadicOptions& sporadic) {
  FamilyCheck check;
  check.spec = spec;
  const Digraph d = build_family(spec, sporadic);
  check.vertices = d.n;
  check.strongly_connected = is_strongly_connected(d);
  int valency = d.n > 0 ? static_cast<int>(d.out[0].size()) : 0;
  for (const auto& row : d.out) {
    if (static_cast<int>(row.size()) != valency) {
      valency = -1;
      break;
    }
  }
  check.out_valency = valency;
  if (!check.strongly_connected) return check;
  const TwoWayProfile profile = two_way_profile(d);
  check.girth = girth(d, profile);
  check.girth_hypothesis_ok = check.girth > 2;
  check.arc_types = arc_types(d, profile);
  const RelationPartition partition = relation_partition(profile);
  check.wdrd = check_wdrd(d, profile, partition);
  if (check.wdrd.is_wdrd) {
    const SchemeData scheme = intersection_tensor(d, profile, partition, check.wdrd);
    check.identities_pass = verify_scheme_identities(scheme).all_pass();
  }
  return check;
}

std::vector<ClassifiedMember> classified_members_at_order(int order) {
  std::vector<ClassifiedMember> out;
  auto add = [&out](FamilySpec spec, bool cayley = true) {
    out.push_back({spec, spec.describe(), cayley});
  };
  if (order == 7) add({FamilyTag::i, {}, {}});
  if (order == 8) add({FamilyTag::ii, {}, {}});
  if (order == 13) add({FamilyTag::iii, {}, {}});
  if (order == 18) add({FamilyTag::iv, {}, {}}, false);
  if (order == 27) add({FamilyTag::v, {}, {}});
  if (order % 3 == 0 && order / 3 >= 3) add({FamilyTag::vi, order / 3, {}});
  for (int n = 3; n * n <= order; ++n) {
    if (n * n == order && (n % 3 != 0 || n == 3)) add({FamilyTag::vii, {}, n});
  }
  for (int n = 2; 3 * n * n <= order; ++n) {
    if (3 * n * n == order) add({FamilyTag::viii, {}, n});
  }
  return out;
}

}  // namespace wdrd
