#include "ssg/products.hpp"

#include <algorithm>

namespace ssg {

bool internal_product_check(const FiniteSemigroup& s,
                            const std::vector<ElemSet>& factors) {
  if (factors.empty()) return false;
  for (const auto& f : factors) {
    if (f.empty()) throw PreconditionError("empty factor set");
    for (Elem x : f) {
      if (!s.in_range(x)) throw PreconditionError("factor element out of range");
    }
  }
  ElemSet acc = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) {
    ElemSet next;
    for (Elem x : acc) {
      for (Elem y : factors[i]) next.push_back(s.product(x, y));
    }
    acc = normalized(std::move(next));
  }
  return (int)acc.size() == s.size;
}

namespace {

bool b_factor_acceptable(const FiniteSemigroup& s, const ElemSet& b,
                         const SubgroupOptions& opts, bool allow_relaxed,
                         bool* strict_out) {
  if (s_subsemigroup_check(s, b, opts, 2)) {
    if (strict_out) *strict_out = true;
    return true;
  }
  if (allow_relaxed && s_subsemigroup_check(s, b, opts, 1)) {
    if (strict_out) *strict_out = false;
    return true;
  }
  return false;
}

bool factors_are_maximal(const FiniteSemigroup& s,
                         const std::vector<ElemSet>& factors,
                         const SubgroupOptions& opts) {
  const auto maximal = maximal_subgroups(s, opts);
  for (const auto& f : factors) {
    bool found = false;
    for (const auto& m : maximal) {
      if (m.members == f) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool strong_internal_product_check(const FiniteSemigroup& s, const ElemSet& b,
                                   const std::vector<ElemSet>& maximal_factors,
                                   const SubgroupOptions& opts,
                                   bool allow_relaxed_b) {
  if (!b_factor_acceptable(s, b, opts, allow_relaxed_b, nullptr)) return false;
  if (!factors_are_maximal(s, maximal_factors, opts)) return false;
  std::vector<ElemSet> all{b};
  all.insert(all.end(), maximal_factors.begin(), maximal_factors.end());
  return internal_product_check(s, all);
}

std::optional<ProductDecomposition> find_strong_decomposition(
    const FiniteSemigroup& s, const SubgroupOptions& opts) {
  if (!s.identity) return std::nullopt;
  const EmbeddedGroup units = maximal_subgroup_at(s, *s.identity);
  ElemSet b;
  for (Elem x = 0; x < s.size; ++x) {
    if (!units.contains(x)) b.push_back(x);
  }
  b = set_union(b, {*s.identity});
  ProductDecomposition d;
  d.kind = ProductKind::strong_internal;
  d.factors = {units.members};
  d.b_factor = b;
  if (!b_factor_acceptable(s, b, opts, /*allow_relaxed=*/true, &d.b_strict)) {
    return std::nullopt;
  }
  d.verified = internal_product_check(s, {b, units.members});
  if (!d.verified) return std::nullopt;
  return d;
}

SDirectProductVerdict s_direct_product_check(
    const std::vector<const FiniteSemigroup*>& factors,
    const SubgroupOptions& opts, int cap) {
  if (factors.empty()) throw PreconditionError("no factors");
  SDirectProductVerdict v;
  // Every factor must have a unique maximal subgroup.
  std::vector<ElemSet> factor_maximals;
  for (size_t i = 0; i < factors.size(); ++i) {
    const auto m = maximal_subgroups(*factors[i], opts);
    if (m.size() != 1) {
      v.non_unique_factor = i;
      return v;
    }
    factor_maximals.push_back(m.front().members);
  }
  FiniteSemigroup prod = *factors[0];
  ElemSet expected = factor_maximals[0];
  for (size_t i = 1; i < factors.size(); ++i) {
    const int rsize = factors[i]->size;
    prod = direct_product(prod, *factors[i], cap);
    ElemSet next;
    for (Elem x : expected) {
      for (Elem y : factor_maximals[i]) next.push_back(x * rsize + y);
    }
    expected = normalized(std::move(next));
  }
  const auto m = maximal_subgroups(prod, opts);
  v.ok = m.size() == 1 && m.front().members == expected;
  return v;
}

bool s_homomorphism_check(const FiniteSemigroup& s, const FiniteSemigroup& t,
                          const std::vector<Elem>& map,
                          const EmbeddedGroup& a, const EmbeddedGroup& a_img) {
  if ((int)map.size() != s.size) {
    throw PreconditionError("map must be total on the source carrier");
  }
  for (Elem v : map) {
    if (!t.in_range(v)) throw PreconditionError("map value out of range");
  }
  for (Elem x : a.members) {
    if (!a_img.contains(map[x])) return false;
  }
  for (Elem x : a.members) {
    for (Elem y : a.members) {
      if (map[s.product(x, y)] != t.product(map[x], map[y])) return false;
    }
  }
  return true;
}

bool s_isomorphism_check(const FiniteSemigroup& s, const FiniteSemigroup& t,
                         const std::vector<Elem>& map, const EmbeddedGroup& a,
                         const EmbeddedGroup& a_img) {
  if (!s_homomorphism_check(s, t, map, a, a_img)) return false;
  ElemSet image;
  for (Elem x : a.members) image.push_back(map[x]);
  image = normalized(std::move(image));
  return image == a_img.members;
}

CayleyEmbedding cayley_s_embedding(const FiniteSemigroup& s,
                                   const EmbeddedGroup& a) {
  if (a.parent != &s) {
    throw PreconditionError("subgroup does not belong to this semigroup");
  }
  CayleyEmbedding e;
  e.degree = a.order();
  e.images = regular_representation(a);
  return e;
}

}  // namespace ssg
