#include "ssg/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ssg/cosets.hpp"

namespace ssg {

const char* to_string(LagrangeClass c) {
  switch (c) {
    case LagrangeClass::lagrange: return "lagrange";
    case LagrangeClass::weakly_lagrange: return "weakly-lagrange";
    case LagrangeClass::non_lagrange: return "non-lagrange";
  }
  return "?";
}

std::pair<bool, std::optional<ElemSet>> is_s_semigroup(
    const FiniteSemigroup& s, const SubgroupOptions& opts) {
  const auto subs = all_subgroups(s, opts);
  if (subs.empty()) return {false, std::nullopt};
  return {true, subs.front().members};
}

std::vector<CauchyElement> cauchy_elements(const FiniteSemigroup& s,
                                           const SubgroupOptions& opts) {
  std::map<Elem, CauchyElement> rows;
  for (const auto& g : all_subgroups(s, opts)) {
    for (Elem x : g.members) {
      if (x == g.identity) continue;
      if (rows.count(x)) continue;
      const int r = element_order(g, x);
      rows[x] = CauchyElement{x, r, s.size % r == 0};
    }
  }
  std::vector<CauchyElement> out;
  out.reserve(rows.size());
  for (auto& [x, row] : rows) out.push_back(row);
  return out;
}

std::vector<SylowDetail> sylow_analysis(const FiniteSemigroup& s,
                                        const SubgroupOptions& opts,
                                        const std::vector<int>& primes) {
  std::vector<int> ps = primes;
  if (ps.empty()) {
    for (int p = 2; p <= s.size; ++p) {
      if (is_prime(p)) ps.push_back(p);
    }
  }
  const auto subs = all_subgroups(s, opts);
  std::vector<SylowDetail> out;
  for (int p : ps) {
    if (!is_prime(p)) throw PreconditionError("sylow_analysis requires primes");
    SylowDetail d;
    d.prime = p;
    d.divides_order = s.size % p == 0;
    if (!d.divides_order && p >= s.size) {
      out.push_back(std::move(d));
      continue;
    }
    for (const auto& g : subs) {
      if (g.order() < 2) continue;  // order p or p^t only, never the trivial group
      int n = g.order();
      while (n % p == 0) n /= p;
      if (n != 1) continue;
      (d.divides_order ? d.s_p_sylow_subgroups : d.non_p_sylow_subgroups)
          .push_back(g);
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool s_subsemigroup_check(const FiniteSemigroup& s, const ElemSet& subset,
                          const SubgroupOptions& opts, int min_group_size) {
  if (subset.empty() || (int)subset.size() >= s.size) return false;
  for (Elem x : subset) {
    for (Elem y : subset) {
      if (!set_contains(subset, s.product(x, y))) return false;
    }
  }
  // Look for a group of the required size that is a proper subset of the
  // subsemigroup itself. Properness relative to the whole semigroup does not
  // matter here.
  SubgroupOptions inner = opts;
  inner.min_size = std::max(1, min_group_size);
  inner.proper_only = false;
  for (const auto& g : all_subgroups(s, inner)) {
    if ((int)g.members.size() < (int)subset.size() &&
        is_subset(g.members, subset)) {
      return true;
    }
  }
  return false;
}

bool is_hyper_subsemigroup(const FiniteSemigroup& s, const ElemSet& subset,
                           const SubgroupOptions& opts) {
  if (subset.empty() || (int)subset.size() >= s.size) return false;
  for (Elem x : subset) {
    for (Elem y : subset) {
      if (!set_contains(subset, s.product(x, y))) return false;
    }
  }
  for (const auto& l : largest_subgroups(s, opts)) {
    if ((int)l.members.size() < (int)subset.size() &&
        is_subset(l.members, subset)) {
      return true;
    }
  }
  return false;
}

std::vector<ElemSet> hyper_subsemigroups(const FiniteSemigroup& s,
                                         const SubgroupOptions& opts) {
  const auto largest = largest_subgroups(s, opts);
  if (largest.empty()) return {};
  auto is_hyper = [&](const ElemSet& subset) {
    if (subset.empty() || (int)subset.size() >= s.size) return false;
    for (Elem x : subset) {
      for (Elem y : subset) {
        if (!set_contains(subset, s.product(x, y))) return false;
      }
    }
    for (const auto& l : largest) {
      if (l.members.size() < subset.size() && is_subset(l.members, subset)) {
        return true;
      }
    }
    return false;
  };
  std::set<ElemSet> found;
  if (s.size <= 12) {
    // Exhaustive subset search.
    for (unsigned mask = 1; mask < (1u << s.size); ++mask) {
      ElemSet subset;
      for (int i = 0; i < s.size; ++i) {
        if (mask & (1u << i)) subset.push_back(i);
      }
      if (is_hyper(subset)) found.insert(std::move(subset));
    }
  } else {
    // Single-element extensions of each largest subgroup.
    for (const auto& l : largest) {
      for (Elem x = 0; x < s.size; ++x) {
        if (l.contains(x)) continue;
        ElemSet c = closure_of(s, set_union(l.members, {x}));
        if (is_hyper(c)) found.insert(std::move(c));
      }
    }
  }
  std::vector<ElemSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

bool is_s_simple(const FiniteSemigroup& s, const SubgroupOptions& opts) {
  return hyper_subsemigroups(s, opts).empty();
}

ClassificationReport classify(const FiniteSemigroup& s,
                              const SubgroupOptions& opts) {
  ClassificationReport r;
  r.order = s.size;
  r.policy = opts.policy;
  const auto subs = all_subgroups(s, opts);
  r.is_s_semigroup = !subs.empty();
  if (!r.is_s_semigroup) return r;
  r.s_witness = subs.front().members;

  r.s_commutative = true;
  r.s_cyclic = true;
  bool any_divides = false, all_divide = true;
  for (const auto& g : subs) {
    const bool abelian = is_abelian(g);
    const bool cyclic = is_cyclic(g);
    if (!abelian && !r.non_commutative_witness) {
      r.non_commutative_witness = g.members;
    }
    if (abelian && !r.commutative_witness) r.commutative_witness = g.members;
    if (!cyclic && !r.non_cyclic_witness) r.non_cyclic_witness = g.members;
    if (cyclic && !r.cyclic_witness) r.cyclic_witness = g.members;
    r.s_commutative = r.s_commutative && abelian;
    r.s_cyclic = r.s_cyclic && cyclic;
    if (s.size % g.order() == 0) {
      any_divides = true;
      if (!r.dividing_witness) r.dividing_witness = g.members;
    } else {
      all_divide = false;
      if (!r.non_dividing_witness) r.non_dividing_witness = g.members;
    }
  }
  r.s_weakly_commutative = r.commutative_witness.has_value();
  r.s_weakly_cyclic = r.cyclic_witness.has_value();
  r.lagrange_class = all_divide     ? LagrangeClass::lagrange
                     : any_divides  ? LagrangeClass::weakly_lagrange
                                    : LagrangeClass::non_lagrange;

  r.sylow = sylow_analysis(s, opts);
  r.is_p_sylow_semigroup = true;
  for (const auto& d : r.sylow) {
    if (d.divides_order && d.s_p_sylow_subgroups.empty()) {
      r.is_p_sylow_semigroup = false;
    }
  }

  r.cauchy_table = cauchy_elements(s, opts);
  r.is_cauchy_semigroup = !r.cauchy_table.empty();
  for (const auto& row : r.cauchy_table) {
    if (!row.is_cauchy) r.is_cauchy_semigroup = false;
  }

  r.is_s_simple = is_s_simple(s, opts);
  r.is_pseudo_simple = is_pseudo_simple(s, opts);

  const auto maximal = maximal_subgroups(s, opts);
  r.maximal_subgroup_count = (int)maximal.size();
  r.is_s_maximal = maximal.size() == 1;
  const auto largest = largest_subgroups(s, opts);
  if (!largest.empty()) r.largest_subgroup = largest.front().members;
  return r;
}

}  // namespace ssg
