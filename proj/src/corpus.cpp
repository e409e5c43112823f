#include "ssg/corpus.hpp"

#include <algorithm>
#include <map>

#include "ssg/classify.hpp"
#include "ssg/group_kernel.hpp"

namespace ssg {

const char* to_string(ErrataStatus s) {
  switch (s) {
    case ErrataStatus::confirmed: return "confirmed";
    case ErrataStatus::refuted: return "refuted";
    case ErrataStatus::ambiguous: return "ambiguous";
  }
  return "?";
}

FiniteSemigroup make_cyclic_group(int n) {
  if (n < 1) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (int i = 1; i < n; ++i) {
    labels[i] = i == 1 ? "g" : "g^" + std::to_string(i);
  }
  return from_table(table, labels, "C" + std::to_string(n));
}

EmbeddedGroup whole_group(const FiniteSemigroup& s) {
  ElemSet all(s.size);
  for (int i = 0; i < s.size; ++i) all[i] = i;
  auto g = subgroup_check(s, all);
  if (!g) throw PreconditionError("the semigroup is not a group");
  return *g;
}

std::vector<FiniteSemigroup> build_corpus(const CorpusSpec& spec) {
  std::vector<FiniteSemigroup> out;
  for (int n = spec.zn_min; n <= spec.zn_max; ++n) out.push_back(make_zn_mul(n));
  const int tmax = spec.include_degree_5
                       ? std::max(spec.transformation_max_degree, 5)
                       : spec.transformation_max_degree;
  for (int n = 1; n <= tmax; ++n) out.push_back(make_full_transformation(n));
  for (auto [k, m] : spec.matrix_params) {
    out.push_back(make_matrix_semigroup(k, m));
  }
  std::map<std::string, const FiniteSemigroup*> by_name;
  for (const auto& s : out) by_name[s.name] = &s;
  std::vector<FiniteSemigroup> products;
  for (const auto& [l, r] : spec.product_pairs) {
    auto li = by_name.find(l), ri = by_name.find(r);
    if (li == by_name.end() || ri == by_name.end()) {
      throw PreconditionError("unknown corpus product factor " + l + " or " + r);
    }
    products.push_back(direct_product(*li->second, *ri->second));
  }
  for (auto& p : products) out.push_back(std::move(p));
  if (spec.include_handwritten) {
    // Two-element left-zero and right-zero semigroups: every element
    // idempotent, no subgroup of size 2.
    out.push_back(from_table({{0, 0}, {1, 1}}, {"a", "b"}, "LZ2"));
    out.push_back(from_table({{0, 1}, {0, 1}}, {"a", "b"}, "RZ2"));
    // The trivial semigroup.
    out.push_back(from_table({{0}}, {"e"}, "trivial"));
    // A three-element null semigroup with zero: x*y = 0 except the identity
    // row/column.
    out.push_back(from_table({{0, 0, 0}, {0, 0, 0}, {0, 1, 2}},
                             {"0", "n", "e"}, "null3"));
    // Small cyclic groups as semigroups, used by the group-notions suites.
    for (int n : {4, 6, 7, 25}) out.push_back(make_cyclic_group(n));
  }
  return out;
}

std::vector<ElemSet> brute_force_subgroups(const FiniteSemigroup& s,
                                           int max_subset_size,
                                           long long budget) {
  max_subset_size = std::min(max_subset_size, s.size);
  std::vector<ElemSet> found;
  long long examined = 0;
  ElemSet pick;
  // Enumerate subsets in size-then-lexicographic order.
  auto rec = [&](auto&& self, int next, int want) -> void {
    if ((int)pick.size() == want) {
      if (++examined > budget) {
        throw LimitError("brute-force subset budget exceeded");
      }
      if (subgroup_check(s, pick)) found.push_back(pick);
      return;
    }
    for (int x = next; x < s.size; ++x) {
      if (s.size - x < want - (int)pick.size()) break;
      pick.push_back(x);
      self(self, x + 1, want);
      pick.pop_back();
    }
  };
  for (int k = 1; k <= max_subset_size; ++k) rec(rec, 0, k);
  return found;
}

namespace {

ErrataEntry adjudicate_z9_subgroup_count() {
  ErrataEntry e;
  e.claim_id = "example-4.2.5";
  e.book_claim =
      "Z_9 under multiplication mod 9 has exactly two subsets of size >= 2 "
      "that are subgroups ({1,8} and the six units)";
  const auto s = make_zn_mul(9);
  const auto subs = all_subgroups(s);
  e.witness = {1, 4, 7};
  const bool witness_ok = subgroup_check(s, e.witness).has_value();
  e.status = (subs.size() == 2 || !witness_ok) ? ErrataStatus::confirmed
                                               : ErrataStatus::refuted;
  e.oracle_verdict = "exhaustive search finds " + std::to_string(subs.size()) +
                     " subgroups of size >= 2";
  e.witness_note = "{1,4,7} is a third subgroup (order 3, identity 1)";
  return e;
}

ErrataEntry adjudicate_z7_subgroup_list() {
  ErrataEntry e;
  e.claim_id = "example-1.3.9";
  e.book_claim =
      "the only subsets of Z_7 that are groups under multiplication mod 7 "
      "are {1,6} and {1,...,6}";
  const auto s = make_zn_mul(7);
  const auto subs = all_subgroups(s);
  e.witness = {1, 2, 4};
  const bool witness_ok = subgroup_check(s, e.witness).has_value();
  e.status = (subs.size() == 2 || !witness_ok) ? ErrataStatus::confirmed
                                               : ErrataStatus::refuted;
  e.oracle_verdict = "exhaustive search finds " + std::to_string(subs.size()) +
                     " subgroups of size >= 2";
  e.witness_note = "{1,2,4} is a further subgroup (order 3, identity 1)";
  return e;
}

ErrataEntry adjudicate_t3_subgroup_identities() {
  ErrataEntry e;
  e.claim_id = "example-4.2.3";
  e.book_claim =
      "every subgroup of the full transformation semigroup on 3 points has "
      "the identity map as its identity element";
  const auto s = make_full_transformation(3);
  e.status = ErrataStatus::confirmed;
  for (const auto& g : all_subgroups(s)) {
    if (g.identity != *s.identity) {
      e.status = ErrataStatus::refuted;
      e.witness = g.members;
      e.witness_note = "subgroup with identity element " +
                       s.label(g.identity) + ", not the identity map";
      break;
    }
  }
  e.oracle_verdict =
      e.status == ErrataStatus::refuted
          ? "rank-2 idempotents carry order-2 subgroups with their own "
            "identities"
          : "all subgroup identities equal the identity map";
  return e;
}

ErrataEntry adjudicate_z25_units_cyclicity() {
  ErrataEntry e;
  e.claim_id = "example-4.2.6";
  e.book_claim =
      "the order-20 unit group of Z_25 under multiplication is not cyclic";
  const auto s = make_zn_mul(25);
  const auto units = maximal_subgroup_at(s, 1);
  const bool cyclic = is_cyclic(units);
  e.status = cyclic ? ErrataStatus::refuted : ErrataStatus::confirmed;
  if (cyclic) {
    for (Elem x : units.members) {
      if (element_order(units, x) == units.order()) {
        e.witness = {x};
        e.witness_note =
            std::to_string(x) + " generates the full unit group (order " +
            std::to_string(units.order()) + ")";
        break;
      }
    }
  }
  e.oracle_verdict = cyclic ? "the unit group is cyclic"
                            : "no generator found";
  return e;
}

ErrataEntry adjudicate_z9_weakly_lagrange() {
  ErrataEntry e;
  e.claim_id = "example-4.6.2";
  e.book_claim =
      "Z_9 has no subgroup whose order divides 9 (not even weakly Lagrange)";
  const auto s = make_zn_mul(9);
  const auto r = classify(s);
  const bool weakly = r.lagrange_class != LagrangeClass::non_lagrange;
  e.status = weakly ? ErrataStatus::refuted : ErrataStatus::confirmed;
  if (weakly && r.dividing_witness) {
    e.witness = *r.dividing_witness;
    e.witness_note = "subgroup of order " +
                     std::to_string(e.witness.size()) + " divides 9";
  }
  e.oracle_verdict = std::string("classifier verdict: ") +
                     to_string(r.lagrange_class);
  return e;
}

ErrataEntry adjudicate_z8_subgroup_conjugacy() {
  ErrataEntry e;
  e.claim_id = "theorem-5.4.4";
  e.book_claim =
      "in Z_8, the subgroup {1,7} is conjugate to {1,5} and {1,3} but not to "
      "{1,3,5,7}";
  e.status = ErrataStatus::ambiguous;
  e.oracle_verdict =
      "Z_8 is commutative and its elements are not all invertible, so "
      "g*A*g^-1 has no consistent reading; conjugacy of subgroups is only "
      "defined inside a common group";
  return e;
}

ErrataEntry adjudicate_maximal_policy_conflict() {
  ErrataEntry e;
  e.claim_id = "theorem-6.5.1-vs-example-6.5.2";
  e.book_claim =
      "the full transformation semigroup on n points has exactly one maximal "
      "subgroup, while Z_12's maximal subgroups are listed at three distinct "
      "idempotent identities";
  const auto t3 = make_full_transformation(3);
  const auto z12 = make_zn_mul(12);
  SubgroupOptions any;
  SubgroupOptions global;
  global.policy = IdentityPolicy::global_identity_only;
  const size_t t3_any = maximal_subgroups(t3, any).size();
  const size_t t3_global = maximal_subgroups(t3, global).size();
  const size_t z12_any = maximal_subgroups(z12, any).size();
  e.status = ErrataStatus::ambiguous;
  e.oracle_verdict =
      "both statements hold under different subgroup scopes: counting "
      "subgroups at any idempotent gives " +
      std::to_string(t3_any) + " maximal subgroups for T3 and " +
      std::to_string(z12_any) +
      " for Z_12; restricting to the global identity gives " +
      std::to_string(t3_global) + " for T3; the identity policy flag selects "
      "the reading";
  return e;
}

ErrataEntry adjudicate_zp_cauchy_free() {
  ErrataEntry e;
  e.claim_id = "theorem-4.8.1";
  e.book_claim =
      "for prime p, no element of Z_p under multiplication mod p is a "
      "Cauchy element (its order never divides p)";
  e.status = ErrataStatus::confirmed;
  for (int p : {5, 7, 11, 13}) {
    const auto s = make_zn_mul(p);
    for (const auto& row : cauchy_elements(s)) {
      if (row.is_cauchy) {
        e.status = ErrataStatus::refuted;
        e.witness = {row.element};
        e.witness_note = "element of order " + std::to_string(row.order) +
                         " dividing " + std::to_string(p);
      }
    }
  }
  e.oracle_verdict = e.status == ErrataStatus::confirmed
                         ? "verified for p in {5,7,11,13}"
                         : "counterexample found";
  return e;
}

}  // namespace

std::vector<ErrataEntry> run_errata_suite() {
  return {
      adjudicate_z9_subgroup_count(),
      adjudicate_z7_subgroup_list(),
      adjudicate_t3_subgroup_identities(),
      adjudicate_z25_units_cyclicity(),
      adjudicate_z9_weakly_lagrange(),
      adjudicate_z8_subgroup_conjugacy(),
      adjudicate_maximal_policy_conflict(),
      adjudicate_zp_cauchy_free(),
  };
}

}  // namespace ssg
