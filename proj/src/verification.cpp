#include "ssg/verification.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ssg/classify.hpp"
#include "ssg/corpus.hpp"
#include "ssg/cosets.hpp"
#include "ssg/group_kernel.hpp"
#include "ssg/group_notions.hpp"
#include "ssg/products.hpp"
#include "ssg/report.hpp"

namespace ssg {

namespace {

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) failures_.push_back(what);
  }
  CheckResult result(const std::string& id, const std::string& label) const {
    CheckResult r;
    r.id = id;
    r.label = label;
    r.pass = failures_.empty();
    std::ostringstream o;
    for (size_t i = 0; i < failures_.size(); ++i) {
      if (i) o << "; ";
      o << failures_[i];
    }
    r.detail = o.str();
    return r;
  }

 private:
  std::vector<std::string> failures_;
};

std::vector<ElemSet> members_of(const std::vector<EmbeddedGroup>& gs) {
  std::vector<ElemSet> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(g.members);
  return out;
}

bool contains_set(const std::vector<ElemSet>& sets, const ElemSet& s) {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

Transformation perm_from_cycles(int degree,
                                const std::vector<std::vector<int>>& cycles) {
  Transformation t = Transformation::identity(degree);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      t.images[c[i] - 1] = c[(i + 1) % c.size()];
    }
  }
  return t;
}

CheckResult criterion_z12_census() {
  Checker c;
  const auto s = make_zn_mul(12);
  const auto subs = all_subgroups(s);
  const std::vector<ElemSet> expected = {{1, 5},  {1, 7},  {1, 11},
                                         {3, 9},  {4, 8},  {1, 5, 7, 11}};
  const std::vector<Elem> expected_ids = {1, 1, 1, 9, 4, 1};
  c.expect(members_of(subs) == expected,
           "Z_12 subgroup census differs from the six expected sets");
  if (subs.size() == expected.size()) {
    for (size_t i = 0; i < subs.size(); ++i) {
      c.expect(subs[i].identity == expected_ids[i],
               "identity of " + set_to_string(subs[i].members) + " is " +
                   std::to_string(subs[i].identity));
    }
  }
  return c.result("1", "Z_12 subgroup census");
}

CheckResult criterion_z16_sylow() {
  Checker c;
  const auto s = make_zn_mul(16);
  const auto details = sylow_analysis(s, {}, {2});
  c.expect(details.size() == 1 && details[0].divides_order,
           "2 must divide 16");
  const auto sets = members_of(details[0].s_p_sylow_subgroups);
  std::vector<int> orders;
  for (const auto& m : sets) orders.push_back((int)m.size());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  c.expect(orders == std::vector<int>({2, 4, 8}),
           "2-power subgroup orders are not {2,4,8}");
  for (const ElemSet& want :
       {ElemSet{1, 15}, ElemSet{1, 3, 9, 11}, ElemSet{1, 5, 9, 13},
        ElemSet{1, 3, 5, 7, 9, 11, 13, 15}}) {
    c.expect(contains_set(sets, want),
             "missing 2-power subgroup " + set_to_string(want));
  }
  return c.result("2", "Z_16 Sylow anomaly");
}

CheckResult criterion_coset_fixtures() {
  Checker c;
  const auto z10 = make_zn_mul(10);
  const auto z12 = make_zn_mul(12);

  c.expect(maximal_subgroup_at(z10, 6).members == ElemSet({2, 4, 6, 8}),
           "maximal subgroup at 6 in Z_10");

  const auto a39 = *subgroup_check(z12, {3, 9});
  c.expect(s_coset(z12, a39, 4, CosetSide::left) == ElemSet({0}),
           "4*{3,9} in Z_12");
  c.expect(s_coset(z12, a39, 5, CosetSide::left) == ElemSet({3, 9}),
           "5*{3,9} in Z_12");

  const auto a19 = *subgroup_check(z10, {1, 9});
  const auto cp = coset_partition_report(z10, a19);
  const std::vector<ElemSet> expected = {{0},    {5},    {1, 9},
                                         {2, 8}, {3, 7}, {4, 6}};
  c.expect(cp.classes == expected, "coset classes of {1,9} in Z_10");
  c.expect(cp.is_disjoint && cp.covers && !cp.uniform,
           "coset partition flags of {1,9} in Z_10");

  const auto normals = s_normal_subgroups(z10);
  c.expect(members_of(normals) == std::vector<ElemSet>({{2, 4, 6, 8}}),
           "S-normal subgroups of Z_10");
  if (!normals.empty()) {
    c.expect(quotient(z10, normals[0]).classes.size() == 2,
             "quotient of Z_10 by {2,4,6,8} has 2 classes");
  }

  const auto b = *subgroup_check(z10, {2, 4, 6, 8});
  c.expect(double_coset(z10, a19, b, 3) == ElemSet({2, 4, 6, 8}),
           "double coset A3B in Z_10");
  c.expect(double_coset(z10, a19, b, 5) == ElemSet({0}),
           "double coset A5B in Z_10");
  return c.result("3", "Z_10 and Z_12 coset fixtures");
}

CheckResult criterion_zp_battery() {
  Checker c;
  const std::map<int, int> expected_counts = {{5, 2}, {7, 3}, {11, 3}, {13, 5}};
  for (const auto& [p, count] : expected_counts) {
    const auto s = make_zn_mul(p);
    const auto r = classify(s);
    ElemSet units;
    for (int i = 1; i < p; ++i) units.push_back(i);
    c.expect(r.lagrange_class == LagrangeClass::non_lagrange,
             "Z_" + std::to_string(p) + " is non-Lagrange");
    c.expect(r.is_s_simple, "Z_" + std::to_string(p) + " is S-simple");
    c.expect(!r.cauchy_table.empty(),
             "Z_" + std::to_string(p) + " has subgroup elements");
    for (const auto& row : r.cauchy_table) {
      c.expect(!row.is_cauchy, "Z_" + std::to_string(p) +
                                   " has no Cauchy element, got " +
                                   std::to_string(row.element));
    }
    c.expect(members_of(largest_subgroups(s)) == std::vector<ElemSet>({units}),
             "units are the unique largest subgroup of Z_" + std::to_string(p));
    c.expect(members_of(s_normal_subgroups(s)) ==
                 std::vector<ElemSet>({units}),
             "units are the unique S-normal subgroup of Z_" +
                 std::to_string(p));
    c.expect(!is_s_normal(s, *subgroup_check(s, {1, p - 1})),
             "{1,p-1} is not S-normal in Z_" + std::to_string(p));
    const auto oracle = brute_force_subgroups(s, p);
    std::vector<ElemSet> oracle_min2;
    for (const auto& m : oracle) {
      if (m.size() >= 2) oracle_min2.push_back(m);
    }
    std::sort(oracle_min2.begin(), oracle_min2.end(), set_less);
    c.expect((int)oracle_min2.size() == count,
             "Z_" + std::to_string(p) + " brute-force subgroup count");
    c.expect(members_of(all_subgroups(s)) == oracle_min2,
             "Z_" + std::to_string(p) + " engine/oracle subgroup agreement");
    if (p == 7) {
      c.expect(contains_set(oracle_min2, {1, 2, 4}),
               "{1,2,4} is a subgroup of Z_7");
    }
  }
  return c.result("4", "Z_p battery (p in {5,7,11,13})");
}

CheckResult criterion_t3_battery() {
  Checker c;
  const auto t3 = make_full_transformation(3);
  c.expect(t3.size == 27, "T3 has 27 elements");
  c.expect(idempotents(t3).size() == 10, "T3 has 10 idempotents");
  const auto r = classify(t3);
  c.expect(r.is_s_semigroup, "T3 is an S-semigroup");
  c.expect(!r.s_commutative, "T3 is not S-commutative");
  c.expect(r.s_weakly_cyclic, "T3 is weakly cyclic");
  c.expect(r.lagrange_class == LagrangeClass::weakly_lagrange,
           "T3 is weakly Lagrange but not Lagrange");
  for (const auto& row : r.cauchy_table) {
    if (row.order == 2) {
      c.expect(!row.is_cauchy, "order-2 element " + std::to_string(row.element) +
                                   " fails the Cauchy test");
    }
  }
  c.expect(r.is_pseudo_simple, "T3 is pseudo-simple");
  const ElemSet s3 = {5, 7, 11, 15, 19, 21};
  const ElemSet hyper = normalized(set_union(s3, {0, 13, 26}));
  c.expect(is_hyper_subsemigroup(t3, hyper),
           "S_3 plus the three constant maps is a hyper subsemigroup");
  c.expect(contains_set(hyper_subsemigroups(t3), hyper),
           "the hyper search finds S_3 plus the constants");
  SubgroupOptions global;
  global.policy = IdentityPolicy::global_identity_only;
  c.expect(members_of(maximal_subgroups(t3, global)) ==
               std::vector<ElemSet>({s3}),
           "T3 has exactly one maximal subgroup under the global policy");
  const auto d = find_strong_decomposition(t3);
  c.expect(d.has_value() && d->verified, "T3 strong decomposition verifies");
  if (d) {
    c.expect(d->factors == std::vector<ElemSet>({s3}),
             "T3 decomposition factor is S_3");
    c.expect(d->b_factor && (int)d->b_factor->size() == 27 - 6 + 1,
             "T3 decomposition B-factor is the non-units plus the identity");
    c.expect(d->b_strict, "T3 decomposition B-factor holds a real subgroup");
  }
  return c.result("5", "T3 battery");
}

CheckResult criterion_t2_lagrange() {
  Checker c;
  const auto t2 = make_full_transformation(2);
  c.expect(t2.size == 4, "T2 has 4 elements");
  const auto r = classify(t2);
  c.expect(r.is_s_semigroup, "T2 is an S-semigroup");
  c.expect(r.lagrange_class == LagrangeClass::lagrange, "T2 is Lagrange");
  return c.result("6", "T2 is Lagrange");
}

CheckResult criterion_matrix_battery() {
  Checker c;
  const auto m = make_matrix_semigroup(2, 2);
  c.expect(m.size == 16, "2x2 matrices over Z_2 number 16");
  const auto r = classify(m);
  c.expect(r.lagrange_class == LagrangeClass::weakly_lagrange,
           "the matrix semigroup is weakly Lagrange but not Lagrange");
  const Elem unipotent = 13;  // [[1,1],[0,1]]
  const Elem order3 = 14;     // [[1,1],[1,0]]
  bool saw_unipotent = false, saw_order3 = false;
  for (const auto& row : r.cauchy_table) {
    if (row.element == unipotent) {
      saw_unipotent = true;
      c.expect(row.order == 2 && row.is_cauchy,
               "the unipotent matrix is a Cauchy element");
    }
    if (row.element == order3) {
      saw_order3 = true;
      c.expect(row.order == 3 && !row.is_cauchy,
               "the order-3 matrix is not a Cauchy element");
    }
  }
  c.expect(saw_unipotent && saw_order3, "both matrix fixtures appear");
  const auto cgrp = *subgroup_check(m, {7, 9, 14});
  const auto cp = coset_partition_report(m, cgrp);
  c.expect(cp.class_sizes == std::vector<int>({1, 3, 3, 3, 3, 3}),
           "cosets of the order-3 group: zero plus five classes of size 3");
  c.expect(cp.is_disjoint && cp.covers, "order-3 coset partition flags");
  const auto dgrp = *subgroup_check(m, {6, 9});
  const auto dp = coset_partition_report(m, dgrp);
  c.expect(dp.class_sizes ==
               std::vector<int>({1, 1, 1, 1, 2, 2, 2, 2, 2, 2}),
           "cosets of the order-2 group have sizes [1,1,1,1,2,2,2,2,2,2]");
  c.expect(dp.is_disjoint && dp.covers, "order-2 coset partition flags");
  return c.result("7", "2x2 matrices over Z_2");
}

CheckResult criterion_s_inverse_suite() {
  Checker c;
  const auto t3 = make_full_transformation(3);
  const auto s3 = maximal_subgroup_at(t3, *t3.identity);
  c.expect(classify_s_inverse(s3) == SInverseClass::inverse_free,
           "S_3 is inverse-free");

  for (int p : {5, 7, 11, 13}) {
    const auto cp = make_cyclic_group(p);
    const auto g = whole_group(cp);
    c.expect(classify_s_inverse(g) == SInverseClass::inverse_group,
             "C_" + std::to_string(p) + " is an inverse group");
    const auto pairs = s_inverse_pairs(g);
    c.expect((int)pairs.size() == (p - 1) / 2,
             "C_" + std::to_string(p) + " has (p-1)/2 inverse pairs");
    for (const auto& pr : pairs) {
      const int k = pr.x;  // member index equals the exponent of g
      c.expect(pr.y == p - k, "pair partners multiply to the identity");
      c.expect(pr.realizations.size() == 1,
               "C_" + std::to_string(p) + " pair (g^" + std::to_string(k) +
                   ", g^" + std::to_string(p - k) + ") has one realization");
      for (const auto& rz : pr.realizations) {
        c.expect(rz.a == (2 * (p - k)) % p && rz.b == (2 * k) % p,
                 "realization of (g^" + std::to_string(k) + ", g^" +
                     std::to_string(p - k) + ")");
      }
    }
    // The quoted construction at k = 1: related pair {g^2, g^(p-2)}.
    if (!pairs.empty()) {
      const auto& first = pairs.front();
      const ElemSet rel = normalized(
          {first.realizations[0].a, first.realizations[0].b});
      c.expect(first.x == 1 && first.y == p - 1 &&
                   rel == ElemSet({2, p - 2}),
               "the (g, g^(p-1)) pair relates through {g^2, g^(p-2)}");
    }
  }

  const auto c6 = make_cyclic_group(6);
  const auto g6 = whole_group(c6);
  const auto pairs6 = s_inverse_pairs(g6);
  c.expect(pairs6.size() == 1 && pairs6[0].x == 1 && pairs6[0].y == 5,
           "C_6 has exactly the pair (g, g^5)");
  if (pairs6.size() == 1) {
    c.expect(pairs6[0].realizations.size() == 1 &&
                 normalized({pairs6[0].realizations[0].a,
                             pairs6[0].realizations[0].b}) == ElemSet({2, 4}),
             "the C_6 pair relates through {g^2, g^4}");
    c.expect(!is_self_inversed_pair(g6, pairs6[0]),
             "the C_6 relating pair is not self-inversed");
    c.expect(!co_inverse_check(g6, pairs6[0]),
             "the C_6 relating pair is not a co-inverse pair");
  }
  c.expect(!has_s_inverse(g6, 3), "g^3 in C_6 has no inverse pair");

  const auto z5 = make_zn_mul(5);
  const auto z5units = maximal_subgroup_at(z5, 1);
  const auto pairs5 = s_inverse_pairs(z5units);
  c.expect(pairs5.size() == 1 && pairs5[0].x == 2 && pairs5[0].y == 3,
           "Z_5 units have exactly the pair (2, 3)");
  if (pairs5.size() == 1) {
    c.expect(pairs5[0].realizations.size() == 1 &&
                 pairs5[0].realizations[0].a == 4 &&
                 pairs5[0].realizations[0].b == 4,
             "the (2,3) pair relates through (4,4)");
    c.expect(!co_inverse_check(z5units, pairs5[0]),
             "(4,4) is itself not an inverse pair");
  }
  c.expect(!has_s_inverse(z5units, 4), "4 has no inverse pair in Z_5 units");

  // No self-inverse element ever has an inverse pair, across the corpus.
  CorpusSpec small;
  small.zn_max = 20;
  small.product_pairs.clear();
  for (const auto& s : build_corpus(small)) {
    for (Elem e : idempotents(s)) {
      const auto h = maximal_subgroup_at(s, e);
      if (h.order() < 2 || h.order() > 48) continue;
      for (Elem x : h.members) {
        if (x != e && h.product(x, x) == e) {
          c.expect(!has_s_inverse(h, x),
                   s.name + ": order-2 element " + std::to_string(x) +
                       " must have no inverse pair");
        }
      }
    }
  }

  const auto c25 = make_cyclic_group(25);
  const auto g25 = whole_group(c25);
  SInversePair fixture;
  fixture.x = 5;
  fixture.y = 20;
  fixture.realizations = {SInverseRealization{15, 10, true, true, true, true}};
  c.expect(is_self_inversed_pair(g25, fixture),
           "the C_25 pair (g^5, g^20) with relating pair (g^15, g^10) is "
           "self-inversed");
  c.expect(co_inverse_check(g25, fixture),
           "the C_25 relating pair is a co-inverse pair");
  const auto pairs25 = s_inverse_pairs(g25);
  bool found = false;
  for (const auto& pr : pairs25) {
    if (pr.x == 5 && pr.y == 20) {
      found = true;
      c.expect(pr.realizations.size() == 1 && pr.realizations[0].a == 15 &&
                   pr.realizations[0].b == 10,
               "C_25 (g^5, g^20) relates through (g^15, g^10)");
    }
  }
  c.expect(found, "C_25 has the pair (g^5, g^20)");
  return c.result("8", "inverse-pair suite");
}

CheckResult criterion_s_conjugate_suite() {
  Checker c;
  const auto t3 = make_full_transformation(3);
  const auto s3 = maximal_subgroup_at(t3, *t3.identity);
  const Elem p1 = 7, p3 = 11, p4 = 15;
  const auto w1 = s_conjugates(s3, p1);
  bool has_p3 = false;
  for (const auto& w : w1) {
    if (w.y == p3) has_p3 = true;
  }
  c.expect(has_p3, "p_1 has s-conjugate p_3 in S_3");
  c.expect(!has_s_conjugate(s3, p4), "p_4 has no s-conjugate in S_3");

  // Worked degree-7 conjugation.
  const auto x7 = perm_from_cycles(7, {{5, 6, 7}, {3, 4, 2}});
  const auto t7 = perm_from_cycles(7, {{1, 2, 3}, {4, 7}});
  const auto conj7 = conjugate_by_replacement(x7, t7);
  c.expect(conj7 == perm_from_cycles(7, {{5, 6, 4}, {1, 7, 3}}),
           "replacement conjugate of (5,6,7)(3,4,2) by (1,2,3)(4,7)");
  c.expect(conj7 == compose(compose(t7.inverse(), x7), t7),
           "replacement conjugation equals t^-1*x*t");

  // Worked degree-8 conjugation and conjugator search.
  const auto x8 = perm_from_cycles(8, {{1, 2}, {3, 4, 5}, {6, 7, 8}});
  const auto y8 = perm_from_cycles(8, {{7, 5}, {1, 3, 6}, {2, 4, 8}});
  Transformation t8;
  t8.degree = 8;
  t8.images = {7, 5, 1, 3, 6, 2, 4, 8};
  c.expect(conjugate_by_replacement(x8, t8) == y8,
           "the displayed degree-8 conjugator maps x to y");
  const auto found = find_conjugator(x8, y8);
  c.expect(found.has_value() &&
               conjugate_by_replacement(x8, *found) == y8,
           "find_conjugator returns a verifying witness");

  // All witnesses in S_4 share the cycle type of their subject.
  const auto t4 = make_full_transformation(4);
  const auto s4 = maximal_subgroup_at(t4, *t4.identity);
  for (Elem x : s4.members) {
    const auto type_x =
        cycle_decomposition(transformation_at(4, x)).cycle_type();
    for (const auto& w : s_conjugates(s4, x)) {
      const auto type_y =
          cycle_decomposition(transformation_at(4, w.y)).cycle_type();
      const auto type_a =
          cycle_decomposition(transformation_at(4, w.a)).cycle_type();
      c.expect(type_x == type_y && type_x == type_a,
               "cycle types coincide for witness of member " +
                   std::to_string(x));
    }
  }
  return c.result("9", "conjugate suite");
}

CheckResult criterion_products() {
  Checker c;
  const auto z7 = make_zn_mul(7);
  c.expect(internal_product_check(z7, {{0, 1}, {1, 2, 3, 4, 5, 6}}),
           "Z_7 = {0,1} * units");
  const auto z6 = make_zn_mul(6);
  c.expect(internal_product_check(z6, {{0, 1, 3}, {1, 5}, {1, 2, 4}}),
           "Z_6 = {1,3,0} * {1,5} * {1,2,4}");
  c.expect(!internal_product_check(z6, {{1}, {1, 5}}),
           "{1} * {1,5} misses most of Z_6");
  const auto z12 = make_zn_mul(12);
  c.expect(strong_internal_product_check(
               z12, {0, 1, 2, 3, 4, 6, 8, 9, 10}, {{1, 5, 7, 11}}),
           "Z_12 strong product with B = non-units plus 1");
  const auto z20 = make_zn_mul(20);
  const auto d = find_strong_decomposition(z20);
  c.expect(d.has_value() && d->verified, "Z_20 strong decomposition verifies");
  if (d) {
    c.expect(d->factors ==
                 std::vector<ElemSet>({{1, 3, 7, 9, 11, 13, 17, 19}}),
             "Z_20 decomposition factor is the unit group");
    c.expect(d->b_factor ==
                 ElemSet({0, 1, 2, 4, 5, 6, 8, 10, 12, 14, 15, 16, 18}),
             "Z_20 decomposition B is the non-units plus 1");
    c.expect(d->b_strict, "Z_20 B-factor holds the subgroup {5,15}");
  }
  const auto t3 = make_full_transformation(3);
  const auto verdict = s_direct_product_check({&t3, &z6});
  c.expect(!verdict.ok, "T3 x Z_6 fails the direct-product test");
  return c.result("10", "internal/strong/direct products");
}

CheckResult criterion_morphisms() {
  Checker c;
  const auto z12 = make_zn_mul(12);
  const auto z7 = make_zn_mul(7);
  std::vector<Elem> phi(12, 0);
  phi[1] = 1;
  phi[11] = 6;
  const auto a = *subgroup_check(z12, {1, 11});
  const auto a_img = *subgroup_check(z7, {1, 6});
  c.expect(s_homomorphism_check(z12, z7, phi, a, a_img),
           "the {1,11} -> {1,6} map is an s-homomorphism");
  c.expect(s_isomorphism_check(z12, z7, phi, a, a_img),
           "the {1,11} -> {1,6} map is an s-isomorphism");
  std::vector<Elem> bad = phi;
  bad[11] = 5;
  c.expect(!s_homomorphism_check(z12, z7, bad, a,
                                 *subgroup_check(z7, {1, 2, 3, 4, 5, 6})),
           "sending 11 to 5 is not multiplicative");

  for (const auto& g : all_subgroups(z12)) {
    const auto emb = cayley_s_embedding(z12, g);
    c.expect(emb.degree == g.order(), "embedding degree equals the order");
    std::vector<Transformation> images;
    for (const auto& [x, t] : emb.images) {
      c.expect(t.is_bijective(), "embedding images are permutations");
      images.push_back(t);
    }
    for (size_t i = 0; i < images.size(); ++i) {
      for (size_t j = i + 1; j < images.size(); ++j) {
        c.expect(!(images[i] == images[j]), "embedding is injective");
      }
    }
    for (const auto& [x, tx] : emb.images) {
      for (const auto& [y, ty] : emb.images) {
        const Elem xy = z12.product(x, y);
        for (const auto& [z, tz] : emb.images) {
          if (z == xy) {
            c.expect(compose(tx, ty) == tz, "embedding is multiplicative");
          }
        }
      }
    }
  }
  return c.result("11", "s-morphisms and the regular embedding");
}

CheckResult aggregate(const std::string& id, const std::string& label,
                      const std::vector<CheckResult>& parts) {
  Checker c;
  for (const auto& p : parts) {
    c.expect(p.pass, p.id + " (" + p.label + "): " + p.detail);
  }
  return c.result(id, label);
}

}  // namespace

std::vector<CheckResult> run_property_suite() {
  std::vector<CheckResult> out;
  const auto corpus = build_corpus();

  {  // H-class enumeration agrees with exhaustive subset search.
    Checker c;
    SubgroupOptions everything;
    everything.min_size = 1;
    everything.proper_only = false;
    for (const auto& s : corpus) {
      if (s.size > 10) continue;
      auto oracle = brute_force_subgroups(s, s.size);
      std::sort(oracle.begin(), oracle.end(), set_less);
      c.expect(members_of(all_subgroups(s, everything)) == oracle,
               s.name + ": engine vs brute force");
    }
    out.push_back(c.result("P1", "oracle equivalence on size <= 10"));
  }

  {  // Class equation and Sylow counts on every corpus group of order <= 120.
    Checker c;
    for (const auto& s : corpus) {
      for (Elem e : idempotents(s)) {
        const auto g = maximal_subgroup_at(s, e);
        if (g.order() < 2 || g.order() > 120) continue;
        const auto rep = conjugacy_analysis(g);
        long long classes_total = 0;
        for (const auto& cls : rep.classes) classes_total += (long long)cls.size();
        c.expect(classes_total == g.order(),
                 s.name + ": conjugacy classes partition the group");
        long long sum = 0;
        for (const auto& [a, n] : rep.normalizer_orders) sum += g.order() / n;
        c.expect(sum == g.order(), s.name + ": class equation");
        for (int p = 2; p <= g.order(); ++p) {
          if (!is_prime(p) || g.order() % p != 0) continue;
          c.expect(sylow_count_check(g, p),
                   s.name + ": Sylow count/conjugacy at p=" +
                       std::to_string(p));
        }
        for (Elem x : g.members) {
          c.expect(g.order() % element_order(g, x) == 0,
                   s.name + ": element order divides the group order");
          Elem power = g.identity;
          for (int i = 0; i < g.order(); ++i) power = g.product(power, x);
          c.expect(power == g.identity,
                   s.name + ": x^|G| equals the identity");
        }
      }
    }
    out.push_back(c.result("P2", "class equation and Sylow counts"));
  }

  {  // Classifier implications.
    Checker c;
    bool weakly_not_lagrange_witness = false;
    for (const auto& s : corpus) {
      if (s.size > 300) continue;
      const auto r = classify(s);
      if (!r.is_s_semigroup) continue;
      if (r.s_cyclic) {
        c.expect(r.s_commutative, s.name + ": cyclic implies commutative");
      }
      if (r.lagrange_class == LagrangeClass::lagrange) {
        c.expect(r.dividing_witness.has_value(),
                 s.name + ": Lagrange implies a dividing subgroup");
      }
      if (r.lagrange_class == LagrangeClass::weakly_lagrange) {
        weakly_not_lagrange_witness = true;
      }
      if (s.size <= 30) {
        for (const auto& h : hyper_subsemigroups(s)) {
          c.expect(s_subsemigroup_check(s, h),
                   s.name + ": hyper subsemigroup " + set_to_string(h) +
                       " is an S-subsemigroup");
        }
      }
    }
    c.expect(weakly_not_lagrange_witness,
             "corpus holds a weakly-but-not-Lagrange witness");
    out.push_back(c.result("P3", "classifier implications"));
  }

  {  // {1, n-1} is never S-normal for n >= 5.
    Checker c;
    for (int n = 5; n <= 40; ++n) {
      const auto s = make_zn_mul(n);
      const auto g = subgroup_check(s, {1, n - 1});
      c.expect(g.has_value(), "Z_" + std::to_string(n) + ": {1,n-1} is a group");
      if (g) {
        c.expect(!is_s_normal(s, *g),
                 "Z_" + std::to_string(n) + ": {1,n-1} is not S-normal");
      }
    }
    out.push_back(c.result("P4", "{1,n-1} never S-normal, 5 <= n <= 40"));
  }

  {  // Serializer round-trip across the corpus.
    Checker c;
    for (const auto& s : corpus) {
      const auto back = deserialize(serialize(s));
      c.expect(back.size == s.size && back.table == s.table &&
                   back.labels == s.labels && back.identity == s.identity &&
                   back.zero == s.zero,
               s.name + ": serialize/deserialize round trip");
    }
    out.push_back(c.result("P5", "serializer round trip"));
  }
  return out;
}

std::vector<CheckResult> run_errata_expectations() {
  const std::map<std::string, ErrataStatus> expected = {
      {"example-4.2.5", ErrataStatus::refuted},
      {"example-1.3.9", ErrataStatus::refuted},
      {"example-4.2.3", ErrataStatus::refuted},
      {"example-4.2.6", ErrataStatus::refuted},
      {"example-4.6.2", ErrataStatus::refuted},
      {"theorem-5.4.4", ErrataStatus::ambiguous},
      {"theorem-6.5.1-vs-example-6.5.2", ErrataStatus::ambiguous},
      {"theorem-4.8.1", ErrataStatus::confirmed},
  };
  std::vector<CheckResult> out;
  const auto entries = run_errata_suite();
  for (const auto& [id, status] : expected) {
    Checker c;
    const ErrataEntry* entry = nullptr;
    for (const auto& e : entries) {
      if (e.claim_id == id) entry = &e;
    }
    c.expect(entry != nullptr, "claim is catalogued");
    if (entry) {
      c.expect(entry->status == status,
               "status is " + std::string(to_string(entry->status)) +
                   ", expected " + to_string(status));
      if (status == ErrataStatus::refuted) {
        c.expect(!entry->witness.empty(), "refutation carries a witness");
      }
    }
    out.push_back(c.result(id, "errata status"));
  }

  {  // Refutation witnesses re-verify through the public API.
    Checker c;
    const auto z9 = make_zn_mul(9);
    c.expect(subgroup_check(z9, {1, 4, 7}).has_value(),
             "{1,4,7} verifies as a subgroup of Z_9");
    const auto z7 = make_zn_mul(7);
    c.expect(subgroup_check(z7, {1, 2, 4}).has_value(),
             "{1,2,4} verifies as a subgroup of Z_7");
    const auto t3 = make_full_transformation(3);
    bool off_identity_group = false;
    for (const auto& g : all_subgroups(t3)) {
      if (g.identity != *t3.identity) off_identity_group = true;
    }
    c.expect(off_identity_group,
             "T3 holds a subgroup away from the identity map");
    const auto z25 = make_zn_mul(25);
    c.expect(is_cyclic(maximal_subgroup_at(z25, 1)),
             "the unit group of Z_25 is cyclic");
    const auto r9 = classify(z9);
    c.expect(r9.lagrange_class == LagrangeClass::weakly_lagrange,
             "Z_9 is weakly Lagrange");
    out.push_back(c.result("witnesses", "refutation witnesses re-verify"));
  }
  return out;
}

std::vector<CheckResult> run_book_suite() {
  std::vector<CheckResult> out;
  out.push_back(criterion_z12_census());
  out.push_back(criterion_z16_sylow());
  out.push_back(criterion_coset_fixtures());
  out.push_back(criterion_zp_battery());
  out.push_back(criterion_t3_battery());
  out.push_back(criterion_t2_lagrange());
  out.push_back(criterion_matrix_battery());
  out.push_back(criterion_s_inverse_suite());
  out.push_back(criterion_s_conjugate_suite());
  out.push_back(criterion_products());
  out.push_back(criterion_morphisms());
  out.push_back(aggregate("12", "property suites", run_property_suite()));
  out.push_back(aggregate("13", "errata suite", run_errata_expectations()));
  return out;
}

}  // namespace ssg
