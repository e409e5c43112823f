#include "doctest.h"
#include "ssg/classify.hpp"
#include "ssg/corpus.hpp"

using namespace ssg;

TEST_CASE("s-semigroup detection") {
  const auto z8 = make_zn_mul(8);
  const auto [ok8, witness8] = is_s_semigroup(z8);
  CHECK(ok8);
  REQUIRE(witness8.has_value());
  CHECK(witness8->size() == 2);
  CHECK(subgroup_check(z8, {1, 7}).has_value());

  for (int n = 3; n <= 20; ++n) {
    const auto s = make_zn_mul(n);
    CHECK(is_s_semigroup(s).first);
    CHECK(subgroup_check(s, {1, n - 1}).has_value());
  }

  const auto lz2 = from_table({{0, 0}, {1, 1}}, {"a", "b"});
  CHECK(!is_s_semigroup(lz2).first);
}

TEST_CASE("classification verdicts") {
  const auto r6 = classify(make_zn_mul(6));
  CHECK(r6.s_cyclic);
  CHECK(r6.s_commutative);

  const auto r8 = classify(make_zn_mul(8));
  CHECK(r8.s_commutative);
  CHECK(!r8.s_cyclic);
  CHECK(r8.s_weakly_cyclic);
  REQUIRE(r8.non_cyclic_witness.has_value());
  CHECK(*r8.non_cyclic_witness == ElemSet({1, 3, 5, 7}));

  const auto r7 = classify(make_zn_mul(7));
  CHECK(r7.lagrange_class == LagrangeClass::non_lagrange);

  const auto r12 = classify(make_zn_mul(12));
  CHECK(!r12.s_cyclic);
  CHECK(r12.s_weakly_cyclic);
  CHECK(r12.lagrange_class == LagrangeClass::lagrange);
  CHECK(!r12.is_p_sylow_semigroup);  // 3 divides 12, no order-3 subgroup
  CHECK(!r12.is_s_maximal);
  CHECK(r12.maximal_subgroup_count == 3);

  const auto r4 = classify(make_zn_mul(4));
  CHECK(r4.lagrange_class == LagrangeClass::lagrange);

  // The unit group of Z_25 is cyclic (generator 2), so every subgroup is;
  // see the errata ledger entry for the contrary claim.
  const auto r25 = classify(make_zn_mul(25));
  CHECK(r25.s_cyclic);
  CHECK(r25.s_weakly_cyclic);
}

TEST_CASE("sylow analysis") {
  const auto z16 = make_zn_mul(16);
  const auto d16 = sylow_analysis(z16, {}, {2});
  REQUIRE(d16.size() == 1);
  CHECK(d16[0].divides_order);
  CHECK(d16[0].s_p_sylow_subgroups.size() == 7);  // 3+3+1 subgroups of 2-power order

  const auto z10 = make_zn_mul(10);
  const auto d10 = sylow_analysis(z10, {}, {2});
  bool has_order4 = false;
  for (const auto& g : d10[0].s_p_sylow_subgroups) {
    if (g.members == ElemSet({2, 4, 6, 8})) has_order4 = true;
  }
  CHECK(has_order4);  // order 4 counts even though 4 does not divide 10

  const auto z23 = make_zn_mul(23);
  const auto d23 = sylow_analysis(z23, {}, {2});
  CHECK(!d23[0].divides_order);
  bool has_pair = false;
  for (const auto& g : d23[0].non_p_sylow_subgroups) {
    if (g.members == ElemSet({1, 22})) has_pair = true;
  }
  CHECK(has_pair);

  const auto z12 = make_zn_mul(12);
  const auto d12 = sylow_analysis(z12, {}, {3});
  CHECK(d12[0].divides_order);
  CHECK(d12[0].s_p_sylow_subgroups.empty());

  CHECK_THROWS_AS(sylow_analysis(z12, {}, {4}), PreconditionError);
}

TEST_CASE("cauchy elements") {
  const auto t3 = make_full_transformation(3);
  for (const auto& row : cauchy_elements(t3)) {
    if (row.order == 2) CHECK(!row.is_cauchy);
    if (row.order == 3) CHECK(row.is_cauchy);
  }
  for (int p : {5, 7, 11, 13}) {
    for (const auto& row : cauchy_elements(make_zn_mul(p))) {
      CHECK(!row.is_cauchy);
    }
  }
  const auto m = make_matrix_semigroup(2, 2);
  bool found = false;
  for (const auto& row : cauchy_elements(m)) {
    if (row.element == 13) {  // [[1,1],[0,1]]
      found = true;
      CHECK(row.order == 2);
      CHECK(row.is_cauchy);
    }
  }
  CHECK(found);
}

TEST_CASE("hyper subsemigroups and simplicity") {
  for (int p : {5, 7, 11, 13}) {
    CHECK(is_s_simple(make_zn_mul(p)));
  }
  const auto z16 = make_zn_mul(16);
  const ElemSet units_and_zero = {0, 1, 3, 5, 7, 9, 11, 13, 15};
  CHECK(is_hyper_subsemigroup(z16, units_and_zero));
  CHECK(!is_s_simple(z16));
  CHECK(!is_hyper_subsemigroup(z16, {0, 1, 15}));  // misses the largest group
  CHECK(s_subsemigroup_check(z16, {0, 1, 15}));

  const auto t3 = make_full_transformation(3);
  const auto hypers = hyper_subsemigroups(t3);
  CHECK(!hypers.empty());
  for (const auto& h : hypers) CHECK(s_subsemigroup_check(t3, h));
}

TEST_CASE("s-subsemigroup check") {
  const auto z10 = make_zn_mul(10);
  CHECK(s_subsemigroup_check(z10, {0, 1, 9}));
  const auto z7 = make_zn_mul(7);
  CHECK(s_subsemigroup_check(z7, {0, 1, 6}));
  CHECK(!s_subsemigroup_check(z7, {1, 6}));  // the group is not proper in itself
  CHECK(!s_subsemigroup_check(z10, {1, 3}));  // not closed
  // relaxed reading admits a singleton group as the proper subset
  CHECK(!s_subsemigroup_check(z7, {0, 1}));
  CHECK(s_subsemigroup_check(z7, {0, 1}, {}, 1));
}

TEST_CASE("every Z_n is weakly cyclic") {
  for (int n = 3; n <= 24; ++n) {
    const auto r = classify(make_zn_mul(n));
    CHECK(r.is_s_semigroup);
    CHECK(r.s_weakly_cyclic);
  }
}

TEST_CASE("symmetric semigroup classification at degree 4") {
  const auto t4 = make_full_transformation(4);
  const auto r = classify(t4);
  CHECK(r.is_s_semigroup);
  CHECK(!r.s_commutative);
  CHECK(r.s_weakly_commutative);
  CHECK(r.lagrange_class == LagrangeClass::weakly_lagrange);
  CHECK(r.is_pseudo_simple);
}

TEST_CASE("classification witnesses re-verify") {
  for (int n : {6, 8, 9, 12, 16, 25}) {
    const auto s = make_zn_mul(n);
    const auto r = classify(s);
    for (const auto* w :
         {&r.s_witness, &r.non_commutative_witness, &r.commutative_witness,
          &r.non_cyclic_witness, &r.cyclic_witness, &r.dividing_witness,
          &r.non_dividing_witness}) {
      if (w->has_value()) CHECK(subgroup_check(s, **w).has_value());
    }
  }
}

TEST_CASE("classification over composite moduli") {
  // subgroup-with-zero extension: every subgroup extends to an
  // s-subsemigroup by adjoining 0 when n is composite
  for (int n : {6, 8, 9, 10, 12, 14, 15, 16}) {
    const auto s = make_zn_mul(n);
    for (const auto& g : all_subgroups(s)) {
      CHECK(s_subsemigroup_check(s, set_union(g.members, {0})));
    }
  }
}
