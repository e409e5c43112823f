#include "doctest.h"
#include "ssg/corpus.hpp"
#include "ssg/group_kernel.hpp"
#include "ssg/subgroups.hpp"

using namespace ssg;

namespace {
std::vector<ElemSet> members_of(const std::vector<EmbeddedGroup>& gs) {
  std::vector<ElemSet> out;
  for (const auto& g : gs) out.push_back(g.members);
  return out;
}
}  // namespace

TEST_CASE("idempotents") {
  CHECK(idempotents(make_zn_mul(12)) == ElemSet({0, 1, 4, 9}));
  CHECK(idempotents(make_full_transformation(3)).size() == 10);
  CHECK(idempotents(make_cyclic_group(6)) == ElemSet({0}));
  for (int n = 2; n <= 20; ++n) {
    const auto ids = idempotents(make_zn_mul(n));
    CHECK(set_contains(ids, 0));
    CHECK(set_contains(ids, 1));
  }
}

TEST_CASE("maximal subgroup at an idempotent") {
  const auto z10 = make_zn_mul(10);
  const auto b = maximal_subgroup_at(z10, 6);
  CHECK(b.members == ElemSet({2, 4, 6, 8}));
  CHECK(b.identity == 6);
  CHECK(b.inverse_of(2) == 8);
  CHECK(b.inverse_of(4) == 4);

  const auto z12 = make_zn_mul(12);
  CHECK(maximal_subgroup_at(z12, 1).members == ElemSet({1, 5, 7, 11}));
  CHECK(maximal_subgroup_at(z12, 0).members == ElemSet({0}));
  CHECK_THROWS_AS(maximal_subgroup_at(z12, 2), PreconditionError);
}

TEST_CASE("all_subgroups censuses") {
  const auto z12 = make_zn_mul(12);
  CHECK(members_of(all_subgroups(z12)) ==
        std::vector<ElemSet>(
            {{1, 5}, {1, 7}, {1, 11}, {3, 9}, {4, 8}, {1, 5, 7, 11}}));

  const auto z9 = make_zn_mul(9);
  CHECK(members_of(all_subgroups(z9)) ==
        std::vector<ElemSet>({{1, 8}, {1, 4, 7}, {1, 2, 4, 5, 7, 8}}));

  const auto z4 = make_zn_mul(4);
  CHECK(members_of(all_subgroups(z4)) == std::vector<ElemSet>({{1, 3}}));
}

TEST_CASE("maximal and largest subgroups") {
  const auto z12 = make_zn_mul(12);
  CHECK(members_of(maximal_subgroups(z12)) ==
        std::vector<ElemSet>({{3, 9}, {4, 8}, {1, 5, 7, 11}}));
  CHECK(members_of(largest_subgroups(z12)) ==
        std::vector<ElemSet>({{1, 5, 7, 11}}));

  const auto z7 = make_zn_mul(7);
  CHECK(members_of(maximal_subgroups(z7)) ==
        std::vector<ElemSet>({{1, 2, 3, 4, 5, 6}}));
  const auto z11 = make_zn_mul(11);
  CHECK(members_of(largest_subgroups(z11)) ==
        std::vector<ElemSet>({{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}));

  const auto t4 = make_full_transformation(4);
  const auto largest = largest_subgroups(t4);
  REQUIRE(largest.size() == 1);
  CHECK(largest[0].order() == 24);
  SubgroupOptions t4global;
  t4global.policy = IdentityPolicy::global_identity_only;
  const auto largest_global = largest_subgroups(t4, t4global);
  REQUIRE(largest_global.size() == 1);
  CHECK(largest_global[0].members == largest[0].members);

  SubgroupOptions global;
  global.policy = IdentityPolicy::global_identity_only;
  const auto t3 = make_full_transformation(3);
  const auto maximal = maximal_subgroups(t3, global);
  REQUIRE(maximal.size() == 1);
  CHECK(maximal[0].order() == 6);
}

TEST_CASE("subgroup_check") {
  const auto z12 = make_zn_mul(12);
  const auto g = subgroup_check(z12, {3, 9});
  REQUIRE(g.has_value());
  CHECK(g->identity == 9);
  CHECK(!subgroup_check(z12, {2, 4}).has_value());
  const auto z10 = make_zn_mul(10);
  const auto h = subgroup_check(z10, {1, 9});
  REQUIRE(h.has_value());
  CHECK(h->identity == 1);
  CHECK_THROWS_AS(subgroup_check(z10, {}), PreconditionError);
}

TEST_CASE("containment and Lagrange inside H-classes") {
  for (int n = 2; n <= 20; ++n) {
    const auto s = make_zn_mul(n);
    SubgroupOptions opts;
    opts.min_size = 1;
    opts.proper_only = false;
    for (const auto& g : all_subgroups(s, opts)) {
      const auto h = maximal_subgroup_at(s, g.identity);
      REQUIRE(is_subset(g.members, h.members));
      REQUIRE(h.order() % g.order() == 0);
    }
  }
}

TEST_CASE("policy and cap errors") {
  const auto lz2 = from_table({{0, 0}, {1, 1}}, {"a", "b"});
  SubgroupOptions global;
  global.policy = IdentityPolicy::global_identity_only;
  CHECK_THROWS_AS(all_subgroups(lz2, global), PreconditionError);

  const auto big = make_cyclic_group(721);
  CHECK_THROWS_AS(all_subgroups(big), LimitError);
  SubgroupOptions roomy;
  roomy.max_group_order = 1000;
  CHECK_NOTHROW(maximal_subgroups(big, roomy));
}

TEST_CASE("degree-5 transformation semigroup at the cap") {
  const auto t5 = make_full_transformation(5);
  CHECK(t5.size == 3125);
  CHECK(idempotents(t5).size() == 196);
  const auto s5 = maximal_subgroup_at(t5, *t5.identity);
  CHECK(s5.order() == 120);
}

TEST_CASE("every discovered subgroup re-verifies") {
  for (const auto& s :
       {make_zn_mul(12), make_zn_mul(16), make_full_transformation(3)}) {
    for (const auto& g : all_subgroups(s)) {
      const auto check = subgroup_check(s, g.members);
      REQUIRE(check.has_value());
      CHECK(check->identity == g.identity);
    }
  }
}
