#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ssg/semigroup.hpp"

using namespace ssg;

TEST_CASE("mod-n multiplication semigroups") {
  const auto z12 = make_zn_mul(12);
  CHECK(z12.size == 12);
  CHECK(z12.identity == 1);
  CHECK(z12.zero == 0);

  const auto z8 = make_zn_mul(8);
  CHECK(z8.product(7, 7) == 1);
  CHECK(z8.product(1, 7) == 7);

  const auto z2 = make_zn_mul(2);
  CHECK(z2.table == std::vector<Elem>({0, 0, 0, 1}));

  CHECK_THROWS_AS(make_zn_mul(1), PreconditionError);
}

TEST_CASE("mod-n multiplication is commutative") {
  for (int n = 2; n <= 40; ++n) {
    const auto s = make_zn_mul(n);
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = i + 1; j < n; ++j) {
        REQUIRE(s.product(i, j) == s.product(j, i));
      }
    }
  }
}

TEST_CASE("full transformation semigroups") {
  CHECK(make_full_transformation(3).size == 27);
  CHECK(make_full_transformation(1).size == 1);
  CHECK(make_full_transformation(1).identity == 0);
  CHECK_THROWS_AS(make_full_transformation(0), LimitError);
  CHECK_THROWS_AS(make_full_transformation(6), LimitError);

  const auto t2 = make_full_transformation(2);
  CHECK(t2.size == 4);
  // products follow the apply-left-first convention
  const Transformation swap{2, {2, 1}};
  const Transformation const1{2, {1, 1}};
  CHECK(t2.product(transformation_index(swap), transformation_index(const1)) ==
        transformation_index(const1));
  const Transformation const2{2, {2, 2}};
  CHECK(t2.product(transformation_index(const1), transformation_index(swap)) ==
        transformation_index(const2));
}

TEST_CASE("transformation semigroup has n! invertible elements") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = make_full_transformation(n);
    int invertible = 0;
    for (Elem x = 0; x < s.size; ++x) {
      for (Elem y = 0; y < s.size; ++y) {
        if (s.product(x, y) == *s.identity && s.product(y, x) == *s.identity) {
          ++invertible;
          break;
        }
      }
    }
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(invertible == fact);
  }
}

TEST_CASE("matrix semigroups") {
  const auto m22 = make_matrix_semigroup(2, 2);
  CHECK(m22.size == 16);
  CHECK(m22.identity == 9);  // [[1,0],[0,1]]
  CHECK(m22.zero == 0);
  CHECK(make_matrix_semigroup(2, 3).size == 81);
  // 1x1 matrices over Z_n multiply exactly like Z_n
  CHECK(make_matrix_semigroup(1, 5).table == make_zn_mul(5).table);
  CHECK_THROWS_AS(make_matrix_semigroup(3, 10), LimitError);
}

TEST_CASE("direct products") {
  const auto z7 = make_zn_mul(7);
  const auto z9 = make_zn_mul(9);
  const auto p = direct_product(z7, z9);
  CHECK(p.size == 63);
  CHECK(p.identity == 1 * 9 + 1);
  CHECK(p.zero == 0);
  CHECK(direct_product(make_zn_mul(2), make_zn_mul(2)).size == 4);
  const auto big = direct_product(make_full_transformation(3), make_zn_mul(6));
  CHECK(big.size == 162);
  CHECK_THROWS_AS(
      direct_product(make_zn_mul(200), make_zn_mul(200), kDefaultSizeCap),
      LimitError);
}

TEST_CASE("from_table validates") {
  // the {1,5,7,11} unit group of Z_12, relabeled 0..3
  const auto klein = from_table({{0, 1, 2, 3},
                                 {1, 0, 3, 2},
                                 {2, 3, 0, 1},
                                 {3, 2, 1, 0}},
                                {"1", "5", "7", "11"});
  CHECK(klein.identity == 0);
  CHECK(!klein.zero.has_value());

  CHECK(from_table({{0}}).size == 1);

  // the swap table is the cyclic group of order 2, hence accepted
  CHECK(from_table({{0, 1}, {1, 0}}).identity == 0);

  CHECK_THROWS_WITH_AS(from_table({{0, 0}, {1, 0}}),
                       "associativity violated at triple (1,0,1)",
                       ValidationError);
  CHECK_THROWS_AS(from_table({{0, 5}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(from_table({{0, 1}, {1, 0}}, {"a", "a"}), ValidationError);
  CHECK_THROWS_AS(from_table({{0, 1}}), ValidationError);
}

TEST_CASE("closure") {
  const auto z12 = make_zn_mul(12);
  CHECK(closure_of(z12, {5}) == ElemSet({1, 5}));
  const auto z10 = make_zn_mul(10);
  CHECK(closure_of(z10, {2}) == ElemSet({2, 4, 6, 8}));
  ElemSet all(z10.size);
  for (int i = 0; i < z10.size; ++i) all[i] = i;
  CHECK(closure_of(z10, all) == all);
  CHECK_THROWS_AS(closure_of(z10, {}), PreconditionError);
}

TEST_CASE("closure is idempotent and monotone") {
  const auto s = make_zn_mul(24);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, s.size - 1);
  for (int trial = 0; trial < 200; ++trial) {
    ElemSet a, b;
    for (int i = 0; i < 3; ++i) a.push_back(pick(rng));
    b = a;
    for (int i = 0; i < 2; ++i) b.push_back(pick(rng));
    a = normalized(std::move(a));
    b = normalized(std::move(b));
    const auto ca = closure_of(s, a);
    CHECK(closure_of(s, ca) == ca);
    CHECK(is_subset(ca, closure_of(s, b)));
  }
}

TEST_CASE("constructor outputs are associative") {
  for (int n = 2; n <= 16; ++n) {
    CHECK(!find_associativity_violation(make_zn_mul(n)).has_value());
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(!find_associativity_violation(make_full_transformation(n))
               .has_value());
  }
  CHECK(!find_associativity_violation(make_matrix_semigroup(2, 2)).has_value());
  CHECK(!find_associativity_violation(
             direct_product(make_zn_mul(4), make_zn_mul(5)))
             .has_value());
}

TEST_CASE("serialization round trip and parse errors") {
  const auto z4 = make_zn_mul(4);
  const auto back = deserialize(serialize(z4));
  CHECK(back.size == z4.size);
  CHECK(back.table == z4.table);
  CHECK(back.labels == z4.labels);
  CHECK(back.identity == z4.identity);
  CHECK(back.zero == z4.zero);

  CHECK_THROWS_AS(deserialize("{ not json"), ParseError);
  CHECK_THROWS_AS(deserialize(""), ParseError);
  CHECK_THROWS_AS(deserialize("{\"size\": 2}"), ParseError);

  // out-of-range entry in a well-formed file fails closure validation
  std::string bad = serialize(z4);
  const auto pos = bad.find("3");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 1, "13");
  CHECK_THROWS_AS(deserialize(bad), ValidationError);
}

TEST_CASE("plain text table format") {
  const std::string text = "2\n0 0\n0 1\n";
  const auto s = deserialize(text);
  CHECK(s.size == 2);
  CHECK(s.table == make_zn_mul(2).table);
  CHECK_THROWS_AS(deserialize("2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(deserialize("2\n0 x\n0 1\n"), ParseError);
}

TEST_CASE("repository fixture loads and re-derives structure") {
  std::ifstream in(std::string(SSG_FIXTURE_DIR) + "/z12.sgp");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  const auto s = deserialize(buf.str());
  CHECK(s.size == 12);
  CHECK(s.identity == 1);
  CHECK(s.zero == 0);
  CHECK(s.table == make_zn_mul(12).table);
}
