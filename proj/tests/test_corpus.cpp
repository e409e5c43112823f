#include "doctest.h"
#include "ssg/corpus.hpp"
#include "ssg/subgroups.hpp"

using namespace ssg;

TEST_CASE("the default corpus validates") {
  const auto corpus = build_corpus();
  CHECK(corpus.size() > 50);
  for (const auto& s : corpus) {
    if (s.size > 300) continue;  // T4 is checked via deserialize elsewhere
    CHECK(!find_associativity_violation(s).has_value());
  }
}

TEST_CASE("brute-force oracle") {
  const auto z9 = make_zn_mul(9);
  const auto subs9 = brute_force_subgroups(z9, 9);
  bool found = false;
  for (const auto& m : subs9) {
    if (m == ElemSet({1, 4, 7})) found = true;
  }
  CHECK(found);

  const auto z12 = make_zn_mul(12);
  SubgroupOptions everything;
  everything.min_size = 1;
  everything.proper_only = false;
  auto oracle = brute_force_subgroups(z12, 12);
  std::sort(oracle.begin(), oracle.end(), set_less);
  std::vector<ElemSet> engine;
  for (const auto& g : all_subgroups(z12, everything)) {
    engine.push_back(g.members);
  }
  CHECK(engine == oracle);

  const auto trivial = from_table({{0}});
  CHECK(brute_force_subgroups(trivial, 1) == std::vector<ElemSet>({{0}}));

  CHECK_THROWS_AS(brute_force_subgroups(make_full_transformation(3), 27, 100),
                  LimitError);
}

TEST_CASE("cyclic group helper") {
  const auto c6 = make_cyclic_group(6);
  CHECK(c6.identity == 0);
  const auto g = whole_group(c6);
  CHECK(g.order() == 6);
  CHECK(g.inverse_of(1) == 5);
  const auto z6 = make_zn_mul(6);
  CHECK_THROWS_AS(whole_group(z6), PreconditionError);
}

TEST_CASE("errata ledger statuses") {
  const auto entries = run_errata_suite();
  CHECK(entries.size() == 8);
  int refuted = 0, confirmed = 0, ambiguous = 0;
  for (const auto& e : entries) {
    switch (e.status) {
      case ErrataStatus::refuted:
        ++refuted;
        CHECK(!e.witness.empty());
        break;
      case ErrataStatus::confirmed: ++confirmed; break;
      case ErrataStatus::ambiguous: ++ambiguous; break;
    }
  }
  CHECK(refuted == 5);
  CHECK(confirmed == 1);
  CHECK(ambiguous == 2);
}
