#pragma once

#include <string>
#include <vector>

namespace ssg {

struct CheckResult {
  std::string id;
  std::string label;
  bool pass = false;
  std::string detail;  // failure messages, empty when passing
};

// The thirteen fixture criteria behind `verify book`. Exact integer results,
// no tolerances; each runs in well under a minute.
std::vector<CheckResult> run_book_suite();

// Non-example-based invariants over the default corpus (oracle equivalence,
// class equation and Sylow counts, classifier implications, S-normality of
// {1,n-1}, serializer round-trips).
std::vector<CheckResult> run_property_suite();

// Errata-ledger expectations: every catalogued claim must come out with its
// recorded status, refutations carrying verifying witnesses.
std::vector<CheckResult> run_errata_expectations();

}  // namespace ssg
