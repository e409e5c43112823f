#pragma once

#include <string>
#include <vector>

#include "ssg/semigroup.hpp"
#include "ssg/subgroups.hpp"

namespace ssg {

// Recipes for the default test corpus: small Z_n, transformation and matrix
// semigroups, a few direct products, and hand-written tables. Everything
// generated passes full validation.
struct CorpusSpec {
  int zn_min = 2;
  int zn_max = 40;
  int transformation_max_degree = 4;
  bool include_degree_5 = false;  // 3125 elements; off by default
  std::vector<std::pair<int, int>> matrix_params = {{2, 2}, {2, 3}};
  std::vector<std::pair<std::string, std::string>> product_pairs = {
      {"Z7", "Z9"}, {"Z2", "Z2"}, {"T3", "Z6"}};
  bool include_handwritten = true;
};

std::vector<FiniteSemigroup> build_corpus(const CorpusSpec& spec = {});

// The cyclic group of order n presented as a semigroup (so it can carry an
// EmbeddedGroup covering all of it). Labels e, g, g^2, ...
FiniteSemigroup make_cyclic_group(int n);

// Treats the whole carrier of a group-table semigroup as an EmbeddedGroup.
// The semigroup must outlive the returned view.
EmbeddedGroup whole_group(const FiniteSemigroup& s);
EmbeddedGroup whole_group(FiniteSemigroup&&) = delete;

// Exhaustive subset search, independent of the H-class machinery: every
// subset of size <= max_subset_size that passes subgroup_check. The budget
// caps the number of subsets examined.
std::vector<ElemSet> brute_force_subgroups(const FiniteSemigroup& s,
                                           int max_subset_size,
                                           long long budget = 20'000'000);

enum class ErrataStatus { confirmed, refuted, ambiguous };

// One catalogued claim from the source text, adjudicated by the oracle.
// Refuted entries carry a machine-checkable witness re-verified through the
// public API.
struct ErrataEntry {
  std::string claim_id;
  std::string book_claim;
  std::string oracle_verdict;
  ErrataStatus status = ErrataStatus::ambiguous;
  ElemSet witness;           // empty when not applicable
  std::string witness_note;  // what the witness shows
};

std::vector<ErrataEntry> run_errata_suite();

const char* to_string(ErrataStatus s);

}  // namespace ssg
