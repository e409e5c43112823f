#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssg/classify.hpp"
#include "ssg/corpus.hpp"
#include "ssg/cosets.hpp"
#include "ssg/products.hpp"

namespace ssg {

inline constexpr int kReportSchemaVersion = 1;

struct AnalyzeOptions {
  SubgroupOptions subgroups;
  // Member sets to produce coset partition reports for (each must pass
  // subgroup_check).
  std::vector<ElemSet> coset_subgroups;
};

// Everything the analyzer computes for one semigroup. JSON output is
// deterministic for a fixed input and options; timing appears only in the
// text rendering.
struct AnalysisReport {
  const FiniteSemigroup* semigroup = nullptr;
  AnalyzeOptions options;
  ElemSet idempotent_list;
  std::vector<EmbeddedGroup> subgroups;
  std::vector<EmbeddedGroup> maximal;
  std::vector<EmbeddedGroup> largest;
  ClassificationReport classification;
  std::vector<EmbeddedGroup> s_normal;
  std::vector<int> quotient_sizes;  // aligned with s_normal
  std::vector<CosetPartitionReport> coset_reports;
  std::optional<ProductDecomposition> decomposition;
  double elapsed_seconds = 0.0;
};

AnalysisReport analyze(const FiniteSemigroup& s,
                       const AnalyzeOptions& options = {});

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

std::string errata_to_json(const std::vector<ErrataEntry>& entries);
std::string errata_to_text(const std::vector<ErrataEntry>& entries);

const char* to_string(IdentityPolicy p);
std::optional<IdentityPolicy> parse_identity_policy(const std::string& s);

}  // namespace ssg
