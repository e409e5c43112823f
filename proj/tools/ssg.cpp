// ssg: construct finite semigroups, analyze their embedded-subgroup
// structure, and replay the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdlib>
#include <optional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ssg/report.hpp"
#include "ssg/verification.hpp"

namespace {

// SSG_MAX_ORDER overrides the per-constructor size caps when set.
std::optional<int> size_cap_from_env() {
  const char* v = std::getenv("SSG_MAX_ORDER");
  if (!v) return std::nullopt;
  try {
    const int cap = std::stoi(v);
    if (cap > 0) return cap;
  } catch (...) {
  }
  std::cerr << "warning: ignoring invalid SSG_MAX_ORDER\n";
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ssg::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ssg::Error("cannot write " + path);
  out << content;
}

ssg::ElemSet parse_member_list(const std::string& csv) {
  ssg::ElemSet out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw ssg::ParseError("bad element index '" + tok + "'");
    }
  }
  return ssg::normalized(std::move(out));
}

int print_results(const std::vector<ssg::CheckResult>& results) {
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << ": " << r.label;
    if (!r.pass) std::cout << " - " << r.detail;
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup analysis toolkit"};
  app.require_subcommand(1);
  const auto env_cap = size_cap_from_env();
  const int cap = env_cap.value_or(ssg::kDefaultSizeCap);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "build a semigroup and write it as a .sgp file");
  std::string kind;
  std::vector<std::string> params;
  std::string out_path;
  construct->add_option("kind", kind, "zn | tn | mat | product | table")
      ->required();
  construct->add_option("params", params,
                        "zn N; tn N; mat K M; product A.sgp B.sgp; table FILE");
  construct->add_option("-o,--output", out_path, "output .sgp path")
      ->required();

  // analyze
  auto* analyze_cmd =
      app.add_subcommand("analyze", "full structure report for a .sgp file");
  std::string in_path;
  bool as_json = false;
  std::string mode = "any-idempotent";
  int min_subgroup_size = 2;
  int max_group_order = ssg::kDefaultGroupOrderCap;
  std::vector<std::string> coset_requests;
  analyze_cmd->add_option("input", in_path, "input .sgp file")->required();
  analyze_cmd->add_flag("--json", as_json, "emit the JSON report");
  analyze_cmd->add_option("--mode", mode,
                          "any-idempotent | global-identity-only");
  analyze_cmd->add_option("--min-subgroup-size", min_subgroup_size,
                          "smallest subgroup size to count (default 2)");
  analyze_cmd->add_option("--max-group-order", max_group_order,
                          "subgroup enumeration cap (default 720)");
  analyze_cmd->add_option(
      "--cosets", coset_requests,
      "comma-separated member indices of a subgroup to report cosets for "
      "(repeatable)");

  // verify
  auto* verify =
      app.add_subcommand("verify", "replay a verification suite");
  std::string suite;
  bool verify_json = false;
  verify->add_option("suite", suite, "book | errata | properties")->required();
  verify->add_flag("--json", verify_json,
                   "emit the errata ledger as JSON (errata suite only)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      ssg::FiniteSemigroup s;
      auto need = [&](size_t n) {
        if (params.size() != n) {
          throw ssg::PreconditionError("construct " + kind + " expects " +
                                       std::to_string(n) + " parameter(s)");
        }
      };
      if (kind == "zn") {
        need(1);
        s = ssg::make_zn_mul(std::stoi(params[0]), cap);
      } else if (kind == "tn") {
        need(1);
        s = ssg::make_full_transformation(std::stoi(params[0]));
      } else if (kind == "mat") {
        need(2);
        s = ssg::make_matrix_semigroup(
            std::stoi(params[0]), std::stoi(params[1]),
            env_cap.value_or(ssg::kDefaultMatrixSizeCap));
      } else if (kind == "product") {
        need(2);
        const auto a = ssg::deserialize(read_file(params[0]), cap);
        const auto b = ssg::deserialize(read_file(params[1]), cap);
        s = ssg::direct_product(a, b, cap);
      } else if (kind == "table") {
        need(1);
        s = ssg::deserialize(read_file(params[0]), cap);
      } else {
        throw ssg::PreconditionError("unknown construction kind '" + kind +
                                     "'");
      }
      write_file(out_path, ssg::serialize(s));
      std::cout << "wrote " << s.name << " (order " << s.size << ") to "
                << out_path << "\n";
      return 0;
    }

    if (*analyze_cmd) {
      const auto policy = ssg::parse_identity_policy(mode);
      if (!policy) {
        throw ssg::PreconditionError("unknown mode '" + mode + "'");
      }
      const auto s = ssg::deserialize(read_file(in_path), cap);
      ssg::AnalyzeOptions opts;
      opts.subgroups.policy = *policy;
      opts.subgroups.min_size = min_subgroup_size;
      opts.subgroups.max_group_order = max_group_order;
      for (const auto& req : coset_requests) {
        opts.coset_subgroups.push_back(parse_member_list(req));
      }
      const auto report = ssg::analyze(s, opts);
      std::cout << (as_json ? ssg::report_to_json(report)
                            : ssg::report_to_text(report));
      return 0;
    }

    if (*verify) {
      if (suite == "book") return print_results(ssg::run_book_suite());
      if (suite == "errata") {
        if (verify_json) {
          std::cout << ssg::errata_to_json(ssg::run_errata_suite());
          return 0;
        }
        const auto results = ssg::run_errata_expectations();
        std::cout << ssg::errata_to_text(ssg::run_errata_suite());
        return print_results(results);
      }
      if (suite == "properties") {
        return print_results(ssg::run_property_suite());
      }
      throw ssg::PreconditionError("unknown suite '" + suite + "'");
    }
  } catch (const ssg::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ssg::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ssg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
