#include "ssg/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace ssg {

using ojson = nlohmann::ordered_json;

const char* to_string(IdentityPolicy p) {
  return p == IdentityPolicy::any_idempotent ? "any-idempotent"
                                             : "global-identity-only";
}

std::optional<IdentityPolicy> parse_identity_policy(const std::string& s) {
  if (s == "any-idempotent") return IdentityPolicy::any_idempotent;
  if (s == "global-identity-only") return IdentityPolicy::global_identity_only;
  return std::nullopt;
}

AnalysisReport analyze(const FiniteSemigroup& s, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.semigroup = &s;
  r.options = options;
  const SubgroupOptions& opts = options.subgroups;
  r.idempotent_list = idempotents(s);
  r.subgroups = all_subgroups(s, opts);
  r.maximal = maximal_subgroups(s, opts);
  r.largest = largest_subgroups(s, opts);
  r.classification = classify(s, opts);
  r.s_normal = s_normal_subgroups(s, opts);
  for (const auto& g : r.s_normal) {
    r.quotient_sizes.push_back((int)quotient(s, g).classes.size());
  }
  for (const auto& members : options.coset_subgroups) {
    auto g = subgroup_check(s, members);
    if (!g) {
      throw PreconditionError("requested coset subset " +
                              set_to_string(members) + " is not a subgroup");
    }
    r.coset_reports.push_back(coset_partition_report(s, *g, CosetSide::left));
  }
  r.decomposition = find_strong_decomposition(s, opts);
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

namespace {

ojson group_json(const EmbeddedGroup& g) {
  ojson j;
  j["members"] = g.members;
  j["identity"] = g.identity;
  j["order"] = g.order();
  return j;
}

ojson groups_json(const std::vector<EmbeddedGroup>& gs) {
  ojson arr = ojson::array();
  for (const auto& g : gs) arr.push_back(group_json(g));
  return arr;
}

ojson opt_set_json(const std::optional<ElemSet>& s) {
  if (!s) return nullptr;
  return *s;
}

std::string label_set(const FiniteSemigroup& s, const ElemSet& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += s.label(xs[i]);
  }
  return out + "}";
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  const FiniteSemigroup& s = *r.semigroup;
  const ClassificationReport& c = r.classification;
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["name"] = s.name;
  j["order"] = s.size;
  j["policy"] = to_string(r.options.subgroups.policy);
  j["min_subgroup_size"] = r.options.subgroups.min_size;
  j["identity"] = s.identity ? ojson(*s.identity) : ojson(nullptr);
  j["zero"] = s.zero ? ojson(*s.zero) : ojson(nullptr);
  j["labels"] = s.labels;
  j["idempotents"] = r.idempotent_list;
  j["subgroups"] = groups_json(r.subgroups);
  j["maximal_subgroups"] = groups_json(r.maximal);
  j["largest_subgroups"] = groups_json(r.largest);

  ojson cj;
  cj["is_s_semigroup"] = c.is_s_semigroup;
  cj["witness"] = opt_set_json(c.s_witness);
  cj["s_commutative"] = c.s_commutative;
  cj["s_weakly_commutative"] = c.s_weakly_commutative;
  cj["non_commutative_witness"] = opt_set_json(c.non_commutative_witness);
  cj["s_cyclic"] = c.s_cyclic;
  cj["s_weakly_cyclic"] = c.s_weakly_cyclic;
  cj["non_cyclic_witness"] = opt_set_json(c.non_cyclic_witness);
  cj["lagrange_class"] = to_string(c.lagrange_class);
  cj["dividing_witness"] = opt_set_json(c.dividing_witness);
  cj["non_dividing_witness"] = opt_set_json(c.non_dividing_witness);
  cj["is_p_sylow_semigroup"] = c.is_p_sylow_semigroup;
  cj["is_cauchy_semigroup"] = c.is_cauchy_semigroup;
  cj["is_s_simple"] = c.is_s_simple;
  cj["is_pseudo_simple"] = c.is_pseudo_simple;
  cj["is_s_maximal"] = c.is_s_maximal;
  cj["maximal_subgroup_count"] = c.maximal_subgroup_count;
  cj["largest_subgroup"] = opt_set_json(c.largest_subgroup);
  j["classification"] = std::move(cj);

  ojson sylow = ojson::array();
  for (const auto& d : c.sylow) {
    // Primes dividing the order always appear (an empty subgroup list there
    // is the Sylow anomaly); other primes appear only with content.
    if (!d.divides_order && d.s_p_sylow_subgroups.empty() &&
        d.non_p_sylow_subgroups.empty()) {
      continue;
    }
    ojson dj;
    dj["prime"] = d.prime;
    dj["divides_order"] = d.divides_order;
    dj["s_p_sylow_subgroups"] = groups_json(d.s_p_sylow_subgroups);
    dj["non_p_sylow_subgroups"] = groups_json(d.non_p_sylow_subgroups);
    sylow.push_back(std::move(dj));
  }
  j["sylow"] = std::move(sylow);

  ojson cauchy = ojson::array();
  for (const auto& row : c.cauchy_table) {
    ojson rj;
    rj["element"] = row.element;
    rj["order"] = row.order;
    rj["is_cauchy"] = row.is_cauchy;
    cauchy.push_back(std::move(rj));
  }
  j["cauchy_elements"] = std::move(cauchy);

  ojson norm = ojson::array();
  for (size_t i = 0; i < r.s_normal.size(); ++i) {
    ojson nj = group_json(r.s_normal[i]);
    nj["quotient_size"] = r.quotient_sizes[i];
    norm.push_back(std::move(nj));
  }
  j["s_normal_subgroups"] = std::move(norm);

  ojson cosets = ojson::array();
  for (const auto& cr : r.coset_reports) {
    ojson cj2;
    cj2["subgroup"] = cr.subgroup;
    cj2["side"] = cr.side == CosetSide::left ? "left" : "right";
    cj2["classes"] = cr.classes;
    cj2["representatives"] = cr.representatives;
    cj2["is_disjoint"] = cr.is_disjoint;
    cj2["covers"] = cr.covers;
    cj2["uniform"] = cr.uniform;
    cj2["class_sizes"] = cr.class_sizes;
    cosets.push_back(std::move(cj2));
  }
  j["coset_reports"] = std::move(cosets);

  if (r.decomposition) {
    ojson dj;
    dj["kind"] = r.decomposition->kind == ProductKind::strong_internal
                     ? "strong-internal"
                     : "internal";
    dj["b_factor"] = opt_set_json(r.decomposition->b_factor);
    dj["factors"] = r.decomposition->factors;
    dj["verified"] = r.decomposition->verified;
    dj["b_strict"] = r.decomposition->b_strict;
    j["strong_decomposition"] = std::move(dj);
  } else {
    j["strong_decomposition"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
  const FiniteSemigroup& s = *r.semigroup;
  const ClassificationReport& c = r.classification;
  std::ostringstream o;
  o << "semigroup " << s.name << " of order " << s.size << " (policy "
    << to_string(r.options.subgroups.policy) << ")\n";
  if (s.identity) o << "  identity: " << s.label(*s.identity) << "\n";
  if (s.zero) o << "  zero: " << s.label(*s.zero) << "\n";
  o << "  idempotents (" << r.idempotent_list.size()
    << "): " << label_set(s, r.idempotent_list) << "\n";
  o << "  subgroups (" << r.subgroups.size() << "):\n";
  for (const auto& g : r.subgroups) {
    o << "    " << label_set(s, g.members) << "  order " << g.order()
      << ", identity " << s.label(g.identity) << "\n";
  }
  o << "  maximal subgroups (" << r.maximal.size() << "):";
  for (const auto& g : r.maximal) o << " " << label_set(s, g.members);
  o << "\n  largest subgroups:";
  for (const auto& g : r.largest) o << " " << label_set(s, g.members);
  o << "\n";
  o << "  S-semigroup: " << (c.is_s_semigroup ? "yes" : "no");
  if (c.s_witness) o << "  witness " << label_set(s, *c.s_witness);
  o << "\n";
  if (c.is_s_semigroup) {
    o << "  S-commutative: " << (c.s_commutative ? "yes" : "no")
      << ", weakly: " << (c.s_weakly_commutative ? "yes" : "no") << "\n";
    o << "  S-cyclic: " << (c.s_cyclic ? "yes" : "no")
      << ", weakly: " << (c.s_weakly_cyclic ? "yes" : "no") << "\n";
    o << "  Lagrange class: " << to_string(c.lagrange_class) << "\n";
    o << "  p-Sylow semigroup: " << (c.is_p_sylow_semigroup ? "yes" : "no")
      << "\n";
    o << "  Cauchy semigroup: " << (c.is_cauchy_semigroup ? "yes" : "no")
      << " (" << c.cauchy_table.size() << " subgroup elements)\n";
    o << "  S-simple: " << (c.is_s_simple ? "yes" : "no")
      << ", pseudo-simple: " << (c.is_pseudo_simple ? "yes" : "no")
      << ", S-maximal: " << (c.is_s_maximal ? "yes" : "no") << "\n";
  }
  if (!r.s_normal.empty()) {
    o << "  S-normal subgroups:";
    for (size_t i = 0; i < r.s_normal.size(); ++i) {
      o << " " << label_set(s, r.s_normal[i].members) << " (quotient size "
        << r.quotient_sizes[i] << ")";
    }
    o << "\n";
  }
  for (const auto& cr : r.coset_reports) {
    o << "  cosets of " << label_set(s, cr.subgroup) << ": "
      << cr.classes.size() << " classes, sizes [";
    for (size_t i = 0; i < cr.class_sizes.size(); ++i) {
      if (i) o << ",";
      o << cr.class_sizes[i];
    }
    o << "], disjoint " << (cr.is_disjoint ? "yes" : "no") << ", covers "
      << (cr.covers ? "yes" : "no") << ", uniform "
      << (cr.uniform ? "yes" : "no") << "\n";
  }
  if (r.decomposition && r.decomposition->verified) {
    o << "  strong decomposition: B "
      << label_set(s, *r.decomposition->b_factor) << " x factor "
      << label_set(s, r.decomposition->factors.front())
      << (r.decomposition->b_strict ? "" : " (relaxed B)") << "\n";
  }
  o << "  elapsed: " << r.elapsed_seconds << "s\n";
  return o.str();
}

std::string errata_to_json(const std::vector<ErrataEntry>& entries) {
  ojson arr = ojson::array();
  for (const auto& e : entries) {
    ojson j;
    j["claim_id"] = e.claim_id;
    j["book_claim"] = e.book_claim;
    j["oracle_verdict"] = e.oracle_verdict;
    j["status"] = to_string(e.status);
    j["witness"] = e.witness;
    j["witness_note"] = e.witness_note;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string errata_to_text(const std::vector<ErrataEntry>& entries) {
  std::ostringstream o;
  for (const auto& e : entries) {
    o << e.claim_id << ": " << to_string(e.status) << "\n";
    o << "  claim: " << e.book_claim << "\n";
    o << "  oracle: " << e.oracle_verdict << "\n";
    if (!e.witness.empty()) {
      o << "  witness: " << set_to_string(e.witness) << " - " << e.witness_note
        << "\n";
    }
  }
  return o.str();
}

}  // namespace ssg
