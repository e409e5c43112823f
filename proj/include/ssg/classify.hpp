#pragma once

#include <optional>
#include <vector>

#include "ssg/group_kernel.hpp"
#include "ssg/subgroups.hpp"

namespace ssg {

enum class LagrangeClass { lagrange, weakly_lagrange, non_lagrange };

// Per-prime breakdown of p-power-order subgroups. s_p_sylow_subgroups is
// populated when p divides the semigroup order, non_p_sylow_subgroups when it
// does not (and p < order).
struct SylowDetail {
  int prime = 0;
  bool divides_order = false;
  std::vector<EmbeddedGroup> s_p_sylow_subgroups;
  std::vector<EmbeddedGroup> non_p_sylow_subgroups;
};

// (element, its order inside the subgroups containing it, order divides the
// semigroup order). The order is identical across every subgroup containing
// the element, since a group's identity is its unique idempotent.
struct CauchyElement {
  Elem element = -1;
  int order = 0;
  bool is_cauchy = false;
};

// Full taxonomy verdict for one semigroup. Universal flags carry a
// counterexample witness when false; existential flags carry an instance
// witness when true.
struct ClassificationReport {
  int order = 0;
  IdentityPolicy policy = IdentityPolicy::any_idempotent;

  bool is_s_semigroup = false;
  std::optional<ElemSet> s_witness;  // smallest subgroup when S-semigroup

  bool s_commutative = false;
  std::optional<ElemSet> non_commutative_witness;
  bool s_weakly_commutative = false;
  std::optional<ElemSet> commutative_witness;

  bool s_cyclic = false;
  std::optional<ElemSet> non_cyclic_witness;
  bool s_weakly_cyclic = false;
  std::optional<ElemSet> cyclic_witness;

  LagrangeClass lagrange_class = LagrangeClass::non_lagrange;
  std::optional<ElemSet> dividing_witness;
  std::optional<ElemSet> non_dividing_witness;

  bool is_p_sylow_semigroup = false;
  std::vector<SylowDetail> sylow;

  bool is_cauchy_semigroup = false;
  std::vector<CauchyElement> cauchy_table;

  bool is_s_simple = false;
  bool is_pseudo_simple = false;

  bool is_s_maximal = false;
  int maximal_subgroup_count = 0;
  std::optional<ElemSet> largest_subgroup;
};

// True (with the first subgroup in canonical order as witness) iff the
// semigroup has a proper embedded subgroup of size >= min_size.
std::pair<bool, std::optional<ElemSet>> is_s_semigroup(
    const FiniteSemigroup& s, const SubgroupOptions& opts = {});

ClassificationReport classify(const FiniteSemigroup& s,
                              const SubgroupOptions& opts = {});

// SylowDetails for every prime <= order (or the requested primes).
std::vector<SylowDetail> sylow_analysis(const FiniteSemigroup& s,
                                        const SubgroupOptions& opts = {},
                                        const std::vector<int>& primes = {});

std::vector<CauchyElement> cauchy_elements(const FiniteSemigroup& s,
                                           const SubgroupOptions& opts = {});

// Proper product-closed subsets strictly containing a maximum-order subgroup.
// Exhaustive search for size <= 12; otherwise candidates are single-element
// extensions closure(L + {x}) of each largest subgroup L.
std::vector<ElemSet> hyper_subsemigroups(const FiniteSemigroup& s,
                                         const SubgroupOptions& opts = {});

bool is_hyper_subsemigroup(const FiniteSemigroup& s, const ElemSet& subset,
                           const SubgroupOptions& opts = {});

bool is_s_simple(const FiniteSemigroup& s, const SubgroupOptions& opts = {});

// subset is product-closed and contains a group of size >= 2 that is a proper
// subset of it. min_group_size 1 gives the relaxed reading used for
// direct-product B-factors.
bool s_subsemigroup_check(const FiniteSemigroup& s, const ElemSet& subset,
                          const SubgroupOptions& opts = {},
                          int min_group_size = 2);

const char* to_string(LagrangeClass c);

}  // namespace ssg
