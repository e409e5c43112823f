#pragma once

#include <optional>
#include <vector>

#include "ssg/semigroup.hpp"
#include "ssg/types.hpp"

namespace ssg {

inline constexpr int kDefaultGroupOrderCap = 720;

// A subset of a semigroup that is a group under the induced product. identity
// is an idempotent of the parent; inverses[i] is the inverse of members[i].
struct EmbeddedGroup {
  const FiniteSemigroup* parent = nullptr;
  ElemSet members;
  Elem identity = -1;
  std::vector<Elem> inverses;

  int order() const { return (int)members.size(); }
  bool contains(Elem x) const { return set_contains(members, x); }
  Elem product(Elem a, Elem b) const { return parent->product(a, b); }
  Elem inverse_of(Elem x) const;
  int member_pos(Elem x) const;  // index into members, -1 if absent
};

// Which embedded subgroups count. any_idempotent admits groups at every
// idempotent identity; global_identity_only restricts to groups sharing the
// semigroup's own identity (and requires one to exist).
enum class IdentityPolicy { any_idempotent, global_identity_only };

struct SubgroupOptions {
  IdentityPolicy policy = IdentityPolicy::any_idempotent;
  int min_size = 2;
  bool proper_only = true;
  int max_group_order = kDefaultGroupOrderCap;
};

// All e with e*e = e, sorted.
ElemSet idempotents(const FiniteSemigroup& s);

// The inclusion-largest group with identity e: the invertible elements of the
// local monoid e*S*e. PreconditionError if e is not idempotent.
// Groups hold a pointer to their parent semigroup, so the semigroup must
// outlive them; the deleted overloads reject temporaries.
EmbeddedGroup maximal_subgroup_at(const FiniteSemigroup& s, Elem e);
EmbeddedGroup maximal_subgroup_at(FiniteSemigroup&&, Elem) = delete;

// An EmbeddedGroup if subset is product-closed and forms a group; nullopt
// otherwise.
std::optional<EmbeddedGroup> subgroup_check(const FiniteSemigroup& s,
                                            const ElemSet& subset);
std::optional<EmbeddedGroup> subgroup_check(FiniteSemigroup&&,
                                            const ElemSet&) = delete;

// Every subgroup of every maximal subgroup admitted by the policy, filtered
// by min_size/proper_only, in canonical order (by size, then lexicographic
// members). LimitError naming the offending idempotent when a maximal
// subgroup exceeds max_group_order.
std::vector<EmbeddedGroup> all_subgroups(const FiniteSemigroup& s,
                                         const SubgroupOptions& opts = {});
std::vector<EmbeddedGroup> all_subgroups(FiniteSemigroup&&,
                                         const SubgroupOptions& = {}) = delete;

// The inclusion-maximal groups of size >= 2 among all_subgroups.
std::vector<EmbeddedGroup> maximal_subgroups(const FiniteSemigroup& s,
                                             const SubgroupOptions& opts = {});
std::vector<EmbeddedGroup> maximal_subgroups(
    FiniteSemigroup&&, const SubgroupOptions& = {}) = delete;

// The subgroups of maximum order.
std::vector<EmbeddedGroup> largest_subgroups(const FiniteSemigroup& s,
                                             const SubgroupOptions& opts = {});
std::vector<EmbeddedGroup> largest_subgroups(
    FiniteSemigroup&&, const SubgroupOptions& = {}) = delete;

// Full subgroup lattice of one group: all cyclic subgroups closed under
// pairwise join. Includes the trivial subgroup and g itself.
std::vector<EmbeddedGroup> subgroups_of_group(const EmbeddedGroup& g);

}  // namespace ssg
