#include "ssg/subgroups.hpp"

#include <algorithm>
#include <set>

namespace ssg {

Elem EmbeddedGroup::inverse_of(Elem x) const {
  const int pos = member_pos(x);
  if (pos < 0) throw PreconditionError("element is not a member of the group");
  return inverses[pos];
}

int EmbeddedGroup::member_pos(Elem x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return -1;
  return (int)(it - members.begin());
}

ElemSet idempotents(const FiniteSemigroup& s) {
  ElemSet out;
  for (Elem e = 0; e < s.size; ++e) {
    if (s.is_idempotent(e)) out.push_back(e);
  }
  return out;
}

namespace {

// Builds the group record for a member set already known to be a group with
// the given identity.
EmbeddedGroup finish_group(const FiniteSemigroup& s, ElemSet members,
                           Elem identity) {
  EmbeddedGroup g;
  g.parent = &s;
  g.members = std::move(members);
  g.identity = identity;
  g.inverses.resize(g.members.size());
  for (size_t i = 0; i < g.members.size(); ++i) {
    for (Elem y : g.members) {
      if (s.product(g.members[i], y) == identity &&
          s.product(y, g.members[i]) == identity) {
        g.inverses[i] = y;
        break;
      }
    }
  }
  return g;
}

}  // namespace

EmbeddedGroup maximal_subgroup_at(const FiniteSemigroup& s, Elem e) {
  if (!s.in_range(e) || !s.is_idempotent(e)) {
    throw PreconditionError("maximal_subgroup_at requires an idempotent");
  }
  // Carrier of the local monoid e*S*e.
  std::vector<char> in_local(s.size, 0);
  ElemSet local;
  for (Elem x = 0; x < s.size; ++x) {
    const Elem y = s.product(s.product(e, x), e);
    if (!in_local[y]) {
      in_local[y] = 1;
      local.push_back(y);
    }
  }
  std::sort(local.begin(), local.end());
  // Its group of units with identity e.
  ElemSet members;
  for (Elem x : local) {
    for (Elem y : local) {
      if (s.product(x, y) == e && s.product(y, x) == e) {
        members.push_back(x);
        break;
      }
    }
  }
  return finish_group(s, std::move(members), e);
}

std::optional<EmbeddedGroup> subgroup_check(const FiniteSemigroup& s,
                                            const ElemSet& subset) {
  if (subset.empty()) throw PreconditionError("subgroup_check of empty subset");
  for (Elem x : subset) {
    if (!s.in_range(x)) throw PreconditionError("subset element out of range");
  }
  for (Elem x : subset) {
    for (Elem y : subset) {
      if (!set_contains(subset, s.product(x, y))) return std::nullopt;
    }
  }
  // Identity: the unique idempotent acting as two-sided unit on the subset.
  Elem identity = -1;
  for (Elem e : subset) {
    bool ok = true;
    for (Elem x : subset) {
      if (s.product(e, x) != x || s.product(x, e) != x) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) return std::nullopt;
  for (Elem x : subset) {
    bool has_inverse = false;
    for (Elem y : subset) {
      if (s.product(x, y) == identity && s.product(y, x) == identity) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) return std::nullopt;
  }
  return finish_group(s, subset, identity);
}

std::vector<EmbeddedGroup> subgroups_of_group(const EmbeddedGroup& g) {
  const FiniteSemigroup& s = *g.parent;
  std::set<ElemSet> seen;
  std::vector<ElemSet> subs;
  auto add = [&](ElemSet m) {
    if (seen.insert(m).second) subs.push_back(std::move(m));
  };
  // Seed with every cyclic subgroup.
  for (Elem x : g.members) {
    ElemSet cyc{x};
    Elem p = x;
    while (p != g.identity) {
      p = s.product(p, x);
      cyc.push_back(p);
    }
    add(normalized(std::move(cyc)));
  }
  // Close under pairwise join: the subgroup generated by a union is its
  // product closure (finite group, so closure under the product suffices).
  // Iterate to a fixed point; this yields the full subgroup lattice.
  for (size_t grown = 0; grown != subs.size();) {
    grown = subs.size();
    for (size_t i = 0; i < subs.size(); ++i) {
      for (size_t j = i + 1; j < subs.size(); ++j) {
        add(closure_of(s, set_union(subs[i], subs[j])));
      }
    }
  }
  std::sort(subs.begin(), subs.end(), set_less);
  std::vector<EmbeddedGroup> out;
  out.reserve(subs.size());
  for (auto& m : subs) out.push_back(finish_group(s, std::move(m), g.identity));
  return out;
}

std::vector<EmbeddedGroup> all_subgroups(const FiniteSemigroup& s,
                                         const SubgroupOptions& opts) {
  ElemSet idems;
  if (opts.policy == IdentityPolicy::global_identity_only) {
    if (!s.identity) {
      throw PreconditionError(
          "global-identity-only policy requires a semigroup identity");
    }
    idems = {*s.identity};
  } else {
    idems = idempotents(s);
  }
  std::vector<EmbeddedGroup> out;
  for (Elem e : idems) {
    EmbeddedGroup h = maximal_subgroup_at(s, e);
    if (h.order() > opts.max_group_order) {
      throw LimitError("subgroup enumeration cap exceeded by the H-class at "
                       "idempotent " +
                       std::to_string(e) + " (order " +
                       std::to_string(h.order()) + ")");
    }
    for (auto& sub : subgroups_of_group(h)) {
      if (sub.order() < opts.min_size) continue;
      if (opts.proper_only && sub.order() == s.size) continue;
      out.push_back(std::move(sub));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const EmbeddedGroup& a, const EmbeddedGroup& b) {
              return set_less(a.members, b.members);
            });
  return out;
}

std::vector<EmbeddedGroup> maximal_subgroups(const FiniteSemigroup& s,
                                             const SubgroupOptions& opts) {
  SubgroupOptions o = opts;
  o.min_size = std::max(opts.min_size, 2);
  std::vector<EmbeddedGroup> subs = all_subgroups(s, o);
  std::vector<EmbeddedGroup> out;
  for (const auto& g : subs) {
    bool maximal = true;
    for (const auto& h : subs) {
      if (h.order() > g.order() && is_subset(g.members, h.members)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(g);
  }
  return out;
}

std::vector<EmbeddedGroup> largest_subgroups(const FiniteSemigroup& s,
                                             const SubgroupOptions& opts) {
  std::vector<EmbeddedGroup> subs = all_subgroups(s, opts);
  int best = 0;
  for (const auto& g : subs) best = std::max(best, g.order());
  std::vector<EmbeddedGroup> out;
  for (auto& g : subs) {
    if (g.order() == best) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ssg
