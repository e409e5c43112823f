#include "ssg/group_notions.hpp"

#include <algorithm>

namespace ssg {

namespace {

// All realizations of the ordered pair (x, y), xy = identity.
std::vector<SInverseRealization> realizations_of(const EmbeddedGroup& g,
                                                 Elem x, Elem y) {
  std::vector<SInverseRealization> out;
  const Elem e = g.identity;
  for (Elem a : g.members) {
    if (a == e || a == x || a == y) continue;
    const Elem b = g.inverse_of(a);
    if (b == e || b == x || b == y) continue;
    SInverseRealization r;
    r.a = a;
    r.b = b;
    r.xa_eq_y = g.product(x, a) == y;
    r.ax_eq_y = g.product(a, x) == y;
    r.yb_eq_x = g.product(y, b) == x;
    r.by_eq_x = g.product(b, y) == x;
    if ((r.xa_eq_y || r.ax_eq_y) && (r.yb_eq_x || r.by_eq_x)) {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

std::vector<SInversePair> s_inverse_pairs(const EmbeddedGroup& g) {
  if (g.order() < 2) {
    throw PreconditionError("s_inverse_pairs requires |G| >= 2");
  }
  std::vector<SInversePair> out;
  for (Elem x : g.members) {
    if (x == g.identity) continue;
    const Elem y = g.inverse_of(x);
    if (y == g.identity || y < x) continue;  // y == x yields no realization
    auto rs = realizations_of(g, x, y);
    if (!rs.empty()) out.push_back(SInversePair{x, y, std::move(rs)});
  }
  return out;
}

bool has_s_inverse(const EmbeddedGroup& g, Elem x) {
  if (!g.contains(x)) throw PreconditionError("element is not in the group");
  if (x == g.identity) {
    throw PreconditionError("the identity is excluded from inverse pairs");
  }
  const Elem y = g.inverse_of(x);
  if (y == g.identity) return false;
  return !realizations_of(g, x, y).empty();
}

SInverseClass classify_s_inverse(const EmbeddedGroup& g) {
  if (g.order() < 2) {
    throw PreconditionError("classification requires |G| >= 2");
  }
  bool all = true, none = true;
  for (Elem x : g.members) {
    if (x == g.identity) continue;
    if (has_s_inverse(g, x)) {
      none = false;
    } else {
      all = false;
    }
  }
  if (all) return SInverseClass::inverse_group;
  if (none) return SInverseClass::inverse_free;
  return SInverseClass::mixed;
}

bool is_self_inversed_pair(const EmbeddedGroup& g, const SInversePair& pair) {
  if (g.product(pair.x, pair.y) != g.identity) {
    throw PreconditionError("not an inverse pair");
  }
  for (const auto& r : pair.realizations) {
    const Elem lo = std::min(r.a, r.b), hi = std::max(r.a, r.b);
    for (const auto& back : realizations_of(g, lo, hi)) {
      const Elem blo = std::min(back.a, back.b), bhi = std::max(back.a, back.b);
      if (blo == std::min(pair.x, pair.y) && bhi == std::max(pair.x, pair.y)) {
        return true;
      }
    }
  }
  return false;
}

bool co_inverse_check(const EmbeddedGroup& g, const SInversePair& pair) {
  if (g.product(pair.x, pair.y) != g.identity) {
    throw PreconditionError("not an inverse pair");
  }
  for (const auto& r : pair.realizations) {
    const Elem lo = std::min(r.a, r.b), hi = std::max(r.a, r.b);
    if (lo == g.identity || g.product(lo, hi) != g.identity) continue;
    if (!realizations_of(g, lo, hi).empty()) return true;
  }
  return false;
}

bool are_conjugate_elements(const EmbeddedGroup& g, Elem a, Elem b) {
  for (Elem u : g.members) {
    if (g.product(g.product(u, b), g.inverse_of(u)) == a) return true;
  }
  return false;
}

std::vector<SConjugateWitness> s_conjugates(const EmbeddedGroup& g, Elem x) {
  if (!g.contains(x)) throw PreconditionError("element is not in the group");
  std::vector<SConjugateWitness> out;
  for (Elem y : g.members) {
    if (y == x) continue;
    for (Elem a : g.members) {
      if (g.product(g.product(a, y), g.inverse_of(a)) != x) continue;
      if (are_conjugate_elements(g, a, x) && are_conjugate_elements(g, a, y)) {
        out.push_back(SConjugateWitness{x, y, a});
      }
    }
  }
  return out;
}

bool has_s_conjugate(const EmbeddedGroup& g, Elem x) {
  return !s_conjugates(g, x).empty();
}

ElemSet reflexive_s_conjugators(const EmbeddedGroup& g, Elem x) {
  if (!g.contains(x)) throw PreconditionError("element is not in the group");
  ElemSet out;
  for (Elem a : g.members) {
    if (a == g.identity || a == x) continue;
    if (g.product(a, x) != g.product(x, a)) continue;
    if (are_conjugate_elements(g, a, x)) out.push_back(a);
  }
  return out;
}

}  // namespace ssg
