#pragma once

#include <vector>

#include "ssg/subgroups.hpp"

namespace ssg {

// One way of realizing an inverse pair (x, y): a relating pair (a, b) with
// a*b = identity, a and b outside {identity, x, y}, linking x to y and back
// through one-sided products. The orientation flags record which equations
// hold.
struct SInverseRealization {
  Elem a = -1, b = -1;
  bool xa_eq_y = false, ax_eq_y = false;
  bool yb_eq_x = false, by_eq_x = false;
};

// An unordered inverse pair {x, y} (stored with x < y; x == y never occurs
// because self-inverse elements admit no realization) together with every
// realization.
struct SInversePair {
  Elem x = -1, y = -1;
  std::vector<SInverseRealization> realizations;
};

enum class SInverseClass { inverse_group, inverse_free, mixed };

// All inverse pairs of the group, canonically ordered by (x, y).
std::vector<SInversePair> s_inverse_pairs(const EmbeddedGroup& g);

// x must not be the identity.
bool has_s_inverse(const EmbeddedGroup& g, Elem x);

SInverseClass classify_s_inverse(const EmbeddedGroup& g);

// The pair's relating pair (a, b) is itself an inverse pair whose relating
// pair is exactly {x, y}.
bool is_self_inversed_pair(const EmbeddedGroup& g, const SInversePair& pair);

// The relating pair (a, b) is itself an inverse pair (any relating pair).
bool co_inverse_check(const EmbeddedGroup& g, const SInversePair& pair);

// y is an s-conjugate of x: x = a*y*a^-1 where the conjugator a is conjugate
// to both x and y. Witnesses with y == x are excluded here; they are the
// reflexive case below.
struct SConjugateWitness {
  Elem x = -1, y = -1, a = -1;
};

std::vector<SConjugateWitness> s_conjugates(const EmbeddedGroup& g, Elem x);

bool has_s_conjugate(const EmbeddedGroup& g, Elem x);

// Conjugators a giving x = a*x*a^-1 with a commuting with x, a conjugate to
// x, and a outside {identity, x}. Reported separately because the reflexive
// reading is not part of the witness search above.
ElemSet reflexive_s_conjugators(const EmbeddedGroup& g, Elem x);

// Conjugacy inside g: some u in g has a = u*b*u^-1.
bool are_conjugate_elements(const EmbeddedGroup& g, Elem a, Elem b);

}  // namespace ssg
