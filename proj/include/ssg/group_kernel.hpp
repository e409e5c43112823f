#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ssg/subgroups.hpp"

namespace ssg {

// Conjugacy classes, normalizer orders and center of a group, with the class
// equation checked internally.
struct ConjugacyReport {
  std::vector<ElemSet> classes;            // partition of the members
  std::map<Elem, int> normalizer_orders;   // per class representative
  ElemSet center;
};

// Disjoint cycles of a permutation, each rotated to start at its minimum
// point and sorted by that minimum; points are 1-based.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;  // each of length >= 2
  std::vector<int> fixed_points;

  // Sorted multiset of cycle lengths, fixed points contributing 1s.
  std::vector<int> cycle_type() const;
};

int element_order(const EmbeddedGroup& g, Elem x);
EmbeddedGroup cyclic_subgroup(const EmbeddedGroup& g, Elem x);
bool is_cyclic(const EmbeddedGroup& g);
bool is_abelian(const EmbeddedGroup& g);

ConjugacyReport conjugacy_analysis(const EmbeddedGroup& g);

// True iff h is a subgroup of g with the same identity and |h| divides |g|.
// ContainmentError (PreconditionError) when h is not inside g.
bool lagrange_check(const EmbeddedGroup& g, const EmbeddedGroup& h);

// An element of order p when p divides |g|; nullopt when it does not.
std::optional<Elem> cauchy_witness(const EmbeddedGroup& g, int p);

// All subgroups of order p^a where p^a is the largest power of p dividing
// |g|; and the classical count/conjugacy check (count = 1 mod p, all
// conjugate).
std::vector<EmbeddedGroup> sylow_subgroups(const EmbeddedGroup& g, int p);
bool sylow_count_check(const EmbeddedGroup& g, int p);

bool are_conjugate_subgroups(const EmbeddedGroup& g, const EmbeddedGroup& a,
                             const EmbeddedGroup& b);

// |AxB| == |A||B| / |A intersect xBx^-1|.
bool double_coset_size_check(const EmbeddedGroup& g, const EmbeddedGroup& a,
                             const EmbeddedGroup& b, Elem x);

CycleDecomposition cycle_decomposition(const Transformation& t);

// The permutation whose cycle form is x's with every point replaced by its
// image under t. Under the apply-left-first product this equals
// t^-1 * x * t, which the tests check against the table computation.
Transformation conjugate_by_replacement(const Transformation& x,
                                        const Transformation& t);

// A permutation t with conjugate_by_replacement(x, t) == y, built by aligning
// the canonical cycle lists; nullopt when the cycle types differ.
std::optional<Transformation> find_conjugator(const Transformation& x,
                                              const Transformation& y);

// Cayley right-translation action: member g maps to the permutation
// p(x) = x*g of the members re-indexed 1..|G|. An injective homomorphism into
// the full transformation semigroup of degree |G|.
std::vector<std::pair<Elem, Transformation>> regular_representation(
    const EmbeddedGroup& g);

bool is_prime(int p);

}  // namespace ssg
