#pragma once

#include <optional>
#include <vector>

#include "ssg/classify.hpp"
#include "ssg/group_kernel.hpp"

namespace ssg {

enum class ProductKind { internal, strong_internal };

struct ProductDecomposition {
  ProductKind kind = ProductKind::internal;
  std::vector<ElemSet> factors;
  std::optional<ElemSet> b_factor;
  bool verified = false;
  // The strong form needs the B factor to be an S-subsemigroup. b_strict
  // records whether B held a group of size >= 2 properly, or only passed the
  // relaxed reading (a singleton group as a proper subset).
  bool b_strict = false;
};

// The left-associated element-wise product of the factor sets accounts for
// every element of the carrier.
bool internal_product_check(const FiniteSemigroup& s,
                            const std::vector<ElemSet>& factors);

// B is an S-subsemigroup (strict, or relaxed when allow_relaxed_b), every
// factor is a maximal subgroup under the policy, and [B] + factors multiply
// out to the whole carrier.
bool strong_internal_product_check(const FiniteSemigroup& s, const ElemSet& b,
                                   const std::vector<ElemSet>& maximal_factors,
                                   const SubgroupOptions& opts = {},
                                   bool allow_relaxed_b = false);

// The complement recipe: factor = the maximal subgroup at the semigroup's
// identity, B = (carrier minus factor) plus the identity. Returns the
// decomposition when it verifies (relaxed B accepted and flagged).
std::optional<ProductDecomposition> find_strong_decomposition(
    const FiniteSemigroup& s, const SubgroupOptions& opts = {});

struct SDirectProductVerdict {
  bool ok = false;
  // factor index with no unique maximal subgroup, when that is the failure
  std::optional<size_t> non_unique_factor;
};

// The external direct product has exactly one maximal subgroup under the
// policy and it is the product of the factors' unique maximal subgroups.
SDirectProductVerdict s_direct_product_check(
    const std::vector<const FiniteSemigroup*>& factors,
    const SubgroupOptions& opts = {}, int cap = kDefaultSizeCap);

// map is a total element map from s to t; the check is that map(A) lies in A'
// and map is multiplicative on A. The isomorphism variant also requires the
// restriction to biject onto A'.
bool s_homomorphism_check(const FiniteSemigroup& s, const FiniteSemigroup& t,
                          const std::vector<Elem>& map,
                          const EmbeddedGroup& a, const EmbeddedGroup& a_img);
bool s_isomorphism_check(const FiniteSemigroup& s, const FiniteSemigroup& t,
                         const std::vector<Elem>& map, const EmbeddedGroup& a,
                         const EmbeddedGroup& a_img);

// The regular representation of a subgroup packaged as an embedding into the
// full transformation semigroup of degree |A|.
struct CayleyEmbedding {
  int degree = 0;
  std::vector<std::pair<Elem, Transformation>> images;
};

CayleyEmbedding cayley_s_embedding(const FiniteSemigroup& s,
                                   const EmbeddedGroup& a);

}  // namespace ssg
