#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssg/types.hpp"

namespace ssg {

// Default cap on semigroup size. Table memory grows with size^2, so a cap is
// enforced by every constructor. Overridable per call (and via SSG_MAX_ORDER
// in the CLI).
inline constexpr int kDefaultSizeCap = 16384;
inline constexpr int kDefaultMatrixSizeCap = 65536;
inline constexpr int kMaxTransformationDegree = 5;

// A self-map of {1,..,degree}. images[i] is the image of point i+1, values in
// 1..degree.
struct Transformation {
  int degree = 0;
  std::vector<int> images;

  static Transformation identity(int n);

  int apply(int point) const { return images[point - 1]; }
  bool is_bijective() const;
  Transformation inverse() const;  // PreconditionError if not bijective

  bool operator==(const Transformation&) const = default;
};

// Product convention used throughout: f * g means "apply f first, then g",
// i.e. (f*g)(x) = g(f(x)). This is the convention that makes conjugation by
// symbol replacement compute t^-1 * x * t (see group_kernel).
Transformation compose(const Transformation& f, const Transformation& g);

// A finite semigroup given by its full multiplication table.
// table[i*size + j] is the index of the product i*j. Immutable after
// construction; all operations in the library are pure functions over it.
struct FiniteSemigroup {
  int size = 0;
  std::vector<Elem> table;  // row-major, size*size entries
  std::vector<std::string> labels;
  std::optional<Elem> identity;
  std::optional<Elem> zero;
  std::string name;

  Elem product(Elem a, Elem b) const { return table[a * size + b]; }
  bool is_idempotent(Elem e) const { return product(e, e) == e; }
  const std::string& label(Elem x) const { return labels[x]; }
  bool in_range(Elem x) const { return x >= 0 && x < size; }

  // Left-associated product of a nonempty element sequence.
  Elem product_of(const std::vector<Elem>& xs) const;
};

struct AssociativityViolation {
  Elem i, j, k;
};

// Scans the whole table; returns the first violating triple if any.
std::optional<AssociativityViolation> find_associativity_violation(
    const FiniteSemigroup& s);

// Detects identity/zero by full scan and checks all structural invariants
// (closure, associativity, distinct labels). Throws ValidationError.
void validate_and_finalize(FiniteSemigroup& s);

// Z_n under multiplication mod n. identity=1, zero=0, labels "0".."n-1".
FiniteSemigroup make_zn_mul(int n, int cap = kDefaultSizeCap);

// All self-maps of {1..n} under composition (apply left factor first),
// enumerated lexicographically by image sequence. n in 1..5.
FiniteSemigroup make_full_transformation(int n);

int transformation_index(const Transformation& t);
Transformation transformation_at(int degree, int index);

// All k x k matrices over Z_m under matrix multiplication mod m, enumerated
// row-major by entry residues (first entry most significant).
FiniteSemigroup make_matrix_semigroup(int k, int m,
                                      int cap = kDefaultMatrixSizeCap);

// External direct product with pairs in row-major order
// (index = i1*size2 + i2); identity/zero present iff present in both factors.
FiniteSemigroup direct_product(const FiniteSemigroup& s1,
                               const FiniteSemigroup& s2,
                               int cap = kDefaultSizeCap);

// Validates a caller-supplied table. Labels default to "0".."n-1".
FiniteSemigroup from_table(const std::vector<std::vector<Elem>>& table,
                           const std::vector<std::string>& labels = {},
                           const std::string& name = "table");

// Smallest product-closed superset of seed (breadth-first, result sorted).
ElemSet closure_of(const FiniteSemigroup& s, const ElemSet& seed);

// .sgp serialization. serialize emits JSON; deserialize auto-detects JSON
// (first non-space byte '{') vs. the compact text form ("size" line followed
// by size rows) and re-validates everything.
std::string serialize(const FiniteSemigroup& s);
FiniteSemigroup deserialize(const std::string& bytes,
                            int cap = kDefaultSizeCap);

}  // namespace ssg
