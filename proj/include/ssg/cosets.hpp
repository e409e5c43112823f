#pragma once

#include <optional>
#include <vector>

#include "ssg/subgroups.hpp"

namespace ssg {

// xA (side::left, representative multiplied from the left of the written
// coset) vs. Ax (side::right).
enum class CosetSide { left, right };

struct CosetPartitionReport {
  ElemSet subgroup;
  CosetSide side = CosetSide::left;
  std::vector<ElemSet> classes;       // distinct cosets, canonical order
  std::vector<Elem> representatives;  // smallest x producing each class
  bool is_disjoint = false;
  bool covers = false;   // union equals the whole carrier
  bool uniform = false;  // all classes the same size
  std::vector<int> class_sizes;  // sorted ascending
};

struct DoubleCosetReport {
  ElemSet a, b;
  std::vector<ElemSet> classes;  // distinct AxB, canonical order
  std::vector<Elem> representatives;
  bool is_disjoint = false;
  bool covers = false;
  bool reflexive = false;   // x in AxB for every x
  bool symmetric = false;   // y in AxB iff x in AyB
  bool transitive = false;
  bool is_s_equivalence = false;  // all four conditions
};

ElemSet s_coset(const FiniteSemigroup& s, const EmbeddedGroup& a, Elem x,
                CosetSide side);

CosetPartitionReport coset_partition_report(const FiniteSemigroup& s,
                                            const EmbeddedGroup& a,
                                            CosetSide side = CosetSide::left);

ElemSet double_coset(const FiniteSemigroup& s, const EmbeddedGroup& a,
                     const EmbeddedGroup& b, Elem x);

DoubleCosetReport double_coset_report(const FiniteSemigroup& s,
                                      const EmbeddedGroup& a,
                                      const EmbeddedGroup& b);

// A is S-normal when, for each x independently, xA and Ax are contained in A,
// or (when a zero exists) both collapse to {zero}.
bool is_s_normal(const FiniteSemigroup& s, const EmbeddedGroup& a);

std::vector<EmbeddedGroup> s_normal_subgroups(const FiniteSemigroup& s,
                                              const SubgroupOptions& opts = {});

bool is_pseudo_simple(const FiniteSemigroup& s,
                      const SubgroupOptions& opts = {});

// The distinct classes Ax with the induced product: class * class maps to the
// class containing the element-wise product set. product_table[i][j] is the
// index of the product class; integrity_ok records that every product set
// landed inside exactly one class.
struct QuotientReport {
  ElemSet subgroup;
  std::vector<ElemSet> classes;
  std::vector<std::vector<int>> product_table;
  bool integrity_ok = false;
};

QuotientReport quotient(const FiniteSemigroup& s, const EmbeddedGroup& a);

}  // namespace ssg
