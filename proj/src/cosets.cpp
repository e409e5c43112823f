#include "ssg/cosets.hpp"

#include <algorithm>
#include <map>

namespace ssg {

ElemSet s_coset(const FiniteSemigroup& s, const EmbeddedGroup& a, Elem x,
                CosetSide side) {
  if (!s.in_range(x)) throw PreconditionError("coset representative out of range");
  ElemSet out;
  out.reserve(a.members.size());
  for (Elem h : a.members) {
    out.push_back(side == CosetSide::left ? s.product(x, h) : s.product(h, x));
  }
  return normalized(std::move(out));
}

namespace {

// Distinct values of a per-element set map, with the smallest representative
// for each class, classes in canonical order.
struct ClassIndex {
  std::vector<ElemSet> classes;
  std::vector<Elem> representatives;
};

ClassIndex collect_classes(const FiniteSemigroup& s,
                           const std::vector<ElemSet>& per_element) {
  std::map<ElemSet, Elem> first_rep;
  for (Elem x = 0; x < s.size; ++x) {
    first_rep.try_emplace(per_element[x], x);
  }
  std::vector<size_t> order;
  ClassIndex idx;
  for (auto& [cls, rep] : first_rep) {
    idx.classes.push_back(cls);
    idx.representatives.push_back(rep);
    order.push_back(order.size());
  }
  // map keys come out lexicographically; re-sort canonically (size first)
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return set_less(idx.classes[i], idx.classes[j]);
  });
  ClassIndex out;
  for (size_t i : order) {
    out.classes.push_back(std::move(idx.classes[i]));
    out.representatives.push_back(idx.representatives[i]);
  }
  return out;
}

bool classes_disjoint(const std::vector<ElemSet>& classes) {
  for (size_t i = 0; i < classes.size(); ++i) {
    for (size_t j = i + 1; j < classes.size(); ++j) {
      ElemSet meet;
      std::set_intersection(classes[i].begin(), classes[i].end(),
                            classes[j].begin(), classes[j].end(),
                            std::back_inserter(meet));
      if (!meet.empty()) return false;
    }
  }
  return true;
}

bool classes_cover(const FiniteSemigroup& s,
                   const std::vector<ElemSet>& classes) {
  std::vector<char> hit(s.size, 0);
  for (const auto& c : classes) {
    for (Elem x : c) hit[x] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

}  // namespace

CosetPartitionReport coset_partition_report(const FiniteSemigroup& s,
                                            const EmbeddedGroup& a,
                                            CosetSide side) {
  std::vector<ElemSet> per(s.size);
  for (Elem x = 0; x < s.size; ++x) per[x] = s_coset(s, a, x, side);
  const ClassIndex idx = collect_classes(s, per);
  CosetPartitionReport r;
  r.subgroup = a.members;
  r.side = side;
  r.classes = idx.classes;
  r.representatives = idx.representatives;
  r.is_disjoint = classes_disjoint(r.classes);
  r.covers = classes_cover(s, r.classes);
  for (const auto& c : r.classes) r.class_sizes.push_back((int)c.size());
  std::sort(r.class_sizes.begin(), r.class_sizes.end());
  r.uniform = r.class_sizes.empty() ||
              r.class_sizes.front() == r.class_sizes.back();
  return r;
}

ElemSet double_coset(const FiniteSemigroup& s, const EmbeddedGroup& a,
                     const EmbeddedGroup& b, Elem x) {
  if (!s.in_range(x)) throw PreconditionError("representative out of range");
  ElemSet out;
  out.reserve(a.members.size() * b.members.size());
  for (Elem u : a.members) {
    const Elem ux = s.product(u, x);
    for (Elem v : b.members) out.push_back(s.product(ux, v));
  }
  return normalized(std::move(out));
}

DoubleCosetReport double_coset_report(const FiniteSemigroup& s,
                                      const EmbeddedGroup& a,
                                      const EmbeddedGroup& b) {
  std::vector<ElemSet> per(s.size);
  for (Elem x = 0; x < s.size; ++x) per[x] = double_coset(s, a, b, x);
  const ClassIndex idx = collect_classes(s, per);
  DoubleCosetReport r;
  r.a = a.members;
  r.b = b.members;
  r.classes = idx.classes;
  r.representatives = idx.representatives;
  r.is_disjoint = classes_disjoint(r.classes);
  r.covers = classes_cover(s, r.classes);

  // related(x, y) means y lies in AxB
  auto related = [&](Elem x, Elem y) { return set_contains(per[x], y); };
  r.reflexive = true;
  for (Elem x = 0; x < s.size; ++x) {
    if (!related(x, x)) r.reflexive = false;
  }
  r.symmetric = true;
  for (Elem x = 0; x < s.size && r.symmetric; ++x) {
    for (Elem y = 0; y < s.size; ++y) {
      if (related(x, y) != related(y, x)) {
        r.symmetric = false;
        break;
      }
    }
  }
  // x ~ y and y ~ z imply x ~ z exactly when AyB stays inside AxB for every
  // y related to x.
  r.transitive = true;
  for (Elem x = 0; x < s.size && r.transitive; ++x) {
    for (Elem y : per[x]) {
      if (!is_subset(per[y], per[x])) {
        r.transitive = false;
        break;
      }
    }
  }
  r.is_s_equivalence =
      r.reflexive && r.symmetric && r.transitive && r.is_disjoint && r.covers;
  return r;
}

bool is_s_normal(const FiniteSemigroup& s, const EmbeddedGroup& a) {
  for (Elem x = 0; x < s.size; ++x) {
    const ElemSet xa = s_coset(s, a, x, CosetSide::left);
    const ElemSet ax = s_coset(s, a, x, CosetSide::right);
    if (is_subset(xa, a.members) && is_subset(ax, a.members)) continue;
    if (s.zero && xa == ElemSet{*s.zero} && ax == ElemSet{*s.zero}) continue;
    return false;
  }
  return true;
}

std::vector<EmbeddedGroup> s_normal_subgroups(const FiniteSemigroup& s,
                                              const SubgroupOptions& opts) {
  std::vector<EmbeddedGroup> out;
  for (auto& g : all_subgroups(s, opts)) {
    if (is_s_normal(s, g)) out.push_back(std::move(g));
  }
  return out;
}

bool is_pseudo_simple(const FiniteSemigroup& s, const SubgroupOptions& opts) {
  return s_normal_subgroups(s, opts).empty();
}

QuotientReport quotient(const FiniteSemigroup& s, const EmbeddedGroup& a) {
  if (!is_s_normal(s, a)) {
    throw PreconditionError("quotient requires an S-normal subgroup");
  }
  std::vector<ElemSet> per(s.size);
  for (Elem x = 0; x < s.size; ++x) per[x] = s_coset(s, a, x, CosetSide::right);
  const ClassIndex idx = collect_classes(s, per);
  QuotientReport r;
  r.subgroup = a.members;
  r.classes = idx.classes;
  r.integrity_ok = true;
  const int k = (int)r.classes.size();
  r.product_table.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      ElemSet prod;
      for (Elem x : r.classes[i]) {
        for (Elem y : r.classes[j]) prod.push_back(s.product(x, y));
      }
      prod = normalized(std::move(prod));
      int container = -1;
      for (int c = 0; c < k; ++c) {
        if (is_subset(prod, r.classes[c])) {
          if (container >= 0) {
            r.integrity_ok = false;  // ambiguous containment
          } else {
            container = c;
          }
        }
      }
      if (container < 0) r.integrity_ok = false;
      r.product_table[i][j] = container;
    }
  }
  return r;
}

}  // namespace ssg
