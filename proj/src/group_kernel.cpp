#include "ssg/group_kernel.hpp"

#include <algorithm>

namespace ssg {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; (long long)d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int element_order(const EmbeddedGroup& g, Elem x) {
  if (!g.contains(x)) throw PreconditionError("element is not in the group");
  int m = 1;
  Elem p = x;
  while (p != g.identity) {
    p = g.product(p, x);
    ++m;
  }
  return m;
}

EmbeddedGroup cyclic_subgroup(const EmbeddedGroup& g, Elem x) {
  if (!g.contains(x)) throw PreconditionError("element is not in the group");
  ElemSet members{x};
  Elem p = x;
  while (p != g.identity) {
    p = g.product(p, x);
    members.push_back(p);
  }
  auto sub = subgroup_check(*g.parent, normalized(std::move(members)));
  return *sub;  // powers of a group element always form a group
}

bool is_cyclic(const EmbeddedGroup& g) {
  for (Elem x : g.members) {
    if (element_order(g, x) == g.order()) return true;
  }
  return false;
}

bool is_abelian(const EmbeddedGroup& g) {
  for (Elem x : g.members) {
    for (Elem y : g.members) {
      if (g.product(x, y) != g.product(y, x)) return false;
    }
  }
  return true;
}

ConjugacyReport conjugacy_analysis(const EmbeddedGroup& g) {
  ConjugacyReport r;
  std::vector<char> done(g.members.size(), 0);
  for (size_t i = 0; i < g.members.size(); ++i) {
    if (done[i]) continue;
    const Elem a = g.members[i];
    ElemSet cls;
    for (Elem y : g.members) {
      cls.push_back(g.product(g.product(y, a), g.inverse_of(y)));
    }
    cls = normalized(std::move(cls));
    for (Elem c : cls) done[g.member_pos(c)] = 1;
    int norm = 0;
    for (Elem y : g.members) {
      if (g.product(y, a) == g.product(a, y)) ++norm;
    }
    r.normalizer_orders[a] = norm;
    r.classes.push_back(std::move(cls));
  }
  std::sort(r.classes.begin(), r.classes.end(), set_less);
  for (Elem x : g.members) {
    bool central = true;
    for (Elem y : g.members) {
      if (g.product(x, y) != g.product(y, x)) {
        central = false;
        break;
      }
    }
    if (central) r.center.push_back(x);
  }
  // Class equation: sum of |G|/|N(a)| over representatives equals |G|.
  long long total = 0;
  for (const auto& [rep, n] : r.normalizer_orders) total += g.order() / n;
  if (total != g.order()) {
    throw Error("class equation check failed");  // unreachable for a group
  }
  return r;
}

bool lagrange_check(const EmbeddedGroup& g, const EmbeddedGroup& h) {
  if (h.identity != g.identity || !is_subset(h.members, g.members)) {
    throw PreconditionError("h is not a subgroup of g with the same identity");
  }
  return g.order() % h.order() == 0;
}

std::optional<Elem> cauchy_witness(const EmbeddedGroup& g, int p) {
  if (!is_prime(p)) throw PreconditionError("cauchy_witness requires a prime");
  if (g.order() % p != 0) return std::nullopt;
  for (Elem x : g.members) {
    const int m = element_order(g, x);
    if (m % p == 0) {
      // x^(m/p) has order exactly p
      Elem y = g.identity;
      for (int i = 0; i < m / p; ++i) y = g.product(y, x);
      return y;
    }
  }
  throw Error("no element of prime order found in a group of divisible order");
}

std::vector<EmbeddedGroup> sylow_subgroups(const EmbeddedGroup& g, int p) {
  if (!is_prime(p)) throw PreconditionError("sylow_subgroups requires a prime");
  if (g.order() > kDefaultGroupOrderCap) {
    throw LimitError("sylow enumeration cap exceeded (group order " +
                     std::to_string(g.order()) + ")");
  }
  long long pa = 1;
  while (g.order() % (pa * p) == 0) pa *= p;
  std::vector<EmbeddedGroup> out;
  for (auto& sub : subgroups_of_group(g)) {
    if (sub.order() == pa) out.push_back(std::move(sub));
  }
  return out;
}

bool are_conjugate_subgroups(const EmbeddedGroup& g, const EmbeddedGroup& a,
                             const EmbeddedGroup& b) {
  if (a.order() != b.order()) return false;
  for (Elem y : g.members) {
    ElemSet conj;
    conj.reserve(b.members.size());
    for (Elem m : b.members) {
      conj.push_back(g.product(g.product(y, m), g.inverse_of(y)));
    }
    if (normalized(std::move(conj)) == a.members) return true;
  }
  return false;
}

bool sylow_count_check(const EmbeddedGroup& g, int p) {
  const auto subs = sylow_subgroups(g, p);
  if (subs.empty() || (int)subs.size() % p != 1) return false;
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = i + 1; j < subs.size(); ++j) {
      if (!are_conjugate_subgroups(g, subs[i], subs[j])) return false;
    }
  }
  return true;
}

bool double_coset_size_check(const EmbeddedGroup& g, const EmbeddedGroup& a,
                             const EmbeddedGroup& b, Elem x) {
  for (const EmbeddedGroup* h : {&a, &b}) {
    if (h->identity != g.identity || !is_subset(h->members, g.members)) {
      throw PreconditionError("subgroup is not inside g with g's identity");
    }
  }
  if (!g.contains(x)) throw PreconditionError("x is not in the group");
  ElemSet axb;
  for (Elem u : a.members) {
    for (Elem v : b.members) {
      axb.push_back(g.product(g.product(u, x), v));
    }
  }
  axb = normalized(std::move(axb));
  ElemSet xbxi;
  const Elem xi = g.inverse_of(x);
  for (Elem v : b.members) {
    xbxi.push_back(g.product(g.product(x, v), xi));
  }
  xbxi = normalized(std::move(xbxi));
  ElemSet meet;
  std::set_intersection(a.members.begin(), a.members.end(), xbxi.begin(),
                        xbxi.end(), std::back_inserter(meet));
  return axb.size() * meet.size() == a.members.size() * b.members.size();
}

std::vector<int> CycleDecomposition::cycle_type() const {
  std::vector<int> type(fixed_points.size(), 1);
  for (const auto& c : cycles) type.push_back((int)c.size());
  std::sort(type.begin(), type.end());
  return type;
}

CycleDecomposition cycle_decomposition(const Transformation& t) {
  if (!t.is_bijective()) {
    throw PreconditionError("cycle decomposition requires a permutation");
  }
  CycleDecomposition d;
  std::vector<char> seen(t.degree, 0);
  for (int start = 1; start <= t.degree; ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cyc;
    int p = start;
    do {
      seen[p - 1] = 1;
      cyc.push_back(p);
      p = t.apply(p);
    } while (p != start);
    if (cyc.size() == 1) {
      d.fixed_points.push_back(start);
    } else {
      d.cycles.push_back(std::move(cyc));  // starts at its minimum point
    }
  }
  return d;
}

Transformation conjugate_by_replacement(const Transformation& x,
                                        const Transformation& t) {
  if (x.degree != t.degree || !x.is_bijective() || !t.is_bijective()) {
    throw PreconditionError("conjugation requires permutations of one degree");
  }
  // x sends i -> j, so the conjugate sends t(i) -> t(j).
  Transformation out;
  out.degree = x.degree;
  out.images.resize(x.degree);
  for (int i = 1; i <= x.degree; ++i) {
    out.images[t.apply(i) - 1] = t.apply(x.apply(i));
  }
  return out;
}

std::optional<Transformation> find_conjugator(const Transformation& x,
                                              const Transformation& y) {
  if (x.degree != y.degree || !x.is_bijective() || !y.is_bijective()) {
    return std::nullopt;
  }
  const CycleDecomposition dx = cycle_decomposition(x);
  const CycleDecomposition dy = cycle_decomposition(y);
  if (dx.cycle_type() != dy.cycle_type()) return std::nullopt;
  // Group canonical cycles by length and align them pairwise; fixed points
  // align in increasing order.
  Transformation t;
  t.degree = x.degree;
  t.images.assign(x.degree, 0);
  auto by_length = [](const std::vector<std::vector<int>>& cs) {
    std::map<int, std::vector<const std::vector<int>*>> m;
    for (const auto& c : cs) m[(int)c.size()].push_back(&c);
    return m;
  };
  auto mx = by_length(dx.cycles);
  auto my = by_length(dy.cycles);
  for (auto& [len, xs] : mx) {
    const auto& ys = my[len];
    for (size_t i = 0; i < xs.size(); ++i) {
      for (int k = 0; k < len; ++k) t.images[(*xs[i])[k] - 1] = (*ys[i])[k];
    }
  }
  for (size_t i = 0; i < dx.fixed_points.size(); ++i) {
    t.images[dx.fixed_points[i] - 1] = dy.fixed_points[i];
  }
  return t;
}

std::vector<std::pair<Elem, Transformation>> regular_representation(
    const EmbeddedGroup& g) {
  const int n = g.order();
  std::vector<std::pair<Elem, Transformation>> out;
  out.reserve(n);
  for (Elem x : g.members) {
    Transformation t;
    t.degree = n;
    t.images.resize(n);
    for (int i = 0; i < n; ++i) {
      t.images[i] = g.member_pos(g.product(g.members[i], x)) + 1;
    }
    out.emplace_back(x, std::move(t));
  }
  return out;
}

}  // namespace ssg
