#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssg {

using Elem = int;

// Sorted vector of distinct element indices. Every set-valued result in the
// library uses this representation so output is deterministic and diffable.
using ElemSet = std::vector<Elem>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural validation failed (closure, associativity, duplicate labels).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A configured cap was exceeded (semigroup size, group enumeration order,
// subset-search budget).
class LimitError : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation's contract (membership, containment, bad
// arguments).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

inline ElemSet normalized(ElemSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool set_contains(const ElemSet& s, Elem x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline bool is_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// Canonical order for collections of element sets: by size, then
// lexicographically by members.
inline bool set_less(const ElemSet& a, const ElemSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline std::string set_to_string(const ElemSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

}  // namespace ssg
