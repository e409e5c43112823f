#include "ssg/semigroup.hpp"

#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace ssg {

Transformation Transformation::identity(int n) {
  Transformation t;
  t.degree = n;
  t.images.resize(n);
  for (int i = 0; i < n; ++i) t.images[i] = i + 1;
  return t;
}

bool Transformation::is_bijective() const {
  std::vector<char> seen(degree, 0);
  for (int v : images) {
    if (v < 1 || v > degree || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

Transformation Transformation::inverse() const {
  if (!is_bijective()) {
    throw PreconditionError("transformation is not bijective");
  }
  Transformation inv;
  inv.degree = degree;
  inv.images.resize(degree);
  for (int i = 0; i < degree; ++i) inv.images[images[i] - 1] = i + 1;
  return inv;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree != g.degree) {
    throw PreconditionError("transformation degrees differ");
  }
  Transformation out;
  out.degree = f.degree;
  out.images.resize(f.degree);
  for (int i = 0; i < f.degree; ++i) out.images[i] = g.images[f.images[i] - 1];
  return out;
}

Elem FiniteSemigroup::product_of(const std::vector<Elem>& xs) const {
  if (xs.empty()) throw PreconditionError("empty product");
  Elem acc = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) acc = product(acc, xs[i]);
  return acc;
}

std::optional<AssociativityViolation> find_associativity_violation(
    const FiniteSemigroup& s) {
  const int n = s.size;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      const Elem ij = s.product(i, j);
      for (Elem k = 0; k < n; ++k) {
        if (s.product(ij, k) != s.product(i, s.product(j, k))) {
          return AssociativityViolation{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

void validate_and_finalize(FiniteSemigroup& s) {
  const int n = s.size;
  if (n <= 0) throw ValidationError("semigroup must have at least one element");
  if ((int)s.table.size() != n * n) {
    throw ValidationError("table is not square of the declared size");
  }
  for (Elem v : s.table) {
    if (v < 0 || v >= n) {
      throw ValidationError("closure violated: table entry " +
                            std::to_string(v) + " out of range for size " +
                            std::to_string(n));
    }
  }
  if (auto v = find_associativity_violation(s)) {
    throw ValidationError("associativity violated at triple (" +
                          std::to_string(v->i) + "," + std::to_string(v->j) +
                          "," + std::to_string(v->k) + ")");
  }
  if (s.labels.empty()) {
    s.labels.resize(n);
    for (int i = 0; i < n; ++i) s.labels[i] = std::to_string(i);
  }
  if ((int)s.labels.size() != n) {
    throw ValidationError("label count does not match size");
  }
  std::unordered_set<std::string> seen(s.labels.begin(), s.labels.end());
  if ((int)seen.size() != n) throw ValidationError("labels are not distinct");

  s.identity.reset();
  s.zero.reset();
  for (Elem e = 0; e < n; ++e) {
    bool id = true, zr = true;
    for (Elem x = 0; x < n && (id || zr); ++x) {
      if (s.product(e, x) != x || s.product(x, e) != x) id = false;
      if (s.product(e, x) != e || s.product(x, e) != e) zr = false;
    }
    if (id) s.identity = e;
    if (zr) s.zero = e;
  }
}

FiniteSemigroup make_zn_mul(int n, int cap) {
  if (n < 2) throw PreconditionError("make_zn_mul requires n >= 2");
  if (n > cap) throw LimitError("make_zn_mul: n exceeds the size cap");
  FiniteSemigroup s;
  s.size = n;
  s.name = "Z" + std::to_string(n);
  s.table.resize((size_t)n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) s.table[i * n + j] = (i * j) % n;
  }
  s.labels.resize(n);
  for (int i = 0; i < n; ++i) s.labels[i] = std::to_string(i);
  s.identity = 1;
  s.zero = 0;
  return s;
}

int transformation_index(const Transformation& t) {
  int idx = 0;
  for (int v : t.images) idx = idx * t.degree + (v - 1);
  return idx;
}

Transformation transformation_at(int degree, int index) {
  Transformation t;
  t.degree = degree;
  t.images.resize(degree);
  for (int i = degree - 1; i >= 0; --i) {
    t.images[i] = index % degree + 1;
    index /= degree;
  }
  return t;
}

static std::string transformation_label(const Transformation& t) {
  std::string s;
  for (int i = 0; i < t.degree; ++i) {
    if (i) s += ' ';
    s += std::to_string(t.images[i]);
  }
  return "[" + s + "]";
}

FiniteSemigroup make_full_transformation(int n) {
  if (n < 1 || n > kMaxTransformationDegree) {
    throw LimitError("make_full_transformation requires 1 <= n <= " +
                     std::to_string(kMaxTransformationDegree));
  }
  int count = 1;
  for (int i = 0; i < n; ++i) count *= n;
  FiniteSemigroup s;
  s.size = count;
  s.name = "T" + std::to_string(n);
  std::vector<Transformation> elems(count);
  s.labels.resize(count);
  for (int i = 0; i < count; ++i) {
    elems[i] = transformation_at(n, i);
    s.labels[i] = transformation_label(elems[i]);
  }
  s.table.resize((size_t)count * count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      s.table[(size_t)i * count + j] = transformation_index(
          compose(elems[i], elems[j]));
    }
  }
  s.identity = transformation_index(Transformation::identity(n));
  s.zero.reset();
  if (count == 1) s.zero = 0;
  return s;
}

namespace {

struct ModMatrix {
  int k, m;
  std::vector<int> a;  // row-major, k*k entries in 0..m-1

  int index() const {
    int idx = 0;
    for (int v : a) idx = idx * m + v;
    return idx;
  }
  static ModMatrix at(int k, int m, int index) {
    ModMatrix mat{k, m, std::vector<int>(k * k)};
    for (int i = k * k - 1; i >= 0; --i) {
      mat.a[i] = index % m;
      index /= m;
    }
    return mat;
  }
  std::string label() const {
    std::string s;
    for (int r = 0; r < k; ++r) {
      if (r) s += '|';
      for (int c = 0; c < k; ++c) s += std::to_string(a[r * k + c]);
    }
    return s;
  }
};

ModMatrix mat_mul(const ModMatrix& x, const ModMatrix& y) {
  ModMatrix out{x.k, x.m, std::vector<int>(x.k * x.k, 0)};
  for (int r = 0; r < x.k; ++r) {
    for (int c = 0; c < x.k; ++c) {
      int acc = 0;
      for (int t = 0; t < x.k; ++t) acc += x.a[r * x.k + t] * y.a[t * x.k + c];
      out.a[r * x.k + c] = acc % x.m;
    }
  }
  return out;
}

}  // namespace

FiniteSemigroup make_matrix_semigroup(int k, int m, int cap) {
  if (k < 1 || m < 2) {
    throw PreconditionError("make_matrix_semigroup requires k >= 1, m >= 2");
  }
  long long count = 1;
  for (int i = 0; i < k * k; ++i) {
    count *= m;
    if (count > cap) {
      throw LimitError("make_matrix_semigroup: m^(k^2) exceeds the size cap");
    }
  }
  const int n = (int)count;
  FiniteSemigroup s;
  s.size = n;
  s.name = "M" + std::to_string(k) + "x" + std::to_string(k) + "_Z" +
           std::to_string(m);
  std::vector<ModMatrix> elems;
  elems.reserve(n);
  s.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    elems.push_back(ModMatrix::at(k, m, i));
    s.labels[i] = elems.back().label();
  }
  s.table.resize((size_t)n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s.table[(size_t)i * n + j] = mat_mul(elems[i], elems[j]).index();
    }
  }
  ModMatrix id{k, m, std::vector<int>(k * k, 0)};
  for (int d = 0; d < k; ++d) id.a[d * k + d] = 1;
  s.identity = id.index();
  s.zero = 0;
  return s;
}

FiniteSemigroup direct_product(const FiniteSemigroup& s1,
                               const FiniteSemigroup& s2, int cap) {
  const long long n = (long long)s1.size * s2.size;
  if (n > cap) throw LimitError("direct_product: size exceeds the cap");
  FiniteSemigroup s;
  s.size = (int)n;
  s.name = s1.name + "x" + s2.name;
  s.labels.resize(n);
  for (int i = 0; i < s1.size; ++i) {
    for (int j = 0; j < s2.size; ++j) {
      s.labels[(size_t)i * s2.size + j] =
          "(" + s1.labels[i] + "," + s2.labels[j] + ")";
    }
  }
  s.table.resize((size_t)n * n);
  for (int a = 0; a < (int)n; ++a) {
    const int a1 = a / s2.size, a2 = a % s2.size;
    for (int b = 0; b < (int)n; ++b) {
      const int b1 = b / s2.size, b2 = b % s2.size;
      s.table[(size_t)a * n + b] =
          s1.product(a1, b1) * s2.size + s2.product(a2, b2);
    }
  }
  if (s1.identity && s2.identity) {
    s.identity = *s1.identity * s2.size + *s2.identity;
  }
  if (s1.zero && s2.zero) s.zero = *s1.zero * s2.size + *s2.zero;
  return s;
}

FiniteSemigroup from_table(const std::vector<std::vector<Elem>>& table,
                           const std::vector<std::string>& labels,
                           const std::string& name) {
  FiniteSemigroup s;
  s.size = (int)table.size();
  s.name = name;
  for (const auto& row : table) {
    if ((int)row.size() != s.size) {
      throw ValidationError("table is not square");
    }
    s.table.insert(s.table.end(), row.begin(), row.end());
  }
  s.labels = labels;
  validate_and_finalize(s);
  return s;
}

ElemSet closure_of(const FiniteSemigroup& s, const ElemSet& seed) {
  if (seed.empty()) throw PreconditionError("closure of an empty seed");
  std::vector<char> in(s.size, 0);
  std::deque<Elem> work;
  for (Elem x : seed) {
    if (!s.in_range(x)) throw PreconditionError("closure seed out of range");
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  }
  ElemSet members(seed);
  while (!work.empty()) {
    const Elem x = work.front();
    work.pop_front();
    // products with every element already in the set, both orders
    for (size_t i = 0; i < members.size(); ++i) {
      for (Elem p : {s.product(x, members[i]), s.product(members[i], x)}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
          work.push_back(p);
        }
      }
    }
  }
  return normalized(std::move(members));
}

std::string serialize(const FiniteSemigroup& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["size"] = s.size;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < s.size; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < s.size; ++c) row.push_back(s.table[i * s.size + c]);
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["labels"] = s.labels;
  return j.dump(2) + "\n";
}

namespace {

FiniteSemigroup parse_sgp_json(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j.contains("table")) {
    throw ParseError("missing required fields 'size' and 'table'");
  }
  FiniteSemigroup s;
  s.name = j.value("name", std::string("semigroup"));
  if (!j["size"].is_number_integer()) throw ParseError("'size' must be an integer");
  s.size = j["size"].get<int>();
  if (s.size <= 0) throw ParseError("'size' must be positive");
  if (!j["table"].is_array() || (int)j["table"].size() != s.size) {
    throw ParseError("'table' must be an array of 'size' rows");
  }
  for (const auto& row : j["table"]) {
    if (!row.is_array() || (int)row.size() != s.size) {
      throw ParseError("every table row must have 'size' entries");
    }
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("table entries must be integers");
      s.table.push_back(v.get<int>());
    }
  }
  if (j.contains("labels") && !j["labels"].is_null()) {
    if (!j["labels"].is_array()) throw ParseError("'labels' must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      s.labels.push_back(l.get<std::string>());
    }
  }
  return s;
}

FiniteSemigroup parse_sgp_text(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty input");
  FiniteSemigroup s;
  try {
    s.size = std::stoi(line);
  } catch (...) {
    throw ParseError("line " + std::to_string(lineno) + ": expected the size");
  }
  if (s.size <= 0) {
    throw ParseError("line " + std::to_string(lineno) + ": size must be positive");
  }
  s.name = "semigroup";
  for (int r = 0; r < s.size; ++r) {
    if (!next_line()) {
      throw ParseError("unexpected end of input: expected " +
                       std::to_string(s.size) + " table rows");
    }
    std::istringstream row(line);
    for (int c = 0; c < s.size; ++c) {
      int v;
      if (!(row >> v)) {
        throw ParseError("line " + std::to_string(lineno) + ": expected " +
                         std::to_string(s.size) + " entries");
      }
      s.table.push_back(v);
    }
  }
  return s;
}

}  // namespace

FiniteSemigroup deserialize(const std::string& bytes, int cap) {
  size_t pos = bytes.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw ParseError("empty input");
  FiniteSemigroup s =
      bytes[pos] == '{' ? parse_sgp_json(bytes) : parse_sgp_text(bytes);
  if (s.size > cap) throw LimitError("deserialize: size exceeds the cap");
  validate_and_finalize(s);
  return s;
}

}  // namespace ssg
