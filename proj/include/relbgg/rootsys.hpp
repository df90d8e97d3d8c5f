#pragma once

#include "relbgg/matrix.hpp"
#include "relbgg/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relbgg {

/// Root in simple-root coordinates.
using Root = std::vector<int>;

/// Weight in fundamental-weight coordinates.
struct Weight {
  std::vector<Rational> c;

  Weight() = default;
  explicit Weight(std::size_t n) : c(n, Rational(0)) {}
  explicit Weight(std::vector<Rational> v) : c(std::move(v)) {}
  Weight(std::initializer_list<long long> v) {
    for (auto x : v) c.emplace_back(x);
  }
  static Weight from_ints(const std::vector<long long>& v) {
    Weight w;
    for (auto x : v) w.c.emplace_back(x);
    return w;
  }

  std::size_t size() const { return c.size(); }
  Rational& operator[](std::size_t i) { return c[i]; }
  const Rational& operator[](std::size_t i) const { return c[i]; }

  bool is_integral() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
  }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
  }

  Weight& operator+=(const Weight& o) {
    if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  Weight& operator*=(const Rational& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& x : w.c) h = (h ^ std::hash<std::string>{}(x.str())) * 1099511628211ull;
    return h;
  }
};

/// Parses "1,-2,1/2".
inline Weight parse_weight(std::string_view text) {
  Weight w;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) w.c.push_back(parse_rational(item));
  if (w.c.empty()) throw std::invalid_argument("empty weight");
  return w;
}

struct CartanSpec {
  IntMatrix entries;
  std::string label;

  std::size_t rank() const { return entries.rows(); }
};

/// Cartan matrix of a simple type with a_ij = <alpha_j, alpha_i^vee>, Bourbaki numbering.
inline CartanSpec cartan_of_type(char type, int n) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  auto bad = [&] {
    return std::invalid_argument(std::string("unsupported Dynkin type ") + type + std::to_string(n));
  };
  if (n < 1) throw bad();
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case 'C':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case 'D':
      if (n < 3) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;
      break;
    case 'G':
      if (n != 2) throw bad();
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
    default:
      throw bad();
  }
  return {a, std::string(1, type) + std::to_string(n)};
}

inline CartanSpec direct_sum(const CartanSpec& x, const CartanSpec& y) {
  const std::size_t n = x.rank(), m = y.rank();
  IntMatrix a(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = x.entries(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(n + i, n + j) = y.entries(i, j);
  return {a, x.label.empty() || y.label.empty() ? std::string() : x.label + "x" + y.label};
}

/// Symmetrizer d with d_i a_ij = d_j a_ji, normalized to integers with the
/// shortest simple root of each component at 1. std::nullopt if none exists.
inline std::optional<std::vector<Rational>> symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> d(n, Rational(0));
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::vector<std::size_t> comp{s}, stack{s};
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0) continue;
        const Rational dj = d[i] * Rational(a(i, j)) / Rational(a(j, i));
        if (d[j] == 0) {
          d[j] = dj;
          comp.push_back(j);
          stack.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    comps.push_back(comp);
  }
  for (const auto& comp : comps) {
    Rational lo = d[comp[0]];
    for (auto i : comp) lo = std::min(lo, d[i]);
    for (auto i : comp) d[i] /= lo;
  }
  return d;
}

/// Throws std::invalid_argument with a diagnostic if a is not a finite-type Cartan matrix.
inline void validate_cartan(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0 || a.cols() != n) throw std::invalid_argument("Cartan matrix must be square and non-empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 2) throw std::invalid_argument("Cartan matrix diagonal entry " + std::to_string(i + 1) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw std::invalid_argument("Cartan matrix has a positive off-diagonal entry");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        throw std::invalid_argument("Cartan matrix violates a_ij = 0 <=> a_ji = 0");
    }
  }
  const auto d = symmetrizer(a);
  if (!d) throw std::invalid_argument("Cartan matrix is not symmetrizable");
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = (*d)[i] * Rational(a(i, j));
  if (!is_positive_definite(s)) throw std::invalid_argument("Cartan matrix is not of finite type");
}

/// "A3", "A2xA1", "B2×A1", or a JSON integer matrix "[[2,-1],[-1,2]]".
inline CartanSpec parse_algebra(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty algebra spec");
  if (s.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed Cartan matrix JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw std::invalid_argument("Cartan matrix must be a non-empty array");
    const std::size_t n = j.size();
    IntMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!j[r].is_array() || j[r].size() != n) throw std::invalid_argument("Cartan matrix must be square");
      for (std::size_t c = 0; c < n; ++c) {
        if (!j[r][c].is_number_integer()) throw std::invalid_argument("Cartan matrix entries must be integers");
        a(r, c) = j[r][c].get<long long>();
      }
    }
    validate_cartan(a);
    return {a, ""};
  }
  for (const std::string times = "\xC3\x97"; s.find(times) != std::string::npos;)
    s.replace(s.find(times), times.size(), "x");
  if (s.back() == 'x' || s.back() == 'X') throw std::invalid_argument("malformed algebra spec '" + s + "'");
  std::optional<CartanSpec> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])) ||
        !std::all_of(part.begin() + 1, part.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw std::invalid_argument("malformed algebra component '" + part + "'");
    const auto piece = cartan_of_type(part[0], std::stoi(part.substr(1)));
    out = out ? direct_sum(*out, piece) : piece;
  }
  if (!out) throw std::invalid_argument("malformed algebra spec '" + s + "'");
  return *out;
}

class RootSystem {
 public:
  explicit RootSystem(CartanSpec spec) : spec_(std::move(spec)) {
    validate_cartan(spec_.entries);
    build();
  }

  const CartanSpec& cartan() const { return spec_; }
  std::size_t rank() const { return spec_.rank(); }
  int a(std::size_t i, std::size_t j) const { return static_cast<int>(spec_.entries(i, j)); }

  const std::vector<Root>& positive_roots() const { return pos_; }
  std::size_t num_positive() const { return pos_.size(); }
  const Root& root(std::size_t idx) const { return pos_[idx]; }

  /// Index of a positive root, or -1.
  int index_of(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
  }
  bool is_root(const Root& r) const {
    if (index_of(r) >= 0) return true;
    Root m(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) m[i] = -r[i];
    return index_of(m) >= 0;
  }

  /// Index of the simple root alpha_i in positive_roots().
  std::size_t simple_index(std::size_t i) const { return simple_idx_[i]; }

  /// Coroot of positive root idx in simple-coroot coordinates.
  const std::vector<int>& coroot(std::size_t idx) const { return coroot_[idx]; }

  /// Killing form on the Cartan subalgebra in the simple-coroot basis.
  const Matrix& killing() const { return killing_; }
  /// Inner product induced on weights, in the fundamental-weight basis.
  const Matrix& gram() const { return gram_; }

  /// Connected components of the Dynkin diagram (0-based node lists).
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }

  Weight root_weight(const Root& r) const {
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < rank(); ++j) s += static_cast<long long>(a(i, j)) * r[j];
      w[i] = s;
    }
    return w;
  }

  /// Root coordinates of a weight lying in the root lattice span (rational).
  std::vector<Rational> to_root_coords(const Weight& w) const {
    return inverse_cartan_ * std::span<const Rational>(w.c);
  }

  Rational inner(const Weight& x, const Weight& y) const {
    const auto gy = gram_ * std::span<const Rational>(y.c);
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += x[i] * gy[i];
    return s;
  }

  /// <lambda, alpha^vee> for the positive root with the given index.
  Rational coroot_pairing(const Weight& w, std::size_t idx) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      if (coroot_[idx][i] != 0) s += w[i] * coroot_[idx][i];
    return s;
  }

  int height(const Root& r) const { return std::accumulate(r.begin(), r.end(), 0); }

  Root simple_root(std::size_t i) const {
    Root r(rank(), 0);
    r[i] = 1;
    return r;
  }

  /// s_i applied to a root (simple-root coordinates).
  Root reflect_root(std::size_t i, const Root& r) const {
    int p = 0;
    for (std::size_t j = 0; j < rank(); ++j) p += a(i, j) * r[j];
    Root out = r;
    out[i] -= p;
    return out;
  }

  /// s_i applied to a weight (fundamental coordinates).
  Weight reflect(std::size_t i, const Weight& w) const {
    Weight out = w;
    const Rational li = w[i];
    if (li == 0) return out;
    for (std::size_t j = 0; j < rank(); ++j)
      if (a(j, i) != 0) out[j] -= li * a(j, i);
    return out;
  }

 private:
  void build() {
    const std::size_t n = rank();
    std::vector<Root> found;
    std::map<Root, int> seen;
    for (std::size_t i = 0; i < n; ++i) {
      found.push_back(simple_root(i));
      seen[found.back()] = 1;
    }
    // Extend by root strings, one height level at a time.
    for (std::size_t cur = 0; cur < found.size(); ++cur) {
      const Root beta = found[cur];
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        for (Root down = beta;;) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += a(i, j) * beta[j];
        if (p - pairing > 0) {
          Root up = beta;
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = 1;
            found.push_back(up);
          }
        }
      }
      if (found.size() > 1000) throw std::runtime_error("root closure did not terminate");
    }
    std::sort(found.begin(), found.end(), [&](const Root& x, const Root& y) {
      const int hx = height(x), hy = height(y);
      if (hx != hy) return hx < hy;
      return x > y;
    });
    pos_ = found;
    for (std::size_t k = 0; k < pos_.size(); ++k) index_[pos_[k]] = static_cast<int>(k);
    simple_idx_.resize(n);
    for (std::size_t i = 0; i < n; ++i) simple_idx_[i] = static_cast<std::size_t>(index_.at(simple_root(i)));

    // d_i proportional to (alpha_i, alpha_i).
    const auto d = *symmetrizer(spec_.entries);
    coroot_.clear();
    for (const auto& r : pos_) {
      Rational len = 0;  // (alpha,alpha) up to the common factor per component
      // (alpha,alpha) = sum_ij c_i c_j d_i a_ij
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (r[i] && r[j]) len += Rational(r[i] * r[j]) * d[i] * a(i, j);
      len /= 2;
      std::vector<int> cv(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        const Rational c = Rational(r[j]) * d[j] / len;
        cv[j] = static_cast<int>(to_int64(c));
      }
      coroot_.push_back(cv);
    }

    killing_ = Matrix(n, n);
    for (std::size_t idx = 0; idx < pos_.size(); ++idx) {
      const Weight aw = root_weight(pos_[idx]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) killing_(i, j) += 2 * aw[i] * aw[j];
    }
    gram_ = inverse(killing_);
    inverse_cartan_ = inverse(to_rational(spec_.entries));

    std::vector<int> comp_of(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
      if (comp_of[s] >= 0) continue;
      std::vector<std::size_t> comp{s};
      comp_of[s] = static_cast<int>(components_.size());
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (std::size_t j = 0; j < n; ++j)
          if (comp_of[j] < 0 && a(comp[k], j) != 0) {
            comp_of[j] = comp_of[s];
            comp.push_back(j);
          }
      std::sort(comp.begin(), comp.end());
      components_.push_back(comp);
    }
  }

  CartanSpec spec_;
  std::vector<Root> pos_;
  std::map<Root, int> index_;
  std::vector<std::size_t> simple_idx_;
  std::vector<std::vector<int>> coroot_;
  Matrix killing_;
  Matrix gram_;
  Matrix inverse_cartan_;
  std::vector<std::vector<std::size_t>> components_;
};

inline RootSystem build_root_system(const CartanSpec& spec) { return RootSystem(spec); }

/// Half-sum of the positive roots.
inline Weight delta(const RootSystem& rs) {
  Weight s(rs.rank());
  for (const auto& r : rs.positive_roots()) s += rs.root_weight(r);
  return Rational(1, 2) * s;
}

/// 2(lambda,alpha)/(alpha,alpha) via the Killing form.
inline Rational pairing(const Weight& lambda, const Root& alpha, const RootSystem& rs) {
  const Weight aw = rs.root_weight(alpha);
  return 2 * rs.inner(lambda, aw) / rs.inner(aw, aw);
}

inline Rational norm_sq(const Weight& lambda, const RootSystem& rs) { return rs.inner(lambda, lambda); }

inline Weight fundamental_weight(std::size_t i, std::size_t rank) {
  Weight w(rank);
  w[i] = 1;
  return w;
}

inline std::string root_str(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

}  // namespace relbgg
