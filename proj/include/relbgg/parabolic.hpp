#pragma once

#include "relbgg/rootsys.hpp"
#include "relbgg/weyl.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace relbgg {

/// Set of crossed simple nodes, 0-based internally, 1-based in text.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  static NodeSet of(std::initializer_list<std::size_t> one_based) {
    NodeSet s;
    for (auto i : one_based) s.insert(i - 1);
    return s;
  }
  static NodeSet all(std::size_t rank) { return NodeSet(rank == 64 ? ~0ull : ((1ull << rank) - 1)); }

  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  void insert(std::size_t i) {
    if (i >= 64) throw std::invalid_argument("node index too large");
    bits_ |= (1ull << i);
  }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(const NodeSet& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  /// Nodes of {0..rank-1} not in the set.
  std::vector<std::size_t> complement(std::size_t rank) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank; ++i)
      if (!contains(i)) out.push_back(i);
    return out;
  }

  NodeSet operator-(const NodeSet& o) const { return NodeSet(bits_ & ~o.bits_); }
  friend bool operator==(const NodeSet& a, const NodeSet& b) { return a.bits_ == b.bits_; }

  /// "1,2"; empty set prints as "".
  std::string str() const {
    std::string s;
    for (auto i : members()) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return s;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Parses "1,2" (1-based); "" or "-" is the empty set.
inline NodeSet parse_nodes(std::string_view text, std::size_t rank) {
  NodeSet s;
  std::string str(text);
  if (str.empty() || str == "-" || str == "none") return s;
  std::stringstream ss(str);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("malformed node index '" + item + "'");
    const auto i = std::stoul(item);
    if (i < 1 || i > rank) throw std::invalid_argument("node index " + item + " out of range 1.." + std::to_string(rank));
    s.insert(i - 1);
  }
  return s;
}

/// q inside p inside g, given by crossed nodes sigma_p subset of sigma_q.
struct ParabolicPair {
  NodeSet sigma_p;
  NodeSet sigma_q;

  ParabolicPair() = default;
  ParabolicPair(NodeSet p, NodeSet q) : sigma_p(p), sigma_q(q) {
    if (!p.subset_of(q)) throw std::invalid_argument("sigma_p must be contained in sigma_q (q is a subalgebra of p)");
  }
};

inline void check_pair(const ParabolicPair& pair, const RootSystem& rs) {
  if (!pair.sigma_p.subset_of(pair.sigma_q)) throw std::invalid_argument("sigma_p must be contained in sigma_q");
  if (!pair.sigma_q.subset_of(NodeSet::all(rs.rank()))) throw std::invalid_argument("node index out of range");
}

inline int sigma_height(const Root& alpha, const NodeSet& sigma) {
  int h = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (sigma.contains(i)) h += alpha[i];
  return h;
}

/// Indices into rs.positive_roots().
struct RootPartition {
  std::vector<std::size_t> q0;
  std::vector<std::size_t> mid;
  std::vector<std::size_t> pplus;
};

inline RootPartition partition(const ParabolicPair& pair, const RootSystem& rs) {
  RootPartition out;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const Root& r = rs.root(k);
    if (sigma_height(r, pair.sigma_q) == 0) out.q0.push_back(k);
    else if (sigma_height(r, pair.sigma_p) > 0) out.pplus.push_back(k);
    else out.mid.push_back(k);
  }
  return out;
}

/// Positive roots of the Levi factor with crossed nodes sigma.
inline std::vector<std::size_t> levi_roots(const NodeSet& sigma, const RootSystem& rs) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rs.num_positive(); ++k)
    if (sigma_height(rs.root(k), sigma) == 0) out.push_back(k);
  return out;
}

/// Half-sum of the positive roots of the Levi with crossed nodes sigma.
inline Weight levi_delta(const NodeSet& sigma, const RootSystem& rs) {
  Weight s(rs.rank());
  for (auto k : levi_roots(sigma, rs)) s += rs.root_weight(rs.root(k));
  return Rational(1, 2) * s;
}

inline Weight delta_p(const ParabolicPair& pair, const RootSystem& rs) { return levi_delta(pair.sigma_p, rs); }

inline Weight delta_qp(const ParabolicPair& pair, const RootSystem& rs) {
  Weight w(rs.rank());
  for (auto i : (pair.sigma_q - pair.sigma_p).members()) w[i] = 1;
  return w;
}

/// <lambda, alpha_i^vee> is a non-negative integer for every uncrossed i.
inline bool is_dominant(const Weight& lambda, const NodeSet& sigma) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (!sigma.contains(i) && (lambda[i] < 0 || !is_integer(lambda[i]))) return false;
  return true;
}

inline bool is_integral(const Weight& lambda) { return lambda.is_integral(); }

inline bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& sorted_b) {
  return std::all_of(a.begin(), a.end(),
                     [&](std::size_t x) { return std::binary_search(sorted_b.begin(), sorted_b.end(), x); });
}

inline void sort_canonical(std::vector<WeylElement>& v) {
  std::sort(v.begin(), v.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.word() < b.word();
  });
}

/// W^q_p from the W_p-orbit of delta^q_p: the orbit point x(delta^q_p) belongs to w = x^{-1}.
inline std::vector<WeylElement> relative_hasse(const ParabolicPair& pair, const RootSystem& rs,
                                               std::size_t cap = default_orbit_cap()) {
  check_pair(pair, rs);
  const auto mid = partition(pair, rs).mid;
  std::vector<WeylElement> out;
  for (const auto& pt : orbit(delta_qp(pair, rs), pair.sigma_p.complement(rs.rank()), rs, cap)) {
    WeylElement w = WeylElement::from_word(Word(pt.word.rbegin(), pt.word.rend()), rs);
    if (w.length() != pt.word.size() || !subset_of(w.phi(), mid))
      throw std::logic_error("relative Hasse element " + w.str() + " violates Phi_w in Delta+(p0 cap q+)");
    out.push_back(std::move(w));
  }
  sort_canonical(out);
  return out;
}

/// W^p = {w : Phi_w in Delta+(p+)}.
inline std::vector<WeylElement> hasse(const NodeSet& sigma, const RootSystem& rs, std::size_t cap = default_orbit_cap()) {
  return relative_hasse(ParabolicPair(NodeSet(), sigma), rs, cap);
}

/// The subgroup generated by the uncrossed reflections.
inline std::vector<WeylElement> parabolic_subgroup(const NodeSet& sigma, const RootSystem& rs,
                                                   std::size_t cap = default_orbit_cap()) {
  std::vector<WeylElement> out;
  for (const auto& pt : orbit(delta(rs), sigma.complement(rs.rank()), rs, cap))
    out.push_back(WeylElement::from_delta_image(pt.weight, rs));
  sort_canonical(out);
  return out;
}

inline bool in_hasse(const WeylElement& w, const NodeSet& sigma, const RootSystem& rs) {
  return std::all_of(w.phi().begin(), w.phi().end(), [&](std::size_t k) { return sigma_height(rs.root(k), sigma) > 0; });
}

/// w = w1 w2 with w1 in W^q_p, w2 in W^p; `wqp` is relative_hasse(pair).
inline std::pair<WeylElement, WeylElement> factorize(const WeylElement& w, const ParabolicPair& pair,
                                                     const RootSystem& rs, const std::vector<WeylElement>& wqp) {
  if (!in_hasse(w, pair.sigma_q, rs)) throw std::invalid_argument("element " + w.str() + " is not in W^q");
  std::vector<std::size_t> target;
  for (auto k : w.phi())
    if (sigma_height(rs.root(k), pair.sigma_p) == 0) target.push_back(k);
  const WeylElement* w1 = nullptr;
  for (const auto& x : wqp)
    if (x.phi() == target) w1 = &x;
  if (!w1) throw std::logic_error("no element of W^q_p with Phi = Phi_w cap Delta+(p0) for " + w.str());
  WeylElement w2 = multiply(w1->inverse(rs), w, rs);
  if (w1->length() + w2.length() != w.length() || !in_hasse(w2, pair.sigma_p, rs))
    throw std::logic_error("factorization of " + w.str() + " failed");
  return {*w1, w2};
}

inline std::pair<WeylElement, WeylElement> factorize(const WeylElement& w, const ParabolicPair& pair,
                                                     const RootSystem& rs) {
  return factorize(w, pair, rs, relative_hasse(pair, rs));
}

}  // namespace relbgg
