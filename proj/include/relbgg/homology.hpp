#pragma once

#include "relbgg/parabolic.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace relbgg {

/// One irreducible component of homology. nu is the negative of its lowest weight.
struct HomologyEntry {
  std::size_t degree = 0;
  WeylElement word;
  Weight nu;
  Rational gap;  // Laplacian scalar, zero on homology
};

inline Rational laplacian_scalar(const Weight& lambda, const Weight& nu, const ParabolicPair& pair,
                                 const RootSystem& rs) {
  const Weight dp = delta_p(pair, rs);
  return Rational(1, 2) * (norm_sq(lambda + dp, rs) - norm_sq(nu + dp, rs));
}

inline void require_dominant(const Weight& lambda, const NodeSet& sigma, const RootSystem& rs, const char* what) {
  if (lambda.size() != rs.rank())
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " coordinates, rank is " +
                                std::to_string(rs.rank()));
  if (!lambda.is_integral() || !is_dominant(lambda, sigma))
    throw std::invalid_argument("lambda " + lambda.str() + " is not " + what + "-dominant integral");
}

/// One entry per w in W^q_p with nu = w(lambda + delta_p) - delta_p.
inline std::vector<HomologyEntry> relative_homology(const Weight& lambda, const ParabolicPair& pair,
                                                    const RootSystem& rs,
                                                    const std::vector<WeylElement>& wqp) {
  require_dominant(lambda, pair.sigma_p, rs, "p");
  const Weight dp = delta_p(pair, rs), d = delta(rs);
  std::vector<HomologyEntry> out;
  std::set<Weight> seen;
  for (const auto& w : wqp) {
    Weight nu = affine_action(w, lambda, dp, rs);
    if (nu != affine_action(w, lambda, d, rs))
      throw std::logic_error("affine actions with delta and delta_p disagree for " + w.str());
    if (!is_dominant(nu, pair.sigma_q)) throw std::logic_error("w.lambda is not q-dominant for " + w.str());
    if (!seen.insert(nu).second) throw std::logic_error("repeated weight " + nu.str() + " in the relative orbit");
    const Rational gap = laplacian_scalar(lambda, nu, pair, rs);
    if (gap != 0) throw std::logic_error("non-zero Laplacian scalar on the orbit");
    out.push_back({w.length(), w, std::move(nu), gap});
  }
  return out;
}

inline std::vector<HomologyEntry> relative_homology(const Weight& lambda, const ParabolicPair& pair,
                                                    const RootSystem& rs) {
  return relative_homology(lambda, pair, rs, relative_hasse(pair, rs));
}

/// Kostant: H_*(q+, V) for V the g-irreducible of highest weight lambda.
inline std::vector<HomologyEntry> absolute_homology(const Weight& lambda, const NodeSet& sigma_q,
                                                    const RootSystem& rs) {
  require_dominant(lambda, NodeSet(), rs, "g");
  return relative_homology(lambda, ParabolicPair(NodeSet(), sigma_q), rs);
}

struct FactorizedEntry {
  std::size_t i = 0, j = 0;
  WeylElement w1, w2;
  Weight mu;  // w2.lambda
  Weight nu;  // w1.mu
};

struct BigradedTable {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FactorizedEntry>> cells;

  /// Sorted (degree, weight) pairs with k = i + j.
  std::vector<std::pair<std::size_t, Weight>> flatten() const {
    std::vector<std::pair<std::size_t, Weight>> out;
    for (const auto& [ij, es] : cells)
      for (const auto& e : es) out.emplace_back(ij.first + ij.second, e.nu);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline BigradedTable factorized_homology(const Weight& lambda, const ParabolicPair& pair, const RootSystem& rs) {
  require_dominant(lambda, NodeSet(), rs, "g");
  check_pair(pair, rs);
  const Weight d = delta(rs);
  const auto wqp = relative_hasse(pair, rs);
  BigradedTable table;
  for (const auto& w2 : hasse(pair.sigma_p, rs)) {
    const Weight mu = affine_action(w2, lambda, d, rs);
    for (const auto& e : relative_homology(mu, pair, rs, wqp))
      table.cells[{e.degree, w2.length()}].push_back({e.degree, w2.length(), e.word, w2, mu, e.nu});
  }
  return table;
}

inline std::vector<std::pair<std::size_t, Weight>> flatten(const std::vector<HomologyEntry>& es) {
  std::vector<std::pair<std::size_t, Weight>> out;
  for (const auto& e : es) out.emplace_back(e.degree, e.nu);
  std::sort(out.begin(), out.end());
  return out;
}

struct SingularReport {
  std::vector<HomologyEntry> entries;
  std::vector<std::size_t> walls;  // positive roots alpha with <lambda + delta, alpha^vee> = 0
};

inline SingularReport singular_patterns(const Weight& lambda, const ParabolicPair& pair, const RootSystem& rs) {
  SingularReport r{relative_homology(lambda, pair, rs), {}};
  const Weight shifted = lambda + delta(rs);
  for (std::size_t k = 0; k < rs.num_positive(); ++k)
    if (rs.coroot_pairing(shifted, k) == 0) r.walls.push_back(k);
  return r;
}

}  // namespace relbgg
