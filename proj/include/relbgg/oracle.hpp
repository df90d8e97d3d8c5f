#pragma once

// Brute-force cross-checks. Nothing here touches the Weyl group code: the
// Levi data comes straight from root heights and the Killing form.

#include "relbgg/parabolic.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace relbgg {

using WeightMultiplicityMap = std::map<Weight, long long>;

/// Weight multiplicities of the Levi-irreducible with highest weight lambda
/// (Freudenthal recursion in the full weight space).
inline WeightMultiplicityMap freudenthal(const Weight& lambda, const NodeSet& levi_sigma, const RootSystem& rs) {
  if (lambda.size() != rs.rank() || !is_dominant(lambda, levi_sigma))
    throw std::invalid_argument("freudenthal: " + lambda.str() + " is not Levi-dominant integral");
  const auto roots = levi_roots(levi_sigma, rs);
  const auto simple = levi_sigma.complement(rs.rank());
  const Weight dl = levi_delta(levi_sigma, rs);
  const Rational top = norm_sq(lambda + dl, rs);

  std::vector<Weight> rw;
  std::vector<int> rh;  // Levi height
  for (auto k : roots) {
    rw.push_back(rs.root_weight(rs.root(k)));
    rh.push_back(rs.height(rs.root(k)));
  }

  WeightMultiplicityMap m{{lambda, 1}};
  std::vector<Weight> level{lambda};
  for (int d = 1; !level.empty(); ++d) {
    std::vector<Weight> next;
    std::set<Weight> candidates;
    for (const auto& w : level)
      for (auto i : simple) candidates.insert(w - rs.root_weight(rs.simple_root(i)));
    for (const auto& mu : candidates) {
      const Rational den = top - norm_sq(mu + dl, rs);
      if (den == 0) continue;
      Rational num = 0;
      for (std::size_t r = 0; r < rw.size(); ++r) {
        Weight up = mu;
        for (int k = 1; d - k * rh[r] >= 0; ++k) {
          up += rw[r];
          auto it = m.find(up);
          if (it != m.end()) num += Rational(it->second) * rs.inner(up, rw[r]);
        }
      }
      const Rational val = 2 * num / den;
      if (val == 0) continue;
      if (val < 0 || !is_integer(val)) throw std::logic_error("freudenthal produced a non-integral multiplicity");
      m[mu] = to_int64(val);
      next.push_back(mu);
    }
    level = std::move(next);
  }
  return m;
}

/// Weyl dimension formula over the Levi positive roots.
inline long long weyl_dimension(const Weight& lambda, const NodeSet& levi_sigma, const RootSystem& rs) {
  if (lambda.size() != rs.rank() || !is_dominant(lambda, levi_sigma))
    throw std::invalid_argument("weyl_dimension: " + lambda.str() + " is not Levi-dominant integral");
  const Weight dl = levi_delta(levi_sigma, rs);
  Rational p = 1;
  for (auto k : levi_roots(levi_sigma, rs)) p *= rs.coroot_pairing(lambda + dl, k) / rs.coroot_pairing(dl, k);
  return to_int64(p);
}

inline long long total_multiplicity(const WeightMultiplicityMap& m) {
  long long s = 0;
  for (const auto& [w, k] : m) s += k;
  return s;
}

/// Weight multiplicities of Lambda^k(q+ cap p0) tensor V, indexed by nu = -(weight),
/// V the p-irreducible with lowest weight -lambda.
inline WeightMultiplicityMap chain_weights(std::size_t k, const Weight& lambda, const ParabolicPair& pair,
                                           const RootSystem& rs) {
  const auto mid = partition(pair, rs).mid;
  if (mid.size() > 30) throw std::invalid_argument("chain_weights: too many roots to enumerate subsets");
  const auto mv = freudenthal(lambda, pair.sigma_p, rs);
  WeightMultiplicityMap out;
  for (std::uint64_t mask = 0; mask < (1ull << mid.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    Weight s(rs.rank());
    for (std::size_t b = 0; b < mid.size(); ++b)
      if ((mask >> b) & 1u) s += rs.root_weight(rs.root(mid[b]));
    // -nu = -mu + s with mu a weight of L(lambda)
    for (const auto& [mu, mult] : mv) out[mu - s] += mult;
  }
  return out;
}

/// Multiplicity of the weight -nu in Lambda^k(q+ cap p0) tensor V.
inline long long chain_multiplicity(const Weight& nu, std::size_t k, const Weight& lambda, const ParabolicPair& pair,
                                    const RootSystem& rs) {
  const auto mid = partition(pair, rs).mid;
  if (mid.size() > 30) throw std::invalid_argument("chain_multiplicity: too many roots to enumerate subsets");
  const auto mv = freudenthal(lambda, pair.sigma_p, rs);
  long long total = 0;
  for (std::uint64_t mask = 0; mask < (1ull << mid.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    Weight mu = nu;
    for (std::size_t b = 0; b < mid.size(); ++b)
      if ((mask >> b) & 1u) mu += rs.root_weight(rs.root(mid[b]));
    auto it = mv.find(mu);
    if (it != mv.end()) total += it->second;
  }
  return total;
}

}  // namespace relbgg
