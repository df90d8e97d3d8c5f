#pragma once

// Irreducible highest-weight modules of a Levi factor, built over Q by
// closing the highest weight vector under the lowering operators f_i.
// The only inputs are the Cartan matrix and the Serre-type relation
//   e_j f_i b = f_i e_j b + delta_ij <wt(b), alpha_i^vee> b,
// so a vector of positive depth is zero exactly when every e_j kills it.

#include "relbgg/matrix.hpp"
#include "relbgg/parabolic.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace relbgg {

// Modules are stored as dense rational matrices.
inline constexpr std::size_t kMaxModuleDim = 1000;

/// L(lambda) for the Levi with crossed nodes `levi_sigma`. E[i], F[i] are
/// dim x dim matrices for every node i (zero for crossed nodes); the Cartan
/// element h_i acts on basis vector b by weights[b][i].
struct HighestWeightModule {
  NodeSet levi_sigma;
  Weight highest;
  std::vector<Weight> weights;
  std::vector<std::vector<int>> depth;  // lambda - weight in simple-root coordinates
  std::vector<Matrix> E, F;

  std::size_t dim() const { return weights.size(); }

  Matrix H(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) m(b, b) = weights[b][i];
    return m;
  }
};

inline HighestWeightModule build_highest_weight_module(const Weight& lambda, const NodeSet& levi_sigma,
                                                       const RootSystem& rs, std::size_t max_dim = kMaxModuleDim) {
  const std::size_t n = rs.rank();
  if (lambda.size() != n || !is_dominant(lambda, levi_sigma))
    throw std::invalid_argument("highest weight " + lambda.str() + " is not Levi-dominant integral");
  const auto nodes = levi_sigma.complement(n);

  using Sparse = std::map<std::size_t, Rational>;
  HighestWeightModule mod;
  mod.levi_sigma = levi_sigma;
  mod.highest = lambda;
  mod.weights.push_back(lambda);
  mod.depth.push_back(std::vector<int>(n, 0));
  // e_img[j][b], f_img[i][b]: images of basis vector b, filled layer by layer.
  std::vector<std::vector<Sparse>> e_img(n, std::vector<Sparse>(1)), f_img(n);
  std::vector<std::size_t> layer{0};

  auto apply = [](const std::vector<Sparse>& op, const Sparse& x) {
    Sparse out;
    for (const auto& [b, c] : x)
      for (const auto& [t, d] : op[b]) out[t] += c * d;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  };

  while (!layer.empty()) {
    // Candidates f_i b grouped by weight.
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
    for (auto b : layer)
      for (auto i : nodes) {
        auto d = mod.depth[b];
        ++d[i];
        groups[d].emplace_back(b, i);
      }
    std::vector<std::size_t> next;
    for (auto& f : f_img) f.resize(mod.dim());
    for (const auto& [d, cands] : groups) {
      // Signature of f_i b: (e_j f_i b)_j as vectors on the previous layer.
      std::vector<std::pair<std::size_t, std::size_t>> rows;  // (j, basis index)
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
      std::vector<std::map<std::size_t, Rational>> sig(cands.size());
      for (std::size_t c = 0; c < cands.size(); ++c) {
        const auto [b, i] = cands[c];
        for (auto j : nodes) {
          Sparse s = apply(f_img[i], e_img[j][b]);
          if (i == j && mod.weights[b][i] != 0) s[b] += mod.weights[b][i];
          for (const auto& [t, v] : s) {
            if (v == 0) continue;
            auto key = std::make_pair(j, t);
            auto it = row_of.find(key);
            if (it == row_of.end()) {
              it = row_of.emplace(key, rows.size()).first;
              rows.push_back(key);
            }
            sig[c][it->second] += v;
          }
        }
      }
      if (rows.empty()) continue;  // every candidate vanishes
      Matrix S(rows.size(), cands.size());
      for (std::size_t c = 0; c < cands.size(); ++c)
        for (const auto& [r, v] : sig[c]) S(r, c) = v;
      const auto ech = rref(S);
      const auto& piv = ech.pivots;
      const Matrix basis_sig = S.select_cols(piv);
      const auto coords = solve(basis_sig, S);
      if (!coords) throw std::logic_error("highest weight module: inconsistent signatures");
      const std::size_t first = mod.dim();
      for (std::size_t p = 0; p < piv.size(); ++p) {
        const auto [b, i] = cands[piv[p]];
        mod.weights.push_back(mod.weights[b] - rs.root_weight(rs.simple_root(i)));
        mod.depth.push_back(d);
        for (std::size_t j = 0; j < n; ++j) {
          Sparse e;
          if (!levi_sigma.contains(j))
            for (std::size_t r = 0; r < rows.size(); ++r)
              if (rows[r].first == j && basis_sig(r, p) != 0) e[rows[r].second] = basis_sig(r, p);
          e_img[j].push_back(std::move(e));
        }
        next.push_back(first + p);
      }
      for (std::size_t c = 0; c < cands.size(); ++c) {
        const auto [b, i] = cands[c];
        for (std::size_t p = 0; p < piv.size(); ++p)
          if ((*coords)(p, c) != 0) f_img[i][b][first + p] = (*coords)(p, c);
      }
      if (mod.dim() > max_dim) throw std::length_error("highest weight module exceeds " + std::to_string(max_dim) + " dimensions");
    }
    layer = std::move(next);
  }
  for (auto& f : f_img) f.resize(mod.dim());

  const std::size_t dim = mod.dim();
  mod.E.assign(n, Matrix(dim, dim));
  mod.F.assign(n, Matrix(dim, dim));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < dim; ++b) {
      for (const auto& [t, v] : e_img[i][b]) mod.E[i](t, b) = v;
      for (const auto& [t, v] : f_img[i][b]) mod.F[i](t, b) = v;
    }
  return mod;
}

}  // namespace relbgg
