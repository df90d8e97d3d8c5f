#pragma once

#include "relbgg/hwmodule.hpp"
#include "relbgg/parabolic.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relbgg {

/// Sparse vector: (index, coefficient) pairs with non-zero coefficients, sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

inline SparseVec compact(std::map<std::size_t, Rational> m) {
  SparseVec out;
  for (auto& [i, c] : m)
    if (c != 0) out.emplace_back(i, std::move(c));
  return out;
}

/// How X_xi is obtained for a non-simple positive root xi: X_xi = [E_i, X_beta] / (p + 1)
/// with beta = xi - alpha_i, i the smallest index making beta a root, and
/// X_{-xi} = [X_{-beta}, F_i] / (p + 1).
struct RootVectorRecipe {
  std::size_t i = 0;
  std::size_t beta = 0;  // index of beta in positive_roots()
  int p = 0;             // largest k with beta - k alpha_i a root
};

inline std::vector<std::optional<RootVectorRecipe>> root_vector_recipes(const RootSystem& rs) {
  std::vector<std::optional<RootVectorRecipe>> out(rs.num_positive());
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const Root& xi = rs.root(k);
    if (rs.height(xi) == 1) continue;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Root beta = xi;
      beta[i] -= 1;
      const int b = rs.index_of(beta);
      if (b < 0) continue;
      int p = 0;
      for (Root down = beta;;) {
        down[i] -= 1;
        if (rs.index_of(down) < 0) break;
        ++p;
      }
      out[k] = RootVectorRecipe{i, static_cast<std::size_t>(b), p};
      break;
    }
    if (!out[k]) throw std::logic_error("no simple root splits " + root_str(xi));
  }
  return out;
}

/// Matrices of all root vectors for the roots selected by `wanted`, given E_i/F_i matrices.
/// pos[k], neg[k] are filled for positive root k when wanted[k].
inline void root_vector_matrices(const RootSystem& rs, const std::vector<Matrix>& E, const std::vector<Matrix>& F,
                                 const std::vector<bool>& wanted, std::vector<Matrix>& pos, std::vector<Matrix>& neg) {
  const auto recipes = root_vector_recipes(rs);
  pos.assign(rs.num_positive(), Matrix());
  neg.assign(rs.num_positive(), Matrix());
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    if (!wanted[k]) continue;
    if (!recipes[k]) {
      std::size_t i = 0;
      while (rs.simple_index(i) != k) ++i;
      pos[k] = E[i];
      neg[k] = F[i];
      continue;
    }
    const auto& r = *recipes[k];
    if (!wanted[r.beta]) throw std::logic_error("root vector recipe leaves the selected root set");
    const Rational s = Rational(1, r.p + 1);
    pos[k] = s * (E[r.i] * pos[r.beta] - pos[r.beta] * E[r.i]);
    neg[k] = s * (neg[r.beta] * F[r.i] - F[r.i] * neg[r.beta]);
  }
}

/// Chevalley basis of g. Basis order: e_alpha for the positive roots in
/// positive_roots() order, then h_1..h_n (simple coroots), then e_{-alpha}.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs) : rs_(rs) { build(); }

  const RootSystem& roots() const { return rs_; }
  std::size_t dim() const { return 2 * rs_.num_positive() + rs_.rank(); }
  std::size_t pos(std::size_t k) const { return k; }
  std::size_t cartan(std::size_t i) const { return rs_.num_positive() + i; }
  std::size_t neg(std::size_t k) const { return rs_.num_positive() + rs_.rank() + k; }

  bool is_cartan(std::size_t a) const { return a >= rs_.num_positive() && a < rs_.num_positive() + rs_.rank(); }
  bool is_positive(std::size_t a) const { return a < rs_.num_positive(); }
  bool is_negative(std::size_t a) const { return a >= rs_.num_positive() + rs_.rank(); }
  /// Positive root index of a root vector.
  std::size_t root_of(std::size_t a) const { return is_positive(a) ? a : a - rs_.num_positive() - rs_.rank(); }

  /// Weight of a basis element in simple-root coordinates (zero for h_i).
  Root weight(std::size_t a) const {
    if (is_cartan(a)) return Root(rs_.rank(), 0);
    Root r = rs_.root(root_of(a));
    if (is_negative(a))
      for (auto& x : r) x = -x;
    return r;
  }

  /// Basis index of the root vector for a (possibly negative) root, or -1.
  int index_of_root(const Root& r) const {
    int k = rs_.index_of(r);
    if (k >= 0) return static_cast<int>(pos(k));
    Root m = r;
    for (auto& x : m) x = -x;
    k = rs_.index_of(m);
    return k >= 0 ? static_cast<int>(neg(k)) : -1;
  }

  const SparseVec& bracket(std::size_t a, std::size_t b) const { return table_[a][b]; }

  SparseVec bracket(const SparseVec& x, const SparseVec& y) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y)
        for (const auto& [c, cc] : table_[a][b]) acc[c] += ca * cb * cc;
    return compact(std::move(acc));
  }

  /// Structure constant N_{alpha,beta} with [e_alpha, e_beta] = N e_{alpha+beta}; 0 if alpha+beta is not a root.
  Rational structure_constant(const Root& alpha, const Root& beta) const {
    const int a = index_of_root(alpha), b = index_of_root(beta);
    if (a < 0 || b < 0) throw std::invalid_argument("structure_constant: not a root");
    Root s = alpha;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += beta[i];
    const int c = index_of_root(s);
    if (c < 0) return 0;
    for (const auto& [t, v] : table_[a][b])
      if (t == static_cast<std::size_t>(c)) return v;
    return 0;
  }

  /// Killing form B(x_a, x_b) = tr(ad x_a ad x_b) on basis elements.
  const Matrix& killing() const { return killing_; }

  /// Matrices of the faithful representation used to derive the table.
  const std::vector<Matrix>& faithful() const { return rep_; }

 private:
  void build() {
    const std::size_t n = rs_.rank(), np = rs_.num_positive(), d = dim();
    // Faithful representation: sum over simple components of the adjoint module.
    std::vector<HighestWeightModule> parts;
    for (const auto& comp : rs_.components()) {
      // highest root of the component: largest height among roots supported on it
      std::size_t best = np;
      for (std::size_t k = 0; k < np; ++k)
        if (rs_.root(k)[comp[0]] > 0 && (best == np || rs_.height(rs_.root(k)) > rs_.height(rs_.root(best)))) best = k;
      parts.push_back(build_highest_weight_module(rs_.root_weight(rs_.root(best)), NodeSet(), rs_));
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim();
    std::vector<Matrix> E(n, Matrix(total, total)), F(n, Matrix(total, total)), H(n, Matrix(total, total));
    std::size_t off = 0;
    for (const auto& p : parts) {
      for (std::size_t i = 0; i < n; ++i) {
        const Matrix h = p.H(i);
        for (std::size_t r = 0; r < p.dim(); ++r)
          for (std::size_t c = 0; c < p.dim(); ++c) {
            E[i](off + r, off + c) = p.E[i](r, c);
            F[i](off + r, off + c) = p.F[i](r, c);
            H[i](off + r, off + c) = h(r, c);
          }
      }
      off += p.dim();
    }
    std::vector<Matrix> P, N;
    root_vector_matrices(rs_, E, F, std::vector<bool>(np, true), P, N);
    rep_.resize(d);
    for (std::size_t k = 0; k < np; ++k) {
      rep_[pos(k)] = P[k];
      rep_[neg(k)] = N[k];
    }
    for (std::size_t i = 0; i < n; ++i) rep_[cartan(i)] = H[i];

    // Cartan part is solved against the h_i matrices.
    Matrix hcols(total * total, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < total; ++r)
        for (std::size_t c = 0; c < total; ++c) hcols(r * total + c, i) = H[i](r, c);

    table_.assign(d, std::vector<SparseVec>(d));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (b < a) {
          table_[a][b] = table_[b][a];
          for (auto& [t, v] : table_[a][b]) v = -v;
          continue;
        }
        const Matrix comm = rep_[a] * rep_[b] - rep_[b] * rep_[a];
        if (comm.is_zero()) continue;
        Root w = weight(a);
        const Root wb = weight(b);
        for (std::size_t i = 0; i < n; ++i) w[i] += wb[i];
        if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) {
          Matrix vec(total * total, 1);
          for (std::size_t r = 0; r < total; ++r)
            for (std::size_t c = 0; c < total; ++c) vec(r * total + c, 0) = comm(r, c);
          const auto sol = solve(hcols, vec);
          if (!sol || !(hcols * *sol == vec)) throw std::logic_error("bracket not in the Cartan subalgebra");
          for (std::size_t i = 0; i < n; ++i)
            if ((*sol)(i, 0) != 0) table_[a][b].emplace_back(cartan(i), (*sol)(i, 0));
          continue;
        }
        const int c = index_of_root(w);
        if (c < 0) throw std::logic_error("non-zero bracket outside the root spaces");
        const Matrix& xc = rep_[c];
        Rational coef = 0;
        for (std::size_t r = 0; r < total && coef == 0; ++r)
          for (std::size_t s = 0; s < total; ++s)
            if (xc(r, s) != 0) {
              coef = comm(r, s) / xc(r, s);
              break;
            }
        if (!(comm == coef * xc)) throw std::logic_error("bracket is not a multiple of the root vector");
        table_[a][b].emplace_back(static_cast<std::size_t>(c), coef);
      }

    killing_ = Matrix(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a; b < d; ++b) {
        Root w = weight(a);
        const Root wb = weight(b);
        bool opposite = true;
        for (std::size_t i = 0; i < n; ++i) opposite = opposite && (w[i] + wb[i] == 0);
        if (!opposite) continue;
        // tr(ad a ad b) = sum_c coefficient of x_c in [a, [b, x_c]]
        Rational tr = 0;
        for (std::size_t c = 0; c < d; ++c)
          for (const auto& [t, v] : table_[b][c])
            for (const auto& [u, w2] : table_[a][t])
              if (u == c) tr += v * w2;
        killing_(a, b) = killing_(b, a) = tr;
      }
  }

  RootSystem rs_;
  std::vector<Matrix> rep_;
  std::vector<std::vector<SparseVec>> table_;
  Matrix killing_;
};

inline ChevalleyBasis build_chevalley(const RootSystem& rs) { return ChevalleyBasis(rs); }

/// Finite-dimensional module with matrices for the elements of g that act.
/// action[a] is std::nullopt where the basis element does not act (p_- outside the Levi).
struct ExplicitRep {
  std::vector<Weight> weights;
  std::vector<std::optional<Matrix>> action;

  std::size_t dim() const { return weights.size(); }
  bool defined(std::size_t a) const { return action[a].has_value(); }
  const Matrix& operator()(std::size_t a) const {
    if (!action[a]) throw std::logic_error("basis element " + std::to_string(a) + " does not act on this module");
    return *action[a];
  }
};

/// The irreducible p-module with lowest weight -lambda (lambda dominant integral
/// for the Levi of sigma): the dual of the Levi-irreducible of highest weight
/// lambda, with p_+ acting by zero.
inline ExplicitRep build_irrep(const Weight& lambda, const NodeSet& levi_sigma, const ChevalleyBasis& cb) {
  const RootSystem& rs = cb.roots();
  const auto L = build_highest_weight_module(lambda, levi_sigma, rs);
  const std::size_t np = rs.num_positive(), n = rs.rank(), dim = L.dim();
  std::vector<bool> in_levi(np);
  for (std::size_t k = 0; k < np; ++k) in_levi[k] = sigma_height(rs.root(k), levi_sigma) == 0;
  std::vector<Matrix> P, N;
  root_vector_matrices(rs, L.E, L.F, in_levi, P, N);

  ExplicitRep v;
  for (const auto& w : L.weights) v.weights.push_back(-w);
  v.action.assign(cb.dim(), std::nullopt);
  for (std::size_t k = 0; k < np; ++k) {
    if (in_levi[k]) {
      v.action[cb.pos(k)] = -P[k].transpose();
      v.action[cb.neg(k)] = -N[k].transpose();
    } else {
      v.action[cb.pos(k)] = Matrix(dim, dim);
    }
  }
  for (std::size_t i = 0; i < n; ++i) v.action[cb.cartan(i)] = -L.H(i);
  return v;
}

/// Checks rho([x,y]) = [rho x, rho y] on all pairs of acting basis elements whose
/// bracket stays among acting elements. Returns the first failing pair, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> representation_defect(const ExplicitRep& v,
                                                                                const ChevalleyBasis& cb) {
  for (std::size_t a = 0; a < cb.dim(); ++a)
    for (std::size_t b = a + 1; b < cb.dim(); ++b) {
      if (!v.defined(a) || !v.defined(b)) continue;
      const auto& br = cb.bracket(a, b);
      if (std::any_of(br.begin(), br.end(), [&](const auto& t) { return !v.defined(t.first); })) continue;
      Matrix lhs(v.dim(), v.dim());
      for (const auto& [t, c] : br) lhs += c * v(t);
      if (!(lhs == v(a) * v(b) - v(b) * v(a))) return std::make_pair(a, b);
    }
  return std::nullopt;
}

}  // namespace relbgg
