#pragma once

// Standard chain/cochain complexes Lambda^k(n) (x) M over a Lie algebra n
// presented by generators, structure constants and module matrices.
// Basis of C_k: (subset S of generators, |S| = k, module basis vector v),
// flat index = subset_index * dim(M) + v.

#include "relbgg/chevalley.hpp"
#include "relbgg/matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace relbgg {

inline constexpr std::size_t kMaxChainDim = 50'000;

class ExteriorBasis {
 public:
  ExteriorBasis() = default;
  explicit ExteriorBasis(std::size_t m) : m_(m), by_k_(m + 1), index_(m + 1) {
    if (m > 40) throw std::length_error("exterior algebra on more than 40 generators");
    std::vector<std::size_t> cur;
    for (std::size_t k = 0; k <= m; ++k) generate(k, 0, 0, by_k_[k]);
    for (std::size_t k = 0; k <= m; ++k)
      for (std::size_t i = 0; i < by_k_[k].size(); ++i) index_[k][by_k_[k][i]] = i;
  }

  std::size_t generators() const { return m_; }
  const std::vector<std::uint64_t>& subsets(std::size_t k) const { return by_k_.at(k); }
  std::size_t count(std::size_t k) const { return k <= m_ ? by_k_[k].size() : 0; }
  std::size_t index(std::uint64_t mask) const { return index_[std::popcount(mask)].at(mask); }

  static std::vector<std::size_t> members(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
      if (mask & 1u) out.push_back(i);
    return out;
  }
  /// Number of members of mask strictly below t.
  static int below(std::uint64_t mask, std::size_t t) { return std::popcount(mask & ((1ull << t) - 1)); }

 private:
  // Lexicographic order on sorted index tuples.
  void generate(std::size_t k, std::size_t start, std::uint64_t acc, std::vector<std::uint64_t>& out) {
    if (k == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i + k <= m_; ++i) generate(k - 1, i + 1, acc | (1ull << i), out);
  }

  std::size_t m_ = 0;
  std::vector<std::vector<std::uint64_t>> by_k_;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
};

inline int parity(int x) { return (x & 1) ? -1 : 1; }

/// Lie algebra with a module, in generator coordinates.
struct LieModuleData {
  std::size_t m = 0;
  std::vector<std::vector<SparseVec>> bracket;  // [a][b] in generator coordinates
  std::vector<Matrix> rho;                      // module matrices
  std::size_t module_dim = 0;
};

/// Generators g_a = scale[a] * x_{idx[a]} of a subalgebra (or quotient) spanned by
/// Chevalley basis vectors. Bracket components on `dropped` basis vectors are
/// discarded (projection along an ideal); anything else outside is an error.
inline std::vector<std::vector<SparseVec>> generator_brackets(const ChevalleyBasis& cb,
                                                              const std::vector<std::size_t>& idx,
                                                              const std::vector<Rational>& scale,
                                                              const std::vector<bool>& dropped) {
  std::unordered_map<std::size_t, std::size_t> where;
  for (std::size_t a = 0; a < idx.size(); ++a) where[idx[a]] = a;
  const std::size_t m = idx.size();
  std::vector<std::vector<SparseVec>> out(m, std::vector<SparseVec>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [c, v] : cb.bracket(idx[a], idx[b])) {
        auto it = where.find(c);
        if (it != where.end()) acc[it->second] += scale[a] * scale[b] * v / scale[it->second];
        else if (!dropped[c]) throw std::logic_error("generator bracket leaves the span");
      }
      out[a][b] = compact(std::move(acc));
    }
  return out;
}

/// Expansion of [X, g_a] for every generator a, with the same projection rule.
inline std::vector<SparseVec> adjoint_on_generators(const ChevalleyBasis& cb, const SparseVec& x,
                                                    const std::vector<std::size_t>& idx,
                                                    const std::vector<Rational>& scale,
                                                    const std::vector<bool>& dropped) {
  std::unordered_map<std::size_t, std::size_t> where;
  for (std::size_t a = 0; a < idx.size(); ++a) where[idx[a]] = a;
  std::vector<SparseVec> out(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [c, v] : cb.bracket(x, SparseVec{{idx[a], scale[a]}})) {
      auto it = where.find(c);
      if (it != where.end()) acc[it->second] += v / scale[it->second];
      else if (!dropped[c]) throw std::logic_error("adjoint action leaves the span");
    }
    out[a] = compact(std::move(acc));
  }
  return out;
}

inline std::size_t chain_dim(const ExteriorBasis& eb, std::size_t k, std::size_t dim_m) {
  return eb.count(k) * dim_m;
}

/// Homology differential C_k -> C_{k-1}:
///   sum_i (-1)^i Z_1..^Z_i..Z_k (x) Z_i v + sum_{i<j} (-1)^{i+j} [Z_i,Z_j] ^ Z_1..^i..^j..Z_k (x) v
/// with 1-based positions.
inline Matrix codifferential(const LieModuleData& L, const ExteriorBasis& eb, std::size_t k) {
  const std::size_t dm = L.module_dim;
  Matrix out(k == 0 ? 0 : chain_dim(eb, k - 1, dm), chain_dim(eb, k, dm));
  if (k == 0 || k > eb.generators()) return out;
  for (const auto mask : eb.subsets(k)) {
    const auto s = ExteriorBasis::members(mask);
    const std::size_t col0 = eb.index(mask) * dm;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t rest = mask & ~(1ull << s[i]);
      const std::size_t row0 = eb.index(rest) * dm;
      const int sign = parity(static_cast<int>(i + 1));
      const Matrix& r = L.rho[s[i]];
      for (std::size_t v = 0; v < dm; ++v)
        for (std::size_t u = 0; u < dm; ++u)
          if (r(u, v) != 0) out(row0 + u, col0 + v) += sign * r(u, v);
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const std::uint64_t rest = mask & ~(1ull << s[i]) & ~(1ull << s[j]);
        for (const auto& [t, c] : L.bracket[s[i]][s[j]]) {
          if ((rest >> t) & 1u) continue;
          const int sign = parity(static_cast<int>(i + j + 2)) * parity(ExteriorBasis::below(rest, t));
          const std::size_t row0 = eb.index(rest | (1ull << t)) * dm;
          for (std::size_t v = 0; v < dm; ++v) out(row0 + v, col0 + v) += sign * c;
        }
      }
  }
  return out;
}

/// Cochain differential C^k -> C^{k+1} of the algebra in `L`, where the basis
/// element (S, v) is the alternating map with value e_v on the sorted tuple S:
///   d phi(X_0..X_k) = sum_i (-1)^i X_i phi(..^i..) + sum_{i<j} (-1)^{i+j} phi([X_i,X_j], ..^i..^j..)
inline Matrix cohomology_differential(const LieModuleData& L, const ExteriorBasis& eb, std::size_t k) {
  const std::size_t dm = L.module_dim;
  Matrix out(chain_dim(eb, k + 1, dm), chain_dim(eb, k, dm));
  if (k + 1 > eb.generators()) return out;
  for (const auto tmask : eb.subsets(k + 1)) {
    const auto t = ExteriorBasis::members(tmask);
    const std::size_t row0 = eb.index(tmask) * dm;
    for (std::size_t i = 0; i <= k; ++i) {
      const std::size_t col0 = eb.index(tmask & ~(1ull << t[i])) * dm;
      const int sign = parity(static_cast<int>(i));
      const Matrix& r = L.rho[t[i]];
      for (std::size_t v = 0; v < dm; ++v)
        for (std::size_t u = 0; u < dm; ++u)
          if (r(u, v) != 0) out(row0 + u, col0 + v) += sign * r(u, v);
    }
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j) {
        const std::uint64_t rest = tmask & ~(1ull << t[i]) & ~(1ull << t[j]);
        for (const auto& [x, c] : L.bracket[t[i]][t[j]]) {
          if ((rest >> x) & 1u) continue;
          const int sign = parity(static_cast<int>(i + j)) * parity(ExteriorBasis::below(rest, x));
          const std::size_t col0 = eb.index(rest | (1ull << x)) * dm;
          for (std::size_t v = 0; v < dm; ++v) out(row0 + v, col0 + v) += sign * c;
        }
      }
  }
  return out;
}

/// Action of an element X on C_k by derivation: ad part given by ad[a] = [X, g_a]
/// in generator coordinates, module part by rho_x. Either part may be left out.
inline Matrix derivation(const ExteriorBasis& eb, std::size_t k, std::size_t dm, const std::vector<SparseVec>* ad,
                         const Matrix* rho_x) {
  const std::size_t n = chain_dim(eb, k, dm);
  Matrix out(n, n);
  if (k > eb.generators()) return out;
  for (const auto mask : eb.subsets(k)) {
    const std::size_t col0 = eb.index(mask) * dm;
    if (ad) {
      const auto s = ExteriorBasis::members(mask);
      for (std::size_t i = 0; i < s.size(); ++i) {
        const std::uint64_t rest = mask & ~(1ull << s[i]);
        for (const auto& [t, c] : (*ad)[s[i]]) {
          if ((rest >> t) & 1u) continue;
          const int sign = parity(static_cast<int>(i) - ExteriorBasis::below(rest, t));
          const std::size_t row0 = eb.index(rest | (1ull << t)) * dm;
          for (std::size_t v = 0; v < dm; ++v) out(row0 + v, col0 + v) += sign * c;
        }
      }
    }
    if (rho_x)
      for (std::size_t v = 0; v < dm; ++v)
        for (std::size_t u = 0; u < dm; ++u)
          if ((*rho_x)(u, v) != 0) out(col0 + u, col0 + v) += (*rho_x)(u, v);
  }
  return out;
}

/// Left wedge with generator a: C_k -> C_{k+1}.
inline Matrix wedge_left(const ExteriorBasis& eb, std::size_t k, std::size_t dm, std::size_t a) {
  Matrix out(chain_dim(eb, k + 1, dm), chain_dim(eb, k, dm));
  if (k + 1 > eb.generators()) return out;
  for (const auto mask : eb.subsets(k)) {
    if ((mask >> a) & 1u) continue;
    const int sign = parity(ExteriorBasis::below(mask, a));
    const std::size_t col0 = eb.index(mask) * dm, row0 = eb.index(mask | (1ull << a)) * dm;
    for (std::size_t v = 0; v < dm; ++v) out(row0 + v, col0 + v) = sign;
  }
  return out;
}

/// Homology dimension at k from the differential list dst[k]: C_k -> C_{k-1}.
inline std::size_t homology_dim(const std::vector<Matrix>& dst, std::size_t k, std::size_t dim_k) {
  const std::size_t ker = dim_k - rank(dst[k]);
  const std::size_t im = k + 1 < dst.size() ? rank(dst[k + 1]) : 0;
  return ker - im;
}

/// Columns: a basis of ker(a) completed by a complement of im(b) inside it.
/// Returns (ker basis arranged as [im basis | complement], number of im columns).
struct QuotientBasis {
  Matrix basis;           // [im | complement]
  std::size_t im_cols = 0;
  std::size_t quotient_dim() const { return basis.cols() - im_cols; }
  Matrix complement() const {
    std::vector<std::size_t> idx;
    for (std::size_t c = im_cols; c < basis.cols(); ++c) idx.push_back(c);
    return basis.select_cols(idx);
  }
  /// Coordinates in the quotient of vectors (columns) lying in ker; throws otherwise.
  Matrix project(const Matrix& x) const {
    if (x.cols() == 0) return Matrix(quotient_dim(), 0);
    if (basis.cols() == 0) {
      if (!x.is_zero()) throw std::logic_error("vector outside the cycle space");
      return Matrix(0, x.cols());
    }
    auto y = solve(basis, x);
    if (!y) throw std::logic_error("vector outside the cycle space");
    std::vector<std::size_t> idx;
    for (std::size_t r = im_cols; r < basis.cols(); ++r) idx.push_back(r);
    return y->select_rows(idx);
  }
};

/// Homology of C_{k+1} -> C_k -> C_{k-1} given by (d_in, d_out).
inline QuotientBasis homology_basis(const Matrix& d_out, const Matrix& d_in, std::size_t dim_k) {
  const Matrix ker = d_out.rows() == 0 ? Matrix::identity(dim_k) : nullspace(d_out);
  const Matrix im = d_in.cols() == 0 ? Matrix(dim_k, 0) : column_basis(d_in);
  QuotientBasis q;
  q.im_cols = im.cols();
  q.basis = column_basis(hcat(im, ker));
  if (q.basis.rows() == 0) q.basis = Matrix(dim_k, 0);
  return q;
}

}  // namespace relbgg
