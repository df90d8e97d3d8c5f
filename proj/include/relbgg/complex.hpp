#pragma once

// The relative complex Lambda(q+ / p+) (x) V for q in p, V the irreducible
// p-module with lowest weight -lambda, and numerical checks of its Hodge
// theory. Chains over q+ / p+ use the images of e_alpha, alpha in the middle
// roots; cochains use F_alpha = ((alpha,alpha)/2) e_{-alpha}, paired to
// e_alpha by the Killing form.

#include "relbgg/chains.hpp"
#include "relbgg/homology.hpp"
#include "relbgg/oracle.hpp"

#include <random>
#include <sstream>
#include <string>

namespace relbgg {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string details;
};

struct ComplexReport {
  std::string instance;
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

class RelativeComplex {
 public:
  RelativeComplex(const ChevalleyBasis& cb, const Weight& lambda, const ParabolicPair& pair)
      : cb_(cb), pair_(pair), lambda_(lambda) {
    const RootSystem& rs = cb.roots();
    check_pair(pair, rs);
    require_dominant(lambda, pair.sigma_p, rs, "p");
    part_ = partition(pair, rs);
    V_ = build_irrep(lambda, pair.sigma_p, cb);
    const std::size_t m = part_.mid.size();
    ext_ = ExteriorBasis(m);
    std::size_t total = 0;
    for (std::size_t k = 0; k <= m; ++k) total += chain_dim(ext_, k, V_.dim());
    if (total > kMaxChainDim)
      throw std::length_error("relative complex has " + std::to_string(total) + " dimensions (limit " +
                              std::to_string(kMaxChainDim) + ")");

    dropped_.assign(cb.dim(), false);
    for (auto k : part_.pplus) dropped_[cb.pos(k)] = true;
    for (auto k : part_.mid) {
      zidx_.push_back(cb.pos(k));
      xidx_.push_back(cb.neg(k));
      zscale_.push_back(1);
      xscale_.push_back(1 / cb.killing()(cb.pos(k), cb.neg(k)));
    }
    z_.m = x_.m = m;
    z_.module_dim = x_.module_dim = V_.dim();
    z_.bracket = generator_brackets(cb, zidx_, zscale_, dropped_);
    x_.bracket = generator_brackets(cb, xidx_, xscale_, std::vector<bool>(cb.dim(), false));
    for (std::size_t a = 0; a < m; ++a) {
      z_.rho.push_back(V_(zidx_[a]));
      x_.rho.push_back(xscale_[a] * V_(xidx_[a]));
    }
    for (std::size_t k = 0; k <= m; ++k) {
      dstar_.push_back(codifferential(z_, ext_, k));
      d_.push_back(cohomology_differential(x_, ext_, k));
    }
    for (std::size_t k = 0; k <= m; ++k) {
      Matrix b(dim(k), dim(k));
      if (k < m) b += dstar_[k + 1] * d_[k];
      if (k > 0) b += d_[k - 1] * dstar_[k];
      box_.push_back(std::move(b));
    }
  }

  const ChevalleyBasis& chevalley() const { return cb_; }
  const RootSystem& roots() const { return cb_.roots(); }
  const ParabolicPair& pair() const { return pair_; }
  const Weight& lambda() const { return lambda_; }
  const RootPartition& parts() const { return part_; }
  const ExplicitRep& module() const { return V_; }
  const ExteriorBasis& exterior() const { return ext_; }
  const LieModuleData& chain_data() const { return z_; }
  const std::vector<std::size_t>& generators() const { return zidx_; }

  std::size_t top() const { return part_.mid.size(); }
  std::size_t dim(std::size_t k) const { return chain_dim(ext_, k, V_.dim()); }
  /// C_k -> C_{k-1}
  const Matrix& dstar(std::size_t k) const { return dstar_.at(k); }
  /// C_k -> C_{k+1}
  const Matrix& d(std::size_t k) const { return d_.at(k); }
  const Matrix& box(std::size_t k) const { return box_.at(k); }

  /// Weight of the basis vector `col` of C_k (fundamental coordinates).
  Weight chain_weight(std::size_t k, std::size_t col) const {
    const std::size_t dm = V_.dim();
    Weight w = V_.weights[col % dm];
    for (auto a : ExteriorBasis::members(ext_.subsets(k)[col / dm]))
      w += roots().root_weight(roots().root(part_.mid[a]));
    return w;
  }

  bool in_q(std::size_t a) const {
    if (!cb_.is_negative(a)) return true;
    return sigma_height(roots().root(cb_.root_of(a)), pair_.sigma_q) == 0;
  }
  bool in_q0(std::size_t a) const { return cb_.is_cartan(a) || sigma_height(cb_.weight(a), pair_.sigma_q) == 0; }

  /// Action of an element of q on C_k.
  Matrix action(const SparseVec& x, std::size_t k) const {
    Matrix rho(V_.dim(), V_.dim());
    for (const auto& [a, c] : x) {
      if (!in_q(a)) throw std::invalid_argument("element does not lie in q");
      rho += c * V_(a);
    }
    const auto ad = adjoint_on_generators(cb_, x, zidx_, zscale_, dropped_);
    return derivation(ext_, k, V_.dim(), &ad, &rho);
  }
  Matrix action(std::size_t a, std::size_t k) const { return action(SparseVec{{a, Rational(1)}}, k); }

  std::vector<std::size_t> q_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < cb_.dim(); ++a)
      if (in_q(a)) out.push_back(a);
    return out;
  }
  std::vector<std::size_t> q0_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < cb_.dim(); ++a)
      if (in_q0(a)) out.push_back(a);
    return out;
  }

 private:
  const ChevalleyBasis& cb_;
  ParabolicPair pair_;
  Weight lambda_;
  RootPartition part_;
  ExplicitRep V_;
  ExteriorBasis ext_;
  std::vector<bool> dropped_;
  std::vector<std::size_t> zidx_, xidx_;
  std::vector<Rational> zscale_, xscale_;
  LieModuleData z_, x_;
  std::vector<Matrix> dstar_, d_, box_;
};

namespace detail {

inline Matrix cols_of(const Matrix& m) { return m.cols() == 0 ? m : column_basis(m); }
inline Matrix kernel(const Matrix& m, std::size_t n) { return m.rows() == 0 ? Matrix::identity(n) : nullspace(m); }

template <class... Ts>
std::string cat(const Ts&... xs) {
  std::ostringstream os;
  (os << ... << xs);
  return os.str();
}

}  // namespace detail

inline CheckResult check_representation(const RelativeComplex& rc) {
  auto bad = representation_defect(rc.module(), rc.chevalley());
  if (!bad) return {"representation", true, detail::cat("dim V = ", rc.module().dim())};
  return {"representation", false, detail::cat("bracket of basis elements ", bad->first, ",", bad->second, " fails")};
}

inline CheckResult check_squares(const RelativeComplex& rc) {
  for (std::size_t k = 2; k <= rc.top(); ++k)
    if (!(rc.dstar(k - 1) * rc.dstar(k)).is_zero())
      return {"differentials_square_zero", false, detail::cat("codifferential squared nonzero at degree ", k)};
  for (std::size_t k = 0; k + 2 <= rc.top(); ++k)
    if (!(rc.d(k + 1) * rc.d(k)).is_zero())
      return {"differentials_square_zero", false, detail::cat("differential squared nonzero at degree ", k)};
  return {"differentials_square_zero", true, ""};
}

/// The codifferential commutes with q, the Laplacian with q0.
inline CheckResult check_equivariance(const RelativeComplex& rc) {
  for (auto a : rc.q_basis())
    for (std::size_t k = 1; k <= rc.top(); ++k)
      if (!(rc.action(a, k - 1) * rc.dstar(k) == rc.dstar(k) * rc.action(a, k)))
        return {"equivariance", false, detail::cat("codifferential not q-equivariant, basis element ", a, " degree ", k)};
  for (auto a : rc.q0_basis())
    for (std::size_t k = 0; k <= rc.top(); ++k) {
      const Matrix L = rc.action(a, k);
      if (!(L * rc.box(k) == rc.box(k) * L))
        return {"equivariance", false, detail::cat("Laplacian not q0-equivariant, basis element ", a, " degree ", k)};
    }
  return {"equivariance", true, detail::cat(rc.q_basis().size(), " q generators")};
}

/// C_k = ker box + im d + im d*, with the kernels of d and d* split accordingly.
inline CheckResult check_hodge(const RelativeComplex& rc) {
  using detail::cols_of;
  using detail::kernel;
  std::ostringstream det;
  for (std::size_t k = 0; k <= rc.top(); ++k) {
    const std::size_t n = rc.dim(k);
    const Matrix harm = kernel(rc.box(k), n);
    const Matrix im_d = k > 0 ? cols_of(rc.d(k - 1)) : Matrix(n, 0);
    const Matrix im_ds = k < rc.top() ? cols_of(rc.dstar(k + 1)) : Matrix(n, 0);
    const Matrix ker_ds = kernel(rc.dstar(k), n);
    const Matrix ker_d = kernel(rc.d(k), n);
    const std::size_t h = harm.cols(), a = im_d.cols(), b = im_ds.cols();
    auto fail = [&](const std::string& what) {
      return CheckResult{"hodge", false, detail::cat("degree ", k, ": ", what)};
    };
    if (h + a + b != n || rank(hcat(hcat(harm, im_d), im_ds)) != n) return fail("C_k is not ker box + im d + im d*");
    if (intersection_dim(ker_ds, im_d) != 0) return fail("ker d* meets im d");
    if (intersection_dim(ker_d, im_ds) != 0) return fail("ker d meets im d*");
    if (ker_ds.cols() != b + h || rank(hcat(hcat(im_ds, harm), ker_ds)) != ker_ds.cols())
      return fail("ker d* is not im d* + ker box");
    if (ker_d.cols() != a + h || rank(hcat(hcat(im_d, harm), ker_d)) != ker_d.cols())
      return fail("ker d is not im d + ker box");
    det << (k ? " " : "") << "C_" << k << "=" << h << "+" << a << "+" << b;
  }
  return {"hodge", true, det.str()};
}

/// dim H_k (chains), dim H^k (cochains), dim ker box and the Weyl dimension sum over the relative orbit agree.
inline CheckResult check_homology_dims(const RelativeComplex& rc) {
  const auto entries = relative_homology(rc.lambda(), rc.pair(), rc.roots());
  std::ostringstream det;
  bool ok = true;
  for (std::size_t k = 0; k <= rc.top(); ++k) {
    const std::size_t n = rc.dim(k);
    const std::size_t hom = n - rank(rc.dstar(k)) - (k < rc.top() ? rank(rc.dstar(k + 1)) : 0);
    const std::size_t coh = n - rank(rc.d(k)) - (k > 0 ? rank(rc.d(k - 1)) : 0);
    const std::size_t harm = n - rank(rc.box(k));
    long long predicted = 0;
    for (const auto& e : entries)
      if (e.degree == k) predicted += weyl_dimension(e.nu, rc.pair().sigma_q, rc.roots());
    ok = ok && hom == coh && hom == harm && static_cast<long long>(hom) == predicted;
    det << (k ? " " : "") << "H_" << k << "=" << hom << "/" << coh << "/" << harm << "/" << predicted;
  }
  return {"homology_dimensions", ok, det.str()};
}

/// On each q0-isotypic component of lowest weight -nu, box acts by
/// (|lambda+delta_p|^2 - |nu+delta_p|^2)/2. Also reports what is observed.
inline CheckResult check_laplacian_isotypic(const RelativeComplex& rc) {
  const RootSystem& rs = rc.roots();
  const auto& cb = rc.chevalley();
  const auto lowering_nodes = rc.pair().sigma_q.complement(rs.rank());
  std::size_t components = 0, matched = 0, negated = 0, other = 0;
  std::string first_bad;
  for (std::size_t k = 0; k <= rc.top(); ++k) {
    const std::size_t n = rc.dim(k);
    std::vector<Matrix> lower, raise;
    for (auto i : lowering_nodes) {
      lower.push_back(rc.action(cb.neg(rs.simple_index(i)), k));
      raise.push_back(rc.action(cb.pos(rs.simple_index(i)), k));
    }
    std::map<Weight, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < n; ++c) groups[rc.chain_weight(k, c)].push_back(c);
    for (const auto& [mu, cols] : groups) {
      Matrix U(n, 0);
      if (lower.empty()) {
        U = Matrix(n, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) U(cols[j], j) = 1;
      } else {
        Matrix stack(0, cols.size());
        for (const auto& L : lower) stack = vcat(stack, L.select_cols(cols));
        const Matrix ns = nullspace(stack);
        U = Matrix(n, ns.cols());
        for (std::size_t j = 0; j < ns.cols(); ++j)
          for (std::size_t r = 0; r < cols.size(); ++r) U(cols[r], j) = ns(r, j);
      }
      if (U.cols() == 0) continue;
      // q0-module generated by the lowest vectors.
      Matrix span = U, frontier = U;
      while (frontier.cols() > 0 && !raise.empty()) {
        Matrix img(n, 0);
        for (const auto& R : raise) img = hcat(img, R * frontier);
        const Matrix grown = column_basis(hcat(span, img));
        if (grown.cols() == span.cols()) break;
        frontier = img;
        span = grown;
      }
      components += U.cols();
      const Rational expected = laplacian_scalar(rc.lambda(), -mu, rc.pair(), rs);
      const Matrix image = rc.box(k) * span;
      if (image == expected * span) {
        matched += U.cols();
        continue;
      }
      if (image == -expected * span) negated += U.cols();
      else other += U.cols();
      if (first_bad.empty()) {
        std::optional<Rational> observed;
        const Matrix bu = rc.box(k) * U;
        for (std::size_t r = 0; r < n && !observed; ++r)
          if (U(r, 0) != 0) observed = bu(r, 0) / U(r, 0);
        first_bad = detail::cat("degree ", k, " nu=", (-mu).str(), " expected ", expected.str(), " observed ",
                                observed ? observed->str() : "?");
      }
    }
  }
  std::string det = detail::cat(components, " components, ", matched, " match");
  if (negated) det += detail::cat(", ", negated, " with the opposite sign");
  if (other) det += detail::cat(", ", other, " otherwise");
  if (!first_bad.empty()) det += "; first: " + first_bad;
  return {"laplacian_isotypic", negated == 0 && other == 0, det};
}

namespace detail {

/// Derivations of Lambda^k(p0) (x) V for a basis xi of p0 (columns of T in the
/// standard p0 basis), comparing j box with the Casimir expression.
inline bool casimir_identity(const RelativeComplex& rc, std::size_t k, const std::vector<std::size_t>& p0,
                             std::size_t block_a, const Matrix& T, const Matrix& J,
                             const std::vector<Matrix>& L_std, const std::vector<Matrix>& LV_std) {
  const auto& cb = rc.chevalley();
  const std::size_t m = p0.size();
  std::vector<Matrix> L(m), LV(m);
  for (std::size_t b = 0; b < m; ++b) {
    L[b] = Matrix(L_std[0].rows(), L_std[0].cols());
    LV[b] = L[b];
    for (std::size_t c = 0; c < m; ++c)
      if (T(c, b) != 0) {
        L[b] += T(c, b) * L_std[c];
        LV[b] += T(c, b) * LV_std[c];
      }
  }
  Matrix G(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) G(a, b) = cb.killing()(p0[a], p0[b]);
  G = T.transpose() * G * T;
  const Matrix M = inverse(G);  // eta_b = sum_c M(c,b) xi_c
  std::vector<Matrix> Y(m), YV(m);
  for (std::size_t b = 0; b < m; ++b) {
    Y[b] = L[b] * J;
    YV[b] = LV[b] * J;
  }
  Matrix rhs(J.rows(), J.cols());
  for (std::size_t c = 0; c < m; ++c) {
    Matrix sv(J.rows(), J.cols()), sa = sv, sb = sv;
    for (std::size_t b = 0; b < m; ++b) {
      if (M(c, b) == 0) continue;
      sv += M(c, b) * YV[b];
      (b < block_a ? sa : sb) += M(c, b) * Y[b];
    }
    rhs -= LV[c] * sv;
    rhs -= L[c] * sa;
    rhs += L[c] * sb;
  }
  rhs *= Rational(1, 2);
  return J * rc.box(k) == rhs;
}

}  // namespace detail

/// j box = (1/2)(-sum L^V_eta L^V_xi - sum_{q- cap p0} L_eta L_xi + sum_{q cap p0} L_eta L_xi) j
/// on every degree, for the standard basis of p0 and for a random block-compatible one.
inline CheckResult check_casimir_identity(const RelativeComplex& rc, std::uint32_t seed = 20261015) {
  const auto& cb = rc.chevalley();
  const RootSystem& rs = rc.roots();
  const auto& part = rc.parts();
  std::vector<std::size_t> p0;
  for (auto k : part.mid) p0.push_back(cb.neg(k));
  const std::size_t block_a = p0.size();
  for (std::size_t k = 0; k < rs.num_positive(); ++k)
    if (sigma_height(rs.root(k), rc.pair().sigma_p) == 0) p0.push_back(cb.pos(k));
  for (std::size_t i = 0; i < rs.rank(); ++i) p0.push_back(cb.cartan(i));
  for (auto k : part.q0) p0.push_back(cb.neg(k));
  const std::size_t m = p0.size();
  if (m > 40) return {"casimir_identity", false, "p0 too large"};

  const ExteriorBasis eb(m);
  std::vector<std::size_t> pos_in_p0(rc.top());
  for (std::size_t a = 0; a < rc.top(); ++a)
    pos_in_p0[a] = static_cast<std::size_t>(std::find(p0.begin(), p0.end(), rc.generators()[a]) - p0.begin());
  const std::vector<Rational> ones(m, Rational(1));
  const std::vector<bool> none(cb.dim(), false);
  const std::size_t dm = rc.module().dim();

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  Matrix T = Matrix::identity(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if ((r < block_a) == (c < block_a)) T(r, c) = dist(rng);

  std::size_t total = 0;
  for (std::size_t k = 0; k <= rc.top(); ++k) {
    if (chain_dim(eb, k, dm) > kMaxChainDim) return {"casimir_identity", false, "chain space too large"};
    Matrix J(chain_dim(eb, k, dm), rc.dim(k));
    for (const auto mask : rc.exterior().subsets(k)) {
      std::uint64_t target = 0;
      int inversions = 0;
      const auto s = ExteriorBasis::members(mask);
      for (std::size_t i = 0; i < s.size(); ++i) {
        target |= 1ull << pos_in_p0[s[i]];
        for (std::size_t j = i + 1; j < s.size(); ++j) inversions += pos_in_p0[s[i]] > pos_in_p0[s[j]];
      }
      const std::size_t r0 = eb.index(target) * dm, c0 = rc.exterior().index(mask) * dm;
      for (std::size_t v = 0; v < dm; ++v) J(r0 + v, c0 + v) = parity(inversions);
    }
    std::vector<Matrix> L, LV;
    for (std::size_t c = 0; c < m; ++c) {
      const auto ad = adjoint_on_generators(cb, SparseVec{{p0[c], Rational(1)}}, p0, ones, none);
      L.push_back(derivation(eb, k, dm, &ad, &rc.module()(p0[c])));
      LV.push_back(derivation(eb, k, dm, nullptr, &rc.module()(p0[c])));
    }
    if (!detail::casimir_identity(rc, k, p0, block_a, Matrix::identity(m), J, L, LV))
      return {"casimir_identity", false, detail::cat("fails in degree ", k, " for the standard basis")};
    if (!detail::casimir_identity(rc, k, p0, block_a, T, J, L, LV))
      return {"casimir_identity", false, detail::cat("fails in degree ", k, " for a mixed basis")};
    total += J.rows();
  }
  return {"casimir_identity", true, detail::cat("dim p0 = ", m, ", two bases, ", total, " ambient dimensions")};
}

/// Grading by sigma_q-height: the codifferential preserves it, q0 preserves it, q+ raises it.
inline CheckResult check_grading(const RelativeComplex& rc) {
  const RootSystem& rs = rc.roots();
  const auto& sq = rc.pair().sigma_q;
  const std::size_t dm = rc.module().dim();
  std::vector<Rational> gv(dm);
  for (std::size_t v = 0; v < dm; ++v) {
    const auto rc_coords = rs.to_root_coords(rc.module().weights[v] + rc.lambda());
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (sq.contains(i)) gv[v] += rc_coords[i];
    if (!is_integer(gv[v]) || gv[v] < 0) return {"grading", false, "module grading is not a non-negative integer"};
  }
  auto grade = [&](std::size_t k, std::size_t col) {
    Rational g = gv[col % dm];
    for (auto a : ExteriorBasis::members(rc.exterior().subsets(k)[col / dm]))
      g += sigma_height(rs.root(rc.parts().mid[a]), sq);
    return g;
  };
  for (std::size_t k = 1; k <= rc.top(); ++k) {
    const Matrix& D = rc.dstar(k);
    for (std::size_t r = 0; r < D.rows(); ++r)
      for (std::size_t c = 0; c < D.cols(); ++c)
        if (D(r, c) != 0 && grade(k - 1, r) != grade(k, c))
          return {"grading", false, detail::cat("codifferential changes the grade in degree ", k)};
  }
  for (auto a : rc.q_basis()) {
    const int shift = sigma_height(rc.chevalley().weight(a), sq);
    if (shift < 0) return {"grading", false, "q element of negative degree"};
    for (std::size_t k = 0; k <= rc.top(); ++k) {
      const Matrix A = rc.action(a, k);
      for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
          if (A(r, c) != 0 && grade(k, r) != grade(k, c) + shift)
            return {"grading", false, detail::cat("basis element ", a, " does not shift the grade by ", shift)};
    }
  }
  return {"grading", true, ""};
}

/// Z acts as -(d* (Z ^ .) + Z ^ d*), p+ acts by zero, and q+ maps cycles to boundaries.
inline CheckResult check_homotopy(const RelativeComplex& rc) {
  const auto& cb = rc.chevalley();
  const std::size_t m = rc.top(), dm = rc.module().dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k <= m; ++k) {
      Matrix rhs(rc.dim(k), rc.dim(k));
      if (k < m) rhs -= rc.dstar(k + 1) * wedge_left(rc.exterior(), k, dm, a);
      if (k > 0) rhs -= wedge_left(rc.exterior(), k - 1, dm, a) * rc.dstar(k);
      if (!(rc.action(rc.generators()[a], k) == rhs))
        return {"homotopy", false, detail::cat("identity fails for generator ", a, " in degree ", k)};
    }
  for (auto r : rc.parts().pplus)
    for (std::size_t k = 0; k <= m; ++k)
      if (!rc.action(cb.pos(r), k).is_zero()) return {"homotopy", false, "p+ acts non-trivially"};
  for (std::size_t k = 0; k <= m; ++k) {
    const Matrix cycles = detail::kernel(rc.dstar(k), rc.dim(k));
    const Matrix bounds = k < m ? detail::cols_of(rc.dstar(k + 1)) : Matrix(rc.dim(k), 0);
    for (std::size_t r = 0; r < cb.roots().num_positive(); ++r) {
      if (sigma_height(cb.roots().root(r), rc.pair().sigma_q) == 0) continue;
      const Matrix img = rc.action(cb.pos(r), k) * cycles;
      if (rank(hcat(bounds, img)) != bounds.cols())
        return {"homotopy", false, detail::cat("q+ does not map cycles to boundaries in degree ", k)};
    }
  }
  return {"homotopy", true, ""};
}

inline ComplexReport verify_complex(const RelativeComplex& rc) {
  ComplexReport rep;
  rep.instance = "lambda=" + rc.lambda().str();
  rep.checks.push_back(check_representation(rc));
  rep.checks.push_back(check_squares(rc));
  rep.checks.push_back(check_equivariance(rc));
  rep.checks.push_back(check_hodge(rc));
  rep.checks.push_back(check_homology_dims(rc));
  rep.checks.push_back(check_laplacian_isotypic(rc));
  rep.checks.push_back(check_casimir_identity(rc));
  rep.checks.push_back(check_grading(rc));
  rep.checks.push_back(check_homotopy(rc));
  return rep;
}

}  // namespace relbgg
