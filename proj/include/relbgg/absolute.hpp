#pragma once

// The absolute complex Lambda(q+) (x) V for V a g-irreducible, bigraded by
// splitting q+ = (q+ cap p0) + p+, its filtration by p+-degree, and the
// projection onto the relative complex with coefficients in H_l(p+, V).

#include "relbgg/complex.hpp"

namespace relbgg {

class AbsoluteComplex {
 public:
  AbsoluteComplex(const ChevalleyBasis& cb, const Weight& lambda, const ParabolicPair& pair)
      : cb_(cb), pair_(pair), lambda_(lambda) {
    const RootSystem& rs = cb.roots();
    check_pair(pair, rs);
    require_dominant(lambda, NodeSet(), rs, "g");
    part_ = partition(pair, rs);
    V_ = build_irrep(lambda, NodeSet(), cb);
    nm_ = part_.mid.size();
    np_ = part_.pplus.size();
    ext_ = ExteriorBasis(nm_ + np_);
    ext_mid_ = ExteriorBasis(nm_);
    ext_p_ = ExteriorBasis(np_);
    std::size_t total = 0;
    for (std::size_t k = 0; k <= nm_ + np_; ++k) total += chain_dim(ext_, k, V_.dim());
    if (total > kMaxChainDim)
      throw std::length_error("absolute complex has " + std::to_string(total) + " dimensions (limit " +
                              std::to_string(kMaxChainDim) + ")");

    for (auto k : part_.mid) gens_.push_back(cb.pos(k));
    for (auto k : part_.pplus) {
      gens_.push_back(cb.pos(k));
      pgens_.push_back(cb.pos(k));
    }
    const std::vector<bool> none(cb.dim(), false);
    full_ = data_for(gens_, none);
    pdata_ = data_for(pgens_, none);
    for (std::size_t k = 0; k <= nm_ + np_; ++k) dstar_.push_back(codifferential(full_, ext_, k));
    for (std::size_t s = 0; s <= np_; ++s) dstar_p_.push_back(codifferential(pdata_, ext_p_, s));
  }

  const ChevalleyBasis& chevalley() const { return cb_; }
  const ParabolicPair& pair() const { return pair_; }
  const Weight& lambda() const { return lambda_; }
  const RootPartition& parts() const { return part_; }
  const ExplicitRep& module() const { return V_; }
  std::size_t top() const { return nm_ + np_; }
  std::size_t mid_count() const { return nm_; }
  std::size_t pplus_count() const { return np_; }
  std::size_t dim(std::size_t k) const { return chain_dim(ext_, k, V_.dim()); }
  const ExteriorBasis& exterior() const { return ext_; }
  const ExteriorBasis& exterior_mid() const { return ext_mid_; }
  const ExteriorBasis& exterior_pplus() const { return ext_p_; }
  const Matrix& dstar(std::size_t k) const { return dstar_.at(k); }
  /// Codifferential of Lambda(p+) (x) V.
  const Matrix& dstar_p(std::size_t s) const { return dstar_p_.at(s); }
  const LieModuleData& pplus_data() const { return pdata_; }
  const std::vector<std::size_t>& pplus_generators() const { return pgens_; }

  /// (r, s) = (number of q+ cap p0 factors, number of p+ factors) of basis vector col of C_k.
  std::pair<std::size_t, std::size_t> bidegree(std::size_t k, std::size_t col) const {
    const std::uint64_t mask = ext_.subsets(k)[col / V_.dim()];
    const auto s = static_cast<std::size_t>(std::popcount(mask >> nm_));
    return {k - s, s};
  }
  std::uint64_t mid_part(std::uint64_t mask) const { return mask & ((1ull << nm_) - 1); }
  std::uint64_t pplus_part(std::uint64_t mask) const { return mask >> nm_; }

  /// Action of an element of q on C_k.
  Matrix action(const SparseVec& x, std::size_t k) const {
    Matrix rho(V_.dim(), V_.dim());
    for (const auto& [a, c] : x) rho += c * V_(a);
    const auto ad = adjoint_on_generators(cb_, x, gens_, std::vector<Rational>(gens_.size(), 1),
                                          std::vector<bool>(cb_.dim(), false));
    return derivation(ext_, k, V_.dim(), &ad, &rho);
  }

  /// Action of an element of p on Lambda^s(p+) (x) V.
  Matrix pplus_action(const SparseVec& x, std::size_t s) const {
    Matrix rho(V_.dim(), V_.dim());
    for (const auto& [a, c] : x) rho += c * V_(a);
    const auto ad = adjoint_on_generators(cb_, x, pgens_, std::vector<Rational>(pgens_.size(), 1),
                                          std::vector<bool>(cb_.dim(), false));
    return derivation(ext_p_, s, V_.dim(), &ad, &rho);
  }

 private:
  LieModuleData data_for(const std::vector<std::size_t>& idx, const std::vector<bool>& dropped) const {
    LieModuleData L;
    L.m = idx.size();
    L.module_dim = V_.dim();
    L.bracket = generator_brackets(cb_, idx, std::vector<Rational>(idx.size(), 1), dropped);
    for (auto a : idx) L.rho.push_back(V_(a));
    return L;
  }

  const ChevalleyBasis& cb_;
  ParabolicPair pair_;
  Weight lambda_;
  RootPartition part_;
  ExplicitRep V_;
  std::size_t nm_ = 0, np_ = 0;
  ExteriorBasis ext_, ext_mid_, ext_p_;
  std::vector<std::size_t> gens_, pgens_;
  LieModuleData full_, pdata_;
  std::vector<Matrix> dstar_, dstar_p_;
};

/// H_l(p+, V) as a p-module, with the relative complex over q+ / p+ taking values in it.
struct PplusHomology {
  std::size_t degree = 0;
  QuotientBasis basis;
  std::vector<Matrix> mid_action;  // action of e_alpha, alpha in q+ cap p0, on H_l
  LieModuleData relative;          // q+ / p+ with coefficients in H_l
  std::vector<Matrix> dstar_rel;   // codifferential of the relative complex, by degree
  std::size_t dim() const { return basis.quotient_dim(); }
};

inline PplusHomology pplus_homology(const AbsoluteComplex& ac, std::size_t l) {
  const auto& cb = ac.chevalley();
  PplusHomology h;
  h.degree = l;
  const std::size_t dl = chain_dim(ac.exterior_pplus(), l, ac.module().dim());
  const Matrix empty_in(dl, 0);
  h.basis = homology_basis(ac.dstar_p(l), l < ac.pplus_count() ? ac.dstar_p(l + 1) : empty_in, dl);
  const Matrix reps = h.basis.complement();

  std::vector<std::size_t> zidx;
  for (auto k : ac.parts().mid) zidx.push_back(cb.pos(k));
  std::vector<bool> dropped(cb.dim(), false);
  for (auto k : ac.parts().pplus) dropped[cb.pos(k)] = true;
  h.relative.m = zidx.size();
  h.relative.module_dim = h.dim();
  h.relative.bracket = generator_brackets(cb, zidx, std::vector<Rational>(zidx.size(), 1), dropped);
  for (auto a : zidx) {
    h.mid_action.push_back(h.basis.project(ac.pplus_action(SparseVec{{a, Rational(1)}}, l) * reps));
    h.relative.rho.push_back(h.mid_action.back());
  }
  for (std::size_t k = 0; k <= ac.mid_count(); ++k) h.dstar_rel.push_back(codifferential(h.relative, ac.exterior_mid(), k));
  return h;
}

/// pi: the (k-l, l) component of vectors in C_k, followed by id (x) (quotient onto H_l).
inline Matrix pi_projection(const AbsoluteComplex& ac, const PplusHomology& h, std::size_t k, const Matrix& x) {
  const std::size_t l = h.degree, dm = ac.module().dim();
  const auto& em = ac.exterior_mid();
  const auto& ep = ac.exterior_pplus();
  if (l > k || k - l > ac.mid_count()) return Matrix(0, x.cols());
  Matrix out(em.count(k - l) * h.dim(), x.cols());
  for (const auto rmask : em.subsets(k - l)) {
    Matrix slice(ep.count(l) * dm, x.cols());
    for (const auto tmask : ep.subsets(l)) {
      const std::size_t src0 = ac.exterior().index(rmask | (tmask << ac.mid_count())) * dm, dst0 = ep.index(tmask) * dm;
      for (std::size_t v = 0; v < dm; ++v)
        for (std::size_t c = 0; c < x.cols(); ++c) slice(dst0 + v, c) = x(src0 + v, c);
    }
    const Matrix coords = h.basis.project(slice);
    const std::size_t row0 = em.index(rmask) * h.dim();
    for (std::size_t r = 0; r < coords.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) out(row0 + r, c) = coords(r, c);
  }
  return out;
}

namespace detail {

inline Matrix unit_columns(std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix m(n, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) m(idx[j], j) = 1;
  return m;
}

/// F^l_k: columns with p+-degree at least l.
inline std::vector<std::size_t> filtration_cols(const AbsoluteComplex& ac, std::size_t k, std::size_t l) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ac.dim(k); ++c)
    if (ac.bidegree(k, c).second >= l) out.push_back(c);
  return out;
}

/// Split of d*_k into its (-1,0) and (0,-1) parts; false if anything else occurs.
inline bool split_bidegree(const AbsoluteComplex& ac, std::size_t k, Matrix& d1, Matrix& d2) {
  const Matrix& d = ac.dstar(k);
  d1 = Matrix(d.rows(), d.cols());
  d2 = d1;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      const auto [r0, s0] = ac.bidegree(k, c);
      const auto [r1, s1] = ac.bidegree(k - 1, r);
      if (r1 + 1 == r0 && s1 == s0) d1(r, c) = d(r, c);
      else if (r1 == r0 && s1 + 1 == s0) d2(r, c) = d(r, c);
      else return false;
    }
  return true;
}

/// F~^l_k = F^{l+1}_k + ker(id (x) d*_p on the (k-l, l) block).
inline Matrix tilde_filtration(const AbsoluteComplex& ac, std::size_t k, std::size_t l, const Matrix& d2) {
  const std::size_t n = ac.dim(k);
  Matrix out = unit_columns(n, filtration_cols(ac, k, l + 1));
  std::vector<std::size_t> block;
  for (std::size_t c = 0; c < n; ++c)
    if (ac.bidegree(k, c) == std::make_pair(k - l, l)) block.push_back(c);
  if (block.empty()) return out;
  const Matrix ker = k == 0 ? Matrix::identity(block.size()) : nullspace(d2.select_cols(block));
  Matrix emb(n, ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j)
    for (std::size_t r = 0; r < block.size(); ++r) emb(block[r], j) = ker(r, j);
  return hcat(out, emb);
}

inline bool in_span(const Matrix& basis, const Matrix& x) {
  if (x.cols() == 0 || x.is_zero()) return true;
  if (basis.cols() == 0) return false;
  return rank(hcat(basis, x)) == rank(basis);
}

}  // namespace detail

/// d*_1, d*_2 relations, the filtration and its q-invariance.
inline std::vector<CheckResult> check_double_complex(const AbsoluteComplex& ac) {
  std::vector<CheckResult> out;
  const std::size_t top = ac.top(), dm = ac.module().dim();
  std::vector<Matrix> d1(top + 1), d2(top + 1);
  CheckResult rel{"bigraded_relations", true, ""};
  for (std::size_t k = 1; k <= top; ++k)
    if (!detail::split_bidegree(ac, k, d1[k], d2[k])) {
      rel = {"bigraded_relations", false, detail::cat("codifferential has a component of other bidegree in degree ", k)};
      break;
    }
  for (std::size_t k = 2; k <= top && rel.ok; ++k) {
    if (!(d1[k - 1] * d1[k]).is_zero()) rel = {"bigraded_relations", false, detail::cat("d1^2 != 0 in degree ", k)};
    else if (!(d2[k - 1] * d2[k]).is_zero()) rel = {"bigraded_relations", false, detail::cat("d2^2 != 0 in degree ", k)};
    else if (!(d1[k - 1] * d2[k] + d2[k - 1] * d1[k]).is_zero())
      rel = {"bigraded_relations", false, detail::cat("d1 d2 + d2 d1 != 0 in degree ", k)};
  }
  // d2 = (-1)^r id (x) d*_p
  for (std::size_t k = 1; k <= top && rel.ok; ++k) {
    Matrix expect(ac.dim(k - 1), ac.dim(k));
    for (const auto mask : ac.exterior().subsets(k)) {
      const std::uint64_t rm = ac.mid_part(mask), tm = ac.pplus_part(mask);
      const std::size_t r = static_cast<std::size_t>(std::popcount(rm)), s = k - r;
      if (s == 0) continue;
      const Matrix& dp = ac.dstar_p(s);
      const std::size_t pc0 = ac.exterior_pplus().index(tm) * dm, c0 = ac.exterior().index(mask) * dm;
      for (const auto t2 : ac.exterior_pplus().subsets(s - 1)) {
        const std::size_t pr0 = ac.exterior_pplus().index(t2) * dm;
        const std::size_t r0 = ac.exterior().index(rm | (t2 << ac.mid_count())) * dm;
        for (std::size_t u = 0; u < dm; ++u)
          for (std::size_t v = 0; v < dm; ++v)
            if (dp(pr0 + u, pc0 + v) != 0) expect(r0 + u, c0 + v) = parity(static_cast<int>(r)) * dp(pr0 + u, pc0 + v);
      }
    }
    if (!(expect == d2[k])) rel = {"bigraded_relations", false, detail::cat("d2 != (-1)^r id (x) d*_p in degree ", k)};
  }
  if (rel.ok) rel.details = "d = d1 + d2, d1^2 = d2^2 = d1 d2 + d2 d1 = 0, d2 = (-1)^r id (x) d*_p";
  out.push_back(rel);

  CheckResult filt{"filtration", true, ""};
  std::size_t max_s = 0;
  for (std::size_t k = 0; k <= top; ++k)
    for (std::size_t c = 0; c < ac.dim(k); ++c) max_s = std::max(max_s, ac.bidegree(k, c).second);
  if (max_s != ac.pplus_count())
    filt = {"filtration", false, detail::cat("top filtration degree ", max_s, " != ", ac.pplus_count())};
  for (std::size_t k = 1; k <= top && filt.ok; ++k) {
    const Matrix& d = ac.dstar(k);
    for (std::size_t r = 0; r < d.rows() && filt.ok; ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (d(r, c) != 0 && ac.bidegree(k - 1, r).second + 1 < ac.bidegree(k, c).second) {
          filt = {"filtration", false, detail::cat("d* lowers the filtration by more than one in degree ", k)};
          break;
        }
  }
  const auto& cb = ac.chevalley();
  for (std::size_t a = 0; a < cb.dim() && filt.ok; ++a) {
    if (cb.is_negative(a) && sigma_height(cb.weight(a), ac.pair().sigma_q) != 0) continue;
    for (std::size_t k = 0; k <= top && filt.ok; ++k) {
      const Matrix A = ac.action(SparseVec{{a, Rational(1)}}, k);
      for (std::size_t r = 0; r < A.rows() && filt.ok; ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
          if (A(r, c) != 0 && ac.bidegree(k, r).second < ac.bidegree(k, c).second) {
            filt = {"filtration", false, detail::cat("q element ", a, " lowers the filtration")};
            break;
          }
    }
  }
  if (filt.ok) filt.details = detail::cat("F^", ac.pplus_count() + 1, " = 0, d*(F^l) in F^(l-1), q-invariant");
  out.push_back(filt);

  CheckResult tilde{"tilde_filtration", true, ""};
  for (std::size_t k = 1; k <= top && tilde.ok; ++k)
    for (std::size_t l = 0; l <= std::min(k, ac.pplus_count()) && tilde.ok; ++l) {
      const Matrix src = detail::tilde_filtration(ac, k, l, d2[k]);
      const Matrix dst = k - 1 == 0 ? detail::tilde_filtration(ac, 0, l, Matrix(0, ac.dim(0)))
                                    : detail::tilde_filtration(ac, k - 1, l, d2[k - 1]);
      if (!detail::in_span(dst, ac.dstar(k) * src))
        tilde = {"tilde_filtration", false, detail::cat("d*(F~^", l, "_", k, ") not in F~^", l, "_", k - 1)};
    }
  out.push_back(tilde);
  return out;
}

/// F^l_k as unit columns of C_k (monomials with at least l factors from p+).
inline Matrix filtration(const AbsoluteComplex& ac, std::size_t l, std::size_t k) {
  return detail::unit_columns(ac.dim(k), detail::filtration_cols(ac, k, l));
}

struct ProjectionCell {
  std::size_t k = 0, l = 0;
  int sign = 0;  // 0 when both sides vanish
  std::size_t rank = 0, relative_dim = 0;
  long long predicted = 0;
};

/// pi d*_q = eps d*_rho pi on F~, and the induced maps Pi onto H_{k-l}(q+/p+, H_l(p+, V)).
inline CheckResult check_projection(const AbsoluteComplex& ac, std::vector<ProjectionCell>* cells = nullptr) {
  const std::size_t top = ac.top();
  const RootSystem& rs = ac.chevalley().roots();
  const auto table = factorized_homology(ac.lambda(), ac.pair(), rs);
  std::vector<Matrix> d1(top + 1), d2(top + 1);
  for (std::size_t k = 1; k <= top; ++k)
    if (!detail::split_bidegree(ac, k, d1[k], d2[k])) return {"projection", false, "codifferential not bigraded"};
  auto d2_of = [&](std::size_t k) { return k == 0 ? Matrix(0, ac.dim(0)) : d2[k]; };

  std::vector<PplusHomology> H;
  for (std::size_t l = 0; l <= ac.pplus_count(); ++l) {
    H.push_back(pplus_homology(ac, l));
    for (auto k : ac.parts().pplus) {
      const Matrix reps = H[l].basis.complement();
      const Matrix act = H[l].basis.project(ac.pplus_action(SparseVec{{ac.chevalley().pos(k), Rational(1)}}, l) * reps);
      if (!act.is_zero()) return {"projection", false, detail::cat("p+ acts non-trivially on H_", l, "(p+, V)")};
    }
  }
  std::ostringstream det;
  bool ok = true;
  std::string why;
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t n = ac.dim(k);
    const Matrix ker = k == 0 ? Matrix::identity(n) : nullspace(ac.dstar(k));
    const Matrix im = k < top ? detail::cols_of(ac.dstar(k + 1)) : Matrix(n, 0);
    const std::size_t hk = ker.cols() - im.cols();
    std::size_t sum = 0;
    for (std::size_t l = 0; l <= std::min(k, ac.pplus_count()); ++l) {
      if (k - l > ac.mid_count()) continue;
      const PplusHomology& h = H[l];
      const std::size_t j = k - l;
      ProjectionCell cell{k, l};
      try {
        // pi d*_q versus d*_rho pi on F~^l_k
        const Matrix src = detail::tilde_filtration(ac, k, l, d2_of(k));
        if (k > 0) {
          const Matrix lhs = pi_projection(ac, h, k - 1, ac.dstar(k) * src);
          const Matrix rhs = h.dstar_rel[j] * pi_projection(ac, h, k, src);
          if (lhs == rhs) cell.sign = rhs.is_zero() ? 0 : 1;
          else if (lhs == -rhs) cell.sign = -1;
          else {
            ok = false;
            why = detail::cat("pi d* != +-d*_rho pi at (", j, ",", l, ")");
          }
        }
        // Pi on cycles in F^l
        const Matrix Fl = filtration(ac, l, k);
        const Matrix cyc = intersection_basis(ker, Fl);
        if (!detail::in_span(src, cyc)) {
          ok = false;
          why = detail::cat("cycles in F^", l, "_", k, " not inside F~");
        }
        const Matrix pc = pi_projection(ac, h, k, cyc);
        if (!(h.dstar_rel[j] * pc).is_zero()) {
          ok = false;
          why = detail::cat("pi of a cycle is not a relative cycle at (", j, ",", l, ")");
        }
        const std::size_t dj = ac.exterior_mid().count(j) * h.dim();
        const Matrix imr = j < ac.mid_count() ? detail::cols_of(h.dstar_rel[j + 1]) : Matrix(dj, 0);
        const Matrix bnd = intersection_basis(im, Fl);
        if (!detail::in_span(imr, pi_projection(ac, h, k, bnd))) {
          ok = false;
          why = detail::cat("Pi does not vanish on boundaries at (", j, ",", l, ")");
        }
        const std::size_t rker = dj - rank(h.dstar_rel[j]);
        cell.relative_dim = rker - imr.cols();
        cell.rank = (pc.cols() == 0 ? imr.cols() : rank(hcat(imr, pc))) - imr.cols();
      } catch (const std::logic_error& e) {
        ok = false;
        why = e.what();
      }
      auto it = table.cells.find({j, l});
      if (it != table.cells.end())
        for (const auto& e : it->second) cell.predicted += weyl_dimension(e.nu, ac.pair().sigma_q, rs);
      if (cell.rank != cell.relative_dim || static_cast<long long>(cell.rank) != cell.predicted) {
        ok = false;
        if (why.empty())
          why = detail::cat("rank ", cell.rank, " vs relative homology ", cell.relative_dim, " vs predicted ",
                            cell.predicted, " at (", j, ",", l, ")");
      }
      sum += cell.rank;
      det << (det.tellp() ? " " : "") << "(" << j << "," << l << "):" << cell.rank;
      if (cell.sign < 0) det << "[-]";
      if (cells) cells->push_back(cell);
    }
    if (sum != hk) {
      ok = false;
      if (why.empty()) why = detail::cat("ranks sum to ", sum, " but dim H_", k, " = ", hk);
    }
  }
  return {"projection", ok, ok ? det.str() : why + "; " + det.str()};
}

inline ComplexReport verify_absolute(const AbsoluteComplex& ac) {
  ComplexReport rep;
  rep.instance = "lambda=" + ac.lambda().str();
  for (auto& c : check_double_complex(ac)) rep.checks.push_back(std::move(c));
  rep.checks.push_back(check_projection(ac));
  return rep;
}

}  // namespace relbgg
