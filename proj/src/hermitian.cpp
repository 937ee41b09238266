#include "cmglue/hermitian.hpp"

#include <sstream>

namespace cmglue {

namespace {

template <typename Mat, typename Inv>
Mat gauss_jordan_inverse(Mat a, Inv inv, const char* what) {
  const Eigen::Index n = a.rows();
  Mat r = Mat::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!a(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) throw std::runtime_error(std::string(what) + ": singular matrix");
    a.row(c).swap(a.row(piv));
    r.row(c).swap(r.row(piv));
    auto p = inv(a(c, c));
    for (Eigen::Index j = 0; j < n; ++j) { a(c, j) *= p; r(c, j) *= p; }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      auto f = a(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        r(i, j) -= f * r(c, j);
      }
    }
  }
  return r;
}

}  // namespace

CycElt det_K(CMat m) {
  const Eigen::Index n = m.rows();
  CycElt det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!m(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) return CycElt(0);
    if (piv != c) { m.row(c).swap(m.row(piv)); det = -det; }
    det *= m(c, c);
    CycElt p = m(c, c).inverse();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      CycElt f = m(i, c) * p;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

CMat inverse_K(CMat m) {
  return gauss_jordan_inverse(std::move(m), [](const CycElt& x) { return x.inverse(); },
                              "inverse_K");
}

RMat inverse_Q(RMat m) {
  const Eigen::Index n = m.rows();
  RMat a = std::move(m), r = RMat::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (a(i, c) != 0) { piv = i; break; }
    if (piv < 0) throw std::runtime_error("inverse_Q: singular matrix");
    a.row(c).swap(a.row(piv));
    r.row(c).swap(r.row(piv));
    Rat p = Rat(1) / a(c, c);
    for (Eigen::Index j = 0; j < n; ++j) { a(c, j) *= p; r(c, j) *= p; }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        r(i, j) -= f * r(c, j);
      }
    }
  }
  return r;
}

QMat inverse_F(QMat m) {
  return gauss_jordan_inverse(std::move(m), [](const QuadElt& x) { return x.inverse(); },
                              "inverse_F");
}

HermitianLattice::HermitianLattice(const FieldDescriptor& f, CMat g) : field(&f) {
  if (g.rows() != g.cols()) throw std::runtime_error("HermitianLattice: gram not square");
  rank = static_cast<int>(g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = g(i, j).promoted(f);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (g(i, j) != conjugate(g(j, i)))
        throw std::runtime_error("HermitianLattice: gram not hermitian");
  if (det_K(g).is_zero()) throw std::runtime_error("HermitianLattice: degenerate gram");
  gram = std::move(g);
}

HermitianLattice HermitianLattice::quintic_std() {
  const auto& K = FieldDescriptor::cyclotomic(5);
  CycElt z = CycElt::gen(K);
  CycElt lambda = z + z.inverse();
  CMat g = CMat::Zero(3, 3);
  g(0, 0) = CycElt(1);
  g(1, 1) = CycElt(1);
  g(2, 2) = -lambda;
  return HermitianLattice(K, g);
}

HermitianLattice HermitianLattice::identity(const FieldDescriptor& f, int n) {
  CMat g = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = CycElt(1);
  return HermitianLattice(f, g);
}

CycElt HermitianLattice::herm(const CVec& x, const CVec& y) const {
  CycElt acc(0);
  for (int i = 0; i < rank; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < rank; ++j) acc += x(i) * gram(i, j) * conjugate(y(j));
  }
  return acc;
}

ZMat z_linear_mult(const FieldDescriptor& f, int rank, const CycElt& a) {
  const int d = f.degree, n = rank * d;
  ZMat m = ZMat::Zero(n, n);
  for (int j = 0; j < d; ++j) {
    CycElt col = a * CycElt::gen_pow(f, j);
    if (!col.is_integral()) throw std::runtime_error("z_linear_mult: non-integral action");
    for (int i = 0; i < d; ++i)
      for (int b = 0; b < rank; ++b) m(b * d + i, b * d + j) = numerator(col.coeffs[i]);
  }
  return m;
}

AlternatingForm::AlternatingForm(const FieldDescriptor& f, int rk, RMat m)
    : field(&f), rank(rk), zrank(rk * f.degree) {
  if (m.rows() != zrank || m.cols() != zrank)
    throw std::runtime_error("AlternatingForm: shape mismatch (zrank != rank * degree)");
  for (int i = 0; i < zrank; ++i)
    for (int j = 0; j < zrank; ++j)
      if (m(i, j) != -m(j, i))
        throw std::runtime_error("AlternatingForm: matrix not skew-symmetric");
  module_action = z_linear_mult(f, rk, CycElt::gen(f));
  ZMat conj_action = z_linear_mult(f, rk, conjugate(CycElt::gen(f)));
  RMat c = module_action.cast<Rat>(), cc = conj_action.cast<Rat>();
  // lazyProduct: Eigen's operator* overload set chokes on boost scalars
  RMat lhs = c.transpose().lazyProduct(m), rhs = m.lazyProduct(cc);
  for (int s = 0; s < zrank; ++s)
    for (int t = 0; t < zrank; ++t)
      if (lhs(s, t) != rhs(s, t)) {
        std::ostringstream os;
        os << "AlternatingForm: sigma-compatibility fails at basis pair (" << s << "," << t << ")";
        throw std::runtime_error(os.str());
      }
  matrix = std::move(m);
}

bool AlternatingForm::is_integral() const {
  for (int i = 0; i < zrank; ++i)
    for (int j = 0; j < zrank; ++j)
      if (denominator(matrix(i, j)) != 1) return false;
  return true;
}

SkewHermitianForm::SkewHermitianForm(const FieldDescriptor& f, CMat g) : field(&f) {
  if (g.rows() != g.cols()) throw std::runtime_error("SkewHermitianForm: gram not square");
  rank = static_cast<int>(g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = g(i, j).promoted(f);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (g(i, j) != -conjugate(g(j, i)))
        throw std::runtime_error("SkewHermitianForm: gram not skew-hermitian");
  gram = std::move(g);
}

AlternatingForm trace_form(const SkewHermitianForm& T) {
  const auto& f = *T.field;
  const int d = f.degree, n = T.rank * d;
  // w[j][j'] = zeta^j * sigma(zeta^j')
  std::vector<std::vector<CycElt>> w(d, std::vector<CycElt>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      w[j][k] = CycElt::gen_pow(f, j) * conjugate(CycElt::gen_pow(f, k));
  RMat e = RMat::Zero(n, n);
  for (int i = 0; i < T.rank; ++i)
    for (int i2 = 0; i2 < T.rank; ++i2) {
      if (T.gram(i, i2).is_zero()) continue;
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) e(i * d + j, i2 * d + k) = trace_Q(T.gram(i, i2) * w[j][k]);
    }
  return AlternatingForm(f, T.rank, std::move(e));
}

SkewHermitianForm skew_from_alternating_dual(const AlternatingForm& E) {
  const auto& f = *E.field;
  const int d = f.degree;
  // trace-dual basis of {zeta^j}: columns of M^{-1}, M_{jk} = Tr(zeta^{j+k})
  RMat m(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) m(j, k) = trace_Q(CycElt::gen_pow(f, j) * CycElt::gen_pow(f, k));
  RMat dual = inverse_Q(std::move(m));
  std::vector<CycElt> dual_basis(d);
  for (int j = 0; j < d; ++j) {
    std::vector<Rat> c(d);
    for (int k = 0; k < d; ++k) c[k] = dual(k, j);
    dual_basis[j] = CycElt(f, std::move(c));
  }
  CMat t = CMat::Zero(E.rank, E.rank);
  for (int i = 0; i < E.rank; ++i)
    for (int i2 = 0; i2 < E.rank; ++i2) {
      CycElt acc = CycElt::zero(f);
      for (int j = 0; j < d; ++j)
        acc += CycElt(E.matrix(i * d + j, i2 * d)) * dual_basis[j];
      t(i, i2) = acc;
    }
  return SkewHermitianForm(f, std::move(t));
}

namespace {

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

}  // namespace

SkewHermitianForm skew_from_alternating(const AlternatingForm& E) {
  const auto& f = *E.field;
  if (!(f.is_cyclotomic() && is_prime_long(f.n))) return skew_from_alternating_dual(E);
  // closed formula T(x, y) = (1/p) sum_j zeta^j E(x, zeta^j y)
  const long p = f.n;
  const int d = f.degree;
  CMat t = CMat::Zero(E.rank, E.rank);
  for (int i = 0; i < E.rank; ++i)
    for (int i2 = 0; i2 < E.rank; ++i2) {
      CycElt acc = CycElt::zero(f);
      for (long j = 0; j < p; ++j) {
        // E(b_i, zeta^j b_{i2})
        Rat c = 0;
        const auto& zp = f.zeta_powers[j];
        for (int u = 0; u < d; ++u)
          if (zp[u] != 0) c += Rat(zp[u]) * E.matrix(i * d, i2 * d + u);
        acc += CycElt(c) * CycElt::gen_pow(f, j);
      }
      CycElt fifth(Rat(1, p));
      t(i, i2) = fifth * acc;
    }
  return SkewHermitianForm(f, std::move(t));
}

HermitianLattice hermitian_from_symplectic(const AlternatingForm& E, const CycElt& eta) {
  if (eta.field != E.field) throw std::runtime_error("hermitian_from_symplectic: field mismatch");
  const auto& f = *E.field;
  if (conjugate(eta) != -eta)
    throw std::runtime_error("hermitian_from_symplectic: eta not purely imaginary");
  // eta must generate the different: trace-dual and norm checks
  CycElt xi = eta.inverse();
  CycElt p = CycElt::one(f);
  for (int j = 0; j < f.degree; ++j) {
    if (denominator(trace_Q(xi * p)) != 1)
      throw std::runtime_error("hermitian_from_symplectic: eta does not generate the different");
    p *= CycElt::gen(f);
  }
  RMat tr(f.degree, f.degree);
  for (int j = 0; j < f.degree; ++j)
    for (int k = 0; k < f.degree; ++k)
      tr(j, k) = trace_Q(CycElt::gen_pow(f, j) * CycElt::gen_pow(f, k));
  Rat disc = 1;
  {
    RMat a = tr;
    for (int c = 0; c < f.degree; ++c) {
      int piv = -1;
      for (int r = c; r < f.degree; ++r)
        if (a(r, c) != 0) { piv = r; break; }
      if (piv < 0) { disc = 0; break; }
      if (piv != c) { a.row(c).swap(a.row(piv)); disc = -disc; }
      disc *= a(c, c);
      for (int r = c + 1; r < f.degree; ++r) {
        if (a(r, c) == 0) continue;
        Rat fac = a(r, c) / a(c, c);
        for (int c2 = c; c2 < f.degree; ++c2) a(r, c2) -= fac * a(c, c2);
      }
    }
  }
  if (abs(norm_Q(eta)) != abs(disc))
    throw std::runtime_error("hermitian_from_symplectic: |N(eta)| != |disc|");

  SkewHermitianForm T = skew_from_alternating(E);
  CMat g = T.gram;
  for (int i = 0; i < T.rank; ++i)
    for (int j = 0; j < T.rank; ++j) g(i, j) = eta * g(i, j);
  return HermitianLattice(f, std::move(g));  // validates hermitian + nondegenerate
}

SignatureProfile signature(const HermitianLattice& L) {
  const auto& f = *L.field;
  CMat g = L.gram;
  const int n = L.rank;
  CycElt eta;  // purely imaginary helper for stubborn zero diagonals
  std::vector<RealElt> pivots;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!g(i, i).is_zero()) { piv = i; break; }
    if (piv < 0) {
      // all remaining diagonal entries vanish; make one nonzero
      int ri = -1, rj = -1;
      for (int i = k; i < n && ri < 0; ++i)
        for (int j = k; j < n; ++j)
          if (i != j && !g(i, j).is_zero()) { ri = i; rj = j; break; }
      if (ri < 0) throw std::runtime_error("signature: degenerate block");
      CycElt u(1);
      if ((g(ri, rj) + conjugate(g(ri, rj))).is_zero()) {
        if (eta.is_zero()) eta = different_generator(f);
        u = eta;
      }
      // row ri += u * row rj; col ri += sigma(u) * col rj
      for (int j = 0; j < n; ++j) g(ri, j) += u * g(rj, j);
      for (int i = 0; i < n; ++i) g(i, ri) += conjugate(u) * g(i, rj);
      piv = ri;
    }
    if (piv != k) {
      g.row(k).swap(g.row(piv));
      g.col(k).swap(g.col(piv));
    }
    CycElt d = g(k, k);
    pivots.emplace_back(d);
    CycElt dinv = d.inverse();
    std::vector<CycElt> fac(n);
    for (int i = k + 1; i < n; ++i) fac[i] = g(i, k) * dinv;
    for (int i = k + 1; i < n; ++i) {
      if (fac[i].is_zero()) continue;
      for (int j = k; j < n; ++j) g(i, j) -= fac[i] * g(k, j);
    }
    for (int j = k + 1; j < n; ++j) {
      if (fac[j].is_zero()) continue;
      for (int i = k; i < n; ++i) g(i, j) -= g(i, k) * conjugate(fac[j]);
    }
  }
  SignatureProfile prof;
  for (size_t psi = 0; psi < f.cm_type.size(); ++psi) {
    int r = 0, s = 0;
    for (const auto& d : pivots) {
      int sg = d.sign_at(static_cast<int>(psi));
      if (sg > 0) ++r;
      else if (sg < 0) ++s;
      else throw std::runtime_error("signature: zero pivot");
    }
    prof.rs.emplace_back(r, s);
  }
  return prof;
}

std::pair<int, int> signature_at(const HermitianLattice& L, int idx) {
  const auto& f = *L.field;
  if (idx < 0 || idx >= f.degree) throw std::runtime_error("signature_at: bad embedding index");
  SignatureProfile prof = signature(L);
  for (size_t psi = 0; psi < f.cm_type.size(); ++psi)
    if (f.cm_type[psi] == idx) return prof.rs[psi];
  // conjugate embedding: locate the Psi partner by root conjugation
  std::complex<double> target = std::conj(f.roots[idx]);
  for (size_t psi = 0; psi < f.cm_type.size(); ++psi)
    if (std::abs(f.roots[f.cm_type[psi]] - target) < 1e-9)
      return {prof.rs[psi].second, prof.rs[psi].first};
  throw std::runtime_error("signature_at: no conjugate partner found");
}

bool is_unimodular(const HermitianLattice& L) {
  for (int i = 0; i < L.rank; ++i)
    for (int j = 0; j < L.rank; ++j)
      if (!L.gram(i, j).is_integral()) throw std::runtime_error("is_unimodular: gram not integral");
  CMat inv = inverse_K(L.gram);
  for (int i = 0; i < L.rank; ++i)
    for (int j = 0; j < L.rank; ++j)
      if (!inv(i, j).is_integral()) return false;
  return true;
}

int mod_theta(const CycElt& x) {
  if (!x.is_integral()) throw std::runtime_error("mod_theta: non-integral element");
  if (x.field != nullptr && !(x.field->is_cyclotomic() && x.field->n == 5))
    throw std::runtime_error("mod_theta: needs Q(zeta_5)");
  Int s = 0;
  for (const auto& c : x.coeffs) s += numerator(c);
  Int r = s % 5;
  if (r < 0) r += 5;
  return r.convert_to<int>();
}

QuadraticSpaceF5 reduce_mod_theta(const HermitianLattice& L) {
  const auto& f = *L.field;
  if (!(f.is_cyclotomic() && f.n == 5)) throw std::runtime_error("reduce_mod_theta: needs Q(zeta_5)");
  // kernel sanity: theta = zeta - zeta^-1 maps to 0
  static const bool theta_in_kernel = [] {
    const auto& K = FieldDescriptor::cyclotomic(5);
    CycElt z = CycElt::gen(K);
    return mod_theta(z - z.inverse()) == 0;
  }();
  if (!theta_in_kernel) throw std::runtime_error("reduce_mod_theta: theta not in kernel");
  QuadraticSpaceF5 q;
  q.dim = L.rank;
  q.gram.resize(L.rank, L.rank);
  for (int i = 0; i < L.rank; ++i)
    for (int j = 0; j < L.rank; ++j) q.gram(i, j) = mod_theta(L.gram(i, j));
  if (!mat_eq(q.gram, q.gram.transpose())) throw std::runtime_error("reduce_mod_theta: not symmetric");
  return q;
}

int f5_det(Eigen::MatrixXi m) {
  const int n = static_cast<int>(m.rows());
  auto norm5 = [](int v) { return ((v % 5) + 5) % 5; };
  int det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (norm5(m(r, c)) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) { m.row(c).swap(m.row(piv)); det = norm5(-det); }
    det = norm5(det * m(c, c));
    // inverse of pivot mod 5
    int pv = norm5(m(c, c)), pinv = 0;
    for (int t = 1; t < 5; ++t)
      if (norm5(pv * t) == 1) pinv = t;
    for (int r = c + 1; r < n; ++r) {
      int fac = norm5(m(r, c) * pinv);
      if (fac == 0) continue;
      for (int c2 = c; c2 < n; ++c2) m(r, c2) = norm5(m(r, c2) - fac * m(c, c2));
    }
  }
  return det;
}

Eigen::MatrixXi f5_kernel(Eigen::MatrixXi m) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  auto norm5 = [](int v) { return ((v % 5) + 5) % 5; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = norm5(m(r, c));
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    m.row(rank).swap(m.row(piv));
    int pv = m(rank, c), pinv = 0;
    for (int t = 1; t < 5; ++t)
      if (norm5(pv * t) == 1) pinv = t;
    for (int c2 = 0; c2 < cols; ++c2) m(rank, c2) = norm5(m(rank, c2) * pinv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m(r, c) == 0) continue;
      int fac = m(r, c);
      for (int c2 = 0; c2 < cols; ++c2) m(r, c2) = norm5(m(r, c2) - fac * m(rank, c2));
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(c);
  Eigen::MatrixXi ker = Eigen::MatrixXi::Zero(cols, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker(fc, static_cast<int>(k)) = 1;
    for (int c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) ker(c, static_cast<int>(k)) = norm5(-m(pivot_of_col[c], fc));
  }
  return ker;
}

}  // namespace cmglue
