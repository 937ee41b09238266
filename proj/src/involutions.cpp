#include "cmglue/involutions.hpp"

#include <array>
#include <utility>

#include "cmglue/hnf.hpp"

namespace cmglue {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

ZMat row_hnf(ZMat a) {
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best < 0 || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best < 0) break;
      if (best != r) a.row(r).swap(a.row(best));
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q = floor_div(a(i, c), a(r, c));
        for (int j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (int j = 0; j < cols; ++j) a(r, j) = -a(r, j);
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(a(i, c), a(r, c));
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  return a.topRows(r);
}

ZMat z_kernel(ZMat a) {
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  ZMat u = ZMat::Zero(cols, cols);
  for (int i = 0; i < cols; ++i) u(i, i) = 1;
  int c0 = 0;
  for (int row = 0; row < rows && c0 < cols; ++row) {
    for (;;) {
      int best = -1;
      for (int c = c0; c < cols; ++c)
        if (a(row, c) != 0 && (best < 0 || abs(a(row, c)) < abs(a(row, best)))) best = c;
      if (best < 0) break;
      if (best != c0) { a.col(c0).swap(a.col(best)); u.col(c0).swap(u.col(best)); }
      bool clean = true;
      for (int c = c0 + 1; c < cols; ++c) {
        if (a(row, c) == 0) continue;
        Int q = floor_div(a(row, c), a(row, c0));
        for (int i = 0; i < rows; ++i) a(i, c) -= q * a(i, c0);
        for (int i = 0; i < cols; ++i) u(i, c) -= q * u(i, c0);
        if (a(row, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(row, c0) != 0) ++c0;
  }
  return u.rightCols(cols - c0);
}

QMat of_row_reduce(QMat a) {
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      int best = -1;
      Rat bestn = 0;
      for (int i = r; i < rows; ++i) {
        if (a(i, c).is_zero()) continue;
        Rat n = abs(a(i, c).norm());
        if (best < 0 || n < bestn) { best = i; bestn = n; }
      }
      if (best < 0) break;
      if (best != r) a.row(r).swap(a.row(best));
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a(i, c).is_zero()) continue;
        auto [q, rem] = quad_divmod(a(i, c), a(r, c));
        for (int j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
        if (!a(i, c).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!a(r, c).is_zero()) ++r;
  }
  return a.topRows(r);
}

bool is_quintic_std(const HermitianLattice& L) {
  static const HermitianLattice std_lat = HermitianLattice::quintic_std();
  return L.field == std_lat.field && L.rank == 3 && mat_eq(L.gram, std_lat.gram);
}

AntiUnitaryInvolution::AntiUnitaryInvolution(HermitianLattice L, CMat a)
    : lattice(std::move(L)), A(std::move(a)) {
  const auto& f = *lattice.field;
  if (A.rows() != lattice.rank || A.cols() != lattice.rank)
    throw std::runtime_error("AntiUnitaryInvolution: shape mismatch");
  for (int i = 0; i < lattice.rank; ++i)
    for (int j = 0; j < lattice.rank; ++j) {
      A(i, j) = A(i, j).promoted(f);
      if (!A(i, j).is_integral())
        throw std::runtime_error("AntiUnitaryInvolution: matrix not integral");
    }
  CMat prod = A * conjugate(A);
  for (int i = 0; i < lattice.rank; ++i)
    for (int j = 0; j < lattice.rank; ++j)
      if (prod(i, j) != CycElt(i == j ? 1 : 0))
        throw std::runtime_error("AntiUnitaryInvolution: A * sigma(A) != I");
  if (abs(norm_Q(det_K(A))) != 1)
    throw std::runtime_error("AntiUnitaryInvolution: matrix not invertible over O_K");
  CMat lhs = A.transpose() * lattice.gram * conjugate(A);
  CMat rhs = conjugate(lattice.gram);
  if (!mat_eq(lhs, rhs))
    throw std::runtime_error("AntiUnitaryInvolution: isometry identity fails");
}

CVec AntiUnitaryInvolution::apply(const CVec& x) const { return A * conjugate(x); }

AntiUnitaryInvolution AntiUnitaryInvolution::negated() const {
  CMat m = A;
  for (int i = 0; i < lattice.rank; ++i)
    for (int j = 0; j < lattice.rank; ++j) m(i, j) = -m(i, j);
  return AntiUnitaryInvolution(lattice, std::move(m));
}

AntiUnitaryInvolution AntiUnitaryInvolution::conjugated_by(const CMat& g) const {
  CMat lhs = g.transpose() * lattice.gram * conjugate(g);
  if (!mat_eq(lhs, lattice.gram))
    throw std::runtime_error("conjugated_by: g is not an isometry of the lattice");
  CMat m = g * A * inverse_K(conjugate(g));
  return AntiUnitaryInvolution(lattice, std::move(m));
}

std::vector<AntiUnitaryInvolution> reference_involutions(const HermitianLattice& L) {
  if (!is_quintic_std(L)) throw std::runtime_error("reference_involutions: lattice is not quintic-std");
  std::vector<AntiUnitaryInvolution> out;
  for (int j = 0; j < 3; ++j) {
    CMat a = CMat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) a(i, i) = CycElt(i < j ? -1 : 1);
    out.emplace_back(L, std::move(a));
  }
  return out;
}

InvolutionInvariant invariant(const AntiUnitaryInvolution& alpha) {
  const auto& f = *alpha.lattice.field;
  if (!(f.is_cyclotomic() && f.n == 5)) throw std::runtime_error("invariant: needs Q(zeta_5)");
  const int n = alpha.lattice.rank;
  Eigen::MatrixXi abar(n, n), ami(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      abar(i, j) = mod_theta(alpha.A(i, j));
      ami(i, j) = abar(i, j) - (i == j ? 1 : 0);
    }
  Eigen::MatrixXi ker = f5_kernel(ami);
  InvolutionInvariant inv;
  inv.dim_fixed = static_cast<int>(ker.cols());
  auto qbar = reduce_mod_theta(alpha.lattice);
  const int k = inv.dim_fixed;
  Eigen::MatrixXi q(k, k);
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) {
      int acc = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += ker(i, s) * qbar.gram(i, j) * ker(j, t);
      q(s, t) = ((acc % 5) + 5) % 5;
    }
  int d = (k == 0) ? 1 : f5_det(q);  // empty form has determinant 1
  if (d == 0) inv.det_class = InvolutionInvariant::DetClass::zero;
  else if (d == 1 || d == 4) inv.det_class = InvolutionInvariant::DetClass::square;
  else inv.det_class = InvolutionInvariant::DetClass::nonsquare;
  return inv;
}

namespace {

using InvPair = std::pair<InvolutionInvariant, InvolutionInvariant>;

InvPair unordered_pair(InvolutionInvariant a, InvolutionInvariant b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

const std::array<InvPair, 3>& reference_pairs() {
  static const std::array<InvPair, 3> pairs = [] {
    auto refs = reference_involutions(HermitianLattice::quintic_std());
    std::array<InvPair, 3> p;
    for (int j = 0; j < 3; ++j) {
      auto i1 = invariant(refs[j]), i2 = invariant(refs[j].negated());
      if (i1.det_class == InvolutionInvariant::DetClass::zero ||
          i2.det_class == InvolutionInvariant::DetClass::zero)
        throw std::runtime_error("reference invariant is degenerate");
      p[j] = unordered_pair(i1, i2);
    }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (p[a] == p[b]) throw std::runtime_error("reference invariant pairs not distinct");
    return p;
  }();
  return pairs;
}

}  // namespace

int classify(const AntiUnitaryInvolution& alpha) {
  if (!is_quintic_std(alpha.lattice)) throw std::runtime_error("classify: lattice is not quintic-std");
  InvPair p = unordered_pair(invariant(alpha), invariant(alpha.negated()));
  const auto& refs = reference_pairs();
  for (int j = 0; j < 3; ++j)
    if (p == refs[j]) return j;
  throw std::runtime_error("classify: unclassifiable involution (would falsify the classification)");
}

ZMat z_linear_semilinear(const HermitianLattice& L, const CMat& A) {
  const auto& f = *L.field;
  const int d = f.degree, n = L.rank * d;
  ZMat m = ZMat::Zero(n, n);
  for (int i = 0; i < L.rank; ++i)
    for (int j = 0; j < d; ++j) {
      CycElt zbar = conjugate(CycElt::gen_pow(f, j));
      for (int t = 0; t < L.rank; ++t) {
        CycElt e = A(t, i) * zbar;
        if (!e.is_integral()) throw std::runtime_error("z_linear_semilinear: non-integral image");
        for (int u = 0; u < d; ++u) m(t * d + u, i * d + j) = numerator(e.coeffs[u]);
      }
    }
  return m;
}

namespace {

// O_K coordinate from its power-basis coefficients, split as p + q*zeta with
// p, q in O_F (valid for Q(zeta5))
std::pair<QuadElt, QuadElt> split_of(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3) {
  return {QuadElt{c0 - c2, -c3}, QuadElt{c1, c2 - c3}};
}

CycElt unsplit_of(const QuadElt& p, const QuadElt& q) {
  const auto& f = FieldDescriptor::cyclotomic(5);
  return p.to_cyclotomic() + q.to_cyclotomic() * CycElt::gen(f);
}

}  // namespace

FixedLattice fixed_lattice(const AntiUnitaryInvolution& alpha) {
  const auto& f = *alpha.lattice.field;
  if (!(f.is_cyclotomic() && f.n == 5)) throw std::runtime_error("fixed_lattice: needs Q(zeta_5)");
  const int d = f.degree, rank = alpha.lattice.rank, n = rank * d;
  ZMat m = z_linear_semilinear(alpha.lattice, alpha.A);
  for (int i = 0; i < n; ++i) m(i, i) -= 1;
  ZMat ker = z_kernel(std::move(m));  // columns
  const int zr = static_cast<int>(ker.cols());
  // re-express as an O_F-module inside O_F^{2 rank}
  QMat gens(zr, 2 * rank);
  for (int c = 0; c < zr; ++c)
    for (int i = 0; i < rank; ++i) {
      auto [p, q] = split_of(Rat(ker(i * d + 0, c)), Rat(ker(i * d + 1, c)),
                             Rat(ker(i * d + 2, c)), Rat(ker(i * d + 3, c)));
      gens(c, 2 * i) = p;
      gens(c, 2 * i + 1) = q;
    }
  QMat basis = of_row_reduce(std::move(gens));
  if (basis.rows() != rank)
    throw std::runtime_error("fixed_lattice: unexpected O_F-rank");
  FixedLattice out;
  for (int r = 0; r < rank; ++r) {
    CVec v(rank);
    for (int i = 0; i < rank; ++i) v(i) = unsplit_of(basis(r, 2 * i), basis(r, 2 * i + 1));
    CVec img = alpha.apply(v);
    if (!mat_eq(img, v)) throw std::runtime_error("fixed_lattice: basis vector not fixed");
    out.basis.push_back(std::move(v));
  }
  out.gram.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      out.gram(i, j) = as_quad(alpha.lattice.herm(out.basis[i], out.basis[j]));
  return out;
}

bool saturation_check_scaled(const AntiUnitaryInvolution& alpha, int scale) {
  const auto& f = *alpha.lattice.field;
  const int d = f.degree, rank = alpha.lattice.rank, n = rank * d;
  FixedLattice fl = fixed_lattice(alpha);
  std::vector<CVec> basis;
  for (const auto& v : fl.basis) {
    CVec w = v;
    for (int i = 0; i < rank; ++i) w(i) = CycElt(scale) * w(i);
    basis.push_back(std::move(w));
  }
  QMat gram(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram(i, j) = QuadElt(scale * scale) * fl.gram(i, j);
  QMat dualc = inverse_F(gram);
  CycElt z = CycElt::gen(f);
  CycElt theta = z - z.inverse();
  std::vector<CVec> gens;
  for (int t = 0; t < d; ++t) {
    CycElt zt = CycElt::gen_pow(f, t);
    for (int l = 0; l < rank; ++l) {
      CVec w(rank);
      for (int i = 0; i < rank; ++i) w(i) = zt * basis[l](i);
      gens.push_back(std::move(w));
    }
    for (int k = 0; k < rank; ++k) {
      CVec w = CVec::Zero(rank);
      for (int l = 0; l < rank; ++l) {
        CycElt cf = dualc(l, k).to_cyclotomic();
        for (int i = 0; i < rank; ++i) w(i) += cf * basis[l](i);
      }
      for (int i = 0; i < rank; ++i) w(i) = zt * theta * w(i);
      gens.push_back(std::move(w));
    }
  }
  // flatten to rational row vectors, clear denominators, HNF-compare with D * Z^n
  RMat rows(static_cast<int>(gens.size()), n);
  Int den = 1;
  for (size_t g = 0; g < gens.size(); ++g)
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < d; ++j) {
        rows(static_cast<int>(g), i * d + j) = gens[g](i).coeffs[j];
        Int dd = denominator(gens[g](i).coeffs[j]);
        den = den / gcd(den, dd) * dd;
      }
  ZMat zrows(static_cast<int>(gens.size()), n);
  for (int g = 0; g < zrows.rows(); ++g)
    for (int c = 0; c < n; ++c) {
      Rat v = rows(g, c) * Rat(den);
      if (denominator(v) != 1) throw std::runtime_error("saturation_check: denominator bookkeeping");
      zrows(g, c) = numerator(v);
    }
  ZMat h = row_hnf(std::move(zrows));
  ZMat want = ZMat::Zero(n, n);
  for (int i = 0; i < n; ++i) want(i, i) = den;
  return mat_eq(h, want);
}

bool saturation_check(const AntiUnitaryInvolution& alpha) {
  return saturation_check_scaled(alpha, 1);
}

}  // namespace cmglue
