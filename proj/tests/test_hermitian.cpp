#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <random>

#include "cmglue/hermitian.hpp"

using namespace cmglue;

namespace {

const FieldDescriptor& K5() { return FieldDescriptor::cyclotomic(5); }

CycElt lambda5() {
  CycElt z = CycElt::gen(K5());
  return z + z.inverse();
}

CycElt random_int_elt(const FieldDescriptor& f, std::mt19937_64& rng, int b = 4) {
  std::uniform_int_distribution<int> d(-b, b);
  std::vector<Rat> c(f.degree);
  for (auto& x : c) x = d(rng);
  return CycElt(f, std::move(c));
}

SkewHermitianForm random_skew(const FieldDescriptor& f, int rank, std::mt19937_64& rng) {
  CMat m(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m(i, j) = random_int_elt(f, rng);
  CMat t(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) t(i, j) = m(i, j) - conjugate(m(j, i));
  return SkewHermitianForm(f, std::move(t));
}

}  // namespace

TEST_CASE("quintic-std lattice and signatures") {
  auto L = HermitianLattice::quintic_std();
  CHECK(L.rank == 3);
  CHECK(L.gram(2, 2) == -lambda5());

  auto sig = signature(L);
  REQUIRE(sig.rs.size() == 2);
  CHECK(sig.rs[0] == std::pair<int, int>{2, 1});
  CHECK(sig.rs[1] == std::pair<int, int>{3, 0});

  auto I3 = HermitianLattice::identity(K5(), 3);
  auto sig_i = signature(I3);
  CHECK(sig_i.rs[0] == std::pair<int, int>{3, 0});
  CHECK(sig_i.rs[1] == std::pair<int, int>{3, 0});

  CMat neg = CMat::Zero(1, 1);
  neg(0, 0) = CycElt(-1);
  auto sig_n = signature(HermitianLattice(K5(), neg));
  CHECK(sig_n.rs[0] == std::pair<int, int>{0, 1});
  CHECK(sig_n.rs[1] == std::pair<int, int>{0, 1});
}

TEST_CASE("signature with zero diagonal (hyperbolic plane)") {
  CMat g = CMat::Zero(2, 2);
  g(0, 1) = CycElt(1);
  g(1, 0) = CycElt(1);
  auto sig = signature(HermitianLattice(K5(), g));
  CHECK(sig.rs[0] == std::pair<int, int>{1, 1});
  CHECK(sig.rs[1] == std::pair<int, int>{1, 1});
}

TEST_CASE("signature at conjugate embeddings transposes") {
  auto L = HermitianLattice::quintic_std();
  const auto& f = K5();
  for (int psi = 0; psi < 2; ++psi) {
    int idx = f.cm_type[psi];
    auto here = signature_at(L, idx);
    // conjugate embedding: root is conjugated (k -> 5 - k)
    int cidx = -1;
    for (int j = 0; j < f.degree; ++j)
      if (std::abs(f.roots[j] - std::conj(f.roots[idx])) < 1e-12) cidx = j;
    REQUIRE(cidx >= 0);
    auto there = signature_at(L, cidx);
    CHECK(here.first == there.second);
    CHECK(here.second == there.first);
  }
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(HermitianLattice::quintic_std()));
  CHECK(is_unimodular(HermitianLattice::identity(K5(), 1)));

  CycElt z = CycElt::gen(K5());
  CycElt theta = z - z.inverse();
  CMat g = CMat::Zero(3, 3);
  g(0, 0) = CycElt(1);
  g(1, 1) = CycElt(1);
  g(2, 2) = theta * conjugate(theta);  // |theta|^2 = (5+sqrt5)/2, not a unit
  CHECK_FALSE(is_unimodular(HermitianLattice(K5(), g)));
}

TEST_CASE("|theta|^2 is 3 + lambda = (5 + sqrt5)/2") {
  CycElt z = CycElt::gen(K5());
  CycElt theta = z - z.inverse();
  CycElt t2 = theta * conjugate(theta);
  CHECK(t2 == CycElt(3) + lambda5());
  CHECK(as_quad(t2) == QuadElt{3, 1});
}

TEST_CASE("reduction mod theta") {
  auto q = reduce_mod_theta(HermitianLattice::quintic_std());
  CHECK(q.dim == 3);
  Eigen::MatrixXi expect(3, 3);
  expect << 1, 0, 0, 0, 1, 0, 0, 0, 3;
  CHECK(mat_eq(q.gram, expect));

  auto qi = reduce_mod_theta(HermitianLattice::identity(K5(), 3));
  CHECK(mat_eq(qi.gram, Eigen::MatrixXi::Identity(3, 3)));

  CHECK_THROWS(reduce_mod_theta(HermitianLattice::identity(FieldDescriptor::cyclotomic(4), 2)));
}

TEST_CASE("reduce_mod_theta invariants under O_K-basis change") {
  std::mt19937_64 rng(17);
  auto L = HermitianLattice::quintic_std();
  auto q0 = reduce_mod_theta(L);
  int d0 = f5_det(q0.gram);
  bool sq0 = (d0 == 1 || d0 == 4);
  auto [m, tors] = torsion_unit_group(K5());
  for (int trial = 0; trial < 10; ++trial) {
    // random unimodular U over O_K: product of elementary matrices and a
    // torsion-unit diagonal
    CMat U = CMat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) U(i, i) = CycElt(1);
    std::uniform_int_distribution<int> pick(0, 2), coef(-2, 2), tor(0, (int)m - 1);
    for (int step = 0; step < 4; ++step) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      CMat E = CMat::Zero(3, 3);
      for (int t = 0; t < 3; ++t) E(t, t) = CycElt(1);
      E(i, j) = CycElt(coef(rng)) * CycElt::gen_pow(K5(), coef(rng) + 2);
      U = U * E;
    }
    CMat D = CMat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) D(i, i) = CycElt(1);
    CycElt u = CycElt::one(K5());
    for (int t = 0; t < tor(rng); ++t) u *= tors;
    D(0, 0) = u;
    U = U * D;
    CMat g2 = U * L.gram * conjugate(U).transpose().eval();
    auto L2 = HermitianLattice(K5(), g2);
    auto q2 = reduce_mod_theta(L2);
    CHECK(q2.dim == q0.dim);
    int d2 = f5_det(q2.gram);
    bool sq2 = (d2 == 1 || d2 == 4);
    CHECK(d2 != 0);
    CHECK(sq2 == sq0);
  }
}

TEST_CASE("trace form of a rank-1 skew form") {
  const auto& f = K5();
  CycElt eta = different_generator(f);
  CycElt xi = eta.inverse();
  CMat t(1, 1);
  t(0, 0) = xi;
  SkewHermitianForm T(f, t);
  AlternatingForm E = trace_form(T);
  CHECK(E.zrank == 4);
  CHECK(E.is_integral());
  // direct oracle
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      Rat want = trace_Q(xi * CycElt::gen_pow(f, j) * conjugate(CycElt::gen_pow(f, k)));
      CHECK(E.matrix(j, k) == want);
    }
  {
    bool skew = true;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (E.matrix(j, k) != -E.matrix(k, j)) skew = false;
    CHECK(skew);
  }

  CMat z = CMat::Zero(2, 2);
  AlternatingForm E0 = trace_form(SkewHermitianForm(f, z));
  CHECK(mat_eq(E0.matrix, RMat::Zero(8, 8)));
}

TEST_CASE("trace/skew roundtrips, both construction routes") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int rank = 1 + static_cast<int>(rng() % 3);
    SkewHermitianForm T = random_skew(K5(), rank, rng);
    AlternatingForm E = trace_form(T);
    SkewHermitianForm back = skew_from_alternating(E);
    CHECK(mat_eq(back.gram, T.gram));
    SkewHermitianForm back2 = skew_from_alternating_dual(E);
    CHECK(mat_eq(back2.gram, T.gram));
    // integral T implies integral E implies eta*T integral
    CHECK(E.is_integral());
  }
  // and over a non-prime cyclotomic field via the trace-dual route
  const auto& K12 = FieldDescriptor::cyclotomic(12);
  for (int trial = 0; trial < 5; ++trial) {
    SkewHermitianForm T = random_skew(K12, 2, rng);
    AlternatingForm E = trace_form(T);
    CHECK(mat_eq(skew_from_alternating(E).gram, T.gram));
  }
}

TEST_CASE("integrality transfer: E integral iff T different-inverse valued") {
  std::mt19937_64 rng(29);
  CycElt eta = different_generator(K5());
  for (int trial = 0; trial < 20; ++trial) {
    SkewHermitianForm T = random_skew(K5(), 2, rng);
    AlternatingForm E = trace_form(T);
    SkewHermitianForm rec = skew_from_alternating(E);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK((eta * rec.gram(i, j)).is_integral());
  }
  // scaled-down T leaves the different-inverse: E picks up denominators
  CMat t(1, 1);
  t(0, 0) = CycElt(Rat(1, 7)) * (CycElt::gen(K5()) - conjugate(CycElt::gen(K5())));
  AlternatingForm E = trace_form(SkewHermitianForm(K5(), t));
  CHECK_FALSE(E.is_integral());
}

TEST_CASE("hermitian_from_symplectic roundtrip on quintic-std") {
  const auto& f = K5();
  auto L = HermitianLattice::quintic_std();
  CycElt eta = different_generator(f);
  CycElt xi = eta.inverse();
  CMat t = L.gram;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = xi * t(i, j);
  AlternatingForm E = trace_form(SkewHermitianForm(f, t));
  HermitianLattice rec = hermitian_from_symplectic(E, eta);
  CHECK(mat_eq(rec.gram, L.gram));
  CHECK(E.is_integral());  // the standard lattice is unimodular, E is integral

  // eta scaled by a torsion unit is no longer purely imaginary: rejected
  auto [m, u] = torsion_unit_group(f);
  CHECK_THROWS(hermitian_from_symplectic(E, u * eta));
  // eta scaled by 2 no longer generates the different: rejected
  CHECK_THROWS(hermitian_from_symplectic(E, CycElt(2) * eta));
  // E = 0 is degenerate: rejected
  RMat z = RMat::Zero(4, 4);
  AlternatingForm E0(f, 1, z);
  CHECK_THROWS(hermitian_from_symplectic(E0, eta));
  // shape mismatch: rejected
  CHECK_THROWS(AlternatingForm(f, 2, RMat::Zero(4, 4)));
}

TEST_CASE("numeric eigenprojection consistency (forms agree embedding-wise)") {
  std::mt19937_64 rng(31);
  const auto& f = K5();
  const int d = f.degree;
  for (int trial = 0; trial < 20; ++trial) {
    int rank = 1 + static_cast<int>(rng() % 3);
    SkewHermitianForm T = random_skew(f, rank, rng);
    AlternatingForm E = trace_form(T);
    const int n = E.zrank;

    Eigen::MatrixXcd C(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        C(i, j) = std::complex<double>(E.module_action(i, j).convert_to<double>(), 0.0);

    std::uniform_int_distribution<int> coord(-5, 5);
    Eigen::VectorXcd x(n), y(n);
    RVec xq(n), yq(n);
    for (int i = 0; i < n; ++i) {
      int a = coord(rng), b = coord(rng);
      xq(i) = a;
      yq(i) = b;
      x(i) = a;
      y(i) = b;
    }

    std::complex<double> total(0, 0);
    for (int idx = 0; idx < d; ++idx) {
      Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(n, n);
      std::complex<double> e_idx = f.roots[idx];
      for (int l = 0; l < d; ++l) {
        if (l == idx) continue;
        P = P * (C - f.roots[l] * Eigen::MatrixXcd::Identity(n, n)) / (e_idx - f.roots[l]);
      }
      Eigen::MatrixXcd B(n, rank);
      for (int i = 0; i < rank; ++i) B.col(i) = P.col(i * d);  // P * b_i
      Eigen::VectorXcd a = B.colPivHouseholderQr().solve(P * x);
      Eigen::VectorXcd b = B.colPivHouseholderQr().solve(P * y);
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
          std::complex<double> tphi = embed(T.gram(i, j), idx);
          total += tphi * a(i) * std::conj(b(j));
        }
    }
    Rat exact = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) exact += xq(i) * E.matrix(i, j) * yq(j);
    CHECK(std::abs(total - std::complex<double>(to_double(exact), 0)) < 1e-8);
  }
}
