#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmglue/arrangement.hpp"

using namespace cmglue;

namespace {

const FieldDescriptor& K5() { return FieldDescriptor::cyclotomic(5); }

CVec unit_vec(int i) {
  CVec v = CVec::Zero(3);
  v(i) = CycElt(1);
  return v;
}

CMat cmat_identity(int n) {
  CMat m = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = CycElt(1);
  return m;
}

std::vector<Rat> flat(const CVec& v) {
  std::vector<Rat> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    CycElt e = v(i).promoted(K5());
    out.insert(out.end(), e.coeffs.begin(), e.coeffs.end());
  }
  return out;
}

}  // namespace

TEST_CASE("short root enumeration at bound 1") {
  auto L = HermitianLattice::quintic_std();
  auto roots = enumerate_short_roots(L, 1);
  CHECK(roots.size() == 130);  // golden, fixed by exhaustive enumeration
  for (const auto& r : roots) CHECK(L.herm(r, r) == CycElt(1));
  // deterministic lex order on the canonical representatives
  for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(flat(roots[i]) < flat(roots[i + 1]));
  // e0 and e1 classes are present
  CVec c0 = canonical_root(L, unit_vec(0));
  CVec c1 = canonical_root(L, unit_vec(1));
  bool has0 = false, has1 = false;
  for (const auto& r : roots) {
    if (mat_eq(r, c0)) has0 = true;
    if (mat_eq(r, c1)) has1 = true;
  }
  CHECK(has0);
  CHECK(has1);
  CHECK(enumerate_short_roots(L, 0).empty());
}

TEST_CASE("canonical representatives collapse torsion orbits") {
  auto L = HermitianLattice::quintic_std();
  const auto& f = K5();
  auto [m, gen] = torsion_unit_group(f);
  CVec r(3);
  r(0) = CycElt::gen(f);
  r(1) = CycElt(0);
  r(2) = CycElt(0);
  CVec can = canonical_root(L, r);
  CycElt u = CycElt::one(f);
  for (long t = 0; t < m; ++t) {
    CVec s = r;
    for (int i = 0; i < 3; ++i) s(i) = u * s(i);
    CHECK(mat_eq(canonical_root(L, s), can));
    u = u * gen;
  }
}

TEST_CASE("reflections") {
  auto L = HermitianLattice::quintic_std();
  const auto& f = K5();
  CVec e0 = unit_vec(0);
  auto h = reflection(L, e0, 1);
  CHECK_FALSE(h.identity_warning);
  CycElt zeta10 = -CycElt::gen(f);  // the order-10 torsion generator
  CHECK(h.matrix(0, 0) == zeta10);
  CHECK(h.matrix(1, 1) == CycElt(1));
  CHECK(h.matrix(2, 2) == CycElt(1));
  CHECK(h.matrix(0, 1).is_zero());
  // order exactly 10
  CMat id = cmat_identity(3);
  CMat p = id;
  for (int t = 1; t <= 10; ++t) {
    p = (p * h.matrix).eval();
    if (t < 10) CHECK_FALSE(mat_eq(p, id));
  }
  CHECK(mat_eq(p, id));
  // h^i h^j = h^{i+j}
  auto h3 = reflection(L, e0, 3), h4 = reflection(L, e0, 4), h7 = reflection(L, e0, 7);
  CHECK(mat_eq((h3.matrix * h4.matrix).eval(), h7.matrix));
  auto h5 = reflection(L, e0, 5);
  CHECK(h5.matrix(0, 0) == CycElt(-1));
  auto h0 = reflection(L, e0, 0);
  CHECK(h0.identity_warning);
  CHECK(mat_eq(h0.matrix, id));
  CHECK_THROWS(reflection(L, unit_vec(2), 1));  // norm -lambda, not short
}

TEST_CASE("hyperplane relations") {
  auto L = HermitianLattice::quintic_std();
  const auto& f = K5();
  CVec e0 = unit_vec(0), e1 = unit_vec(1);
  CHECK(hyperplane_relation(L, e0, e1) == RootRelation::orthogonal_intersecting);
  CHECK(hyperplane_relation(L, e1, e0) == RootRelation::orthogonal_intersecting);
  CVec ze0 = e0;
  ze0(0) = CycElt::gen(f);
  CHECK(hyperplane_relation(L, e0, ze0) == RootRelation::equal);
  CHECK(hyperplane_relation(L, e0, e0) == RootRelation::equal);
  // a disjoint witness with tau_1(N sigma(N)) > 1 exists at bound 1
  auto roots = enumerate_short_roots(L, 1);
  bool found = false;
  for (size_t i = 0; i < roots.size() && !found; ++i)
    for (size_t j = i + 1; j < roots.size() && !found; ++j) {
      CycElt N = L.herm(roots[i], roots[j]);
      if (N.is_zero()) continue;
      QuadElt nn = as_quad(N * conjugate(N));
      if ((nn - QuadElt(1)).sign_at(0) > 0) {
        CHECK(hyperplane_relation(L, roots[i], roots[j]) == RootRelation::disjoint_or_boundary);
        found = true;
      }
    }
  CHECK(found);
}

TEST_CASE("condition (*) at bound 1") {
  auto L = HermitianLattice::quintic_std();
  auto roots = enumerate_short_roots(L, 1);
  auto rep = verify_condition_star(L, roots);
  CHECK(rep.pass);
  CHECK(rep.violations.empty());
  CHECK(rep.counts.at(RootRelation::equal) == 0);
  CHECK(rep.counts.at(RootRelation::orthogonal_intersecting) == 329);   // golden
  CHECK(rep.counts.at(RootRelation::intersecting_nonorthogonal) == 0);
  CHECK(rep.counts.at(RootRelation::disjoint_or_boundary) == 8056);     // golden
  auto vac = verify_condition_star(L, {});
  CHECK(vac.pass);
}

TEST_CASE("reflection groups") {
  auto L = HermitianLattice::quintic_std();
  CVec e0 = unit_vec(0), e1 = unit_vec(1);
  auto g2 = reflection_group(L, {e0, e1});
  CHECK(g2.m == 10);
  CHECK(g2.order() == 100);
  for (size_t i = 0; i < g2.elements.size(); ++i)
    for (size_t j = i + 1; j < g2.elements.size(); ++j)
      REQUIRE_FALSE(mat_eq(g2.elements[i], g2.elements[j]));
  auto g1 = reflection_group(L, {e0});
  CHECK(g1.order() == 10);
  auto g0 = reflection_group(L, {});
  CHECK(g0.order() == 1);
  // commuting generators, verified directly
  auto h0 = reflection(L, e0, 3), h1 = reflection(L, e1, 7);
  CHECK(mat_eq((h0.matrix * h1.matrix).eval(), (h1.matrix * h0.matrix).eval()));
  // non-orthogonal pair rejected
  auto roots = enumerate_short_roots(L, 1);
  for (size_t i = 0; i < roots.size(); ++i)
    if (!L.herm(roots[i], canonical_root(L, e0)).is_zero() &&
        hyperplane_relation(L, roots[i], e0) != RootRelation::equal) {
      CHECK_THROWS(reflection_group(L, {e0, roots[i]}));
      break;
    }
  CHECK_THROWS(reflection_group(L, {e0, e1, unit_vec(2)}));  // k > rank - 1
}

TEST_CASE("fixed locus sampling") {
  auto L = HermitianLattice::quintic_std();
  CVec e0 = unit_vec(0), e1 = unit_vec(1), e2 = unit_vec(2);
  CMat phi01 = (reflection(L, e0, 1).matrix * reflection(L, e1, 1).matrix).eval();
  CHECK(fixed_locus_check(L, phi01, {e0, e1}, {e2}));
  CMat phi0 = reflection(L, e0, 1).matrix;
  CVec x(3);
  x(0) = CycElt(1); x(1) = CycElt(0); x(2) = CycElt(1);
  CHECK(fixed_locus_check(L, phi0, {e0}, {x}));  // unfixed and off H_{e0}: consistent
  CHECK(fixed_locus_check(L, cmat_identity(3), {e0}, {x}));  // identity: vacuous
  // negative control: x lies on H_{e1} but is moved by the e0-reflection
  CHECK_FALSE(fixed_locus_check(L, phi0, {e1}, {x}));
}
