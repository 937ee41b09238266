#include "cmglue/verify.hpp"

#include <Eigen/Dense>
#include <array>
#include <chrono>
#include <functional>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "cmglue/arrangement.hpp"
#include "cmglue/gluing.hpp"
#include "cmglue/hyperbolic.hpp"
#include "cmglue/involutions.hpp"
#include "cmglue/quintic_moduli.hpp"

namespace cmglue {

namespace {

const FieldDescriptor& K5() { return FieldDescriptor::cyclotomic(5); }

CVec unit_vec(int i) {
  CVec v = CVec::Zero(3);
  v(i) = CycElt(1);
  return v;
}

CMat identity3() {
  CMat m = CMat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) m(i, i) = CycElt(1);
  return m;
}

// random isometry of quintic-std: products of the (0,1)-swap and torsion
// diagonals
CMat random_isometry(std::mt19937_64& rng) {
  auto [m, tors] = torsion_unit_group(K5());
  std::uniform_int_distribution<int> tor(0, static_cast<int>(m) - 1), coin(0, 1);
  CMat g = identity3();
  for (int step = 0; step < 3; ++step) {
    if (coin(rng)) {
      CMat s = CMat::Zero(3, 3);
      s(0, 1) = CycElt(1);
      s(1, 0) = CycElt(1);
      s(2, 2) = CycElt(1);
      g = (g * s).eval();
    }
    CMat d = CMat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
      d(i, i) = CycElt(1);
      for (int t = tor(rng); t > 0; --t) d(i, i) *= tors;
    }
    g = (g * d).eval();
  }
  return g;
}

QuadElt qdet3(const QMat& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::pair<int, int> qmat_signature(const QMat& m, int psi) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).embed_at(psi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d);
  int pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (es.eigenvalues()(i) > 1e-9) ++pos;
    if (es.eigenvalues()(i) < -1e-9) ++neg;
  }
  return {pos, neg};
}

long matrix_order(const CMat& m, long cap) {
  CMat p = m;
  for (long k = 1; k <= cap; ++k) {
    if (mat_eq(p, identity3())) return k;
    p = (p * m).eval();
  }
  return cap + 1;
}

CycElt random_int_elt(const FieldDescriptor& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
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

struct Checker {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "FAILED: " << what;
    }
  }
  void note(const std::string& s) {
    detail << (detail.tellp() > 0 ? "; " : "") << s;
  }
};

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

void c1_signatures(Checker& c) {
  auto sig = signature(HermitianLattice::quintic_std());
  c.expect(sig.rs.size() == 2 && sig.rs[0] == std::pair<int, int>{2, 1} &&
               sig.rs[1] == std::pair<int, int>{3, 0},
           "signature(quintic-std) == ((2,1),(3,0))");
  c.note("signature ((2,1),(3,0))");
}

void c2_classification(Checker& c, unsigned long seed) {
  auto L = HermitianLattice::quintic_std();
  auto refs = reference_involutions(L);
  std::set<int> classes;
  for (size_t j = 0; j < refs.size(); ++j) {
    int cls = classify(refs[j]);
    classes.insert(cls);
    c.expect(classify(refs[j].negated()) == cls, "negated reference in same class");
  }
  c.expect(classes.size() == 3, "exactly 3 classes");
  auto [m, tors] = torsion_unit_group(K5());
  std::mt19937_64 rng(seed + 2);
  std::uniform_int_distribution<int> pick(0, 2), tor(0, static_cast<int>(m) - 1);
  int stable = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int j = pick(rng);
    CycElt u = CycElt::one(K5());
    for (int t = tor(rng); t > 0; --t) u *= tors;
    CMat scaled = refs[j].A;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) scaled(a, b) = u * scaled(a, b);
    AntiUnitaryInvolution alpha(L, std::move(scaled));
    if (classify(alpha.conjugated_by(random_isometry(rng))) == classify(refs[j])) ++stable;
  }
  c.expect(stable == 100, "100 seeded moves classify stably");
  c.note("3 classes, 100/100 stable");
}

void c3_fixed_forms(Checker& c) {
  auto L = HermitianLattice::quintic_std();
  auto refs = reference_involutions(L);
  const QuadElt neg_lam(0, -1), three_lam(3, 1);
  std::array<std::array<QuadElt, 3>, 3> models{{{QuadElt(1), QuadElt(1), neg_lam},
                                                {three_lam, QuadElt(1), neg_lam},
                                                {three_lam, three_lam, neg_lam}}};
  for (int j = 0; j < 3; ++j) {
    auto F = fixed_lattice(refs[j]);
    QMat model = QMat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) model(i, i) = models[j][i];
    c.expect(qdet3(F.gram).norm() == qdet3(model).norm(),
             "fixed gram determinant norm, j=" + std::to_string(j));
    for (int psi = 0; psi < 2; ++psi)
      c.expect(qmat_signature(F.gram, psi) == qmat_signature(model, psi),
               "fixed gram signature, j=" + std::to_string(j));
  }
  CycElt z = CycElt::gen(K5());
  CycElt theta = z - z.inverse();
  c.expect(as_quad(theta * conjugate(theta)) == QuadElt(3, 1), "|theta|^2 == 3 + lambda");
  c.note("det norms (1,5,25), signatures match, |theta|^2 = (5+sqrt5)/2");
}

void c4_saturation(Checker& c) {
  auto refs = reference_involutions(HermitianLattice::quintic_std());
  for (int j = 0; j < 3; ++j)
    c.expect(saturation_check(refs[j]), "saturation, j=" + std::to_string(j));
  c.expect(!saturation_check_scaled(refs[0], 2), "2*Lambda^alpha negative control");
  c.note("saturation holds, scale-2 control fails");
}

void c5_condition_star(Checker& c, int bound) {
  auto L = HermitianLattice::quintic_std();
  auto roots = enumerate_short_roots(L, bound);
  auto star = verify_condition_star(L, roots);
  c.expect(star.pass, "zero Condition (*) violations");
  c.expect(star.counts[RootRelation::intersecting_nonorthogonal] == 0,
           "no non-orthogonal intersecting pairs");
  if (bound == 2) {
    c.expect(roots.size() == 762, "762 roots at bound 2");
    c.expect(star.counts[RootRelation::orthogonal_intersecting] == 2081, "2081 orthogonal pairs");
    c.expect(star.counts[RootRelation::disjoint_or_boundary] == 287860, "287860 disjoint pairs");
  } else if (bound == 1) {
    c.expect(roots.size() == 130, "130 roots at bound 1");
    c.expect(star.counts[RootRelation::orthogonal_intersecting] == 329, "329 orthogonal pairs");
  }
  c.note(std::to_string(roots.size()) + " roots, " +
         std::to_string(star.counts[RootRelation::orthogonal_intersecting]) +
         " orthogonal pairs, 0 violations");
}

void c6_reflections(Checker& c) {
  auto L = HermitianLattice::quintic_std();
  CVec e0 = unit_vec(0), e1 = unit_vec(1);
  auto h0 = reflection(L, e0, 1), h1 = reflection(L, e1, 1);
  c.expect(matrix_order(h0.matrix, 12) == 10, "reflection(e0,1) has order 10");
  auto g = reflection_group(L, {e0, e1});
  c.expect(g.order() == 100, "|G(e0,e1)| == 100");
  c.expect(mat_eq((h0.matrix * h1.matrix).eval(), (h1.matrix * h0.matrix).eval()),
           "orthogonal reflections commute");
  c.note("order 10, |G| = 100, commutation exact");
}

void c7_local_models(Checker& c) {
  for (auto [a, b] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}}) {
    LocalModel model(2, 10, a, b);
    auto invs = involutions_at_center(model);
    long expect = 1;
    for (int i = 0; i < a + b; ++i) expect *= 10;
    c.expect(static_cast<long>(invs.size()) == expect,
             "involution count m^(a+b), a=" + std::to_string(a) + " b=" + std::to_string(b));
    auto comp = components_mod_Bf(model);
    long copies = 1;
    for (int i = 0; i < a; ++i) copies *= 10;
    c.expect(comp.copies == copies, "component count m^a");
    if (a == 1 && b == 0)
      c.expect(comp.intersection_dims.at(0) == 45, "10 copies meet pairwise at the center");
    if (expect <= 100) {
      auto eq = equivalence_relation_bruteforce(model);
      c.expect(eq.pass, "equivalence relation, a=" + std::to_string(a));
    }
  }
  c.note("counts m^(a+b)/m^a match, eqrel passes");
}

void c8_tg_representatives(Checker& c, unsigned long seed) {
  auto r = tg_representative(cplx(0.0, 3.0), 10);
  c.expect(r.first == 1 && std::abs(r.second - 3.0) < 1e-12, "3i -> (1,3) for m=10");
  std::mt19937_64 rng(seed + 8);
  std::uniform_real_distribution<double> rad(0.1, 5.0);
  int good = 0, total = 0;
  for (int m : {4, 6, 10}) {
    int a2 = 0;
    for (int mm = m; mm % 2 == 0; mm /= 2) ++a2;
    std::uniform_int_distribution<int> kd(0, 2 * m - 1);
    for (int trial = 0; trial < 334; ++trial) {
      ++total;
      cplx t = std::polar(rad(rng), pi * kd(rng) / m);
      auto rep = tg_representative(t, m);
      bool pass = true;
      for (int j = 0; j < m; ++j) {
        auto orb = tg_representative(t * std::polar(1.0, 2.0 * pi * j / m), m);
        if (orb.first != rep.first || std::abs(orb.second - rep.second) > 1e-9) pass = false;
      }
      cplx again = rep.first == 0 ? cplx(rep.second, 0.0)
                                  : std::polar(rep.second, pi / (1 << a2));
      auto rep2 = tg_representative(again, m);
      if (rep2.first != rep.first || std::abs(rep2.second - rep.second) > 1e-9) pass = false;
      if (pass) ++good;
    }
  }
  c.expect(good == total, "uniqueness and idempotence on seeded samples");
  c.note(std::to_string(good) + "/" + std::to_string(total) + " samples");
}

void c9_stabilizers(Checker& c, unsigned long seed) {
  const double lam = (std::sqrt(5.0) - 1.0) / 2.0;
  c.expect(std::abs(lam * (lam + 1.0) - 1.0) < 1e-15, "lambda(lambda+1) == 1");
  auto pt = [](double re, double im = 0.0) { return PPoint::affine({re, im}); };
  auto mk = [](std::vector<PPoint> v) { return make_config(std::move(v)); };
  c.expect(stabilizer(mk({pt(0), pt(-1), PPoint::infinity(), pt(lam + 1.0), pt(lam)}))
                   .group_type == GroupType::D5,
           "D5 at (0,-1,inf,lambda+1,lambda)");
  const double oms = std::sqrt(3.0) / 2.0;
  c.expect(stabilizer(mk({pt(-1), PPoint::infinity(), pt(0), pt(-0.5, oms), pt(-0.5, -oms)}))
                   .group_type == GroupType::D3,
           "D3 at (-1,inf,0,omega,omega^2)");
  c.expect(stabilizer(mk({PPoint::infinity(), pt(0, 1), pt(0, 1), pt(0, -1), pt(0, -1)}))
                   .group_type == GroupType::Z2,
           "Z2 at (inf,i,i,-i,-i)");
  c.expect(stabilizer(mk({pt(-1), pt(0), PPoint::infinity(), pt(2), pt(0.5)}))
                   .group_type == GroupType::Z2,
           "Z2 at (-1,0,inf,2,1/2)");
  std::mt19937 rng(static_cast<unsigned>(seed) + 9);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  std::uniform_int_distribution<int> pairs(0, 2);
  int checked = 0, classified = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int np = pairs(rng);
    std::vector<PPoint> pts;
    for (int i = 0; i < np; ++i) {
      double re = d(rng), im = std::abs(d(rng)) + 0.05;
      pts.push_back(pt(re, im));
      pts.push_back(pt(re, -im));
    }
    while (pts.size() < 5) pts.push_back(pt(d(rng)));
    auto cfg = make_config(std::move(pts));
    if (stability(cfg) == Stability::strictly_unstable) continue;
    ++checked;
    long o = stabilizer(cfg).order;  // throws outside the classification
    if (o == 1 || o == 2 || o == 6 || o == 10) ++classified;
  }
  c.expect(checked == classified, "500 seeded configurations stay in {1, Z2, D3, D5}");
  c.note(std::to_string(classified) + "/" + std::to_string(checked) + " random configs classified");
}

void c10_triangle(Checker& c) {
  auto spec = build_triangle(3, 5, 10);
  auto tangent = [&](const GeodesicLine& g, cplx z) -> cplx {
    if (g.vertical) return {0.0, 1.0};
    cplx rad = z - cplx(g.c, 0.0);
    return {-rad.imag(), rad.real()};
  };
  auto angle = [&](const GeodesicLine& a, const GeodesicLine& b, cplx z) {
    cplx u = tangent(a, z), v = tangent(b, z);
    double cs = (u.real() * v.real() + u.imag() * v.imag()) / (std::abs(u) * std::abs(v));
    double ang = std::acos(std::clamp(cs, -1.0, 1.0));
    return std::min(ang, pi - ang);
  };
  c.expect(std::abs(angle(spec.sides[0], spec.sides[1], spec.vertices[0]) - pi / 3) < 1e-10 &&
               std::abs(angle(spec.sides[0], spec.sides[2], spec.vertices[1]) - pi / 5) < 1e-10 &&
               std::abs(angle(spec.sides[1], spec.sides[2], spec.vertices[2]) - pi / 10) < 1e-10,
           "angles pi/3, pi/5, pi/10 within 1e-10");
  c.expect(verify_presentation(spec, 1e-9), "presentation relations within 1e-9");
  c.expect(std::abs(area(spec) - 11.0 * pi / 30.0) < 1e-9, "area == 11 pi/30");
  c.expect(std::abs(area_numeric(spec) - area(spec)) < 1e-6, "numeric area within 1e-6");
  c.expect(!takeuchi_is_arithmetic(3, 5, 10).arithmetic, "(3,5,10) non-arithmetic");
  c.note("angles/relations/area verified, non-arithmetic");
}

void c11_form_correspondences(Checker& c, unsigned long seed) {
  const auto& f = K5();
  std::mt19937_64 rng(seed + 11);
  int exact = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int rank = 1 + static_cast<int>(rng() % 3);
    SkewHermitianForm T = random_skew(f, rank, rng);
    AlternatingForm E = trace_form(T);
    if (mat_eq(skew_from_alternating(E).gram, T.gram) &&
        mat_eq(skew_from_alternating_dual(E).gram, T.gram))
      ++exact;
  }
  c.expect(exact == 50, "50 seeded trace/skew roundtrips exact");
  {
    auto L = HermitianLattice::quintic_std();
    CycElt eta = different_generator(f);
    CMat t = L.gram;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = eta.inverse() * t(i, j);
    AlternatingForm E = trace_form(SkewHermitianForm(f, t));
    c.expect(mat_eq(hermitian_from_symplectic(E, eta).gram, L.gram),
             "hermitian roundtrip on quintic-std");
    c.expect(E.is_integral(), "unimodular lattice gives integral E");
  }
  CycElt eta = different_generator(f);
  c.expect(conjugate(eta) == -eta, "different generator purely imaginary");
  Rat nrm = norm_Q(eta);
  c.expect(abs(numerator(nrm)) == 125 && denominator(nrm) == 1, "|N(eta)| == |disc| == 125");
  bool dual = true;
  for (int j = 0; j < f.degree; ++j) {
    Rat tr = trace_Q(eta.inverse() * CycElt::gen_pow(f, j));
    if (denominator(tr) != 1) dual = false;
  }
  c.expect(dual, "eta^-1 O_K is trace-dual integral");
  // numeric decomposition of the trace form into embedding-wise hermitian
  // pieces (eigenprojections of the module action)
  const int d = f.degree;
  int numeric_ok = 0;
  for (int trial = 0; trial < 5; ++trial) {
    int rank = 1 + static_cast<int>(rng() % 3);
    SkewHermitianForm T = random_skew(f, rank, rng);
    AlternatingForm E = trace_form(T);
    const int n = E.zrank;
    Eigen::MatrixXcd C(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        C(i, j) = cplx(E.module_action(i, j).convert_to<double>(), 0.0);
    std::uniform_int_distribution<int> coord(-5, 5);
    Eigen::VectorXcd x(n), y(n);
    RVec xq(n), yq(n);
    for (int i = 0; i < n; ++i) {
      int a = coord(rng), b = coord(rng);
      xq(i) = a; yq(i) = b; x(i) = a; y(i) = b;
    }
    cplx total(0, 0);
    for (int idx = 0; idx < d; ++idx) {
      Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(n, n);
      for (int l = 0; l < d; ++l) {
        if (l == idx) continue;
        P = P * (C - f.roots[l] * Eigen::MatrixXcd::Identity(n, n)) / (f.roots[idx] - f.roots[l]);
      }
      Eigen::MatrixXcd B(n, rank);
      for (int i = 0; i < rank; ++i) B.col(i) = P.col(i * d);
      Eigen::VectorXcd a = B.colPivHouseholderQr().solve(P * x);
      Eigen::VectorXcd b = B.colPivHouseholderQr().solve(P * y);
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
          total += embed(T.gram(i, j), idx) * a(i) * std::conj(b(j));
    }
    Rat want = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) want += xq(i) * E.matrix(i, j) * yq(j);
    if (std::abs(total - cplx(to_double(want), 0)) < 1e-8) ++numeric_ok;
  }
  c.expect(numeric_ok == 5, "numeric decomposition within 1e-8");
  c.note("roundtrips exact, |disc| = 125, numeric decomposition ok");
}

}  // namespace

VerifyReport verify_all(int bound, unsigned long seed) {
  struct Entry {
    int criterion;
    const char* name;
    double limit_seconds;
    std::function<void(Checker&)> run;
  };
  VerifyReport rep;
  rep.bound = bound;
  rep.seed = seed;
  std::vector<Entry> entries{
      {1, "shimura-signatures", 1.0, [&](Checker& c) { c1_signatures(c); }},
      {2, "involution-classification", 10.0, [&](Checker& c) { c2_classification(c, seed); }},
      {3, "fixed-forms", 5.0, [&](Checker& c) { c3_fixed_forms(c); }},
      {4, "saturation", 5.0, [&](Checker& c) { c4_saturation(c); }},
      {5, "condition-star", 600.0, [&](Checker& c) { c5_condition_star(c, bound); }},
      {6, "reflection-structure", 1.0, [&](Checker& c) { c6_reflections(c); }},
      {7, "gluing-local-models", 30.0, [&](Checker& c) { c7_local_models(c); }},
      {8, "tg-representatives", 1.0, [&](Checker& c) { c8_tg_representatives(c, seed); }},
      {9, "stabilizers", 120.0, [&](Checker& c) { c9_stabilizers(c, seed); }},
      {10, "triangle", 5.0, [&](Checker& c) { c10_triangle(c); }},
      {11, "form-correspondences", 10.0, [&](Checker& c) { c11_form_correspondences(c, seed); }},
  };
  rep.pass = true;
  for (auto& e : entries) {
    VerifyItem item;
    item.criterion = e.criterion;
    item.name = e.name;
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.note(std::string("EXCEPTION: ") + ex.what());
    }
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    item.pass = c.ok && item.seconds < e.limit_seconds;
    if (c.ok && item.seconds >= e.limit_seconds) c.note("over time budget");
    item.detail = c.detail.str();
    rep.pass = rep.pass && item.pass;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

std::string render_verify_report(const VerifyReport& r) {
  std::ostringstream os;
  os << "cm-glue verify-all bound=" << r.bound << " seed=" << r.seed << "\n";
  for (const auto& item : r.items)
    os << "criterion " << item.criterion << " [" << (item.pass ? "pass" : "FAIL") << "] "
       << item.name << ": " << item.detail << "\n";
  os << "verify-all: " << (r.pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace cmglue
