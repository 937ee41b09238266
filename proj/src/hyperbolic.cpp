#include "cmglue/hyperbolic.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cmglue/cyclotomic.hpp"

namespace cmglue {

namespace {

constexpr double pi = std::numbers::pi;

// geodesic through z0 whose tangent there makes (euclidean) angle theta with
// the positive real axis
GeodesicLine geodesic_through(std::complex<double> z0, double theta) {
  GeodesicLine g;
  double c = std::cos(theta), s = std::sin(theta);
  if (std::abs(c) < 1e-14) {
    g.vertical = true;
    g.c = z0.real();
    return g;
  }
  // center on the real axis, radius vector perpendicular to the tangent
  g.c = z0.real() + z0.imag() * s / c;
  g.rho = std::abs(z0 - std::complex<double>(g.c, 0.0));
  return g;
}

double circle_y(const GeodesicLine& g, double x) {
  double d = g.rho * g.rho - (x - g.c) * (x - g.c);
  if (d < 0.0) d = 0.0;
  return std::sqrt(d);
}

bool proportional_to_identity(const Eigen::Matrix2d& m, double tol) {
  double scale = m.norm();
  return std::abs(m(0, 1)) <= tol * scale && std::abs(m(1, 0)) <= tol * scale &&
         std::abs(m(0, 0) - m(1, 1)) <= tol * scale;
}

}  // namespace

Eigen::Matrix2d reflection_matrix(const GeodesicLine& g) {
  // as a map of conj(z): vertical gives 2c - zbar, circle gives
  // c + rho^2/(zbar - c); both have negative determinant
  Eigen::Matrix2d m;
  if (g.vertical)
    m << -1.0, 2.0 * g.c, 0.0, 1.0;
  else
    m << g.c, g.rho * g.rho - g.c * g.c, 1.0, -g.c;
  return m;
}

TriangleGroupSpec build_triangle(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2) throw std::runtime_error("build_triangle: orders must be >= 2");
  // hyperbolic iff 1/p + 1/q + 1/r < 1, tested in integers
  if (static_cast<long>(q) * r + static_cast<long>(p) * r + static_cast<long>(p) * q >=
      static_cast<long>(p) * q * r)
    throw std::runtime_error("build_triangle: angle sum not hyperbolic");
  TriangleGroupSpec spec;
  spec.p = p;
  spec.q = q;
  spec.r = r;
  const double A = pi / p, B = pi / q, C = pi / r;
  // hyperbolic law of cosines: side between the angle-A and angle-B vertices
  double coshc = (std::cos(A) * std::cos(B) + std::cos(C)) / (std::sin(A) * std::sin(B));
  double s = std::exp(std::acosh(coshc));
  spec.vertices[0] = {0.0, 1.0};
  spec.vertices[1] = {0.0, s};
  spec.sides[0].vertical = true;
  spec.sides[0].c = 0.0;
  // angle A with the upward vertical at i, tilted toward x > 0
  spec.sides[1] = geodesic_through(spec.vertices[0], pi / 2 - A);
  // angle B with the downward vertical at i*s
  spec.sides[2] = geodesic_through(spec.vertices[1], B - pi / 2);
  const double c1 = spec.sides[1].c, r1 = spec.sides[1].rho;
  const double c2 = spec.sides[2].c, r2 = spec.sides[2].rho;
  double x3 = 0.5 * (c1 + c2) + 0.5 * (r1 * r1 - r2 * r2) / (c2 - c1);
  double y3 = circle_y(spec.sides[1], x3);
  spec.vertices[2] = {x3, y3};
  // consistency: the achieved angle at the third vertex
  double d = std::abs(c1 - c2);
  double cosC = (r1 * r1 + r2 * r2 - d * d) / (2.0 * r1 * r2);
  if (std::abs(std::acos(std::clamp(cosC, -1.0, 1.0)) - C) > 1e-9)
    throw std::runtime_error("build_triangle: inconsistent third angle");
  for (int i = 0; i < 3; ++i) spec.reflections[i] = reflection_matrix(spec.sides[i]);
  return spec;
}

bool verify_presentation(const TriangleGroupSpec& spec, double tol) {
  std::array<Eigen::Matrix2d, 3> R;
  for (int i = 0; i < 3; ++i) {
    double det = spec.reflections[i].determinant();
    if (det >= 0.0) return false;  // reflections reverse orientation
    R[i] = spec.reflections[i] / std::sqrt(-det);
    if (!proportional_to_identity(R[i] * R[i], tol)) return false;
  }
  // R_i acts on conj(z) and the matrices are real, so R_i R_j acts linearly
  const int order[3][3] = {{0, 1, spec.p}, {0, 2, spec.q}, {1, 2, spec.r}};
  for (const auto& [i, j, n] : order) {
    Eigen::Matrix2d prod = R[i] * R[j];  // det +1
    double tr = std::abs(prod.trace());
    if (tr >= 2.0 - 1e-12) return false;  // must be elliptic
    // rotation by 2 pi / n has |trace| = 2 cos(pi / n) in SL2
    if (std::abs(tr - 2.0 * std::cos(pi / n)) > tol) return false;
    Eigen::Matrix2d pw = Eigen::Matrix2d::Identity();
    for (int t = 0; t < n; ++t) pw = pw * prod;
    if (!proportional_to_identity(pw, tol)) return false;
  }
  return true;
}

double area(const TriangleGroupSpec& spec) {
  return pi - (pi / spec.p + pi / spec.q + pi / spec.r);
}

double area_numeric(const TriangleGroupSpec& spec) {
  // integrate dx dy / y^2 over the triangle; the inner integral is exact, and
  // the region is x-simple between the two circular sides
  const GeodesicLine& lo = spec.sides[1];
  const GeodesicLine& hi = spec.sides[2];
  const double x3 = spec.vertices[2].real();
  auto f = [&](double x) { return 1.0 / circle_y(lo, x) - 1.0 / circle_y(hi, x); };
  const int n = 200000;  // Simpson panels (even)
  const double h = x3 / n;
  double acc = f(0.0) + f(x3);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

namespace {

// image of x under zeta -> zeta^k
CycElt aut(const FieldDescriptor& f, const CycElt& x, long k) {
  CycElt out = CycElt::zero(f);
  for (size_t j = 0; j < x.coeffs.size(); ++j) {
    if (x.coeffs[j] == 0) continue;
    out += CycElt::from_rat(f, x.coeffs[j]) *
           CycElt::gen_pow(f, (static_cast<long>(j) * k) % f.n);
  }
  return out;
}

}  // namespace

TakeuchiResult takeuchi_is_arithmetic(int p, int q, int r) {
  build_triangle(p, q, r);  // validates hyperbolicity
  TakeuchiResult res;
  long N = std::lcm(std::lcm(2L * p, 2L * q), 2L * r);
  const FieldDescriptor& f = FieldDescriptor::cyclotomic(N);
  res.cyclotomic_n = N;
  auto two_cos = [&](int e) {
    long t = N / (2L * e);
    return CycElt::gen_pow(f, t) + CycElt::gen_pow(f, N - t);
  };
  CycElt l1 = two_cos(p), l2 = two_cos(q), l3 = two_cos(r);
  // generators of the invariant trace field k2
  std::array<CycElt, 4> gens{l1 * l1, l2 * l2, l3 * l3, l1 * l2 * l3};
  CycElt t = gens[0] + gens[1] + gens[2] + gens[3];
  res.trace_value = embed(t, 0).real();
  res.arithmetic = true;
  res.worst_conjugate = -std::numeric_limits<double>::infinity();
  for (size_t idx = 0; idx < f.units.size(); ++idx) {
    long k = f.units[idx];
    if (k == 1) continue;
    bool identity_on_k2 = true;
    for (const auto& g : gens)
      if (aut(f, g, k) != g) { identity_on_k2 = false; break; }
    if (identity_on_k2) continue;
    double val = embed(aut(f, t, k), 0).real();
    ++res.embeddings_checked;
    res.worst_conjugate = std::max(res.worst_conjugate, val);
    // each conjugate of lambda_i^2 lies in [0, 4] automatically (it is a
    // squared 2cos), so the criterion reduces to the trace sum staying < 4
    if (val >= 4.0) res.arithmetic = false;
  }
  return res;
}

}  // namespace cmglue
