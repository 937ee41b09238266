#include "cmglue/quintic_moduli.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cmglue {

namespace {

using cplx = std::complex<double>;

cplx cross(const PPoint& a, const PPoint& b) { return a.z * b.w - b.z * a.w; }

}  // namespace

PPoint::PPoint(cplx zz, cplx ww) : z(zz), w(ww) {
  double n = std::sqrt(std::norm(z) + std::norm(w));
  if (n < 1e-300) throw std::runtime_error("PPoint: zero vector");
  z /= n;
  w /= n;
}

bool PPoint::is_real(double tol) const { return std::abs(cross(*this, conj())) <= tol; }

bool points_equal(const PPoint& a, const PPoint& b, double tol) {
  return std::abs(cross(a, b)) <= tol;
}

RealConfiguration make_config(std::vector<PPoint> pts) {
  if (pts.size() != 5) throw std::runtime_error("RealConfiguration: need 5 points");
  // conjugation-closure: greedy multiset match against the conjugated list
  std::vector<bool> used(5, false);
  for (const auto& p : pts) {
    PPoint pc = p.conj();
    bool found = false;
    for (int j = 0; j < 5; ++j)
      if (!used[j] && points_equal(pc, pts[j], 1e-9)) { used[j] = true; found = true; break; }
    if (!found) throw std::runtime_error("RealConfiguration: not conjugation-closed");
  }
  return RealConfiguration{std::move(pts)};
}

MobiusMap mobius_identity() {
  MobiusMap g;
  g.m = Eigen::Matrix2cd::Identity();
  return g;
}

namespace {

// matrix sending (p1, p2, p3) to ((0:1), (1:1), (1:0))
Eigen::Matrix2cd to_standard(const std::array<PPoint, 3>& p) {
  cplx c1 = cross(p[1], p[2]);
  cplx c2 = cross(p[1], p[0]);
  Eigen::Matrix2cd m;
  m(0, 0) = p[0].w * c1;  m(0, 1) = -p[0].z * c1;
  m(1, 0) = p[2].w * c2;  m(1, 1) = -p[2].z * c2;
  if (std::abs(m.determinant()) < 1e-14)
    throw std::runtime_error("mobius_through: degenerate triple");
  return m;
}

Eigen::Matrix2cd inv2(const Eigen::Matrix2cd& m) {
  Eigen::Matrix2cd r;
  r(0, 0) = m(1, 1); r(0, 1) = -m(0, 1);
  r(1, 0) = -m(1, 0); r(1, 1) = m(0, 0);
  return r / m.determinant();
}

}  // namespace

MobiusMap mobius_through(const std::array<PPoint, 3>& p, const std::array<PPoint, 3>& q) {
  MobiusMap g;
  g.m = inv2(to_standard(q)) * to_standard(p);
  g.m /= g.m.norm();
  return g;
}

PPoint apply_mobius(const MobiusMap& g, const PPoint& p) {
  Eigen::Vector2cd v;
  v << p.z, p.w;
  Eigen::Vector2cd r = g.m * v;
  return PPoint(r(0), r(1));
}

RealConfiguration apply_mobius(const MobiusMap& g, const RealConfiguration& c) {
  RealConfiguration out;
  for (const auto& p : c.points) out.points.push_back(apply_mobius(g, p));
  return out;
}

const char* group_name(GroupType t) {
  switch (t) {
    case GroupType::trivial: return "trivial";
    case GroupType::Z2: return "Z2";
    case GroupType::D3: return "D3";
    case GroupType::D5: return "D5";
  }
  return "?";
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::smooth: return "smooth";
    case Stability::stable: return "stable";
    case Stability::strictly_unstable: return "strictly_unstable";
  }
  return "?";
}

RealConfiguration roots_of_quintic(const std::array<double, 6>& coeffs) {
  // coeffs[i] multiplies x^{5-i} y^i
  int lead = -1;
  for (int i = 0; i < 6; ++i)
    if (coeffs[i] != 0.0) { lead = i; break; }
  if (lead < 0) throw std::runtime_error("roots_of_quintic: zero polynomial");
  const int d = 5 - lead;  // degree of the dehomogenization p(x)
  std::vector<PPoint> pts;
  for (int i = 0; i < 5 - d; ++i) pts.push_back(PPoint::infinity());
  if (d > 0) {
    // monic p(x) = x^d + c_{d-1} x^{d-1} + ... + c_0
    std::vector<double> c(d);
    for (int i = 0; i < d; ++i) c[i] = coeffs[5 - i] / coeffs[lead];
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i + 1 < d; ++i) comp(i + 1, i) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
    for (int i = 0; i < d; ++i) {
      cplx r = es.eigenvalues()(i);
      // Newton polish
      for (int it = 0; it < 3; ++it) {
        cplx p = 1.0, dp = 0.0;
        for (int k = d - 1; k >= 0; --k) { dp = dp * r + p; p = p * r + c[k]; }
        if (std::abs(dp) > 1e-12) r -= p / dp;
      }
      pts.push_back(PPoint::affine(r));
    }
  }
  return make_config(std::move(pts));
}

namespace {

// distinct support points with multiplicities (clustering tolerance 1e-6)
std::vector<std::pair<PPoint, int>> support(const RealConfiguration& c) {
  std::vector<std::pair<PPoint, int>> out;
  for (const auto& p : c.points) {
    bool found = false;
    for (auto& [q, mult] : out)
      if (points_equal(p, q, 1e-6)) { ++mult; found = true; break; }
    if (!found) out.push_back({p, 1});
  }
  return out;
}

}  // namespace

Stability stability(const RealConfiguration& c) {
  int mx = 0;
  for (const auto& [p, mult] : support(c)) mx = std::max(mx, mult);
  if (mx == 1) return Stability::smooth;
  if (mx == 2) return Stability::stable;
  return Stability::strictly_unstable;
}

int component_index(const RealConfiguration& c) {
  if (stability(c) != Stability::smooth)
    throw std::runtime_error("component_index: configuration not smooth");
  int nonreal = 0;
  for (const auto& p : c.points)
    if (!p.is_real()) ++nonreal;
  if (nonreal % 2 != 0) throw std::runtime_error("component_index: unpaired nonreal point");
  return nonreal / 2;
}

namespace {

bool is_real_map(const Eigen::Matrix2cd& m, double tol = 1e-8) {
  // proportional to its entrywise conjugate: strip the phase of the largest
  // entry and check the imaginary parts
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(m(i, j)) > best) { best = std::abs(m(i, j)); bi = i; bj = j; }
  cplx phase = m(bi, bj) / best;
  Eigen::Matrix2cd r = m / phase;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(r(i, j).imag()) > tol) return false;
  return true;
}

// projective equality: Cauchy-Schwarz equality <=> proportional matrices
bool mobius_equal(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b, double tol = 1e-7) {
  cplx p = (b.adjoint() * a).trace();
  return std::abs(a.norm() * b.norm() - std::abs(p)) <= tol;
}

bool preserves(const MobiusMap& g, const std::vector<std::pair<PPoint, int>>& sup) {
  // the induced support map must be a multiplicity-preserving bijection;
  // without the used[] bookkeeping, near-degenerate transports that compress
  // several points onto one support point slip through
  std::vector<bool> used(sup.size(), false);
  for (const auto& [p, mult] : sup) {
    PPoint q = apply_mobius(g, p);
    bool ok = false;
    for (size_t t = 0; t < sup.size(); ++t)
      if (!used[t] && points_equal(q, sup[t].first, 1e-6) && sup[t].second == mult) {
        used[t] = true;
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

int projective_order(const Eigen::Matrix2cd& m, int cap = 12) {
  Eigen::Matrix2cd p = Eigen::Matrix2cd::Identity();
  for (int k = 1; k <= cap; ++k) {
    p = p * m;
    p /= p.norm();
    if (std::abs(p(0, 1)) < 1e-7 && std::abs(p(1, 0)) < 1e-7 &&
        std::abs(p(0, 0) - p(1, 1)) < 1e-7 * std::abs(p(0, 0)) + 1e-7)
      return k;
  }
  return cap + 1;
}

}  // namespace

StabilizerReport stabilizer(const RealConfiguration& c) {
  if (stability(c) == Stability::strictly_unstable)
    throw std::runtime_error("stabilizer: configuration not stable");
  auto sup = support(c);
  const int s = static_cast<int>(sup.size());
  if (s < 3) throw std::runtime_error("stabilizer: support too small");
  std::vector<MobiusMap> found;
  auto insert = [&](const MobiusMap& g) {
    for (const auto& h : found)
      if (mobius_equal(g.m, h.m)) return false;
    found.push_back(g);
    return true;
  };
  for (int i1 = 0; i1 < s; ++i1)
    for (int i2 = 0; i2 < s; ++i2)
      for (int i3 = 0; i3 < s; ++i3) {
        if (i1 == i2 || i1 == i3 || i2 == i3) continue;
        for (int j1 = 0; j1 < s; ++j1)
          for (int j2 = 0; j2 < s; ++j2)
            for (int j3 = 0; j3 < s; ++j3) {
              if (j1 == j2 || j1 == j3 || j2 == j3) continue;
              MobiusMap g = mobius_through({sup[i1].first, sup[i2].first, sup[i3].first},
                                           {sup[j1].first, sup[j2].first, sup[j3].first});
              if (!is_real_map(g.m)) continue;
              if (!preserves(g, sup)) continue;
              insert(g);
            }
      }
  // close under composition (a safety net; triple transport is already closed
  // for honest stabilizers)
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<MobiusMap> cur = found;
    for (const auto& a : cur)
      for (const auto& b : cur) {
        MobiusMap g;
        g.m = a.m * b.m;
        g.m /= g.m.norm();
        grew = insert(g) || grew;
      }
    if (found.size() > 60) throw std::runtime_error("stabilizer: closure runaway");
  }
  StabilizerReport rep;
  rep.order = static_cast<long>(found.size());
  int max_order = 1;
  MobiusMap rot = mobius_identity(), invol = mobius_identity();
  bool have_invol = false;
  for (const auto& g : found) {
    int o = projective_order(g.m);
    if (o > max_order) { max_order = o; rot = g; }
    if (o == 2 && !have_invol) { invol = g; have_invol = true; }
  }
  if (rep.order == 1) {
    rep.group_type = GroupType::trivial;
  } else if (rep.order == 2) {
    rep.group_type = GroupType::Z2;
    rep.generators = {invol};
    rep.matched_normal_form = "Z2";
  } else if (rep.order == 6 && max_order == 3) {
    rep.group_type = GroupType::D3;
    rep.generators = {rot, invol};
    rep.matched_normal_form = "D3";
  } else if (rep.order == 10 && max_order == 5) {
    rep.group_type = GroupType::D5;
    rep.generators = {rot, invol};
    rep.matched_normal_form = "D5";
  } else {
    throw std::runtime_error(
        "stabilizer: group outside {trivial, Z2, D3, D5} (order " +
        std::to_string(rep.order) + ") — falsifies the classification");
  }
  return rep;
}

}  // namespace cmglue
