#include "cmglue/gluing.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>

namespace cmglue {

LocalModel::LocalModel(int n_, int m_, int a_, int b_) : n(n_), m(m_), a(a_), b(b_) {
  if (n < 1 || a < 0 || b < 0) throw std::runtime_error("LocalModel: bad parameters");
  if (m < 2 || m % 2 != 0) throw std::runtime_error("LocalModel: m must be even, >= 2");
  if (2 * a + b > n) throw std::runtime_error("LocalModel: k = 2a + b exceeds n");
}

bool LocalInvolution::squares_to_identity() const {
  for (int s = 0; s < n; ++s) {
    if (perm[perm[s]] != s) return false;
    if ((exps[s] - exps[perm[s]]) % m != 0) return false;
  }
  return true;
}

std::vector<std::complex<double>> LocalInvolution::apply(
    const std::vector<std::complex<double>>& t) const {
  std::vector<std::complex<double>> out(n);
  for (int s = 0; s < n; ++s) {
    double th = 2.0 * std::numbers::pi * exps[s] / m;
    out[s] = std::polar(1.0, th) * std::conj(t[perm[s]]);
  }
  return out;
}

MonomialMap compose(const LocalInvolution& a, const LocalInvolution& b) {
  if (a.n != b.n || a.m != b.m) throw std::runtime_error("compose: mismatched models");
  MonomialMap out;
  out.n = a.n;
  out.m = a.m;
  out.perm.resize(a.n);
  out.exps.resize(a.n);
  for (int s = 0; s < a.n; ++s) {
    out.perm[s] = b.perm[a.perm[s]];
    out.exps[s] = (((a.exps[s] - b.exps[a.perm[s]]) % a.m) + a.m) % a.m;
  }
  return out;
}

std::vector<LocalInvolution> involutions_at_center(const LocalModel& model) {
  const int slots = model.a + model.b;
  std::vector<LocalInvolution> out;
  std::vector<int> label(slots, 0);
  for (;;) {
    LocalInvolution inv;
    inv.n = model.n;
    inv.m = model.m;
    inv.label = label;
    inv.perm.resize(model.n);
    inv.exps.assign(model.n, 0);
    for (int s = 0; s < model.n; ++s) inv.perm[s] = s;
    for (int i = 0; i < model.a; ++i) {
      inv.perm[2 * i] = 2 * i + 1;
      inv.perm[2 * i + 1] = 2 * i;
      inv.exps[2 * i] = label[i];
      inv.exps[2 * i + 1] = label[i];
    }
    for (int i = 0; i < model.b; ++i) inv.exps[2 * model.a + i] = label[model.a + i];
    if (!inv.squares_to_identity())
      throw std::runtime_error("involutions_at_center: label does not square to identity");
    out.push_back(std::move(inv));
    int p = slots - 1;
    while (p >= 0 && ++label[p] == model.m) label[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

ComponentReport components_mod_Bf(const LocalModel& model) {
  ComponentReport rep;
  long copies = 1;
  for (int i = 0; i < model.a; ++i) copies *= model.m;
  rep.copies = copies;
  // copies are indexed by the complex-pair labels (Z/m)^a; two copies meet
  // along a B^{2c}(R) with c the number of agreeing slots
  std::vector<std::vector<int>> labels;
  std::vector<int> cur(model.a, 0);
  for (;;) {
    labels.push_back(cur);
    int p = model.a - 1;
    while (p >= 0 && ++cur[p] == model.m) cur[p--] = 0;
    if (p < 0) break;
  }
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j) {
      int c = 0;
      for (int s = 0; s < model.a; ++s)
        if (labels[i][s] == labels[j][s]) ++c;
      ++rep.intersection_dims[2 * c];
    }
  return rep;
}

int fixed_intersection_dim_bruteforce(const LocalInvolution& a, const LocalInvolution& b) {
  const int n = a.n;
  // real-linear constraints t_s = zeta^e conj(t_p) for both maps
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(4 * n, 2 * n);
  int row = 0;
  for (const LocalInvolution* inv : {&a, &b})
    for (int s = 0; s < n; ++s) {
      double th = 2.0 * std::numbers::pi * inv->exps[s] / inv->m;
      double co = std::cos(th), si = std::sin(th);
      int p = inv->perm[s];
      // Re: x_s - (co * x_p + si * y_p); Im: y_s - (si * x_p - co * y_p)
      c(row, s) += 1.0;     c(row, p) -= co;     c(row, n + p) -= si;     ++row;
      c(row, n + s) += 1.0; c(row, p) -= si;     c(row, n + p) += co;     ++row;
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(c);
  lu.setThreshold(1e-9);
  return 2 * n - static_cast<int>(lu.rank());
}

std::pair<int, double> tg_representative(std::complex<double> t, int m) {
  const double r = std::abs(t);
  if (r < 1e-12) return {0, 0.0};
  std::complex<double> tm = std::pow(t, m);
  if (std::abs(tm.imag()) > 1e-10 * std::abs(tm))
    throw std::runtime_error("tg_representative: t^m is not real");
  int a2 = 0;
  for (int mm = m; mm % 2 == 0; mm /= 2) ++a2;
  // representative form zeta_{2^{a2+1}}^eps * r, i.e. argument 0 or pi / 2^a2
  const double target = std::numbers::pi / static_cast<double>(1 << a2);
  const double tol = 1e-9;
  auto angdiff = [](double x, double y) {
    double d = std::remainder(x - y, 2.0 * std::numbers::pi);
    return std::abs(d);
  };
  std::pair<int, double> rep{0, 0.0};
  int matches = 0;
  for (int j = 0; j < m; ++j) {
    double ang = std::arg(t * std::polar(1.0, 2.0 * std::numbers::pi * j / m));
    if (angdiff(ang, 0.0) <= tol) { rep = {0, r}; ++matches; }
    else if (angdiff(ang, target) <= tol) { rep = {1, r}; ++matches; }
  }
  if (matches != 1) throw std::runtime_error("tg_representative: representative not unique");
  return rep;
}

EqRelReport equivalence_relation_bruteforce(const LocalModel& model) {
  auto invs = involutions_at_center(model);
  const int nl = static_cast<int>(invs.size());
  const int k = model.k();
  // membership of a o b in B_f: identity permutation, exponents supported on
  // the k node coordinates
  auto related = [&](int i, int j) {
    MonomialMap f = compose(invs[i], invs[j]);
    for (int s = 0; s < model.n; ++s)
      if (f.perm[s] != s) return false;
    for (int s = k; s < model.n; ++s)
      if (f.exps[s] != 0) return false;
    return true;
  };
  std::vector<std::vector<bool>> r(nl, std::vector<bool>(nl));
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j) r[i][j] = related(i, j);
  EqRelReport rep;
  rep.labels = nl;
  rep.reflexive = true;
  rep.symmetric = true;
  rep.transitive = true;
  for (int i = 0; i < nl; ++i) rep.reflexive = rep.reflexive && r[i][i];
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j) rep.symmetric = rep.symmetric && (r[i][j] == r[j][i]);
  for (int i = 0; i < nl && rep.transitive; ++i)
    for (int j = 0; j < nl && rep.transitive; ++j) {
      if (!r[i][j]) continue;
      for (int l = 0; l < nl; ++l)
        if (r[j][l] && !r[i][l]) { rep.transitive = false; break; }
    }
  rep.pass = rep.reflexive && rep.symmetric && rep.transitive;
  return rep;
}

const std::vector<CVec>& short_roots_bound2() {
  static const std::vector<CVec> roots =
      enumerate_short_roots(HermitianLattice::quintic_std(), 2);
  return roots;
}

namespace {

bool proportional_over_K(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) return false;
  int pivot = -1;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) { pivot = static_cast<int>(i); break; }
  if (pivot < 0) return false;
  if (b(pivot).is_zero()) return false;
  CycElt fac = b(pivot) * a(pivot).inverse();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (b(i) != fac * a(i)) return false;
  return true;
}

}  // namespace

bool glue_equivalent(const LabeledPoint& p, const LabeledPoint& q,
                     const std::vector<CVec>& incident_roots) {
  const auto& L = p.alpha.lattice;
  if (!is_quintic_std(L)) throw std::runtime_error("glue_equivalent: lattice is not quintic-std");
  if (!proportional_over_K(p.x, p.alpha.apply(p.x)) ||
      !proportional_over_K(q.x, q.alpha.apply(q.x)))
    throw std::runtime_error("glue_equivalent: point not fixed by its involution");
  for (size_t i = 0; i < incident_roots.size(); ++i) {
    if (!L.herm(p.x, incident_roots[i]).is_zero())
      throw std::runtime_error("glue_equivalent: root does not pass through the point");
    for (size_t j = i + 1; j < incident_roots.size(); ++j)
      if (!L.herm(incident_roots[i], incident_roots[j]).is_zero())
        throw std::runtime_error("glue_equivalent: incident roots not orthogonal");
  }
  // maximality against the bound-2 enumeration (larger roots could in
  // principle exist; bounded check by design)
  std::vector<CVec> canon;
  for (const auto& r : incident_roots) canon.push_back(canonical_root(L, r));
  for (const auto& t : short_roots_bound2()) {
    if (!L.herm(p.x, t).is_zero()) continue;
    bool known = false;
    for (const auto& c : canon)
      if (mat_eq(c, t)) { known = true; break; }
    if (!known) throw std::runtime_error("glue_equivalent: incident root set not maximal");
  }
  if (!proportional_over_K(p.x, q.x)) return false;
  CMat M = q.alpha.A * conjugate(p.alpha.A);  // beta o alpha, a linear isometry
  auto g = reflection_group(L, incident_roots);
  auto [m, gen] = torsion_unit_group(*L.field);
  CycElt u = CycElt::one(*L.field);
  for (long t = 0; t < m; ++t) {
    for (const auto& e : g.elements) {
      bool eq = true;
      for (int i = 0; i < L.rank && eq; ++i)
        for (int j = 0; j < L.rank; ++j)
          if (M(i, j) != u * e(i, j)) { eq = false; break; }
      if (eq) return true;
    }
    u = u * gen;
  }
  return false;
}

bool shared_locus_check(const AntiUnitaryInvolution& a, const AntiUnitaryInvolution& b,
                        const std::vector<CVec>& samples) {
  const auto& L = a.lattice;
  for (const auto& y : samples) {
    if (!proportional_over_K(y, a.apply(y)) || !proportional_over_K(y, b.apply(y))) continue;
    std::vector<CVec> incident;
    for (const auto& r : short_roots_bound2())
      if (L.herm(y, r).is_zero()) incident.push_back(r);
    if (!glue_equivalent({y, a}, {y, b}, incident)) return false;
  }
  return true;  // vacuous when no sample is fixed by both
}

}  // namespace cmglue
