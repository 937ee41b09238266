#include "cmglue/arrangement.hpp"

#include <algorithm>

namespace cmglue {

namespace {

std::vector<Rat> flat_coeffs(const FieldDescriptor& f, const CVec& v) {
  std::vector<Rat> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    CycElt e = v(i).promoted(f);
    out.insert(out.end(), e.coeffs.begin(), e.coeffs.end());
  }
  return out;
}

CVec scaled(const FieldDescriptor& f, const CycElt& u, const CVec& v) {
  CVec w = v;
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = (u * w(i)).promoted(f);
  return w;
}

}  // namespace

CVec canonical_root(const HermitianLattice& L, const CVec& r) {
  const auto& f = *L.field;
  auto [m, gen] = torsion_unit_group(f);
  int pivot = -1;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (!r(i).is_zero()) { pivot = static_cast<int>(i); break; }
  if (pivot < 0) throw std::runtime_error("canonical_root: zero vector");
  CVec best = scaled(f, CycElt(1), r);
  std::vector<Rat> best_key = best(pivot).promoted(f).coeffs;
  CycElt u = CycElt::one(f);
  for (long t = 1; t < m; ++t) {
    u = u * gen;
    CycElt c = (u * r(pivot)).promoted(f);
    if (c.coeffs < best_key) {
      best_key = c.coeffs;
      best = scaled(f, u, r);
    }
  }
  return best;
}

std::vector<CVec> enumerate_short_roots(const HermitianLattice& L, int bound) {
  const auto& f = *L.field;
  if (!(f.is_cyclotomic() && f.n == 5))
    throw std::runtime_error("enumerate_short_roots: needs Q(zeta_5)");
  const int rank = L.rank;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (i != j && !L.gram(i, j).is_zero())
        throw std::runtime_error("enumerate_short_roots: gram must be diagonal");
  if (bound < 1) return {};
  // per-slot candidate coordinates, pruned by the definite embedding (Psi
  // index 1): weight * |x|^2 <= 1 there, decided exactly in O_F
  struct Cand { CycElt x; QuadElt contrib; };
  std::vector<std::vector<Cand>> cands(rank);
  const QuadElt one(1);
  for (int s = 0; s < rank; ++s) {
    QuadElt w = as_quad(L.gram(s, s));
    if (w.sign_at(1) <= 0)
      throw std::runtime_error("enumerate_short_roots: form not definite at tau_2");
    std::vector<Rat> c(4);
    for (int c0 = -bound; c0 <= bound; ++c0)
      for (int c1 = -bound; c1 <= bound; ++c1)
        for (int c2 = -bound; c2 <= bound; ++c2)
          for (int c3 = -bound; c3 <= bound; ++c3) {
            c[0] = c0; c[1] = c1; c[2] = c2; c[3] = c3;
            CycElt x(f, c);
            QuadElt contrib = w * as_quad(x * conjugate(x));
            if ((one - contrib).sign_at(1) >= 0)
              cands[s].push_back({std::move(x), std::move(contrib)});
          }
  }
  if (rank != 3) throw std::runtime_error("enumerate_short_roots: rank 3 only");
  // index the last slot by its exact contribution
  std::map<std::pair<Rat, Rat>, std::vector<int>> by_contrib;
  for (int i = 0; i < static_cast<int>(cands[2].size()); ++i)
    by_contrib[{cands[2][i].contrib.u, cands[2][i].contrib.v}].push_back(i);
  std::map<std::vector<Rat>, CVec> reps;
  for (const auto& a : cands[0]) {
    QuadElt rem1 = one - a.contrib;
    if (rem1.sign_at(1) < 0) continue;
    for (const auto& b : cands[1]) {
      QuadElt rem2 = rem1 - b.contrib;
      if (rem2.sign_at(1) < 0) continue;
      auto it = by_contrib.find({rem2.u, rem2.v});
      if (it == by_contrib.end()) continue;
      for (int i2 : it->second) {
        CVec r(3);
        r(0) = a.x; r(1) = b.x; r(2) = cands[2][i2].x;
        CVec can = canonical_root(L, r);
        std::vector<Rat> key = flat_coeffs(f, can);
        reps.emplace(std::move(key), std::move(can));
      }
    }
  }
  std::vector<CVec> out;
  out.reserve(reps.size());
  for (auto& [key, v] : reps) out.push_back(std::move(v));
  return out;
}

Reflection reflection(const HermitianLattice& L, const CVec& r, long i) {
  const auto& f = *L.field;
  auto [m, gen] = torsion_unit_group(f);
  if (L.herm(r, r) != CycElt(1)) throw std::runtime_error("reflection: root must have norm 1");
  Reflection out;
  out.root = r;
  out.exponent = ((i % m) + m) % m;
  out.identity_warning = (out.exponent == 0);
  CycElt zi = CycElt::one(f);
  for (long t = 0; t < out.exponent; ++t) zi = zi * gen;
  CycElt c = CycElt(1) - zi;
  CVec gr = L.gram * conjugate(r);  // h(e_j, r) = (G sigma(r))_j
  const int n = L.rank;
  CMat mat = CMat::Zero(n, n);
  for (int t = 0; t < n; ++t)
    for (int j = 0; j < n; ++j) {
      mat(t, j) = CycElt(t == j ? 1 : 0) - c * r(t) * gr(j);
      mat(t, j) = mat(t, j).promoted(f);
    }
  CMat lhs = mat.transpose() * L.gram * conjugate(mat);
  if (!mat_eq(lhs, L.gram)) throw std::runtime_error("reflection: isometry identity fails");
  out.matrix = std::move(mat);
  return out;
}

const char* relation_name(RootRelation rel) {
  switch (rel) {
    case RootRelation::equal: return "equal";
    case RootRelation::orthogonal_intersecting: return "orthogonal_intersecting";
    case RootRelation::intersecting_nonorthogonal: return "intersecting_nonorthogonal";
    case RootRelation::disjoint_or_boundary: return "disjoint_or_boundary";
  }
  return "?";
}

RootRelation hyperplane_relation(const HermitianLattice& L, const CVec& r, const CVec& t) {
  if (mat_eq(canonical_root(L, r), canonical_root(L, t))) return RootRelation::equal;
  CycElt N = L.herm(r, t);
  if (N.is_zero()) return RootRelation::orthogonal_intersecting;
  // interior intersection nonempty iff 1 - |N|^2 > 0 at the hyperbolic place
  QuadElt q = QuadElt(1) - as_quad(N * conjugate(N));
  return q.sign_at(0) > 0 ? RootRelation::intersecting_nonorthogonal
                          : RootRelation::disjoint_or_boundary;
}

StarReport verify_condition_star(const HermitianLattice& L, const std::vector<CVec>& roots) {
  StarReport rep;
  rep.counts[RootRelation::equal] = 0;
  rep.counts[RootRelation::orthogonal_intersecting] = 0;
  rep.counts[RootRelation::intersecting_nonorthogonal] = 0;
  rep.counts[RootRelation::disjoint_or_boundary] = 0;
  const int n = static_cast<int>(roots.size());
  // inputs are deduplicated canonical representatives, so pairs i < j are
  // distinct hyperplanes and the (expensive) equality test can be skipped
  auto fast_relation = [&](const CVec& r, const CVec& t) {
    CycElt N = L.herm(r, t);
    if (N.is_zero()) return RootRelation::orthogonal_intersecting;
    QuadElt q = QuadElt(1) - as_quad(N * conjugate(N));
    return q.sign_at(0) > 0 ? RootRelation::intersecting_nonorthogonal
                            : RootRelation::disjoint_or_boundary;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RootRelation rel = fast_relation(roots[i], roots[j]);
      ++rep.counts[rel];
      if (rel == RootRelation::intersecting_nonorthogonal) rep.violations.push_back({i, j});
    }
  rep.pass = rep.violations.empty();
  return rep;
}

ReflectionGroup reflection_group(const HermitianLattice& L, const std::vector<CVec>& roots) {
  const auto& f = *L.field;
  auto [m, gen] = torsion_unit_group(f);
  const int k = static_cast<int>(roots.size());
  if (k > L.rank - 1) throw std::runtime_error("reflection_group: too many roots");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (!L.herm(roots[i], roots[j]).is_zero())
        throw std::runtime_error("reflection_group: roots not orthogonal");
      if (mat_eq(canonical_root(L, roots[i]), canonical_root(L, roots[j])))
        throw std::runtime_error("reflection_group: repeated hyperplane");
    }
  ReflectionGroup g;
  g.m = m;
  g.roots = roots;
  const int n = L.rank;
  CMat id = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) id(i, i) = CycElt(1);
  // powers table per generator; also checks exponent m
  std::vector<std::vector<CMat>> pow(k);
  for (int i = 0; i < k; ++i) {
    CMat h = reflection(L, roots[i], 1).matrix;
    pow[i].push_back(id);
    for (long j = 1; j <= m; ++j) pow[i].push_back((pow[i].back() * h).eval());
    if (!mat_eq(pow[i][m], id)) throw std::runtime_error("reflection_group: generator order != m");
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!mat_eq((pow[i][1] * pow[j][1]).eval(), (pow[j][1] * pow[i][1]).eval()))
        throw std::runtime_error("reflection_group: generators do not commute");
  std::vector<long> idx(k, 0);
  for (;;) {
    CMat e = id;
    for (int i = 0; i < k; ++i) e = (e * pow[i][idx[i]]).eval();
    g.elements.push_back(std::move(e));
    int p = k - 1;
    while (p >= 0 && ++idx[p] == m) idx[p--] = 0;
    if (p < 0) break;
  }
  return g;
}

bool fixed_locus_check(const HermitianLattice& L, const CMat& phi,
                       const std::vector<CVec>& roots, const std::vector<CVec>& samples) {
  const int n = L.rank;
  bool is_id = true;
  for (int i = 0; i < n && is_id; ++i)
    for (int j = 0; j < n; ++j)
      if (phi(i, j) != CycElt(i == j ? 1 : 0)) { is_id = false; break; }
  if (is_id) return true;  // vacuous: every point fixed, nothing to test
  for (const auto& x : samples) {
    CVec fx = phi * x;
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (!x(i).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    CycElt fac = fx(pivot) * x(pivot).inverse();
    bool fixed = true;
    for (int i = 0; i < n; ++i)
      if (fx(i) != fac * x(i)) { fixed = false; break; }
    bool on_all = true;
    for (const auto& r : roots)
      if (!L.herm(x, r).is_zero()) { on_all = false; break; }
    if (fixed != on_all) return false;
  }
  return true;
}

}  // namespace cmglue
