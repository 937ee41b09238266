#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cmglue/gluing.hpp"

using namespace cmglue;

namespace {

CVec unit_vec(int i) {
  CVec v = CVec::Zero(3);
  v(i) = CycElt(1);
  return v;
}

}  // namespace

TEST_CASE("involution counts at the center") {
  CHECK(involutions_at_center(LocalModel(2, 10, 0, 0)).size() == 1);
  CHECK(involutions_at_center(LocalModel(2, 10, 1, 0)).size() == 10);
  CHECK(involutions_at_center(LocalModel(2, 10, 0, 2)).size() == 100);
  for (int m : {4, 6, 10})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; 2 * a + b <= 4; ++b) {
        auto invs = involutions_at_center(LocalModel(4, m, a, b));
        long expect = 1;
        for (int i = 0; i < a + b; ++i) expect *= m;
        REQUIRE(static_cast<long>(invs.size()) == expect);
        for (const auto& inv : invs) CHECK(inv.squares_to_identity());
        // distinct as maps
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& inv : invs) seen.insert({inv.perm, inv.exps});
        CHECK(seen.size() == invs.size());
      }
  CHECK_THROWS(LocalModel(2, 10, 1, 1));  // k = 3 > n
  CHECK_THROWS(LocalModel(2, 5, 1, 0));   // odd m
}

TEST_CASE("local involutions square to identity numerically") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (const auto& model : {LocalModel(2, 10, 1, 0), LocalModel(3, 10, 1, 1),
                            LocalModel(4, 6, 2, 0)}) {
    auto invs = involutions_at_center(model);
    for (size_t t = 0; t < invs.size(); t += 3) {
      std::vector<std::complex<double>> x(model.n);
      for (auto& z : x) z = {d(rng), d(rng)};
      auto y = invs[t].apply(invs[t].apply(x));
      for (int i = 0; i < model.n; ++i) CHECK(std::abs(y[i] - x[i]) < 1e-12);
    }
  }
}

TEST_CASE("component counts mod B_f") {
  auto r1 = components_mod_Bf(LocalModel(2, 10, 1, 0));
  CHECK(r1.copies == 10);
  REQUIRE(r1.intersection_dims.size() == 1);
  CHECK(r1.intersection_dims.at(0) == 45);  // all pairs meet at the center point
  auto r2 = components_mod_Bf(LocalModel(2, 10, 0, 1));
  CHECK(r2.copies == 1);
  CHECK(r2.intersection_dims.empty());
  auto r3 = components_mod_Bf(LocalModel(4, 10, 2, 0));
  CHECK(r3.copies == 100);
  CHECK(r3.intersection_dims.at(2) == 900);   // labels agreeing in exactly one slot
  CHECK(r3.intersection_dims.at(0) == 4050);
}

TEST_CASE("intersection dimensions against brute-force fixed sets") {
  // purely complex models: reported 2c plus the untouched (n - 2a) directions
  for (const auto& model : {LocalModel(2, 10, 1, 0), LocalModel(3, 10, 1, 0),
                            LocalModel(4, 10, 2, 0)}) {
    auto invs = involutions_at_center(model);
    for (size_t i = 0; i < invs.size(); i += 7)
      for (size_t j = i + 1; j < invs.size(); j += 13) {
        int c = 0;
        for (int s = 0; s < model.a; ++s)
          if (invs[i].label[s] == invs[j].label[s]) ++c;
        int dim = fixed_intersection_dim_bruteforce(invs[i], invs[j]);
        CHECK(dim == 2 * c + (model.n - 2 * model.a));
      }
  }
  // a single real node: fixed sets are lines through 0 in that coordinate
  auto invs = involutions_at_center(LocalModel(2, 10, 0, 1));
  CHECK(fixed_intersection_dim_bruteforce(invs[0], invs[0]) == 2);
  CHECK(fixed_intersection_dim_bruteforce(invs[0], invs[3]) == 1);
}

TEST_CASE("T/G representatives") {
  auto r = tg_representative({3.0, 0.0}, 10);
  CHECK(r.first == 0);
  CHECK(r.second == doctest::Approx(3.0));
  r = tg_representative({0.0, 3.0}, 10);
  CHECK(r.first == 1);
  CHECK(r.second == doctest::Approx(3.0));
  r = tg_representative({-5.0, 0.0}, 10);
  CHECK(r.first == 0);
  CHECK(r.second == doctest::Approx(5.0));
  CHECK_THROWS(tg_representative(std::polar(1.0, 0.3), 10));
  // constant on orbits and idempotent, seeded
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> rad(0.1, 5.0);
  for (int m : {4, 6, 10}) {
    std::uniform_int_distribution<int> kd(0, 2 * m - 1);
    for (int trial = 0; trial < 40; ++trial) {
      // t with t^m real: argument a multiple of pi/m
      double rr = rad(rng);
      int k = kd(rng);
      std::complex<double> t = std::polar(rr, std::numbers::pi * k / m);
      auto rep = tg_representative(t, m);
      for (int j = 0; j < m; ++j) {
        auto orb = tg_representative(t * std::polar(1.0, 2.0 * std::numbers::pi * j / m), m);
        CHECK(orb.first == rep.first);
        CHECK(orb.second == doctest::Approx(rep.second));
      }
      int a2 = 0;
      for (int mm = m; mm % 2 == 0; mm /= 2) ++a2;
      std::complex<double> again = rep.first == 0
          ? std::complex<double>(rep.second, 0.0)
          : std::polar(rep.second, std::numbers::pi / (1 << a2));
      auto rep2 = tg_representative(again, m);
      CHECK(rep2.first == rep.first);
      CHECK(rep2.second == doctest::Approx(rep.second));
    }
  }
}

TEST_CASE("gluing relation is an equivalence relation") {
  for (const auto& model : {LocalModel(2, 10, 1, 0), LocalModel(2, 10, 0, 2),
                            LocalModel(2, 10, 0, 0), LocalModel(4, 6, 2, 0),
                            LocalModel(3, 4, 1, 1)}) {
    auto rep = equivalence_relation_bruteforce(model);
    CHECK(rep.pass);
    CHECK(rep.reflexive);
    CHECK(rep.symmetric);
    CHECK(rep.transitive);
  }
}

TEST_CASE("lattice-level glue equivalence at the e2 line") {
  auto L = HermitianLattice::quintic_std();
  auto refs = reference_involutions(L);
  CVec e0 = unit_vec(0), e1 = unit_vec(1), e2 = unit_vec(2);
  std::vector<CVec> roots{e0, e1};
  LabeledPoint p{e2, refs[0]};
  CHECK(glue_equivalent(p, p, roots));  // reflexive
  auto h = reflection(L, e0, 1);
  LabeledPoint q{e2, AntiUnitaryInvolution(L, (h.matrix * refs[0].A).eval())};
  CHECK(glue_equivalent(p, q, roots));
  // a unitary outside G(e0, e1): the coordinate swap
  CMat s = CMat::Zero(3, 3);
  s(0, 1) = CycElt(1);
  s(1, 0) = CycElt(1);
  s(2, 2) = CycElt(1);
  LabeledPoint qq{e2, AntiUnitaryInvolution(L, (s * refs[0].A).eval())};
  CHECK_FALSE(glue_equivalent(p, qq, roots));
  // non-maximal root set rejected
  CHECK_THROWS(glue_equivalent(p, q, {e0}));
  // root not through the point rejected
  CHECK_THROWS(glue_equivalent(LabeledPoint{e1, refs[0]},
                               LabeledPoint{e1, refs[0]}, {e1}));
}

TEST_CASE("shared locus check") {
  auto L = HermitianLattice::quintic_std();
  auto refs = reference_involutions(L);
  auto h5 = reflection(L, unit_vec(0), 5);
  AntiUnitaryInvolution b(L, (h5.matrix * refs[0].A).eval());
  // common fixed locus of alpha_0 and h^5 alpha_0 lies inside H_{e0}
  CVec y1 = unit_vec(2);
  CVec y2(3);
  y2(0) = CycElt(0); y2(1) = CycElt(1); y2(2) = CycElt(2);
  CHECK(shared_locus_check(refs[0], b, {y1, y2}));
  CHECK(shared_locus_check(refs[0], refs[0], {y1}));
  // no common fixed sample: vacuous pass
  CVec z(3);
  z(0) = CycElt(1); z(1) = CycElt(1); z(2) = CycElt(1);
  CHECK(shared_locus_check(refs[0], refs[2], {z}));
}

TEST_CASE("elements acting as identity on a hyperplane are powers of its reflection") {
  auto L = HermitianLattice::quintic_std();
  CVec e0 = unit_vec(0), e1 = unit_vec(1), e2 = unit_vec(2);
  auto g = reflection_group(L, {e0, e1});
  auto h = reflection(L, e0, 1);
  std::vector<CMat> powers;
  CMat p = CMat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) p(i, i) = CycElt(1);
  for (int t = 0; t < 10; ++t) {
    powers.push_back(p);
    p = (p * h.matrix).eval();
  }
  long found = 0;
  for (const auto& e : g.elements) {
    // identity on H_{e0} = span(e1, e2)
    CVec a = e * e1, b = e * e2;
    if (!mat_eq(a, e1) || !mat_eq(b, e2)) continue;
    ++found;
    bool is_power = false;
    for (const auto& pw : powers)
      if (mat_eq(e, pw)) { is_power = true; break; }
    CHECK(is_power);
  }
  CHECK(found == 10);
}
