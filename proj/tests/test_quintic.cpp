#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/LU>
#include <cmath>
#include <random>

#include "cmglue/quintic_moduli.hpp"

using namespace cmglue;

namespace {

PPoint pt(double re, double im = 0.0) { return PPoint::affine({re, im}); }

RealConfiguration config5(std::initializer_list<PPoint> pts) {
  return make_config(std::vector<PPoint>(pts));
}

const double lam = (std::sqrt(5.0) - 1.0) / 2.0;

bool same_multiset(const RealConfiguration& a, const RealConfiguration& b, double tol = 1e-7) {
  std::vector<bool> used(5, false);
  for (const auto& p : a.points) {
    bool ok = false;
    for (int j = 0; j < 5; ++j)
      if (!used[j] && points_equal(p, b.points[j], tol)) { used[j] = true; ok = true; break; }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("roots of quintics") {
  // x^5 - x y^4 = x (x^2 - y^2)(x^2 + y^2)
  auto c = roots_of_quintic({1, 0, 0, 0, -1, 0});
  auto want = config5({pt(0), pt(1), pt(-1), pt(0, 1), pt(0, -1)});
  CHECK(same_multiset(c, want));
  auto inf5 = roots_of_quintic({0, 0, 0, 0, 0, 1});  // y^5
  for (const auto& p : inf5.points) CHECK(points_equal(p, PPoint::infinity()));
  auto mixed = roots_of_quintic({0, 0, 0, 1, 0, 0});  // x^2 y^3
  auto want2 = config5({pt(0), pt(0), PPoint::infinity(), PPoint::infinity(), PPoint::infinity()});
  CHECK(same_multiset(mixed, want2));
  CHECK_THROWS(roots_of_quintic({0, 0, 0, 0, 0, 0}));
}

TEST_CASE("stability and component index") {
  CHECK(stability(config5({pt(0), pt(1), pt(-1), pt(0, 1), pt(0, -1)})) == Stability::smooth);
  CHECK(stability(config5({pt(0), pt(0), PPoint::infinity(), PPoint::infinity(), pt(-1)})) ==
        Stability::stable);
  CHECK(stability(config5({pt(0), pt(0), pt(0), pt(1), PPoint::infinity()})) ==
        Stability::strictly_unstable);
  CHECK(component_index(config5({pt(0), pt(1), pt(-1), pt(2), PPoint::infinity()})) == 0);
  CHECK(component_index(config5({pt(0), pt(1), PPoint::infinity(), pt(0, 1), pt(0, -1)})) == 1);
  CHECK(component_index(config5({pt(-1), pt(0, 1), pt(0, -1), pt(0, 2), pt(0, -2)})) == 2);
  CHECK_THROWS(component_index(config5({pt(0), pt(0), pt(1), pt(2), pt(3)})));
}

TEST_CASE("mobius plumbing") {
  MobiusMap nu;  // z -> 1/z
  nu.m << 0.0, 1.0, 1.0, 0.0;
  auto c = config5({pt(0), PPoint::infinity(), pt(1), pt(2), pt(0.5)});
  auto img = apply_mobius(nu, c);
  CHECK(same_multiset(img, c));
  auto id = mobius_identity();
  CHECK(same_multiset(apply_mobius(id, c), c));
  // gamma: z -> ((lam+1) z - 1)/(z + 1) cycles the D5 orbit of 0
  MobiusMap gamma;
  gamma.m << lam + 1.0, -1.0, 1.0, 1.0;
  std::vector<PPoint> orbit{pt(0)};
  for (int i = 0; i < 4; ++i) orbit.push_back(apply_mobius(gamma, orbit.back()));
  CHECK(points_equal(orbit[1], pt(-1)));
  CHECK(points_equal(orbit[2], PPoint::infinity()));
  CHECK(points_equal(orbit[3], pt(lam + 1.0)));
  CHECK(points_equal(orbit[4], pt(lam)));
  CHECK(points_equal(apply_mobius(gamma, orbit[4]), pt(0)));
}

TEST_CASE("special stabilizers") {
  CHECK(std::abs(lam * (lam + 1.0) - 1.0) < 1e-15);  // lambda (lambda + 1) = 1
  auto d5 = stabilizer(config5({pt(0), pt(-1), PPoint::infinity(), pt(lam + 1.0), pt(lam)}));
  CHECK(d5.group_type == GroupType::D5);
  CHECK(d5.order == 10);
  const double om = -0.5, oms = std::sqrt(3.0) / 2.0;
  auto d3 = stabilizer(config5({pt(-1), PPoint::infinity(), pt(0), pt(om, oms), pt(om, -oms)}));
  CHECK(d3.group_type == GroupType::D3);
  CHECK(d3.order == 6);
  auto z2 = stabilizer(config5({PPoint::infinity(), pt(0, 1), pt(0, 1), pt(0, -1), pt(0, -1)}));
  CHECK(z2.group_type == GroupType::Z2);
  auto z2b = stabilizer(config5({pt(-1), pt(0), PPoint::infinity(), pt(2), pt(0.5)}));
  CHECK(z2b.group_type == GroupType::Z2);
  // its nontrivial element acts as nu: z -> 1/z
  auto g = z2b.generators.at(0);
  CHECK(points_equal(apply_mobius(g, pt(2)), pt(0.5)));
  CHECK(points_equal(apply_mobius(g, pt(-1)), pt(-1)));
  auto triv = stabilizer(config5({pt(0), pt(1), pt(-1), pt(2.5), PPoint::infinity()}));
  CHECK(triv.group_type == GroupType::trivial);
  // (0, 1, -1, 3, inf) looks generic but carries the hidden involution
  // z -> (3 - z)/(1 + z)
  auto hidden = stabilizer(config5({pt(0), pt(1), pt(-1), pt(3), PPoint::infinity()}));
  CHECK(hidden.group_type == GroupType::Z2);
}

TEST_CASE("stabilizer generators fix the configuration") {
  auto c = config5({pt(0), pt(-1), PPoint::infinity(), pt(lam + 1.0), pt(lam)});
  auto rep = stabilizer(c);
  for (const auto& g : rep.generators) CHECK(same_multiset(apply_mobius(g, c), c));
}

TEST_CASE("500 random stable configurations stay in the classification") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  std::uniform_int_distribution<int> pairs(0, 2);
  std::map<GroupType, int> histogram;
  for (int trial = 0; trial < 500; ++trial) {
    int np = pairs(rng);
    std::vector<PPoint> pts;
    for (int i = 0; i < np; ++i) {
      double re = d(rng), im = std::abs(d(rng)) + 0.05;
      pts.push_back(pt(re, im));
      pts.push_back(pt(re, -im));
    }
    while (pts.size() < 5) pts.push_back(pt(d(rng)));
    auto c = make_config(std::move(pts));
    if (stability(c) == Stability::strictly_unstable) continue;  // essentially impossible
    auto rep = stabilizer(c);
    ++histogram[rep.group_type];
    CHECK((rep.order == 1 || rep.order == 2 || rep.order == 6 || rep.order == 10));
  }
  CHECK(histogram[GroupType::trivial] > 400);  // generic configurations dominate
}

TEST_CASE("stabilizer equivariance and component invariance") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  auto c = config5({pt(0), pt(-1), PPoint::infinity(), pt(lam + 1.0), pt(lam)});
  auto c1 = config5({pt(0), pt(1), PPoint::infinity(), pt(0, 1), pt(0, -1)});
  for (int trial = 0; trial < 10; ++trial) {
    MobiusMap g;
    g.m << d(rng), d(rng), d(rng), d(rng);
    if (std::abs(g.m.determinant()) < 0.1) continue;
    CHECK(stabilizer(apply_mobius(g, c)).group_type == GroupType::D5);
    CHECK(component_index(apply_mobius(g, c1)) == 1);
  }
}
