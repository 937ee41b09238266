#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <string>
#include <vector>

namespace cmglue {

// point (z : w) of P^1(C), stored unit-normalized
struct PPoint {
  std::complex<double> z, w;

  PPoint() : z(0.0), w(1.0) {}
  PPoint(std::complex<double> zz, std::complex<double> ww);
  static PPoint affine(std::complex<double> v) { return PPoint(v, 1.0); }
  static PPoint infinity() { return PPoint(1.0, 0.0); }
  PPoint conj() const { return PPoint(std::conj(z), std::conj(w)); }
  bool is_real(double tol = 1e-8) const;
};

bool points_equal(const PPoint& a, const PPoint& b, double tol = 1e-8);

// 5-point multiset on P^1(C), closed under complex conjugation
struct RealConfiguration {
  std::vector<PPoint> points;
};

RealConfiguration make_config(std::vector<PPoint> pts);  // validates

struct MobiusMap {
  Eigen::Matrix2cd m;
};

MobiusMap mobius_identity();
// unique map sending the ordered triple (p1,p2,p3) to (q1,q2,q3)
MobiusMap mobius_through(const std::array<PPoint, 3>& p, const std::array<PPoint, 3>& q);
PPoint apply_mobius(const MobiusMap& g, const PPoint& p);
RealConfiguration apply_mobius(const MobiusMap& g, const RealConfiguration& c);

enum class Stability { smooth, stable, strictly_unstable };
enum class GroupType { trivial, Z2, D3, D5 };

const char* group_name(GroupType t);
const char* stability_name(Stability s);

struct StabilizerReport {
  GroupType group_type = GroupType::trivial;
  long order = 1;
  std::vector<MobiusMap> generators;
  std::string matched_normal_form;  // case tag, empty when trivial
};

// coeffs (a5, ..., a0) of a5 x^5 + a4 x^4 y + ... + a0 y^5
RealConfiguration roots_of_quintic(const std::array<double, 6>& coeffs);
Stability stability(const RealConfiguration& c);
int component_index(const RealConfiguration& c);  // conjugate pairs off P^1(R)
StabilizerReport stabilizer(const RealConfiguration& c);

}  // namespace cmglue
