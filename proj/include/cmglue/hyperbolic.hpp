#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <vector>

namespace cmglue {

struct HPoint {
  std::complex<double> z;
  bool boundary = false;
};

// geodesic of the upper half plane: vertical line Re = c, or half-circle
// (center c, radius rho)
struct GeodesicLine {
  bool vertical = false;
  double c = 0.0;
  double rho = 0.0;
};

// reflection across the geodesic, as the real matrix of z -> mobius(conj(z))
Eigen::Matrix2d reflection_matrix(const GeodesicLine& g);

struct TriangleGroupSpec {
  int p = 0, q = 0, r = 0;
  // sides[0] = imaginary axis through vertices[0] = i and vertices[1];
  // sides[1] through vertices[0] (angle pi/p), sides[2] through vertices[1]
  // (angle pi/q); angle pi/r at vertices[2]
  std::array<GeodesicLine, 3> sides;
  std::array<std::complex<double>, 3> vertices;
  std::array<Eigen::Matrix2d, 3> reflections;
};

TriangleGroupSpec build_triangle(int p, int q, int r);
bool verify_presentation(const TriangleGroupSpec& spec, double tol = 1e-9);
double area(const TriangleGroupSpec& spec);          // Gauss-Bonnet closed form
double area_numeric(const TriangleGroupSpec& spec);  // integrates dx dy / y^2

struct TakeuchiResult {
  bool arithmetic = false;
  long cyclotomic_n = 0;        // criterion evaluated inside Q(zeta_n)
  double trace_value = 0.0;     // lambda1^2 + lambda2^2 + lambda3^2 + lambda1 lambda2 lambda3
  double worst_conjugate = 0.0; // largest value over non-identity embeddings
  long embeddings_checked = 0;
};

TakeuchiResult takeuchi_is_arithmetic(int p, int q, int r);

}  // namespace cmglue
