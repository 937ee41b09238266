#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmglue {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Exact description of K = Q(zeta_n) or an imaginary quadratic field.
// Instances are interned; compare by pointer.
struct FieldDescriptor {
  enum class Kind { Cyclotomic, ImaginaryQuadratic };

  Kind kind;
  long n = 0;          // conductor (cyclotomic)
  long disc = 0;       // fundamental discriminant (imaginary quadratic)
  int degree = 0;      // phi(n) or 2
  int torsion_order = 0;                 // m
  std::vector<long> units;               // cyclotomic: residues k coprime to n, ascending
  std::vector<std::complex<double>> roots;  // embedding idx -> image of the generator
  std::vector<int> cm_type;              // Psi: embedding indices, ascending

  // gen^degree = sum_i red[i] gen^i  (minimal polynomial, monic)
  std::vector<Int> red;
  // conj_cols[j] = power-basis coefficients of sigma(gen^j)
  std::vector<std::vector<Int>> conj_cols;
  // cyclotomic only: zeta_powers[t] = coefficients of zeta^t, t in [0, n)
  std::vector<std::vector<Int>> zeta_powers;

  static const FieldDescriptor& cyclotomic(long n);
  static const FieldDescriptor& imaginary_quadratic(long disc);

  bool is_cyclotomic() const { return kind == Kind::Cyclotomic; }
  std::string name() const;

 private:
  FieldDescriptor() = default;
  static FieldDescriptor* build_cyclotomic(long n);
  static FieldDescriptor* build_imaginary_quadratic(long disc);
};

// Element of K in the power basis of the generator; field == nullptr means a
// plain rational constant that promotes on contact with a field element.
struct CycElt {
  const FieldDescriptor* field = nullptr;
  std::vector<Rat> coeffs;

  CycElt() : coeffs{Rat(0)} {}
  CycElt(int v) : coeffs{Rat(v)} {}
  CycElt(const Rat& v) : coeffs{v} {}
  CycElt(const FieldDescriptor& f, std::vector<Rat> c);

  static CycElt zero(const FieldDescriptor& f);
  static CycElt one(const FieldDescriptor& f);
  static CycElt gen(const FieldDescriptor& f);           // zeta (or omega)
  static CycElt gen_pow(const FieldDescriptor& f, long t);
  static CycElt from_rat(const FieldDescriptor& f, const Rat& v);

  bool is_constant() const { return field == nullptr; }
  bool is_zero() const;
  bool is_integral() const;  // all coefficients have denominator 1

  CycElt promoted(const FieldDescriptor& f) const;

  friend CycElt operator+(const CycElt& a, const CycElt& b);
  friend CycElt operator-(const CycElt& a, const CycElt& b);
  friend CycElt operator*(const CycElt& a, const CycElt& b);
  friend CycElt operator-(const CycElt& a);
  friend bool operator==(const CycElt& a, const CycElt& b);
  friend bool operator!=(const CycElt& a, const CycElt& b) { return !(a == b); }
  CycElt& operator+=(const CycElt& b) { *this = *this + b; return *this; }
  CycElt& operator-=(const CycElt& b) { *this = *this - b; return *this; }
  CycElt& operator*=(const CycElt& b) { *this = *this * b; return *this; }

  CycElt inverse() const;   // throws on zero
  std::string str() const;  // short human-readable form
  friend std::ostream& operator<<(std::ostream& os, const CycElt& x) { return os << x.str(); }
};

CycElt conjugate(const CycElt& x);
Rat trace_Q(const CycElt& x);
// For x in the totally real subfield F: Tr_{F/Q}(x) = trace_Q(x)/2.
Rat trace_subfield_Q(const CycElt& x);
Rat norm_Q(const CycElt& x);  // N_{K/Q}(x), exact
std::complex<double> embed(const CycElt& x, int idx);

CycElt different_generator(const FieldDescriptor& f);
std::pair<long, CycElt> torsion_unit_group(const FieldDescriptor& f);

// exact sign of a + b*sqrt(5); returns -1, 0, or 1
int sign_sqrt5(const Rat& a, const Rat& b);

// Element u + v*lambda of F = Q(sqrt 5), lambda = zeta5 + zeta5^-1 = (sqrt5-1)/2.
struct QuadElt {
  Rat u, v;

  QuadElt() : u(0), v(0) {}
  QuadElt(int a) : u(a), v(0) {}
  QuadElt(Rat a, Rat b) : u(std::move(a)), v(std::move(b)) {}

  friend QuadElt operator+(const QuadElt& a, const QuadElt& b) { return {a.u + b.u, a.v + b.v}; }
  friend QuadElt operator-(const QuadElt& a, const QuadElt& b) { return {a.u - b.u, a.v - b.v}; }
  friend QuadElt operator-(const QuadElt& a) { return {-a.u, -a.v}; }
  friend QuadElt operator*(const QuadElt& a, const QuadElt& b) {
    // lambda^2 = 1 - lambda
    return {a.u * b.u + a.v * b.v, a.u * b.v + a.v * b.u - a.v * b.v};
  }
  friend bool operator==(const QuadElt& a, const QuadElt& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const QuadElt& a, const QuadElt& b) { return !(a == b); }
  QuadElt& operator+=(const QuadElt& b) { *this = *this + b; return *this; }
  QuadElt& operator-=(const QuadElt& b) { *this = *this - b; return *this; }
  QuadElt& operator*=(const QuadElt& b) { *this = *this * b; return *this; }

  QuadElt galois() const { return {u - v, -v}; }     // lambda -> -1-lambda
  Rat norm() const { return u * u - u * v - v * v; }
  bool is_zero() const { return u == 0 && v == 0; }
  bool is_integral() const;
  QuadElt inverse() const;
  // sign at the real embedding paired with Psi index 0 (lambda -> (sqrt5-1)/2)
  // or 1 (lambda -> -(sqrt5+1)/2)
  int sign_at(int psi_idx) const;
  double embed_at(int psi_idx) const;

  CycElt to_cyclotomic() const;  // image in Q(zeta_5)
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadElt& x) { return os << x.str(); }
};

// Euclidean division in Z[lambda]: returns (q, r), x = q*y + r, |N(r)| < |N(y)|.
std::pair<QuadElt, QuadElt> quad_divmod(const QuadElt& x, const QuadElt& y);

// A CycElt certified fixed by sigma, with exact (u + v*lambda) data for Q(zeta5).
struct RealElt {
  CycElt val;
  bool has_quad = false;
  QuadElt quad;

  RealElt() = default;
  explicit RealElt(const CycElt& x);  // throws if conjugate(x) != x
  int sign_at(int psi_idx) const;     // exact for Q(zeta5) and constants
  bool is_zero() const { return val.is_zero(); }
  std::string str() const { return has_quad ? quad.str() : val.str(); }
};

// x = u + v*lambda for real x in Q(zeta5) (throws otherwise)
QuadElt as_quad(const CycElt& x);

}  // namespace cmglue
