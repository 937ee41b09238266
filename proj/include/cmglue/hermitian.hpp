#pragma once

#include "cmglue/eigen_support.hpp"

namespace cmglue {

struct SignatureProfile {
  // (r, s) per embedding tau in Psi, in Psi order
  std::vector<std::pair<int, int>> rs;
  bool operator==(const SignatureProfile&) const = default;
};

struct QuadraticSpaceF5 {
  int dim = 0;
  Eigen::MatrixXi gram;  // entries in {0..4}, symmetric
};

struct HermitianLattice {
  const FieldDescriptor* field = nullptr;
  int rank = 0;
  CMat gram;  // h(b_i, b_j), linear in the first slot

  HermitianLattice() = default;
  HermitianLattice(const FieldDescriptor& f, CMat g);  // validates

  static HermitianLattice quintic_std();
  static HermitianLattice identity(const FieldDescriptor& f, int n);

  // h(x, y) = x^T gram sigma(y)
  CycElt herm(const CVec& x, const CVec& y) const;
};

struct AlternatingForm {
  const FieldDescriptor* field = nullptr;
  int rank = 0;    // O_K-rank
  int zrank = 0;   // rank * degree
  RMat matrix;     // E on the Z-basis {b_i zeta^j}, flat index i*degree + j
  ZMat module_action;  // multiplication by the field generator

  AlternatingForm() = default;
  AlternatingForm(const FieldDescriptor& f, int rank, RMat m);  // validates
  bool is_integral() const;
};

struct SkewHermitianForm {
  const FieldDescriptor* field = nullptr;
  int rank = 0;
  CMat gram;

  SkewHermitianForm() = default;
  SkewHermitianForm(const FieldDescriptor& f, CMat g);  // validates skew symmetry
};

AlternatingForm trace_form(const SkewHermitianForm& T);
SkewHermitianForm skew_from_alternating(const AlternatingForm& E);
// general trace-dual route (the closed p = 5 formula is the default for
// prime cyclotomic fields; this one works for every supported field)
SkewHermitianForm skew_from_alternating_dual(const AlternatingForm& E);
HermitianLattice hermitian_from_symplectic(const AlternatingForm& E, const CycElt& eta);

SignatureProfile signature(const HermitianLattice& L);
// (r, s) at an arbitrary embedding index: the pivot signs for tau in Psi, the
// transposed pair at the conjugate embedding (Hodge-side bookkeeping)
std::pair<int, int> signature_at(const HermitianLattice& L, int idx);
bool is_unimodular(const HermitianLattice& L);
QuadraticSpaceF5 reduce_mod_theta(const HermitianLattice& L);

// the ring map O_{Q(zeta5)} -> F5, zeta -> 1
int mod_theta(const CycElt& x);

// Z-linear matrix (zrank x zrank) of multiplication by a on the basis {b_i zeta^j}
ZMat z_linear_mult(const FieldDescriptor& f, int rank, const CycElt& a);

// small F5 helpers
int f5_det(Eigen::MatrixXi m);
Eigen::MatrixXi f5_kernel(Eigen::MatrixXi m);  // columns = kernel basis over F5

}  // namespace cmglue
