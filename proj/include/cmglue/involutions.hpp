#pragma once

#include "cmglue/hermitian.hpp"

namespace cmglue {

// semilinear involutive isometry x -> A * sigma(x)
struct AntiUnitaryInvolution {
  HermitianLattice lattice;
  CMat A;

  AntiUnitaryInvolution(HermitianLattice L, CMat a);  // validates
  CVec apply(const CVec& x) const;
  AntiUnitaryInvolution negated() const;
  // g alpha g^-1 for an O_K-isometry g of the lattice
  AntiUnitaryInvolution conjugated_by(const CMat& g) const;
};

struct InvolutionInvariant {
  enum class DetClass { square, nonsquare, zero };
  int dim_fixed = 0;
  DetClass det_class = DetClass::zero;
  bool operator==(const InvolutionInvariant&) const = default;
  bool operator<(const InvolutionInvariant& o) const {
    return std::pair(dim_fixed, static_cast<int>(det_class)) <
           std::pair(o.dim_fixed, static_cast<int>(o.det_class));
  }
};

struct FixedLattice {
  std::vector<CVec> basis;  // free O_F-basis of the fixed lattice, inside Lambda
  QMat gram;                // restriction of the hermitian form, O_F-valued
};

std::vector<AntiUnitaryInvolution> reference_involutions(const HermitianLattice& L);
InvolutionInvariant invariant(const AntiUnitaryInvolution& alpha);
int classify(const AntiUnitaryInvolution& alpha);
FixedLattice fixed_lattice(const AntiUnitaryInvolution& alpha);
bool saturation_check(const AntiUnitaryInvolution& alpha);
// negative control: run the saturation identity with scale * Lambda^alpha
bool saturation_check_scaled(const AntiUnitaryInvolution& alpha, int scale);

// Z-linear matrix of x -> A sigma(x) on the basis {b_i zeta^j}
ZMat z_linear_semilinear(const HermitianLattice& L, const CMat& A);

bool is_quintic_std(const HermitianLattice& L);

}  // namespace cmglue
