#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "cmglue/cyclotomic.hpp"

// Eigen scalar plumbing for the exact types. CycElt is declared IsComplex = 0
// on purpose: Galois conjugation is not Eigen's conj(), we apply it explicitly.
namespace Eigen {

template <>
struct NumTraits<cmglue::CycElt> {
  using Real = cmglue::CycElt;
  using NonInteger = cmglue::CycElt;
  using Nested = cmglue::CycElt;
  using Literal = cmglue::CycElt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 30,
    MulCost = 100
  };
  static inline Real epsilon() { return cmglue::CycElt(0); }
  static inline Real dummy_precision() { return cmglue::CycElt(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<cmglue::QuadElt> {
  using Real = cmglue::QuadElt;
  using NonInteger = cmglue::QuadElt;
  using Nested = cmglue::QuadElt;
  using Literal = cmglue::QuadElt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 20
  };
  static inline Real epsilon() { return cmglue::QuadElt(0); }
  static inline Real dummy_precision() { return cmglue::QuadElt(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace cmglue {

using CMat = Eigen::Matrix<CycElt, Eigen::Dynamic, Eigen::Dynamic>;
using CVec = Eigen::Matrix<CycElt, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<QuadElt, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<QuadElt, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline CMat conjugate(const CMat& m) {
  CMat r = m;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) = conjugate(r(i, j));
  return r;
}

inline CVec conjugate(const CVec& v) {
  CVec r = v;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = conjugate(r(i));
  return r;
}

// elementwise equality; Eigen's operator== is unusable with boost scalars
template <typename DA, typename DB>
bool mat_eq(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

CycElt det_K(CMat m);        // exact determinant over K
CMat inverse_K(CMat m);      // exact inverse over K (throws if singular)
RMat inverse_Q(RMat m);      // exact rational inverse
QMat inverse_F(QMat m);      // exact inverse over Q(sqrt5)

}  // namespace cmglue
