#pragma once

#include "cmglue/eigen_support.hpp"

namespace cmglue {

// Hermite normal form of the row span: positive pivots, entries above a pivot
// reduced into [0, pivot); zero rows dropped.
ZMat row_hnf(ZMat a);

// basis of {x in Z^cols : a x = 0}, returned as columns
ZMat z_kernel(ZMat a);

// O_F-row reduction over Z[lambda] (norm-Euclidean); returns the nonzero rows
// of a triangularized generating set — a free basis of the row module.
QMat of_row_reduce(QMat a);

}  // namespace cmglue
