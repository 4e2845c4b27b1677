#pragma once

#include "fermatst/intmatrix.hpp"

namespace fermatst {

// In-place integral LLL reduction (all-integer Gram bookkeeping, Lovasz
// parameter 99/100).  Rows of B must be linearly independent.
void lll_reduce(ZMat& B);

}  // namespace fermatst
