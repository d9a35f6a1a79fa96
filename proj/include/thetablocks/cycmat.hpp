#pragma once

#include <cstddef>
#include <vector>

#include "thetablocks/cyclo.hpp"

namespace thetablocks {

/// Small dense square or rectangular matrix over the cyclotomic numbers.
using CycMat = std::vector<std::vector<CycNum>>;

namespace cycla {

CycMat identity(std::size_t n);
CycMat mul(const CycMat& a, const CycMat& b);
CycMat scale(const CycMat& a, const CycNum& s);
CycNum trace(const CycMat& a);
CycNum det(CycMat a);
/// Basis of {x : a x = 0}, each as a column vector.
std::vector<std::vector<CycNum>> nullspace(CycMat a);
bool is_zero(const CycMat& a);

}  // namespace cycla
}  // namespace thetablocks
