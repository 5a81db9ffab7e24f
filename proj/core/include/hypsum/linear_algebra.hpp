#pragma once

#include <optional>
#include <vector>

#include "hypsum/rational_function.hpp"

namespace hypsum {

using RFMatrix = std::vector<std::vector<RationalFunction>>;
using RFVector = std::vector<RationalFunction>;

// Exact Gaussian elimination.  Returns one solution when the system is
// consistent (free variables set to zero), nullopt otherwise.
std::optional<RFVector> linear_solve(RFMatrix a, RFVector b);

// Basis of the kernel of the homogeneous system A x = 0.
std::vector<RFVector> kernel_basis(RFMatrix a);

} // namespace hypsum
