#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

namespace osc {

// The Hilbert space is C(F_p): vectors indexed by x in [0, p), operators by
// pairs of such indices.
using StateVector = Eigen::VectorXcd;
using OperatorMatrix = Eigen::MatrixXcd;

// Kernel of an operator restricted to the z = 0 section of the Heisenberg
// group: entry (t, w) is the kernel value at v = (t, w).  The value at
// central coordinate z is recovered analytically as psi(-z) * K(v, 0).
using KernelTable = Eigen::MatrixXcd;

// Dense p x p paths (p^2 memory) are gated at this modulus by default.
inline constexpr std::size_t kDefaultDenseCap = 1499;

}  // namespace osc
