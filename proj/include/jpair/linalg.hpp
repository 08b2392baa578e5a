#pragma once

// Dense kernel shared by every Jordan operation: products, adjoints,
// determinants, linear solves, SVD and a Takagi-type factorization for
// complex symmetric matrices. Everything is double precision; matrices are
// Eigen dense matrices with complex entries (real data simply carries zero
// imaginary parts, and the kernel keeps it exactly real where that matters).

#include <Eigen/Dense>
#include <complex>

#include "jpair/errors.hpp"

namespace jpair {

using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

namespace linalg {

/// Smallest pivot of a full-pivot LU below this multiple of the Frobenius
/// norm means "singular to tolerance" (quasi-singularity threshold).
inline constexpr double kQuasiSingularRel = 1e-12;

/// True if every imaginary part is exactly zero.
bool is_real(const Dense& a);

struct SvdResult {
    Dense u;            // rows x rows unitary (orthogonal for real input)
    RealVector sigma;   // min(rows, cols) nonincreasing nonnegative
    Dense w;            // cols x cols unitary; a = u * diag(sigma) * w
};

/// Singular value decomposition a = u * diag(sigma) * w.
/// Real input yields real u, w. Throws NumericalFailure on non-convergence.
SvdResult svd(const Dense& a);

/// Determinant via pivoted LU (exact for sizes 0 and 1).
Complex det(const Dense& a);

/// Solves a * x = b. Throws QuasiSingular when the smallest LU pivot falls
/// below kQuasiSingularRel * ||a||_F.
Dense solve(const Dense& a, const Dense& b);

struct SymFactorResult {
    Dense u;            // n x n unitary
    RealVector sigma;   // nonincreasing nonnegative; a = u * diag(sigma) * u^T
};

/// Takagi-type factorization of a complex symmetric matrix, a = u diag(s) u^T.
/// Throws ContractViolation if a is not symmetric within 1e-12 * max(1,||a||).
SymFactorResult symmetric_factor(const Dense& a);

Dense identity(int n);

}  // namespace linalg
}  // namespace jpair
