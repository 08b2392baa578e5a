#include "jpair/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace jpair {
namespace linalg {

bool is_real(const Dense& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j).imag() != 0.0) return false;
    return true;
}

Dense identity(int n) { return Dense::Identity(n, n); }

namespace {

// Embeds a real SVD back into the complex carrier type.
SvdResult real_svd(const Dense& a) {
    Eigen::MatrixXd ar = a.real();
    Eigen::JacobiSVD<Eigen::MatrixXd> dec(
        ar, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out;
    out.u = dec.matrixU().cast<Complex>();
    out.sigma = dec.singularValues();
    out.w = dec.matrixV().transpose().cast<Complex>();
    return out;
}

SvdResult complex_svd(const Dense& a) {
    Eigen::JacobiSVD<Dense> dec(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out;
    out.u = dec.matrixU();
    out.sigma = dec.singularValues();
    out.w = dec.matrixV().adjoint();
    return out;
}

}  // namespace

SvdResult svd(const Dense& a) {
    SvdResult out = is_real(a) ? real_svd(a) : complex_svd(a);
    if (!out.sigma.allFinite())
        throw NumericalFailure("svd: singular values not finite");
    return out;
}

Complex det(const Dense& a) {
    if (a.rows() != a.cols())
        throw ContractViolation("det: matrix must be square");
    if (a.rows() == 0) return Complex(1.0, 0.0);
    if (a.rows() == 1) return a(0, 0);
    return Eigen::PartialPivLU<Dense>(a).determinant();
}

Dense solve(const Dense& a, const Dense& b) {
    if (a.rows() != a.cols())
        throw ContractViolation("solve: matrix must be square");
    if (a.rows() != b.rows())
        throw ContractViolation("solve: dimension mismatch");
    if (a.rows() == 0) return b;
    Eigen::FullPivLU<Dense> lu(a);
    const auto& um = lu.matrixLU();
    double smallest = um.diagonal().cwiseAbs().minCoeff();
    double threshold = kQuasiSingularRel * std::max(1e-300, a.norm());
    if (smallest < threshold)
        throw QuasiSingular("solve: matrix singular to tolerance", smallest);
    return lu.solve(b);
}

namespace {

// Unitary whose first column is the unit vector w (Householder completion).
Dense complete_unitary(const Eigen::VectorXcd& w) {
    const int n = static_cast<int>(w.size());
    Dense b = Dense::Identity(n, n);
    Eigen::VectorXcd v = w;
    // Reflect e1 onto w: choose the phase that avoids cancellation.
    Complex alpha = v(0);
    double anorm = std::abs(alpha);
    Complex phase = anorm > 0 ? alpha / anorm : Complex(1.0, 0.0);
    Eigen::VectorXcd h = v;
    h(0) += phase;
    double hn = h.norm();
    if (hn < 1e-300) return b;
    h /= hn;
    b -= 2.0 * (h * h.adjoint());
    // b maps e1 to -conj(phase) * w; pinning the first column to w itself
    // keeps b unitary (same span, unit norm) and the gauge explicit.
    b.col(0) = w;
    return b;
}

// One Takagi step: finds sigma and a unit vector w with m * conj(w) =
// sigma * w, where sigma is the largest singular value of the symmetric m.
void takagi_vector(const Dense& m, double& sigma, Eigen::VectorXcd& w) {
    // m * m^H is Hermitian PSD with eigenvalues sigma_i^2 (m symmetric).
    Eigen::SelfAdjointEigenSolver<Dense> es(m * m.adjoint());
    if (es.info() != Eigen::Success)
        throw NumericalFailure("symmetric_factor: eigensolver failed");
    const int n = static_cast<int>(m.rows());
    sigma = std::sqrt(std::max(0.0, es.eigenvalues()(n - 1)));
    Eigen::VectorXcd v = es.eigenvectors().col(n - 1);
    Eigen::VectorXcd t = m * v.conjugate();
    // Either t + sigma v or i (t - sigma v) is a Takagi vector; their squared
    // norms sum to 4 sigma^2, so the larger one is safe to normalize.
    Eigen::VectorXcd c1 = t + sigma * v;
    Eigen::VectorXcd c2 = Complex(0.0, 1.0) * (t - sigma * v);
    w = (c1.norm() >= c2.norm()) ? c1 : c2;
    double wn = w.norm();
    if (wn < 1e-300) {
        w = v;  // sigma == 0: direction is irrelevant for reconstruction
        return;
    }
    w /= wn;
}

}  // namespace

SymFactorResult symmetric_factor(const Dense& a) {
    if (a.rows() != a.cols())
        throw ContractViolation("symmetric_factor: matrix must be square");
    const int n = static_cast<int>(a.rows());
    double scale = std::max(1.0, a.norm());
    if ((a - a.transpose()).norm() > 1e-12 * scale)
        throw ContractViolation("symmetric_factor: matrix is not symmetric");

    SymFactorResult out;
    out.u = Dense::Identity(n, n);
    out.sigma = RealVector::Zero(n);
    if (n == 0) return out;

    // Deflation: extract the dominant Takagi pair, rotate it into the first
    // slot by a unitary congruence, recurse on the trailing block. Each
    // extracted sigma is the top singular value of the remaining block, so
    // the sequence comes out nonincreasing.
    Dense m = 0.5 * (a + a.transpose());
    Dense u = Dense::Identity(n, n);
    for (int k = 0; k < n; ++k) {
        const int rem = n - k;
        Dense mk = m.block(k, k, rem, rem);
        mk = 0.5 * (mk + mk.transpose()).eval();
        if (mk.norm() <= 1e-300) break;  // exact zero tail
        double sigma;
        Eigen::VectorXcd w;
        takagi_vector(mk, sigma, w);
        out.sigma(k) = sigma;
        Dense b = complete_unitary(w);
        m.block(k, k, rem, rem) = (b.adjoint() * mk * b.conjugate()).eval();
        m.block(k, k, rem, rem).row(0).setZero();
        m.block(k, k, rem, rem).col(0).setZero();
        m(k, k) = sigma;
        u.block(0, k, n, rem) = (u.block(0, k, n, rem) * b).eval();
    }

    // Roundoff can leave tiny inversions in the extraction order.
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        return out.sigma(i) > out.sigma(j);
    });
    SymFactorResult sorted;
    sorted.u = Dense(n, n);
    sorted.sigma = RealVector(n);
    for (int j = 0; j < n; ++j) {
        sorted.u.col(j) = u.col(idx[j]);
        sorted.sigma(j) = out.sigma(idx[j]);
    }
    out = sorted;

    double resid =
        (out.u * out.sigma.asDiagonal().toDenseMatrix().cast<Complex>() *
             out.u.transpose() -
         a)
            .norm();
    if (resid > 1e-9 * scale)
        throw NumericalFailure("symmetric_factor: reconstruction residual " +
                               std::to_string(resid));
    return out;
}

}  // namespace linalg
}  // namespace jpair
