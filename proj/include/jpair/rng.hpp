#pragma once

// Seeded random streams for the test suites and the ascent restarts.
// Streams derived from (seed, index) are independent of scheduling, so a
// fixed seed and config always reproduce the same report byte for byte.
// Gaussians use an explicit Box-Muller transform instead of
// std::normal_distribution, whose output is implementation-defined.

#include <cmath>
#include <cstdint>
#include <random>

#include "jpair/linalg.hpp"

namespace jpair {

class RngStream {
public:
    explicit RngStream(std::uint64_t seed)
        : engine_(splitmix(seed)), seed_material_(seed) {}

    /// Child stream keyed by index; used for per-restart / per-sample streams.
    RngStream derive(std::uint64_t index) const {
        return RngStream(splitmix(seed_material_ +
                                  0x9E3779B97F4A7C15ull * (index + 1)));
    }

    std::uint64_t raw() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Standard complex normal (unit total variance).
    Complex cnormal() {
        double re = normal();
        double im = normal();
        return Complex(re, im) * 0.7071067811865475244;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    std::uint64_t seed_material_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

namespace rnd {

/// Dense matrix with iid standard normal entries (complex normal if complex).
inline Dense matrix(RngStream& rng, int rows, int cols, bool complex_field,
                    double scale = 1.0) {
    Dense m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = complex_field ? scale * rng.cnormal()
                                    : Complex(scale * rng.normal(), 0.0);
    return m;
}

/// Haar-distributed unitary (orthogonal if real) via QR of a Ginibre matrix
/// with the R-diagonal phase gauge fixed.
inline Dense unitary(RngStream& rng, int n, bool complex_field) {
    if (n == 0) return Dense(0, 0);
    Dense g = matrix(rng, n, n, complex_field);
    Eigen::HouseholderQR<Dense> qr(g);
    Dense q = qr.householderQ();
    Dense r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        Complex d = r(j, j);
        double ad = std::abs(d);
        q.col(j) *= (ad > 0) ? d / ad : Complex(1.0, 0.0);
    }
    return q;
}

/// Random complex (or real) symmetric matrix.
inline Dense symmetric(RngStream& rng, int n, bool complex_field,
                       double scale = 1.0) {
    Dense g = matrix(rng, n, n, complex_field, scale);
    return 0.5 * (g + g.transpose());
}

}  // namespace rnd
}  // namespace jpair
