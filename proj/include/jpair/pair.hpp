#pragma once

// The Jordan pair operator calculus for the two concrete families shipped
// here: rectangular matrix pairs over R or C, and the complex symmetric pair.
// Both share the quadratic map Q_x y = x y x; everything else (triple
// product, D and Bergman operators, quasi-inverse, pair determinant, trace
// form, involution) is derived from it in pair-agnostic form.
//
// All values are immutable after construction and all operations are pure,
// so everything in this header is safe to use from multiple threads.

#include <Eigen/Dense>

#include "jpair/descriptor.hpp"
#include "jpair/linalg.hpp"

namespace jpair {

/// A point of V^+ or V^- of a concrete pair.
struct PairElement {
    PairDescriptor desc;
    Side side = Side::Plus;
    Dense m;  // payload; r x s (plus) / s x r (minus), or n x n symmetric

    PairElement() = default;
    PairElement(const PairDescriptor& d, Side s, Dense payload);

    double norm() const { return m.norm(); }
};

PairElement zero_element(const PairDescriptor& d, Side s);

PairElement operator+(const PairElement& a, const PairElement& b);
PairElement operator-(const PairElement& a, const PairElement& b);
PairElement operator*(Complex c, const PairElement& a);
PairElement operator*(double c, const PairElement& a);

/// Requires matching descriptor and side.
void check_same_space(const PairElement& a, const PairElement& b,
                      const char* who);

// --- coordinates -----------------------------------------------------------
// Fixed basis of V^side over the pair's field: E_ij enumerated row-major for
// rectangular payloads; E_ii and E_ij + E_ji (i < j) for the symmetric pair.

Eigen::VectorXcd to_coords(const PairElement& x);
PairElement from_coords(const PairDescriptor& d, Side s,
                        const Eigen::VectorXcd& c);
PairElement basis_element(const PairDescriptor& d, Side s, int index);

// --- operator calculus ------------------------------------------------------

/// A linear map on V^side, materialized on the coordinate basis.
struct EndoOp {
    PairDescriptor desc;
    Side side = Side::Plus;
    Dense op;  // dim x dim over the pair's field

    static EndoOp identity(const PairDescriptor& d, Side s);
    PairElement apply(const PairElement& x) const;
    Complex trace() const { return op.trace(); }
    Complex determinant() const { return linalg::det(op); }
};

/// Q_x y = x y x; sides must be opposite.
PairElement quadratic_map(const PairElement& x, const PairElement& y);

/// {x y z} = Q_{x+z} y - Q_x y - Q_z y (polarization; x, z on one side,
/// y on the other).
PairElement triple_product(const PairElement& x, const PairElement& y,
                           const PairElement& z);

/// D_{x,y}: z -> {x y z} as an operator on V^{x.side}.
EndoOp d_operator(const PairElement& x, const PairElement& y);

/// Bergman operator B(x,y) = Id - D_{x,y} + Q_x Q_y on V^{x.side}.
EndoOp bergman(const PairElement& x, const PairElement& y);

/// Quasi-inverse x^y = B(x,y)^{-1}(x - Q_x y).
/// Throws NotQuasiInvertible when B(x,y) is singular to tolerance.
PairElement quasi_inverse(const PairElement& x, const PairElement& y);

/// Jordan pair determinant Delta(x,y) = det(1 - x y), normalized to
/// Delta(0,0) = 1.
Complex pair_determinant(const PairElement& x, const PairElement& y);

/// Trace form tau(x,y) = Tr D_{x,y}.
Complex trace_form(const PairElement& x, const PairElement& y);

/// Positive involution: conjugate transpose for rectangular pairs (plain
/// transpose over R), entrywise conjugation for the symmetric pair. Flips
/// the side; applying it twice is the identity.
PairElement involution(const PairElement& z);

/// tau(u, involution(v)) — the sesquilinear inner product on V^side.
Complex inner_product(const PairElement& u, const PairElement& v);

/// The trace form as a cached bilinear Gram matrix on the coordinate bases,
/// T(j,k) = trace_form(basis_j^side, basis_k^opposite). Used by hot paths;
/// agreement with trace_form itself is a tested invariant.
const Dense& trace_gram(const PairDescriptor& d, Side side);

/// Fast bilinear evaluation of tau via the cached Gram matrix.
Complex trace_form_cached(const PairElement& x, const PairElement& y);

}  // namespace jpair
