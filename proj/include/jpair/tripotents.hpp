#pragma once

// Idempotents, tripotents and the Peirce machinery, principal inner ideals
// with their unital Jordan algebra structure, and generalized minors. The
// minor of an idempotent e at z is computed through the pair determinant,
//     minor_plus(e, z)  = Delta(e_plus - z, e_minus),
//     minor_minus(e, y) = Delta(e_plus, e_minus - y),
// which is exact and closed-form; no denominator extraction is involved.

#include <vector>

#include "jpair/pair.hpp"

namespace jpair {

/// Validated idempotent (e_plus, e_minus): Q_{e+} e- = e+ and Q_{e-} e+ = e-.
struct IdempotentPair {
    PairElement plus;
    PairElement minus;
};

/// Validates the defining identities (tolerance 1e-10, scaled by the cubic
/// backward-error unit of Q) and returns the pair.
IdempotentPair make_idempotent(const PairElement& plus,
                               const PairElement& minus);

/// Tripotent e: (e, involution(e)) is an idempotent; rank = number of
/// singular values above 1/2 (tripotent spectra are exactly {0, 1}).
struct Tripotent {
    PairElement e;  // side plus
    int rank = 0;

    IdempotentPair idempotent() const {
        return IdempotentPair{e, involution(e)};
    }
};

Tripotent make_tripotent(const PairElement& e);

/// Peirce projectors of an idempotent on one side, built by Lagrange
/// interpolation on the spectrum {0,1,2} of D = D_{e_plus,e_minus}:
///   P2 = D(D - Id)/2,  P1 = D(2 Id - D),  P0 = (D - Id)(D - 2 Id)/2.
struct PeirceDecomposition {
    EndoOp p2, p1, p0;

    PairElement component(const PairElement& z, int nu) const;
};

/// Materializes the projectors. Throws InvalidIdempotent when the spectrum
/// of D deviates from {0,1,2} by more than 1e-6.
PeirceDecomposition peirce(const IdempotentPair& e, Side side);

/// Applies the nu-th Peirce projector without materializing operators
/// (two D-applications); same polynomial as in PeirceDecomposition.
PairElement peirce_component(const IdempotentPair& e, const PairElement& z,
                             int nu);

/// Principal inner ideal [e_sigma] = Q_{e_sigma} V^{-sigma} = V_2^sigma(e),
/// a unital Jordan algebra with product x o y = {x, e_{-sigma}, y}/2 and
/// unit e_sigma. `basis` holds orthonormal coordinate columns spanning it.
struct PrincipalIdeal {
    IdempotentPair base;
    Side side = Side::Plus;
    Dense basis;  // dim x ideal_dim, orthonormal columns

    int ideal_dim() const { return static_cast<int>(basis.cols()); }
    const PairElement& unit() const {
        return side == Side::Plus ? base.plus : base.minus;
    }
    /// Distance of z to the ideal in coordinate norm.
    double residual(const PairElement& z) const;
};

PrincipalIdeal principal_ideal(const IdempotentPair& e, Side side);

/// x o y inside [e_sigma]; inputs must lie in the ideal (residual at most
/// 1e-8 * norm).
PairElement jordan_product(const PrincipalIdeal& ideal, const PairElement& x,
                           const PairElement& y);

/// Generalized minor of the idempotent e at z (side of z selects the
/// formula). Normalized so that the minor of e at e_sigma is 1.
Complex generalized_minor(const IdempotentPair& e, const PairElement& z);

/// Plus-side minor of a tripotent (the Delta_e(z) of the main inequality).
Complex generalized_minor(const Tripotent& e, const PairElement& z);

/// The 0/1 tripotent whose generalized minor is the classical (I, J)-minor.
/// I and J are strictly increasing 1-based index tuples with |I| = |J| = k;
/// the symmetric pair requires I == J so the payload stays symmetric.
Tripotent make_minor_tripotent(const PairDescriptor& d,
                               const std::vector<int>& I,
                               const std::vector<int>& J);

/// Block idempotent family: e_plus = [A 0; 0 0] with A invertible k x k and
/// e_minus = [A^{-1} B; C C*A*B]. All members with the same k share the
/// principal ideal [e_plus] (the top-left k x k block space). Shapes:
/// B is k x (r-k), C is (s-k) x k, matching e_minus in V^-.
IdempotentPair remark_family(const PairDescriptor& d, const Dense& A,
                             const Dense& B, const Dense& C);

int rank_of(const Tripotent& e);

/// e in V_0(c), tested as || e - P0(c) e || <= 1e-8 * ||e||.
bool strongly_orthogonal(const Tripotent& e, const Tripotent& c);

}  // namespace jpair
