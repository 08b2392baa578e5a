#pragma once

#include <string>

#include "jpair/errors.hpp"

namespace jpair {

/// Which concrete simple Jordan pair a value belongs to.
enum class PairKind {
    RectReal,     // (R^{r x s}, R^{s x r}), Q_x y = xyx
    RectComplex,  // (C^{r x s}, C^{s x r})
    SymComplex,   // (Sym_n(C), Sym_n(C))
};

enum class Side { Plus, Minus };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

/// Shape, rank and structure constant of a concrete pair. For rectangular
/// pairs the plus space is r x s with r <= s; for the symmetric pair both
/// sides are n x n symmetric (n = rows = cols).
struct PairDescriptor {
    PairKind kind = PairKind::RectReal;
    int rows = 1;  // r, or n for the symmetric pair
    int cols = 1;  // s, or n for the symmetric pair

    static PairDescriptor rectangular(int r, int s, bool complex_field) {
        if (r < 1 || s < 1 || r > s)
            throw ContractViolation("descriptor: need 1 <= r <= s");
        PairDescriptor d;
        d.kind = complex_field ? PairKind::RectComplex : PairKind::RectReal;
        d.rows = r;
        d.cols = s;
        return d;
    }

    static PairDescriptor symmetric(int n) {
        if (n < 1) throw ContractViolation("descriptor: need n >= 1");
        PairDescriptor d;
        d.kind = PairKind::SymComplex;
        d.rows = n;
        d.cols = n;
        return d;
    }

    bool is_symmetric_kind() const { return kind == PairKind::SymComplex; }
    bool is_complex() const { return kind != PairKind::RectReal; }

    int rank() const { return rows; }

    /// Exponent p in Det B(x,y) = Delta(x,y)^p. The values below are the
    /// ones certified by the Det-B oracle suite for these concrete pairs.
    int structure_constant() const {
        return is_symmetric_kind() ? rows + 1 : rows + cols;
    }

    /// Dimension of V^side over the pair's own field.
    int dim() const {
        return is_symmetric_kind() ? rows * (rows + 1) / 2 : rows * cols;
    }

    /// Payload shape of elements on a given side.
    int payload_rows(Side s) const { return s == Side::Plus ? rows : cols; }
    int payload_cols(Side s) const { return s == Side::Plus ? cols : rows; }

    std::string kind_name() const {
        switch (kind) {
            case PairKind::RectReal: return "rect-real";
            case PairKind::RectComplex: return "rect-complex";
            case PairKind::SymComplex: return "sym-complex";
        }
        return "?";
    }

    std::string to_string() const {
        if (is_symmetric_kind())
            return kind_name() + " n=" + std::to_string(rows);
        return kind_name() + " " + std::to_string(rows) + "x" +
               std::to_string(cols);
    }

    friend bool operator==(const PairDescriptor& a, const PairDescriptor& b) {
        return a.kind == b.kind && a.rows == b.rows && a.cols == b.cols;
    }
};

}  // namespace jpair
