#include "jpair/pair.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace jpair {

namespace {

void check_payload_shape(const PairDescriptor& d, Side s, const Dense& m) {
    if (m.rows() != d.payload_rows(s) || m.cols() != d.payload_cols(s))
        throw ContractViolation("pair element: payload shape mismatch for " +
                                d.to_string());
}

}  // namespace

PairElement::PairElement(const PairDescriptor& d, Side s, Dense payload)
    : desc(d), side(s), m(std::move(payload)) {
    check_payload_shape(d, s, m);
    if (d.is_symmetric_kind()) {
        double scale = std::max(1.0, m.norm());
        if ((m - m.transpose()).norm() > 1e-12 * scale)
            throw ContractViolation("pair element: symmetric pair payload "
                                    "is not symmetric");
        m = 0.5 * (m + m.transpose()).eval();  // keep the invariant exact
    }
    if (!d.is_complex() && !linalg::is_real(m))
        throw ContractViolation("pair element: real pair payload has "
                                "nonzero imaginary part");
}

PairElement zero_element(const PairDescriptor& d, Side s) {
    return PairElement(d, s,
                       Dense::Zero(d.payload_rows(s), d.payload_cols(s)));
}

void check_same_space(const PairElement& a, const PairElement& b,
                      const char* who) {
    if (!(a.desc == b.desc) || a.side != b.side)
        throw ContractViolation(std::string(who) +
                                ": elements live in different spaces");
}

PairElement operator+(const PairElement& a, const PairElement& b) {
    check_same_space(a, b, "operator+");
    return PairElement(a.desc, a.side, a.m + b.m);
}

PairElement operator-(const PairElement& a, const PairElement& b) {
    check_same_space(a, b, "operator-");
    return PairElement(a.desc, a.side, a.m - b.m);
}

PairElement operator*(Complex c, const PairElement& a) {
    if (!a.desc.is_complex() && c.imag() != 0.0)
        throw ContractViolation("scalar multiply: complex scalar on a real "
                                "pair element");
    return PairElement(a.desc, a.side, c * a.m);
}

PairElement operator*(double c, const PairElement& a) {
    return PairElement(a.desc, a.side, c * a.m);
}

// --- coordinates -------------------------------------------------------------

Eigen::VectorXcd to_coords(const PairElement& x) {
    const PairDescriptor& d = x.desc;
    Eigen::VectorXcd c(d.dim());
    if (!d.is_symmetric_kind()) {
        int rows = static_cast<int>(x.m.rows());
        int cols = static_cast<int>(x.m.cols());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) c(i * cols + j) = x.m(i, j);
        return c;
    }
    int n = d.rows;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) c(k++) = x.m(i, j);
    return c;
}

PairElement from_coords(const PairDescriptor& d, Side s,
                        const Eigen::VectorXcd& c) {
    if (c.size() != d.dim())
        throw ContractViolation("from_coords: wrong length");
    Dense m = Dense::Zero(d.payload_rows(s), d.payload_cols(s));
    if (!d.is_symmetric_kind()) {
        int cols = static_cast<int>(m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = c(i * cols + j);
        return PairElement(d, s, std::move(m));
    }
    int n = d.rows;
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m(i, j) = c(k);
            m(j, i) = c(k);
            ++k;
        }
    return PairElement(d, s, std::move(m));
}

PairElement basis_element(const PairDescriptor& d, Side s, int index) {
    if (index < 0 || index >= d.dim())
        throw ContractViolation("basis_element: index out of range");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(d.dim());
    c(index) = Complex(1.0, 0.0);
    return from_coords(d, s, c);
}

// --- operator calculus --------------------------------------------------------

EndoOp EndoOp::identity(const PairDescriptor& d, Side s) {
    return EndoOp{d, s, Dense::Identity(d.dim(), d.dim())};
}

PairElement EndoOp::apply(const PairElement& x) const {
    if (!(x.desc == desc) || x.side != side)
        throw ContractViolation("EndoOp::apply: wrong space");
    return from_coords(desc, side, op * to_coords(x));
}

PairElement quadratic_map(const PairElement& x, const PairElement& y) {
    if (!(x.desc == y.desc) || x.side == y.side)
        throw ContractViolation("quadratic_map: arguments must be on "
                                "opposite sides of one pair");
    return PairElement(x.desc, x.side, x.m * y.m * x.m);
}

PairElement triple_product(const PairElement& x, const PairElement& y,
                           const PairElement& z) {
    check_same_space(x, z, "triple_product");
    PairElement xz = x + z;
    PairElement q = quadratic_map(xz, y);
    return q - quadratic_map(x, y) - quadratic_map(z, y);
}

namespace {

// Materializes a linear map on V^side by applying it to the basis.
template <typename F>
EndoOp materialize(const PairDescriptor& d, Side s, F&& f) {
    const int n = d.dim();
    Dense op(n, n);
    for (int j = 0; j < n; ++j)
        op.col(j) = to_coords(f(basis_element(d, s, j)));
    return EndoOp{d, s, std::move(op)};
}

}  // namespace

EndoOp d_operator(const PairElement& x, const PairElement& y) {
    if (!(x.desc == y.desc) || x.side == y.side)
        throw ContractViolation("d_operator: arguments must be on opposite "
                                "sides of one pair");
    return materialize(x.desc, x.side, [&](const PairElement& z) {
        return triple_product(x, y, z);
    });
}

EndoOp bergman(const PairElement& x, const PairElement& y) {
    if (!(x.desc == y.desc) || x.side == y.side)
        throw ContractViolation("bergman: arguments must be on opposite "
                                "sides of one pair");
    EndoOp b = materialize(x.desc, x.side, [&](const PairElement& z) {
        return triple_product(x, y, z) - quadratic_map(x, quadratic_map(y, z));
    });
    b.op = Dense::Identity(b.op.rows(), b.op.cols()) - b.op;
    return b;
}

PairElement quasi_inverse(const PairElement& x, const PairElement& y) {
    EndoOp b = bergman(x, y);
    PairElement rhs = x - quadratic_map(x, y);
    try {
        Eigen::VectorXcd sol = linalg::solve(b.op, to_coords(rhs));
        return from_coords(x.desc, x.side, sol);
    } catch (const QuasiSingular& e) {
        throw NotQuasiInvertible("quasi_inverse: Bergman operator singular "
                                 "to tolerance",
                                 e.pivot());
    }
}

Complex pair_determinant(const PairElement& x, const PairElement& y) {
    if (!(x.desc == y.desc) || x.side == y.side)
        throw ContractViolation("pair_determinant: arguments must be on "
                                "opposite sides of one pair");
    const Dense& plus = x.side == Side::Plus ? x.m : y.m;
    const Dense& minus = x.side == Side::Plus ? y.m : x.m;
    int r = static_cast<int>(plus.rows());
    return linalg::det(Dense::Identity(r, r) - plus * minus);
}

Complex trace_form(const PairElement& x, const PairElement& y) {
    return d_operator(x, y).trace();
}

PairElement involution(const PairElement& z) {
    if (z.desc.is_symmetric_kind())
        return PairElement(z.desc, opposite(z.side), z.m.conjugate());
    if (z.desc.is_complex())
        return PairElement(z.desc, opposite(z.side), z.m.adjoint());
    return PairElement(z.desc, opposite(z.side), z.m.transpose());
}

Complex inner_product(const PairElement& u, const PairElement& v) {
    check_same_space(u, v, "inner_product");
    return trace_form_cached(u, involution(v));
}

namespace {

struct GramKey {
    PairKind kind;
    int rows, cols;
    Side side;
    bool operator<(const GramKey& o) const {
        return std::tie(kind, rows, cols, side) <
               std::tie(o.kind, o.rows, o.cols, o.side);
    }
};

std::map<GramKey, Dense>& gram_cache() {
    static std::map<GramKey, Dense> cache;
    return cache;
}

std::mutex& gram_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const Dense& trace_gram(const PairDescriptor& d, Side side) {
    GramKey key{d.kind, d.rows, d.cols, side};
    std::lock_guard<std::mutex> lock(gram_mutex());
    auto& cache = gram_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const int n = d.dim();
    Dense t(n, n);
    Side other = opposite(side);
    for (int j = 0; j < n; ++j) {
        PairElement bj = basis_element(d, side, j);
        for (int k = 0; k < n; ++k)
            t(j, k) = trace_form(bj, basis_element(d, other, k));
    }
    return cache.emplace(key, std::move(t)).first->second;
}

Complex trace_form_cached(const PairElement& x, const PairElement& y) {
    if (!(x.desc == y.desc) || x.side == y.side)
        throw ContractViolation("trace_form: arguments must be on opposite "
                                "sides of one pair");
    const Dense& t = trace_gram(x.desc, x.side);
    return to_coords(x).transpose() * t * to_coords(y);
}

}  // namespace jpair
