#include "yangian/principal.hpp"

namespace yangian {

CycMat unit_E(unsigned n, unsigned i, unsigned j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("unit matrix index out of range");
    CycMat m(n, n, n);
    m.at(i - 1, j - 1) = Cyc::one(n);
    return m;
}

CycMat principal_A(unsigned n, long i, long j) {
    const unsigned ri = residue(i, n), rj = residue(j, n);
    CycMat m(n, n, n);
    for (unsigned k = 1; k <= n; ++k) {
        const unsigned col = residue(static_cast<long>(k + rj), n);
        m.at(k - 1, residue_to_pos(col, n) - 1) = Cyc::root(n, static_cast<long>(ri) * k);
    }
    return m;
}

CycMat principal_E(unsigned n) { return principal_A(n, 0, 1); }

GradedDecomposition principal_decompose(const CycMat& x) {
    if (!x.is_square()) throw std::invalid_argument("decomposition needs a square matrix");
    const unsigned n = static_cast<unsigned>(x.rows());
    GradedDecomposition d;
    d.components.assign(n, CycMat(x.order(), n, n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const unsigned deg = residue(static_cast<long>(l) - static_cast<long>(k), n);
            d.components[deg].at(k, l) = x.at(k, l);
        }
    return d;
}

CycMat apply_sigma(const CycMat& x) {
    if (!x.is_square()) throw std::invalid_argument("sigma needs a square matrix");
    const unsigned n = static_cast<unsigned>(x.rows());
    CycMat out(x.order(), n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (x.at(k, l).is_zero()) continue;
            out.at(k, l) = x.at(k, l) *
                Cyc::root(x.order(), static_cast<long>(l) - static_cast<long>(k));
        }
    return out;
}

Cyc trace_form(const CycMat& x, const CycMat& y) { return (x * y).trace(); }

CycMat permutation_P(unsigned n, bool verify_principal_expansion) {
    if (n < 2) throw std::invalid_argument("permutation operator needs n >= 2");
    CycMat p(n, n * n, n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            p.at(i * n + j, j * n + i) = Cyc::one(n);
    if (verify_principal_expansion) {
        CycMat alt(n, n * n, n * n);
        const Rat inv_n = rat(1, static_cast<long>(n));
        for (unsigned k = 0; k < n; ++k)
            for (unsigned l = 0; l < n; ++l) {
                const Cyc scale =
                    Cyc::root(n, static_cast<long>(k) * static_cast<long>(l)) * inv_n;
                alt += principal_A(n, k, l)
                           .kron(principal_A(n, -static_cast<long>(k), -static_cast<long>(l))) *
                       scale;
            }
        if (alt != p)
            throw verification_error("principal expansion of the permutation operator "
                                     "disagrees with the unit-matrix form", p, alt);
    }
    return p;
}

std::map<std::pair<unsigned, unsigned>, Cyc> expand_in_principal(const CycMat& x) {
    if (!x.is_square()) throw std::invalid_argument("expansion needs a square matrix");
    const unsigned n = static_cast<unsigned>(x.rows());
    const Rat inv_n = rat(1, static_cast<long>(n));
    std::map<std::pair<unsigned, unsigned>, Cyc> coeffs;
    for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l) {
            const Cyc c = trace_form(x, principal_A(n, -static_cast<long>(k),
                                                    -static_cast<long>(l))) *
                          Cyc::root(n, static_cast<long>(k) * static_cast<long>(l)) * inv_n;
            if (!c.is_zero()) coeffs.emplace(std::make_pair(k, l), c);
        }
    return coeffs;
}

CycVec fourier_vec(unsigned n, long i) {
    CycVec v(n, n);
    for (unsigned k = 1; k <= n; ++k) v.at(k - 1) = Cyc::root(n, i * k);
    return v;
}

PrincipalActionResult principal_action(long k, long l, long i, unsigned n) {
    const CycVec lhs = principal_A(n, k, l) * fourier_vec(n, i);
    const Cyc phase = Cyc::root(n, i * l);
    const unsigned target = residue(i + k, n);
    const CycVec rhs = fourier_vec(n, target) * phase;
    if (lhs != rhs) {
        CycMat lhs_col(n, n, 1), rhs_col(n, n, 1);
        for (unsigned r = 0; r < n; ++r) {
            lhs_col.at(r, 0) = lhs.at(r);
            rhs_col.at(r, 0) = rhs.at(r);
        }
        throw verification_error("principal action on a Fourier vector is not the "
                                 "expected phase shift", lhs_col, rhs_col);
    }
    return PrincipalActionResult{phase, target};
}

}  // namespace yangian
