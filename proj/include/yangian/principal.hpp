// The Lie algebra gl(n) in the unit-matrix and principal bases.
//
// Conventions fixed here and used everywhere downstream:
//  - residues live in Z_n and are stored canonically in {0..n-1};
//  - matrix positions are 1-based in the API (unit_E(n, i, j), 1 <= i,j <= n);
//  - the principal basis element A_{ij} = sum_{k=1}^{n} w^{ik} E_{k, k+j}
//    runs its row index k from 1 to n, so A_{i0} = diag(w^i, w^{2i}, ..., w^{ni}).
//    The 0-based row convention would differ by a factor w^i and break the
//    dictionary identities used by the sl(3) module.
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yangian/matrix.hpp"

namespace yangian {

// Thrown when an identity that an operation promises to certify fails; both
// sides of the failed equality travel with the exception.
class verification_error : public std::runtime_error {
  public:
    verification_error(std::string msg, CycMat lhs, CycMat rhs)
        : std::runtime_error(std::move(msg)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}
    const CycMat& lhs() const { return lhs_; }
    const CycMat& rhs() const { return rhs_; }

  private:
    CycMat lhs_, rhs_;
};

// Reduces an arbitrary integer into {0..n-1}.
inline unsigned residue(long v, unsigned n) {
    long r = v % static_cast<long>(n);
    if (r < 0) r += n;
    return static_cast<unsigned>(r);
}

// Maps a residue to its 1-based matrix position: 0 -> n, r -> r otherwise.
inline unsigned residue_to_pos(unsigned r, unsigned n) { return r == 0 ? n : r; }

CycMat unit_E(unsigned n, unsigned i, unsigned j);  // 1-based, single 1 at (i,j)

CycMat principal_A(unsigned n, long i, long j);

// The cyclic shift E = sum_i E_{i,i+1} = A_{01}; its powers span the
// principal Cartan subalgebra.
CycMat principal_E(unsigned n);

struct GradedDecomposition {
    std::vector<CycMat> components;  // indexed by degree i in Z_n
};

// Component i keeps exactly the entries (k, l) with l - k = i (mod n).
GradedDecomposition principal_decompose(const CycMat& x);

// The gradation automorphism: sigma(x)_{k,l} = w^{l-k} x_{k,l}; each A_{ij}
// is an eigenvector with eigenvalue w^j.
CycMat apply_sigma(const CycMat& x);

Cyc trace_form(const CycMat& x, const CycMat& y);  // tr(xy)

// P = sum_{ij} E_{ij} (x) E_{ji} on V (x) V. With verify_principal_expansion
// the same operator is recomputed as sum_{kl} (w^{kl}/n) A_{kl} (x) A_{-k,-l}
// and exact equality is asserted.
CycMat permutation_P(unsigned n, bool verify_principal_expansion = false);

// Coefficients c_{kl} with x = sum c_{kl} A_{kl}, extracted through the
// trace-dual family: c_{kl} = (w^{kl}/n) tr(x * A_{-k,-l}).
std::map<std::pair<unsigned, unsigned>, Cyc> expand_in_principal(const CycMat& x);

// Unnormalized Fourier vector phi_i = sum_{k=1}^{n} w^{ik} v_k. The 1/sqrt(n)
// normalization is not rational, so pairings carry explicit n factors:
// dot(phi_i, phi_j) = n iff i + j = 0 (mod n), else 0.
CycVec fourier_vec(unsigned n, long i);

struct PrincipalActionResult {
    Cyc phase;        // w^{il}
    unsigned target;  // i + k (mod n)
};

// Certifies A_{kl} phi_i = w^{il} phi_{i+k} by exact computation and returns
// the phase and target index; throws verification_error on mismatch.
PrincipalActionResult principal_action(long k, long l, long i, unsigned n);

}  // namespace yangian
