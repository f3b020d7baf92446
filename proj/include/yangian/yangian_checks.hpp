// Exact verification of the Yangian structure in finite representations:
// the change of basis between the Cartan-Weyl and principal generator
// families, the Yang-Baxter and RTT identities with denominators cleared,
// and the quadratic principal relations checked against evaluation tables.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "yangian/bipoly.hpp"
#include "yangian/gen_table.hpp"

namespace yangian {

// The change-of-basis inverse has two implementations: the uniquely
// consistent one (row index i, column index i+l), and an index-transposed
// alternative kept so its round-trip failure stays demonstrable.
enum class IsoVariant { AsPrinted, Corrected };

// T_{ij}^{(m)} = sum_k w^{ik} S_{k, j-i}^{(m)} for every level m >= 1.
GenTable t_from_s(const GenTable& s);

// Corrected: S_{kl}^{(m)} = (1/n) sum_i w^{-ki} T_{i, i+l}^{(m)}.
// AsPrinted: same sum over T_{i+l, i}; composing it with t_from_s yields
// w^{kl} S_{k,-l} instead of the identity.
GenTable s_from_t(const GenTable& t, IsoVariant variant = IsoVariant::Corrected);

// Places an operator on V (x) V onto slots (slot_a, slot_b) of V (x) V (x) V
// (1-based slots), identity on the remaining slot.
CycMat embed_pair(const CycMat& x, unsigned n, unsigned slot_a, unsigned slot_b);

// Both sides of R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u) for
// R(w) = I - M/w, cleared by u (u+v) v. M defaults to the permutation
// operator; passing a generic matrix provides a negative control.
BiPolyMat qybe_residual_with(const CycMat& m, unsigned n);
BiPolyMat qybe_residual(unsigned n);

// Residual of R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v) with T(u) = u I + X on
// (module, auxiliary) pairs, R = (u-v) I - P on the two auxiliary slots;
// slot order is (module, aux1, aux2).
BiPolyMat rtt_residual(const CycMat& x, unsigned n);

// The standard evaluation generators t_{ij}(u) = delta_{ij} + E_{ij}/u, as
// the single operator X = sum_{ij} E_{ij} (x) e_{ij} on (module, auxiliary).
CycMat evaluation_X(unsigned n);

// Level-one families for the principal presentation acting on the vector
// module; higher levels vanish.
//   PrincipalDirect:  S_{ij}^{(1)} = A_{ij}
//   PermutationDual:  S_{kl}^{(1)} = (w^{kl}/n) A_{-k,-l}, the coefficients
//                     of the permutation operator in the dual expansion.
enum class EvalTableVariant { PrincipalDirect, PermutationDual };

GenTable principal_evaluation_table(unsigned n, EvalTableVariant variant,
                                    unsigned depth = 3);

// Candidate exponent conventions for the quadratic sums of the principal
// relations; exactly one annihilates the PermutationDual table.
//   MixedJB:  e1 = (i-i')b - ab,  e2 = (j-j')b + ab
//   MixedJA:  e1 = (i-i')b - ab,  e2 = (j-j')a + ab
//   Uniform:  e1 = e2 = (i-i')b - ab
enum class ExponentVariant { MixedJB, MixedJA, Uniform };

std::string to_string(ExponentVariant v);
std::string to_string(EvalTableVariant v);
std::string to_string(IsoVariant v);
ExponentVariant exponent_variant_from_string(const std::string& s);
EvalTableVariant eval_table_variant_from_string(const std::string& s);
IsoVariant iso_variant_from_string(const std::string& s);

// [S_{ij}^{(l+1)}, S_{i'j'}^{(m)}] - [S_{ij}^{(l)}, S_{i'j'}^{(m+1)}]
//   - sum_{a,b} (w^{e1}/n) S_{i'+a,j'+b}^{(l)} S_{i-a,j-b}^{(m)}
//   + sum_{a,b} (w^{e2}/n) S_{i'+a,j'+b}^{(m)} S_{i-a,j-b}^{(l)}
// with (e1, e2) selected by the variant. Zero iff the relation holds.
CycMat principal_relation_residual(const GenTable& s, unsigned l, unsigned m,
                                   const std::array<long, 4>& idx,
                                   ExponentVariant variant);

struct RelationFailure {
    unsigned l, m;
    std::array<unsigned, 4> idx;
    CycMat residual;
};

struct RelationSweepReport {
    std::string check;
    unsigned n = 0;
    unsigned depth = 0;
    std::string variant;
    std::string table;
    std::size_t indices_tested = 0;
    std::vector<RelationFailure> failures;
    bool passed() const { return failures.empty(); }
};

// Exhaustive sweep over levels l, m <= max_level and all n^4 index tuples.
RelationSweepReport principal_relation_sweep(unsigned n, EvalTableVariant table,
                                             ExponentVariant variant,
                                             unsigned max_level = 2);

nlohmann::ordered_json to_json(const RelationSweepReport& report);

}  // namespace yangian
