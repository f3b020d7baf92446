#include "yangian/yangian_checks.hpp"

#include <stdexcept>

#include "yangian/principal.hpp"

namespace yangian {

GenTable t_from_s(const GenTable& s) {
    if (s.presentation() != Presentation::Principal)
        throw std::invalid_argument("t_from_s expects a principal table");
    const unsigned n = s.order();
    GenTable t(Presentation::CartanWeyl, n, s.depth(), s.dim());
    for (unsigned m = 1; m <= s.depth(); ++m)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                CycMat acc(n, s.dim(), s.dim());
                for (unsigned k = 0; k < n; ++k)
                    acc += s.at(k, static_cast<long>(j) - static_cast<long>(i), m) *
                           Cyc::root(n, static_cast<long>(i) * k);
                t.set(i, j, m, std::move(acc));
            }
    return t;
}

GenTable s_from_t(const GenTable& t, IsoVariant variant) {
    if (t.presentation() != Presentation::CartanWeyl)
        throw std::invalid_argument("s_from_t expects a Cartan-Weyl table");
    const unsigned n = t.order();
    const Rat inv_n = rat(1, static_cast<long>(n));
    GenTable s(Presentation::Principal, n, t.depth(), t.dim());
    for (unsigned m = 1; m <= t.depth(); ++m)
        for (unsigned k = 0; k < n; ++k)
            for (unsigned l = 0; l < n; ++l) {
                CycMat acc(n, t.dim(), t.dim());
                for (unsigned i = 0; i < n; ++i) {
                    const Cyc w = Cyc::root(n, -static_cast<long>(k) * i);
                    const CycMat& entry =
                        variant == IsoVariant::Corrected
                            ? t.at(i, static_cast<long>(i) + l, m)
                            : t.at(static_cast<long>(i) + l, i, m);
                    acc += entry * w;
                }
                s.set(k, l, m, acc * inv_n);
            }
    return s;
}

CycMat embed_pair(const CycMat& x, unsigned n, unsigned slot_a, unsigned slot_b) {
    if (slot_a == slot_b || slot_a < 1 || slot_a > 3 || slot_b < 1 || slot_b > 3)
        throw std::invalid_argument("slots must be distinct and in {1,2,3}");
    if (x.rows() != static_cast<std::size_t>(n) * n || !x.is_square())
        throw std::invalid_argument("operator must act on V (x) V");
    const std::size_t d = static_cast<std::size_t>(n) * n * n;
    CycMat out(x.order(), d, d);
    const unsigned slot_c = 6 - slot_a - slot_b;  // the untouched slot
    auto flatten = [n](unsigned t1, unsigned t2, unsigned t3) {
        return (static_cast<std::size_t>(t1) * n + t2) * n + t3;
    };
    unsigned r[4], c[4];  // 1-based slot values
    for (unsigned ra = 0; ra < n; ++ra)
        for (unsigned rb = 0; rb < n; ++rb)
            for (unsigned ca = 0; ca < n; ++ca)
                for (unsigned cb = 0; cb < n; ++cb) {
                    const Cyc& val = x.at(ra * n + rb, ca * n + cb);
                    if (val.is_zero()) continue;
                    r[slot_a] = ra; r[slot_b] = rb;
                    c[slot_a] = ca; c[slot_b] = cb;
                    for (unsigned s = 0; s < n; ++s) {
                        r[slot_c] = s;
                        c[slot_c] = s;
                        out.at(flatten(r[1], r[2], r[3]), flatten(c[1], c[2], c[3])) = val;
                    }
                }
    return out;
}

BiPolyMat qybe_residual_with(const CycMat& m, unsigned n) {
    const std::size_t d = static_cast<std::size_t>(n) * n * n;
    const CycMat id = CycMat::identity(n, d);
    const CycMat m12 = embed_pair(m, n, 1, 2);
    const CycMat m13 = embed_pair(m, n, 1, 3);
    const CycMat m23 = embed_pair(m, n, 2, 3);
    // cleared factors: R12 -> u I - M12, R13 -> (u+v) I - M13, R23 -> v I - M23
    const BiPolyMat r12 = BiPolyMat::monomial(id, 1, 0) - BiPolyMat::constant(m12);
    const BiPolyMat r13 = BiPolyMat::monomial(id, 1, 0) + BiPolyMat::monomial(id, 0, 1) -
                          BiPolyMat::constant(m13);
    const BiPolyMat r23 = BiPolyMat::monomial(id, 0, 1) - BiPolyMat::constant(m23);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

BiPolyMat qybe_residual(unsigned n) { return qybe_residual_with(permutation_P(n), n); }

BiPolyMat rtt_residual(const CycMat& x, unsigned n) {
    const std::size_t d = static_cast<std::size_t>(n) * n * n;
    const CycMat id = CycMat::identity(n, d);
    // slot 1 carries the module, slots 2 and 3 the two auxiliary spaces
    const BiPolyMat t1 = BiPolyMat::monomial(id, 1, 0) +
                         BiPolyMat::constant(embed_pair(x, n, 1, 2));
    const BiPolyMat t2 = BiPolyMat::monomial(id, 0, 1) +
                         BiPolyMat::constant(embed_pair(x, n, 1, 3));
    const BiPolyMat r23 = BiPolyMat::monomial(id, 1, 0) - BiPolyMat::monomial(id, 0, 1) -
                          BiPolyMat::constant(embed_pair(permutation_P(n), n, 2, 3));
    return r23 * t1 * t2 - t2 * t1 * r23;
}

CycMat evaluation_X(unsigned n) {
    CycMat x(n, static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
    // sum_{ij} E_ij (x) e_ij has entry 1 exactly at rows (i,i), columns (j,j)
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            x.at(i * n + i, j * n + j) = Cyc::one(n);
    return x;
}

GenTable principal_evaluation_table(unsigned n, EvalTableVariant variant, unsigned depth) {
    if (depth < 1) throw std::invalid_argument("evaluation table needs depth >= 1");
    GenTable s(Presentation::Principal, n, depth, n);
    const Rat inv_n = rat(1, static_cast<long>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (variant == EvalTableVariant::PrincipalDirect) {
                s.set(i, j, 1, principal_A(n, i, j));
            } else {
                const Cyc scale =
                    Cyc::root(n, static_cast<long>(i) * static_cast<long>(j)) * inv_n;
                s.set(i, j, 1,
                      principal_A(n, -static_cast<long>(i), -static_cast<long>(j)) * scale);
            }
        }
    return s;  // levels >= 2 stay zero
}

std::string to_string(ExponentVariant v) {
    switch (v) {
        case ExponentVariant::MixedJB: return "mixed-jb";
        case ExponentVariant::MixedJA: return "mixed-ja";
        case ExponentVariant::Uniform: return "uniform";
    }
    throw std::logic_error("unknown exponent variant");
}

std::string to_string(EvalTableVariant v) {
    switch (v) {
        case EvalTableVariant::PrincipalDirect: return "principal-direct";
        case EvalTableVariant::PermutationDual: return "permutation-dual";
    }
    throw std::logic_error("unknown table variant");
}

std::string to_string(IsoVariant v) {
    return v == IsoVariant::AsPrinted ? "as-printed" : "corrected";
}

ExponentVariant exponent_variant_from_string(const std::string& s) {
    if (s == "mixed-jb") return ExponentVariant::MixedJB;
    if (s == "mixed-ja") return ExponentVariant::MixedJA;
    if (s == "uniform") return ExponentVariant::Uniform;
    throw std::invalid_argument("unknown exponent variant: " + s);
}

EvalTableVariant eval_table_variant_from_string(const std::string& s) {
    if (s == "principal-direct") return EvalTableVariant::PrincipalDirect;
    if (s == "permutation-dual") return EvalTableVariant::PermutationDual;
    throw std::invalid_argument("unknown table variant: " + s);
}

IsoVariant iso_variant_from_string(const std::string& s) {
    if (s == "as-printed") return IsoVariant::AsPrinted;
    if (s == "corrected") return IsoVariant::Corrected;
    throw std::invalid_argument("unknown isomorphism variant: " + s);
}

CycMat principal_relation_residual(const GenTable& s, unsigned l, unsigned m,
                                   const std::array<long, 4>& idx,
                                   ExponentVariant variant) {
    if (s.presentation() != Presentation::Principal)
        throw std::invalid_argument("relations are stated for principal tables");
    if (l + 1 > s.depth() || m + 1 > s.depth())
        throw std::out_of_range("levels l+1, m+1 must not exceed the table depth");
    const unsigned n = s.order();
    const long i = idx[0], j = idx[1], ip = idx[2], jp = idx[3];
    CycMat res = commutator(s.at(i, j, l + 1), s.at(ip, jp, m)) -
                 commutator(s.at(i, j, l), s.at(ip, jp, m + 1));
    const Rat inv_n = rat(1, static_cast<long>(n));
    for (long sa = 0; sa < static_cast<long>(n); ++sa)
        for (long sb = 0; sb < static_cast<long>(n); ++sb) {
            const long e1 = (i - ip) * sb - sa * sb;
            long e2 = 0;
            switch (variant) {
                case ExponentVariant::MixedJB: e2 = (j - jp) * sb + sa * sb; break;
                case ExponentVariant::MixedJA: e2 = (j - jp) * sa + sa * sb; break;
                case ExponentVariant::Uniform: e2 = e1; break;
            }
            const CycMat first = s.at(ip + sa, jp + sb, l) * s.at(i - sa, j - sb, m);
            const CycMat second = s.at(ip + sa, jp + sb, m) * s.at(i - sa, j - sb, l);
            res -= first * (Cyc::root(n, e1) * inv_n);
            res += second * (Cyc::root(n, e2) * inv_n);
        }
    return res;
}

RelationSweepReport principal_relation_sweep(unsigned n, EvalTableVariant table,
                                             ExponentVariant variant,
                                             unsigned max_level) {
    const GenTable s = principal_evaluation_table(n, table, max_level + 1);
    RelationSweepReport report;
    report.check = "principal-relations";
    report.n = n;
    report.depth = max_level;
    report.variant = to_string(variant);
    report.table = to_string(table);
    for (unsigned l = 0; l <= max_level; ++l)
        for (unsigned m = 0; m <= max_level; ++m)
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    for (unsigned ip = 0; ip < n; ++ip)
                        for (unsigned jp = 0; jp < n; ++jp) {
                            ++report.indices_tested;
                            CycMat res = principal_relation_residual(
                                s, l, m, {static_cast<long>(i), static_cast<long>(j),
                                          static_cast<long>(ip), static_cast<long>(jp)},
                                variant);
                            if (!res.is_zero())
                                report.failures.push_back(
                                    RelationFailure{l, m, {i, j, ip, jp}, std::move(res)});
                        }
    return report;
}

nlohmann::ordered_json to_json(const RelationSweepReport& report) {
    nlohmann::ordered_json j;
    j["check"] = report.check;
    j["n"] = report.n;
    j["depth"] = report.depth;
    j["variant"] = report.variant;
    j["table"] = report.table;
    j["indices_tested"] = report.indices_tested;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        nlohmann::ordered_json e;
        e["index"] = {{"l", f.l}, {"m", f.m}, {"i", f.idx[0]}, {"j", f.idx[1]},
                      {"i2", f.idx[2]}, {"j2", f.idx[3]}};
        e["residual"] = to_json(f.residual);
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    j["passed"] = report.passed();
    return j;
}

}  // namespace yangian
