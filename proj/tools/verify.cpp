// Batch verification front-end. One subcommand per identity family; every
// run is deterministic (seeded generators, ordered JSON, no timestamps) and
// the exit status is the verdict: 0 all checks pass, 1 verification
// failure, 2 usage error.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "yangian/entangled.hpp"
#include "yangian/gen_table.hpp"
#include "yangian/principal.hpp"
#include "yangian/submodule.hpp"
#include "yangian/yangian_checks.hpp"

namespace {

using nlohmann::ordered_json;
using namespace yangian;

struct Config {
    unsigned n = 3;
    unsigned depth = 3;
    std::string a = "1";
    std::string b = "0";
    std::uint64_t seed = 1;
    std::string variant;
    std::string output = "text";
    bool dump = false;
};

struct Outcome {
    bool passed = true;
    ordered_json report;
    std::vector<std::string> lines;
};

std::string row(const std::string& name, std::size_t tested, std::size_t failures) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-40s %8zu tested %8zu failed   %s", name.c_str(),
                  tested, failures, failures == 0 ? "pass" : "FAIL");
    return buf;
}

std::string expect_row(const std::string& name, bool pass) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-40s %s", name.c_str(),
                  pass ? "as expected" : "UNEXPECTED");
    return buf;
}

// Accumulates one named sweep into a module-style report:
// {check, n, depth, variant, indices_tested, failures: [...]}.
class SweepReport {
  public:
    SweepReport(std::string check, const Config& cfg, std::string variant)
        : cfg_(cfg) {
        json_["check"] = std::move(check);
        json_["n"] = cfg.n;
        json_["depth"] = cfg.depth;
        json_["variant"] = std::move(variant);
        json_["indices_tested"] = 0;
        json_["failures"] = ordered_json::array();
    }

    void count(const std::string& law, bool pass, ordered_json index,
               const CycMat* residual = nullptr) {
        tested_ += 1;
        per_law_tested_[law] += 1;
        if (!pass) {
            per_law_failed_[law] += 1;
            ordered_json f{{"law", law}, {"index", std::move(index)}};
            if (residual != nullptr && cfg_.dump) f["residual"] = to_json(*residual);
            json_["failures"].push_back(std::move(f));
        }
    }

    Outcome finish() {
        Outcome out;
        json_["indices_tested"] = tested_;
        out.passed = json_["failures"].empty();
        for (const auto& [law, n_tested] : per_law_tested_)
            out.lines.push_back(row(law, n_tested, per_law_failed_[law]));
        out.report = std::move(json_);
        return out;
    }

  private:
    const Config& cfg_;
    ordered_json json_;
    std::size_t tested_ = 0;
    std::map<std::string, std::size_t> per_law_tested_;
    std::map<std::string, std::size_t> per_law_failed_;
};

ordered_json idx(std::initializer_list<long> v) { return ordered_json(std::vector<long>(v)); }

Outcome suite_lie(const Config& cfg) {
    const unsigned n = cfg.n;
    const long N = n;
    SweepReport report("lie", cfg, "-");
    const Cyc one = Cyc::one(n);

    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            for (long ip = 0; ip < N; ++ip)
                for (long jp = 0; jp < N; ++jp) {
                    const CycMat a = principal_A(n, i, j), b = principal_A(n, ip, jp);
                    const CycMat target = principal_A(n, i + ip, j + jp);
                    const CycMat prod_rhs = target * Cyc::root(n, j * ip);
                    CycMat lhs = a * b;
                    report.count("product law", lhs == prod_rhs, idx({i, j, ip, jp}));
                    const Cyc coeff = Cyc::root(n, j * ip) - Cyc::root(n, jp * i);
                    lhs = commutator(a, b);
                    report.count("commutator law", lhs == target * coeff,
                                 idx({i, j, ip, jp}));
                }

    for (long k = 0; k < N; ++k)
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) {
                const CycMat ek = principal_A(n, 0, k);  // E^k
                const CycMat lhs = commutator(ek, principal_A(n, i, j));
                const CycMat rhs =
                    principal_A(n, i, j + k) * (Cyc::root(n, k * i) - one);
                report.count("shift-power bracket", lhs == rhs, idx({k, i, j}));
            }

    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            const CycMat a = principal_A(n, i, j);
            report.count("gradation eigenvector", apply_sigma(a) == a * Cyc::root(n, j),
                         idx({i, j}));
        }

    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            for (long ip = 0; ip < N; ++ip)
                for (long jp = 0; jp < N; ++jp) {
                    const Cyc form = trace_form(principal_A(n, i, j), principal_A(n, ip, jp));
                    const bool dual = (i + ip) % N == 0 && (j + jp) % N == 0;
                    const Cyc expect = dual ? Cyc::root(n, -i * j) * rat(n) : Cyc::zero(n);
                    report.count("trace form", form == expect, idx({i, j, ip, jp}));
                }

    return report.finish();
}

Outcome suite_fourier(const Config& cfg) {
    const unsigned n = cfg.n;
    const long N = n;
    SweepReport report("fourier", cfg, "-");

    for (long k = 0; k < N; ++k)
        for (long l = 0; l < N; ++l)
            for (long i = 0; i < N; ++i) {
                bool ok = true;
                try {
                    principal_action(k, l, i, n);
                } catch (const verification_error&) {
                    ok = false;
                }
                report.count("principal action on Fourier vectors", ok, idx({k, l, i}));
            }

    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            const Cyc pairing = fourier_vec(n, i).dot(fourier_vec(n, j));
            const Cyc expect = (i + j) % N == 0 ? Cyc::from_rat(n, rat(n)) : Cyc::zero(n);
            report.count("pairing", pairing == expect, idx({i, j}));
        }

    for (long i = 1; i <= N; ++i) {
        CycVec lhs(n, n);
        for (long k = 0; k < N; ++k) lhs += fourier_vec(n, k) * Cyc::root(n, -i * k);
        CycVec rhs(n, n);
        rhs.at(static_cast<std::size_t>(i - 1)) = Cyc::from_rat(n, rat(n));
        report.count("inversion", lhs == rhs, idx({i}));
    }

    return report.finish();
}

Outcome suite_permutation(const Config& cfg) {
    const unsigned n = cfg.n;
    const long N = n;
    SweepReport report("permutation", cfg, "-");

    bool expansion_ok = true;
    try {
        permutation_P(n, true);
    } catch (const verification_error&) {
        expansion_ok = false;
    }
    report.count("principal expansion matches", expansion_ok, idx({}));

    const CycMat p = permutation_P(n);
    report.count("involution", p * p == CycMat::identity(n, n * n), idx({}));

    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            CycVec e(n, n * n), swapped(n, n * n);
            e.at(a * n + b) = Cyc::one(n);
            swapped.at(b * n + a) = Cyc::one(n);
            report.count("factor swap", p * e == swapped, idx({a, b}));
        }

    return report.finish();
}

Outcome suite_isomorphism(const Config& cfg) {
    const IsoVariant variant =
        cfg.variant.empty() ? IsoVariant::Corrected : iso_variant_from_string(cfg.variant);
    SweepReport report("isomorphism", cfg, to_string(variant));

    for (std::uint64_t t = 0; t < 5; ++t) {
        const auto pr =
            GenTable::random(Presentation::Principal, cfg.n, cfg.depth, cfg.n, cfg.seed + t);
        report.count("round trip via unit-matrix family",
                     s_from_t(t_from_s(pr), variant) == pr,
                     idx({static_cast<long>(cfg.seed + t)}));
        const auto cw = GenTable::random(Presentation::CartanWeyl, cfg.n, cfg.depth, cfg.n,
                                         cfg.seed + 1000 + t);
        report.count("round trip via principal family",
                     t_from_s(s_from_t(cw, variant)) == cw,
                     idx({static_cast<long>(cfg.seed + 1000 + t)}));
    }

    return report.finish();
}

Outcome suite_qybe(const Config& cfg) {
    const unsigned n = cfg.n;
    Outcome out;
    const bool main_zero = qybe_residual(n).is_zero();
    const bool control_nonzero = !qybe_residual_with(evaluation_X(n), n).is_zero();
    out.passed = main_zero && control_nonzero;
    out.report = {{"check", "qybe"},
                  {"n", n},
                  {"depth", cfg.depth},
                  {"variant", "-"},
                  {"indices_tested", 2},
                  {"failures", ordered_json::array()}};
    if (!main_zero) out.report["failures"].push_back({{"law", "braid identity"}});
    if (!control_nonzero)
        out.report["failures"].push_back({{"law", "negative control stayed zero"}});
    out.lines.push_back(expect_row("braid identity residual = 0", main_zero));
    out.lines.push_back(expect_row("rank-one control residual != 0", control_nonzero));
    return out;
}

Outcome suite_rtt(const Config& cfg) {
    const unsigned n = cfg.n;
    Outcome out;

    CycMat diag(n, n * n, n * n);
    for (unsigned i = 0; i < n * n; ++i) diag.at(i, i) = Cyc::from_rat(n, rat(i + 1));
    const CycMat p = permutation_P(n);

    const bool eval_zero = rtt_residual(evaluation_X(n), n).is_zero();
    const bool minus_p_zero = rtt_residual(-p, n).is_zero();
    const bool trivial_zero = rtt_residual(CycMat(n, n * n, n * n), n).is_zero();
    const bool plus_p_nonzero = !rtt_residual(p, n).is_zero();
    const bool diag_nonzero = !rtt_residual(diag, n).is_zero();

    out.passed = eval_zero && minus_p_zero && trivial_zero && plus_p_nonzero && diag_nonzero;
    out.report = {{"check", "rtt"},
                  {"n", n},
                  {"depth", cfg.depth},
                  {"variant", "-"},
                  {"indices_tested", 5},
                  {"failures", ordered_json::array()}};
    if (!eval_zero) out.report["failures"].push_back({{"law", "evaluation generators"}});
    if (!minus_p_zero) out.report["failures"].push_back({{"law", "negated permutation"}});
    if (!trivial_zero) out.report["failures"].push_back({{"law", "constant series"}});
    if (!plus_p_nonzero)
        out.report["failures"].push_back({{"law", "sign control stayed zero"}});
    if (!diag_nonzero)
        out.report["failures"].push_back({{"law", "diagonal control stayed zero"}});
    out.lines.push_back(expect_row("evaluation generators residual = 0", eval_zero));
    out.lines.push_back(expect_row("negated permutation residual = 0", minus_p_zero));
    out.lines.push_back(expect_row("constant series residual = 0", trivial_zero));
    out.lines.push_back(expect_row("sign-flipped permutation residual != 0", plus_p_nonzero));
    out.lines.push_back(expect_row("diagonal control residual != 0", diag_nonzero));
    return out;
}

Outcome sweep_outcome(const RelationSweepReport& sweep, const Config& cfg) {
    Outcome out;
    out.passed = sweep.passed();
    out.report = to_json(sweep);
    if (!cfg.dump)
        for (auto& f : out.report["failures"]) f.erase("residual");
    out.lines.push_back(row("table " + sweep.table + ", exponents " + sweep.variant,
                            sweep.indices_tested, sweep.failures.size()));
    return out;
}

Outcome suite_principal_relations(const Config& cfg) {
    const unsigned max_level = std::min(cfg.depth - 1, 2u);

    if (!cfg.variant.empty()) {
        const auto variant = exponent_variant_from_string(cfg.variant);
        auto sweep = principal_relation_sweep(cfg.n, EvalTableVariant::PermutationDual,
                                              variant, max_level);
        return sweep_outcome(sweep, cfg);
    }

    Outcome out;
    out.report = {{"check", "principal-relations"},
                  {"n", cfg.n},
                  {"depth", cfg.depth},
                  {"variant", "all"},
                  {"indices_tested", 0},
                  {"failures", ordered_json::array()},
                  {"sweeps", ordered_json::array()}};
    std::vector<std::string> survivors;
    std::size_t tested = 0;
    for (EvalTableVariant table :
         {EvalTableVariant::PermutationDual, EvalTableVariant::PrincipalDirect}) {
        for (ExponentVariant variant :
             {ExponentVariant::MixedJB, ExponentVariant::MixedJA, ExponentVariant::Uniform}) {
            const auto sweep = principal_relation_sweep(cfg.n, table, variant, max_level);
            tested += sweep.indices_tested;
            if (table == EvalTableVariant::PermutationDual && sweep.passed())
                survivors.push_back(to_string(variant));
            ordered_json entry = to_json(sweep);
            if (!cfg.dump)
                for (auto& f : entry["failures"]) f.erase("residual");
            out.report["sweeps"].push_back(std::move(entry));
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "  table %-18s exponents %-10s %6zu tuples   %s",
                          to_string(table).c_str(), to_string(variant).c_str(),
                          sweep.indices_tested,
                          sweep.passed() ? "annihilated"
                                         : ("nonzero at " +
                                            std::to_string(sweep.failures.size()) +
                                            " tuples")
                                               .c_str());
            out.lines.push_back(buf);
        }
    }
    out.report["indices_tested"] = tested;
    out.passed = survivors.size() == 1;
    out.report["surviving_variant"] =
        survivors.size() == 1 ? ordered_json(survivors.front()) : ordered_json(survivors);
    if (!out.passed)
        out.report["failures"].push_back(
            {{"law", "exactly one exponent variant must annihilate the dual table"}});
    out.lines.push_back("  surviving exponent variant: " +
                        (survivors.size() == 1 ? survivors.front() : std::string("NONE")));
    return out;
}

const CalibrationResult& calibration() {
    static const CalibrationResult result = calibrate();
    return result;
}

Outcome suite_theorem51(const Config& cfg) {
    const Rat a = rat_from_string(cfg.a), b = rat_from_string(cfg.b);
    const auto& cal = calibration();

    BasisConvention conv = cal.convention;
    DeltaReading reading = cal.reading;
    if (!cfg.variant.empty() && cfg.variant != "calibrated") {
        const auto colon = cfg.variant.find(':');
        if (colon == std::string::npos) {
            reading = delta_reading_from_string(cfg.variant);
        } else {
            conv.role = phase_role_from_string(cfg.variant.substr(0, colon));
            conv.shift = static_cast<unsigned>(std::stoul(cfg.variant.substr(colon + 1)));
        }
    }

    const auto report = verify_theorem51(a, b, cal.c, conv, reading);
    Outcome out;
    out.passed = report.verdict;
    out.report = to_json(report);

    std::size_t failures = 0;
    for (const auto& e : report.entries) failures += e.pass ? 0 : 1;
    out.lines.push_back("  c = " + rat_to_string(cal.c) + ", phase role " +
                        to_string(conv.role) + ", shift " + std::to_string(conv.shift) +
                        ", deltas " + to_string(reading));
    out.lines.push_back(row("entangled-basis action equations", report.entries.size(),
                            failures));
    return out;
}

Outcome suite_corollary52(const Config& cfg) {
    const Rat a = rat_from_string(cfg.a), b = rat_from_string(cfg.b);
    const auto& cal = calibration();
    const TensorModule mod(a, b, cal.c);
    const EntangledBasis basis(cal.convention);

    const auto verdict = irreducibility(mod, basis);

    // Cross-check the Burnside answer against the closure scan.
    bool consistent = true;
    if (verdict.irreducible) {
        for (unsigned k = 1; k <= 3; ++k)
            for (unsigned m = 1; m <= 3; ++m)
                consistent = consistent &&
                             submodule_closure(mod, basis.psi(k, m)).rank() == TensorModule::dim;
    } else {
        consistent = !verdict.proper_dims.empty() && verdict.proper_dims.size() == 1;
    }

    Outcome out;
    out.passed = consistent;
    ordered_json entries = ordered_json::array();
    for (const auto& s : verdict.seed_closures)
        entries.push_back(
            {{"k", s.k}, {"m", s.m}, {"closure_dim", s.dim}, {"proper", s.proper}});
    out.report = {{"check", "corollary52"},
                  {"a", rat_to_string(a)},
                  {"b", rat_to_string(b)},
                  {"c", rat_to_string(cal.c)},
                  {"convention", to_json(cal.convention, cal.reading)},
                  {"algebra_dim", verdict.algebra_dim},
                  {"entries", std::move(entries)},
                  {"verdict", to_string(verdict)}};
    out.lines.push_back("  generated algebra dimension: " +
                        std::to_string(verdict.algebra_dim));
    for (const auto& s : verdict.seed_closures) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  closure from psi(%u,%u): dim %zu%s", s.k, s.m,
                      s.dim, s.proper ? " (proper)" : "");
        out.lines.push_back(buf);
    }
    out.lines.push_back(std::string("  verdict: ") + to_string(verdict));
    if (!consistent) out.lines.push_back("  INCONSISTENT Burnside/closure answers");
    return out;
}

Outcome run_suite(const std::string& suite, const Config& cfg);

Outcome suite_all(const Config& cfg) {
    Outcome out;
    out.report = {{"check", "all"}, {"suites", ordered_json::array()}};
    for (const char* name : {"lie", "fourier", "permutation", "isomorphism", "qybe", "rtt",
                             "principal-relations", "theorem51", "corollary52"}) {
        Outcome sub = run_suite(name, cfg);
        out.passed = out.passed && sub.passed;
        out.report["suites"].push_back(std::move(sub.report));
        out.lines.push_back(std::string(name) + ":");
        for (auto& line : sub.lines) out.lines.push_back(std::move(line));
    }
    return out;
}

Outcome run_suite(const std::string& suite, const Config& cfg) {
    if (suite == "lie") return suite_lie(cfg);
    if (suite == "fourier") return suite_fourier(cfg);
    if (suite == "permutation") return suite_permutation(cfg);
    if (suite == "isomorphism") return suite_isomorphism(cfg);
    if (suite == "qybe") return suite_qybe(cfg);
    if (suite == "rtt") return suite_rtt(cfg);
    if (suite == "principal-relations") return suite_principal_relations(cfg);
    if (suite == "theorem51") return suite_theorem51(cfg);
    if (suite == "corollary52") return suite_corollary52(cfg);
    if (suite == "all") return suite_all(cfg);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of principal-basis Yangian identities"};
    app.require_subcommand(1);

    Config cfg;
    std::vector<CLI::App*> subs;
    for (const char* name : {"lie", "fourier", "permutation", "isomorphism", "qybe", "rtt",
                             "principal-relations", "theorem51", "corollary52", "all"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--n", cfg.n, "matrix size n (>= 2)");
        sub->add_option("--depth", cfg.depth, "series truncation depth (>= 1)");
        sub->add_option("--a", cfg.a, "rational parameter a, as p/q");
        sub->add_option("--b", cfg.b, "rational parameter b, as p/q");
        sub->add_option("--seed", cfg.seed, "seed for randomized tables");
        sub->add_option("--variant", cfg.variant, "identity variant to exercise");
        sub->add_option("--output", cfg.output, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--dump", cfg.dump, "include matrix dumps in failure entries");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cfg.n < 2 || cfg.depth < 1) {
        std::cerr << "usage error: need --n >= 2 and --depth >= 1\n";
        return 2;
    }

    try {
        const Outcome out = run_suite(app.get_subcommands().front()->get_name(), cfg);
        if (cfg.output == "json") {
            std::cout << out.report.dump(2) << "\n";
        } else {
            std::cout << app.get_subcommands().front()->get_name() << ":\n";
            for (const auto& line : out.lines) std::cout << line << "\n";
            std::cout << (out.passed ? "all checks passed" : "CHECKS FAILED") << "\n";
        }
        return out.passed ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
