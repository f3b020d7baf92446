// The sl(3) tensor module: basis and trace-form duals, the level-zero and
// level-one actions, the shifted principal generator dictionary, the
// entangled basis with its closed-form action coefficients, calibration of
// the free constants, and the invariant-subspace machinery.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "yangian/entangled.hpp"
#include "yangian/principal.hpp"
#include "yangian/sl3.hpp"
#include "yangian/submodule.hpp"

using namespace yangian;

namespace {

Cyc w(long k) { return Cyc::root(3, k); }

CycVec random_vec(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CycVec v(kSl3Order, dim);
    for (std::size_t i = 0; i < dim; ++i)
        v.at(i) = w(static_cast<long>(rng() % 3)) *
                  rat(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 2) + 1);
    return v;
}

const BasisConvention kCalibrated{PhaseRole::Subscript, 2};

}  // namespace

TEST_CASE("sl(3) basis and trace-form duals") {
    const auto& basis = sl3_basis();
    REQUIRE(basis.names.size() == 8);
    REQUIRE(basis.elements.size() == 8);
    REQUIRE(basis.duals.size() == 8);
    CHECK(basis.names == std::vector<std::string>{"H1", "H2", "E12", "E13", "E21",
                                                  "E23", "E31", "E32"});

    CHECK(basis.elements[0] == unit_E(3, 1, 1) - unit_E(3, 2, 2));
    CHECK(basis.elements[1] == unit_E(3, 2, 2) - unit_E(3, 3, 3));
    CHECK(basis.elements[2] == unit_E(3, 1, 2));
    CHECK(basis.elements[7] == unit_E(3, 3, 2));

    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(basis.elements[i].trace().is_zero());
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(trace_form(basis.elements[i], basis.duals[j]) ==
                  (i == j ? Cyc::one(3) : Cyc::zero(3)));
    }

    // root duals swap to their transposes; Cartan duals mix through the
    // inverse of [[2,-1],[-1,2]]
    CHECK(basis.duals[2] == unit_E(3, 2, 1));
    CHECK(basis.duals[0] == (basis.elements[0] * rat(2) + basis.elements[1]) * rat(1, 3));
    CHECK(basis.duals[1] == (basis.elements[0] + basis.elements[1] * rat(2)) * rat(1, 3));
}

TEST_CASE("evaluation modules and the level-zero action") {
    const EvalModule fund{ModuleKind::Fundamental, rat(2)};
    const EvalModule dual{ModuleKind::Dual, rat(0)};
    const CycMat x = unit_E(3, 1, 2) + unit_E(3, 3, 1) * w(1);
    CHECK(fund.act(x) == x);
    CHECK(dual.act(x) == x.transpose() * rat(-1));

    const TensorModule mod(rat(1), rat(0), rat(1, 2));
    const auto& basis = sl3_basis();
    const CycMat id = CycMat::identity(3, 3);
    for (const CycMat& e : basis.elements)
        CHECK(mod.I_action(e) == e.kron(id) + id.kron(e.transpose() * rat(-1)));

    // I is a Lie algebra homomorphism and Omega is an invariant
    for (const CycMat& x1 : basis.elements)
        for (const CycMat& x2 : basis.elements)
            CHECK(mod.I_action(commutator(x1, x2)) ==
                  commutator(mod.I_action(x1), mod.I_action(x2)));
    for (const CycMat& e : basis.elements)
        CHECK(commutator(mod.omega(), mod.I_action(e)).is_zero());

    const auto gens = mod.generator_actions();
    REQUIRE(gens.size() == 16);
    CHECK(gens[0] == mod.I_action(basis.elements[0]));
    CHECK(gens[8] == mod.J_action(basis.elements[0]));
    CHECK(gens[15] == mod.J_action(basis.elements[7]));
}

TEST_CASE("omega eigenvalues on the two summands") {
    const TensorModule mod(rat(1), rat(0), rat(1, 2));
    const EntangledBasis basis(kCalibrated);
    // invariant line
    CHECK(mod.omega() * basis.psi(1, 1) == basis.psi(1, 1) * Cyc::from_rat(3, rat(-8, 3)));
    // adjoint summand
    CHECK(mod.omega() * basis.psi(2, 3) == basis.psi(2, 3) * Cyc::from_rat(3, rat(1, 3)));
}

TEST_CASE("shifted principal generators match their Chevalley expressions") {
    const CycMat h1 = unit_E(3, 1, 1) - unit_E(3, 2, 2);
    const CycMat h2 = unit_E(3, 2, 2) - unit_E(3, 3, 3);

    CHECK(principal_T(1, 2) == unit_E(3, 1, 2) + unit_E(3, 2, 3) + unit_E(3, 3, 1));
    CHECK(principal_T(1, 3) == unit_E(3, 1, 3) + unit_E(3, 2, 1) + unit_E(3, 3, 2));
    CHECK(principal_T(2, 1) == h1 - h2 * (w(2)));
    CHECK(principal_T(3, 1) == h1 - h2 * (w(1)));
    CHECK(principal_T(2, 2) ==
          unit_E(3, 1, 2) + unit_E(3, 2, 3) * w(1) + unit_E(3, 3, 1) * w(2));
    CHECK(principal_T(2, 3) ==
          unit_E(3, 1, 3) + unit_E(3, 2, 1) * w(1) + unit_E(3, 3, 2) * w(2));
    CHECK(principal_T(3, 2) ==
          unit_E(3, 1, 2) + unit_E(3, 2, 3) * w(2) + unit_E(3, 3, 1) * w(1));
    CHECK(principal_T(3, 3) ==
          unit_E(3, 1, 3) + unit_E(3, 2, 1) * w(2) + unit_E(3, 3, 2) * w(1));

    // T_2^(1) is the diagonal phase matrix
    CycMat diag(3, 3, 3);
    diag.at(0, 0) = Cyc::one(3);
    diag.at(1, 1) = w(1);
    diag.at(2, 2) = w(2);
    CHECK(principal_T(2, 1) == diag);

    CHECK_THROWS_AS(principal_T(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(principal_T(0, 2), std::out_of_range);
    CHECK_THROWS_AS(principal_T(4, 1), std::out_of_range);
}

TEST_CASE("entangled basis vectors") {
    const EntangledBasis basis(kCalibrated);

    // pairwise orthogonal with squared norm 3, three nonzero coordinates each
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned m = 1; m <= 3; ++m) {
            std::size_t nonzero = 0;
            for (std::size_t p = 0; p < 9; ++p)
                if (!basis.psi(k, m).at(p).is_zero()) ++nonzero;
            CHECK(nonzero == 3);
            for (unsigned kp = 1; kp <= 3; ++kp)
                for (unsigned mp = 1; mp <= 3; ++mp)
                    CHECK(basis.psi(k, m).inner(basis.psi(kp, mp)) ==
                          (k == kp && m == mp ? Cyc::from_rat(3, rat(3))
                                              : Cyc::zero(3)));
        }

    // psi_1^(1) is the invariant singlet sum_l |l,l>
    CycVec singlet(3, 9);
    for (std::size_t l = 0; l < 3; ++l) singlet.at(3 * l + l) = Cyc::one(3);
    CHECK(basis.psi(1, 1) == singlet);

    // the alternative phase role builds a different but equally orthogonal family
    const EntangledBasis other({PhaseRole::Superscript, 2});
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned m = 1; m <= 3; ++m)
            CHECK(other.psi(k, m).inner(other.psi(k, m)) == Cyc::from_rat(3, rat(3)));
    CHECK(other.psi(2, 3) == basis.psi(3, 2));

    CHECK_THROWS_AS(EntangledBasis({PhaseRole::Subscript, 3}), std::invalid_argument);
    CHECK_THROWS_AS(basis.psi(0, 1), std::out_of_range);
    CHECK_THROWS_AS(basis.psi(1, 4), std::out_of_range);
}

TEST_CASE("coordinates in the entangled basis") {
    const EntangledBasis basis(kCalibrated);
    CHECK(basis.coordinate(2, 3, basis.psi(2, 3) * w(1)) == w(1));
    CHECK(basis.coordinate(1, 2, basis.psi(2, 3)).is_zero());

    const CycVec v = random_vec(9, 31);
    CycVec rebuilt(3, 9);
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned m = 1; m <= 3; ++m)
            rebuilt += basis.psi(k, m) * basis.coordinate(k, m, v);
    CHECK(rebuilt == v);
}

TEST_CASE("closed-form action coefficients") {
    const Rat a(1), b(0);
    const auto c1 = theorem51_coefficient(2, 2, 1, 1, a, b);
    CHECK(c1.coeff == Cyc::from_rat(3, rat(-1, 2)));
    CHECK(c1.k_target == 2);
    CHECK(c1.m_target == 2);

    const auto c2 = theorem51_coefficient(2, 3, 2, 2, rat(5), rat(7));
    CHECK(c2.coeff == w(2) * rat(5) - w(1) * rat(7));
    CHECK(c2.k_target == 3);
    CHECK(c2.m_target == 1);

    // delta-free entries with equal parameters cancel exactly
    CHECK(theorem51_coefficient(2, 2, 2, 2, rat(4), rat(4)).coeff.is_zero());
    CHECK(theorem51_coefficient(3, 3, 3, 3, rat(4), rat(4)).coeff.is_zero());

    CHECK_THROWS_AS(theorem51_coefficient(1, 1, 2, 2, a, b), std::invalid_argument);
    CHECK_THROWS_AS(theorem51_coefficient(2, 4, 2, 2, a, b), std::out_of_range);
}

TEST_CASE("index reduction into {1,2,3}") {
    CHECK(mod3_index(1) == 1);
    CHECK(mod3_index(3) == 3);
    CHECK(mod3_index(4) == 1);
    CHECK(mod3_index(5) == 2);
    CHECK(mod3_index(0) == 3);
    CHECK(mod3_index(-2) == 1);
}

TEST_CASE("all 72 action equations hold at the calibrated constants") {
    const std::vector<std::pair<Rat, Rat>> samples{
        {rat(1), rat(0)}, {rat(0), rat(1)}, {rat(5, 3), rat(-2, 7)}};
    for (const auto& [a, b] : samples) {
        const auto report = verify_theorem51(a, b, rat(1, 2), kCalibrated);
        CHECK(report.verdict);
        REQUIRE(report.entries.size() == 72);
        for (const auto& e : report.entries) {
            CHECK(e.pass);
            CHECK(e.expected_coeff == e.computed_coeff);
        }
    }
}

TEST_CASE("each generator image is a single entangled line") {
    const TensorModule mod(rat(2), rat(1, 3), rat(1, 2));
    const EntangledBasis basis(kCalibrated);
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned j = 1; j <= 3; ++j) {
            if (i == 1 && j == 1) continue;
            const CycMat gen = mod.J_action(principal_T(i, j));
            for (unsigned k = 1; k <= 3; ++k)
                for (unsigned m = 1; m <= 3; ++m) {
                    const CycVec image = gen * basis.psi(k, m);
                    const auto ref =
                        theorem51_coefficient(i, j, k, m, mod.a(), mod.b());
                    CHECK(image ==
                          basis.psi(ref.k_target, ref.m_target) * ref.coeff);
                    for (unsigned kp = 1; kp <= 3; ++kp)
                        for (unsigned mp = 1; mp <= 3; ++mp)
                            if (kp != ref.k_target || mp != ref.m_target)
                                CHECK(basis.coordinate(kp, mp, image).is_zero());
                }
        }
}

TEST_CASE("dropping the casimir term breaks exactly the delta entries") {
    const auto report = verify_theorem51(rat(1), rat(0), rat(0), kCalibrated);
    CHECK_FALSE(report.verdict);
    std::size_t failures = 0;
    for (const auto& e : report.entries) {
        const bool target_delta =
            mod3_index(e.i + e.k - 1) == 1 && mod3_index(e.m + e.j - 1) == 1;
        const bool singlet_delta = e.k == 1 && e.m == 1;
        if (!e.pass) {
            ++failures;
            CHECK((target_delta || singlet_delta));
        } else {
            CHECK_FALSE(target_delta);
            CHECK_FALSE(singlet_delta);
        }
    }
    CHECK(failures == 16);
}

TEST_CASE("with a = b = 0 only the casimir deltas remain") {
    const auto report = verify_theorem51(rat(0), rat(0), rat(1, 2), kCalibrated);
    CHECK(report.verdict);
    for (const auto& e : report.entries) {
        Cyc expected = Cyc::zero(3);
        if (mod3_index(e.i + e.k - 1) == 1 && mod3_index(e.m + e.j - 1) == 1)
            expected += w((e.j - 1) * (e.k - 1)) * rat(3, 2);
        if (e.k == 1 && e.m == 1) expected -= Cyc::from_rat(3, rat(3, 2));
        CHECK(e.expected_coeff == expected);
        CHECK(e.computed_coeff == expected);
    }
}

TEST_CASE("wrong conventions fail") {
    CHECK_FALSE(verify_theorem51(rat(1), rat(0), rat(1, 2),
                                 {PhaseRole::Subscript, 0})
                    .verdict);
    CHECK_FALSE(verify_theorem51(rat(1), rat(0), rat(1), kCalibrated).verdict);

    // the raw delta reading misses exactly the wrapped-around target deltas
    const auto raw = verify_theorem51(rat(1), rat(0), rat(1, 2), kCalibrated,
                                      DeltaReading::Raw);
    CHECK_FALSE(raw.verdict);
    std::size_t failures = 0;
    for (const auto& e : raw.entries)
        if (!e.pass) {
            ++failures;
            CHECK(mod3_index(e.i + e.k - 1) == 1);
            CHECK(mod3_index(e.m + e.j - 1) == 1);
            // reduced hit, plain-integer miss: at least one sum wrapped
            CHECK((e.i + e.k - 1 != 1 || e.m + e.j - 1 != 1));
        }
    CHECK(failures == 8);
}

TEST_CASE("calibration finds the unique surviving convention") {
    const CalibrationResult cal = calibrate();
    CHECK(cal.c == rat(1, 2));
    CHECK(cal.convention.role == PhaseRole::Subscript);
    CHECK(cal.convention.shift == 2);
    CHECK(cal.reading == DeltaReading::ModReduced);
}

TEST_CASE("mixed bracket relation between the two levels") {
    const TensorModule mod(rat(5, 3), rat(-2, 7), rat(9, 4));
    const auto& basis = sl3_basis();
    for (const CycMat& x : basis.elements)
        for (const CycMat& y : basis.elements)
            CHECK(commutator(mod.I_action(x), mod.J_action(y)) ==
                  mod.J_action(commutator(x, y)));
}

TEST_CASE("echelon spans") {
    Echelon e(3, 4);
    CycVec v1(3, 4), v2(3, 4);
    v1.at(0) = Cyc::one(3);
    v1.at(2) = w(1);
    v2.at(1) = w(2);
    v2.at(2) = Cyc::one(3);

    CHECK(e.insert(v1));
    CHECK(e.rank() == 1);
    CHECK_FALSE(e.insert(v1 * w(2)));  // dependent
    CHECK(e.insert(v2));
    CHECK(e.rank() == 2);
    CHECK(e.contains(v1 + v2 * w(1)));
    CHECK_FALSE(e.contains(random_vec(4, 55)));

    // RREF bases are canonical: any insertion order gives equal objects
    Echelon f(3, 4);
    f.insert(v2 * w(1));
    f.insert(v1 + v2);
    CHECK(e == f);
    Echelon g(3, 4);
    g.insert(v1);
    CHECK(e != g);

    CHECK_THROWS_AS(e.insert(CycVec(3, 5)), std::invalid_argument);
}

TEST_CASE("seed closures at the reducible parameters") {
    const EntangledBasis basis(kCalibrated);

    const TensorModule singlet_side(rat(3, 2), rat(0), rat(1, 2));
    CHECK(submodule_closure(singlet_side, basis.psi(1, 1)).rank() == 1);
    CHECK(submodule_closure(singlet_side, basis.psi(1, 1)).contains(basis.psi(1, 1)));
    CHECK(submodule_closure(singlet_side, basis.psi(2, 3)).rank() == 9);

    const TensorModule adjoint_side(rat(0), rat(3, 2), rat(1, 2));
    CHECK(submodule_closure(adjoint_side, basis.psi(1, 2)).rank() == 8);
    CHECK(submodule_closure(adjoint_side, basis.psi(1, 1)).rank() == 9);
    // all non-singlet seeds land in one and the same 8-dimensional subspace
    const Echelon adj = submodule_closure(adjoint_side, basis.psi(1, 2));
    CHECK(submodule_closure(adjoint_side, basis.psi(3, 3)) == adj);

    const TensorModule generic(rat(1), rat(0), rat(1, 2));
    CHECK(submodule_closure(generic, basis.psi(2, 2)).rank() == 9);

    CHECK_THROWS_AS(submodule_closure(generic, CycVec(3, 9)), std::invalid_argument);
}

TEST_CASE("burnside dimension of the action algebra") {
    CHECK(burnside_dimension(TensorModule(rat(1), rat(0), rat(1, 2))) == 81);
    CHECK(burnside_dimension(TensorModule(rat(2), rat(1, 3), rat(1, 2))) == 81);
    CHECK(burnside_dimension(TensorModule(rat(0), rat(0), rat(1, 2))) == 81);
    CHECK(burnside_dimension(TensorModule(rat(3, 2), rat(0), rat(1, 2))) == 72);
    CHECK(burnside_dimension(TensorModule(rat(0), rat(3, 2), rat(1, 2))) == 72);
}

TEST_CASE("irreducibility verdicts") {
    const EntangledBasis basis(kCalibrated);

    const auto good = irreducibility(TensorModule(rat(1), rat(0), rat(1, 2)), basis);
    CHECK(good.irreducible);
    CHECK(good.algebra_dim == 81);
    CHECK(good.seed_closures.empty());
    CHECK(good.proper_dims.empty());
    CHECK(to_string(good) == "Irreducible");

    const auto singlet =
        irreducibility(TensorModule(rat(3, 2), rat(0), rat(1, 2)), basis);
    CHECK_FALSE(singlet.irreducible);
    CHECK(singlet.algebra_dim == 72);
    REQUIRE(singlet.seed_closures.size() == 9);
    std::size_t proper_seeds = 0;
    for (const auto& s : singlet.seed_closures)
        if (s.proper) {
            ++proper_seeds;
            CHECK(s.k == 1);
            CHECK(s.m == 1);
            CHECK(s.dim == 1);
        }
    CHECK(proper_seeds == 1);
    CHECK(singlet.proper_dims == std::vector<std::size_t>{1});
    CHECK(to_string(singlet) == "Reducible(dim 1)");

    const auto adjoint =
        irreducibility(TensorModule(rat(0), rat(3, 2), rat(1, 2)), basis);
    CHECK_FALSE(adjoint.irreducible);
    REQUIRE(adjoint.seed_closures.size() == 9);
    proper_seeds = 0;
    for (const auto& s : adjoint.seed_closures)
        if (s.proper) {
            ++proper_seeds;
            CHECK(s.dim == 8);
        }
    CHECK(proper_seeds == 8);  // every non-singlet seed, all one subspace
    CHECK(adjoint.proper_dims == std::vector<std::size_t>{8});
    CHECK(to_string(adjoint) == "Reducible(dim 8)");
}

TEST_CASE("verdicts depend on a - b only") {
    for (const Rat& t : {rat(1), rat(-2), rat(5, 2)}) {
        CHECK(irreducibility(TensorModule(rat(1) + t, t, rat(1, 2))).irreducible);
        const auto v = irreducibility(TensorModule(rat(3, 2) + t, t, rat(1, 2)));
        CHECK_FALSE(v.irreducible);
        CHECK(v.proper_dims == std::vector<std::size_t>{1});
    }
}
