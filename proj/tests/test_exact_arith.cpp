// Field arithmetic in Q(w_n): canonical forms, hand-checked identities,
// inverses, conjugation, and serialization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "yangian/cyclotomic.hpp"

using namespace yangian;

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) {
    std::vector<Rat> out;
    for (long x : v) out.push_back(rat(x));
    return out;
}

// Deterministic element pool with small mixed-denominator coordinates.
std::vector<Cyc> pool(unsigned n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Cyc> out;
    const unsigned phi = euler_phi(n);
    while (out.size() < count) {
        std::vector<Rat> coeffs(phi);
        for (auto& c : coeffs)
            c = rat(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
        out.push_back(Cyc::from_poly(n, coeffs));
    }
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match hand-computed values") {
    CHECK(cyclotomic_poly(1) == rats({-1, 1}));
    CHECK(cyclotomic_poly(2) == rats({1, 1}));
    CHECK(cyclotomic_poly(3) == rats({1, 1, 1}));
    CHECK(cyclotomic_poly(4) == rats({1, 0, 1}));
    CHECK(cyclotomic_poly(5) == rats({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(6) == rats({1, -1, 1}));
    CHECK(cyclotomic_poly(8) == rats({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_poly(12) == rats({1, 0, -1, 0, 1}));

    for (unsigned n = 1; n <= 16; ++n) CHECK(cyclotomic_poly(n).size() == euler_phi(n) + 1);
}

TEST_CASE("euler phi") {
    const unsigned expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (unsigned n = 1; n <= 12; ++n) CHECK(euler_phi(n) == expected[n - 1]);
}

TEST_CASE("roots of unity have exact order") {
    for (unsigned n = 2; n <= 12; ++n) {
        CHECK(Cyc::root(n, 0) == Cyc::one(n));
        CHECK(Cyc::root(n, n) == Cyc::one(n));
        CHECK(Cyc::root(n, -1) == Cyc::root(n, static_cast<long>(n) - 1));
        for (unsigned k = 1; k < n; ++k) CHECK(Cyc::root(n, k) != Cyc::one(n));
        CHECK(Cyc::root(n, 1).pow(n) == Cyc::one(n));
    }
}

TEST_CASE("hand identities in small fields") {
    const Cyc w3 = Cyc::root(3, 1);
    CHECK(w3 + w3 * w3 == Cyc::from_rat(3, rat(-1)));  // w + w^2 = -1
    CHECK(w3 * w3.pow(2) == Cyc::one(3));              // w * w^2 = 1

    const Cyc i = Cyc::root(4, 1);
    CHECK(i * i == Cyc::from_rat(4, rat(-1)));
    const Cyc one4 = Cyc::one(4);
    CHECK((one4 + i) * (one4 - i) == Cyc::from_rat(4, rat(2)));
}

TEST_CASE("geometric sums vanish") {
    for (unsigned n = 1; n <= 12; ++n) {
        Cyc sum = Cyc::zero(n);
        for (unsigned k = 0; k < n; ++k) sum += Cyc::root(n, k);
        CHECK(sum == (n == 1 ? Cyc::one(1) : Cyc::zero(n)));
    }
    // sum_k w^{jk} = n [j = 0 mod n]
    for (unsigned n = 2; n <= 8; ++n) {
        for (long j = -2; j < static_cast<long>(2 * n); ++j) {
            Cyc sum = Cyc::zero(n);
            for (unsigned k = 0; k < n; ++k) sum += Cyc::root(n, j * k);
            const bool zero_mode = ((j % n) + n) % n == 0;
            CHECK(sum == (zero_mode ? Cyc::from_rat(n, rat(n)) : Cyc::zero(n)));
        }
    }
}

TEST_CASE("inverses") {
    const Cyc w = Cyc::root(3, 1);
    const Cyc one = Cyc::one(3);

    // (1 - w)^{-1} = (2 + w)/3, checked both as a value and by product.
    const Cyc inv = (one - w).inv();
    CHECK(inv == (Cyc::from_rat(3, rat(2)) + w) * rat(1, 3));
    CHECK((one - w) * inv == one);

    CHECK(Cyc::from_rat(5, rat(2)).inv() == Cyc::from_rat(5, rat(1, 2)));
    CHECK_THROWS_AS(Cyc::zero(6).inv(), std::domain_error);

    for (unsigned n : {3u, 4u, 5u, 6u, 8u})
        for (const Cyc& x : pool(n, 10, 17 * n))
            if (!x.is_zero()) CHECK(x * x.inv() == Cyc::one(n));
}

TEST_CASE("field axioms on deterministic pools") {
    for (unsigned n : {3u, 4u, 5u, 6u, 8u}) {
        const auto xs = pool(n, 20, 1000 + n);
        const Cyc zero = Cyc::zero(n), one = Cyc::one(n);
        for (std::size_t t = 0; t + 2 < xs.size(); ++t) {
            const Cyc &a = xs[t], &b = xs[t + 1], &c = xs[t + 2];
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a - a == zero);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("canonical form is idempotent and reduces high powers") {
    for (unsigned n : {3u, 4u, 5u, 6u, 8u})
        for (const Cyc& x : pool(n, 8, 77 * n)) CHECK(Cyc::from_poly(n, x.coeffs()) == x);

    // x^3 over Q(w_3) folds to 1; x^2 over Q(w_4) is rational -1.
    CHECK(Cyc::from_poly(3, rats({0, 0, 0, 1})) == Cyc::one(3));
    const Cyc m1 = Cyc::from_poly(4, rats({0, 0, 1}));
    CHECK(m1.is_rational());
    CHECK(m1.rational_part() == rat(-1));
    // w^2 over Q(w_3) leaves the power basis: w^2 = -1 - w.
    CHECK(Cyc::from_poly(3, rats({0, 0, 1})) == Cyc::from_poly(3, rats({-1, -1})));
}

TEST_CASE("conjugation is the inverse-root automorphism") {
    for (unsigned n : {3u, 4u, 5u, 6u, 8u}) {
        CHECK(Cyc::root(n, 1).conj() == Cyc::root(n, static_cast<long>(n) - 1));
        const auto xs = pool(n, 8, 31 * n);
        for (std::size_t t = 0; t + 1 < xs.size(); ++t) {
            const Cyc &a = xs[t], &b = xs[t + 1];
            CHECK(a.conj().conj() == a);
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
        for (unsigned k = 0; k < n; ++k)
            CHECK(Cyc::root(n, k) * Cyc::root(n, k).conj() == Cyc::one(n));
    }
}

TEST_CASE("powers") {
    for (unsigned n : {3u, 5u, 8u}) {
        for (const Cyc& x : pool(n, 5, 7 * n)) {
            CHECK(x.pow(0) == Cyc::one(n));
            Cyc acc = Cyc::one(n);
            for (long e = 1; e <= 6; ++e) {
                acc *= x;
                CHECK(x.pow(e) == acc);
                if (!x.is_zero()) CHECK(x.pow(-e) == acc.inv());
            }
        }
    }
}

TEST_CASE("json serialization round-trips") {
    for (unsigned n : {3u, 4u, 8u}) {
        for (const Cyc& x : pool(n, 6, 13 * n)) {
            const auto j = to_json(x);
            CHECK(j["order"] == n);
            CHECK(j["coeffs"].size() == euler_phi(n));
            CHECK(cyc_from_json(j) == x);
        }
    }
    CHECK_THROWS_AS(cyc_from_json(nlohmann::json{{"order", 3}, {"coeffs", {"1"}}}),
                    std::invalid_argument);
}

TEST_CASE("mixed orders are rejected") {
    CHECK_THROWS_AS(Cyc::one(3) + Cyc::one(4), std::invalid_argument);
    CHECK_THROWS_AS(Cyc::root(5, 1) * Cyc::root(6, 1), std::invalid_argument);
}

TEST_CASE("rational literal parsing") {
    CHECK(rat_from_string("3/4") == rat(3, 4));
    CHECK(rat_from_string("-3/4") == rat(-3, 4));
    CHECK(rat_from_string("+7") == rat(7));
    CHECK(rat_from_string("6/4") == rat(3, 2));
    CHECK(rat_to_string(rat(-10, 4)) == "-5/2");
    CHECK(rat_to_string(rat(8, 4)) == "2");
    for (const char* bad : {"", "1/x", "x", "1/0", "1.5", "2/-3", "1/", "/2", "--1"})
        CHECK_THROWS_AS(rat_from_string(bad), std::invalid_argument);
}
