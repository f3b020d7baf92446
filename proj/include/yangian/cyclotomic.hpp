// Exact arithmetic in the cyclotomic field Q(w), w = exp(2*pi*i/n).
//
// An element is stored in canonical form: phi(n) rational coordinates over
// the power basis {1, w, ..., w^{phi(n)-1}}, i.e. the residue modulo the n-th
// cyclotomic polynomial. Equality is coefficient comparison; reduction goes
// through x^n - 1 first (exponent folding) and then divides by Phi_n, which
// is valid because Phi_n divides x^n - 1.
#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "yangian/rational.hpp"

namespace yangian {

unsigned euler_phi(unsigned n);

// Monic n-th cyclotomic polynomial, ascending coefficients, length phi(n)+1.
// Computed by exact division of x^n - 1 by the product of Phi_d over proper
// divisors d | n; results are memoized.
std::vector<Rat> cyclotomic_poly(unsigned n);

class Cyc {
  public:
    Cyc() : order_(1), coeffs_(1, Rat(0)) {}

    static Cyc zero(unsigned n);
    static Cyc one(unsigned n);
    static Cyc from_rat(unsigned n, const Rat& r);
    // w^k in canonical form; k is reduced modulo n (negative k allowed).
    static Cyc root(unsigned n, long k);
    // Element with the given power-basis residue (length <= phi(n) after
    // reduction; longer inputs are reduced).
    static Cyc from_poly(unsigned n, std::vector<Rat> poly);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;  // all coordinates beyond the constant vanish
    Rat rational_part() const { return coeffs_[0]; }

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    Cyc operator*(const Rat& s) const;

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_n (irreducible over Q, so every nonzero element is a unit).
    Cyc inv() const;
    Cyc operator/(const Cyc& o) const { return *this * o.inv(); }

    // Galois conjugation w -> w^{n-1} = complex conjugation on the embedding.
    Cyc conj() const;

    Cyc pow(long e) const;

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    std::string to_string() const;  // polynomial rendering in w, for reports

  private:
    Cyc(unsigned n, std::vector<Rat> canonical)
        : order_(n), coeffs_(std::move(canonical)) {}
    static void check_same_order(const Cyc& a, const Cyc& b);

    unsigned order_;
    std::vector<Rat> coeffs_;  // length euler_phi(order_)
};

// Serialization: {"order": n, "coeffs": ["p/q" x phi(n)]}.
nlohmann::ordered_json to_json(const Cyc& c);
Cyc cyc_from_json(const nlohmann::json& j);

}  // namespace yangian
