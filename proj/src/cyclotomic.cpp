#include "yangian/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace yangian {

namespace {

using Poly = std::vector<Rat>;  // ascending coefficients

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            Rat t(a[i] * b[j]);
            out[i + j] += t;
            out[i + j].canonicalize();
        }
    }
    poly_trim(out);
    return out;
}

// Exact division with remainder by a monic-leading divisor (any nonzero
// leading coefficient is handled; divisions stay in Q).
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    Poly quot;
    poly_trim(num);
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rat(0));
    const Rat& lead = den.back();
    while (num.size() >= den.size()) {
        Rat f(num.back() / lead);
        f.canonicalize();
        const std::size_t shift = num.size() - den.size();
        quot[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) {
            Rat t(f * den[i]);
            num[shift + i] -= t;
            num[shift + i].canonicalize();
        }
        poly_trim(num);  // leading term cancels exactly
    }
    return {std::move(quot), std::move(num)};
}

std::map<unsigned, Poly>& phi_cache() {
    static std::map<unsigned, Poly> cache;
    return cache;
}
std::mutex phi_mutex;

}  // namespace

unsigned euler_phi(unsigned n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Rat> cyclotomic_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly(0)");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto& cache = phi_cache();
    auto compute = [&cache](auto&& self, unsigned m) -> const Poly& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        // x^m - 1 divided by the product of Phi_d over proper divisors d | m
        Poly num(m + 1, Rat(0));
        num[0] = Rat(-1);
        num[m] = Rat(1);
        Poly den{Rat(1)};
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) den = poly_mul(den, self(self, d));
        auto [quot, rem] = poly_divmod(std::move(num), den);
        if (!rem.empty()) throw std::logic_error("cyclotomic division left a remainder");
        return cache.emplace(m, std::move(quot)).first->second;
    };
    return compute(compute, n);
}

void Cyc::check_same_order(const Cyc& a, const Cyc& b) {
    if (a.order_ != b.order_)
        throw std::invalid_argument("cyclotomic order mismatch: " +
                                    std::to_string(a.order_) + " vs " +
                                    std::to_string(b.order_));
}

Cyc Cyc::zero(unsigned n) { return from_poly(n, {}); }

Cyc Cyc::one(unsigned n) { return from_poly(n, {Rat(1)}); }

Cyc Cyc::from_rat(unsigned n, const Rat& r) {
    Rat c(r);
    c.canonicalize();
    return from_poly(n, {std::move(c)});
}

Cyc Cyc::root(unsigned n, long k) {
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    std::vector<Rat> p(static_cast<std::size_t>(r) + 1, Rat(0));
    p.back() = Rat(1);
    return from_poly(n, std::move(p));
}

Cyc Cyc::from_poly(unsigned n, std::vector<Rat> poly) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    const unsigned phi = euler_phi(n);
    // fold exponents modulo n (x^n = 1), then reduce modulo Phi_n
    std::vector<Rat> folded(n, Rat(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
        if (poly[e] == 0) continue;
        folded[e % n] += poly[e];
        folded[e % n].canonicalize();
    }
    poly_trim(folded);
    if (folded.size() > phi) {
        auto [quot, rem] = poly_divmod(std::move(folded), cyclotomic_poly(n));
        folded = std::move(rem);
    }
    folded.resize(phi, Rat(0));
    return Cyc(n, std::move(folded));
}

bool Cyc::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Cyc Cyc::operator-() const {
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = Rat(-coeffs_[i]);
    return Cyc(order_, std::move(out));
}

Cyc& Cyc::operator+=(const Cyc& o) {
    check_same_order(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
        coeffs_[i].canonicalize();
    }
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    check_same_order(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
        coeffs_[i].canonicalize();
    }
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    check_same_order(*this, o);
    *this = from_poly(order_, poly_mul(coeffs_, o.coeffs_));
    return *this;
}

Cyc Cyc::operator*(const Rat& s) const {
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = Rat(coeffs_[i] * s);
        out[i].canonicalize();
    }
    return Cyc(order_, std::move(out));
}

Cyc Cyc::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(w)");
    // extended Euclid: s*f + t*Phi_n = gcd; gcd is a nonzero constant
    Poly r0 = cyclotomic_poly(order_), r1 = coeffs_;
    poly_trim(r1);
    Poly s0{}, s1{Rat(1)};  // coefficients of f in the Bezout combination
    while (r1.size() > 1) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly qs1 = poly_mul(q, s1);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs1.size()), Rat(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) {
            s2[i] -= qs1[i];
            s2[i].canonicalize();
        }
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("element shares a factor with Phi_n");
    Rat scale(1 / r1[0]);
    scale.canonicalize();
    Poly out = std::move(s1);
    for (auto& c : out) {
        c *= scale;
        c.canonicalize();
    }
    return from_poly(order_, std::move(out));
}

Cyc Cyc::conj() const {
    std::vector<Rat> p(order_, Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const std::size_t e = (order_ - k % order_) % order_;
        p[e] += coeffs_[k];
        p[e].canonicalize();
    }
    return from_poly(order_, std::move(p));
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyc acc = Cyc::one(order_);
    Cyc base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) acc *= base;
        base *= base;
        u >>= 1;
    }
    return acc;
}

bool Cyc::operator==(const Cyc& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::string Cyc::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Rat c = coeffs_[k];
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        Rat a(abs(c));
        a.canonicalize();
        const bool unit = (a == 1);
        if (k == 0 || !unit) out << rat_to_string(a);
        if (k > 0) {
            if (!unit) out << "*";
            out << "w";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

nlohmann::ordered_json to_json(const Cyc& c) {
    nlohmann::ordered_json j;
    j["order"] = c.order();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : c.coeffs()) arr.push_back(rat_to_string(r));
    j["coeffs"] = std::move(arr);
    return j;
}

Cyc cyc_from_json(const nlohmann::json& j) {
    const unsigned n = j.at("order").get<unsigned>();
    std::vector<Rat> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(rat_from_string(s.get<std::string>()));
    if (coeffs.size() != euler_phi(n))
        throw std::invalid_argument("coefficient count does not match phi(order)");
    return Cyc::from_poly(n, std::move(coeffs));
}

}  // namespace yangian
