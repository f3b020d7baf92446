// Exact rational scalars: a thin layer over GMP's mpq_class.
//
// gmpxx returns expression templates from arithmetic operators; every helper
// here collapses results into a canonicalized mpq_class so that equality
// tests and string conversion are always performed on reduced fractions.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace yangian {

using Rat = mpq_class;

// Parses "p/q" or "p" (optional sign, arbitrary precision). Rejects anything
// else, including empty strings and zero denominators.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto valid = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t start = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) start = 1;
        if (start == part.size()) return false;
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid(s, true)) throw std::invalid_argument("bad rational literal: " + s);
    } else {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid(num, true) || !valid(den, false))
            throw std::invalid_argument("bad rational literal: " + s);
        if (mpz_class(den) == 0) throw std::invalid_argument("zero denominator: " + s);
    }
    // GMP rejects an explicit leading plus sign.
    Rat r(s[0] == '+' ? s.substr(1) : s);
    r.canonicalize();
    return r;
}

// Lowest-terms rendering; integers print without the "/1".
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace yangian
