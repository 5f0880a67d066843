#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ejnet/errors.hpp"

namespace ejnet {

// Exact rational on int64, always reduced with positive denominator.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw ConfigError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Comparisons via cross-multiplication (operands stay small here).
inline bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
inline bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }

} // namespace ejnet
