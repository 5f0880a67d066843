#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "ejnet/errors.hpp"

namespace ejnet {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer add overflow");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer sub overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer mul overflow");
    return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

// Element x + y*rho of the hexagonal lattice, where rho = (1 + i*sqrt(3))/2,
// so rho^2 = -1 + rho and rho^3 = -1. Plain value type; all arithmetic is
// exact 64-bit with overflow checks.
struct EjInt {
    int64_t x = 0;
    int64_t y = 0;

    friend bool operator==(const EjInt&, const EjInt&) = default;
};

inline EjInt operator+(EjInt p, EjInt q) { return {checked_add(p.x, q.x), checked_add(p.y, q.y)}; }
inline EjInt operator-(EjInt p, EjInt q) { return {checked_sub(p.x, q.x), checked_sub(p.y, q.y)}; }
inline EjInt operator-(EjInt p) { return {checked_neg(p.x), checked_neg(p.y)}; }

// (x1 + y1 rho)(x2 + y2 rho) with rho^2 = -1 + rho.
inline EjInt operator*(EjInt p, EjInt q) {
    int64_t x = checked_sub(checked_mul(p.x, q.x), checked_mul(p.y, q.y));
    int64_t y = checked_add(checked_add(checked_mul(p.x, q.y), checked_mul(p.y, q.x)),
                            checked_mul(p.y, q.y));
    return {x, y};
}

// Conjugate: x + y - y*rho. Satisfies z * ej_conj(z) = ej_norm(z).
inline EjInt ej_conj(EjInt z) { return {checked_add(z.x, z.y), checked_neg(z.y)}; }

// Squared Euclidean length x^2 + xy + y^2 (always >= 0).
inline int64_t ej_norm(EjInt z) {
    return checked_add(checked_add(checked_mul(z.x, z.x), checked_mul(z.x, z.y)),
                       checked_mul(z.y, z.y));
}

// Hop distance from 0 in the infinite lattice whose moves are the six units
// +-1, +-rho, +-rho^2. Equals min |i|+|j|+|k| over z = i + j*rho + k*rho^2,
// which closes to (|x| + |y| + |x+y|)/2.
inline int64_t free_weight(EjInt z) {
    int64_t s = checked_add(std::llabs(z.x), std::llabs(z.y));
    return (checked_add(s, std::llabs(checked_add(z.x, z.y)))) / 2;
}

// Orders by weight, then lexicographically by (x, y); used to pick canonical
// residue representatives deterministically.
inline bool weight_lex_less(EjInt p, EjInt q) {
    int64_t wp = free_weight(p), wq = free_weight(q);
    if (wp != wq) return wp < wq;
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

// Compact human-readable form, e.g. "0", "1", "-3rho", "2-1rho".
inline std::string to_string(EjInt z) {
    if (z.x == 0 && z.y == 0) return "0";
    std::string s;
    if (z.x != 0) s += std::to_string(z.x);
    if (z.y != 0) {
        if (z.y > 0 && z.x != 0) s += "+";
        if (z.y == -1) s += "-";
        else if (z.y != 1) s += std::to_string(z.y);
        s += "rho";
    }
    return s;
}

} // namespace ejnet
