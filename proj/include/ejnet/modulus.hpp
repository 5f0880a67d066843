#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ejnet/ej_int.hpp"
#include "ejnet/rational.hpp"

namespace ejnet {

struct WeightBucket {
    int64_t distance = 0;
    int64_t count = 0;

    friend bool operator==(const WeightBucket&, const WeightBucket&) = default;
};

// Modulus alpha = a + b*rho defining the quotient network EJ_alpha. Requires
// 0 <= a <= b, at least 7 nodes and a node count that fits in 32 bits.
//
// Two rational landmarks govern the ring sizes around a node:
//   crossover      = (a + b)/2   -- where the ring-count law changes shape
//   diameter_bound = (a + 2b)/3  -- upper bound on the eccentricity
// The integer diameter comes from the closed-form distance distribution and
// equals a whenever b = a + 1 (verified against BFS in the test suite).
class Modulus {
public:
    Modulus(int64_t a, int64_t b);

    int64_t a() const { return a_; }
    int64_t b() const { return b_; }
    int64_t norm() const { return norm_; }
    EjInt generator() const { return {a_, b_}; }

    Rational crossover() const { return crossover_; }
    Rational diameter_bound() const { return diameter_bound_; }
    int64_t diameter() const { return diameter_; }

    // True for the b = a + 1 family, the one the broadcast schedules cover.
    bool broadcastable() const { return b_ == a_ + 1; }

    // Number of residues at each distance from a node, 0..diameter.
    std::vector<WeightBucket> weight_distribution() const;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    int64_t a_ = 0;
    int64_t b_ = 0;
    int64_t norm_ = 0;
    Rational crossover_;
    Rational diameter_bound_;
    int64_t diameter_ = 0;
    std::vector<int64_t> ring_sizes_; // index = distance
};

// Canonical representative of z modulo m: the minimum-weight element of the
// residue class, ties broken by lexicographic (x, then y) order. Idempotent.
EjInt mod_reduce(EjInt z, const Modulus& m);

// All norm(m) canonical representatives, sorted by (weight, then lex).
// Element 0 is always the zero residue.
std::vector<EjInt> residues(const Modulus& m);

// Hop distance from the zero node to z's class.
int64_t weight(EjInt z, const Modulus& m);

// Hop distance between two classes.
int64_t distance(EjInt p, EjInt q, const Modulus& m);

// Nodes at each hop distance from a fixed node of the dims-fold product
// network: the dims-fold convolution of the per-dimension distribution.
std::vector<int64_t> distance_histogram(const Modulus& m, int dims);

} // namespace ejnet
