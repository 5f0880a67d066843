#pragma once

// Slow reference implementations, written straight from the definitions,
// that the library is checked against. Nothing here shares code paths with
// the fast implementations.

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "ejnet/ej_int.hpp"
#include "ejnet/modulus.hpp"

namespace oracle {

using ejnet::EjInt;
using ejnet::Modulus;

// alpha | z iff z * conj(alpha) has both coefficients divisible by
// norm(alpha) (multiply through by conj to clear the denominator).
inline bool divides(EjInt alpha, EjInt z) {
    EjInt t = z * ejnet::ej_conj(alpha);
    int64_t n = ejnet::ej_norm(alpha);
    return t.x % n == 0 && t.y % n == 0;
}

inline bool congruent(EjInt p, EjInt q, const Modulus& m) {
    return divides(m.generator(), p - q);
}

// Hop weight of z in the infinite lattice found by scanning the single free
// parameter of z = i + j*rho + k*rho^2.
inline int64_t lattice_weight(EjInt z, int64_t span = 64) {
    int64_t best = -1;
    for (int64_t k = -span; k <= span; ++k) {
        int64_t w = std::llabs(z.x + k) + std::llabs(z.y - k) + std::llabs(k);
        if (best < 0 || w < best) best = w;
    }
    return best;
}

// The residue graph rebuilt from scratch: classes are discovered by breadth-
// first search from zero, membership decided by the divisibility test alone.
class ClassGraph {
public:
    explicit ClassGraph(const Modulus& m) : mod_(m) {
        reps_.push_back({0, 0});
        dist_.push_back(0);
        std::queue<size_t> q;
        q.push(0);
        while (!q.empty()) {
            size_t cur = q.front();
            q.pop();
            for (ejnet::Unit u : ejnet::kAllUnits) {
                EjInt t = reps_[cur] + ejnet::unit_value(u);
                if (find(t) >= 0) continue;
                reps_.push_back(t);
                dist_.push_back(dist_[cur] + 1);
                q.push(reps_.size() - 1);
            }
        }
    }

    int64_t class_count() const { return static_cast<int64_t>(reps_.size()); }

    // Index of z's class, or -1 when undiscovered (never happens after the
    // constructor finishes, since the graph is connected).
    int64_t find(EjInt z) const {
        for (size_t i = 0; i < reps_.size(); ++i)
            if (congruent(z, reps_[i], mod_)) return static_cast<int64_t>(i);
        return -1;
    }

    int64_t weight(EjInt z) const { return dist_[static_cast<size_t>(find(z))]; }

    std::vector<int64_t> histogram() const {
        std::vector<int64_t> h;
        for (int64_t d : dist_) {
            if (static_cast<size_t>(d) >= h.size()) h.resize(static_cast<size_t>(d) + 1, 0);
            ++h[static_cast<size_t>(d)];
        }
        return h;
    }

private:
    Modulus mod_;
    std::vector<EjInt> reps_;
    std::vector<int64_t> dist_;
};

// Class count over a coordinate box via the injective key
// z*conj(alpha) mod norm; scales to large norms where ClassGraph cannot.
inline int64_t box_class_count(const Modulus& m, int64_t half_side) {
    std::set<std::pair<int64_t, int64_t>> keys;
    const EjInt c = ejnet::ej_conj(m.generator());
    const int64_t n = m.norm();
    auto smod = [n](int64_t v) { return ((v % n) + n) % n; };
    for (int64_t x = -half_side; x <= half_side; ++x)
        for (int64_t y = -half_side; y <= half_side; ++y) {
            EjInt t = EjInt{x, y} * c;
            keys.insert({smod(t.x), smod(t.y)});
        }
    return static_cast<int64_t>(keys.size());
}

} // namespace oracle
