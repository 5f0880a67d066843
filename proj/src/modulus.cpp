#include "ejnet/modulus.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ejnet {
namespace {

// Divide with rounding half away from zero; |p/q - result| <= 1/2.
int64_t rounded_div(int64_t p, int64_t q) {
    if (p >= 0) return (p + q / 2) / q;
    return -((-p + q / 2) / q);
}

// Quotient offsets scanned around the rounded quotient. The canonical
// representative r* satisfies |z - (q0+d)*alpha| with Euclidean |d| < 2,
// and every lattice element of hop weight 3 already has length >= 2.59,
// so the weight <= 2 ball (19 elements) is guaranteed to contain the
// right quotient adjustment.
constexpr std::array<EjInt, 19> kQuotientOffsets = {{
    {0, 0},
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
    {2, 0}, {0, 2}, {-2, 2}, {-2, 0}, {0, -2}, {2, -2},
    {1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1},
}};

} // namespace

Modulus::Modulus(int64_t a, int64_t b) : a_(a), b_(b) {
    if (a < 0 || b < 0 || a > b) throw ConfigError("modulus requires 0 <= a <= b");
    if (a == 0 && b == 0) throw ConfigError("modulus must be nonzero");
    norm_ = ej_norm({a, b});
    if (norm_ < 7) throw ConfigError("modulus too small: need at least 7 nodes");
    if (norm_ > (int64_t{1} << 31)) throw ConfigError("modulus too large: node count above 2^31");

    crossover_ = Rational(a + b, 2);
    diameter_bound_ = Rational(a + 2 * b, 3);

    // Closed-form ring sizes: 1 at distance 0, then 6s out to the crossover,
    // 18*(bound - s) beyond it, an antipodal pair at the bound when it is an
    // integer (b = a mod 3), and the remainder sitting on the crossover ring
    // when that is an integer.
    int64_t s_floor = (a + 2 * b) / 3;
    ring_sizes_.assign(static_cast<size_t>(s_floor) + 1, 0);
    ring_sizes_[0] = 1;
    for (int64_t s = 1; s <= s_floor; ++s) {
        if (2 * s < a + b) ring_sizes_[static_cast<size_t>(s)] = 6 * s;
        else if (2 * s > a + b && 3 * s < a + 2 * b)
            ring_sizes_[static_cast<size_t>(s)] = 6 * (a + 2 * b) - 18 * s;
    }
    if ((b - a) % 3 == 0) ring_sizes_[static_cast<size_t>(s_floor)] += 2;
    if ((a + b) % 2 == 0) {
        int64_t t = (a + b) / 2;
        int64_t assigned = std::accumulate(ring_sizes_.begin(), ring_sizes_.end(), int64_t{0});
        if (t <= s_floor) ring_sizes_[static_cast<size_t>(t)] += norm_ - assigned;
    }
    while (!ring_sizes_.empty() && ring_sizes_.back() == 0) ring_sizes_.pop_back();

    int64_t total = std::accumulate(ring_sizes_.begin(), ring_sizes_.end(), int64_t{0});
    if (total != norm_ || ring_sizes_.empty())
        throw InvariantViolation("ring sizes do not sum to the node count");
    diameter_ = static_cast<int64_t>(ring_sizes_.size()) - 1;
    if (3 * diameter_ > a + 2 * b + 2)
        throw InvariantViolation("diameter exceeds its closed-form bound");
    if (broadcastable() && diameter_ != a)
        throw InvariantViolation("b = a+1 modulus must have diameter a");
}

std::vector<WeightBucket> Modulus::weight_distribution() const {
    std::vector<WeightBucket> out;
    out.reserve(ring_sizes_.size());
    for (size_t s = 0; s < ring_sizes_.size(); ++s)
        out.push_back({static_cast<int64_t>(s), ring_sizes_[s]});
    return out;
}

EjInt mod_reduce(EjInt z, const Modulus& m) {
    const EjInt alpha = m.generator();
    const int64_t n = m.norm();
    // Exact quotient estimate: z * conj(alpha) / norm, rounded per coefficient.
    EjInt t = z * ej_conj(alpha);
    EjInt q0{rounded_div(t.x, n), rounded_div(t.y, n)};
    EjInt base = z - q0 * alpha;
    EjInt best = base;
    for (size_t i = 1; i < kQuotientOffsets.size(); ++i) {
        EjInt cand = base - kQuotientOffsets[i] * alpha;
        if (weight_lex_less(cand, best)) best = cand;
    }
    return best;
}

std::vector<EjInt> residues(const Modulus& m) {
    // Every canonical representative has weight <= diameter, hence both
    // coordinates within [-diameter, diameter]; reducing that box reaches
    // every class.
    const int64_t r = m.diameter();
    std::vector<EjInt> out;
    out.reserve(static_cast<size_t>((2 * r + 1) * (2 * r + 1)));
    for (int64_t x = -r; x <= r; ++x)
        for (int64_t y = -r; y <= r; ++y)
            out.push_back(mod_reduce({x, y}, m));
    std::sort(out.begin(), out.end(), weight_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (static_cast<int64_t>(out.size()) != m.norm())
        throw InvariantViolation("residue enumeration does not match the norm");
    return out;
}

int64_t weight(EjInt z, const Modulus& m) { return free_weight(mod_reduce(z, m)); }

int64_t distance(EjInt p, EjInt q, const Modulus& m) { return weight(p - q, m); }

std::vector<int64_t> distance_histogram(const Modulus& m, int dims) {
    if (dims < 1) throw ConfigError("dims must be at least 1");
    std::vector<int64_t> one;
    for (const WeightBucket& b : m.weight_distribution()) one.push_back(b.count);
    std::vector<int64_t> acc = one;
    for (int i = 2; i <= dims; ++i) {
        std::vector<int64_t> next(acc.size() + one.size() - 1, 0);
        for (size_t p = 0; p < acc.size(); ++p)
            for (size_t q = 0; q < one.size(); ++q)
                next[p + q] = checked_add(next[p + q], checked_mul(acc[p], one[q]));
        acc = std::move(next);
    }
    return acc;
}

} // namespace ejnet
