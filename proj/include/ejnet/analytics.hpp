#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ejnet/modulus.hpp"
#include "ejnet/units.hpp"

namespace ejnet {

// Unsigned 128-bit message counter; every operation that could wrap throws
// instead.
class Count {
public:
    Count() = default;
    Count(uint64_t v) : v_(v) {}

    Count& operator+=(Count o);
    Count& operator-=(Count o);
    Count& operator*=(Count o);
    friend Count operator+(Count a, Count b) { return a += b; }
    friend Count operator-(Count a, Count b) { return a -= b; }
    friend Count operator*(Count a, Count b) { return a *= b; }
    friend bool operator==(Count a, Count b) { return a.v_ == b.v_; }
    friend bool operator!=(Count a, Count b) { return a.v_ != b.v_; }
    friend bool operator<(Count a, Count b) { return a.v_ < b.v_; }
    friend bool operator<=(Count a, Count b) { return a.v_ <= b.v_; }

    std::string str() const;
    double approx() const { return static_cast<double>(v_); }
    unsigned __int128 raw() const { return v_; }

private:
    unsigned __int128 v_ = 0;
};

Count count_pow(Count base, int exp);

// Fixed-point decimal rendering of num/den, rounded half up.
std::string decimal_string(Count num, Count den, int frac_digits);

struct AnalyticRow {
    int32_t step = 0;
    int32_t round = 0; // 0 for round-free schedules
    Count senders;
    Count receivers;
};

struct AnalyticTable {
    Algorithm algorithm = Algorithm::Previous;
    int dims = 0;
    int32_t steps = 0;
    Count node_count;
    std::vector<AnalyticRow> rows;
    Count total_senders;
    Count total_receivers;
};

// Message-count bookkeeping for the pipelined schedule without touching any
// network: packets are grouped by (dimension, remaining tree budget) and the
// groups are advanced one step at a time.
struct BudgetTerm {
    int32_t dim = 0;
    int32_t x = 0;
    int32_t y = 0;
    auto operator<=>(const BudgetTerm&) const = default;
};

class ImprovedExpansion {
public:
    ImprovedExpansion(const Modulus& m, int dims);

    int32_t step() const { return step_; }
    Count senders() const { return senders_; }
    Count receivers() const;
    const std::map<BudgetTerm, Count>& terms() const { return terms_; }
    void advance();

private:
    int32_t diam_;
    int32_t step_ = 1;
    Count senders_;
    std::map<BudgetTerm, Count> terms_;
};

AnalyticTable analytic_one_to_all(const Modulus& m, int dims, Algorithm alg);

struct SenderTotals {
    Count previous;
    Count improved;
};
SenderTotals sender_totals(const Modulus& m, int dims);

// Numerator of the mean receive step: sum over rows of step * receivers.
// The denominator is node_count - 1.
Count weighted_receive_sum(const AnalyticTable& t);

} // namespace ejnet
