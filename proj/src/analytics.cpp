#include "ejnet/analytics.hpp"

#include <algorithm>

#include "ejnet/errors.hpp"

namespace ejnet {

Count& Count::operator+=(Count o) {
    unsigned __int128 r = v_ + o.v_;
    if (r < v_) throw ArithmeticOverflow("counter overflow in addition");
    v_ = r;
    return *this;
}

Count& Count::operator-=(Count o) {
    if (v_ < o.v_) throw ArithmeticOverflow("counter underflow in subtraction");
    v_ -= o.v_;
    return *this;
}

Count& Count::operator*=(Count o) {
    if (v_ != 0 && o.v_ != 0) {
        unsigned __int128 r = v_ * o.v_;
        if (r / v_ != o.v_) throw ArithmeticOverflow("counter overflow in multiplication");
        v_ = r;
    } else {
        v_ = 0;
    }
    return *this;
}

std::string Count::str() const {
    if (v_ == 0) return "0";
    std::string s;
    unsigned __int128 v = v_;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Count count_pow(Count base, int exp) {
    Count r{1};
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string decimal_string(Count num, Count den, int frac_digits) {
    if (den == Count{0}) throw ConfigError("division by zero");
    unsigned __int128 n = num.raw();
    unsigned __int128 d = den.raw();
    std::string out;
    {
        unsigned __int128 q = n / d;
        if (q == 0) out = "0";
        while (q != 0) {
            out.push_back(static_cast<char>('0' + static_cast<int>(q % 10)));
            q /= 10;
        }
        std::reverse(out.begin(), out.end());
    }
    if (frac_digits <= 0) return out;

    out.push_back('.');
    unsigned __int128 rem = n % d;
    constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    for (int i = 0; i < frac_digits; ++i) {
        if (rem > kMax / 10) throw ArithmeticOverflow("counter overflow while formatting");
        rem *= 10;
        out.push_back(static_cast<char>('0' + static_cast<int>(rem / d)));
        rem %= d;
    }
    if (rem > kMax / 2 || rem * 2 >= d) {
        // round half up, carrying through the digits just written
        size_t i = out.size();
        while (i > 0) {
            --i;
            if (out[i] == '.') continue;
            if (out[i] != '9') {
                ++out[i];
                break;
            }
            out[i] = '0';
            if (i == 0) {
                out.insert(out.begin(), '1');
                break;
            }
        }
    }
    return out;
}

ImprovedExpansion::ImprovedExpansion(const Modulus& m, int dims) {
    if (!m.broadcastable()) throw ConfigError("one-to-all schedules need b == a + 1");
    if (dims < 1) throw ConfigError("dims must be at least 1");
    diam_ = static_cast<int32_t>(m.diameter());
    senders_ = Count{1};
    for (int32_t k = 1; k <= dims; ++k)
        terms_[{k, diam_ - 1, diam_ - 1}] = Count{6};
}

Count ImprovedExpansion::receivers() const {
    Count r;
    for (const auto& [t, c] : terms_) r += c;
    return r;
}

void ImprovedExpansion::advance() {
    std::map<BudgetTerm, Count> next;
    Count senders;
    for (const auto& [t, c] : terms_) {
        if (t.x == 0 && t.y == 0 && t.dim == 1) continue;
        senders += c;
        if (t.x > 0) next[{t.dim, t.x - 1, 0}] += c;
        if (t.y > 0) next[{t.dim, t.x - 1, t.y - 1}] += c;
        for (int32_t k = 1; k < t.dim; ++k)
            next[{k, diam_ - 1, diam_ - 1}] += c * Count{6};
    }
    terms_ = std::move(next);
    senders_ = senders;
    ++step_;
}

AnalyticTable analytic_one_to_all(const Modulus& m, int dims, Algorithm alg) {
    if (!m.broadcastable()) throw ConfigError("one-to-all schedules need b == a + 1");
    if (dims < 1) throw ConfigError("dims must be at least 1");
    const int32_t diam = static_cast<int32_t>(m.diameter());
    const Count n_count{static_cast<uint64_t>(m.norm())};

    AnalyticTable t;
    t.algorithm = alg;
    t.dims = dims;
    t.steps = static_cast<int32_t>(dims) * diam;
    t.node_count = count_pow(n_count, dims);

    if (alg == Algorithm::Previous) {
        for (int32_t r = 1; r <= dims; ++r) {
            const Count informed = count_pow(n_count, r - 1);
            for (int32_t d = 1; d <= diam; ++d) {
                AnalyticRow row;
                row.step = (r - 1) * diam + d;
                row.round = r;
                row.senders = d == 1 ? informed
                                     : Count{static_cast<uint64_t>(6 * (d - 1))} * informed;
                row.receivers = Count{static_cast<uint64_t>(6 * d)} * informed;
                t.rows.push_back(row);
            }
        }
    } else {
        ImprovedExpansion e(m, dims);
        t.rows.push_back({1, 0, e.senders(), e.receivers()});
        for (int32_t s = 2; s <= t.steps; ++s) {
            e.advance();
            t.rows.push_back({s, 0, e.senders(), e.receivers()});
        }
        e.advance();
        if (!e.terms().empty())
            throw InvariantViolation("expansion outlived its step budget");
    }

    for (const AnalyticRow& r : t.rows) {
        t.total_senders += r.senders;
        t.total_receivers += r.receivers;
    }
    if (t.total_receivers + Count{1} != t.node_count)
        throw InvariantViolation("analytic receiver total mismatch");
    return t;
}

SenderTotals sender_totals(const Modulus& m, int dims) {
    return {analytic_one_to_all(m, dims, Algorithm::Previous).total_senders,
            analytic_one_to_all(m, dims, Algorithm::Improved).total_senders};
}

Count weighted_receive_sum(const AnalyticTable& t) {
    Count sum;
    for (const AnalyticRow& r : t.rows)
        sum += Count{static_cast<uint64_t>(r.step)} * r.receivers;
    return sum;
}

} // namespace ejnet
