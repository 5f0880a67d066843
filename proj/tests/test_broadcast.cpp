#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "ejnet/all_to_all.hpp"
#include "ejnet/broadcast.hpp"

using namespace ejnet;

namespace {

struct Row {
    int32_t round, step;
    int64_t free, sending, receiving, active;
};

void check_rows(const BroadcastTrace& t, const std::vector<Row>& expected) {
    REQUIRE(t.per_step.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(t.per_step[i].round == expected[i].round);
        CHECK(t.per_step[i].step == expected[i].step);
        CHECK(t.per_step[i].free == expected[i].free);
        CHECK(t.per_step[i].sending == expected[i].sending);
        CHECK(t.per_step[i].receiving == expected[i].receiving);
        CHECK(t.per_step[i].active == expected[i].active);
    }
}

void check_sound(const HyperEJNetwork& net, const BroadcastTrace& t) {
    CHECK(t.steps == net.dims() * net.modulus().diameter());
    CHECK(static_cast<int32_t>(t.per_step.size()) == t.steps);
    CHECK(t.total_receivers == t.node_count - 1);

    // every node got the message exactly once, inside the step budget
    std::vector<int64_t> receivers_at(static_cast<size_t>(t.steps) + 1, 0);
    for (int32_t s : t.first_receive) {
        REQUIRE(s >= 0);
        REQUIRE(s <= t.steps);
        ++receivers_at[static_cast<size_t>(s)];
    }
    CHECK(receivers_at[0] == 1);

    int64_t total_senders = 0;
    for (size_t i = 0; i < t.per_step.size(); ++i) {
        const StepStats& st = t.per_step[i];
        CHECK(st.step == static_cast<int32_t>(i) + 1);
        CHECK(st.receiving == receivers_at[i + 1]);
        CHECK(st.active == st.sending + st.receiving);
        CHECK(st.free == t.node_count - st.active);
        total_senders += st.sending;

        // senders this step are distinct informed nodes; receivers are the
        // step's newcomers, so the two sets cannot meet
        std::set<int64_t> froms;
        for (const LinkUse& u : t.link_uses[i]) froms.insert(u.from);
        CHECK(static_cast<int64_t>(froms.size()) == st.sending);
        CHECK(static_cast<int64_t>(t.link_uses[i].size()) == st.receiving);
        for (int64_t v : froms)
            CHECK(t.first_receive[static_cast<size_t>(v)] < static_cast<int32_t>(i) + 1);
    }
    CHECK(total_senders == t.total_senders);
    CHECK(verify_half_duplex(net, t).ok);
}

} // namespace

TEST_CASE("round-based schedule reproduces the 3-D 3+4rho table") {
    HyperEJNetwork net(Modulus(3, 4), 3);
    BroadcastTrace t = run_previous_one_to_all(net, 0);
    check_rows(t, {{1, 1, 50646, 1, 6, 7},
                   {1, 2, 50635, 6, 12, 18},
                   {1, 3, 50623, 12, 18, 30},
                   {2, 4, 50394, 37, 222, 259},
                   {2, 5, 49987, 222, 444, 666},
                   {2, 6, 49543, 444, 666, 1110},
                   {3, 7, 41070, 1369, 8214, 9583},
                   {3, 8, 26011, 8214, 16428, 24642},
                   {3, 9, 9583, 16428, 24642, 41070}});
    CHECK(t.total_senders == 26733);
    CHECK(t.total_receivers == 50652);
    check_sound(net, t);
}

TEST_CASE("pipelined schedule reproduces the 3-D 3+4rho table") {
    HyperEJNetwork net(Modulus(3, 4), 3);
    BroadcastTrace t = run_improved_one_to_all(net, 0);
    check_rows(t, {{0, 1, 50634, 1, 18, 19},
                   {0, 2, 50491, 18, 144, 162},
                   {0, 3, 49807, 144, 702, 846},
                   {0, 4, 47593, 684, 2376, 3060},
                   {0, 5, 42661, 2160, 5832, 7992},
                   {0, 6, 35425, 4752, 10476, 15228},
                   {0, 7, 29809, 7236, 13608, 20844},
                   {0, 8, 31861, 7128, 11664, 18792},
                   {0, 9, 40933, 3888, 5832, 9720}});
    CHECK(t.total_senders == 26011);
    CHECK(t.total_receivers == 50652);
    check_sound(net, t);
}

TEST_CASE("both schedules deliver exactly once on a family of networks") {
    for (auto [a, b, n] : {std::tuple<int64_t, int64_t, int>{1, 2, 1}, {1, 2, 2}, {1, 2, 3},
                           {2, 3, 1}, {2, 3, 2}, {3, 4, 1}, {3, 4, 2}}) {
        CAPTURE(a);
        CAPTURE(n);
        HyperEJNetwork net(Modulus(a, b), n);
        check_sound(net, run_previous_one_to_all(net, 0));
        check_sound(net, run_improved_one_to_all(net, 0));
    }
}

TEST_CASE("one dimension makes the two schedules coincide") {
    HyperEJNetwork net(Modulus(3, 4), 1);
    BroadcastTrace p = run_previous_one_to_all(net, 0);
    BroadcastTrace i = run_improved_one_to_all(net, 0);
    CHECK(p.first_receive == i.first_receive);
    REQUIRE(p.per_step.size() == i.per_step.size());
    for (size_t s = 0; s < p.per_step.size(); ++s) {
        CHECK(p.per_step[s].sending == i.per_step[s].sending);
        CHECK(p.per_step[s].receiving == i.per_step[s].receiving);
    }
    CHECK(p.total_senders == i.total_senders);
}

TEST_CASE("broadcasts are translation-equivariant in the source") {
    HyperEJNetwork net(Modulus(2, 3), 2);
    for (Algorithm alg : {Algorithm::Previous, Algorithm::Improved}) {
        BroadcastTrace base = run_one_to_all(net, alg, 0);
        BroadcastTrace moved = run_one_to_all(net, alg, 5);
        for (size_t s = 0; s < base.per_step.size(); ++s) {
            CHECK(base.per_step[s].sending == moved.per_step[s].sending);
            CHECK(base.per_step[s].receiving == moved.per_step[s].receiving);
        }
        for (int64_t v = 0; v < net.node_count(); ++v)
            CHECK(moved.first_receive[static_cast<size_t>(net.translate(v, 5))] ==
                  base.first_receive[static_cast<size_t>(v)]);
    }
}

TEST_CASE("mean receive step improves under the pipelined schedule") {
    HyperEJNetwork net(Modulus(3, 4), 3);
    Rational prev = mean_receive_step(run_previous_one_to_all(net, 0));
    Rational imp = mean_receive_step(run_improved_one_to_all(net, 0));
    CHECK(prev == Rational(417888, 50652));
    CHECK(imp == Rational(344988, 50652));
    CHECK(imp < prev);
}

TEST_CASE("broadcast rejects unsupported configurations") {
    HyperEJNetwork skewed(Modulus(2, 4), 1);
    CHECK_THROWS_AS(run_improved_one_to_all(skewed, 0), ConfigError);
    CHECK_THROWS_AS(run_previous_one_to_all(skewed, 0), ConfigError);
    HyperEJNetwork big(Modulus(1, 2), 9);
    CHECK_THROWS_AS(run_improved_one_to_all(big, 0), BudgetExceeded);
    HyperEJNetwork small(Modulus(3, 4), 1);
    CHECK_THROWS_AS(run_improved_one_to_all(small, 37), ConfigError);
    CHECK_THROWS_AS(run_improved_one_to_all(small, -1), ConfigError);
}
