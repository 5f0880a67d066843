#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "ejnet/all_to_all.hpp"
#include "ejnet/sector_tree.hpp"

using namespace ejnet;

namespace {

using ResSet = std::set<std::pair<int64_t, int64_t>>;

// Centre plus the two sectors a phase drives, as canonical residues.
ResSet phase_cell(const Modulus& m, int phase) {
    SectorSchedule sched(m);
    ResSet out{{0, 0}};
    auto sect = phase_sectors(phase);
    for (const EjInt& r : residues(m)) {
        int s = sched.sector_of(r);
        if (s == sect[0] || s == sect[1]) out.insert({r.x, r.y});
    }
    return out;
}

ResSet sumset(const ResSet& lhs, const ResSet& rhs, const Modulus& m) {
    ResSet out;
    for (const auto& [ax, ay] : lhs)
        for (const auto& [bx, by] : rhs) {
            EjInt r = mod_reduce(EjInt{ax, ay} + EjInt{bx, by}, m);
            out.insert({r.x, r.y});
        }
    return out;
}

// Whether w should be an origin held by v once every per-dimension offset in
// `reach` has been covered.
bool reachable(const HyperEJNetwork& net, const ResSet& reach, int64_t v, int64_t w) {
    for (int dim = 1; dim <= net.dims(); ++dim) {
        const EjInt dv = net.residue_list()[static_cast<size_t>(net.coord_digit(v, dim))];
        const EjInt dw = net.residue_list()[static_cast<size_t>(net.coord_digit(w, dim))];
        EjInt d = mod_reduce(dv - dw, net.modulus());
        if (!reach.count({d.x, d.y})) return false;
    }
    return true;
}

void check_exchange(const HyperEJNetwork& net, const AllToAllTrace& t) {
    const Modulus& m = net.modulus();
    const int32_t phase_len = static_cast<int32_t>(net.dims() * m.diameter());
    CHECK(t.steps == 3 * phase_len);
    REQUIRE(static_cast<int32_t>(t.per_step.size()) == t.steps);
    REQUIRE(t.link_uses.size() == t.per_step.size());
    CHECK(t.final_message_count == t.node_count);

    int64_t origin_total = 0;
    for (size_t i = 0; i < t.per_step.size(); ++i) {
        const AllToAllStep& s = t.per_step[i];
        CHECK(s.step == static_cast<int32_t>(i) + 1);
        CHECK(s.phase == static_cast<int32_t>(i) / phase_len + 1);
        CHECK(s.local_step == static_cast<int32_t>(i) % phase_len + 1);
        if (s.local_step == 1) CHECK(s.senders == t.node_count);
        CHECK(s.transmissions == static_cast<int64_t>(t.link_uses[i].size()));
        CHECK(s.transmissions <= s.deliveries);
        origin_total += s.new_origins;

        auto send_units = phase_send_units(s.phase);
        const std::set<Unit> allowed(send_units.begin(), send_units.end());
        std::set<std::tuple<int64_t, int, int>> distinct;
        for (const LinkUse& u : t.link_uses[i]) {
            CHECK(allowed.count(u.label.unit) == 1);
            CHECK(distinct.insert({u.from, u.label.dim, static_cast<int>(u.label.unit)}).second);
        }
        CHECK(std::is_sorted(t.link_uses[i].begin(), t.link_uses[i].end(),
                             [](const LinkUse& a, const LinkUse& b) {
                                 return std::tuple(a.from, a.label.dim, static_cast<int>(a.label.unit)) <
                                        std::tuple(b.from, b.label.dim, static_cast<int>(b.label.unit));
                             }));
    }
    CHECK(origin_total == t.node_count * (t.node_count - 1));
    CHECK(verify_half_duplex(net, t).ok);

    // phase-by-phase holdings against the sumset oracle
    ResSet reach{{0, 0}};
    for (int phase = 1; phase <= 3; ++phase) {
        reach = sumset(reach, phase_cell(m, phase), m);
        int64_t expect_known = 1;
        for (int d = 0; d < net.dims(); ++d) expect_known *= static_cast<int64_t>(reach.size());
        const BitMatrix& h = t.holdings_after_phase[static_cast<size_t>(phase - 1)];
        for (int64_t v = 0; v < t.node_count; ++v) {
            CHECK(h.popcount_row(v) == expect_known);
            for (int64_t w = 0; w < t.node_count; ++w)
                CHECK(h.get(v, w) == reachable(net, reach, v, w));
        }
    }
}

} // namespace

TEST_CASE("three-phase exchange on the 2-D 2+3rho torus") {
    HyperEJNetwork net(Modulus(2, 3), 2);
    AllToAllTrace t = run_all_to_all(net);
    CHECK(t.node_count == 361);
    CHECK(t.steps == 12);
    CHECK(t.bundles_per_node == std::array<int64_t, 3>{48, 48, 48});
    CHECK(t.new_origins_per_node == std::array<int64_t, 3>{48, 275, 37});
    check_exchange(net, t);
}

TEST_CASE("exchange origin growth on small networks") {
    {
        HyperEJNetwork net(Modulus(1, 2), 1);
        AllToAllTrace t = run_all_to_all(net);
        CHECK(t.steps == 3);
        CHECK(t.bundles_per_node == std::array<int64_t, 3>{2, 2, 2});
        CHECK(t.new_origins_per_node == std::array<int64_t, 3>{2, 3, 1});
        check_exchange(net, t);
    }
    {
        HyperEJNetwork net(Modulus(1, 2), 2);
        AllToAllTrace t = run_all_to_all(net);
        CHECK(t.steps == 6);
        CHECK(t.new_origins_per_node == std::array<int64_t, 3>{8, 27, 13});
        check_exchange(net, t);
    }
    {
        HyperEJNetwork net(Modulus(2, 3), 1);
        AllToAllTrace t = run_all_to_all(net);
        CHECK(t.steps == 6);
        CHECK(t.bundles_per_node == std::array<int64_t, 3>{6, 6, 6});
        check_exchange(net, t);
    }
    {
        HyperEJNetwork net(Modulus(3, 4), 1);
        check_exchange(net, run_all_to_all(net));
    }
}

TEST_CASE("exchange guards") {
    CHECK_THROWS_AS(run_all_to_all(HyperEJNetwork(Modulus(2, 4), 1)), ConfigError);
    AllToAllLimits tiny;
    tiny.max_holding_cells = 10;
    CHECK_THROWS_AS(run_all_to_all(HyperEJNetwork(Modulus(1, 2), 1), tiny), BudgetExceeded);
}
