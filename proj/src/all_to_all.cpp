#include "ejnet/all_to_all.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "ejnet/errors.hpp"

namespace ejnet {
namespace {

// One bundle stream in flight: the holdings snapshot of `launcher` was just
// delivered to `node`, at `tree_pos` of sector tree `sector` on dimension
// `dim`.
struct Bundle {
    int64_t launcher = 0;
    int64_t node = 0;
    int32_t dim = 0;
    int32_t sector = 0;
    int32_t tree_pos = 0;
};

uint64_t link_key(int64_t from, int dim, Unit u) {
    return (static_cast<uint64_t>(from) << 12) |
           (static_cast<uint64_t>(dim) << 4) | static_cast<uint64_t>(u);
}

bool link_use_less(const LinkUse& a, const LinkUse& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.label.dim != b.label.dim) return a.label.dim < b.label.dim;
    return static_cast<int>(a.label.unit) < static_cast<int>(b.label.unit);
}

int64_t ipow(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

AllToAllTrace run_all_to_all(const HyperEJNetwork& net, const AllToAllLimits& limits) {
    if (!net.modulus().broadcastable())
        throw ConfigError("all-to-all schedule needs b == a + 1");
    net.require_explicit("all-to-all simulation");

    const int64_t nc = net.node_count();
    if (nc > limits.max_holding_cells / nc)
        throw BudgetExceeded("all-to-all holdings table exceeds the budget");

    const SectorSchedule& sched = net.sectors();
    const int dims = net.dims();
    const int32_t phase_len = static_cast<int32_t>(dims * net.modulus().diameter());
    const int64_t a = net.modulus().a();
    // Residues a launcher can cover per dimension in one phase: the centre
    // plus two full sectors.
    const int64_t covered = ipow(1 + a * (a + 1), dims);

    AllToAllTrace t;
    t.node_count = nc;
    t.dims = dims;
    t.steps = 3 * phase_len;

    BitMatrix holdings(nc, nc);
    for (int64_t v = 0; v < nc; ++v) holdings.set(v, v);
    std::vector<int64_t> known(static_cast<size_t>(nc), 1);

    std::vector<int32_t> touch_stamp(static_cast<size_t>(nc), -1);
    std::vector<int64_t> touched;
    int32_t step = 0;

    for (int phase = 1; phase <= 3; ++phase) {
        const auto sectors = phase_sectors(phase);
        const BitMatrix snapshot = holdings;
        const std::vector<int64_t> known_at_start = known;
        std::vector<int64_t> arrivals(static_cast<size_t>(nc), 0);
        std::vector<Bundle> cur;

        for (int32_t local = 1; local <= phase_len; ++local) {
            ++step;
            std::vector<Bundle> next;
            std::vector<LinkUse> links;
            std::unordered_set<uint64_t> seen_links;
            std::unordered_set<int64_t> senders;
            touched.clear();

            auto push = [&](int64_t from, int64_t launcher, LinkLabel l,
                            int32_t sector, int32_t pos) {
                int64_t target = net.neighbor(from, l);
                if (seen_links.insert(link_key(from, l.dim, l.unit)).second)
                    links.push_back({from, l});
                senders.insert(from);
                next.push_back({launcher, target, l.dim, sector, pos});
                ++arrivals[static_cast<size_t>(target)];
                holdings.or_row_from(target, snapshot, launcher);
                if (touch_stamp[static_cast<size_t>(target)] != step) {
                    touch_stamp[static_cast<size_t>(target)] = step;
                    touched.push_back(target);
                }
            };

            if (local == 1) {
                // Every node launches its snapshot into both phase sectors.
                for (int64_t v = 0; v < nc; ++v)
                    for (int dim = dims; dim >= 1; --dim)
                        for (int sector : sectors)
                            push(v, v, {dim, sector_major(sector)}, sector, 0);
            } else {
                for (const Bundle& b : cur) {
                    const SectorTreeNode& n =
                        sched.tree(b.sector).nodes[static_cast<size_t>(b.tree_pos)];
                    if (n.minor_child >= 0)
                        push(b.node, b.launcher, {b.dim, sector_minor(b.sector)},
                             b.sector, n.minor_child);
                    if (n.major_child >= 0)
                        push(b.node, b.launcher, {b.dim, sector_major(b.sector)},
                             b.sector, n.major_child);
                    for (int dim = b.dim - 1; dim >= 1; --dim)
                        for (int sector : sectors)
                            push(b.node, b.launcher, {dim, sector_major(sector)}, sector, 0);
                }
            }

            AllToAllStep st;
            st.step = step;
            st.phase = phase;
            st.local_step = local;
            st.senders = static_cast<int64_t>(senders.size());
            st.transmissions = static_cast<int64_t>(links.size());
            st.deliveries = static_cast<int64_t>(next.size());
            for (int64_t v : touched) {
                int64_t now = holdings.popcount_row(v);
                st.new_origins += now - known[static_cast<size_t>(v)];
                known[static_cast<size_t>(v)] = now;
            }
            std::sort(links.begin(), links.end(), link_use_less);
            t.per_step.push_back(st);
            t.link_uses.push_back(std::move(links));
            cur = std::move(next);
        }

        for (const Bundle& b : cur) {
            const SectorTreeNode& n =
                sched.tree(b.sector).nodes[static_cast<size_t>(b.tree_pos)];
            if (n.minor_child >= 0 || n.major_child >= 0 || b.dim > 1)
                throw InvariantViolation("phase overran its step budget");
        }
        for (int64_t v = 0; v < nc; ++v)
            if (arrivals[static_cast<size_t>(v)] != covered - 1)
                throw InvariantViolation("phase delivered an uneven bundle count");

        t.holdings_after_phase[static_cast<size_t>(phase - 1)] = holdings;
        t.bundles_per_node[static_cast<size_t>(phase - 1)] = covered - 1;
        const int64_t gained = known[0] - known_at_start[0];
        for (int64_t v = 0; v < nc; ++v)
            if (known[static_cast<size_t>(v)] - known_at_start[static_cast<size_t>(v)] != gained)
                throw InvariantViolation("phase taught nodes unevenly");
        t.new_origins_per_node[static_cast<size_t>(phase - 1)] = gained;
    }

    for (int64_t v = 0; v < nc; ++v)
        if (known[static_cast<size_t>(v)] != nc)
            throw InvariantViolation("exchange ended with incomplete holdings");
    t.final_message_count = nc;
    return t;
}

HalfDuplexReport verify_half_duplex(const HyperEJNetwork& net,
                                    const std::vector<std::vector<LinkUse>>& steps) {
    HalfDuplexReport rep;
    std::unordered_map<uint64_t, int> dir; // packed edge -> direction mask
    for (size_t s = 0; s < steps.size(); ++s) {
        dir.clear();
        for (const LinkUse& u : steps[s]) {
            int64_t to = net.neighbor(u.from, u.label);
            int64_t lo = std::min(u.from, to);
            int64_t hi = std::max(u.from, to);
            // node ids stay below 2^22 under the explicit budget
            uint64_t key = (static_cast<uint64_t>(lo) << 28) |
                           (static_cast<uint64_t>(hi) << 6) |
                           static_cast<uint64_t>(u.label.dim);
            int bit = u.from == lo ? 1 : 2;
            int& mask = dir[key];
            if (mask & bit)
                throw InvariantViolation("directed link used twice in one step");
            mask |= bit;
            if (mask == 3) {
                rep.ok = false;
                rep.step = static_cast<int32_t>(s + 1);
                rep.node_a = lo;
                rep.node_b = hi;
                rep.dim = u.label.dim;
                return rep;
            }
        }
    }
    return rep;
}

HalfDuplexReport verify_half_duplex(const HyperEJNetwork& net, const BroadcastTrace& t) {
    return verify_half_duplex(net, t.link_uses);
}

HalfDuplexReport verify_half_duplex(const HyperEJNetwork& net, const AllToAllTrace& t) {
    return verify_half_duplex(net, t.link_uses);
}

} // namespace ejnet
