#include "ejnet/broadcast.hpp"

#include <cstddef>
#include <utility>

#include "ejnet/errors.hpp"

namespace ejnet {
namespace {

// A message in flight: delivered to `node` as part of sector tree `sector`
// on dimension `dim`, sitting at `tree_pos` within that tree.
struct Packet {
    int64_t node = 0;
    int32_t dim = 0;
    int32_t sector = 0;
    int32_t tree_pos = 0;
};

void check_runnable(const HyperEJNetwork& net, int64_t source) {
    if (!net.modulus().broadcastable())
        throw ConfigError("one-to-all schedules need b == a + 1");
    net.require_explicit("one-to-all simulation");
    net.require_node(source);
}

void finish(BroadcastTrace& t, int64_t informed) {
    if (informed != t.node_count)
        throw InvariantViolation("broadcast ended with uninformed nodes");
    for (const StepStats& s : t.per_step) t.total_senders += s.sending;
    t.total_receivers = t.node_count - 1;
}

} // namespace

BroadcastTrace run_previous_one_to_all(const HyperEJNetwork& net, int64_t source) {
    check_runnable(net, source);
    const SectorSchedule& sched = net.sectors();
    const int32_t diam = static_cast<int32_t>(net.modulus().diameter());

    BroadcastTrace t;
    t.algorithm = Algorithm::Previous;
    t.node_count = net.node_count();
    t.dims = net.dims();
    t.steps = static_cast<int32_t>(net.dims()) * diam;
    t.first_receive.assign(static_cast<size_t>(t.node_count), -1);
    t.first_receive[static_cast<size_t>(source)] = 0;

    std::vector<int64_t> informed{source};
    informed.reserve(static_cast<size_t>(t.node_count));

    auto deliver = [&](int64_t node, int32_t step) {
        auto& slot = t.first_receive[static_cast<size_t>(node)];
        if (slot >= 0) throw InvariantViolation("node received the message twice");
        slot = step;
        informed.push_back(node);
    };

    int32_t step = 0;
    for (int round = 1; round <= net.dims(); ++round) {
        const int dim = net.dims() - round + 1;
        const size_t root_count = informed.size();
        std::vector<Packet> frontier;

        for (int32_t s = 1; s <= diam; ++s) {
            ++step;
            std::vector<Packet> next;
            std::vector<LinkUse> links;
            int64_t senders = 0;

            if (s == 1) {
                senders = static_cast<int64_t>(root_count);
                for (size_t r = 0; r < root_count; ++r)
                    for (int sector = 1; sector <= 6; ++sector) {
                        LinkLabel l{dim, sector_major(sector)};
                        int64_t target = net.neighbor(informed[r], l);
                        deliver(target, step);
                        links.push_back({informed[r], l});
                        next.push_back({target, dim, sector, 0});
                    }
            } else {
                for (const Packet& p : frontier) {
                    const SectorTreeNode& n = sched.tree(p.sector).nodes[static_cast<size_t>(p.tree_pos)];
                    if (n.minor_child < 0 && n.major_child < 0) continue;
                    ++senders;
                    if (n.minor_child >= 0) {
                        LinkLabel l{dim, sector_minor(p.sector)};
                        int64_t target = net.neighbor(p.node, l);
                        deliver(target, step);
                        links.push_back({p.node, l});
                        next.push_back({target, dim, p.sector, n.minor_child});
                    }
                    if (n.major_child >= 0) {
                        LinkLabel l{dim, sector_major(p.sector)};
                        int64_t target = net.neighbor(p.node, l);
                        deliver(target, step);
                        links.push_back({p.node, l});
                        next.push_back({target, dim, p.sector, n.major_child});
                    }
                }
            }

            StepStats st;
            st.step = step;
            st.round = round;
            st.sending = senders;
            st.receiving = static_cast<int64_t>(next.size());
            st.active = st.sending + st.receiving;
            st.free = t.node_count - st.active;
            t.per_step.push_back(st);
            t.link_uses.push_back(std::move(links));
            frontier = std::move(next);
        }
    }

    finish(t, static_cast<int64_t>(informed.size()));
    return t;
}

BroadcastTrace run_improved_one_to_all(const HyperEJNetwork& net, int64_t source) {
    check_runnable(net, source);
    const SectorSchedule& sched = net.sectors();
    const int32_t diam = static_cast<int32_t>(net.modulus().diameter());

    BroadcastTrace t;
    t.algorithm = Algorithm::Improved;
    t.node_count = net.node_count();
    t.dims = net.dims();
    t.steps = static_cast<int32_t>(net.dims()) * diam;
    t.first_receive.assign(static_cast<size_t>(t.node_count), -1);
    t.first_receive[static_cast<size_t>(source)] = 0;

    int64_t informed = 1;
    auto deliver = [&](int64_t node, int32_t step) {
        auto& slot = t.first_receive[static_cast<size_t>(node)];
        if (slot >= 0) throw InvariantViolation("node received the message twice");
        slot = step;
        ++informed;
    };

    // Step 1: the source alone seeds every dimension at once.
    std::vector<Packet> cur;
    {
        std::vector<LinkUse> links;
        for (int dim = net.dims(); dim >= 1; --dim)
            for (int sector = 1; sector <= 6; ++sector) {
                LinkLabel l{dim, sector_major(sector)};
                int64_t target = net.neighbor(source, l);
                deliver(target, 1);
                links.push_back({source, l});
                cur.push_back({target, dim, sector, 0});
            }
        StepStats st;
        st.step = 1;
        st.sending = 1;
        st.receiving = static_cast<int64_t>(cur.size());
        st.active = st.sending + st.receiving;
        st.free = t.node_count - st.active;
        t.per_step.push_back(st);
        t.link_uses.push_back(std::move(links));
    }

    for (int32_t step = 2; step <= t.steps; ++step) {
        std::vector<Packet> next;
        std::vector<LinkUse> links;
        int64_t senders = 0;

        for (const Packet& p : cur) {
            const SectorTreeNode& n = sched.tree(p.sector).nodes[static_cast<size_t>(p.tree_pos)];
            bool sends = n.minor_child >= 0 || n.major_child >= 0 || p.dim > 1;
            if (!sends) continue;
            ++senders;
            if (n.minor_child >= 0) {
                LinkLabel l{p.dim, sector_minor(p.sector)};
                int64_t target = net.neighbor(p.node, l);
                deliver(target, step);
                links.push_back({p.node, l});
                next.push_back({target, p.dim, p.sector, n.minor_child});
            }
            if (n.major_child >= 0) {
                LinkLabel l{p.dim, sector_major(p.sector)};
                int64_t target = net.neighbor(p.node, l);
                deliver(target, step);
                links.push_back({p.node, l});
                next.push_back({target, p.dim, p.sector, n.major_child});
            }
            // Having the message on dimension k makes this node the source of
            // a fresh broadcast on each dimension below k.
            for (int dim = p.dim - 1; dim >= 1; --dim)
                for (int sector = 1; sector <= 6; ++sector) {
                    LinkLabel l{dim, sector_major(sector)};
                    int64_t target = net.neighbor(p.node, l);
                    deliver(target, step);
                    links.push_back({p.node, l});
                    next.push_back({target, dim, sector, 0});
                }
        }

        StepStats st;
        st.step = step;
        st.sending = senders;
        st.receiving = static_cast<int64_t>(next.size());
        st.active = st.sending + st.receiving;
        st.free = t.node_count - st.active;
        t.per_step.push_back(st);
        t.link_uses.push_back(std::move(links));
        cur = std::move(next);
    }

    for (const Packet& p : cur) {
        const SectorTreeNode& n = sched.tree(p.sector).nodes[static_cast<size_t>(p.tree_pos)];
        if (n.minor_child >= 0 || n.major_child >= 0 || p.dim > 1)
            throw InvariantViolation("schedule overran its step budget");
    }

    finish(t, informed);
    return t;
}

BroadcastTrace run_one_to_all(const HyperEJNetwork& net, Algorithm alg, int64_t source) {
    return alg == Algorithm::Previous ? run_previous_one_to_all(net, source)
                                      : run_improved_one_to_all(net, source);
}

Rational mean_receive_step(const BroadcastTrace& t) {
    int64_t sum = 0;
    for (int32_t s : t.first_receive) sum = checked_add(sum, s);
    return Rational(sum, t.node_count - 1);
}

} // namespace ejnet
