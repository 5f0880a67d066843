#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ejnet/bit_matrix.hpp"
#include "ejnet/broadcast.hpp"
#include "ejnet/network.hpp"

namespace ejnet {

struct AllToAllLimits {
    // Cap on node_count^2, the size of the per-node holdings table.
    int64_t max_holding_cells = 200'000'000;
};

struct AllToAllStep {
    int32_t step = 0;       // global, 1..3*dims*diameter
    int32_t phase = 0;      // 1..3
    int32_t local_step = 0; // 1..dims*diameter within the phase
    int64_t senders = 0;
    int64_t transmissions = 0; // distinct directed links carrying data
    int64_t deliveries = 0;    // bundle arrivals (receiver, launcher pairs)
    int64_t new_origins = 0;   // origin ids learned across all nodes this step
};

struct AllToAllTrace {
    int64_t node_count = 0;
    int dims = 0;
    int32_t steps = 0;
    std::vector<AllToAllStep> per_step;
    // Distinct directed links used at each step, sorted; parallel to per_step.
    std::vector<std::vector<LinkUse>> link_uses;
    std::array<BitMatrix, 3> holdings_after_phase;
    std::array<int64_t, 3> bundles_per_node{};
    std::array<int64_t, 3> new_origins_per_node{};
    int64_t final_message_count = 0;
};

// Full personalized exchange in three phases. Every phase restricts traffic
// to one third of the links: each node rebroadcasts everything it holds into
// two of the six sectors, on all dimensions, following the pipelined
// one-to-all schedule. Messages over one directed link in one step are
// bundled into a single transmission.
AllToAllTrace run_all_to_all(const HyperEJNetwork& net, const AllToAllLimits& limits = {});

struct HalfDuplexReport {
    bool ok = true;
    int32_t step = 0;   // first offending step, when !ok
    int64_t node_a = 0; // endpoints of the link used in both directions
    int64_t node_b = 0;
    int dim = 0;
};

// Checks that no link carries traffic in both directions during one step.
HalfDuplexReport verify_half_duplex(const HyperEJNetwork& net,
                                    const std::vector<std::vector<LinkUse>>& steps);
HalfDuplexReport verify_half_duplex(const HyperEJNetwork& net, const BroadcastTrace& t);
HalfDuplexReport verify_half_duplex(const HyperEJNetwork& net, const AllToAllTrace& t);

} // namespace ejnet
