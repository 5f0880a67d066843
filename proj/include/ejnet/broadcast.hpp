#pragma once

#include <cstdint>
#include <vector>

#include "ejnet/network.hpp"
#include "ejnet/rational.hpp"

namespace ejnet {

// Per-step traffic snapshot. A node is counted as sending if it pushes at
// least one message out this step, as receiving if a message lands on it;
// the two sets never overlap, and free is everyone else.
struct StepStats {
    int32_t step = 0;
    int32_t round = 0; // enclosing per-dimension round; 0 for round-free schedules
    int64_t free = 0;
    int64_t sending = 0;
    int64_t receiving = 0;
    int64_t active = 0;
};

struct LinkUse {
    int64_t from = 0;
    LinkLabel label;
};

struct BroadcastTrace {
    Algorithm algorithm = Algorithm::Previous;
    int64_t node_count = 0;
    int dims = 0;
    int32_t steps = 0;
    std::vector<StepStats> per_step;
    // Step at which each node first (and only) holds the message; source = 0.
    std::vector<int32_t> first_receive;
    // Links exercised at each step, parallel to per_step.
    std::vector<std::vector<LinkUse>> link_uses;
    int64_t total_senders = 0;   // sum of per-step sender counts
    int64_t total_receivers = 0; // always node_count - 1
};

// Dimension-by-dimension schedule: round r floods dimension n-r+1 from every
// node informed so far, using the six sector trees of the residue graph.
BroadcastTrace run_previous_one_to_all(const HyperEJNetwork& net, int64_t source);

// Pipelined schedule: receiving on dimension k immediately seeds fresh
// broadcasts on every dimension below k while the sector tree on k continues.
BroadcastTrace run_improved_one_to_all(const HyperEJNetwork& net, int64_t source);

BroadcastTrace run_one_to_all(const HyperEJNetwork& net, Algorithm alg, int64_t source);

// Average step at which a non-source node gets the message.
Rational mean_receive_step(const BroadcastTrace& t);

} // namespace ejnet
