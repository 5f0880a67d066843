#pragma once

#include <iosfwd>
#include <vector>

#include "ejnet/all_to_all.hpp"
#include "ejnet/analytics.hpp"
#include "ejnet/broadcast.hpp"
#include "ejnet/network.hpp"

namespace ejnet {

// Per-step tables. Columns are step,free,sending,receiving,active; the
// round-based schedule gets a leading round column.
void write_step_csv(std::ostream& os, const BroadcastTrace& t);
void write_step_csv(std::ostream& os, const AnalyticTable& t);
void write_step_csv(std::ostream& os, const AllToAllTrace& t);

void write_json(std::ostream& os, const HyperEJNetwork& net, const BroadcastTrace& t);
void write_json(std::ostream& os, const Modulus& m, const AnalyticTable& t);
void write_json(std::ostream& os, const HyperEJNetwork& net, const AllToAllTrace& t);

// Totals for both schedules plus their sender ratio.
void write_totals_json(std::ostream& os, const Modulus& m, int dims);

void write_topology_json(std::ostream& os, const Modulus& m, int dims,
                         const std::vector<int64_t>& bfs_histogram, bool show_coords);
void write_topology_csv(std::ostream& os, const Modulus& m, int dims,
                        const std::vector<int64_t>& bfs_histogram, bool show_coords);

} // namespace ejnet
