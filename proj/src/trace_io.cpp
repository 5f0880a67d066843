#include "ejnet/trace_io.hpp"

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace ejnet {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json alpha_json(const Modulus& m) {
    return {{"a", m.a()},
            {"b", m.b()},
            {"generator", to_string(m.generator())},
            {"norm", m.norm()}};
}

void dump(std::ostream& os, const ordered_json& j) { os << j.dump(2) << '\n'; }

std::string ratio_9dp(Count num, Count den) { return decimal_string(num, den, 9); }

} // namespace

void write_step_csv(std::ostream& os, const BroadcastTrace& t) {
    const bool rounds = t.algorithm == Algorithm::Previous;
    os << (rounds ? "round,step,free,sending,receiving,active\n"
                  : "step,free,sending,receiving,active\n");
    for (const StepStats& s : t.per_step) {
        if (rounds) os << s.round << ',';
        os << s.step << ',' << s.free << ',' << s.sending << ',' << s.receiving
           << ',' << s.active << '\n';
    }
}

void write_step_csv(std::ostream& os, const AnalyticTable& t) {
    const bool rounds = t.algorithm == Algorithm::Previous;
    os << (rounds ? "round,step,free,sending,receiving,active\n"
                  : "step,free,sending,receiving,active\n");
    for (const AnalyticRow& r : t.rows) {
        const Count active = r.senders + r.receivers;
        const Count free = t.node_count - active;
        if (rounds) os << r.round << ',';
        os << r.step << ',' << free.str() << ',' << r.senders.str() << ','
           << r.receivers.str() << ',' << active.str() << '\n';
    }
}

void write_step_csv(std::ostream& os, const AllToAllTrace& t) {
    os << "step,phase,local_step,senders,transmissions,deliveries,new_origins\n";
    for (const AllToAllStep& s : t.per_step)
        os << s.step << ',' << s.phase << ',' << s.local_step << ',' << s.senders
           << ',' << s.transmissions << ',' << s.deliveries << ',' << s.new_origins
           << '\n';
}

void write_json(std::ostream& os, const HyperEJNetwork& net, const BroadcastTrace& t) {
    const Rational mean = mean_receive_step(t);
    ordered_json j;
    j["alpha"] = alpha_json(net.modulus());
    j["dims"] = t.dims;
    j["node_count"] = t.node_count;
    j["algorithm"] = algorithm_name(t.algorithm);
    j["diameter"] = net.modulus().diameter();
    j["steps"] = t.steps;
    j["total_senders"] = t.total_senders;
    j["total_receivers"] = t.total_receivers;
    j["mean_receive_step"] = {
        {"numerator", mean.num},
        {"denominator", mean.den},
        {"decimal", decimal_string(Count{static_cast<uint64_t>(mean.num)},
                                   Count{static_cast<uint64_t>(mean.den)}, 4)}};
    auto& steps = j["per_step"] = ordered_json::array();
    for (const StepStats& s : t.per_step) {
        ordered_json row;
        row["step"] = s.step;
        if (t.algorithm == Algorithm::Previous) row["round"] = s.round;
        row["free"] = s.free;
        row["sending"] = s.sending;
        row["receiving"] = s.receiving;
        row["active"] = s.active;
        steps.push_back(std::move(row));
    }
    dump(os, j);
}

void write_json(std::ostream& os, const Modulus& m, const AnalyticTable& t) {
    ordered_json j;
    j["alpha"] = alpha_json(m);
    j["dims"] = t.dims;
    j["node_count"] = t.node_count.str();
    j["algorithm"] = algorithm_name(t.algorithm);
    j["diameter"] = m.diameter();
    j["steps"] = t.steps;
    j["total_senders"] = t.total_senders.str();
    j["total_receivers"] = t.total_receivers.str();
    const Count wsum = weighted_receive_sum(t);
    j["mean_receive_step"] = {
        {"numerator", wsum.str()},
        {"denominator", t.total_receivers.str()},
        {"decimal", decimal_string(wsum, t.total_receivers, 4)}};
    auto& steps = j["per_step"] = ordered_json::array();
    for (const AnalyticRow& r : t.rows) {
        const Count active = r.senders + r.receivers;
        const Count free = t.node_count - active;
        ordered_json row;
        row["step"] = r.step;
        if (t.algorithm == Algorithm::Previous) row["round"] = r.round;
        row["free"] = free.str();
        row["sending"] = r.senders.str();
        row["receiving"] = r.receivers.str();
        row["active"] = active.str();
        steps.push_back(std::move(row));
    }
    dump(os, j);
}

void write_json(std::ostream& os, const HyperEJNetwork& net, const AllToAllTrace& t) {
    ordered_json j;
    j["alpha"] = alpha_json(net.modulus());
    j["dims"] = t.dims;
    j["node_count"] = t.node_count;
    j["steps"] = t.steps;
    j["phase_length"] = t.steps / 3;
    j["messages_per_node"] = t.node_count - 1;
    auto& phases = j["phases"] = ordered_json::array();
    for (int p = 1; p <= 3; ++p) {
        ordered_json ph;
        ph["phase"] = p;
        auto sect = phase_sectors(p);
        ph["sectors"] = {sect[0], sect[1]};
        ordered_json snd = ordered_json::array(), rcv = ordered_json::array();
        for (Unit u : phase_send_units(p)) snd.push_back(unit_name(u));
        for (Unit u : phase_receive_units(p)) rcv.push_back(unit_name(u));
        ph["send_units"] = std::move(snd);
        ph["receive_units"] = std::move(rcv);
        ph["bundles_per_node"] = t.bundles_per_node[static_cast<size_t>(p - 1)];
        ph["new_origins_per_node"] = t.new_origins_per_node[static_cast<size_t>(p - 1)];
        phases.push_back(std::move(ph));
    }
    auto& steps = j["per_step"] = ordered_json::array();
    for (const AllToAllStep& s : t.per_step)
        steps.push_back({{"step", s.step},
                         {"phase", s.phase},
                         {"local_step", s.local_step},
                         {"senders", s.senders},
                         {"transmissions", s.transmissions},
                         {"deliveries", s.deliveries},
                         {"new_origins", s.new_origins}});
    j["final_message_count"] = t.final_message_count;
    dump(os, j);
}

void write_totals_json(std::ostream& os, const Modulus& m, int dims) {
    const AnalyticTable prev = analytic_one_to_all(m, dims, Algorithm::Previous);
    const AnalyticTable imp = analytic_one_to_all(m, dims, Algorithm::Improved);
    ordered_json j;
    j["alpha"] = alpha_json(m);
    j["dims"] = dims;
    j["node_count"] = prev.node_count.str();
    j["steps"] = prev.steps;
    j["total_senders"] = {{"previous", prev.total_senders.str()},
                          {"improved", imp.total_senders.str()}};
    j["total_receivers"] = prev.total_receivers.str();
    j["sender_ratio"] = ratio_9dp(prev.total_senders, imp.total_senders);
    dump(os, j);
}

namespace {

int64_t histogram_nodes(const std::vector<int64_t>& h) {
    int64_t n = 0;
    for (int64_t c : h) n = checked_add(n, c);
    return n;
}

} // namespace

void write_topology_json(std::ostream& os, const Modulus& m, int dims,
                         const std::vector<int64_t>& bfs_histogram, bool show_coords) {
    const std::vector<int64_t> closed = distance_histogram(m, dims);
    ordered_json j;
    j["alpha"] = alpha_json(m);
    j["dims"] = dims;
    j["node_count"] = histogram_nodes(closed);
    j["degree"] = 6 * dims;
    j["links"] = histogram_nodes(closed) * 3 * dims;
    j["unit_diameter"] = m.diameter();
    j["diameter"] = static_cast<int64_t>(closed.size()) - 1;
    j["crossover"] = m.crossover().str();
    j["diameter_bound"] = m.diameter_bound().str();
    j["broadcast_ready"] = m.broadcastable();
    j["closed_form_histogram"] = closed;
    j["bfs_histogram"] = bfs_histogram;
    j["histograms_equal"] = closed == bfs_histogram;
    if (show_coords) {
        const std::vector<EjInt> res = residues(m);
        std::optional<SectorSchedule> sched;
        if (m.broadcastable()) sched.emplace(m);
        auto& rows = j["residues"] = ordered_json::array();
        for (size_t i = 0; i < res.size(); ++i) {
            ordered_json row;
            row["index"] = static_cast<int64_t>(i);
            row["x"] = res[i].x;
            row["y"] = res[i].y;
            row["value"] = to_string(res[i]);
            row["weight"] = free_weight(res[i]);
            if (sched) row["sector"] = sched->sector_of(res[i]);
            rows.push_back(std::move(row));
        }
    }
    dump(os, j);
}

void write_topology_csv(std::ostream& os, const Modulus& m, int dims,
                        const std::vector<int64_t>& bfs_histogram, bool show_coords) {
    if (show_coords) {
        const std::vector<EjInt> res = residues(m);
        std::optional<SectorSchedule> sched;
        if (m.broadcastable()) sched.emplace(m);
        os << "index,x,y,value,weight,sector\n";
        for (size_t i = 0; i < res.size(); ++i) {
            os << i << ',' << res[i].x << ',' << res[i].y << ',' << to_string(res[i])
               << ',' << free_weight(res[i]) << ',';
            if (sched) os << sched->sector_of(res[i]);
            os << '\n';
        }
        return;
    }
    const std::vector<int64_t> closed = distance_histogram(m, dims);
    os << "distance,closed_form,bfs\n";
    for (size_t d = 0; d < closed.size(); ++d) {
        os << d << ',' << closed[d] << ',';
        if (d < bfs_histogram.size()) os << bfs_histogram[d];
        os << '\n';
    }
}

} // namespace ejnet
