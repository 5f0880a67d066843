// Command-line front end: topology reports, broadcast and exchange traces,
// analytic tables, and cross-network comparisons.

#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ejnet/all_to_all.hpp"
#include "ejnet/analytics.hpp"
#include "ejnet/broadcast.hpp"
#include "ejnet/network.hpp"
#include "ejnet/trace_io.hpp"

using namespace ejnet;
using ordered_json = nlohmann::ordered_json;

namespace {

int64_t parse_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        const int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::runtime_error("");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(std::string(what) + " is not an integer: '" + s + "'");
    }
}

Modulus parse_alpha(const std::string& s) {
    const size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw ConfigError("--alpha expects two comma-separated integers a,b");
    return Modulus(parse_int(s.substr(0, comma), "--alpha"),
                   parse_int(s.substr(comma + 1), "--alpha"));
}

// A dims argument is a single value or an inclusive range lo..hi.
std::vector<int> parse_dims_range(const std::string& s) {
    const size_t dots = s.find("..");
    if (dots == std::string::npos)
        return {static_cast<int>(parse_int(s, "--dims"))};
    const int lo = static_cast<int>(parse_int(s.substr(0, dots), "--dims"));
    const int hi = static_cast<int>(parse_int(s.substr(dots + 2), "--dims"));
    if (lo < 1 || hi < lo) throw ConfigError("--dims range must satisfy 1 <= lo <= hi");
    std::vector<int> out;
    for (int d = lo; d <= hi; ++d) out.push_back(d);
    return out;
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file: " + path);
    body(os);
}

// Companion stream for human-readable summaries: stderr when the table goes
// to stdout, stdout otherwise, so piped table output stays clean.
std::ostream& info_stream(const std::string& out_path) {
    return out_path.empty() ? std::cerr : std::cout;
}

// trace.csv -> trace.previous.csv when one run writes two files.
std::string suffixed(const std::string& path, const std::string& tag) {
    const size_t dot = path.rfind('.');
    const size_t slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "." + tag;
    return path.substr(0, dot) + "." + tag + path.substr(dot);
}

std::vector<Algorithm> algorithms_from(const std::string& s) {
    if (s == "previous") return {Algorithm::Previous};
    if (s == "improved") return {Algorithm::Improved};
    return {Algorithm::Previous, Algorithm::Improved};
}

std::string alpha_label(const Modulus& m) { return to_string(m.generator()); }

struct TopologyOpts {
    std::string alpha;
    int dims = 1;
    std::string format = "json";
    std::string out;
    bool show_coords = false;
};

void cmd_topology(const TopologyOpts& o) {
    const Modulus m = parse_alpha(o.alpha);
    HyperEJNetwork net(m, o.dims);
    const std::vector<int32_t> dist = net.bfs_from(0);
    const std::vector<int64_t> closed = distance_histogram(m, o.dims);
    std::vector<int64_t> hist(closed.size(), 0);
    for (const int32_t d : dist) {
        if (d < 0 || static_cast<size_t>(d) >= hist.size())
            throw InvariantViolation("search reached beyond the closed-form radius");
        ++hist[static_cast<size_t>(d)];
    }
    with_output(o.out, [&](std::ostream& os) {
        if (o.format == "csv") write_topology_csv(os, m, o.dims, hist, o.show_coords);
        else write_topology_json(os, m, o.dims, hist, o.show_coords);
    });
}

struct BroadcastOpts {
    std::string alpha;
    int dims = 1;
    std::string algorithm = "improved";
    std::string mode = "one2all";
    int64_t source = 0;
    std::string format = "csv";
    std::string out;
    bool show_coords = false;
};

void exchange_summary(std::ostream& info, const HyperEJNetwork& net, const AllToAllTrace& t) {
    info << "all-to-all: alpha " << alpha_label(net.modulus()) << " dims " << net.dims()
         << " nodes " << t.node_count << " steps " << t.steps << "\n"
         << "  messages per node " << (t.node_count - 1) << ", bundles per phase "
         << t.bundles_per_node[0] << "/" << t.bundles_per_node[1] << "/" << t.bundles_per_node[2]
         << ", new origins per phase " << t.new_origins_per_node[0] << "/"
         << t.new_origins_per_node[1] << "/" << t.new_origins_per_node[2] << "\n";
}

void run_exchange(const Modulus& m, int dims, const std::string& format, const std::string& out) {
    HyperEJNetwork net(m, dims);
    AllToAllTrace t = run_all_to_all(net);
    const HalfDuplexReport rep = verify_half_duplex(net, t);
    with_output(out, [&](std::ostream& os) {
        if (format == "json") write_json(os, net, t);
        else write_step_csv(os, t);
    });
    std::ostream& info = info_stream(out);
    exchange_summary(info, net, t);
    info << "  half-duplex check: " << (rep.ok ? "ok" : "violated") << "\n";
    if (!rep.ok)
        throw InvariantViolation("half-duplex conflict at step " + std::to_string(rep.step) +
                                 " between nodes " + std::to_string(rep.node_a) + " and " +
                                 std::to_string(rep.node_b));
}

void cmd_broadcast(const BroadcastOpts& o) {
    const Modulus m = parse_alpha(o.alpha);
    if (o.mode == "all2all") {
        run_exchange(m, o.dims, o.format, o.out);
        return;
    }
    HyperEJNetwork net(m, o.dims);
    const std::vector<Algorithm> algs = algorithms_from(o.algorithm);
    for (const Algorithm alg : algs) {
        BroadcastTrace t = run_one_to_all(net, alg, o.source);
        const HalfDuplexReport rep = verify_half_duplex(net, t);
        std::string path = o.out;
        if (algs.size() == 2 && !o.out.empty()) path = suffixed(o.out, algorithm_name(alg));
        with_output(path, [&](std::ostream& os) {
            if (o.format == "json") write_json(os, net, t);
            else write_step_csv(os, t);
        });
        std::ostream& info = info_stream(path);
        const Rational mean = mean_receive_step(t);
        info << "algorithm " << algorithm_name(alg) << ": alpha " << alpha_label(m) << " dims "
             << o.dims << " nodes " << t.node_count << " steps " << t.steps << "\n"
             << "  total senders " << t.total_senders << ", total receivers " << t.total_receivers
             << "\n"
             << "  mean receive step " << mean.str() << " ("
             << decimal_string(Count(static_cast<uint64_t>(mean.num)),
                               Count(static_cast<uint64_t>(mean.den)), 4)
             << ")\n"
             << "  half-duplex check: " << (rep.ok ? "ok" : "violated") << "\n";
        if (o.show_coords)
            info << "  source " << o.source << " = " << net.coord_string(o.source) << "\n";
        if (!rep.ok)
            throw InvariantViolation("half-duplex conflict at step " + std::to_string(rep.step));
    }
}

struct AnalyticOpts {
    std::string alpha;
    int dims = 1;
    std::string algorithm = "improved";
    std::string format = "csv";
    std::string out;
};

void cmd_analytic(const AnalyticOpts& o) {
    const Modulus m = parse_alpha(o.alpha);
    const std::vector<Algorithm> algs = algorithms_from(o.algorithm);
    for (const Algorithm alg : algs) {
        AnalyticTable t = analytic_one_to_all(m, o.dims, alg);
        std::string path = o.out;
        if (algs.size() == 2 && !o.out.empty()) path = suffixed(o.out, algorithm_name(alg));
        with_output(path, [&](std::ostream& os) {
            if (o.format == "json") write_json(os, m, t);
            else write_step_csv(os, t);
        });
    }
    // Totals and the sender ratio cover both schedules regardless of which
    // table was requested.
    write_totals_json(info_stream(o.out), m, o.dims);
}

struct CompareOpts {
    std::vector<std::string> alphas;
    std::vector<std::string> dims;
    bool table3 = false;
    std::string format = "csv";
    std::string out;
};

struct CompareMember {
    Modulus m;
    int dims = 1;
    bool simulated = false;
    Count nodes;
    int32_t steps = 0;
    std::array<std::vector<Count>, 2> send, recv; // [algorithm][step]
    std::array<Count, 2> total;
    std::array<Count, 2> mean_num;
};

CompareMember build_member(const Modulus& m, int dims) {
    CompareMember mem{m, dims, false, Count{}, 0, {}, {}, {}, {}};
    const AnalyticTable prev = analytic_one_to_all(m, dims, Algorithm::Previous);
    const AnalyticTable imp = analytic_one_to_all(m, dims, Algorithm::Improved);
    mem.nodes = prev.node_count;
    mem.steps = prev.steps;
    mem.total = {prev.total_senders, imp.total_senders};
    mem.mean_num = {weighted_receive_sum(prev), weighted_receive_sum(imp)};
    mem.simulated = mem.nodes <= Count(BuildLimits{}.max_explicit_nodes);
    if (mem.simulated) {
        HyperEJNetwork net(m, dims);
        for (const Algorithm alg : {Algorithm::Previous, Algorithm::Improved}) {
            const BroadcastTrace t = run_one_to_all(net, alg, 0);
            const size_t a = alg == Algorithm::Previous ? 0 : 1;
            for (const StepStats& s : t.per_step) {
                mem.send[a].push_back(Count(static_cast<uint64_t>(s.sending)));
                mem.recv[a].push_back(Count(static_cast<uint64_t>(s.receiving)));
            }
        }
    } else {
        for (const AnalyticTable* t : {&prev, &imp}) {
            const size_t a = t == &prev ? 0 : 1;
            for (const AnalyticRow& r : t->rows) {
                mem.send[a].push_back(r.senders);
                mem.recv[a].push_back(r.receivers);
            }
        }
    }
    return mem;
}

void cmd_table3(const CompareOpts& o) {
    if (o.alphas.size() > 1) throw ConfigError("--table3 takes at most one --alpha");
    const Modulus m = o.alphas.empty() ? Modulus(3, 4) : parse_alpha(o.alphas.front());
    std::vector<int> dims;
    if (o.dims.empty()) dims = parse_dims_range("1..6");
    else
        for (const std::string& d : o.dims)
            for (const int v : parse_dims_range(d)) dims.push_back(v);

    struct Row {
        int dims;
        Count prev, imp, diff;
        std::string ratio;
    };
    std::vector<Row> rows;
    for (const int n : dims) {
        const SenderTotals t = sender_totals(m, n);
        rows.push_back({n, t.previous, t.improved, t.previous - t.improved,
                        decimal_string(t.previous, t.improved, 9)});
    }
    with_output(o.out, [&](std::ostream& os) {
        if (o.format == "json") {
            ordered_json j;
            j["alpha"] = {{"a", m.a()}, {"b", m.b()}, {"generator", alpha_label(m)},
                          {"norm", m.norm()}};
            auto& out_rows = j["rows"] = ordered_json::array();
            for (const Row& r : rows)
                out_rows.push_back({{"dims", r.dims},
                                    {"previous_senders", r.prev.str()},
                                    {"improved_senders", r.imp.str()},
                                    {"difference", r.diff.str()},
                                    {"ratio", r.ratio}});
            os << j.dump(2) << '\n';
        } else {
            os << "dims,previous_senders,improved_senders,difference,ratio\n";
            for (const Row& r : rows)
                os << r.dims << ',' << r.prev.str() << ',' << r.imp.str() << ',' << r.diff.str()
                   << ',' << r.ratio << '\n';
        }
    });
}

void cmd_compare(const CompareOpts& o) {
    if (o.table3) {
        cmd_table3(o);
        return;
    }
    std::vector<std::pair<Modulus, int>> family;
    if (o.alphas.empty() && o.dims.empty()) {
        family = {{Modulus(1, 2), 12}, {Modulus(2, 3), 6}, {Modulus(3, 4), 4},
                  {Modulus(4, 5), 3}, {Modulus(6, 7), 2}};
    } else if (o.alphas.empty() || o.dims.empty()) {
        throw ConfigError("compare needs both --alpha and --dims, or neither");
    } else {
        std::vector<int> dims;
        for (const std::string& d : o.dims)
            for (const int v : parse_dims_range(d)) dims.push_back(v);
        if (o.alphas.size() == 1) {
            const Modulus m = parse_alpha(o.alphas.front());
            for (const int n : dims) family.emplace_back(m, n);
        } else if (o.alphas.size() == dims.size()) {
            for (size_t i = 0; i < dims.size(); ++i)
                family.emplace_back(parse_alpha(o.alphas[i]), dims[i]);
        } else {
            throw ConfigError("compare needs one --alpha per --dims value, or a single --alpha");
        }
    }

    std::vector<CompareMember> members;
    for (const auto& [m, n] : family) members.push_back(build_member(m, n));
    const int32_t steps = members.front().steps;
    for (const CompareMember& mem : members)
        if (mem.steps != steps)
            throw ConfigError("family members disagree on step count: " +
                              alpha_label(mem.m) + " dims " + std::to_string(mem.dims) +
                              " takes " + std::to_string(mem.steps) + " steps, not " +
                              std::to_string(steps));

    const Count denom(static_cast<uint64_t>(members.size()));
    const auto avg = [&](const std::function<Count(const CompareMember&)>& pick) {
        Count sum;
        for (const CompareMember& mem : members) sum += pick(mem);
        return decimal_string(sum, denom, 4);
    };

    with_output(o.out, [&](std::ostream& os) {
        if (o.format == "json") {
            ordered_json j;
            auto& jm = j["members"] = ordered_json::array();
            for (const CompareMember& mem : members) {
                ordered_json e;
                e["alpha"] = alpha_label(mem.m);
                e["dims"] = mem.dims;
                e["node_count"] = mem.nodes.str();
                e["rows"] = mem.simulated ? "simulated" : "analytic";
                for (const size_t a : {size_t{0}, size_t{1}}) {
                    ordered_json alg;
                    alg["total_senders"] = mem.total[a].str();
                    alg["mean_receive_step"] =
                        decimal_string(mem.mean_num[a], mem.nodes - Count(1), 4);
                    e[a == 0 ? "previous" : "improved"] = std::move(alg);
                }
                jm.push_back(std::move(e));
            }
            j["steps"] = steps;
            auto& js = j["per_step"] = ordered_json::array();
            for (int32_t s = 0; s < steps; ++s) {
                ordered_json row;
                row["step"] = s + 1;
                for (const size_t a : {size_t{0}, size_t{1}}) {
                    const auto idx = static_cast<size_t>(s);
                    ordered_json alg;
                    alg["sending"] = avg([&](const CompareMember& mem) { return mem.send[a][idx]; });
                    alg["receiving"] = avg([&](const CompareMember& mem) { return mem.recv[a][idx]; });
                    alg["active"] = avg([&](const CompareMember& mem) {
                        return mem.send[a][idx] + mem.recv[a][idx];
                    });
                    row[a == 0 ? "previous" : "improved"] = std::move(alg);
                }
                js.push_back(std::move(row));
            }
            os << j.dump(2) << '\n';
        } else {
            os << "step,previous_sending,previous_receiving,previous_active,"
                  "improved_sending,improved_receiving,improved_active\n";
            for (int32_t s = 0; s < steps; ++s) {
                const auto idx = static_cast<size_t>(s);
                os << (s + 1);
                for (const size_t a : {size_t{0}, size_t{1}}) {
                    os << ',' << avg([&](const CompareMember& mem) { return mem.send[a][idx]; })
                       << ',' << avg([&](const CompareMember& mem) { return mem.recv[a][idx]; })
                       << ',' << avg([&](const CompareMember& mem) {
                              return mem.send[a][idx] + mem.recv[a][idx];
                          });
                }
                os << '\n';
            }
        }
    });

    std::ostream& info = info_stream(o.out);
    for (const CompareMember& mem : members) {
        info << "alpha " << alpha_label(mem.m) << " dims " << mem.dims << ": " << mem.nodes.str()
             << " nodes, " << mem.steps << " steps, "
             << (mem.simulated ? "simulated" : "analytic") << " rows\n";
        for (const size_t a : {size_t{0}, size_t{1}}) {
            info << "  " << (a == 0 ? "previous" : "improved") << ": total senders "
                 << mem.total[a].str() << ", mean receive step "
                 << decimal_string(mem.mean_num[a], mem.nodes - Count(1), 4) << "\n";
        }
        info << "  improved < previous: " << (mem.mean_num[1] < mem.mean_num[0] ? "yes" : "no")
             << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein-Jacobi network simulator and analytics"};
    app.require_subcommand(1);

    TopologyOpts topo;
    CLI::App* t = app.add_subcommand("topology", "ring structure, distances, and residue table");
    t->add_option("--alpha", topo.alpha, "generator a,b of a + b*rho")->required();
    t->add_option("--dims", topo.dims, "number of dimensions");
    t->add_option("--format", topo.format)->check(CLI::IsMember({"csv", "json"}));
    t->add_option("--out", topo.out, "write the table here instead of stdout");
    t->add_flag("--show-coords", topo.show_coords, "list every node with its coordinates");

    BroadcastOpts bc;
    CLI::App* b = app.add_subcommand("broadcast", "simulate one-to-all (or all-to-all) traffic");
    b->add_option("--alpha", bc.alpha, "generator a,b of a + b*rho")->required();
    b->add_option("--dims", bc.dims, "number of dimensions");
    b->add_option("--algorithm", bc.algorithm)->check(CLI::IsMember({"previous", "improved", "both"}));
    b->add_option("--mode", bc.mode)->check(CLI::IsMember({"one2all", "all2all"}));
    b->add_option("--source", bc.source, "index of the source node");
    b->add_option("--format", bc.format)->check(CLI::IsMember({"csv", "json"}));
    b->add_option("--out", bc.out, "write the trace here instead of stdout");
    b->add_flag("--show-coords", bc.show_coords, "print the source coordinates in the summary");

    BroadcastOpts ex; // alltoall reuses the broadcast options minus the schedule knobs
    CLI::App* x = app.add_subcommand("alltoall", "simulate the three-phase total exchange");
    x->add_option("--alpha", ex.alpha, "generator a,b of a + b*rho")->required();
    x->add_option("--dims", ex.dims, "number of dimensions");
    x->add_option("--format", ex.format)->check(CLI::IsMember({"csv", "json"}));
    x->add_option("--out", ex.out, "write the trace here instead of stdout");

    AnalyticOpts an;
    CLI::App* a = app.add_subcommand("analytic", "closed-form per-step tables, no simulation");
    a->add_option("--alpha", an.alpha, "generator a,b of a + b*rho")->required();
    a->add_option("--dims", an.dims, "number of dimensions");
    a->add_option("--algorithm", an.algorithm)->check(CLI::IsMember({"previous", "improved", "both"}));
    a->add_option("--format", an.format)->check(CLI::IsMember({"csv", "json"}));
    a->add_option("--out", an.out, "write the table here instead of stdout");

    CompareOpts cmp;
    CLI::App* c = app.add_subcommand("compare", "average both schedules across a family of networks");
    c->add_option("--alpha", cmp.alphas, "generator a,b; repeat for several networks");
    c->add_option("--dims", cmp.dims, "dimensions per network; a value or lo..hi");
    c->add_flag("--table3", cmp.table3, "sender totals and ratio per dimension count");
    c->add_option("--format", cmp.format)->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--out", cmp.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*t) cmd_topology(topo);
        if (*b) cmd_broadcast(bc);
        if (*x) run_exchange(parse_alpha(ex.alpha), ex.dims, ex.format, ex.out);
        if (*a) cmd_analytic(an);
        if (*c) cmd_compare(cmp);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ArithmeticOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
