#include "ejnet/network.hpp"

#include <queue>
#include <string>

namespace ejnet {
namespace {

uint64_t res_key(EjInt z) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(static_cast<int32_t>(z.x))) << 32) |
           static_cast<uint64_t>(static_cast<uint32_t>(static_cast<int32_t>(z.y)));
}

int64_t checked_pow(int64_t base, int exp) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace

HyperEJNetwork::HyperEJNetwork(const Modulus& m, int dims, const BuildLimits& limits)
    : mod_(m), dims_(dims), limits_(limits) {
    if (dims < 1 || dims > limits.max_dims)
        throw ConfigError("dims must be between 1 and " + std::to_string(limits.max_dims));
    if (m.norm() > limits.max_explicit_nodes)
        throw BudgetExceeded("per-dimension residue table exceeds the explicit budget");

    residues_ = residues(m);
    res_index_.reserve(residues_.size() * 2);
    for (size_t i = 0; i < residues_.size(); ++i)
        res_index_.emplace(res_key(residues_[i]), static_cast<int32_t>(i));

    unit_step_.resize(residues_.size());
    for (size_t i = 0; i < residues_.size(); ++i)
        for (int u = 0; u < kUnitCount; ++u) {
            EjInt next = mod_reduce(residues_[i] + unit_value(static_cast<Unit>(u)), mod_);
            unit_step_[i][static_cast<size_t>(u)] = res_index_.at(res_key(next));
        }

    try {
        node_count_ = checked_pow(m.norm(), dims_);
    } catch (const ArithmeticOverflow&) {
        throw BudgetExceeded("node count does not fit in 64 bits");
    }
    explicit_ok_ = node_count_ <= limits.max_explicit_nodes;

    stride_.assign(static_cast<size_t>(dims_) + 1, 1);
    for (int d = 2; d <= dims_; ++d)
        stride_[static_cast<size_t>(d)] = stride_[static_cast<size_t>(d - 1)] * m.norm();

    if (m.broadcastable()) {
        sectors_ = std::make_shared<const SectorSchedule>(m);
        sector_of_digit_.assign(residues_.size(), 0);
        for (size_t i = 1; i < residues_.size(); ++i)
            sector_of_digit_[i] = static_cast<int8_t>(sectors_->sector_of(residues_[i]));
        tree_digit_.resize(6);
        for (int s = 1; s <= 6; ++s) {
            const SectorTree& t = sectors_->tree(s);
            auto& row = tree_digit_[static_cast<size_t>(s - 1)];
            row.reserve(t.nodes.size());
            for (const SectorTreeNode& node : t.nodes)
                row.push_back(res_index_.at(res_key(node.res)));
        }
    }
}

int32_t HyperEJNetwork::residue_index(EjInt z) const {
    return res_index_.at(res_key(mod_reduce(z, mod_)));
}

int32_t HyperEJNetwork::coord_digit(int64_t node, int dim) const {
    return static_cast<int32_t>((node / stride_[static_cast<size_t>(dim)]) % mod_.norm());
}

std::vector<EjInt> HyperEJNetwork::coords(int64_t node) const {
    std::vector<EjInt> out;
    out.reserve(static_cast<size_t>(dims_));
    for (int dim = dims_; dim >= 1; --dim)
        out.push_back(residues_[static_cast<size_t>(coord_digit(node, dim))]);
    return out;
}

std::string HyperEJNetwork::coord_string(int64_t node) const {
    std::string s = "(";
    auto c = coords(node);
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ", ";
        s += to_string(c[i]);
    }
    return s + ")";
}

int64_t HyperEJNetwork::neighbor(int64_t node, LinkLabel l) const {
    require_node(node);
    if (l.dim < 1 || l.dim > dims_) throw ConfigError("link dimension out of range");
    int32_t d = coord_digit(node, l.dim);
    int32_t nd = unit_step_[static_cast<size_t>(d)][static_cast<size_t>(l.unit)];
    return node + static_cast<int64_t>(nd - d) * stride_[static_cast<size_t>(l.dim)];
}

bool HyperEJNetwork::is_wraparound(int64_t node, LinkLabel l) const {
    require_node(node);
    if (l.dim < 1 || l.dim > dims_) throw ConfigError("link dimension out of range");
    int32_t d = coord_digit(node, l.dim);
    EjInt raw = residues_[static_cast<size_t>(d)] + unit_value(l.unit);
    int32_t nd = unit_step_[static_cast<size_t>(d)][static_cast<size_t>(l.unit)];
    return !(raw == residues_[static_cast<size_t>(nd)]);
}

int64_t HyperEJNetwork::translate(int64_t node, int64_t by) const {
    require_node(node);
    require_node(by);
    int64_t out = 0;
    for (int dim = dims_; dim >= 1; --dim) {
        EjInt sum = residues_[static_cast<size_t>(coord_digit(node, dim))] +
                    residues_[static_cast<size_t>(coord_digit(by, dim))];
        out += static_cast<int64_t>(res_index_.at(res_key(mod_reduce(sum, mod_)))) *
               stride_[static_cast<size_t>(dim)];
    }
    return out;
}

int HyperEJNetwork::sector_of_digit(int32_t digit) const {
    if (!sectors_) throw ConfigError("sectors are defined only for b = a + 1 moduli");
    return sector_of_digit_[static_cast<size_t>(digit)];
}

const SectorSchedule& HyperEJNetwork::sectors() const {
    if (!sectors_) throw ConfigError("sectors are defined only for b = a + 1 moduli");
    return *sectors_;
}

int32_t HyperEJNetwork::tree_digit(int sector, int32_t tree_node) const {
    if (!sectors_) throw ConfigError("sectors are defined only for b = a + 1 moduli");
    return tree_digit_[static_cast<size_t>(sector - 1)][static_cast<size_t>(tree_node)];
}

std::vector<int32_t> HyperEJNetwork::bfs_from(int64_t source) const {
    require_explicit("bfs");
    require_node(source);
    std::vector<int32_t> dist(static_cast<size_t>(node_count_), -1);
    std::queue<int64_t> q;
    dist[static_cast<size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int64_t v = q.front();
        q.pop();
        for (int dim = 1; dim <= dims_; ++dim)
            for (Unit u : kAllUnits) {
                int64_t w = neighbor(v, {dim, u});
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    q.push(w);
                }
            }
    }
    return dist;
}

void HyperEJNetwork::require_explicit(const char* what) const {
    if (!explicit_ok_)
        throw BudgetExceeded(std::string(what) + ": network exceeds the explicit-enumeration budget");
}

void HyperEJNetwork::require_node(int64_t node) const {
    if (node < 0 || node >= node_count_) throw ConfigError("node index out of range");
}

HyperEJNetwork build_network(const Modulus& m, int dims, const BuildLimits& limits) {
    return HyperEJNetwork(m, dims, limits);
}

} // namespace ejnet
