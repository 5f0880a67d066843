#include "ejnet/sector_tree.hpp"

namespace ejnet {
namespace {

uint64_t res_key(EjInt z) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(static_cast<int32_t>(z.x))) << 32) |
           static_cast<uint64_t>(static_cast<uint32_t>(static_cast<int32_t>(z.y)));
}

} // namespace

SectorSchedule::SectorSchedule(const Modulus& m) : mod_(m) {
    if (!m.broadcastable())
        throw ConfigError("sector schedule requires a modulus with b = a + 1");
    const int32_t diam = static_cast<int32_t>(m.diameter());
    trees_.resize(6);
    for (int sector = 1; sector <= 6; ++sector) {
        SectorTree& t = trees_[static_cast<size_t>(sector - 1)];
        t.sector = sector;
        const EjInt major = unit_value(sector_major(sector));
        const EjInt minor = unit_value(sector_minor(sector));

        t.nodes.push_back({mod_reduce(major, m), diam - 1, diam - 1, 1, -1, -1, -1});
        size_t head = 0;
        while (head < t.nodes.size()) {
            // Children reuse the node's budget: one minor hop resets y, one
            // major hop decrements both.
            SectorTreeNode cur = t.nodes[head];
            int32_t id = static_cast<int32_t>(head);
            if (cur.x > 0) {
                t.nodes[head].minor_child = static_cast<int32_t>(t.nodes.size());
                t.nodes.push_back({mod_reduce(cur.res + minor, m), cur.x - 1, 0,
                                   cur.depth + 1, id, -1, -1});
            }
            if (cur.y > 0) {
                t.nodes[head].major_child = static_cast<int32_t>(t.nodes.size());
                t.nodes.push_back({mod_reduce(cur.res + major, m), cur.x - 1, cur.y - 1,
                                   cur.depth + 1, id, -1, -1});
            }
            ++head;
        }

        t.by_depth.assign(static_cast<size_t>(diam), {});
        for (size_t i = 0; i < t.nodes.size(); ++i) {
            const SectorTreeNode& node = t.nodes[i];
            t.by_depth[static_cast<size_t>(node.depth - 1)].push_back(static_cast<int32_t>(i));
            auto [it, fresh] = where_.insert({res_key(node.res), Pos{sector, static_cast<int32_t>(i)}});
            if (!fresh) throw InvariantViolation("sector trees overlap");
        }
    }
    if (static_cast<int64_t>(where_.size()) != m.norm() - 1)
        throw InvariantViolation("sector trees do not cover all non-zero residues");
}

const SectorTree& SectorSchedule::tree(int sector) const {
    if (sector < 1 || sector > 6) throw ConfigError("sector out of range");
    return trees_[static_cast<size_t>(sector - 1)];
}

int SectorSchedule::sector_of(EjInt z) const {
    EjInt c = mod_reduce(z, mod_);
    if (c == EjInt{0, 0}) return 0;
    auto it = where_.find(res_key(c));
    if (it == where_.end()) throw InvariantViolation("residue missing from sector map");
    return it->second.sector;
}

const SectorTreeNode* SectorSchedule::node_of(EjInt canonical) const {
    auto it = where_.find(res_key(canonical));
    if (it == where_.end()) return nullptr;
    return &trees_[static_cast<size_t>(it->second.sector - 1)].nodes[static_cast<size_t>(it->second.node)];
}

SectorTree sector_tree(const Modulus& m, int sector) { return SectorSchedule(m).tree(sector); }

} // namespace ejnet
