#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ejnet/modulus.hpp"
#include "ejnet/units.hpp"

namespace ejnet {

// One node of a sector broadcast tree. The (x, y) pair is the forwarding
// budget carried by the message that reaches this node: x minor hops and y
// major hops still allowed. A node forwards along the minor direction while
// x > 0 and along the major axis while y > 0, which makes every axis node
// branch twice and every off-axis node chain once, out to depth = diameter.
struct SectorTreeNode {
    EjInt res;          // canonical residue
    int32_t x = 0;
    int32_t y = 0;
    int32_t depth = 0;  // root of the tree sits at depth 1
    int32_t parent = -1;
    int32_t minor_child = -1;
    int32_t major_child = -1;
};

struct SectorTree {
    int sector = 0;
    std::vector<SectorTreeNode> nodes;           // breadth-first order
    std::vector<std::vector<int32_t>> by_depth;  // by_depth[d-1] = node ids at depth d
};

// The six trees rooted at the units. For a b = a+1 modulus they partition the
// non-zero residues, each tree holding a(a+1)/2 nodes; that partition is what
// both one-to-all schedules and the all-to-all phases walk.
class SectorSchedule {
public:
    explicit SectorSchedule(const Modulus& m);

    const Modulus& modulus() const { return mod_; }
    const SectorTree& tree(int sector) const;

    // Sector containing the class of z; 0 for the centre (zero) residue.
    int sector_of(EjInt z) const;

    // Tree node holding a canonical residue, or nullptr for the centre.
    const SectorTreeNode* node_of(EjInt canonical) const;

private:
    Modulus mod_;
    std::vector<SectorTree> trees_; // index 0..5 = sector 1..6
    struct Pos { int sector; int32_t node; };
    std::unordered_map<uint64_t, Pos> where_;
};

// Convenience accessor matching the schedule above.
SectorTree sector_tree(const Modulus& m, int sector);

} // namespace ejnet
