#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ejnet/modulus.hpp"
#include "ejnet/sector_tree.hpp"
#include "ejnet/units.hpp"

namespace ejnet {

struct BuildLimits {
    // Largest network that may be enumerated / simulated node by node.
    int64_t max_explicit_nodes = 4'000'000;
    int max_dims = 12;
};

// n-dimensional cross product of EJ_alpha with itself. Nodes are n-tuples of
// residues addressed by a dense mixed-radix index over the sorted residue
// list, highest dimension first; degree is 6n. Networks whose node count
// exceeds the explicit budget stay usable through coordinate arithmetic, but
// whole-network walks (BFS, simulation) refuse to run on them.
class HyperEJNetwork {
public:
    HyperEJNetwork(const Modulus& m, int dims, const BuildLimits& limits = {});

    const Modulus& modulus() const { return mod_; }
    int dims() const { return dims_; }
    int64_t node_count() const { return node_count_; }
    bool explicit_ok() const { return explicit_ok_; }
    const BuildLimits& limits() const { return limits_; }
    int degree() const { return 6 * dims_; }

    const std::vector<EjInt>& residue_list() const { return residues_; }
    int32_t residue_index(EjInt z) const; // canonicalises z first

    // Mixed-radix digit of a node in one dimension (1-based, n highest).
    int32_t coord_digit(int64_t node, int dim) const;
    std::vector<EjInt> coords(int64_t node) const; // highest dimension first
    std::string coord_string(int64_t node) const;

    int64_t neighbor(int64_t node, LinkLabel l) const;

    // True when stepping this link wraps: the plain lattice sum of the
    // coordinate and the unit is not its canonical residue.
    bool is_wraparound(int64_t node, LinkLabel l) const;

    // Per-coordinate residue translation; translate(v, d) has coordinates
    // v_i + d_i mod alpha.
    int64_t translate(int64_t node, int64_t by) const;

    // Sector of a node's digit in one dimension (0 = centre).
    int sector_of_digit(int32_t digit) const;

    const SectorSchedule& sectors() const;
    // Residue index of a sector-tree node.
    int32_t tree_digit(int sector, int32_t tree_node) const;

    // Hop distances from src to every node. Requires an explicit network.
    std::vector<int32_t> bfs_from(int64_t source) const;

    void require_explicit(const char* what) const;
    void require_node(int64_t node) const;

private:
    Modulus mod_;
    int dims_;
    BuildLimits limits_;
    int64_t node_count_ = 0;
    bool explicit_ok_ = false;
    std::vector<EjInt> residues_;
    std::unordered_map<uint64_t, int32_t> res_index_;
    std::vector<std::array<int32_t, 6>> unit_step_; // [residue][unit] -> residue
    std::vector<int64_t> stride_;                   // stride_[dim] = N^(dim-1)
    std::shared_ptr<const SectorSchedule> sectors_; // only for b = a+1
    std::vector<int8_t> sector_of_digit_;
    std::vector<std::vector<int32_t>> tree_digit_;  // [sector-1][tree node] -> residue
};

HyperEJNetwork build_network(const Modulus& m, int dims, const BuildLimits& limits = {});

} // namespace ejnet
