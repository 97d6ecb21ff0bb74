#ifndef NECKTIG_PC_COVER_HPP
#define NECKTIG_PC_COVER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "necktig/debruijn.hpp"

namespace necktig {

// Vertex classification of the bipartite doubling: both copies matched,
// left only, right only, neither.
struct MatchingStats {
    std::size_t matching_size = 0;
    std::size_t open_paths = 0;  // nu; equals node_count - matching_size
    std::size_t lr = 0, lx = 0, xr = 0, xx = 0;
};

// Vertex-disjoint paths and cycles covering all nodes.
struct PCCover {
    std::vector<std::vector<NodeId>> paths;
    std::vector<std::vector<NodeId>> cycles;
    std::optional<MatchingStats> stats;

    std::size_t path_count() const noexcept { return paths.size(); }
};

// Minimum-paths PC cover via maximum bipartite matching on the doubled
// vertex set (Hopcroft-Karp, neighbors probed in ascending id order).
// Matching covers are never closable into cycles.
PCCover matching_pc_cover(const NodeGraph& g);

// One ascending scan keeping at most one unused in/out edge per node
// (smallest-id candidate). Valid cover, no minimality guarantee.
PCCover greedy_pc_cover(const NodeGraph& g);

// Every path whose last node has an edge back to its first node becomes a
// cycle. Idempotent.
PCCover close_obvious_cycles(PCCover cover, const NodeGraph& g);

struct PathClasses {
    std::vector<std::size_t> primitive;      // indices into cover.paths
    std::vector<std::size_t> non_primitive;
};

// A path is primitive iff its head has in-degree 0 in g.
PathClasses classify_paths(const PCCover& cover, const NodeGraph& g);

// Throws CoverError unless the cover partitions the node set and every
// consecutive pair (cyclically for cycles) is an edge of g.
void check_pc_cover(const PCCover& cover, const NodeGraph& g);

// Exhaustive oracle: minimum path count over all PC covers, by enumerating
// every edge subset with per-node in/out degree <= 1. Guard: <= 12 nodes.
std::size_t brute_min_paths(const NodeGraph& g);

// One line per element: "P:" or "C:" followed by space-separated k-mers.
std::string dump_cover(const PCCover& cover, const Spectrum& spec);

}  // namespace necktig

#endif
