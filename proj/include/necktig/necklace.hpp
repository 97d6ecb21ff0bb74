#ifndef NECKTIG_NECKLACE_HPP
#define NECKTIG_NECKLACE_HPP

#include <optional>
#include <vector>

#include "necktig/pc_cover.hpp"

namespace necktig {

// One necklace: a root cycle (closed) or root path (open) with pendant
// arborescences. Pendant topology lives in NecklaceCover::children/parent.
struct Necklace {
    bool closed = false;
    std::vector<NodeId> root;
};

// Node-disjoint necklaces covering all nodes. children[v] holds v's pendant
// children in emission order (pipeline builders keep it ascending by edge
// label, which for siblings equals ascending node id); root successors are
// not repeated there. parent[v] is v's unique F-predecessor or kNoNode.
struct NecklaceCover {
    std::vector<Necklace> necklaces;
    std::vector<std::vector<NodeId>> children;
    std::vector<NodeId> parent;

    std::size_t node_count() const noexcept { return parent.size(); }
};

// Algorithm: grow necklaces from a PC cover. Primitive paths root the open
// necklaces, cycles root closed ones, every other path is attached as a
// pendant; leftovers are resolved by discovering new cycles through the
// remaining paths. Requires a valid cover with no closable path (run
// close_obvious_cycles first); throws CoverError otherwise. With a
// minimum-paths input cover the result minimizes the dollar-model cost.
NecklaceCover necklace_cover(const NodeGraph& g, const PCCover& cover);

// Depth-first search over path-head adjacencies starting from each remaining
// path in turn; an edge back to the start path's head closes the cycle.
// Returns a cycle whose every vertex lies on some remaining path. Throws
// CoverError if none exists (impossible when the greedy-exhaustion
// precondition holds).
std::vector<NodeId> find_new_cycle(const std::vector<std::vector<NodeId>>& remaining,
                                   const NodeGraph& g);

}  // namespace necktig

#endif
