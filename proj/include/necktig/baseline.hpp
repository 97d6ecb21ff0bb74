#ifndef NECKTIG_BASELINE_HPP
#define NECKTIG_BASELINE_HPP

#include "necktig/necklace.hpp"

namespace necktig {

// Fully greedy baseline: repeated DFS from the smallest unvisited node
// claims tree edges into unvisited nodes; the chain of first-claimed
// children is the root spine, closed into a cycle afterwards when the tail
// has an edge back to the head. Valid cover, no optimality guarantee.
NecklaceCover greedy_baseline_cover(const NodeGraph& g);

}  // namespace necktig

#endif
