#ifndef NECKTIG_EULERTIGS_HPP
#define NECKTIG_EULERTIGS_HPP

#include <string>
#include <vector>

#include "necktig/pc_cover.hpp"

namespace necktig {

struct EulertigsResult {
    std::vector<std::string> strings;
    std::size_t breaking_edges = 0;  // b
    std::size_t weight = 0;          // n_k + (k-1) * strings.size()
};

// Minimum-SPSS baseline: per weakly-connected component of the edge-centric
// graph, oppositely unbalanced nodes are paired with breaking edges in
// ascending node order, an Eulerian circuit is cut at the breaking edges,
// and a balanced component is spelled as one linear string.
EulertigsResult eulertigs(const Spectrum& spec);

// The Eulertigs strings as a node-centric PC cover with obvious cycles
// closed (the separator-model input cover).
PCCover eulertigs_pc_cover(const Spectrum& spec, const NodeGraph& g);

}  // namespace necktig

#endif
