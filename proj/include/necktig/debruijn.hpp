#ifndef NECKTIG_DEBRUIJN_HPP
#define NECKTIG_DEBRUIJN_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "necktig/kmer.hpp"

namespace necktig {

// Node-centric de Bruijn graph: one node per spectrum k-mer (ids shared with
// the Spectrum), edge (u,v) iff suf_{k-1}(u) = pre_{k-1}(v); self-loops
// allowed. Topology only; spell through the Spectrum. Immutable after
// construction, safe for concurrent reads.
class NodeGraph {
public:
    NodeGraph() = default;

    std::uint32_t k() const noexcept { return k_; }
    std::size_t node_count() const noexcept { return in_deg_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size(); }

    // Successors sorted ascending by node id.
    std::span<const NodeId> out(NodeId u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }
    std::uint32_t out_deg(NodeId u) const { return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]); }
    std::uint32_t in_deg(NodeId u) const { return in_deg_[u]; }

    bool has_edge(NodeId u, NodeId v) const;

    // Inverse adjacency, materialized on first use (only the brute-force
    // oracles walk it).
    std::span<const NodeId> in(NodeId v) const;

    static NodeGraph build(const Spectrum& spec);

private:
    std::uint32_t k_ = 0;
    std::vector<std::size_t> offsets_;  // size n+1
    std::vector<NodeId> targets_;
    std::vector<std::uint32_t> in_deg_;

    struct InAdj {
        std::once_flag once;
        std::vector<std::size_t> offsets;
        std::vector<NodeId> sources;
    };
    std::shared_ptr<InAdj> in_adj_ = std::make_shared<InAdj>();
};

// Edge-centric de Bruijn graph: nodes are the distinct (k-1)-mers, one
// labeled edge per spectrum k-mer.
struct EdgeGraph {
    struct Edge {
        NodeId from;
        NodeId to;
        std::uint8_t label;  // 2-bit code of the k-mer's last symbol
    };

    std::uint32_t k = 0;                     // the k of the *edges*
    std::vector<std::uint64_t> node_values;  // sorted (k-1)-mer packed values
    std::vector<Edge> edges;                 // in spectrum id order
    std::vector<std::uint32_t> out_deg;
    std::vector<std::uint32_t> in_deg;

    std::size_t node_count() const noexcept { return node_values.size(); }
    std::string node_text(NodeId id) const { return unpack_kmer(node_values[id], k - 1); }
};

NodeGraph build_node_dbg(const Spectrum& spec);
EdgeGraph build_edge_dbg(const Spectrum& spec);

// Differential-testing dump: one line per edge, "u_kmer v_kmer".
std::string dump_node_graph(const NodeGraph& g, const Spectrum& spec);

}  // namespace necktig

#endif
