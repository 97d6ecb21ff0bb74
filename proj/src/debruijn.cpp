#include "necktig/debruijn.hpp"

#include <algorithm>
#include <sstream>

namespace necktig {

NodeGraph NodeGraph::build(const Spectrum& spec) {
    if (spec.empty()) throw EmptyInput("cannot build a de Bruijn graph from an empty spectrum");
    const std::uint32_t k = spec.k();
    const std::size_t n = spec.size();
    const std::vector<std::uint64_t>& values = spec.values();
    const std::uint64_t prefix_shift = 2;

    NodeGraph g;
    g.k_ = k;
    g.offsets_.assign(n + 1, 0);
    g.in_deg_.assign(n, 0);

    // Nodes are sorted by packed value = (prefix << 2) | last symbol, so all
    // nodes sharing a (k-1)-prefix are contiguous; the successor bucket of u
    // is the value range [suffix << 2, (suffix + 1) << 2).
    std::vector<std::pair<std::size_t, std::size_t>> buckets(n);
    for (std::size_t u = 0; u < n; ++u) {
        const std::uint64_t suffix = values[u] & ((std::uint64_t{1} << (2 * (k - 1))) - 1);
        auto lo = std::lower_bound(values.begin(), values.end(), suffix << prefix_shift);
        auto hi = std::lower_bound(values.begin(), values.end(), (suffix + 1) << prefix_shift);
        buckets[u] = {static_cast<std::size_t>(lo - values.begin()),
                      static_cast<std::size_t>(hi - values.begin())};
        g.offsets_[u + 1] = g.offsets_[u] + (buckets[u].second - buckets[u].first);
    }
    g.targets_.resize(g.offsets_[n]);
    for (std::size_t u = 0; u < n; ++u) {
        std::size_t w = g.offsets_[u];
        for (std::size_t v = buckets[u].first; v < buckets[u].second; ++v) {
            g.targets_[w++] = static_cast<NodeId>(v);
            ++g.in_deg_[v];
        }
    }
    return g;
}

bool NodeGraph::has_edge(NodeId u, NodeId v) const {
    auto adj = out(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::span<const NodeId> NodeGraph::in(NodeId v) const {
    std::call_once(in_adj_->once, [this] {
        const std::size_t n = node_count();
        in_adj_->offsets.assign(n + 1, 0);
        for (NodeId t : targets_) ++in_adj_->offsets[t + 1];
        for (std::size_t i = 0; i < n; ++i) in_adj_->offsets[i + 1] += in_adj_->offsets[i];
        in_adj_->sources.resize(targets_.size());
        std::vector<std::size_t> cursor(in_adj_->offsets.begin(), in_adj_->offsets.end() - 1);
        for (std::size_t u = 0; u < n; ++u)
            for (NodeId t : out(static_cast<NodeId>(u)))
                in_adj_->sources[cursor[t]++] = static_cast<NodeId>(u);
    });
    return {in_adj_->sources.data() + in_adj_->offsets[v],
            in_adj_->sources.data() + in_adj_->offsets[v + 1]};
}

NodeGraph build_node_dbg(const Spectrum& spec) { return NodeGraph::build(spec); }

EdgeGraph build_edge_dbg(const Spectrum& spec) {
    if (spec.empty()) throw EmptyInput("cannot build a de Bruijn graph from an empty spectrum");
    const std::uint32_t k = spec.k();
    const std::uint64_t suffix_mask = (std::uint64_t{1} << (2 * (k - 1))) - 1;

    EdgeGraph g;
    g.k = k;
    g.node_values.reserve(2 * spec.size());
    for (std::uint64_t v : spec.values()) {
        g.node_values.push_back(v >> 2);          // (k-1)-prefix
        g.node_values.push_back(v & suffix_mask); // (k-1)-suffix
    }
    std::sort(g.node_values.begin(), g.node_values.end());
    g.node_values.erase(std::unique(g.node_values.begin(), g.node_values.end()),
                        g.node_values.end());

    auto id_of = [&](std::uint64_t value) {
        return static_cast<NodeId>(
            std::lower_bound(g.node_values.begin(), g.node_values.end(), value) -
            g.node_values.begin());
    };

    g.out_deg.assign(g.node_values.size(), 0);
    g.in_deg.assign(g.node_values.size(), 0);
    g.edges.reserve(spec.size());
    for (std::uint64_t v : spec.values()) {
        EdgeGraph::Edge e{id_of(v >> 2), id_of(v & suffix_mask),
                          static_cast<std::uint8_t>(v & 3)};
        ++g.out_deg[e.from];
        ++g.in_deg[e.to];
        g.edges.push_back(e);
    }
    return g;
}

std::string dump_node_graph(const NodeGraph& g, const Spectrum& spec) {
    std::ostringstream out;
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.out(u)) out << spec.text_of(u) << ' ' << spec.text_of(v) << '\n';
    return out.str();
}

}  // namespace necktig
