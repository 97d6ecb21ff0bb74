#include "necktig/eulertigs.hpp"

#include <algorithm>
#include <numeric>

namespace necktig {

namespace {

struct DirectedMultigraph {
    // adjacency entry: (target, edge id); real edges carry their spectrum
    // k-mer id, breaking edges get ids >= real_count.
    std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj;
    std::size_t real_count = 0;
    std::size_t total_count = 0;
};

std::vector<std::size_t> hierholzer(const DirectedMultigraph& g, NodeId start,
                                    std::size_t expected_edges) {
    std::vector<std::size_t> cursor(g.adj.size(), 0);
    std::vector<std::pair<NodeId, std::size_t>> stack;  // (node, edge entered through)
    std::vector<std::size_t> circuit;
    circuit.reserve(expected_edges);
    stack.emplace_back(start, std::size_t(-1));
    while (!stack.empty()) {
        auto [v, e_in] = stack.back();
        if (cursor[v] < g.adj[v].size()) {
            auto [to, eid] = g.adj[v][cursor[v]++];
            stack.emplace_back(to, eid);
        } else {
            stack.pop_back();
            if (e_in != std::size_t(-1)) circuit.push_back(e_in);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (circuit.size() != expected_edges)
        throw Error("internal: component is not Eulerian after balancing");
    return circuit;
}

}  // namespace

EulertigsResult eulertigs(const Spectrum& spec) {
    const EdgeGraph eg = build_edge_dbg(spec);
    const std::uint32_t k = spec.k();
    const std::size_t n = eg.node_count();

    // Weakly-connected components over the real edges.
    std::vector<NodeId> comp_root(n);
    std::iota(comp_root.begin(), comp_root.end(), 0);
    auto find = [&](NodeId x) {
        while (comp_root[x] != x) {
            comp_root[x] = comp_root[comp_root[x]];
            x = comp_root[x];
        }
        return x;
    };
    for (const auto& e : eg.edges) {
        NodeId a = find(e.from), b = find(e.to);
        if (a != b) comp_root[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::vector<std::size_t>> comp_edges_by_root(n);
    for (std::size_t i = 0; i < eg.edges.size(); ++i)
        comp_edges_by_root[find(eg.edges[i].from)].push_back(i);

    EulertigsResult result;
    std::vector<char> label_of_edge;
    for (NodeId root = 0; root < n; ++root) {
        const auto& edge_ids = comp_edges_by_root[root];
        if (edge_ids.empty()) continue;

        // Local multigraph. Edges were created in ascending spectrum order,
        // so per-node adjacency comes out sorted by label.
        std::vector<NodeId> nodes;
        for (std::size_t eid : edge_ids) {
            nodes.push_back(eg.edges[eid].from);
            nodes.push_back(eg.edges[eid].to);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        auto local = [&](NodeId v) {
            return static_cast<NodeId>(
                std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
        };

        DirectedMultigraph g;
        g.adj.resize(nodes.size());
        g.real_count = edge_ids.size();
        std::vector<std::uint64_t> edge_value(edge_ids.size());
        for (std::size_t i = 0; i < edge_ids.size(); ++i) {
            const auto& e = eg.edges[edge_ids[i]];
            g.adj[local(e.from)].emplace_back(local(e.to), i);
            edge_value[i] = spec.values()[edge_ids[i]];
        }

        // Pair oppositely unbalanced nodes in ascending node order, with
        // multiplicity |d+ - d-|.
        std::vector<NodeId> deficits, surpluses;  // d+-d- < 0 / > 0
        {
            std::vector<int> diff(nodes.size(), 0);
            for (std::size_t v = 0; v < nodes.size(); ++v) diff[v] += static_cast<int>(g.adj[v].size());
            for (std::size_t i = 0; i < edge_ids.size(); ++i)
                --diff[local(eg.edges[edge_ids[i]].to)];
            for (std::size_t v = 0; v < nodes.size(); ++v) {
                for (int c = diff[v]; c < 0; ++c) deficits.push_back(static_cast<NodeId>(v));
                for (int c = diff[v]; c > 0; --c) surpluses.push_back(static_cast<NodeId>(v));
            }
        }
        if (deficits.size() != surpluses.size())
            throw Error("internal: unbalanced node counts differ");
        const std::size_t b = deficits.size();
        for (std::size_t i = 0; i < b; ++i)
            g.adj[deficits[i]].emplace_back(surpluses[i], g.real_count + i);
        g.total_count = g.real_count + b;
        result.breaking_edges += b;

        const NodeId start = (b > 0) ? deficits[0] : 0;
        std::vector<std::size_t> circuit = hierholzer(g, start, g.total_count);

        auto is_breaking = [&](std::size_t eid) { return eid >= g.real_count; };
        auto spell_segment = [&](std::size_t begin, std::size_t end) {
            // Real-edge run circuit[begin, end); edges are consecutive.
            std::string s = unpack_kmer(edge_value[circuit[begin]], k);
            for (std::size_t i = begin + 1; i < end; ++i)
                s.push_back(base_char(edge_value[circuit[i]] & 3));
            result.strings.push_back(std::move(s));
        };

        if (b == 0) {
            spell_segment(0, circuit.size());
            continue;
        }
        // Rotate so the circuit starts at its first breaking edge, then cut.
        std::size_t first = 0;
        while (!is_breaking(circuit[first])) ++first;
        std::rotate(circuit.begin(), circuit.begin() + first, circuit.end());
        std::size_t i = 0;
        while (i < circuit.size()) {
            if (is_breaking(circuit[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < circuit.size() && !is_breaking(circuit[j])) ++j;
            spell_segment(i, j);
            i = j;
        }
    }

    for (const std::string& s : result.strings) result.weight += s.size();
    return result;
}

PCCover eulertigs_pc_cover(const Spectrum& spec, const NodeGraph& g) {
    EulertigsResult base = eulertigs(spec);
    PCCover cover;
    const std::uint32_t k = spec.k();
    const std::uint64_t mask = (std::uint64_t{1} << (2 * k)) - 1;
    for (const std::string& s : base.strings) {
        std::vector<NodeId> path;
        std::uint64_t window = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            window = ((window << 2) | static_cast<std::uint64_t>(base_code(s[i]))) & mask;
            if (i + 1 >= k) path.push_back(spec.id_of(window));
        }
        cover.paths.push_back(std::move(path));
    }
    return close_obvious_cycles(std::move(cover), g);
}

}  // namespace necktig
