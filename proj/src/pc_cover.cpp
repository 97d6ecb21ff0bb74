#include "necktig/pc_cover.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace necktig {

namespace {

// Maximum matching on the bipartite doubling f_L/f_R; adjacency of the left
// copy of u is g.out(u). Neighbors are scanned in ascending id order so the
// matching, and everything downstream of it, is deterministic.
struct HopcroftKarp {
    const NodeGraph& g;
    std::vector<NodeId> match_l, match_r;
    std::vector<std::uint32_t> dist;
    std::size_t size = 0;

    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

    explicit HopcroftKarp(const NodeGraph& graph)
        : g(graph),
          match_l(graph.node_count(), kNoNode),
          match_r(graph.node_count(), kNoNode),
          dist(graph.node_count(), kInf) {}

    bool bfs() {
        std::queue<NodeId> q;
        bool reachable_free = false;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            if (match_l[u] == kNoNode) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            for (NodeId v : g.out(u)) {
                NodeId w = match_r[v];
                if (w == kNoNode) {
                    reachable_free = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable_free;
    }

    struct Frame {
        NodeId u;
        std::size_t cursor;
        NodeId via;  // right vertex used to enter u, kNoNode for the root
    };

    // Layered DFS with an explicit stack; augmenting paths can be deep.
    bool try_augment(NodeId root, std::vector<Frame>& stack) {
        stack.clear();
        stack.push_back({root, 0, kNoNode});
        while (!stack.empty()) {
            Frame& top = stack.back();
            auto adj = g.out(top.u);
            bool descended = false;
            while (top.cursor < adj.size()) {
                NodeId v = adj[top.cursor++];
                NodeId w = match_r[v];
                if (w == kNoNode) {
                    // Augment along the stack.
                    NodeId carry = v;
                    for (std::size_t i = stack.size(); i-- > 0;) {
                        match_l[stack[i].u] = carry;
                        match_r[carry] = stack[i].u;
                        carry = stack[i].via;
                    }
                    return true;
                }
                if (dist[w] == dist[top.u] + 1) {
                    stack.push_back({w, 0, v});
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                dist[top.u] = kInf;
                stack.pop_back();
            }
        }
        return false;
    }

    void run() {
        std::vector<Frame> stack;
        while (bfs()) {
            for (NodeId u = 0; u < g.node_count(); ++u)
                if (match_l[u] == kNoNode && try_augment(u, stack)) ++size;
        }
    }
};

// A subgraph with per-node in/out degree <= 1 decomposes into paths (walked
// from their in-degree-0 heads) and cycles (remaining nodes, each started at
// its smallest id by the ascending scan).
PCCover decompose_functional(const std::vector<NodeId>& succ) {
    const std::size_t n = succ.size();
    std::vector<char> has_pred(n, 0);
    for (NodeId v : succ)
        if (v != kNoNode) has_pred[v] = 1;

    PCCover cover;
    std::vector<char> visited(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        if (has_pred[v] || visited[v]) continue;
        std::vector<NodeId> path;
        for (NodeId w = v; w != kNoNode && !visited[w]; w = succ[w]) {
            visited[w] = 1;
            path.push_back(w);
        }
        cover.paths.push_back(std::move(path));
    }
    for (NodeId v = 0; v < n; ++v) {
        if (visited[v]) continue;
        std::vector<NodeId> cycle;
        for (NodeId w = v; !visited[w]; w = succ[w]) {
            visited[w] = 1;
            cycle.push_back(w);
        }
        cover.cycles.push_back(std::move(cycle));
    }
    return cover;
}

}  // namespace

PCCover matching_pc_cover(const NodeGraph& g) {
    if (g.node_count() == 0) throw EmptyInput("empty graph");
    HopcroftKarp hk(g);
    hk.run();

    MatchingStats stats;
    stats.matching_size = hk.size;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        bool l = hk.match_l[v] != kNoNode;
        bool r = hk.match_r[v] != kNoNode;
        if (l && r) ++stats.lr;
        else if (l) ++stats.lx;
        else if (r) ++stats.xr;
        else ++stats.xx;
    }
    stats.open_paths = stats.lx + stats.xx;

    PCCover cover = decompose_functional(hk.match_l);
    cover.stats = stats;
    return cover;
}

PCCover greedy_pc_cover(const NodeGraph& g) {
    if (g.node_count() == 0) throw EmptyInput("empty graph");
    std::vector<NodeId> succ(g.node_count(), kNoNode);
    std::vector<char> in_used(g.node_count(), 0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.out(u)) {
            if (in_used[v]) continue;
            succ[u] = v;
            in_used[v] = 1;
            break;
        }
    }
    return decompose_functional(succ);
}

PCCover close_obvious_cycles(PCCover cover, const NodeGraph& g) {
    std::vector<std::vector<NodeId>> still_open;
    for (auto& path : cover.paths) {
        if (g.has_edge(path.back(), path.front()))
            cover.cycles.push_back(std::move(path));
        else
            still_open.push_back(std::move(path));
    }
    cover.paths = std::move(still_open);
    return cover;
}

PathClasses classify_paths(const PCCover& cover, const NodeGraph& g) {
    PathClasses classes;
    for (std::size_t i = 0; i < cover.paths.size(); ++i) {
        if (g.in_deg(cover.paths[i].front()) == 0)
            classes.primitive.push_back(i);
        else
            classes.non_primitive.push_back(i);
    }
    return classes;
}

void check_pc_cover(const PCCover& cover, const NodeGraph& g) {
    std::vector<char> seen(g.node_count(), 0);
    std::size_t total = 0;
    auto visit = [&](const std::vector<NodeId>& elem, bool cyclic) {
        if (elem.empty()) throw CoverError("empty path/cycle in cover");
        for (std::size_t i = 0; i < elem.size(); ++i) {
            NodeId v = elem[i];
            if (v >= g.node_count()) throw CoverError("node id out of range");
            if (seen[v]) throw CoverError("node " + std::to_string(v) + " appears twice");
            seen[v] = 1;
            ++total;
            if (i + 1 < elem.size() && !g.has_edge(v, elem[i + 1]))
                throw CoverError("consecutive pair is not an edge");
        }
        if (cyclic && !g.has_edge(elem.back(), elem.front()))
            throw CoverError("cycle wrap pair is not an edge");
    };
    for (const auto& p : cover.paths) visit(p, false);
    for (const auto& c : cover.cycles) visit(c, true);
    if (total != g.node_count()) throw CoverError("cover does not span all nodes");
}

std::size_t brute_min_paths(const NodeGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw EmptyInput("empty graph");
    if (n > 12) throw InvalidParameter("brute_min_paths guard: more than 12 nodes");

    // Assign each node's out-edge (or none) in turn, maximizing the number of
    // chosen edges; every assignment is a PC cover with n - |F| paths.
    std::vector<char> in_used(n, 0);
    std::size_t best_edges = 0;
    auto rec = [&](auto&& self, NodeId u, std::size_t edges) -> void {
        if (edges + (n - u) <= best_edges) return;  // cannot beat the best
        if (u == n) {
            best_edges = std::max(best_edges, edges);
            return;
        }
        for (NodeId v : g.out(u)) {
            if (in_used[v]) continue;
            in_used[v] = 1;
            self(self, u + 1, edges + 1);
            in_used[v] = 0;
        }
        self(self, u + 1, edges);
    };
    rec(rec, 0, 0);
    return n - best_edges;
}

std::string dump_cover(const PCCover& cover, const Spectrum& spec) {
    std::ostringstream out;
    auto line = [&](char tag, const std::vector<NodeId>& elem) {
        out << tag << ':';
        for (NodeId v : elem) out << ' ' << spec.text_of(v);
        out << '\n';
    };
    for (const auto& p : cover.paths) line('P', p);
    for (const auto& c : cover.cycles) line('C', c);
    return out.str();
}

}  // namespace necktig
