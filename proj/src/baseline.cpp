#include "necktig/baseline.hpp"

#include <algorithm>

namespace necktig {

NecklaceCover greedy_baseline_cover(const NodeGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw EmptyInput("empty graph");

    NecklaceCover cover;
    cover.parent.assign(n, kNoNode);
    cover.children.assign(n, {});
    std::vector<char> visited(n, 0);

    struct Frame {
        NodeId node;
        std::size_t nb_pos;
    };
    std::vector<Frame> stack;

    for (NodeId s = 0; s < n; ++s) {
        if (visited[s]) continue;
        visited[s] = 1;
        stack.clear();
        stack.push_back({s, 0});
        // first_child[v] marks the spine continuation claimed at v.
        while (!stack.empty()) {
            Frame& top = stack.back();
            auto adj = g.out(top.node);
            if (top.nb_pos >= adj.size()) {
                stack.pop_back();
                continue;
            }
            NodeId v = adj[top.nb_pos++];
            if (visited[v]) continue;
            visited[v] = 1;
            cover.parent[v] = top.node;
            cover.children[top.node].push_back(v);
            stack.push_back({v, 0});
        }

        // Spine: chain of first-claimed children down to the first dead end.
        Necklace necklace;
        necklace.root.push_back(s);
        while (!cover.children[necklace.root.back()].empty()) {
            NodeId next = cover.children[necklace.root.back()].front();
            cover.children[necklace.root.back()].erase(cover.children[necklace.root.back()].begin());
            necklace.root.push_back(next);
        }
        if (g.has_edge(necklace.root.back(), s)) {
            necklace.closed = true;
            cover.parent[s] = necklace.root.back();
        }
        cover.necklaces.push_back(std::move(necklace));
    }

    for (auto& ch : cover.children) std::sort(ch.begin(), ch.end());
    return cover;
}

}  // namespace necktig
