#include "necktig/necklace.hpp"

#include <algorithm>
#include <unordered_map>

namespace necktig {

namespace {

struct Frame {
    std::size_t path;
    std::size_t node_pos;
    std::size_t nb_pos;
};

struct CycleHit {
    std::vector<NodeId> cycle;
    // (path index, number of head nodes lying on the cycle), stack order.
    std::vector<std::pair<std::size_t, std::size_t>> segments;
};

// Depth-first search over path-head adjacencies; an edge back to the start
// path's head closes the cycle. Visited marks are permanent within one
// invocation, out-neighbors are probed in ascending node id.
class CycleFinder {
public:
    CycleFinder(const NodeGraph& g, const std::vector<std::vector<NodeId>>& paths,
                const std::unordered_map<NodeId, std::size_t>& head_of)
        : g_(g), paths_(paths), head_of_(head_of), visited_(paths.size(), 0) {}

    std::optional<CycleHit> from(std::size_t start) {
        ++stamp_;
        const NodeId start_head = paths_[start].front();
        stack_.clear();
        stack_.push_back({start, 0, 0});
        visited_[start] = stamp_;

        while (!stack_.empty()) {
            Frame& top = stack_.back();
            const std::vector<NodeId>& path = paths_[top.path];
            if (top.node_pos >= path.size()) {
                stack_.pop_back();
                continue;
            }
            auto adj = g_.out(path[top.node_pos]);
            if (top.nb_pos >= adj.size()) {
                ++top.node_pos;
                top.nb_pos = 0;
                continue;
            }
            NodeId u = adj[top.nb_pos++];
            if (u == start_head) return close();
            auto it = head_of_.find(u);
            if (it == head_of_.end() || visited_[it->second] == stamp_) continue;
            visited_[it->second] = stamp_;
            stack_.push_back({it->second, 0, 0});
        }
        return std::nullopt;
    }

private:
    CycleHit close() const {
        CycleHit hit;
        for (const Frame& f : stack_) {
            const std::vector<NodeId>& path = paths_[f.path];
            hit.cycle.insert(hit.cycle.end(), path.begin(), path.begin() + f.node_pos + 1);
            hit.segments.emplace_back(f.path, f.node_pos + 1);
        }
        return hit;
    }

    const NodeGraph& g_;
    const std::vector<std::vector<NodeId>>& paths_;
    const std::unordered_map<NodeId, std::size_t>& head_of_;
    std::vector<std::size_t> visited_;
    std::size_t stamp_ = 0;
    std::vector<Frame> stack_;
};

class Builder {
public:
    Builder(const NodeGraph& g, const PCCover& input) : g_(g), paths_(input.paths) {
        cover_.parent.assign(g.node_count(), kNoNode);
        cover_.children.assign(g.node_count(), {});
        alive_.assign(paths_.size(), 0);
        for (std::size_t i = 0; i < paths_.size(); ++i) {
            if (g.in_deg(paths_[i].front()) == 0) {
                primitive_.push_back(i);
            } else {
                alive_[i] = 1;
                head_of_[paths_[i].front()] = i;
                ++alive_count_;
            }
        }

        for (std::size_t i : primitive_) root_open(paths_[i]);
        for (const auto& cycle : input.cycles) root_closed(cycle);

        CycleFinder finder(g_, paths_, head_of_);
        while (alive_count_ > 0) {
            std::optional<CycleHit> hit;
            for (std::size_t i = 0; i < paths_.size() && !hit; ++i)
                if (alive_[i]) hit = finder.from(i);
            if (!hit)
                throw CoverError(
                    "no cycle through the remaining paths; input was not a valid "
                    "non-closable PC cover");
            install(*hit);
        }

        finalize();
    }

    NecklaceCover take() { return std::move(cover_); }

private:
    void root_open(const std::vector<NodeId>& path) {
        for (std::size_t j = 0; j + 1 < path.size(); ++j) cover_.parent[path[j + 1]] = path[j];
        cover_.necklaces.push_back(Necklace{false, path});
        for (NodeId v : path) attach_scan(v);
    }

    void root_closed(const std::vector<NodeId>& cycle) {
        for (std::size_t j = 0; j < cycle.size(); ++j)
            cover_.parent[cycle[(j + 1) % cycle.size()]] = cycle[j];
        cover_.necklaces.push_back(Necklace{true, cycle});
        for (NodeId v : cycle) attach_scan(v);
    }

    void attach_scan(NodeId v) {
        auto adj = g_.out(v);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            auto it = head_of_.find(adj[i]);
            if (it != head_of_.end()) consume_subtree(v, it->second);
        }
    }

    // FindSubtree with an explicit work stack: attach the path's head to the
    // anchor, then walk its nodes in order, recursing into any further path
    // whose head is an out-neighbor.
    void consume_subtree(NodeId anchor, std::size_t pidx) {
        claim(anchor, pidx);
        std::vector<Frame> stack{{pidx, 0, 0}};
        while (!stack.empty()) {
            Frame& top = stack.back();
            const std::vector<NodeId>& path = paths_[top.path];
            if (top.node_pos >= path.size()) {
                stack.pop_back();
                continue;
            }
            NodeId v = path[top.node_pos];
            auto adj = g_.out(v);
            if (top.nb_pos >= adj.size()) {
                ++top.node_pos;
                top.nb_pos = 0;
                continue;
            }
            NodeId u = adj[top.nb_pos++];
            auto it = head_of_.find(u);
            if (it == head_of_.end()) continue;
            const std::size_t child = it->second;  // claim() erases the entry
            claim(v, child);
            stack.push_back({child, 0, 0});
        }
    }

    // Record the pendant edge anchor -> head plus the path's own edges.
    void claim(NodeId anchor, std::size_t pidx) {
        const std::vector<NodeId>& path = paths_[pidx];
        head_of_.erase(path.front());
        alive_[pidx] = 0;
        --alive_count_;
        cover_.parent[path.front()] = anchor;
        cover_.children[anchor].push_back(path.front());
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            cover_.parent[path[j + 1]] = path[j];
            cover_.children[path[j]].push_back(path[j + 1]);
        }
    }

    void install(const CycleHit& hit) {
        for (auto [pidx, cut] : hit.segments) {
            head_of_.erase(paths_[pidx].front());
            if (cut < paths_[pidx].size()) {
                paths_[pidx].erase(paths_[pidx].begin(), paths_[pidx].begin() + cut);
                head_of_[paths_[pidx].front()] = pidx;
            } else {
                alive_[pidx] = 0;  // fully absorbed by the cycle
                --alive_count_;
            }
        }
        root_closed(hit.cycle);
    }

    // Canonical child order, then extend each open root while its tail still
    // has pendant children; the absorbed chain is the unwrapped last child of
    // the encoding either way, and the tail is never a pendant leaf.
    void finalize() {
        for (auto& ch : cover_.children) std::sort(ch.begin(), ch.end());
        for (Necklace& necklace : cover_.necklaces) {
            if (necklace.closed) continue;
            NodeId tail = necklace.root.back();
            while (!cover_.children[tail].empty()) {
                NodeId next = cover_.children[tail].back();
                cover_.children[tail].pop_back();
                necklace.root.push_back(next);
                tail = next;
            }
        }
    }

    const NodeGraph& g_;
    std::vector<std::vector<NodeId>> paths_;
    std::vector<char> alive_;
    std::size_t alive_count_ = 0;
    std::unordered_map<NodeId, std::size_t> head_of_;
    std::vector<std::size_t> primitive_;
    NecklaceCover cover_;
};

}  // namespace

NecklaceCover necklace_cover(const NodeGraph& g, const PCCover& cover) {
    check_pc_cover(cover, g);
    for (const auto& path : cover.paths)
        if (g.has_edge(path.back(), path.front()))
            throw CoverError("cover has a closable path; apply close_obvious_cycles first");
    Builder builder(g, cover);
    return builder.take();
}

std::vector<NodeId> find_new_cycle(const std::vector<std::vector<NodeId>>& remaining,
                                   const NodeGraph& g) {
    if (remaining.empty()) throw CoverError("no remaining paths");
    std::unordered_map<NodeId, std::size_t> head_of;
    for (std::size_t i = 0; i < remaining.size(); ++i) head_of[remaining[i].front()] = i;
    CycleFinder finder(g, remaining, head_of);
    for (std::size_t i = 0; i < remaining.size(); ++i)
        if (auto hit = finder.from(i)) return std::move(hit->cycle);
    throw CoverError("no cycle through the remaining paths");
}

}  // namespace necktig
