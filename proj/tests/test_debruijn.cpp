#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "necktig/debruijn.hpp"
#include "necktig/verify.hpp"

using namespace necktig;

namespace {

// O(n^2) all-pairs overlap oracle.
std::size_t brute_edge_count(const Spectrum& spec) {
    std::size_t edges = 0;
    for (NodeId u = 0; u < spec.size(); ++u) {
        const std::string su = spec.text_of(u);
        for (NodeId v = 0; v < spec.size(); ++v) {
            const std::string sv = spec.text_of(v);
            if (su.substr(1) == sv.substr(0, sv.size() - 1)) ++edges;
        }
    }
    return edges;
}

}  // namespace

TEST_CASE("node graph: self-loop and forced overlap") {
    Spectrum loop = extract_spectrum({{"r", "AAAA"}}, 3);
    NodeGraph g = build_node_dbg(loop);
    REQUIRE(g.node_count() == 1);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.has_edge(0, 0));

    Spectrum chain = extract_spectrum({{"r", "ACGT"}}, 3);
    NodeGraph g2 = build_node_dbg(chain);
    REQUIRE(g2.node_count() == 2);
    CHECK(g2.has_edge(fixtures::nid(chain, "ACG"), fixtures::nid(chain, "CGT")));
    CHECK(g2.edge_count() == 1);
}

TEST_CASE("node graph: worked sample edges match the all-pairs oracle") {
    Spectrum spec = extract_spectrum(parse_fasta(fixtures::kSample21Fasta), 3);
    NodeGraph g = build_node_dbg(spec);
    CHECK(g.node_count() == 21);
    CHECK(g.edge_count() == brute_edge_count(spec));
}

TEST_CASE("node graph: adjacency sorted, degree sums match, inverse adjacency agrees") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        Spectrum spec = extract_spectrum(random_sequences(rng, 2, 8, 40), 3 + iter % 3);
        NodeGraph g = build_node_dbg(spec);
        CHECK(g.edge_count() == brute_edge_count(spec));
        std::size_t in_sum = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            in_sum += g.in_deg(v);
            auto adj = g.out(v);
            CHECK(std::is_sorted(adj.begin(), adj.end()));
        }
        CHECK(in_sum == g.edge_count());
        std::size_t in_adj_sum = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            auto preds = g.in(v);
            CHECK(preds.size() == g.in_deg(v));
            for (NodeId u : preds) CHECK(g.has_edge(u, v));
            in_adj_sum += preds.size();
        }
        CHECK(in_adj_sum == g.edge_count());
    }
}

TEST_CASE("edge graph: one edge per k-mer, nodes are the distinct (k-1)-mers") {
    Spectrum spec = extract_spectrum(parse_fasta(fixtures::kSample21Fasta), 3);
    EdgeGraph eg = build_edge_dbg(spec);
    CHECK(eg.edges.size() == 21);

    std::set<std::string> expect;
    for (NodeId i = 0; i < spec.size(); ++i) {
        expect.insert(spec.text_of(i).substr(0, 2));
        expect.insert(spec.text_of(i).substr(1));
    }
    CHECK(eg.node_count() == expect.size());

    Spectrum single = extract_spectrum({{"r", "ACG"}}, 3);
    EdgeGraph eg1 = build_edge_dbg(single);
    REQUIRE(eg1.node_count() == 2);
    REQUIRE(eg1.edges.size() == 1);
    CHECK(eg1.node_text(eg1.edges[0].from) == "AC");
    CHECK(eg1.node_text(eg1.edges[0].to) == "CG");
    CHECK(base_char(eg1.edges[0].label) == 'G');
}

TEST_CASE("path/trail duality: a node path spells the same string as its edge trail") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        const std::uint32_t k = 3 + iter % 3;
        SeqSet seqs = random_sequences(rng, 1, 10, 30);
        Spectrum spec = extract_spectrum(seqs, k);
        NodeGraph g = build_node_dbg(spec);
        EdgeGraph eg = build_edge_dbg(spec);

        // Walk a path in the node graph by always taking the smallest
        // successor not yet used, then spell both sides.
        std::vector<NodeId> path{0};
        std::set<NodeId> used{0};
        while (true) {
            auto adj = g.out(path.back());
            NodeId next = kNoNode;
            for (NodeId v : adj)
                if (!used.count(v)) {
                    next = v;
                    break;
                }
            if (next == kNoNode) break;
            used.insert(next);
            path.push_back(next);
        }
        std::string node_spelling = spec.text_of(path[0]);
        for (std::size_t i = 1; i < path.size(); ++i)
            node_spelling.push_back(base_char(spec.value_of(path[i]) & 3));
        CHECK(node_spelling.size() == path.size() + k - 1);

        // Corresponding trail in the edge-centric graph: edge i is the k-mer
        // of path node i; consecutive edges must share their endpoint.
        std::string trail_spelling = eg.node_text(eg.edges[path[0]].from);
        for (std::size_t i = 0; i < path.size(); ++i) {
            const auto& e = eg.edges[path[i]];
            trail_spelling.push_back(base_char(e.label));
            if (i + 1 < path.size()) CHECK(e.to == eg.edges[path[i + 1]].from);
        }
        CHECK(trail_spelling == node_spelling);
    }
}
