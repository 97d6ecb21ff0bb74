#include "doctest.h"
#include "fixtures.hpp"
#include "necktig/encoding.hpp"
#include "necktig/necklace.hpp"
#include "necktig/verify.hpp"

using namespace necktig;

namespace {

Spectrum spec_of(const std::vector<std::string>& kmers) {
    std::vector<std::uint64_t> values;
    for (const auto& s : kmers) values.push_back(pack_kmer(s).value);
    return Spectrum::from_values(3, std::move(values));
}

}  // namespace

TEST_CASE("two feeding paths collapse into one closed necklace with two leaves") {
    Spectrum spec = spec_of({"ATC", "TCA", "CAC", "CAA", "AAT", "ATA"});
    NodeGraph g = build_node_dbg(spec);
    PCCover cover;
    cover.paths.push_back(fixtures::nids(spec, {"ATC", "TCA", "CAC"}));
    cover.paths.push_back(fixtures::nids(spec, {"CAA", "AAT", "ATA"}));

    NecklaceCover neck = necklace_cover(g, cover);
    CHECK(check_necklace_cover(neck, g).pass());
    REQUIRE(neck.necklaces.size() == 1);
    CHECK(neck.necklaces[0].closed);
    CHECK(neck.necklaces[0].root == fixtures::nids(spec, {"ATC", "TCA", "CAA", "AAT"}));
    CHECK(neck.children[fixtures::nid(spec, "TCA")] ==
          std::vector<NodeId>{fixtures::nid(spec, "CAC")});
    CHECK(neck.children[fixtures::nid(spec, "AAT")] ==
          std::vector<NodeId>{fixtures::nid(spec, "ATA")});
    CostReport rep = cost_report(neck, 3);
    CHECK(rep.n_o == 0);
    CHECK(rep.n_c == 1);
    CHECK(rep.n_l == 2);
    CHECK(rep.cost_dollar == 11);
}

TEST_CASE("find_new_cycle returns the cycle through both remaining paths") {
    Spectrum spec = spec_of({"ATC", "TCA", "CAC", "CAA", "AAT", "ATA"});
    NodeGraph g = build_node_dbg(spec);
    std::vector<std::vector<NodeId>> remaining{
        fixtures::nids(spec, {"ATC", "TCA", "CAC"}),
        fixtures::nids(spec, {"CAA", "AAT", "ATA"})};
    CHECK(find_new_cycle(remaining, g) == fixtures::nids(spec, {"ATC", "TCA", "CAA", "AAT"}));
}

TEST_CASE("find_new_cycle: cycle inside a single path's prefix") {
    // Interior node CAC feeds the head ACA; the tail ACT survives as pendant.
    Spectrum spec = spec_of({"ACA", "CAC", "ACT"});
    NodeGraph g = build_node_dbg(spec);
    std::vector<std::vector<NodeId>> remaining{fixtures::nids(spec, {"ACA", "CAC", "ACT"})};
    CHECK(find_new_cycle(remaining, g) == fixtures::nids(spec, {"ACA", "CAC"}));

    PCCover cover;
    cover.paths = remaining;
    NecklaceCover neck = necklace_cover(g, cover);
    CHECK(check_necklace_cover(neck, g).pass());
    REQUIRE(neck.necklaces.size() == 1);
    CHECK(neck.necklaces[0].closed);
    CHECK(cost_report(neck, 3).n_l == 1);
    CHECK(cost_report(neck, 3).cost_dollar == 3 + 0 + 2 + 1);
}

TEST_CASE("find_new_cycle: three mutually feeding paths") {
    // The 3-mers of the circular string ACGTTG split into three 2-node paths;
    // the only cycle crosses all of them.
    Spectrum spec = spec_of({"ACG", "CGT", "GTT", "TTG", "TGA", "GAC"});
    NodeGraph g = build_node_dbg(spec);
    std::vector<std::vector<NodeId>> remaining{
        fixtures::nids(spec, {"ACG", "CGT"}),
        fixtures::nids(spec, {"GTT", "TTG"}),
        fixtures::nids(spec, {"TGA", "GAC"})};
    std::vector<NodeId> cycle = find_new_cycle(remaining, g);
    REQUIRE(cycle.size() == 6);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        CHECK(g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
        bool on_path = false;
        for (const auto& p : remaining)
            for (NodeId v : p) on_path = on_path || v == cycle[i];
        CHECK(on_path);
    }

    PCCover cover;
    cover.paths = remaining;
    NecklaceCover neck = necklace_cover(g, cover);
    CHECK(check_necklace_cover(neck, g).pass());
    REQUIRE(neck.necklaces.size() == 1);
    CHECK(neck.necklaces[0].closed);
    CHECK(cost_report(neck, 3).cost_dollar == 6 + 0 + 0 + 1);
}

TEST_CASE("single primitive path becomes one pendant-free open necklace") {
    Spectrum spec = spec_of({"ACG", "CGT"});
    NodeGraph g = build_node_dbg(spec);
    PCCover cover;
    cover.paths.push_back(fixtures::nids(spec, {"ACG", "CGT"}));
    NecklaceCover neck = necklace_cover(g, cover);
    REQUIRE(neck.necklaces.size() == 1);
    CHECK(!neck.necklaces[0].closed);
    CHECK(cost_report(neck, 3).n_l == 0);
    CHECK(cost_report(neck, 3).n_o == 1);
}

TEST_CASE("cycle plus one attachable path gives a single closed necklace, one leaf") {
    Spectrum spec = spec_of({"ACG", "CGA", "GAC", "CGT"});
    NodeGraph g = build_node_dbg(spec);
    PCCover cover;
    cover.cycles.push_back(fixtures::nids(spec, {"ACG", "CGA", "GAC"}));
    cover.paths.push_back(fixtures::nids(spec, {"CGT"}));
    NecklaceCover neck = necklace_cover(g, cover);
    CHECK(check_necklace_cover(neck, g).pass());
    REQUIRE(neck.necklaces.size() == 1);
    CHECK(neck.necklaces[0].closed);
    CHECK(cost_report(neck, 3).n_l == 1);
}

TEST_CASE("open-necklace N_O equals the primitive path count of the input") {
    Spectrum spec = extract_spectrum(parse_fasta(fixtures::kSample21Fasta), 3);
    NodeGraph g = build_node_dbg(spec);
    PCCover cover = close_obvious_cycles(matching_pc_cover(g), g);
    const std::size_t primitive = classify_paths(cover, g).primitive.size();
    NecklaceCover neck = necklace_cover(g, cover);
    CHECK(check_necklace_cover(neck, g).pass());
    CHECK(cost_report(neck, 3).n_o == primitive);
}

TEST_CASE("self-loop: 1-cycle root with a pendant, encoded and decoded exactly") {
    Spectrum spec = spec_of({"AAA", "AAC"});
    NodeGraph g = build_node_dbg(spec);
    PCCover cover = close_obvious_cycles(matching_pc_cover(g), g);
    NecklaceCover neck = necklace_cover(g, cover);
    CHECK(check_necklace_cover(neck, g).pass());
    REQUIRE(neck.necklaces.size() == 1);
    CHECK(neck.necklaces[0].closed);
    CHECK(neck.necklaces[0].root == std::vector<NodeId>{fixtures::nid(spec, "AAA")});

    Encoded enc = encode_cover(neck, spec, Mode::dollar);
    REQUIRE(enc.records.size() == 1);
    CHECK(enc.records[0] == "A(C)");
    CHECK(enc.symbol_count() == cost_report(neck, 3).cost_dollar);
    CHECK(decode_cover(enc).values() == spec.values());
}

TEST_CASE("precondition errors: closable path and broken partition") {
    Spectrum spec = spec_of({"ACG", "CGA", "GAC"});
    NodeGraph g = build_node_dbg(spec);
    PCCover closable;
    closable.paths.push_back(fixtures::nids(spec, {"ACG", "CGA", "GAC"}));
    CHECK_THROWS_AS(necklace_cover(g, closable), CoverError);

    PCCover partial;
    partial.paths.push_back(fixtures::nids(spec, {"ACG", "CGA"}));
    CHECK_THROWS_AS(necklace_cover(g, partial), CoverError);
}

TEST_CASE("open root is extended while its tail has pendant children") {
    // Primitive path [GGT, GTA]; path [TAC, ACT] attaches at the tail GTA and
    // must be absorbed into the root, keeping the pair/leaf identity.
    Spectrum spec = spec_of({"GGT", "GTA", "TAC", "ACT", "TAA"});
    NodeGraph g = build_node_dbg(spec);
    PCCover cover;
    cover.paths.push_back(fixtures::nids(spec, {"GGT", "GTA"}));
    cover.paths.push_back(fixtures::nids(spec, {"TAC", "ACT"}));
    cover.paths.push_back(fixtures::nids(spec, {"TAA"}));
    NecklaceCover neck = necklace_cover(g, cover);
    CHECK(check_necklace_cover(neck, g).pass());
    REQUIRE(neck.necklaces.size() == 1);
    const Necklace& n = neck.necklaces[0];
    CHECK(!n.closed);
    CHECK(neck.children[n.root.back()].empty());
    CostReport rep = cost_report(neck, 3);
    Encoded enc = encode_cover(neck, spec, Mode::dollar);
    std::size_t pairs = 0;
    for (char c : enc.records[0]) pairs += c == '(';
    CHECK(pairs == rep.n_l);
    CHECK(enc.symbol_count() == rep.cost_dollar);
}
