#include <random>

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

TEST_CASE("check_spss: minimum SPSS of the worked sample passes with weight 31") {
    Spectrum spec = extract_spectrum(parse_fasta(fixtures::kSample21Fasta), 3);
    SpssReport rep = check_spss(fixtures::sample21_spss(), 3, spec);
    CHECK(rep.pass());
    CHECK(rep.weight == 31);
}

TEST_CASE("check_spss: extra k-mers and repetitions are reported") {
    Spectrum spec = extract_spectrum(parse_fasta(fixtures::kSample21Fasta), 3);
    std::vector<std::string> with_extra = fixtures::sample21_spss();
    with_extra.push_back("TTT");
    SpssReport rep = check_spss(with_extra, 3, spec);
    CHECK(!rep.spectrum_equal);
    CHECK(rep.extra.size() == 1);

    std::vector<std::string> with_dup = fixtures::sample21_spss();
    with_dup.push_back(with_dup.front());
    SpssReport rep2 = check_spss(with_dup, 3, spec);
    CHECK(!rep2.no_repetition);
    CHECK(rep2.spectrum_equal);

    std::vector<std::string> missing = fixtures::sample21_spss();
    missing.pop_back();
    CHECK(!check_spss(missing, 3, spec).spectrum_equal);
}

TEST_CASE("check_necklace_cover flags duplicated nodes and double in-degree") {
    Spectrum spec = extract_spectrum(parse_fasta(fixtures::kSample21Fasta), 3);
    NodeGraph g = build_node_dbg(spec);
    NecklaceCover good = fixtures::sample21_cover(spec);
    CHECK(check_necklace_cover(good, g).pass());

    NecklaceCover dup = fixtures::sample21_cover(spec);
    dup.children[fixtures::nid(spec, "GCT")].push_back(fixtures::nid(spec, "CAT"));
    CHECK(!check_necklace_cover(dup, g).pass());

    NecklaceCover missing = fixtures::sample21_cover(spec);
    missing.children[fixtures::nid(spec, "TGG")].clear();  // GGG no longer covered
    CHECK(!check_necklace_cover(missing, g).pass());

    NecklaceCover bad_edge = fixtures::sample21_cover(spec);
    bad_edge.children[fixtures::nid(spec, "CAA")].push_back(fixtures::nid(spec, "GGG"));
    bad_edge.children[fixtures::nid(spec, "TGG")].clear();
    CHECK(!check_necklace_cover(bad_edge, g).pass());
}

TEST_CASE("brute_min_necklace_cost: chain, cycle, worked pair of paths") {
    CHECK(brute_min_necklace_cost(build_node_dbg(spec_of({"ACG", "CGT", "GTT"})), 3) ==
          3 + 2 + 0 + 1);
    CHECK(brute_min_necklace_cost(build_node_dbg(spec_of({"ACG", "CGA", "GAC"})), 3) ==
          3 + 0 + 0 + 1);
    CHECK(brute_min_necklace_cost(
              build_node_dbg(spec_of({"ATC", "TCA", "CAC", "CAA", "AAT", "ATA"})), 3) ==
          6 + 0 + 2 * 2 + 1);
}

TEST_CASE("brute_min_necklace_cost guard") {
    std::mt19937_64 rng(5);
    Spectrum big = extract_spectrum(random_sequences(rng, 4, 30, 40), 3);
    REQUIRE(big.size() > 10);
    CHECK_THROWS_AS(brute_min_necklace_cost(build_node_dbg(big), 3), InvalidParameter);
}

TEST_CASE("dense two-letter instances: optimum holds with self-loops and 2-cycles") {
    // Strings over {A,C} produce near-complete graphs (for k=3 all eight
    // nodes, self-loops AAA/CCC, heavy branching).
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::size_t> len(12, 40);
    int done = 0;
    while (done < 40) {
        std::string s(len(rng), 'A');
        for (char& c : s) c = coin(rng) ? 'C' : 'A';
        const std::uint32_t k = 3 + done % 2;
        Spectrum spec = extract_spectrum({{"r", s}}, k);
        if (spec.size() > 10) continue;
        NodeGraph g = build_node_dbg(spec);
        PCCover cover = matching_pc_cover(g);
        CHECK(cover.paths.size() == brute_min_paths(g));
        NecklaceCover neck = necklace_cover(g, close_obvious_cycles(std::move(cover), g));
        CHECK(check_necklace_cover(neck, g).pass());
        CHECK(cost_report(neck, k).cost_dollar == brute_min_necklace_cost(g, k));
        for (Mode mode : {Mode::dollar, Mode::separator}) {
            Encoded enc = encode_cover(neck, spec, mode);
            CHECK(decode_cover(enc).values() == spec.values());
        }
        ++done;
    }
}

TEST_CASE("matching-fed pipeline reaches the brute-force optimum on random instances") {
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 25) {
        const std::uint32_t k = 3 + done % 3;
        Spectrum spec = extract_spectrum(random_sequences(rng, 1, 8, 22), k);
        if (spec.size() > 10) continue;
        NodeGraph g = build_node_dbg(spec);
        NecklaceCover neck = necklace_cover(g, close_obvious_cycles(matching_pc_cover(g), g));
        CHECK(check_necklace_cover(neck, g).pass());
        CHECK(cost_report(neck, k).cost_dollar == brute_min_necklace_cost(g, k));
        ++done;
    }
}
