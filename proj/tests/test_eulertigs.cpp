#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "necktig/eulertigs.hpp"
#include "necktig/verify.hpp"

using namespace necktig;

TEST_CASE("eulertigs: worked example has 5 strings, b=5, weight 31") {
    Spectrum spec = extract_spectrum(parse_fasta(fixtures::kSample21Fasta), 3);
    EulertigsResult res = eulertigs(spec);
    CHECK(res.strings.size() == 5);
    CHECK(res.breaking_edges == 5);
    CHECK(res.weight == 31);
    CHECK(res.weight == spec.size() + 2 * res.strings.size());
    CHECK(check_spss(res.strings, 3, spec).pass());
}

TEST_CASE("eulertigs: single k-mer") {
    Spectrum spec = extract_spectrum({{"r", "ACG"}}, 3);
    EulertigsResult res = eulertigs(spec);
    REQUIRE(res.strings.size() == 1);
    CHECK(res.strings[0] == "ACG");
    CHECK(res.weight == 3);
}

TEST_CASE("eulertigs: balanced cyclic component spells one linear string") {
    Spectrum spec = extract_spectrum({{"r", "ACGAC"}}, 3);  // cycle ACG CGA GAC
    EulertigsResult res = eulertigs(spec);
    REQUIRE(res.strings.size() == 1);
    CHECK(res.breaking_edges == 0);
    CHECK(res.strings[0].size() == spec.size() + 3 - 1);
    CHECK(check_spss(res.strings, 3, spec).pass());
}

TEST_CASE("eulertigs: weight identity and exactness on random inputs") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        const std::uint32_t k = 3 + iter % 5;
        Spectrum spec = extract_spectrum(random_sequences(rng, 1 + iter % 3, 8, 60), k);
        EulertigsResult res = eulertigs(spec);
        CHECK(res.weight == spec.size() + (k - 1) * res.strings.size());
        SpssReport rep = check_spss(res.strings, k, spec);
        CHECK(rep.pass());
        CHECK(rep.weight == res.weight);
    }
}

TEST_CASE("eulertigs-derived PC cover is valid and closes wrapped strings") {
    Spectrum spec = extract_spectrum({{"r", "ACGAC"}}, 3);
    NodeGraph g = build_node_dbg(spec);
    PCCover cover = eulertigs_pc_cover(spec, g);
    check_pc_cover(cover, g);
    CHECK(cover.cycles.size() == 1);
    CHECK(cover.paths.empty());

    Spectrum sample = extract_spectrum(parse_fasta(fixtures::kSample21Fasta), 3);
    NodeGraph gs = build_node_dbg(sample);
    PCCover cs = eulertigs_pc_cover(sample, gs);
    check_pc_cover(cs, gs);
}
