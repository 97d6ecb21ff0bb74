#ifndef NECKTIG_VERIFY_HPP
#define NECKTIG_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "necktig/necklace.hpp"

namespace necktig {

struct SpssReport {
    bool spectrum_equal = false;
    bool no_repetition = false;
    std::vector<std::uint64_t> missing;   // in reference, not in strings
    std::vector<std::uint64_t> extra;     // in strings, not in reference
    std::vector<std::uint64_t> repeated;  // spelled more than once
    std::size_t weight = 0;               // total characters of the strings

    bool pass() const noexcept { return spectrum_equal && no_repetition; }
};

SpssReport check_spss(const std::vector<std::string>& strings, std::uint32_t k,
                      const Spectrum& reference);

struct CoverReport {
    std::vector<std::string> failures;
    bool pass() const noexcept { return failures.empty(); }
};

// Structural validation: edges of F exist in g, node partition, per-node
// in-degree <= 1, each necklace connected, open/closed consistent with its
// in-degree profile.
CoverReport check_necklace_cover(const NecklaceCover& cover, const NodeGraph& g);

// Exhaustive oracle for the dollar-model optimum: enumerates every edge
// subset with per-node in-degree <= 1 (each component is then a necklace)
// and returns the minimum n_k + (k-1) n_o + 2 n_l + 1. Guard: <= 10 nodes.
std::size_t brute_min_necklace_cost(const NodeGraph& g, std::uint32_t k);

// Seed-controlled random instances for the oracle and property suites:
// `count` strings of length [min_len, max_len] over ACGT.
SeqSet random_sequences(std::mt19937_64& rng, std::size_t count, std::size_t min_len,
                        std::size_t max_len);

}  // namespace necktig

#endif
