#ifndef NECKTIG_SUITES_HPP
#define NECKTIG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "necktig/kmer.hpp"

namespace necktig {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::size_t instances = 0;
    std::string detail;
    double seconds = 0.0;
};

// Matching cover path count == exhaustive minimum, and |V| = |M'| + nu, over
// seeded random instances with at most 12 nodes.
SuiteResult run_min_paths_suite(std::uint64_t seed, std::size_t instances);

// Dollar-model cost of the matching-fed necklace cover == exhaustive minimum
// over seeded random instances with at most 10 nodes, k in {3,4,5}.
SuiteResult run_min_cost_suite(std::uint64_t seed, std::size_t instances);

// Round-trip + cost-identity + dominance properties over seeded random
// inputs (k in {3,5,7}, all three builders, both modes). Returns the
// round-trip result followed by the dominance result.
std::vector<SuiteResult> run_property_suites(std::uint64_t seed, std::size_t instances);

// Deterministic synthetic read set with planted repeats, roughly
// target_bases total.
SeqSet make_synthetic_reads(std::uint64_t seed, std::size_t target_bases);

// Qualitative large-run comparison: matching-pipeline output symbols
// (letters + parentheses) strictly below the Eulertigs weight for every
// k in ks. Prints one table row per k to stdout when verbose.
SuiteResult run_large_harness(const SeqSet& reads, const std::vector<std::uint32_t>& ks,
                              bool verbose);

}  // namespace necktig

#endif
