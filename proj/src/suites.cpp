#include "necktig/suites.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include "necktig/baseline.hpp"
#include "necktig/debruijn.hpp"
#include "necktig/encoding.hpp"
#include "necktig/eulertigs.hpp"
#include "necktig/necklace.hpp"
#include "necktig/verify.hpp"

namespace necktig {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SmallInstance {
    Spectrum spec;
    NodeGraph graph;
};

// Rejection-sample a random instance whose graph has at most max_nodes nodes.
SmallInstance next_small_instance(std::mt19937_64& rng, std::uint32_t k,
                                  std::size_t max_nodes) {
    for (;;) {
        SeqSet seqs = random_sequences(rng, 1 + rng() % 2, 8, 30);
        Spectrum spec = extract_spectrum(seqs, k);
        if (spec.size() > max_nodes) continue;
        NodeGraph g = build_node_dbg(spec);
        return SmallInstance{std::move(spec), std::move(g)};
    }
}

}  // namespace

SuiteResult run_min_paths_suite(std::uint64_t seed, std::size_t instances) {
    SuiteResult result;
    result.name = "min-paths-vs-oracle";
    const auto start = Clock::now();
    std::mt19937_64 rng(seed);
    const std::uint32_t ks[3] = {3, 4, 5};
    for (std::size_t i = 0; i < instances; ++i) {
        SmallInstance inst = next_small_instance(rng, ks[i % 3], 12);
        PCCover cover = matching_pc_cover(inst.graph);
        check_pc_cover(cover, inst.graph);
        const std::size_t oracle = brute_min_paths(inst.graph);
        if (cover.paths.size() != oracle) {
            result.detail = "instance " + std::to_string(i) + ": matching gave " +
                            std::to_string(cover.paths.size()) + " paths, oracle " +
                            std::to_string(oracle);
            result.seconds = seconds_since(start);
            return result;
        }
        if (inst.graph.node_count() != cover.stats->matching_size + cover.stats->open_paths) {
            result.detail = "instance " + std::to_string(i) + ": |V| != |M'| + nu";
            result.seconds = seconds_since(start);
            return result;
        }
        ++result.instances;
    }
    result.pass = true;
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult run_min_cost_suite(std::uint64_t seed, std::size_t instances) {
    SuiteResult result;
    result.name = "min-necklace-cost-vs-oracle";
    const auto start = Clock::now();
    std::mt19937_64 rng(seed);
    const std::uint32_t ks[3] = {3, 4, 5};
    for (std::size_t i = 0; i < instances; ++i) {
        const std::uint32_t k = ks[i % 3];
        SmallInstance inst = next_small_instance(rng, k, 10);
        PCCover cover = close_obvious_cycles(matching_pc_cover(inst.graph), inst.graph);
        NecklaceCover neck = necklace_cover(inst.graph, cover);
        const std::size_t cost = cost_report(neck, k).cost_dollar;
        const std::size_t oracle = brute_min_necklace_cost(inst.graph, k);
        if (cost != oracle) {
            result.detail = "instance " + std::to_string(i) + " (k=" + std::to_string(k) +
                            "): pipeline cost " + std::to_string(cost) + ", oracle " +
                            std::to_string(oracle);
            result.seconds = seconds_since(start);
            return result;
        }
        ++result.instances;
    }
    result.pass = true;
    result.seconds = seconds_since(start);
    return result;
}

std::vector<SuiteResult> run_property_suites(std::uint64_t seed, std::size_t instances) {
    SuiteResult roundtrip;
    roundtrip.name = "encode-decode-roundtrip";
    SuiteResult dominance;
    dominance.name = "cost-dominance";
    const auto start = Clock::now();
    std::mt19937_64 rng(seed);
    const std::uint32_t ks[3] = {3, 5, 7};

    auto fail = [&](SuiteResult& r, std::size_t i, const std::string& msg) {
        if (r.detail.empty()) r.detail = "instance " + std::to_string(i) + ": " + msg;
        r.pass = false;
    };
    roundtrip.pass = dominance.pass = true;

    for (std::size_t i = 0; i < instances; ++i) {
        const std::uint32_t k = ks[i % 3];
        SeqSet seqs = random_sequences(rng, 1 + rng() % 3, 8, 60);
        Spectrum spec = extract_spectrum(seqs, k);
        NodeGraph g = build_node_dbg(spec);

        PCCover matching_cover = close_obvious_cycles(matching_pc_cover(g), g);
        const std::size_t primitive_paths = classify_paths(matching_cover, g).primitive.size();
        NecklaceCover matching_neck = necklace_cover(g, matching_cover);
        NecklaceCover greedy_neck = greedy_baseline_cover(g);
        NecklaceCover euler_neck = necklace_cover(g, eulertigs_pc_cover(spec, g));
        NecklaceCover greedy_pc_neck =
            necklace_cover(g, close_obvious_cycles(greedy_pc_cover(g), g));

        if (cost_report(matching_neck, k).n_o != primitive_paths)
            fail(roundtrip, i, "open-necklace count differs from the primitive path count");

        const NecklaceCover* covers[4] = {&matching_neck, &greedy_neck, &euler_neck,
                                          &greedy_pc_neck};
        const char* names[4] = {"matching", "greedy-baseline", "eulertigs-derived",
                                "greedy-pc"};
        for (int c = 0; c < 4; ++c) {
            CoverReport check = check_necklace_cover(*covers[c], g);
            if (!check.pass()) {
                fail(roundtrip, i, std::string(names[c]) + " cover invalid: " + check.failures[0]);
                continue;
            }
            CostReport rep = cost_report(*covers[c], k);
            if (rep.spss_weight_equivalent != rep.n_k + (k - 1) * rep.n_o)
                fail(roundtrip, i, "letter-count identity broken");
            for (Mode mode : {Mode::dollar, Mode::separator}) {
                Encoded enc = encode_cover(*covers[c], spec, mode);
                const std::size_t expect =
                    mode == Mode::dollar ? rep.cost_dollar : rep.cost_separator;
                if (enc.symbol_count() != expect) {
                    fail(roundtrip, i,
                         std::string(names[c]) + " symbol count " +
                             std::to_string(enc.symbol_count()) + " != formula " +
                             std::to_string(expect));
                }
                try {
                    Spectrum decoded = decode_cover(enc);
                    if (decoded.values() != spec.values())
                        fail(roundtrip, i, std::string(names[c]) + " decode spectrum mismatch");
                } catch (const Error& e) {
                    fail(roundtrip, i, std::string(names[c]) + " decode failed: " + e.what());
                }
            }
        }

        const std::size_t matching_cost = cost_report(matching_neck, k).cost_dollar;
        const std::size_t greedy_cost = cost_report(greedy_neck, k).cost_dollar;
        const std::size_t euler_weight = eulertigs(spec).weight;
        if (matching_cost > euler_weight + 1)
            fail(dominance, i,
                 "matching cost " + std::to_string(matching_cost) + " > eulertigs weight + 1 = " +
                     std::to_string(euler_weight + 1));
        if (matching_cost > greedy_cost)
            fail(dominance, i, "matching cost " + std::to_string(matching_cost) +
                                   " > greedy baseline " + std::to_string(greedy_cost));
        ++roundtrip.instances;
        ++dominance.instances;
    }
    roundtrip.seconds = dominance.seconds = seconds_since(start);
    return {roundtrip, dominance};
}

SeqSet make_synthetic_reads(std::uint64_t seed, std::size_t target_bases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> base_dist(0, 3);

    // Genome at ~1/5 of the target (reads below give ~5x coverage), with a
    // repeated segment planted every 50 kb so the graph branches.
    const std::size_t genome_size = std::max<std::size_t>(target_bases / 5, 10000);
    std::string genome;
    genome.reserve(genome_size);
    while (genome.size() < genome_size) {
        if (!genome.empty() && genome.size() % 50000 < 2000 && genome.size() > 20000) {
            std::uniform_int_distribution<std::size_t> pos_dist(0, genome.size() - 3000);
            genome += genome.substr(pos_dist(rng), 2000);
        } else {
            genome.push_back(kBases[base_dist(rng)]);
        }
    }

    const std::size_t read_len = 150;
    const std::size_t step = 30;
    SeqSet reads;
    for (std::size_t p = 0; p + read_len <= genome.size(); p += step)
        reads.push_back(SeqRecord{"read" + std::to_string(p), genome.substr(p, read_len)});
    return reads;
}

SuiteResult run_large_harness(const SeqSet& reads, const std::vector<std::uint32_t>& ks,
                              bool verbose) {
    SuiteResult result;
    result.name = "large-ordering";
    const auto start = Clock::now();
    result.pass = true;
    if (verbose)
        std::printf("%4s %12s %14s %14s\n", "k", "n_k", "necklace", "eulertigs");
    for (std::uint32_t k : ks) {
        Spectrum spec = extract_spectrum(reads, k);
        NodeGraph g = build_node_dbg(spec);
        NecklaceCover neck = necklace_cover(g, close_obvious_cycles(matching_pc_cover(g), g));
        CostReport rep = cost_report(neck, k);
        const std::size_t neck_symbols = rep.n_k + (k - 1) * rep.n_o + 2 * rep.n_l;
        const std::size_t euler_symbols = eulertigs(spec).weight;
        if (verbose)
            std::printf("%4u %12zu %14zu %14zu\n", k, spec.size(), neck_symbols, euler_symbols);
        if (neck_symbols >= euler_symbols && k >= 13) {
            result.pass = false;
            if (result.detail.empty())
                result.detail = "k=" + std::to_string(k) + ": " + std::to_string(neck_symbols) +
                                " !< " + std::to_string(euler_symbols);
        }
        ++result.instances;
    }
    result.seconds = seconds_since(start);
    return result;
}

}  // namespace necktig
