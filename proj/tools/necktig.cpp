#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "necktig/baseline.hpp"
#include "necktig/debruijn.hpp"
#include "necktig/encoding.hpp"
#include "necktig/eulertigs.hpp"
#include "necktig/family.hpp"
#include "necktig/necklace.hpp"
#include "necktig/suites.hpp"
#include "necktig/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

necktig::SeqSet read_fasta_input(const std::string& path) {
    if (path == "-") return necktig::parse_fasta(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw necktig::IoError("cannot open: " + path);
    return necktig::parse_fasta(in);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw necktig::IoError("cannot open for writing: " + path);
    out << text;
    if (!out) throw necktig::IoError("write failed: " + path);
}

necktig::PCCover make_cover(const std::string& source, const necktig::Spectrum& spec,
                            const necktig::NodeGraph& g) {
    if (source == "matching")
        return necktig::close_obvious_cycles(necktig::matching_pc_cover(g), g);
    if (source == "greedy")
        return necktig::close_obvious_cycles(necktig::greedy_pc_cover(g), g);
    return necktig::eulertigs_pc_cover(spec, g);
}

struct BuildOptions {
    std::uint32_t k = 0;
    std::string input;
    std::string output;
    std::string pc_source = "matching";
    std::string mode = "dollar";
    std::string dump_graph;
    std::string dump_cover_path;
};

int run_necklace_build(const BuildOptions& opt, bool use_greedy_baseline) {
    const auto start = Clock::now();
    necktig::SeqSet seqs = read_fasta_input(opt.input);
    necktig::Spectrum spec = necktig::extract_spectrum(seqs, opt.k);
    necktig::NodeGraph graph = necktig::build_node_dbg(spec);
    if (!opt.dump_graph.empty()) write_text_file(opt.dump_graph, dump_node_graph(graph, spec));

    necktig::NecklaceCover cover;
    if (use_greedy_baseline) {
        cover = necktig::greedy_baseline_cover(graph);
    } else {
        necktig::PCCover pc = make_cover(opt.pc_source, spec, graph);
        if (!opt.dump_cover_path.empty())
            write_text_file(opt.dump_cover_path, dump_cover(pc, spec));
        cover = necktig::necklace_cover(graph, pc);
    }

    const necktig::Mode mode =
        opt.mode == "separator" ? necktig::Mode::separator : necktig::Mode::dollar;
    necktig::Encoded enc = necktig::encode_cover(cover, spec, mode);
    necktig::CostReport rep = necktig::cost_report(cover, opt.k);
    const std::size_t expected =
        mode == necktig::Mode::dollar ? rep.cost_dollar : rep.cost_separator;
    if (enc.symbol_count() != expected)
        throw necktig::Error("internal: payload symbols disagree with the cost formula");
    if (!opt.output.empty()) necktig::write_encoded_file(opt.output, enc);

    json out{{"n_k", rep.n_k},
             {"n_o", rep.n_o},
             {"n_c", rep.n_c},
             {"n_l", rep.n_l},
             {"cost_dollar", rep.cost_dollar},
             {"cost_separator", rep.cost_separator},
             {"symbols_written", enc.symbol_count()},
             {"wall_seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int run_eulertigs(std::uint32_t k, const std::string& input, const std::string& output) {
    necktig::SeqSet seqs = read_fasta_input(input);
    necktig::Spectrum spec = necktig::extract_spectrum(seqs, k);
    necktig::EulertigsResult res = necktig::eulertigs(spec);
    if (!output.empty()) {
        std::string text;
        for (std::size_t i = 0; i < res.strings.size(); ++i)
            text += ">e" + std::to_string(i) + "\n" + res.strings[i] + "\n";
        write_text_file(output, text);
    }
    json out{{"n_k", spec.size()},
             {"b", res.breaking_edges},
             {"strings", res.strings.size()},
             {"weight", res.weight}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int run_decode(const std::string& input, const std::string& check_against,
               const std::string& output) {
    necktig::Encoded enc = necktig::read_encoded_file(input);
    necktig::Spectrum decoded = necktig::decode_cover(enc);
    if (!output.empty()) {
        std::string text;
        for (necktig::NodeId i = 0; i < decoded.size(); ++i)
            text += ">k" + std::to_string(i) + "\n" + decoded.text_of(i) + "\n";
        write_text_file(output, text);
    }
    json out{{"k", decoded.k()}, {"n_k", decoded.size()}};
    if (!check_against.empty()) {
        necktig::SeqSet seqs = read_fasta_input(check_against);
        necktig::Spectrum ref = necktig::extract_spectrum(seqs, decoded.k());
        std::vector<std::string> kmers;
        kmers.reserve(decoded.size());
        for (necktig::NodeId i = 0; i < decoded.size(); ++i) kmers.push_back(decoded.text_of(i));
        necktig::SpssReport rep = necktig::check_spss(kmers, decoded.k(), ref);
        out["spectrum_equal"] = rep.spectrum_equal;
        out["no_repetition"] = rep.no_repetition;
        out["missing"] = rep.missing.size();
        out["extra"] = rep.extra.size();
        std::cout << out.dump() << '\n';
        return rep.pass() ? kExitOk : kExitCheckFailure;
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int run_stats(const std::string& input) {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw necktig::IoError("cannot open: " + input);
    std::string first;
    if (!std::getline(in, first)) throw necktig::IoError("empty file: " + input);
    in.seekg(0);

    std::size_t letters = 0, parens = 0, bars = 0, dollars = 0;
    json out;
    if (first.rfind("#necktig", 0) == 0) {
        necktig::Encoded enc = necktig::read_encoded(in);
        for (const std::string& rec : enc.records)
            for (char c : rec) {
                if (c == '(' || c == ')') ++parens;
                else ++letters;
            }
        if (enc.mode == necktig::Mode::dollar) {
            dollars = 1;
        } else {
            bars = enc.separator_payload().size() - letters - parens;
        }
        out["format"] = "necktig";
        out["k"] = enc.k;
        out["mode"] = enc.mode == necktig::Mode::dollar ? "dollar" : "separator";
    } else {
        // FASTA: count bases only, never headers or newlines.
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] == '>') continue;
            for (char c : line)
                if (necktig::base_code(c) >= 0) ++letters;
        }
        out["format"] = "fasta";
    }
    out["letters"] = letters;
    out["parens"] = parens;
    out["bars"] = bars;
    out["dollars"] = dollars;
    out["symbols"] = letters + parens;  // size metric over Sigma + {(,)}
    out["total_payload"] = letters + parens + bars + dollars;
    std::cout << out.dump() << '\n';
    return kExitOk;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("NECKTIG_SEED")) return std::strtoull(env, nullptr, 10);
    return 20250810;
}

int run_verify(std::uint64_t seed, std::size_t t1, std::size_t t2, std::size_t rt, bool large,
               const std::string& large_input, std::size_t scale_mb) {
    std::vector<necktig::SuiteResult> results;
    if (large) {
        necktig::SeqSet reads = large_input.empty()
                                    ? necktig::make_synthetic_reads(seed, scale_mb * 1000000)
                                    : read_fasta_input(large_input);
        std::vector<std::uint32_t> ks;
        for (std::uint32_t k = 13; k <= 31; k += 2) ks.push_back(k);
        results.push_back(necktig::run_large_harness(reads, ks, true));
    } else {
        results.push_back(necktig::run_min_paths_suite(seed, t1));
        results.push_back(necktig::run_min_cost_suite(seed + 1, t2));
        for (auto& r : necktig::run_property_suites(seed + 2, rt)) results.push_back(std::move(r));
    }
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%-28s %s  (%zu instances, %.2fs)%s%s\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.instances, r.seconds,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Necklace-cover representations of k-mer sets"};
    app.require_subcommand(1);

    BuildOptions build_opt;
    auto* build = app.add_subcommand("build", "Full pipeline: spectrum -> graph -> PC cover -> "
                                              "necklace cover -> parenthesis encoding");
    build->add_option("-k,--kmer", build_opt.k, "k-mer length")->required()->check(CLI::Range(2u, 31u));
    build->add_option("-i,--input", build_opt.input, "FASTA input ('-' for stdin)")->required();
    build->add_option("-o,--output", build_opt.output, "output representation file");
    build->add_option("--pc-source", build_opt.pc_source, "PC cover source")
        ->check(CLI::IsMember({"matching", "greedy", "eulertigs"}))
        ->capture_default_str();
    build->add_option("--mode", build_opt.mode, "representation mode")
        ->check(CLI::IsMember({"dollar", "separator"}))
        ->capture_default_str();
    build->add_option("--dump-graph", build_opt.dump_graph, "write 'u_kmer v_kmer' edge lines");
    build->add_option("--dump-cover", build_opt.dump_cover_path, "write the PC cover as P:/C: lines");

    BuildOptions base_opt;
    auto* baseline = app.add_subcommand("baseline", "Greedy DFS necklace baseline");
    baseline->add_option("-k,--kmer", base_opt.k, "k-mer length")->required()->check(CLI::Range(2u, 31u));
    baseline->add_option("-i,--input", base_opt.input, "FASTA input ('-' for stdin)")->required();
    baseline->add_option("-o,--output", base_opt.output, "output representation file");
    baseline->add_option("--mode", base_opt.mode, "representation mode")
        ->check(CLI::IsMember({"dollar", "separator"}))
        ->capture_default_str();

    std::uint32_t euler_k = 0;
    std::string euler_in, euler_out;
    auto* euler = app.add_subcommand("eulertigs", "Eulerian-tour SPSS baseline");
    euler->add_option("-k,--kmer", euler_k, "k-mer length")->required()->check(CLI::Range(2u, 31u));
    euler->add_option("-i,--input", euler_in, "FASTA input ('-' for stdin)")->required();
    euler->add_option("-o,--output", euler_out, "output FASTA");

    std::string dec_in, dec_check, dec_out;
    auto* dec = app.add_subcommand("decode", "Decode a representation back to its k-mer set");
    dec->add_option("-i,--input", dec_in, "representation file")->required();
    dec->add_option("--check-against", dec_check, "FASTA whose spectrum must match");
    dec->add_option("-o,--output", dec_out, "write decoded k-mers as FASTA");

    std::uint32_t fam_k = 0;
    std::string fam_out;
    auto* fam = app.add_subcommand("gen-family", "Adversarial cycle-with-pendants input family");
    fam->add_option("--k", fam_k, "k-mer length (4..10)")->required()->check(CLI::Range(4u, 10u));
    fam->add_option("-o,--output", fam_out, "output FASTA (default stdout)");

    std::string stats_in;
    auto* stats = app.add_subcommand("stats", "Count payload symbols of a representation or FASTA");
    stats->add_option("-i,--input", stats_in, "input file")->required();

    std::uint64_t seed = default_seed();
    std::size_t t1 = 200, t2 = 100, rt = 500, scale_mb = 15;
    bool large = false;
    std::string large_input;
    auto* verify = app.add_subcommand("verify", "Self-checks against brute-force oracles");
    verify->add_option("--seed", seed, "RNG seed (env NECKTIG_SEED)")->capture_default_str();
    verify->add_option("--min-paths-instances", t1, "")->capture_default_str();
    verify->add_option("--min-cost-instances", t2, "")->capture_default_str();
    verify->add_option("--roundtrip-instances", rt, "")->capture_default_str();
    verify->add_flag("--large", large, "large-run ordering harness instead of the oracle suites");
    verify->add_option("--input", large_input, "FASTA for --large (default: synthetic reads)");
    verify->add_option("--scale-mb", scale_mb, "synthetic read volume for --large")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) return run_necklace_build(build_opt, false);
        if (baseline->parsed()) return run_necklace_build(base_opt, true);
        if (euler->parsed()) return run_eulertigs(euler_k, euler_in, euler_out);
        if (dec->parsed()) return run_decode(dec_in, dec_check, dec_out);
        if (fam->parsed()) {
            necktig::SeqSet fasta = necktig::gen_family(fam_k);
            std::string text;
            for (const auto& rec : fasta) text += ">" + rec.name + "\n" + rec.bases + "\n";
            if (fam_out.empty()) std::cout << text;
            else write_text_file(fam_out, text);
            return kExitOk;
        }
        if (stats->parsed()) return run_stats(stats_in);
        if (verify->parsed()) return run_verify(seed, t1, t2, rt, large, large_input, scale_mb);
    } catch (const necktig::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const necktig::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const necktig::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
    return kExitUsage;
}
