#ifndef NECKTIG_TESTS_FIXTURES_HPP
#define NECKTIG_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "necktig/debruijn.hpp"
#include "necktig/necklace.hpp"

namespace fixtures {

// Four records whose 3-mer spectrum is exactly the 21-k-mer worked example
// (one closed-cycle-rich component with CAA/CAT/GCT/TCC as its dead ends).
inline const char* kSample21Fasta =
    ">s1\nTGGACGGGACGGCAT\n"
    ">s2\nCAGTTCC\n"
    ">s3\nCGGTCGTTCGGCAA\n"
    ">s4\nGGCAGCT\n";

inline std::vector<std::string> sample21_kmers() {
    return {"TGG", "GGG", "GGC", "GCA", "CAA", "CAT", "GGA", "CGG", "GGT", "GAC", "ACG",
            "AGC", "GCT", "CAG", "GTC", "TCC", "TCG", "CGT", "GTT", "TTC", "AGT"};
}

// A minimum SPSS of the same spectrum, weight 31.
inline std::vector<std::string> sample21_spss() {
    return {"CAGTTCC", "TGGCT", "CAA", "AGCAT", "GGGTCGGACGT"};
}

inline necktig::NodeId nid(const necktig::Spectrum& spec, const std::string& kmer) {
    return spec.id_of(necktig::pack_kmer(kmer).value);
}

inline std::vector<necktig::NodeId> nids(const necktig::Spectrum& spec,
                                         const std::vector<std::string>& kmers) {
    std::vector<necktig::NodeId> out;
    for (const auto& s : kmers) out.push_back(nid(spec, s));
    return out;
}

// Hand-built necklace cover over the sample21 spectrum: two closed necklaces
// rooted at the GGAC and TCGT cycles plus one open necklace.
inline necktig::NecklaceCover sample21_cover(const necktig::Spectrum& spec) {
    necktig::NecklaceCover cover;
    cover.parent.assign(spec.size(), necktig::kNoNode);
    cover.children.assign(spec.size(), {});

    auto add_root = [&](bool closed, const std::vector<std::string>& kmers) {
        necktig::Necklace n{closed, nids(spec, kmers)};
        for (std::size_t j = 0; j + 1 < n.root.size(); ++j) cover.parent[n.root[j + 1]] = n.root[j];
        if (closed) cover.parent[n.root.front()] = n.root.back();
        cover.necklaces.push_back(std::move(n));
    };
    auto add_pendants = [&](const std::string& anchor, const std::vector<std::string>& kids) {
        for (const auto& kid : kids) {
            cover.parent[nid(spec, kid)] = nid(spec, anchor);
            cover.children[nid(spec, anchor)].push_back(nid(spec, kid));
        }
    };

    add_root(true, {"GGA", "GAC", "ACG", "CGG"});
    add_pendants("CGG", {"GGC"});
    add_pendants("GGC", {"GCA", "GCT"});
    add_pendants("GCA", {"CAA", "CAG", "CAT"});
    add_pendants("CAG", {"AGC", "AGT"});

    add_root(true, {"TCG", "CGT", "GTT", "TTC"});
    add_pendants("TTC", {"TCC"});
    add_pendants("CGT", {"GTC"});

    add_root(false, {"TGG", "GGT"});
    add_pendants("TGG", {"GGG"});
    return cover;
}

// The 18-k-mer open necklace used as the encoder's worked example, with a
// switch between the drawn child order and canonical ascending-label order.
struct TreeNecklace {
    necktig::Spectrum spec;
    necktig::NecklaceCover cover;
};

inline TreeNecklace tree_necklace(bool as_drawn) {
    std::vector<std::string> kmers = {"ACG", "CGT", "GTA", "TAT", "ATA", "TAG",
                                      "GTT", "TTC", "TCG", "TCC", "TTA", "TAC",
                                      "ACT", "TAA", "AAC", "ACC", "AAG", "AAT"};
    std::vector<std::uint64_t> values;
    for (const auto& s : kmers) values.push_back(necktig::pack_kmer(s).value);
    TreeNecklace fx;
    fx.spec = necktig::Spectrum::from_values(3, std::move(values));
    fx.cover.parent.assign(fx.spec.size(), necktig::kNoNode);
    fx.cover.children.assign(fx.spec.size(), {});

    necktig::Necklace neck{false, nids(fx.spec, {"ACG", "CGT", "GTA", "TAT", "ATA", "TAG"})};
    for (std::size_t j = 0; j + 1 < neck.root.size(); ++j)
        fx.cover.parent[neck.root[j + 1]] = neck.root[j];
    fx.cover.necklaces.push_back(std::move(neck));

    auto add = [&](const std::string& anchor, std::vector<std::string> kids) {
        for (const auto& kid : kids) {
            fx.cover.parent[nid(fx.spec, kid)] = nid(fx.spec, anchor);
            fx.cover.children[nid(fx.spec, anchor)].push_back(nid(fx.spec, kid));
        }
    };
    add("CGT", {"GTT"});
    if (as_drawn) {
        add("GTT", {"TTC", "TTA"});
        add("TTC", {"TCG", "TCC"});
    } else {
        add("GTT", {"TTA", "TTC"});
        add("TTC", {"TCC", "TCG"});
    }
    add("GTA", {"TAC"});
    add("TAC", {"ACT"});
    add("ATA", {"TAA"});
    add("TAA", {"AAC", "AAG", "AAT"});
    add("AAC", {"ACC"});
    return fx;
}

}  // namespace fixtures

#endif
