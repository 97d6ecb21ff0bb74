#ifndef NECKTIG_ENCODING_HPP
#define NECKTIG_ENCODING_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "necktig/necklace.hpp"

namespace necktig {

enum class Mode { dollar, separator };

// Serialized necklace cover. Records are the per-necklace strings over
// Sigma + {(,)}, closed necklaces first. In dollar mode the closed/open
// boundary is one whole "$" marker record; in separator mode the records are
// joined with '|' plus one extra boundary bar (rendering "||" between two
// non-empty blocks).
struct Encoded {
    Mode mode = Mode::dollar;
    std::uint32_t k = 0;
    std::vector<std::string> records;
    std::size_t closed_count = 0;

    // Single payload string of separator mode.
    std::string separator_payload() const;
    // Payload symbol count of the active mode (includes '$' / '|').
    std::size_t symbol_count() const;
};

struct CostReport {
    std::size_t n_k = 0;
    std::size_t n_o = 0;
    std::size_t n_c = 0;
    std::size_t n_l = 0;
    std::size_t cost_dollar = 0;     // n_k + (k-1) n_o + 2 n_l + 1
    std::size_t cost_separator = 0;  // n_k + k n_o + 2 n_l + n_c
    // Letter count n_k + (k-1) n_o: the weight the cover costs when its
    // necklaces are read as plain strings (the SPSS weight when pendant-free).
    std::size_t spss_weight_equivalent = 0;
};

CostReport cost_report(const NecklaceCover& cover, std::uint32_t k);

// One necklace as a balanced-parenthesis string: open roots spell their full
// string, closed roots start at the lexicographically minimal rotation of
// the cycle's circular string; each pendant subtree is inserted in
// parentheses right after the symbol ending its anchor k-mer, children in
// stored order with the last child of a pendant node unwrapped.
std::string encode_necklace(const Necklace& necklace, const NecklaceCover& cover,
                            const Spectrum& spec);

Encoded encode_cover(const NecklaceCover& cover, const Spectrum& spec, Mode mode);

// Exact k-mer multiset spelled by the cover; throws DecodeError on
// unbalanced parentheses, symbols outside the alphabet, or a repeated k-mer.
Spectrum decode_cover(const Encoded& enc);

// k-mer ending at Sigma-position pos (0-based) of one necklace string,
// recovered by the backward parent scan; wraps circularly when closed.
Kmer kmer_at(std::string_view necklace_string, std::size_t pos, std::uint32_t k, bool closed);

// File format: header "#necktig v1 k=<k> mode=<mode>"; dollar mode has one
// necklace per line and a lone "$" line at the block boundary, separator
// mode a single payload line.
void write_encoded(std::ostream& out, const Encoded& enc);
void write_encoded_file(const std::string& path, const Encoded& enc);
Encoded read_encoded(std::istream& in);
Encoded read_encoded_file(const std::string& path);

}  // namespace necktig

#endif
