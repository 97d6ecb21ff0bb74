#ifndef NECKTIG_KMER_HPP
#define NECKTIG_KMER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "necktig/common.hpp"

namespace necktig {

// A k-mer packed 2 bits per symbol, most significant symbol first, so that
// packed-value order equals lexicographic order.
struct Kmer {
    std::uint64_t value = 0;
    std::uint32_t k = 0;

    friend bool operator==(const Kmer&, const Kmer&) = default;
};

// Packs a string of ACGT (any case). Throws InvalidParameter on other symbols
// or k outside [1, kMaxK].
Kmer pack_kmer(std::string_view text);
std::string unpack_kmer(const Kmer& kmer);
std::string unpack_kmer(std::uint64_t value, std::uint32_t k);

struct SeqRecord {
    std::string name;
    std::string bases;  // uppercase, pure ACGT
};

using SeqSet = std::vector<SeqRecord>;

// FASTA-like reader. Each maximal ACGT run within a record becomes one
// sequence (runs split at any other character, including N); record order is
// preserved and lowercase is upcased. Data before the first '>' is a
// ParseError carrying the line number.
SeqSet parse_fasta(std::istream& in);
SeqSet parse_fasta(std::string_view text);

// Deduplicated k-mer set with dense ids assigned in ascending packed-value
// order; immutable after construction.
class Spectrum {
public:
    Spectrum() = default;

    std::uint32_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    std::uint64_t value_of(NodeId id) const { return values_[id]; }
    std::string text_of(NodeId id) const { return unpack_kmer(values_[id], k_); }
    Kmer kmer_of(NodeId id) const { return Kmer{values_[id], k_}; }

    // Dense id of a packed k-mer value, kNoNode if absent.
    NodeId id_of(std::uint64_t value) const noexcept;
    bool contains(std::uint64_t value) const noexcept { return id_of(value) != kNoNode; }

    const std::vector<std::uint64_t>& values() const noexcept { return values_; }

    // Builds from raw packed values; sorts and rejects duplicates.
    static Spectrum from_values(std::uint32_t k, std::vector<std::uint64_t> values);

private:
    std::uint32_t k_ = 0;
    std::vector<std::uint64_t> values_;  // sorted ascending
};

// All distinct k-length windows of the sequences; sequences shorter than k
// are skipped. Throws InvalidParameter for k < 2 or k > kMaxK, EmptyInput if
// no window exists.
Spectrum extract_spectrum(const SeqSet& seqs, std::uint32_t k);

}  // namespace necktig

#endif
