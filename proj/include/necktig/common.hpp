#ifndef NECKTIG_COMMON_HPP
#define NECKTIG_COMMON_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace necktig {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Largest k for which a k-mer packs into one 64-bit word.
inline constexpr std::uint32_t kMaxK = 31;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed FASTA or representation file content.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

struct InvalidParameter : Error {
    using Error::Error;
};

// Raised when an operation requires a non-empty spectrum/graph.
struct EmptyInput : Error {
    using Error::Error;
};

// A cover handed to an algorithm violates its precondition.
struct CoverError : Error {
    using Error::Error;
};

struct DecodeError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

inline constexpr char kBases[4] = {'A', 'C', 'G', 'T'};

// 2-bit code, A=0 C=1 G=2 T=3. Lowercase accepted. -1 for anything else.
inline int base_code(char c) noexcept {
    switch (c) {
        case 'A': case 'a': return 0;
        case 'C': case 'c': return 1;
        case 'G': case 'g': return 2;
        case 'T': case 't': return 3;
        default: return -1;
    }
}

inline char base_char(std::uint64_t code) noexcept { return kBases[code & 3]; }

}  // namespace necktig

#endif
