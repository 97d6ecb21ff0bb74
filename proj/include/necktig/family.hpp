#ifndef NECKTIG_FAMILY_HPP
#define NECKTIG_FAMILY_HPP

#include <cstdint>
#include <string>

#include "necktig/kmer.hpp"

namespace necktig {

// Cyclic string of length 4^m whose circular m-windows enumerate all m-mers
// exactly once (lexicographically least sequence, by Lyndon-word
// concatenation). Guard: 1 <= m <= 8.
std::string de_bruijn_sequence(std::uint32_t m);

// Adversarial family: X = S * alpha for a de Bruijn sequence S of order k-2
// plus, for every k-mer of X with unique successor a, one pendant string
// extending it by the smallest symbol b != a. The resulting graph is a cycle
// of length 4^(k-2) with one single-node pendant per cycle node. Guard: k >= 4.
SeqSet gen_family(std::uint32_t k);

}  // namespace necktig

#endif
