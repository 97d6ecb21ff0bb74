#include "necktig/family.hpp"

namespace necktig {

std::string de_bruijn_sequence(std::uint32_t m) {
    if (m < 1 || m > 8) throw InvalidParameter("de Bruijn sequence order must be in [1, 8]");
    // FKM: concatenate the Lyndon words over {A,C,G,T} whose length divides m,
    // in lexicographic order.
    std::string seq;
    std::vector<int> word(m + 1, 0);
    auto rec = [&](auto&& self, std::uint32_t t, std::uint32_t p) -> void {
        if (t > m) {
            if (m % p == 0)
                for (std::uint32_t j = 1; j <= p; ++j) seq.push_back(kBases[word[j]]);
            return;
        }
        word[t] = word[t - p];
        self(self, t + 1, p);
        for (int c = word[t - p] + 1; c <= 3; ++c) {
            word[t] = c;
            self(self, t + 1, t);
        }
    };
    rec(rec, 1, 1);
    return seq;
}

SeqSet gen_family(std::uint32_t k) {
    if (k < 4) throw InvalidParameter("family construction needs k >= 4");
    if (k > 10) throw InvalidParameter("family construction supports k <= 10 (4^(k-2) cycle)");

    const std::string s = de_bruijn_sequence(k - 2);
    const std::size_t n = s.size();
    const std::string x = s + s.substr(0, k);

    SeqSet out;
    out.push_back(SeqRecord{"X", x});
    for (std::size_t i = 0; i < n; ++i) {
        const char successor = x[i + k];
        char b = 'A';
        for (char candidate : kBases) {
            if (candidate != successor) {
                b = candidate;
                break;
            }
        }
        out.push_back(SeqRecord{"p" + std::to_string(i), x.substr(i, k) + b});
    }
    return out;
}

}  // namespace necktig
