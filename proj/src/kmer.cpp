#include "necktig/kmer.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace necktig {

Kmer pack_kmer(std::string_view text) {
    if (text.empty() || text.size() > kMaxK)
        throw InvalidParameter("k-mer length must be in [1, " + std::to_string(kMaxK) + "]");
    std::uint64_t value = 0;
    for (char c : text) {
        int code = base_code(c);
        if (code < 0) throw InvalidParameter(std::string("symbol outside ACGT: '") + c + "'");
        value = (value << 2) | static_cast<std::uint64_t>(code);
    }
    return Kmer{value, static_cast<std::uint32_t>(text.size())};
}

std::string unpack_kmer(std::uint64_t value, std::uint32_t k) {
    std::string text(k, 'A');
    for (std::uint32_t i = 0; i < k; ++i) {
        text[k - 1 - i] = base_char(value & 3);
        value >>= 2;
    }
    return text;
}

std::string unpack_kmer(const Kmer& kmer) { return unpack_kmer(kmer.value, kmer.k); }

SeqSet parse_fasta(std::istream& in) {
    SeqSet out;
    std::string line;
    std::string name;
    std::string run;
    bool have_record = false;
    std::size_t line_no = 0;

    auto flush_run = [&] {
        if (!run.empty()) {
            out.push_back(SeqRecord{name, std::move(run)});
            run.clear();
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush_run();
            name = line.substr(1);
            while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
            have_record = true;
            continue;
        }
        if (!have_record) throw ParseError("sequence data before any '>' header", line_no);
        for (char c : line) {
            int code = base_code(c);
            if (code >= 0) {
                run.push_back(kBases[code]);
            } else {
                flush_run();  // non-ACGT splits the run, never substitutes
            }
        }
    }
    flush_run();
    return out;
}

SeqSet parse_fasta(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_fasta(in);
}

NodeId Spectrum::id_of(std::uint64_t value) const noexcept {
    auto it = std::lower_bound(values_.begin(), values_.end(), value);
    if (it == values_.end() || *it != value) return kNoNode;
    return static_cast<NodeId>(it - values_.begin());
}

Spectrum Spectrum::from_values(std::uint32_t k, std::vector<std::uint64_t> values) {
    if (k < 2 || k > kMaxK) throw InvalidParameter("k must be in [2, " + std::to_string(kMaxK) + "]");
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw InvalidParameter("duplicate k-mer in spectrum");
    Spectrum spec;
    spec.k_ = k;
    spec.values_ = std::move(values);
    return spec;
}

Spectrum extract_spectrum(const SeqSet& seqs, std::uint32_t k) {
    if (k < 2 || k > kMaxK) throw InvalidParameter("k must be in [2, " + std::to_string(kMaxK) + "]");

    std::vector<std::uint64_t> values;
    const std::uint64_t mask = (k == 32) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (2 * k)) - 1);
    for (const SeqRecord& rec : seqs) {
        if (rec.bases.size() < k) continue;
        std::uint64_t window = 0;
        for (std::size_t i = 0; i < rec.bases.size(); ++i) {
            int code = base_code(rec.bases[i]);
            if (code < 0) throw InvalidParameter("SeqSet contains a non-ACGT base");
            window = ((window << 2) | static_cast<std::uint64_t>(code)) & mask;
            if (i + 1 >= k) values.push_back(window);
        }
    }
    if (values.empty()) throw EmptyInput("no k-mer window in input (all sequences shorter than k?)");

    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return Spectrum::from_values(k, std::move(values));
}

}  // namespace necktig
