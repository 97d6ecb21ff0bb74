#include "necktig/encoding.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>

namespace necktig {

namespace {

// Booth's least-rotation index.
std::size_t least_rotation(const std::string& s) {
    const std::size_t n = s.size();
    if (n <= 1) return 0;
    std::string ss = s + s;
    std::vector<std::ptrdiff_t> f(ss.size(), -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < ss.size(); ++j) {
        char sj = ss[j];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != ss[k + i + 1]) {
            if (sj < ss[k + i + 1]) k = j - i - 1;
            i = f[i];
        }
        if (sj != ss[k + i + 1]) {
            if (sj < ss[k]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

char label_char(const Spectrum& spec, NodeId v) { return base_char(spec.value_of(v) & 3); }

// Emit one pendant subtree without recursion (chains can be long).
void emit_subtree(NodeId node, const NecklaceCover& cover, const Spectrum& spec,
                  std::string& out) {
    enum class Tok : std::uint8_t { open, close, node };
    struct Token {
        Tok tok;
        NodeId id;
    };
    std::vector<Token> stack{{Tok::node, node}};
    while (!stack.empty()) {
        Token t = stack.back();
        stack.pop_back();
        if (t.tok == Tok::open) {
            out.push_back('(');
            continue;
        }
        if (t.tok == Tok::close) {
            out.push_back(')');
            continue;
        }
        out.push_back(label_char(spec, t.id));
        const auto& ch = cover.children[t.id];
        if (ch.empty()) continue;
        // Last child unwrapped, the rest in stored order inside parentheses.
        stack.push_back({Tok::node, ch.back()});
        for (std::size_t i = ch.size() - 1; i-- > 0;) {
            stack.push_back({Tok::close, 0});
            stack.push_back({Tok::node, ch[i]});
            stack.push_back({Tok::open, 0});
        }
    }
}

void emit_anchor_pendants(NodeId v, const NecklaceCover& cover, const Spectrum& spec,
                          std::string& out) {
    for (NodeId child : cover.children[v]) {
        out.push_back('(');
        emit_subtree(child, cover, spec, out);
        out.push_back(')');
    }
}

std::size_t match_open(std::string_view s, std::size_t close_pos) {
    std::size_t depth = 1;
    std::size_t q = close_pos;
    while (depth > 0) {
        if (q == 0) throw DecodeError("unbalanced parentheses");
        --q;
        if (s[q] == ')') ++depth;
        else if (s[q] == '(') --depth;
    }
    return q;
}

// Position of the parent symbol of the Sigma symbol at pos; backward linear
// scan, no auxiliary index. nullopt when the walk leaves an open necklace.
std::optional<std::size_t> parent_pos(std::string_view s, std::size_t pos, bool closed) {
    auto step_back = [&](std::size_t i) -> std::optional<std::size_t> {
        if (i == 0) {
            if (!closed) return std::nullopt;
            return s.size() - 1;  // circular wrap at the outermost layer
        }
        return i - 1;
    };
    std::optional<std::size_t> q = step_back(pos);
    while (q) {
        char c = s[*q];
        if (c == '(') {
            q = step_back(*q);
        } else if (c == ')') {
            q = step_back(match_open(s, *q));  // skip the sibling group
        } else {
            return q;
        }
    }
    return std::nullopt;
}

void validate_record(std::string_view s, std::uint32_t k, bool closed) {
    if (s.empty()) throw DecodeError("empty necklace record");
    std::ptrdiff_t balance = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') {
            ++balance;
            if (i + 1 >= s.size() || base_code(s[i + 1]) < 0)
                throw DecodeError("'(' not followed by a base at offset " + std::to_string(i));
        } else if (c == ')') {
            if (--balance < 0) throw DecodeError("unbalanced parentheses");
        } else if (base_code(c) < 0) {
            throw DecodeError(std::string("symbol outside alphabet: '") + c + "'");
        }
    }
    if (balance != 0) throw DecodeError("unbalanced parentheses");
    if (base_code(s[0]) < 0) throw DecodeError("record must start with a base");
    if (!closed) {
        if (s.size() < k) throw DecodeError("open necklace shorter than k");
        for (std::size_t i = 0; i < k; ++i)
            if (base_code(s[i]) < 0) throw DecodeError("open necklace root shorter than k");
    }
}

}  // namespace

std::string encode_necklace(const Necklace& necklace, const NecklaceCover& cover,
                            const Spectrum& spec) {
    if (necklace.root.empty()) throw InvalidParameter("necklace with empty root");
    for (NodeId v : necklace.root)
        if (v >= spec.size()) throw InvalidParameter("necklace node not in spectrum");

    std::string out;
    if (necklace.closed) {
        std::string chars(necklace.root.size(), 'A');
        for (std::size_t j = 0; j < necklace.root.size(); ++j)
            chars[j] = label_char(spec, necklace.root[j]);
        const std::size_t r = least_rotation(chars);
        for (std::size_t j = 0; j < necklace.root.size(); ++j) {
            const std::size_t p = (r + j) % necklace.root.size();
            out.push_back(chars[p]);
            emit_anchor_pendants(necklace.root[p], cover, spec, out);
        }
    } else {
        out = spec.text_of(necklace.root.front());
        emit_anchor_pendants(necklace.root.front(), cover, spec, out);
        for (std::size_t j = 1; j < necklace.root.size(); ++j) {
            out.push_back(label_char(spec, necklace.root[j]));
            emit_anchor_pendants(necklace.root[j], cover, spec, out);
        }
    }
    return out;
}

Encoded encode_cover(const NecklaceCover& cover, const Spectrum& spec, Mode mode) {
    Encoded enc;
    enc.mode = mode;
    enc.k = spec.k();
    for (const Necklace& n : cover.necklaces)
        if (n.closed) enc.records.push_back(encode_necklace(n, cover, spec));
    enc.closed_count = enc.records.size();
    for (const Necklace& n : cover.necklaces)
        if (!n.closed) enc.records.push_back(encode_necklace(n, cover, spec));
    return enc;
}

std::string Encoded::separator_payload() const {
    std::string out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i > 0) out.push_back('|');
        if (i == closed_count) out.push_back('|');  // block boundary
        out += records[i];
    }
    if (closed_count == records.size()) out.push_back('|');
    return out;
}

std::size_t Encoded::symbol_count() const {
    if (mode == Mode::separator) return separator_payload().size();
    std::size_t total = 1;  // the "$" marker record
    for (const std::string& r : records) total += r.size();
    return total;
}

Kmer kmer_at(std::string_view necklace_string, std::size_t pos, std::uint32_t k, bool closed) {
    if (pos >= necklace_string.size() || base_code(necklace_string[pos]) < 0)
        throw DecodeError("position does not hold a base");
    std::uint64_t value = 0;
    std::uint64_t mult = 1;
    value = static_cast<std::uint64_t>(base_code(necklace_string[pos]));
    std::size_t cur = pos;
    for (std::uint32_t step = 1; step < k; ++step) {
        auto p = parent_pos(necklace_string, cur, closed);
        if (!p) throw DecodeError("position lacks k-1 ancestors");
        cur = *p;
        mult <<= 2;
        value += mult * static_cast<std::uint64_t>(base_code(necklace_string[cur]));
    }
    return Kmer{value, k};
}

Spectrum decode_cover(const Encoded& enc) {
    if (enc.k < 2 || enc.k > kMaxK) throw DecodeError("bad k in encoded cover");
    std::vector<std::uint64_t> values;
    for (std::size_t r = 0; r < enc.records.size(); ++r) {
        const std::string& s = enc.records[r];
        const bool closed = r < enc.closed_count;
        validate_record(s, enc.k, closed);
        const std::size_t first = closed ? 0 : enc.k - 1;
        for (std::size_t i = first; i < s.size(); ++i) {
            if (base_code(s[i]) < 0) continue;
            values.push_back(kmer_at(s, i, enc.k, closed).value);
        }
    }
    std::sort(values.begin(), values.end());
    auto dup = std::adjacent_find(values.begin(), values.end());
    if (dup != values.end())
        throw DecodeError("repeated k-mer " + unpack_kmer(*dup, enc.k));
    return Spectrum::from_values(enc.k, std::move(values));
}

CostReport cost_report(const NecklaceCover& cover, std::uint32_t k) {
    CostReport rep;
    std::vector<NodeId> stack;
    for (const Necklace& n : cover.necklaces) {
        if (n.closed) ++rep.n_c;
        else ++rep.n_o;
        rep.n_k += n.root.size();
        // Only pendant nodes can be leaves; root nodes (cycle nodes and the
        // root-path tail included) are never counted.
        for (NodeId v : n.root)
            for (NodeId c : cover.children[v]) stack.push_back(c);
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            ++rep.n_k;
            if (cover.children[v].empty()) ++rep.n_l;
            for (NodeId c : cover.children[v]) stack.push_back(c);
        }
    }
    rep.cost_dollar = rep.n_k + (k - 1) * rep.n_o + 2 * rep.n_l + 1;
    rep.cost_separator = rep.n_k + k * rep.n_o + 2 * rep.n_l + rep.n_c;
    rep.spss_weight_equivalent = rep.n_k + (k - 1) * rep.n_o;
    return rep;
}

void write_encoded(std::ostream& out, const Encoded& enc) {
    out << "#necktig v1 k=" << enc.k << " mode="
        << (enc.mode == Mode::dollar ? "dollar" : "separator") << '\n';
    if (enc.mode == Mode::separator) {
        out << enc.separator_payload() << '\n';
        return;
    }
    for (std::size_t i = 0; i < enc.records.size(); ++i) {
        if (i == enc.closed_count) out << "$\n";
        out << enc.records[i] << '\n';
    }
    if (enc.closed_count == enc.records.size()) out << "$\n";
}

void write_encoded_file(const std::string& path, const Encoded& enc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_encoded(out, enc);
    if (!out) throw IoError("write failed: " + path);
}

Encoded read_encoded(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("missing header", 1);
    if (!header.empty() && header.back() == '\r') header.pop_back();

    Encoded enc;
    {
        std::istringstream hs(header);
        std::string magic, version, kfield, mfield;
        hs >> magic >> version >> kfield >> mfield;
        if (magic != "#necktig" || version != "v1" || kfield.rfind("k=", 0) != 0 ||
            mfield.rfind("mode=", 0) != 0)
            throw ParseError("bad header: " + header, 1);
        enc.k = static_cast<std::uint32_t>(std::stoul(kfield.substr(2)));
        std::string mode = mfield.substr(5);
        if (mode == "dollar") enc.mode = Mode::dollar;
        else if (mode == "separator") enc.mode = Mode::separator;
        else throw ParseError("bad mode: " + mode, 1);
    }

    std::string line;
    std::size_t line_no = 1;
    if (enc.mode == Mode::separator) {
        if (!std::getline(in, line)) throw ParseError("missing payload line", 2);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == "|") return enc;  // empty cover
        std::vector<std::string> segments;
        std::string seg;
        for (char c : line) {
            if (c == '|') {
                segments.push_back(std::move(seg));
                seg.clear();
            } else {
                seg.push_back(c);
            }
        }
        segments.push_back(std::move(seg));
        std::size_t boundary = segments.size();
        for (std::size_t i = 0; i < segments.size(); ++i) {
            if (!segments[i].empty()) continue;
            if (boundary != segments.size()) throw ParseError("multiple block boundaries", 2);
            boundary = i;
        }
        if (boundary == segments.size()) throw ParseError("missing block boundary", 2);
        for (std::size_t i = 0; i < segments.size(); ++i) {
            if (i == boundary) continue;
            enc.records.push_back(std::move(segments[i]));
        }
        enc.closed_count = boundary;
        return enc;
    }

    bool seen_marker = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == "$") {
            if (seen_marker) throw ParseError("second '$' marker", line_no);
            seen_marker = true;
            enc.closed_count = enc.records.size();
            continue;
        }
        if (line.empty()) throw ParseError("empty record line", line_no);
        enc.records.push_back(line);
    }
    if (!seen_marker) throw ParseError("missing '$' marker", line_no);
    return enc;
}

Encoded read_encoded_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    return read_encoded(in);
}

}  // namespace necktig
