#include "ramsey/witness_io.hpp"

#include "ramsey/errors.hpp"
#include "line_reader.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ramsey {

namespace {

constexpr const char* kRamseyHeader = "ramsey-witness";
constexpr const char* kSchurHeader = "schur-witness";

struct Header {
    std::string kind;
    unsigned N = 0;
    unsigned n = 0;
};

unsigned parse_keyed(const std::string& token, const std::string& key, const std::string& source,
                     std::size_t line) {
    if (token.size() <= key.size() || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        throw FormatError(source, line, "expected " + key + "=<int>, got '" + token + "'");
    return detail::parse_unsigned(token.substr(key.size() + 1), source, line);
}

Header read_header(detail::LineReader& reader, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    if (!reader.next(line, lineno))
        throw FormatError(source, 0, "missing header line");
    std::istringstream fields(line);
    Header h;
    std::string tok_N, tok_n, extra;
    if (!(fields >> h.kind >> tok_N >> tok_n) || (fields >> extra))
        throw FormatError(source, lineno, "header must be '<kind> N=<int> n=<int>'");
    if (h.kind != kRamseyHeader && h.kind != kSchurHeader)
        throw FormatError(source, lineno, "unknown witness kind '" + h.kind + "'");
    h.N = parse_keyed(tok_N, "N", source, lineno);
    h.n = parse_keyed(tok_n, "n", source, lineno);
    return h;
}

EdgeColoring read_ramsey_body(detail::LineReader& reader, const Header& h,
                              const std::string& source) {
    if (h.n < 1 || h.n > 255)
        throw FormatError(source, 0, "color count must be in 1..255");
    EdgeColoring coloring(h.N, h.n);
    std::vector<bool> seen(EdgeColoring::edge_count(h.N), false);
    std::string line;
    std::size_t lineno = 0;
    while (reader.next(line, lineno)) {
        std::istringstream fields(line);
        std::string tok_i, tok_j, tok_c, extra;
        if (!(fields >> tok_i >> tok_j >> tok_c) || (fields >> extra))
            throw FormatError(source, lineno, "expected: i j c");
        unsigned i = detail::parse_unsigned(tok_i, source, lineno);
        unsigned j = detail::parse_unsigned(tok_j, source, lineno);
        unsigned c = detail::parse_unsigned(tok_c, source, lineno);
        if (i >= j || j >= h.N)
            throw FormatError(source, lineno, "edge must satisfy 0 <= i < j < N");
        if (c >= h.n)
            throw FormatError(source, lineno, "color must satisfy c < n");
        std::size_t index = EdgeColoring::edge_index(i, j);
        if (seen[index])
            throw FormatError(source, lineno,
                              "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
        seen[index] = true;
        coloring.set_color(i, j, c);
    }
    for (unsigned j = 1; j < h.N; ++j)
        for (unsigned i = 0; i < j; ++i)
            if (!seen[EdgeColoring::edge_index(i, j)])
                throw FormatError(source, 0, "missing edge " + std::to_string(i) + " " +
                                                 std::to_string(j));
    return coloring;
}

SchurPartition read_schur_body(detail::LineReader& reader, const Header& h,
                               const std::string& source) {
    if (h.N < 1)
        throw FormatError(source, 0, "bound must be at least 1");
    if (h.n < 1 || h.n > 255)
        throw FormatError(source, 0, "block count must be in 1..255");
    SchurPartition partition(h.N, h.n);
    std::vector<bool> seen(h.N, false);
    std::string line;
    std::size_t lineno = 0;
    while (reader.next(line, lineno)) {
        std::istringstream fields(line);
        std::string tok_v, tok_b, extra;
        if (!(fields >> tok_v >> tok_b) || (fields >> extra))
            throw FormatError(source, lineno, "expected: v b");
        unsigned v = detail::parse_unsigned(tok_v, source, lineno);
        unsigned b = detail::parse_unsigned(tok_b, source, lineno);
        if (v < 1 || v > h.N)
            throw FormatError(source, lineno, "integer must satisfy 1 <= v <= N");
        if (b >= h.n)
            throw FormatError(source, lineno, "block must satisfy b < n");
        if (seen[v - 1])
            throw FormatError(source, lineno, "duplicate integer " + std::to_string(v));
        seen[v - 1] = true;
        partition.set_block(v, b);
    }
    for (unsigned v = 1; v <= h.N; ++v)
        if (!seen[v - 1])
            throw FormatError(source, 0, "missing integer " + std::to_string(v));
    return partition;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError(path, 0, "cannot open file");
    return in;
}

}  // namespace

EdgeColoring read_ramsey_witness(std::istream& in, const std::string& source) {
    detail::LineReader reader(in);
    Header h = read_header(reader, source);
    if (h.kind != kRamseyHeader)
        throw FormatError(source, 0, "expected a " + std::string(kRamseyHeader) + " header");
    return read_ramsey_body(reader, h, source);
}

EdgeColoring load_ramsey_witness(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_ramsey_witness(in, path);
}

void write_ramsey_witness(std::ostream& out, const EdgeColoring& c) {
    out << kRamseyHeader << " N=" << c.vertex_count() << " n=" << c.color_count() << "\n";
    for (unsigned j = 1; j < c.vertex_count(); ++j)
        for (unsigned i = 0; i < j; ++i)
            out << i << " " << j << " " << c.color(i, j) << "\n";
}

void save_ramsey_witness(const std::string& path, const EdgeColoring& c) {
    std::ofstream out(path);
    if (!out)
        throw FormatError(path, 0, "cannot open file for writing");
    write_ramsey_witness(out, c);
}

SchurPartition read_schur_witness(std::istream& in, const std::string& source) {
    detail::LineReader reader(in);
    Header h = read_header(reader, source);
    if (h.kind != kSchurHeader)
        throw FormatError(source, 0, "expected a " + std::string(kSchurHeader) + " header");
    return read_schur_body(reader, h, source);
}

SchurPartition load_schur_witness(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_schur_witness(in, path);
}

void write_schur_witness(std::ostream& out, const SchurPartition& p) {
    out << kSchurHeader << " N=" << p.bound() << " n=" << p.block_count() << "\n";
    for (unsigned v = 1; v <= p.bound(); ++v)
        out << v << " " << p.block(v) << "\n";
}

void save_schur_witness(const std::string& path, const SchurPartition& p) {
    std::ofstream out(path);
    if (!out)
        throw FormatError(path, 0, "cannot open file for writing");
    write_schur_witness(out, p);
}

std::variant<EdgeColoring, SchurPartition> load_witness(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    detail::LineReader reader(in);
    Header h = read_header(reader, path);
    if (h.kind == kRamseyHeader)
        return read_ramsey_body(reader, h, path);
    return read_schur_body(reader, h, path);
}

}  // namespace ramsey
