#include "dgs/error.hpp"
#include "dgs/graph.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace dgs {

namespace {

constexpr std::size_t graph6_short_max = 62;
constexpr std::size_t graph6_long_max = 258047;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

int sextet(char c)
{
    if (c < 63 || c > 126)
        throw FormatError(FormatError::Kind::bad_character,
                          std::string("graph6: byte ") + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                              " outside the printable range 63..126");
    return c - 63;
}

std::optional<long long> parse_int(std::string_view tok)
{
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::string_view s = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw FormatError(FormatError::Kind::malformed_header, "graph6: empty input");

    std::size_t n = 0;
    std::size_t pos = 0;
    if (s[0] == 126) {
        if (s.size() >= 2 && s[1] == 126)
            throw FormatError(FormatError::Kind::size_limit, "graph6: 8-byte size field is not supported");
        if (s.size() < 4)
            throw FormatError(FormatError::Kind::malformed_header, "graph6: truncated 4-byte size field");
        n = (static_cast<std::size_t>(sextet(s[1])) << 12) | (static_cast<std::size_t>(sextet(s[2])) << 6) |
            static_cast<std::size_t>(sextet(s[3]));
        if (n <= graph6_short_max)
            throw FormatError(FormatError::Kind::malformed_header,
                              "graph6: 4-byte size field used for n = " + std::to_string(n));
        pos = 4;
    } else {
        if (s[0] < 63 || s[0] > 125)
            throw FormatError(FormatError::Kind::malformed_header, "graph6: invalid size byte");
        n = static_cast<std::size_t>(s[0] - 63);
        pos = 1;
    }
    if (n == 0) throw FormatError(FormatError::Kind::malformed_header, "graph6: graphs with 0 vertices are not supported");
    if (n > Graph::max_vertices)
        throw FormatError(FormatError::Kind::size_limit, "graph6: n = " + std::to_string(n) + " exceeds 65536");

    const std::size_t nbits = n * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    const std::size_t avail = s.size() - pos;
    if (avail < nbytes)
        throw FormatError(FormatError::Kind::truncated, "graph6: expected " + std::to_string(nbytes) +
                                                            " data bytes, found " + std::to_string(avail));
    if (avail > nbytes)
        throw FormatError(FormatError::Kind::trailing_data, "graph6: " + std::to_string(avail - nbytes) +
                                                                " unexpected trailing bytes");

    Graph g(n);
    std::size_t i = 0, j = 1;
    for (std::size_t b = 0; b < nbytes; ++b) {
        const int v = sextet(s[pos + b]);
        for (int k = 5; k >= 0; --k) {
            const std::size_t bit_index = b * 6 + static_cast<std::size_t>(5 - k);
            const bool bit = (v >> k) & 1;
            if (bit_index >= nbits) {
                if (bit) throw FormatError(FormatError::Kind::bad_character, "graph6: nonzero padding bits");
                continue;
            }
            if (bit) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    if (n <= graph6_short_max) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= graph6_long_max) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw FormatError(FormatError::Kind::size_limit, "graph6: n too large for the supported size forms");
    }
    int acc = 0, filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!trim(line).empty()) lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty()) throw FormatError(FormatError::Kind::malformed_header, "edge-list: empty input");

    const auto head = split_ws(lines[0]);
    std::optional<long long> n;
    if (head.size() == 1) n = parse_int(head[0]);
    if (!n || *n < 1)
        throw FormatError(FormatError::Kind::malformed_header,
                          "edge-list: first line must be a single positive vertex count");
    if (static_cast<unsigned long long>(*n) > Graph::max_vertices)
        throw FormatError(FormatError::Kind::size_limit, "edge-list: n exceeds 65536");

    Graph g(static_cast<std::size_t>(*n));
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto tok = split_ws(lines[l]);
        std::optional<long long> u, v;
        if (tok.size() == 2) {
            u = parse_int(tok[0]);
            v = parse_int(tok[1]);
        }
        if (!u || !v)
            throw FormatError(FormatError::Kind::bad_token,
                              "edge-list: line " + std::to_string(l + 1) + " is not a pair of integers");
        if (*u < 0 || *v < 0 || *u >= *n || *v >= *n)
            throw FormatError(FormatError::Kind::vertex_out_of_range,
                              "edge-list: vertex index out of range on line " + std::to_string(l + 1));
        if (*u == *v)
            throw FormatError(FormatError::Kind::self_loop,
                              "edge-list: self-loop at vertex " + std::to_string(*u));
        const auto a = static_cast<std::size_t>(*u), b = static_cast<std::size_t>(*v);
        if (g.adjacent(a, b))
            throw FormatError(FormatError::Kind::duplicate_edge, "edge-list: duplicate edge " + std::to_string(a) +
                                                                     " " + std::to_string(b));
        g.add_edge(a, b);
    }
    return g;
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

GraphFormat sniff_format(std::string_view text)
{
    // graph6 bytes are all >= 63, so a leading digit can only be an edge-list header.
    const auto s = trim(text);
    if (!s.empty() && s[0] >= '0' && s[0] <= '9') return GraphFormat::edge_list;
    return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string write_graph(const Graph& g, GraphFormat format)
{
    return format == GraphFormat::graph6 ? write_graph6(g) : write_edge_list(g);
}

} // namespace dgs
