#include "desym/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace desym {

namespace {

constexpr int kG6Lo = 63;  // '?'
constexpr int kG6Hi = 126; // '~'

} // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw ValidationError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ValidationError("edge endpoint " + std::to_string(a < 0 || a >= n ? a : b) +
                                  " out of range for n=" + std::to_string(n));
        if (a == b) throw ValidationError("loop at vertex " + std::to_string(a));
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& x, const Edge& y) { return x.u != y.u ? x.u < y.u : x.v < y.v; });
    for (std::size_t i = 1; i < g.edges_.size(); ++i)
        if (g.edges_[i] == g.edges_[i - 1])
            throw ValidationError("duplicate edge (" + std::to_string(g.edges_[i].u) + "," +
                                  std::to_string(g.edges_[i].v) + ")");

    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.edge_index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        g.edge_index_[static_cast<std::size_t>(e.u) * n + e.v] = static_cast<int>(i);
        g.edge_index_[static_cast<std::size_t>(e.v) * n + e.u] = static_cast<int>(i);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return -1;
    return edge_index_[static_cast<std::size_t>(u) * n_ + v];
}

Graph parse_graph6(std::string_view text) {
    // trim trailing whitespace/newline
    std::size_t end = text.size();
    while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    text = text.substr(0, end);
    if (text.empty()) throw ParseError("empty graph6 input", 0);

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("truncated graph6 input", i);
        int c = static_cast<unsigned char>(text[i]);
        if (c < kG6Lo || c > kG6Hi) throw ParseError("invalid graph6 byte", i);
        return c - kG6Lo;
    };

    long long n;
    if (static_cast<unsigned char>(text[0]) != '~') {
        n = byte(0);
        pos = 1;
    } else {
        if (text.size() > 1 && static_cast<unsigned char>(text[1]) == '~')
            throw ParseError("graph6 order >= 258048 not supported", 1);
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }

    long long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != pos + nbytes)
        throw ParseError(text.size() < pos + nbytes ? "truncated graph6 input"
                                                    : "trailing bytes after graph6 data",
                         std::min(text.size(), pos + nbytes));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + static_cast<std::size_t>(bit / 6));
            if (b & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (long long pad = nbits; pad < static_cast<long long>(nbytes) * 6; ++pad) {
        int b = byte(pos + static_cast<std::size_t>(pad / 6));
        if (b & (1 << (5 - pad % 6)))
            throw ParseError("nonzero padding bits in graph6 input", pos + static_cast<std::size_t>(pad / 6));
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    struct Token {
        long long value;
        std::size_t offset;
    };
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        bool ok = true;
        long long value = 0;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            char c = text[i];
            if (c < '0' || c > '9' || value > 100000000)
                ok = false;
            else
                value = value * 10 + (c - '0');
            ++i;
        }
        if (!ok) throw ParseError("expected a non-negative integer", start);
        tokens.push_back({value, start});
    }
    if (tokens.empty()) throw ParseError("empty edge list input", 0);
    if (tokens.size() % 2 == 0)
        throw ParseError("dangling edge endpoint", tokens.back().offset);

    int n = static_cast<int>(tokens[0].value);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t t = 1; t + 1 < tokens.size(); t += 2)
        edges.emplace_back(static_cast<int>(tokens[t].value), static_cast<int>(tokens[t + 1].value));
    return Graph::from_edges(n, std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw ParseError("empty input", 0);
    char c = text[i];
    if (c >= '0' && c <= '9') return parse_edge_list(text);
    return parse_graph6(text.substr(i));
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    }
    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> groups(static_cast<std::size_t>((nbits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) groups[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
        }
    }
    for (int grp : groups) out.push_back(static_cast<char>(grp + kG6Lo));
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out.push_back('\n');
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out.push_back(' ');
        out += std::to_string(e.v);
        out.push_back('\n');
    }
    return out;
}

} // namespace desym
