#include "colexent/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace colexent {

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(std::istream& in) {
    std::vector<Graph::Edge> edges;
    long long u = 0;
    long long v = 0;
    int n = 0;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
        if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex index");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        n = std::max({n, static_cast<int>(u) + 1, static_cast<int>(v) + 1});
    }
    if (!in.eof() && in.fail()) throw std::invalid_argument("edge list: malformed input");
    return Graph(n, std::move(edges));
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_edge_list(in);
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw std::invalid_argument("graph6: graph too large to encode");
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_size(out, n);

    std::vector<char> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u) * n + v] = 1;
        adj[static_cast<std::size_t>(v) * n + u] = 1;
    }

    // Upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    int bits = 0;
    int value = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | adj[static_cast<std::size_t>(i) * n + j];
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + value));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (value << (6 - bits))));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
        text.remove_prefix(kGraph6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
        const unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };

    long long n = next();
    if (n == 63) {  // '~': 3-byte size
        n = 0;
        for (int i = 0; i < 3; ++i) {
            const int c = next();
            if (i == 0 && c == 63)  // "~~" prefix: 8-byte size form
                throw std::invalid_argument("graph6: 8-byte sizes not supported");
            n = (n << 6) | c;
        }
    }
    if (n > 258047) throw std::invalid_argument("graph6: vertex count out of range");

    std::vector<Graph::Edge> edges;
    int bits = 0;
    int value = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                value = next();
                bits = 6;
            }
            if (value & (1 << (bits - 1))) edges.emplace_back(i, j);
            --bits;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("graph6: trailing bytes");
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_string(const DegreeSequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(s[i]);
    }
    return out;
}

DegreeSequence parse_degree_sequence(std::string_view text) {
    std::vector<int> degrees;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(start, end - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) {
            if (degrees.empty() && end == text.size()) break;  // empty input -> empty sequence
            throw std::invalid_argument("degree sequence: empty entry");
        }
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("degree sequence: bad integer '" + std::string(token) + "'");
        degrees.push_back(value);
        if (end == text.size()) break;
        start = end + 1;
    }
    return DegreeSequence(std::move(degrees));
}

}  // namespace colexent
