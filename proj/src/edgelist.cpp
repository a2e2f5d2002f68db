#include "ugspec/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ugspec {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::invalid_argument("edge list, line " + std::to_string(line) + ": " + what);
}

// Parses exactly two space-separated non-negative integers.
std::pair<long, long> parse_int_pair(const std::string& text, int line) {
    size_t sp = text.find(' ');
    if (sp == std::string::npos || sp == 0 || sp + 1 >= text.size())
        fail(line, "expected two space-separated integers, got \"" + text + "\"");
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string a = text.substr(0, sp), b = text.substr(sp + 1);
    if (!digits(a) || !digits(b))
        fail(line, "expected two space-separated integers, got \"" + text + "\"");
    return {std::stol(a), std::stol(b)};
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 1;
    if (!std::getline(in, line)) fail(1, "missing header \"n m\"");
    auto [n, m] = parse_int_pair(line, 1);
    if (n < 1) fail(1, "vertex count must be positive");
    if (m < 0) fail(1, "edge count must be non-negative");

    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        ++lineno;
        if (!std::getline(in, line)) fail(lineno, "missing edge line");
        auto [u, v] = parse_int_pair(line, lineno);
        if (u < 1 || v > n) fail(lineno, "vertex out of range");
        if (u >= v) fail(lineno, "edges must satisfy u < v");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty()) fail(lineno, "unexpected trailing content");
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("edge list: ") + e.what());
    }
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("edge list: cannot open " + path);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace ugspec
