#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kproc/greedy_cut.hpp"

namespace kproc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph file: first line "n m", then m lines "u v w".
inline WeightedGraph load_graph(std::istream& in, const std::string& name = "<stream>") {
    WeightedGraph g;
    std::string line;
    std::size_t lineno = 0;
    std::size_t m = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (g.n == 0 && g.edges.empty() && m == 0) {
            long long n_in = -1, m_in = -1;
            if (!(ls >> n_in >> m_in) || n_in < 1 || m_in < 0) fail("expected header 'n m'");
            g.n = static_cast<Vertex>(n_in);
            m = static_cast<std::size_t>(m_in);
            if (m == 0) break;
            continue;
        }
        long long u = -1, v = -1;
        double w = -1;
        if (!(ls >> u >> v >> w) || u < 0 || v < 0) fail("expected edge line 'u v w'");
        if (u == v) fail("self-loop");
        if (u > v) std::swap(u, v);
        g.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
        if (g.edges.size() == m) break;
    }
    if (g.n == 0) throw ParseError(name + ": empty graph file");
    if (g.edges.size() != m)
        throw ParseError(name + ": expected " + std::to_string(m) + " edges, found " +
                         std::to_string(g.edges.size()));
    try {
        validate_graph(g);
    } catch (const std::invalid_argument& e) {
        throw ParseError(name + ": " + e.what());
    }
    return g;
}

inline WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return load_graph(in, path);
}

// Increment sequence: comma-separated tokens, each "<value>x<count>" or a
// plain integer ("5x1000,2" = 1000 fives then one two).
inline std::vector<std::uint64_t> parse_increments(const std::string& spec) {
    std::vector<std::uint64_t> out;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t xpos = tok.find('x');
        try {
            if (xpos == std::string::npos) {
                out.push_back(std::stoull(tok));
            } else {
                std::uint64_t val = std::stoull(tok.substr(0, xpos));
                std::uint64_t count = std::stoull(tok.substr(xpos + 1));
                out.insert(out.end(), count, val);
            }
        } catch (const std::exception&) {
            throw ParseError("bad increment token '" + tok + "'");
        }
    }
    if (out.empty()) throw ParseError("empty increment sequence");
    return out;
}

// Increment file: one integer per line.
inline std::vector<std::uint64_t> load_increments_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::vector<std::uint64_t> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        try {
            out.push_back(std::stoull(line));
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": bad integer");
        }
    }
    if (out.empty()) throw ParseError(path + ": no increments");
    return out;
}

inline std::vector<Vertex> parse_vertex_list(const std::string& spec) {
    std::vector<Vertex> out;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(static_cast<Vertex>(std::stoul(tok)));
        } catch (const std::exception&) {
            throw ParseError("bad vertex '" + tok + "'");
        }
    }
    return out;
}

// Forbidden family file: one set per line, vertices separated by spaces.
inline std::vector<std::vector<Vertex>> load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::vector<std::vector<Vertex>> family;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<Vertex> set;
        long long v;
        while (ls >> v) {
            if (v < 0) throw ParseError(path + ":" + std::to_string(lineno) + ": negative vertex");
            set.push_back(static_cast<Vertex>(v));
        }
        if (!set.empty()) family.push_back(std::move(set));
    }
    return family;
}

}  // namespace kproc
