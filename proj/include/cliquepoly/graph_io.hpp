#pragma once

#include "graph.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace cliquepoly {

/// Raised for unreadable files and malformed graph text.
class IoError : public Error {
public:
    using Error::Error;
};

// Edge-list format:
//   n m
//   u v      (m lines, 0-based ids)
// Whitespace separated; '#' starts a comment running to end of line.

inline Graph read_edge_list(std::istream& in) {
    std::ostringstream cleaned;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        cleaned << line << '\n';
    }
    std::istringstream tokens(cleaned.str());
    long long n = 0;
    long long m = 0;
    if (!(tokens >> n >> m) || n < 0 || m < 0) {
        throw IoError("edge list: expected header 'n m'");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0;
        long long v = 0;
        if (!(tokens >> u >> v)) {
            throw IoError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw IoError("edge list: endpoint out of range in edge " + std::to_string(u) + " " + std::to_string(v));
        }
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    std::string extra;
    if (tokens >> extra) {
        throw IoError("edge list: trailing data '" + extra + "'");
    }
    try {
        return build_graph(static_cast<std::size_t>(n), edges);
    } catch (const GraphError& e) {
        throw IoError(std::string("edge list: ") + e.what());
    }
}

/// Writes the compacted graph; edges sorted lexicographically with u < v.
inline void write_edge_list(std::ostream& out, const Graph& g) {
    const Graph c = compact(g);
    const auto edges = c.edges();
    out << c.size() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) {
        out << u << ' ' << v << '\n';
    }
}

inline nlohmann::json graph_to_json(const Graph& g) {
    const Graph c = compact(g);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : c.edges()) {
        edges.push_back({u, v});
    }
    return {{"n", c.size()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("n").get<long long>();
        if (n < 0) {
            throw IoError("graph json: negative n");
        }
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw IoError("graph json: edge must be a pair");
            }
            const auto u = e[0].get<long long>();
            const auto v = e[1].get<long long>();
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw IoError("graph json: endpoint out of range");
            }
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
        return build_graph(static_cast<std::size_t>(n), edges);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("graph json: ") + e.what());
    } catch (const GraphError& e) {
        throw IoError(std::string("graph json: ") + e.what());
    }
}

inline bool is_json_path(const std::filesystem::path& path) {
    return path.extension() == ".json";
}

/// Reads `.json` files as JSON, anything else as an edge list.
inline Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    if (is_json_path(path)) {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw IoError(path.string() + ": " + e.what());
        }
        return graph_from_json(j);
    }
    return read_edge_list(in);
}

inline void save_graph(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    if (is_json_path(path)) {
        out << graph_to_json(g).dump() << '\n';
    } else {
        write_edge_list(out, g);
    }
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

} // namespace cliquepoly
