#pragma once

#include "graph.hpp"
#include "intersection.hpp"
#include "seed.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliquepoly {

enum class Family { complete, cycle, path, star, wheel };

inline std::optional<Family> parse_family(std::string_view name) {
    if (name == "complete") return Family::complete;
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "star") return Family::star;
    if (name == "wheel") return Family::wheel;
    return std::nullopt;
}

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    }
    return "?";
}

/// Smallest accepted size parameter.
inline std::size_t family_minimum(Family f) {
    switch (f) {
    case Family::cycle:
    case Family::wheel: return 3;
    default: return 1;
    }
}

/// complete m: K_m on 0..m-1. cycle n, path n: n vertices 0..n-1.
/// star n and wheel n: hub 0 joined to rim vertices 1..n; the wheel's rim is
/// a cycle, so wheel 4 has 5 vertices and 8 edges.
inline Graph generate(Family family, std::size_t n) {
    if (n < family_minimum(family)) {
        throw GraphError(std::string(family_name(family)) + " needs a size of at least " +
                         std::to_string(family_minimum(family)) + ", got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    const auto id = [](std::size_t i) { return static_cast<VertexId>(i); };
    switch (family) {
    case Family::complete:
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                edges.emplace_back(id(a), id(b));
            }
        }
        return build_graph(n, edges);
    case Family::cycle:
        for (std::size_t a = 0; a < n; ++a) {
            edges.emplace_back(id(a), id((a + 1) % n));
        }
        return build_graph(n, edges);
    case Family::path:
        for (std::size_t a = 0; a + 1 < n; ++a) {
            edges.emplace_back(id(a), id(a + 1));
        }
        return build_graph(n, edges);
    case Family::star:
    case Family::wheel:
        for (std::size_t a = 1; a <= n; ++a) {
            edges.emplace_back(0, id(a));
            if (family == Family::wheel) {
                edges.emplace_back(id(a), id(a % n + 1));
            }
        }
        return build_graph(n + 1, edges);
    }
    throw GraphError("unknown family");
}

inline Graph complete_graph(std::size_t m) { return generate(Family::complete, m); }
inline Graph cycle_graph(std::size_t n) { return generate(Family::cycle, n); }
inline Graph path_graph(std::size_t n) { return generate(Family::path, n); }
inline Graph star_graph(std::size_t n) { return generate(Family::star, n); }
inline Graph wheel_graph(std::size_t n) { return generate(Family::wheel, n); }

/// G(n, p): each pair u < v, visited in lexicographic order, is kept when a
/// uniform draw from [0, 1) falls below p.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw GraphError("edge probability must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rng.unit() < p) {
                edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
            }
        }
    }
    return build_graph(n, edges);
}

/// rows x cols grid with wraparound; vertex (r, c) has id r*cols + c. Each
/// cell gets the right, down, and down-right diagonal edges, so every cell is
/// split along the same diagonal. Needs rows, cols >= 3.
inline Graph triangulated_torus(std::size_t rows, std::size_t cols) {
    if (rows < 3 || cols < 3) {
        throw GraphError("torus grid needs at least 3 rows and 3 columns");
    }
    const auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>((r % rows) * cols + c % cols); };
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            edges.emplace_back(id(r, c), id(r, c + 1));
            edges.emplace_back(id(r, c), id(r + 1, c));
            edges.emplace_back(id(r, c), id(r + 1, c + 1));
        }
    }
    return build_graph(rows * cols, edges);
}

/// 16-vertex torus, f-vector (16, 48, 32).
inline Graph torus_16() { return triangulated_torus(4, 4); }

/// Barycentric refinement G_1. Vertex i of the refinement is simplices[i];
/// simplices are ordered by dimension, then lexicographically.
struct Refinement {
    Graph graph;
    std::vector<Simplex> simplices;
    /// dim(x). Locally injective, not injective.
    VertexFunction dimension;
    /// dim(x) with ties broken by the simplex order; equal to the vertex id.
    VertexFunction rank;

    VertexId id_of(const Simplex& x) const {
        const auto it = std::lower_bound(simplices.begin(), simplices.end(), x, [](const Simplex& a, const Simplex& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        if (it == simplices.end() || *it != x) {
            throw GraphError("simplex is not a clique of the refined graph");
        }
        return static_cast<VertexId>(it - simplices.begin());
    }
};

inline Refinement barycentric(const Graph& g) {
    Refinement r;
    r.simplices = enumerate_simplices(g).simplices;
    const std::size_t m = r.simplices.size();
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const auto& x = r.simplices[a];
            const auto& y = r.simplices[b];
            // order puts smaller simplices first, so only y can contain x
            if (x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end())) {
                edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
            }
        }
    }
    r.graph = build_graph(m, edges);
    std::map<VertexId, VertexFunction::Rank> dim;
    std::map<VertexId, VertexFunction::Rank> rank;
    for (std::size_t i = 0; i < m; ++i) {
        dim.emplace(static_cast<VertexId>(i), static_cast<VertexFunction::Rank>(r.simplices[i].size() - 1));
        rank.emplace(static_cast<VertexId>(i), static_cast<VertexFunction::Rank>(i));
    }
    r.dimension = VertexFunction(std::move(dim));
    r.rank = VertexFunction(std::move(rank));
    return r;
}

/// Join G + H with the relabelling used to build it: G's vertices become
/// 0..|G|-1 and H's become |G|..|G|+|H|-1, each in id order.
struct JoinResult {
    Graph graph;
    std::map<VertexId, VertexId> left;
    std::map<VertexId, VertexId> right;
};

inline JoinResult join_with_maps(const Graph& g, const Graph& h) {
    JoinResult j;
    for (std::size_t i = 0; i < g.size(); ++i) {
        j.left.emplace(g.id(i), static_cast<VertexId>(i));
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        j.right.emplace(h.id(i), static_cast<VertexId>(g.size() + i));
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(j.left.at(u), j.left.at(v));
    }
    for (const auto& [u, v] : h.edges()) {
        edges.emplace_back(j.right.at(u), j.right.at(v));
    }
    for (const auto& [gu, a] : j.left) {
        for (const auto& [hu, b] : j.right) {
            edges.emplace_back(a, b);
        }
    }
    j.graph = build_graph(g.size() + h.size(), edges);
    return j;
}

inline Graph join(const Graph& g, const Graph& h) { return join_with_maps(g, h).graph; }

} // namespace cliquepoly
