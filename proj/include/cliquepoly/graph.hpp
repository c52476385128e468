#pragma once

#include "errors.hpp"
#include "seed.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliquepoly {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable finite simple graph.
///
/// Vertices carry opaque ids; internally they are stored sorted by id and
/// addressed by a dense local index, which is what the neighbor lists hold.
/// Induced subgraphs keep the ids of their parent, so the sorted id list is a
/// canonical key for any vertex subset of a common parent.
class Graph {
public:
    using Local = std::uint32_t;

    Graph() = default;

    /// Graph on `ids` (deduplicated) with the given edges between ids.
    /// Duplicate edges collapse; self-loops and unknown endpoints throw.
    static Graph from_edges(std::vector<VertexId> ids, std::span<const Edge> edges) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        Graph g;
        g.ids_ = std::move(ids);
        g.adj_.resize(g.ids_.size());
        for (const auto& [a, b] : edges) {
            if (a == b) {
                throw GraphError("self-loop at vertex " + std::to_string(a));
            }
            const auto la = g.local_index(a);
            const auto lb = g.local_index(b);
            if (!la || !lb) {
                throw GraphError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                 ") has an endpoint outside the vertex set");
            }
            g.adj_[*la].push_back(static_cast<Local>(*lb));
            g.adj_[*lb].push_back(static_cast<Local>(*la));
        }
        g.finish();
        return g;
    }

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const VertexId> ids() const& noexcept { return ids_; }
    // a span into a temporary would dangle
    std::span<const VertexId> ids() const&& = delete;
    VertexId id(std::size_t local) const { return ids_[local]; }

    std::optional<std::size_t> local_index(VertexId id) const noexcept {
        const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - ids_.begin());
    }

    /// Like local_index but throws GraphError for unknown ids.
    std::size_t index_of(VertexId id) const {
        if (const auto l = local_index(id)) {
            return *l;
        }
        throw GraphError("vertex " + std::to_string(id) + " is not in the graph");
    }

    bool contains(VertexId id) const noexcept { return local_index(id).has_value(); }

    std::span<const Local> neighbors(std::size_t local) const& { return adj_[local]; }
    std::span<const Local> neighbors(std::size_t local) const&& = delete;
    std::size_t degree(std::size_t local) const { return adj_[local].size(); }

    bool adjacent(std::size_t a, std::size_t b) const {
        const auto& na = adj_[a];
        return std::binary_search(na.begin(), na.end(), static_cast<Local>(b));
    }

    bool has_edge(VertexId a, VertexId b) const {
        const auto la = local_index(a);
        const auto lb = local_index(b);
        return la && lb && adjacent(*la, *lb);
    }

    /// Edges as id pairs (u < v), sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t a = 0; a < adj_.size(); ++a) {
            for (const Local b : adj_[a]) {
                if (a < b) {
                    out.emplace_back(ids_[a], ids_[b]);
                }
            }
        }
        return out;
    }

    bool is_complete() const noexcept {
        const std::size_t n = ids_.size();
        return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
    }

    /// Induced subgraph on a sorted, duplicate-free list of local indices.
    Graph induced_local(std::span<const Local> locals) const {
        constexpr Local absent = ~Local{0};
        std::vector<Local> position(ids_.size(), absent);
        for (std::size_t i = 0; i < locals.size(); ++i) {
            position[locals[i]] = static_cast<Local>(i);
        }
        Graph g;
        g.ids_.reserve(locals.size());
        g.adj_.resize(locals.size());
        std::size_t twice_edges = 0;
        for (std::size_t i = 0; i < locals.size(); ++i) {
            g.ids_.push_back(ids_[locals[i]]);
            auto& row = g.adj_[i];
            for (const Local nb : adj_[locals[i]]) {
                if (position[nb] != absent) {
                    row.push_back(position[nb]);
                }
            }
            // parent rows are sorted and positions are monotone in the parent index
            twice_edges += row.size();
        }
        g.edge_count_ = twice_edges / 2;
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.ids_ == b.ids_ && a.adj_ == b.adj_;
    }

private:
    void finish() {
        std::size_t twice_edges = 0;
        for (auto& row : adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            twice_edges += row.size();
        }
        edge_count_ = twice_edges / 2;
    }

    std::vector<VertexId> ids_;
    std::vector<std::vector<Local>> adj_;
    std::size_t edge_count_ = 0;
};

/// Graph on ids 0..n-1.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    return Graph::from_edges(std::move(ids), edges);
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Induced subgraph on a set of ids of G.
inline Graph induced(const Graph& g, std::span<const VertexId> vertex_ids) {
    std::vector<Graph::Local> locals;
    locals.reserve(vertex_ids.size());
    for (const VertexId id : vertex_ids) {
        locals.push_back(static_cast<Graph::Local>(g.index_of(id)));
    }
    std::sort(locals.begin(), locals.end());
    locals.erase(std::unique(locals.begin(), locals.end()), locals.end());
    return g.induced_local(locals);
}

inline Graph induced(const Graph& g, std::initializer_list<VertexId> vertex_ids) {
    return induced(g, std::span<const VertexId>(vertex_ids.begin(), vertex_ids.size()));
}

/// Relabels the vertices to 0..n-1 in id order.
inline Graph compact(const Graph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (const auto b : g.neighbors(a)) {
            if (a < b) {
                edges.emplace_back(static_cast<VertexId>(a), b);
            }
        }
    }
    return build_graph(g.size(), edges);
}

/// Integer-valued vertex labelling. Only the order of ranks matters.
class VertexFunction {
public:
    using Rank = std::int64_t;

    VertexFunction() = default;
    explicit VertexFunction(std::map<VertexId, Rank> ranks)
        : ranks_(std::move(ranks)) {}

    /// Ranks listed in the order of g.ids().
    static VertexFunction from_ranks(const Graph& g, std::span<const Rank> ranks) {
        if (ranks.size() != g.size()) {
            throw GraphError("rank list length does not match vertex count");
        }
        std::map<VertexId, Rank> m;
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            m.emplace(g.id(i), ranks[i]);
        }
        return VertexFunction(std::move(m));
    }

    Rank rank(VertexId id) const {
        const auto it = ranks_.find(id);
        if (it == ranks_.end()) {
            throw GraphError("vertex function has no rank for vertex " + std::to_string(id));
        }
        return it->second;
    }

    std::optional<Rank> find(VertexId id) const {
        const auto it = ranks_.find(id);
        return it == ranks_.end() ? std::nullopt : std::optional<Rank>(it->second);
    }

    const std::map<VertexId, Rank>& ranks() const noexcept { return ranks_; }
    std::size_t size() const noexcept { return ranks_.size(); }

    bool is_injective() const {
        std::vector<Rank> values;
        values.reserve(ranks_.size());
        for (const auto& [id, r] : ranks_) {
            values.push_back(r);
        }
        std::sort(values.begin(), values.end());
        return std::adjacent_find(values.begin(), values.end()) == values.end();
    }

    friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

private:
    std::map<VertexId, Rank> ranks_;
};

/// Ranks of g's vertices in local order; throws if any vertex is missing.
inline std::vector<VertexFunction::Rank> local_ranks(const Graph& g, const VertexFunction& f) {
    std::vector<VertexFunction::Rank> out;
    out.reserve(g.size());
    for (const VertexId id : g.ids()) {
        out.push_back(f.rank(id));
    }
    return out;
}

inline Graph unit_sphere(const Graph& g, VertexId v) {
    const std::size_t lv = g.index_of(v);
    const auto nb = g.neighbors(lv);
    return g.induced_local(nb);
}

namespace detail {

inline std::vector<Graph::Local> lower_neighbors(const Graph& g, const VertexFunction& f, std::size_t lv) {
    const auto rv = f.rank(g.id(lv));
    std::vector<Graph::Local> below;
    for (const auto nb : g.neighbors(lv)) {
        const auto r = f.rank(g.id(nb));
        if (r == rv) {
            throw GraphError("vertex function takes equal values on edge (" + std::to_string(g.id(lv)) + ", " +
                             std::to_string(g.id(nb)) + ")");
        }
        if (r < rv) {
            below.push_back(nb);
        }
    }
    return below;
}

} // namespace detail

/// Neighbors of v where f is below f(v). Ties across an edge throw.
inline Graph sub_level_sphere(const Graph& g, const VertexFunction& f, VertexId v) {
    const std::size_t lv = g.index_of(v);
    return g.induced_local(detail::lower_neighbors(g, f, lv));
}

/// sub_level_sphere plus v itself.
inline Graph sub_level_ball(const Graph& g, const VertexFunction& f, VertexId v) {
    const std::size_t lv = g.index_of(v);
    auto locals = detail::lower_neighbors(g, f, lv);
    locals.insert(std::upper_bound(locals.begin(), locals.end(), static_cast<Graph::Local>(lv)),
                  static_cast<Graph::Local>(lv));
    return g.induced_local(locals);
}

/// Uniform random permutation of ranks 0..n-1, determined by seed.
inline VertexFunction random_vertex_function(const Graph& g, std::uint64_t seed) {
    std::vector<VertexFunction::Rank> ranks(g.size());
    std::iota(ranks.begin(), ranks.end(), VertexFunction::Rank{0});
    Rng rng(seed);
    rng.shuffle(ranks);
    return VertexFunction::from_ranks(g, ranks);
}

inline bool is_locally_injective(const Graph& g, const VertexFunction& f) {
    const auto ranks = local_ranks(g, f);
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (const auto b : g.neighbors(a)) {
            if (ranks[a] == ranks[b]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace cliquepoly
