#pragma once

#include "graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cliquepoly {

namespace detail {

template <typename Visitor>
void extend_cliques(const Graph& g, std::vector<Graph::Local>& clique, const std::vector<Graph::Local>& candidates,
                    Visitor& visit) {
    visit(std::span<const Graph::Local>(clique));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Graph::Local u = candidates[i];
        std::vector<Graph::Local> next;
        const auto nb = g.neighbors(u);
        // candidates after u that are also neighbors of u; both lists are sorted
        auto it = std::upper_bound(nb.begin(), nb.end(), u);
        for (std::size_t j = i + 1; j < candidates.size() && it != nb.end();) {
            if (*it < candidates[j]) {
                ++it;
            } else if (candidates[j] < *it) {
                ++j;
            } else {
                next.push_back(candidates[j]);
                ++it;
                ++j;
            }
        }
        clique.push_back(u);
        extend_cliques(g, clique, next, visit);
        clique.pop_back();
    }
}

} // namespace detail

/// Calls visit(span of sorted local indices) once for every nonempty clique.
/// Cliques are grown in increasing local-index order, so each is seen once.
template <typename Visitor>
void for_each_clique(const Graph& g, Visitor&& visit) {
    std::vector<Graph::Local> clique;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto nb = g.neighbors(v);
        std::vector<Graph::Local> candidates(std::upper_bound(nb.begin(), nb.end(), static_cast<Graph::Local>(v)),
                                             nb.end());
        clique.assign(1, static_cast<Graph::Local>(v));
        detail::extend_cliques(g, clique, candidates, visit);
    }
}

/// Clique counts by vertex count minus one, as machine integers.
inline std::vector<std::uint64_t> clique_counts(const Graph& g) {
    std::vector<std::uint64_t> counts;
    for_each_clique(g, [&](std::span<const Graph::Local> c) {
        if (counts.size() < c.size()) {
            counts.resize(c.size());
        }
        ++counts[c.size() - 1];
    });
    return counts;
}

} // namespace cliquepoly
