#pragma once

#include "cliques.hpp"
#include "fcalc.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "poly.hpp"

#include <algorithm>
#include <vector>

// Exponent convention: f_{G,H}(t,s) = sum_{i,j} f_ij t^i s^j where i and j
// are simplex DIMENSIONS. The cardinality convention multiplies everything by
// t*s; both agree at (t, s) = (-1, -1).

namespace cliquepoly {

/// Sorted vertex ids of a clique.
using Simplex = std::vector<VertexId>;

inline unsigned dimension(const Simplex& x) { return static_cast<unsigned>(x.size()) - 1; }

/// (-1)^dim
inline int wu_sign(const Simplex& x) { return x.size() % 2 == 1 ? 1 : -1; }

struct SimplexList {
    /// Ordered by size, then lexicographically.
    std::vector<Simplex> simplices;

    std::size_t size() const noexcept { return simplices.size(); }
    bool empty() const noexcept { return simplices.empty(); }
};

inline SimplexList enumerate_simplices(const Graph& g) {
    SimplexList list;
    for_each_clique(g, [&](std::span<const Graph::Local> c) {
        Simplex x;
        x.reserve(c.size());
        for (const auto l : c) {
            x.push_back(g.id(l));
        }
        list.simplices.push_back(std::move(x));
    });
    std::sort(list.simplices.begin(), list.simplices.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return list;
}

inline bool intersects(std::span<const VertexId> a, std::span<const VertexId> b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

inline bool share_vertex(const Graph& a, const Graph& b) { return intersects(a.ids(), b.ids()); }

/// Oracle: every pair (x in G, y in H) with a common vertex adds t^dim(x) s^dim(y).
inline BiPoly f_matrix_bruteforce(const Graph& g, const Graph& h) {
    if (!share_vertex(g, h)) {
        return {};
    }
    const auto xs = enumerate_simplices(g);
    const auto ys = enumerate_simplices(h);
    std::map<BiPoly::Key, std::uint64_t> counts;
    for (const auto& x : xs.simplices) {
        for (const auto& y : ys.simplices) {
            if (intersects(x, y)) {
                ++counts[{dimension(x), dimension(y)}];
            }
        }
    }
    BiPoly p;
    for (const auto& [k, c] : counts) {
        p.add_term(k.first, k.second, Integer(c));
    }
    return p;
}

/// Sum over intersecting pairs of (-1)^dim(x) (-1)^dim(y), straight from the definition.
inline Integer wu_characteristic(const Graph& g, const Graph& h) {
    const auto xs = enumerate_simplices(g);
    const auto ys = enumerate_simplices(h);
    std::int64_t omega = 0;
    for (const auto& x : xs.simplices) {
        for (const auto& y : ys.simplices) {
            if (intersects(x, y)) {
                omega += wu_sign(x) * wu_sign(y);
            }
        }
    }
    return Integer(omega);
}

inline Integer wu_characteristic(const Graph& g) { return wu_characteristic(g, g); }

/// Each intersecting pair (x, y) contributes w(x)w(y)/|x| to every vertex of x,
/// where |x| is the number of vertices of x.
inline Rational wu_curvature(const Graph& g, VertexId v) {
    g.index_of(v);
    const auto xs = enumerate_simplices(g);
    Rational k = 0;
    for (const auto& x : xs.simplices) {
        if (!std::binary_search(x.begin(), x.end(), v)) {
            continue;
        }
        std::int64_t signed_pairs = 0;
        for (const auto& y : xs.simplices) {
            if (intersects(x, y)) {
                signed_pairs += wu_sign(x) * wu_sign(y);
            }
        }
        k += Rational(Integer(signed_pairs), Integer(static_cast<long long>(x.size())));
    }
    return k;
}

/// Dimension exponents to cardinality exponents (multiply by t*s).
inline BiPoly to_cardinality_exponents(const BiPoly& p) { return p.shifted(1, 1); }

inline BiPoly from_cardinality_exponents(const BiPoly& p) {
    BiPoly out;
    for (const auto& [k, c] : p.terms()) {
        if (k.first == 0 || k.second == 0) {
            throw PolyError("not a cardinality-exponent polynomial: has a term with a zero exponent");
        }
        out.add_term(k.first - 1, k.second - 1, c);
    }
    return out;
}

namespace detail {

inline BiPoly inclusion_exclusion(const Graph& ball_v, const Graph& sphere_v, const Graph& ball_w,
                                  const Graph& sphere_w, auto&& f_matrix) {
    if (!share_vertex(ball_v, ball_w)) {
        return {};
    }
    BiPoly p = f_matrix(ball_v, ball_w);
    p -= f_matrix(ball_v, sphere_w);
    p -= f_matrix(sphere_v, ball_w);
    p += f_matrix(sphere_v, sphere_w);
    return p;
}

} // namespace detail

/// Four-term inclusion-exclusion over sub-level balls and spheres: counts the
/// intersecting pairs (x, y) whose g-maximum is v and whose h-maximum is w.
inline BiPoly pair_index(const Graph& g, const Graph& h, const VertexFunction& fg, const VertexFunction& fh, VertexId v,
                         VertexId w) {
    require_locally_injective(g, fg);
    require_locally_injective(h, fh);
    return detail::inclusion_exclusion(sub_level_ball(g, fg, v), sub_level_sphere(g, fg, v), sub_level_ball(h, fh, w),
                                       sub_level_sphere(h, fh, w), f_matrix_bruteforce);
}

/// Integer pair index: pair_index at (-1, -1).
inline Integer pair_index_value(const Graph& g, const Graph& h, const VertexFunction& fg, const VertexFunction& fh,
                                VertexId v, VertexId w) {
    return bipoly_eval(pair_index(g, h, fg, fh, v, w), Integer(-1), Integer(-1));
}

struct IntersectionOptions {
    /// Pairs of graphs with at most this many vertices each are enumerated directly.
    std::size_t direct_cutoff = 15;
    /// When G = H, evaluate only v <= w and mirror with t <-> s.
    bool exploit_symmetry = true;
    /// Also compute the unmirrored sum at the top level and require equality.
#ifdef NDEBUG
    bool check_symmetry = false;
#else
    bool check_symmetry = true;
#endif
    /// Worker count for the top-level (v, w) double sum.
    unsigned threads = 1;
    bool memoize = true;
    std::size_t memo_capacity = std::size_t{1} << 20;
};

namespace detail {

class IntersectionSolver {
public:
    explicit IntersectionSolver(const IntersectionOptions& options)
        : options_(options)
        , memo_(options.memoize, options.memo_capacity) {}

    BiPoly run(const Graph& a, const Graph& b, std::uint64_t seed) {
        return solve(a, b, mix_seed(seed, {a.size(), b.size()}), true);
    }

private:
    struct Pieces {
        std::vector<Graph> balls;
        std::vector<Graph> spheres;
    };

    static Pieces pieces(const Graph& g, std::span<const std::uint32_t> ranks) {
        Pieces p;
        p.balls.reserve(g.size());
        p.spheres.reserve(g.size());
        for (std::size_t x = 0; x < g.size(); ++x) {
            auto lower = below(g, ranks, x);
            p.spheres.push_back(g.induced_local(lower));
            lower.insert(std::upper_bound(lower.begin(), lower.end(), static_cast<Graph::Local>(x)),
                         static_cast<Graph::Local>(x));
            p.balls.push_back(g.induced_local(lower));
        }
        return p;
    }

    static std::vector<VertexId> pair_key(const Graph& a, const Graph& b) {
        std::vector<VertexId> key(a.ids().begin(), a.ids().end());
        key.push_back(~VertexId{0});
        key.insert(key.end(), b.ids().begin(), b.ids().end());
        return key;
    }

    BiPoly solve(const Graph& a, const Graph& b, std::uint64_t task, bool top) {
        if (a.empty() || b.empty() || !share_vertex(a, b)) {
            return {};
        }
        if (a.size() <= options_.direct_cutoff && b.size() <= options_.direct_cutoff) {
            return f_matrix_bruteforce(a, b);
        }
        auto key = pair_key(a, b);
        if (!top) {
            if (auto hit = memo_.find(key)) {
                return *hit;
            }
        }

        const bool same = a == b;
        const auto ranks_a = draw_ranks(a.size(), mix_seed(task, {0}));
        const auto ranks_b = same ? ranks_a : draw_ranks(b.size(), mix_seed(task, {1}));
        const Pieces pa = pieces(a, ranks_a);
        const Pieces pb = same ? Pieces{} : pieces(b, ranks_b);
        const Pieces& pbr = same ? pa : pb;

        const std::size_t total = a.size() + b.size();
        auto pair = [&](std::size_t v, std::size_t w) {
            const std::uint64_t pair_seed = mix_seed(task, {a.id(v), b.id(w)});
            return inclusion_exclusion(pa.balls[v], pa.spheres[v], pbr.balls[w], pbr.spheres[w],
                                       [&](const Graph& x, const Graph& y) {
                                           if (x.size() + y.size() < total) {
                                               return solve(x, y, mix_seed(pair_seed, {x.size(), y.size()}), false);
                                           }
                                           return f_matrix_bruteforce(x, y);
                                       });
        };

        const bool mirror = same && options_.exploit_symmetry;
        std::vector<BiPoly> rows(a.size());
        auto row = [&](std::size_t v) {
            BiPoly r;
            for (std::size_t w = mirror ? v : 0; w < b.size(); ++w) {
                const BiPoly p = pair(v, w);
                r += p;
                if (mirror && w != v) {
                    r += p.swapped();
                }
            }
            rows[v] = std::move(r);
        };
        if (top) {
            parallel_for(a.size(), options_.threads, row);
        } else {
            for (std::size_t v = 0; v < a.size(); ++v) {
                row(v);
            }
        }
        BiPoly result;
        for (const auto& r : rows) {
            result += r;
        }

        if (top && mirror && options_.check_symmetry) {
            BiPoly full;
            for (std::size_t v = 0; v < a.size(); ++v) {
                for (std::size_t w = 0; w < b.size(); ++w) {
                    full += pair(v, w);
                }
            }
            if (full != result) {
                throw InconsistencyError("mirrored f-matrix sum differs from the full double sum");
            }
        }
        if (!top) {
            memo_.insert(std::move(key), result);
        }
        return result;
    }

    IntersectionOptions options_;
    SubgraphMemo<BiPoly> memo_;
};

} // namespace detail

/// f_{G,H}(t,s) as the sum of pair indices over all (v, w), with seeded random
/// orderings; pairs of small graphs are enumerated directly.
inline BiPoly f_matrix_ph(const Graph& g, const Graph& h, std::uint64_t seed, const IntersectionOptions& options = {}) {
    return detail::IntersectionSolver(options).run(g, h, seed);
}

} // namespace cliquepoly
