#pragma once

#include "cliques.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "seed.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace cliquepoly {

struct ComputeOptions {
    /// Cache results per induced vertex set for the duration of one call.
    bool memoize = true;
    /// Entries beyond this are dropped rather than inserted.
    std::size_t memo_capacity = std::size_t{1} << 20;
    /// Worker count for the top-level per-vertex sum.
    unsigned threads = 1;
};

namespace detail {

struct IdSequenceHash {
    std::size_t operator()(const std::vector<VertexId>& key) const noexcept {
        return static_cast<std::size_t>(mix_seed(0, std::span<const VertexId>(key)));
    }
};

/// Insert-if-absent cache keyed by sorted vertex-id sequence. Safe for
/// concurrent use; a pure cache, so a dropped or raced entry changes nothing.
template <typename Value>
class SubgraphMemo {
public:
    SubgraphMemo(bool enabled, std::size_t capacity)
        : enabled_(enabled)
        , capacity_(capacity) {}

    std::optional<Value> find(const std::vector<VertexId>& key) const {
        if (!enabled_) {
            return std::nullopt;
        }
        std::shared_lock lock(mutex_);
        const auto it = map_.find(key);
        if (it == map_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void insert(std::vector<VertexId> key, const Value& value) {
        if (!enabled_) {
            return;
        }
        std::unique_lock lock(mutex_);
        if (map_.size() >= capacity_) {
            return;
        }
        map_.try_emplace(std::move(key), value);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    bool enabled_;
    std::size_t capacity_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::vector<VertexId>, Value, IdSequenceHash> map_;
};

inline std::vector<VertexId> key_of(const Graph& g) { return {g.ids().begin(), g.ids().end()}; }

inline std::vector<std::uint32_t> draw_ranks(std::size_t n, std::uint64_t seed) {
    std::vector<std::uint32_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0u);
    Rng rng(seed);
    rng.shuffle(ranks);
    return ranks;
}

inline std::vector<Graph::Local> below(const Graph& g, std::span<const std::uint32_t> ranks, std::size_t x) {
    std::vector<Graph::Local> out;
    for (const auto y : g.neighbors(x)) {
        if (ranks[y] < ranks[x]) {
            out.push_back(y);
        }
    }
    return out;
}

/// f_G(t) = 1 + t * sum_x f_{S_g(x)}(t), with a fresh random ordering g at
/// every level. A task seeded with s draws its ordering from s and hands
/// mix(s, child ids) to each child.
class PoincareHopfSolver {
public:
    explicit PoincareHopfSolver(const ComputeOptions& options)
        : options_(options)
        , memo_(options.memoize, options.memo_capacity) {}

    UniPoly run(const Graph& g, std::uint64_t seed) {
        const std::uint64_t task = mix_seed(seed, g.ids());
        if (auto base = base_case(g)) {
            return *base;
        }
        const auto ranks = draw_ranks(g.size(), task);
        std::vector<UniPoly> parts(g.size());
        parallel_for(g.size(), options_.threads, [&](std::size_t x) { parts[x] = child(g, ranks, x, task); });
        UniPoly sum;
        for (const auto& p : parts) {
            sum += p;
        }
        return UniPoly{1} + sum.shifted(1);
    }

private:
    static std::optional<UniPoly> base_case(const Graph& g) {
        if (g.empty()) {
            return UniPoly{1};
        }
        if (g.is_complete()) {
            return one_plus_t_pow(g.size());
        }
        return std::nullopt;
    }

    UniPoly child(const Graph& g, std::span<const std::uint32_t> ranks, std::size_t x, std::uint64_t task) {
        const Graph s = g.induced_local(below(g, ranks, x));
        return solve(s, mix_seed(task, s.ids()));
    }

    UniPoly solve(const Graph& g, std::uint64_t task) {
        if (auto base = base_case(g)) {
            return *base;
        }
        if (auto hit = memo_.find(key_of(g))) {
            return *hit;
        }
        const auto ranks = draw_ranks(g.size(), task);
        UniPoly sum;
        for (std::size_t x = 0; x < g.size(); ++x) {
            sum += child(g, ranks, x, task);
        }
        UniPoly f = UniPoly{1} + sum.shifted(1);
        memo_.insert(key_of(g), f);
        return f;
    }

    ComputeOptions options_;
    SubgraphMemo<UniPoly> memo_;
};

/// f_G(t) = 1 + sum_x F_{S(x)}(t), recursing on unit spheres.
class GaussBonnetSolver {
public:
    explicit GaussBonnetSolver(const ComputeOptions& options)
        : options_(options)
        , memo_(options.memoize, options.memo_capacity) {}

    UniPoly run(const Graph& g) {
        if (auto base = base_case(g)) {
            return *base;
        }
        std::vector<UniPoly> parts(g.size());
        parallel_for(g.size(), options_.threads,
                     [&](std::size_t x) { parts[x] = solve(g.induced_local(g.neighbors(x))); });
        return integrate(g, parts);
    }

private:
    static std::optional<UniPoly> base_case(const Graph& g) {
        if (g.empty()) {
            return UniPoly{1};
        }
        if (g.is_complete()) {
            return one_plus_t_pow(g.size());
        }
        return std::nullopt;
    }

    // The antiderivative is linear, so the spheres' f-functions are summed
    // first and integrated once.
    static UniPoly integrate(const Graph& g, const std::vector<UniPoly>& sphere_polys) {
        UniPoly sum;
        for (const auto& p : sphere_polys) {
            sum += p;
        }
        const RatPoly f = RatPoly{Rational(1)} + antiderivative(sum);
        auto exact = to_integer(f);
        if (!exact) {
            throw InconsistencyError("Gauss-Bonnet sum has non-integer coefficients on a graph with " +
                                     std::to_string(g.size()) + " vertices: " + to_string(f));
        }
        return *exact;
    }

    UniPoly solve(const Graph& g) {
        if (auto base = base_case(g)) {
            return *base;
        }
        if (auto hit = memo_.find(key_of(g))) {
            return *hit;
        }
        std::vector<UniPoly> parts;
        parts.reserve(g.size());
        for (std::size_t x = 0; x < g.size(); ++x) {
            parts.push_back(solve(g.induced_local(g.neighbors(x))));
        }
        UniPoly f = integrate(g, parts);
        memo_.insert(key_of(g), f);
        return f;
    }

    ComputeOptions options_;
    SubgraphMemo<UniPoly> memo_;
};

} // namespace detail

/// Oracle: explicit clique enumeration.
inline FVector f_vector_bruteforce(const Graph& g) {
    FVector fv;
    for (const auto c : clique_counts(g)) {
        fv.counts.emplace_back(c);
    }
    return fv;
}

/// f-function by the parametrized Poincaré–Hopf recursion. The result does
/// not depend on the seed; the seed only fixes the decomposition.
inline UniPoly f_function_ph(const Graph& g, std::uint64_t seed, const ComputeOptions& options = {}) {
    return detail::PoincareHopfSolver(options).run(g, seed);
}

/// f-function by the Gauss–Bonnet recursion over unit spheres.
inline UniPoly f_function_gb(const Graph& g, const ComputeOptions& options = {}) {
    return detail::GaussBonnetSolver(options).run(g);
}

inline void require_locally_injective(const Graph& g, const VertexFunction& f) {
    if (!is_locally_injective(g, f)) {
        throw GraphError("vertex function is not locally injective");
    }
}

/// f-function of the sub-level sphere S_g(v).
inline UniPoly index_poly(const Graph& g, const VertexFunction& f, VertexId v, std::uint64_t seed = 0) {
    require_locally_injective(g, f);
    return f_function_ph(sub_level_sphere(g, f, v), seed);
}

/// 1 - chi(S_g(v)), i.e. the index polynomial at t = -1.
inline Integer integer_index(const Graph& g, const VertexFunction& f, VertexId v, std::uint64_t seed = 0) {
    return index_poly(g, f, v, seed).evaluate(Integer(-1));
}

struct IndexReport {
    std::map<VertexId, UniPoly> polys;
    std::map<VertexId, Integer> values;
};

inline IndexReport index_report(const Graph& g, const VertexFunction& f, std::uint64_t seed = 0) {
    require_locally_injective(g, f);
    IndexReport report;
    for (const VertexId v : g.ids()) {
        UniPoly p = f_function_ph(sub_level_sphere(g, f, v), seed);
        report.values.emplace(v, p.evaluate(Integer(-1)));
        report.polys.emplace(v, std::move(p));
    }
    return report;
}

/// 1 + t * sum_v i_{g,v}(t).
inline UniPoly index_sum(const IndexReport& report) {
    UniPoly sum;
    for (const auto& [v, p] : report.polys) {
        sum += p;
    }
    return UniPoly{1} + sum.shifted(1);
}

/// chi(G) = 1 - f_G(-1).
inline Integer euler_characteristic(const Graph& g, std::uint64_t seed = 0, const ComputeOptions& options = {}) {
    return 1 - f_function_ph(g, seed, options).evaluate(Integer(-1));
}

/// K(v) = sum_{k>=0} (-1)^k f_{k-1}(S(v)) / (k+1), with f_{-1} = 1.
inline Rational curvature(const Graph& g, VertexId v) {
    const FVector fv = f_vector_bruteforce(unit_sphere(g, v));
    Rational k = 1;
    for (std::size_t i = 0; i < fv.counts.size(); ++i) {
        // term k = i + 1 carries f_i / (i + 2)
        const Rational term(fv.counts[i], Integer(static_cast<long long>(i + 2)));
        if ((i + 1) % 2 == 0) {
            k += term;
        } else {
            k -= term;
        }
    }
    return k;
}

/// K_v(t) with t * K_v(t) = F_{S(v)}(t).
inline RatPoly curvature_poly(const Graph& g, VertexId v) {
    const UniPoly f = f_vector_to_poly(f_vector_bruteforce(unit_sphere(g, v)));
    return divide_by_t(antiderivative(f));
}

struct CurvatureReport {
    std::map<VertexId, Rational> values;
    std::map<VertexId, RatPoly> polys;
    /// Sum of the curvatures; always an integer.
    Integer total;
};

inline CurvatureReport curvature_report(const Graph& g) {
    CurvatureReport report;
    Rational sum = 0;
    for (const VertexId v : g.ids()) {
        const Rational k = curvature(g, v);
        sum += k;
        report.values.emplace(v, k);
        report.polys.emplace(v, curvature_poly(g, v));
    }
    if (boost::multiprecision::denominator(sum) != 1) {
        throw InconsistencyError("curvatures sum to the non-integer " + sum.str());
    }
    report.total = boost::multiprecision::numerator(sum);
    return report;
}

inline constexpr std::size_t max_expectation_vertices = 9;

/// Average of the index polynomial at v over all |V|! rank orderings.
inline RatPoly exact_index_expectation(const Graph& g, VertexId v) {
    if (g.size() > max_expectation_vertices) {
        throw LimitError("exact_index_expectation enumerates all orderings; refusing " + std::to_string(g.size()) +
                         " vertices (limit " + std::to_string(max_expectation_vertices) + ")");
    }
    const std::size_t lv = g.index_of(v);
    const auto nb = g.neighbors(lv);

    // Only which neighbors fall below v matters, so tally orderings per subset.
    std::vector<std::uint64_t> tally(std::size_t{1} << nb.size(), 0);
    std::vector<std::uint32_t> ranks(g.size());
    std::iota(ranks.begin(), ranks.end(), 0u);
    std::uint64_t orderings = 0;
    do {
        std::size_t mask = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (ranks[nb[i]] < ranks[lv]) {
                mask |= std::size_t{1} << i;
            }
        }
        ++tally[mask];
        ++orderings;
    } while (std::next_permutation(ranks.begin(), ranks.end()));

    UniPoly weighted;
    for (std::size_t mask = 0; mask < tally.size(); ++mask) {
        if (tally[mask] == 0) {
            continue;
        }
        std::vector<Graph::Local> subset;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                subset.push_back(nb[i]);
            }
        }
        weighted += f_function_ph(g.induced_local(subset), 0) * Integer(tally[mask]);
    }
    return to_rational(weighted) * Rational(Integer(1), Integer(orderings));
}

/// Checks 1 + t * sum_v i_{g,v}(t) against the clique-enumeration oracle.
inline bool verify_ph_identity(const Graph& g, const VertexFunction& f) {
    const UniPoly expected = f_vector_to_poly(f_vector_bruteforce(g));
    return index_sum(index_report(g, f)) == expected;
}

} // namespace cliquepoly
