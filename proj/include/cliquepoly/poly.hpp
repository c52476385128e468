#pragma once

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliquepoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial; coefficient k multiplies t^k.
/// Canonical form: no trailing zeros, so the zero polynomial has no coefficients.
template <typename Coeff>
class DensePoly {
public:
    using coefficient_type = Coeff;

    DensePoly() = default;

    explicit DensePoly(std::vector<Coeff> coeffs)
        : coeffs_(std::move(coeffs)) {
        trim();
    }

    DensePoly(std::initializer_list<Coeff> coeffs)
        : coeffs_(coeffs) {
        trim();
    }

    static DensePoly constant(Coeff c) { return DensePoly(std::vector<Coeff>{std::move(c)}); }

    static DensePoly monomial(Coeff c, std::size_t degree) {
        std::vector<Coeff> v(degree + 1);
        v[degree] = std::move(c);
        return DensePoly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^k; zero beyond the degree.
    Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        trim();
        return *this;
    }

    DensePoly& operator-=(const DensePoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        trim();
        return *this;
    }

    DensePoly& operator*=(const Coeff& c) {
        for (auto& x : coeffs_) {
            x *= c;
        }
        trim();
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(DensePoly a, const Coeff& c) { return a *= c; }
    friend DensePoly operator*(const Coeff& c, DensePoly a) { return a *= c; }

    friend DensePoly operator-(DensePoly a) {
        for (auto& x : a.coeffs_) {
            x = -x;
        }
        return a;
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return DensePoly(std::move(out));
    }

    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    /// Multiplies by t^k.
    DensePoly shifted(std::size_t k) const {
        if (is_zero()) {
            return {};
        }
        std::vector<Coeff> out(k, Coeff(0));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return DensePoly(std::move(out));
    }

    DensePoly derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<Coeff> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            out[k - 1] = coeffs_[k] * Coeff(static_cast<long long>(k));
        }
        return DensePoly(std::move(out));
    }

    /// Horner evaluation in any ring the coefficients convert into.
    template <typename T>
    T evaluate(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + T(*it);
        }
        return acc;
    }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Coeff> coeffs_;
};

using UniPoly = DensePoly<Integer>;
using RatPoly = DensePoly<Rational>;

inline UniPoly poly_add(const UniPoly& p, const UniPoly& q) { return p + q; }
inline UniPoly poly_mul(const UniPoly& p, const UniPoly& q) { return p * q; }

inline Rational poly_eval(const UniPoly& p, const Rational& t) { return p.evaluate(t); }
inline Rational poly_eval(const RatPoly& p, const Rational& t) { return p.evaluate(t); }

/// (1+t)^m, computed as a row of Pascal's triangle.
inline UniPoly one_plus_t_pow(std::size_t m) {
    std::vector<Integer> row{1};
    row.reserve(m + 1);
    for (std::size_t k = 1; k <= m; ++k) {
        row.push_back(row.back() * static_cast<long long>(m - k + 1) / static_cast<long long>(k));
    }
    return UniPoly(std::move(row));
}

inline RatPoly to_rational(const UniPoly& p) {
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.emplace_back(c);
    }
    return RatPoly(std::move(out));
}

/// Integer polynomial if every coefficient has denominator 1.
inline std::optional<UniPoly> to_integer(const RatPoly& p) {
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (boost::multiprecision::denominator(c) != 1) {
            return std::nullopt;
        }
        out.push_back(boost::multiprecision::numerator(c));
    }
    return UniPoly(std::move(out));
}

/// F(t) = integral of p from 0 to t.
inline RatPoly antiderivative(const UniPoly& p) {
    std::vector<Rational> out(p.coeffs().size() + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        out[k + 1] = Rational(p.coeffs()[k], Integer(static_cast<long long>(k + 1)));
    }
    return RatPoly(std::move(out));
}

/// p(t)/t for p with p(0) = 0.
template <typename Coeff>
DensePoly<Coeff> divide_by_t(const DensePoly<Coeff>& p) {
    if (p.is_zero()) {
        return {};
    }
    if (p.coeffs().front() != 0) {
        throw PolyError("divide_by_t: constant term is not zero");
    }
    return DensePoly<Coeff>(std::vector<Coeff>(p.coeffs().begin() + 1, p.coeffs().end()));
}

/// Sparse bivariate integer polynomial; key (i, j) multiplies t^i s^j.
class BiPoly {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;

    BiPoly() = default;

    static BiPoly monomial(Integer c, std::uint32_t i, std::uint32_t j) {
        BiPoly p;
        p.add_term(i, j, std::move(c));
        return p;
    }

    void add_term(std::uint32_t i, std::uint32_t j, const Integer& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    Integer coeff(std::uint32_t i, std::uint32_t j) const {
        const auto it = terms_.find(Key{i, j});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    const std::map<Key, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Largest t-degree and s-degree present; (-1, -1) for zero.
    std::pair<long, long> degrees() const {
        long dt = -1;
        long ds = -1;
        for (const auto& [k, c] : terms_) {
            dt = std::max<long>(dt, k.first);
            ds = std::max<long>(ds, k.second);
        }
        return {dt, ds};
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) {
            add_term(k.first, k.second, c);
        }
        return *this;
    }

    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) {
            add_term(k.first, k.second, -c);
        }
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
            }
        }
        return out;
    }

    /// Exchanges the roles of t and s.
    BiPoly swapped() const {
        BiPoly out;
        for (const auto& [k, c] : terms_) {
            out.terms_.emplace(Key{k.second, k.first}, c);
        }
        return out;
    }

    /// Multiplies by t^a s^b.
    BiPoly shifted(std::uint32_t a, std::uint32_t b) const {
        BiPoly out;
        for (const auto& [k, c] : terms_) {
            out.terms_.emplace(Key{k.first + a, k.second + b}, c);
        }
        return out;
    }

    template <typename T>
    T evaluate(const T& t, const T& s) const {
        T acc(0);
        for (const auto& [k, c] : terms_) {
            T term(c);
            for (std::uint32_t e = 0; e < k.first; ++e) {
                term *= t;
            }
            for (std::uint32_t e = 0; e < k.second; ++e) {
                term *= s;
            }
            acc += term;
        }
        return acc;
    }

    /// Dense matrix, rows indexed by the t-degree, columns by the s-degree.
    std::vector<std::vector<Integer>> dense() const {
        const auto [dt, ds] = degrees();
        std::vector<std::vector<Integer>> m(static_cast<std::size_t>(dt + 1),
                                            std::vector<Integer>(static_cast<std::size_t>(ds + 1)));
        for (const auto& [k, c] : terms_) {
            m[k.first][k.second] = c;
        }
        return m;
    }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    std::map<Key, Integer> terms_;
};

inline Integer bipoly_eval(const BiPoly& p, const Integer& t, const Integer& s) { return p.evaluate(t, s); }

/// Clique counts by dimension: counts[k] is the number of k-simplices.
struct FVector {
    std::vector<Integer> counts;

    /// Largest dimension, -1 for the empty graph.
    long dimension() const noexcept { return static_cast<long>(counts.size()) - 1; }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// 1 + f_0 t + ... + f_d t^{d+1}.
inline UniPoly f_vector_to_poly(const FVector& fv) {
    std::vector<Integer> c;
    c.reserve(fv.counts.size() + 1);
    c.emplace_back(1);
    c.insert(c.end(), fv.counts.begin(), fv.counts.end());
    return UniPoly(std::move(c));
}

inline FVector poly_to_f_vector(const UniPoly& p) {
    if (p.coeff(0) != 1) {
        throw PolyError("not an f-function: constant term is not 1");
    }
    FVector fv;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] <= 0) {
            throw PolyError("not an f-function: coefficient of t^" + std::to_string(k) + " is not positive");
        }
        fv.counts.push_back(p.coeffs()[k]);
    }
    return fv;
}

// Rendering -----------------------------------------------------------------

namespace detail {

inline std::string monomial_text(std::string_view var, std::size_t power) {
    std::string s(var);
    if (power > 1) {
        s += '^';
        s += std::to_string(power);
    }
    return s;
}

template <typename Coeff>
std::string coeff_text(const Coeff& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

inline void append_term(std::string& out, bool negative, const std::string& magnitude, const std::string& vars,
                        std::string_view mul) {
    if (out.empty()) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    if (vars.empty()) {
        out += magnitude;
    } else if (magnitude == "1") {
        out += vars;
    } else {
        out += magnitude;
        out += mul;
        out += vars;
    }
}

} // namespace detail

/// Renders `1 + 4*t + 4*t^2`; `mul` is placed between coefficient and variable.
template <typename Coeff>
std::string to_string(const DensePoly<Coeff>& p, std::string_view var = "t", std::string_view mul = "*") {
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Coeff& c = p.coeffs()[k];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const std::string mag = detail::coeff_text(negative ? Coeff(-c) : c);
        detail::append_term(out, negative, mag, k == 0 ? std::string() : detail::monomial_text(var, k), mul);
    }
    return out.empty() ? "0" : out;
}

/// Renders `2 + 2*s + 2*t + t*s` in (t-degree, s-degree) order.
inline std::string to_string(const BiPoly& p, std::string_view t = "t", std::string_view s = "s",
                             std::string_view mul = "*") {
    std::string out;
    for (const auto& [k, c] : p.terms()) {
        std::string vars;
        if (k.first > 0) {
            vars += detail::monomial_text(t, k.first);
        }
        if (k.second > 0) {
            if (!vars.empty()) {
                vars += mul;
            }
            vars += detail::monomial_text(s, k.second);
        }
        const bool negative = c < 0;
        detail::append_term(out, negative, detail::coeff_text(negative ? Integer(-c) : c), vars, mul);
    }
    return out.empty() ? "0" : out;
}

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const DensePoly<Coeff>& p) {
    return os << to_string(p);
}

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << to_string(p); }

inline std::ostream& operator<<(std::ostream& os, const FVector& fv) {
    os << '(';
    for (std::size_t k = 0; k < fv.counts.size(); ++k) {
        os << (k ? ", " : "") << fv.counts[k];
    }
    return os << ')';
}

} // namespace cliquepoly
