#pragma once

#include "poly.hpp"

#include <nlohmann/json.hpp>

#include <limits>

// JSON forms:
//   Integer  -> number when it fits in int64, otherwise a decimal string
//   Rational -> string "p/q" (or "p" when the denominator is 1)
//   UniPoly / RatPoly -> array of coefficients, index = degree
//   BiPoly   -> array of [i, j, c] triples sorted by (i, j)
//   FVector  -> array of counts

namespace cliquepoly {

inline nlohmann::json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw PolyError("json: expected an integer, got " + j.dump());
}

inline nlohmann::json rational_to_json(const Rational& x) { return x.str(); }

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return Rational(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw PolyError("json: expected a rational, got " + j.dump());
}

inline nlohmann::json to_json(const UniPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        out.push_back(integer_to_json(c));
    }
    return out;
}

inline nlohmann::json to_json(const RatPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        out.push_back(rational_to_json(c));
    }
    return out;
}

inline nlohmann::json to_json(const BiPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& [k, c] : p.terms()) {
        out.push_back({k.first, k.second, integer_to_json(c)});
    }
    return out;
}

inline nlohmann::json to_json(const FVector& fv) {
    auto out = nlohmann::json::array();
    for (const auto& c : fv.counts) {
        out.push_back(integer_to_json(c));
    }
    return out;
}

inline UniPoly uni_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw PolyError("json: polynomial must be an array");
    }
    std::vector<Integer> c;
    for (const auto& x : j) {
        c.push_back(integer_from_json(x));
    }
    return UniPoly(std::move(c));
}

inline RatPoly rat_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw PolyError("json: polynomial must be an array");
    }
    std::vector<Rational> c;
    for (const auto& x : j) {
        c.push_back(rational_from_json(x));
    }
    return RatPoly(std::move(c));
}

inline BiPoly bi_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw PolyError("json: bivariate polynomial must be an array of [i, j, c]");
    }
    BiPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_unsigned() || !term[1].is_number_unsigned()) {
            throw PolyError("json: bad bivariate term " + term.dump());
        }
        p.add_term(term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>(), integer_from_json(term[2]));
    }
    return p;
}

inline FVector f_vector_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw PolyError("json: f-vector must be an array");
    }
    FVector fv;
    for (const auto& x : j) {
        fv.counts.push_back(integer_from_json(x));
    }
    return fv;
}

} // namespace cliquepoly
