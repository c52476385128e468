#include <cliquepoly/poly.hpp>
#include <cliquepoly/poly_json.hpp>
#include <cliquepoly/seed.hpp>

#include <gtest/gtest.h>

using namespace cliquepoly;

namespace {

UniPoly random_poly(Rng& rng) {
    std::vector<Integer> c(rng.below(6));
    for (auto& x : c) {
        // mix small values with a few that overflow 64 bits
        x = Integer(static_cast<long long>(rng.below(41))) - 20;
        if (rng.below(5) == 0) {
            x *= Integer(1) << 70;
        }
    }
    return UniPoly(std::move(c));
}

BiPoly random_bipoly(Rng& rng) {
    BiPoly p;
    const auto terms = rng.below(6);
    for (std::uint64_t k = 0; k < terms; ++k) {
        p.add_term(static_cast<std::uint32_t>(rng.below(4)), static_cast<std::uint32_t>(rng.below(4)),
                   Integer(static_cast<long long>(rng.below(21))) - 10);
    }
    return p;
}

} // namespace

TEST(UniPoly, CanonicalForm) {
    EXPECT_TRUE(UniPoly({0, 0}).is_zero());
    EXPECT_EQ(UniPoly({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(UniPoly().degree(), -1);
    EXPECT_EQ(UniPoly({1, 2}) - UniPoly({1, 2}), UniPoly());
}

TEST(UniPoly, AddAndMultiply) {
    const UniPoly one_t{1, 1};
    EXPECT_EQ(poly_mul(one_t, one_t), UniPoly({1, 2, 1}));
    const UniPoly p{3, 0, 5};
    EXPECT_EQ(poly_add(p, UniPoly()), p);
    EXPECT_EQ(poly_mul(one_t, UniPoly({1, 4, 4})), UniPoly({1, 5, 8, 4}));
    EXPECT_EQ(poly_mul(p, UniPoly()), UniPoly());
}

TEST(UniPoly, PascalRows) {
    EXPECT_EQ(one_plus_t_pow(0), UniPoly({1}));
    EXPECT_EQ(one_plus_t_pow(3), UniPoly({1, 3, 3, 1}));
    UniPoly acc{1};
    for (std::size_t m = 1; m <= 40; ++m) {
        acc *= UniPoly{1, 1};
        EXPECT_EQ(one_plus_t_pow(m), acc);
    }
}

TEST(Antiderivative, Examples) {
    EXPECT_EQ(antiderivative(UniPoly({1, 2})), RatPoly({0, 1, 1}));
    EXPECT_EQ(antiderivative(UniPoly({1, 4, 4})), RatPoly({Rational(0), Rational(1), Rational(2), Rational(4, 3)}));
    EXPECT_TRUE(antiderivative(UniPoly()).is_zero());
}

TEST(Antiderivative, InvertsDerivative) {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const UniPoly p = random_poly(rng);
        const RatPoly f = antiderivative(p);
        EXPECT_EQ(f.derivative(), to_rational(p));
        EXPECT_EQ(f.evaluate(Rational(0)), 0);
    }
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(poly_eval(UniPoly({1, 4, 4}), Rational(-1)), 1);
    EXPECT_EQ(poly_eval(UniPoly(), Rational(7, 3)), 0);
    EXPECT_EQ(poly_eval(RatPoly({Rational(0), Rational(1), Rational(2), Rational(4, 3)}), Rational(-1)),
              Rational(-1, 3));
    BiPoly k2;
    k2.add_term(0, 0, 2);
    k2.add_term(1, 0, 2);
    k2.add_term(0, 1, 2);
    k2.add_term(1, 1, 1);
    EXPECT_EQ(bipoly_eval(k2, -1, -1), -1);
    EXPECT_EQ(bipoly_eval(BiPoly(), 3, 4), 0);
}

TEST(FVector, ConversionExamples) {
    const FVector torus{{16, 48, 32}};
    EXPECT_EQ(f_vector_to_poly(torus), UniPoly({1, 16, 48, 32}));
    EXPECT_EQ(f_vector_to_poly(FVector{}), UniPoly({1}));
    EXPECT_EQ(poly_to_f_vector(UniPoly({1, 3, 3, 1})), (FVector{{3, 3, 1}}));
    EXPECT_EQ(poly_to_f_vector(UniPoly({1})), FVector{});
}

TEST(FVector, RejectsNonFFunctions) {
    EXPECT_THROW(poly_to_f_vector(UniPoly({2, 3})), PolyError);
    EXPECT_THROW(poly_to_f_vector(UniPoly()), PolyError);
    EXPECT_THROW(poly_to_f_vector(UniPoly({1, 0, 2})), PolyError);
    EXPECT_THROW(poly_to_f_vector(UniPoly({1, -3})), PolyError);
}

TEST(FVector, RoundTrip) {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        FVector fv;
        const auto d = rng.below(7);
        for (std::uint64_t k = 0; k < d; ++k) {
            fv.counts.emplace_back(static_cast<long long>(1 + rng.below(1000)));
        }
        EXPECT_EQ(poly_to_f_vector(f_vector_to_poly(fv)), fv);
    }
}

TEST(RingLaws, UniPoly) {
    Rng rng(1);
    for (int i = 0; i < 300; ++i) {
        const UniPoly a = random_poly(rng);
        const UniPoly b = random_poly(rng);
        const UniPoly c = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        const Rational x(static_cast<long long>(rng.below(7)) - 3, static_cast<long long>(1 + rng.below(3)));
        EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
    }
}

TEST(RingLaws, BiPoly) {
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const BiPoly a = random_bipoly(rng);
        const BiPoly b = random_bipoly(rng);
        const BiPoly c = random_bipoly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - a), BiPoly());
        EXPECT_EQ((a * b).swapped(), a.swapped() * b.swapped());
        const Integer t = static_cast<long long>(rng.below(5)) - 2;
        const Integer s = static_cast<long long>(rng.below(5)) - 2;
        EXPECT_EQ((a * b).evaluate(t, s), a.evaluate(t, s) * b.evaluate(t, s));
    }
}

TEST(BiPoly, NoExplicitZeros) {
    BiPoly p;
    p.add_term(1, 2, 5);
    p.add_term(1, 2, -5);
    p.add_term(0, 0, 0);
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.terms().empty());
}

TEST(Rendering, Univariate) {
    EXPECT_EQ(to_string(UniPoly({1, 16, 48, 32})), "1 + 16*t + 48*t^2 + 32*t^3");
    EXPECT_EQ(to_string(UniPoly({1, 16, 48, 32}), "t", " "), "1 + 16 t + 48 t^2 + 32 t^3");
    EXPECT_EQ(to_string(UniPoly({0, -1, 0, 1})), "-t + t^3");
    EXPECT_EQ(to_string(UniPoly()), "0");
    EXPECT_EQ(to_string(RatPoly({Rational(0), Rational(1), Rational(2), Rational(4, 3)})), "t + 2*t^2 + 4/3*t^3");
}

TEST(Rendering, Bivariate) {
    BiPoly p;
    p.add_term(0, 0, 2);
    p.add_term(1, 0, 2);
    p.add_term(0, 1, 2);
    p.add_term(1, 1, 1);
    EXPECT_EQ(to_string(p), "2 + 2*s + 2*t + t*s");
    p.add_term(2, 3, -4);
    EXPECT_EQ(to_string(p), "2 + 2*s + 2*t + t*s - 4*t^2*s^3");
}

TEST(Json, Forms) {
    const UniPoly big({1, Integer(1) << 80});
    const auto j = to_json(big);
    EXPECT_EQ(j.dump(), R"([1,"1208925819614629174706176"])");
    EXPECT_EQ(uni_poly_from_json(j), big);

    const RatPoly r({Rational(0), Rational(1, 2)});
    EXPECT_EQ(to_json(r).dump(), R"(["0","1/2"])");
    EXPECT_EQ(rat_poly_from_json(to_json(r)), r);

    BiPoly b;
    b.add_term(1, 0, 2);
    b.add_term(0, 1, 3);
    EXPECT_EQ(to_json(b).dump(), "[[0,1,3],[1,0,2]]");
    EXPECT_EQ(bi_poly_from_json(to_json(b)), b);

    EXPECT_THROW(uni_poly_from_json(nlohmann::json::parse(R"([1,"x"])")), PolyError);
    EXPECT_THROW(bi_poly_from_json(nlohmann::json::parse(R"([[0,1]])")), PolyError);
}

TEST(Json, RoundTripProperty) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const UniPoly p = random_poly(rng);
        EXPECT_EQ(uni_poly_from_json(nlohmann::json::parse(to_json(p).dump())), p);
        const BiPoly b = random_bipoly(rng);
        EXPECT_EQ(bi_poly_from_json(nlohmann::json::parse(to_json(b).dump())), b);
    }
}
