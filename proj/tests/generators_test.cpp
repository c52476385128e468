#include "support/oracle.hpp"

#include <cliquepoly/fcalc.hpp>
#include <cliquepoly/generators.hpp>

#include <gtest/gtest.h>

using namespace cliquepoly;

TEST(Families, SizesAndEdges) {
    EXPECT_EQ(complete_graph(5).edge_count(), 10u);
    EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
    EXPECT_EQ(path_graph(5).edge_count(), 4u);
    EXPECT_EQ(path_graph(1).size(), 1u);
    EXPECT_EQ(star_graph(4).size(), 5u);
    EXPECT_EQ(star_graph(4).edge_count(), 4u);
    EXPECT_EQ(wheel_graph(4).size(), 5u);
    EXPECT_EQ(wheel_graph(4).edge_count(), 8u);
    EXPECT_EQ(cycle_graph(3), complete_graph(3));
    EXPECT_EQ(wheel_graph(3), complete_graph(4));
}

TEST(Families, ParseAndMinimums) {
    for (const auto f : {Family::complete, Family::cycle, Family::path, Family::star, Family::wheel}) {
        EXPECT_EQ(parse_family(family_name(f)), f);
        EXPECT_THROW(generate(f, family_minimum(f) - 1), GraphError);
        EXPECT_NO_THROW(generate(f, family_minimum(f)));
    }
    EXPECT_FALSE(parse_family("hypercube").has_value());
}

TEST(ErdosRenyi, DeterministicAndExtremes) {
    EXPECT_EQ(erdos_renyi(15, 0.4, 9), erdos_renyi(15, 0.4, 9));
    EXPECT_NE(erdos_renyi(15, 0.4, 9), erdos_renyi(15, 0.4, 10));
    EXPECT_EQ(erdos_renyi(10, 0.0, 1).edge_count(), 0u);
    EXPECT_EQ(erdos_renyi(10, 1.0, 1), complete_graph(10));
    EXPECT_EQ(erdos_renyi(0, 0.5, 1).size(), 0u);
    EXPECT_THROW(erdos_renyi(5, 1.5, 1), GraphError);
    EXPECT_THROW(erdos_renyi(5, -0.1, 1), GraphError);
}

TEST(ErdosRenyi, EdgeDensityIsPlausible) {
    std::size_t edges = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        edges += erdos_renyi(20, 0.3, seed).edge_count();
    }
    const double density = static_cast<double>(edges) / (50.0 * 190.0);
    EXPECT_NEAR(density, 0.3, 0.03);
}

TEST(Torus, EveryUnitSphereIsAHexagon) {
    const Graph t = torus_16();
    EXPECT_EQ(t.size(), 16u);
    EXPECT_EQ(t.edge_count(), 48u);
    for (const VertexId v : t.ids()) {
        const Graph s = unit_sphere(t, v);
        EXPECT_EQ(s.size(), 6u);
        EXPECT_EQ(s.edge_count(), 6u);
        for (const VertexId y : s.ids()) {
            EXPECT_EQ(unit_sphere(s, y).size(), 2u);
        }
    }
    EXPECT_EQ(f_vector_bruteforce(t), (FVector{{16, 48, 32}}));
    EXPECT_THROW(triangulated_torus(2, 5), GraphError);
}

TEST(Barycentric, Triangle) {
    const Refinement r = barycentric(complete_graph(3));
    EXPECT_EQ(r.graph.size(), 7u);
    EXPECT_EQ(r.graph.edge_count(), 12u);
    EXPECT_EQ(f_vector_bruteforce(r.graph), (FVector{{7, 12, 6}}));
    EXPECT_EQ(r.id_of({0, 1, 2}), 6u);
    EXPECT_EQ(r.id_of({1}), 1u);
    EXPECT_THROW(r.id_of({0, 5}), GraphError);
    EXPECT_EQ(r.dimension.rank(6), 2);
    EXPECT_TRUE(is_locally_injective(r.graph, r.dimension));
    EXPECT_FALSE(r.dimension.is_injective());
    EXPECT_TRUE(r.rank.is_injective());
}

TEST(Barycentric, PreservesEulerCharacteristic) {
    for (const auto& fx : cliquepoly::testing::fixtures()) {
        if (fx.graph.size() > 12) {
            continue;
        }
        const Refinement r = barycentric(fx.graph);
        if (r.graph.size() > 24) {
            continue;
        }
        EXPECT_EQ(cliquepoly::testing::oracle_euler(r.graph), cliquepoly::testing::oracle_euler(fx.graph)) << fx.name;
    }
}

TEST(Join, Octahedron) {
    const Graph empty2 = build_graph(2, {});
    const Graph oct = join(cycle_graph(4), empty2);
    EXPECT_EQ(oct.size(), 6u);
    EXPECT_EQ(oct.edge_count(), 12u);
    EXPECT_EQ(f_vector_bruteforce(oct), (FVector{{6, 12, 8}}));
}

TEST(Join, FFunctionsMultiply) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = erdos_renyi(3 + seed % 5, 0.5, seed);
        const Graph h = erdos_renyi(2 + seed % 4, 0.5, seed + 500);
        const UniPoly fg = f_vector_to_poly(f_vector_bruteforce(g));
        const UniPoly fh = f_vector_to_poly(f_vector_bruteforce(h));
        EXPECT_EQ(f_vector_to_poly(f_vector_bruteforce(join(g, h))), fg * fh);
    }
}

TEST(Join, SphereOfRightVertex) {
    // S_{G+H}(w) = G + S_H(w) for w in H
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = erdos_renyi(4, 0.5, seed);
        const Graph h = erdos_renyi(5, 0.5, seed + 77);
        const JoinResult j = join_with_maps(g, h);
        for (const VertexId w : h.ids()) {
            const Graph sphere = unit_sphere(j.graph, j.right.at(w));
            const Graph expected = join(g, unit_sphere(h, w));
            EXPECT_EQ(f_vector_bruteforce(sphere), f_vector_bruteforce(expected));
            EXPECT_EQ(sphere.size(), expected.size());
            EXPECT_EQ(sphere.edge_count(), expected.edge_count());
        }
    }
}
