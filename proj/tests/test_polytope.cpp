#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magiccount/polytope.hpp"

using namespace magiccount;

namespace {

VertexSet vertices_of(const SquareClass& cls) {
    return enumerate_vertices(build_constraints(cls));
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("vertex table for the n = 3, 4 classes") {
    struct Row { SquareClass cls; std::size_t vertices; int lcm; };
    const Row rows[] = {
        {{SquareKind::Magic, 3}, 4, 3},          {{SquareKind::SymmetricMagic, 3}, 2, 3},
        {{SquareKind::Pandiagonal, 3}, 3, 1},    {{SquareKind::Magic, 4}, 20, 2},
        {{SquareKind::SymmetricMagic, 4}, 12, 4}, {{SquareKind::Pandiagonal, 4}, 28, 2},
    };
    for (const Row& row : rows) {
        const VertexSet vs = vertices_of(row.cls);
        CHECK(vs.vertices.size() == row.vertices);
        CHECK(vs.period_bound == row.lcm);
    }
}

TEST_CASE("the two S_3 vertices, exactly") {
    const VertexSet vs = vertices_of({SquareKind::SymmetricMagic, 3});
    REQUIRE(vs.vertices.size() == 2);
    RationalVector a(6), b(6);
    a << 0, Rational(2, 3), Rational(1, 3), Rational(1, 3), 0, Rational(2, 3);
    b << Rational(2, 3), 0, Rational(1, 3), Rational(1, 3), Rational(2, 3), 0;
    // sorted canonical order puts the lexicographically smaller one first
    CHECK(vs.vertices[0] == a);
    CHECK(vs.vertices[1] == b);
    CHECK(vs.period_bound == 3);
}

TEST_CASE("P_3 vertices are integral") {
    const VertexSet vs = vertices_of({SquareKind::Pandiagonal, 3});
    REQUIRE(vs.vertices.size() == 3);
    CHECK(vs.period_bound == 1);
    for (const auto& v : vs.vertices) {
        for (Index i = 0; i < v.size(); ++i) CHECK(denominator(v(i)) == 1);
    }
}

TEST_CASE("order-1 magic polytope is the single point 1") {
    const VertexSet vs = vertices_of({SquareKind::Magic, 1});
    REQUIRE(vs.vertices.size() == 1);
    CHECK(vs.vertices[0](0) == 1);
    CHECK(vs.period_bound == 1);
}

TEST_CASE("semi-magic vertices are the permutation matrices") {
    for (int n = 2; n <= 4; ++n) {
        const VertexSet vs = vertices_of({SquareKind::SemiMagic, n});
        CHECK(vs.vertices.size() == static_cast<std::size_t>(factorial(n)));
        CHECK(vs.period_bound == 1);
        for (const auto& v : vs.vertices) {
            for (Index i = 0; i < v.size(); ++i) CHECK((v(i) == 0 || v(i) == 1));
        }
    }
}

TEST_CASE("contains_point") {
    const ConstraintSystem cs = build_constraints({SquareKind::Magic, 3});
    CHECK(contains_point(cs, RationalVector::Constant(9, Rational(1, 3)), true));
    CHECK_FALSE(contains_point(cs, RationalVector::Zero(9)));
    CHECK_THROWS_AS(contains_point(cs, RationalVector::Zero(4)), DimensionMismatch);

    const ConstraintSystem sym = build_constraints({SquareKind::SymmetricMagic, 3});
    for (const auto& v : vertices_of({SquareKind::SymmetricMagic, 3}).vertices) {
        CHECK(contains_point(sym, v));
        CHECK_FALSE(contains_point(sym, v, true));  // vertices have zero coordinates
    }
}

TEST_CASE("every vertex has at least dim zero coordinates and the centroid is interior") {
    for (SquareClass cls : {SquareClass{SquareKind::Magic, 3},
                            SquareClass{SquareKind::Pandiagonal, 4},
                            SquareClass{SquareKind::SymmetricMagic, 4},
                            SquareClass{SquareKind::Hypercube, 2, 3}}) {
        const ConstraintSystem cs = build_constraints(cls);
        const Index dim = rank_and_degree(cs).dimension;
        const VertexSet vs = enumerate_vertices(cs);
        RationalVector centroid = RationalVector::Zero(cs.num_vars());
        for (const auto& v : vs.vertices) {
            Index zeros = 0;
            for (Index i = 0; i < v.size(); ++i) {
                if (v(i) == 0) ++zeros;
            }
            CHECK(zeros >= dim);
            CHECK(contains_point(cs, v));
            centroid += v;
        }
        centroid /= Rational(static_cast<long long>(vs.vertices.size()));
        CHECK(contains_point(cs, centroid));
    }
}

TEST_CASE("vertex JSON export") {
    const VertexSet vs = vertices_of({SquareKind::SymmetricMagic, 3});
    const nlohmann::json j = vertex_set_to_json(vs);
    CHECK(j["class"] == "symmetric");
    CHECK(j["n"] == 3);
    CHECK(j["period_bound"] == "3");
    REQUIRE(j["vertices"].size() == 2);
    CHECK(j["vertices"][1][0][0] == "2");
    CHECK(j["vertices"][1][0][1] == "3");
}
