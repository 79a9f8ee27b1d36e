#include <doctest.h>

#include "generators.hpp"
#include "tropical/stable.hpp"

using namespace tropical;

namespace {

// Oracle for plane curves in R^3 / R1: a ray with primitive direction (a, b) in the chart
// x -> (x1 - x3, x2 - x3) contributes its weight times max(0, -a, -b) to the degree.
Integer plane_curve_degree_oracle(const TropicalCycle& X) {
    Integer d = 0;
    auto contribution = [](const IntVector& r) {
        const IntVector p = primitive_vector(r);
        Integer m = 0;
        if (-p[0] > m) m = -p[0];
        if (-p[1] > m) m = -p[1];
        return m;
    };
    for (const auto& c : X.cells()) {
        for (const auto& r : c.cell.rays()) d += c.weight * contribution(r);
        for (const auto& l : c.cell.lineality()) {
            IntVector neg = l;
            for (auto& x : neg) x = -x;
            d += c.weight * (contribution(l) + contribution(neg));
        }
    }
    return d;
}

}  // namespace

TEST_CASE("two tropical lines meet in one point") {
    const TropicalCycle L = linear_skeleton(3, 1);
    GenericityCertificate cert;
    const TropicalCycle P = stable_intersection(L, L, 0, &cert);
    CHECK(P.dim() == 0);
    REQUIRE(P.cells().size() == 1);
    CHECK(P.cells()[0].weight == 1);
    CHECK(P.cells()[0].cell.vertices()[0] == RatVector{0, 0});
    CHECK(cert.transverse_pairs >= 1);
    CHECK(degree(L) == 1);
}

TEST_CASE("stable self-intersection of the tropical plane is the tropical line") {
    const TropicalCycle L2 = linear_skeleton(4, 2);
    CHECK(stable_intersection(L2, L2) == linear_skeleton(4, 1));
    CHECK(degree(L2) == 1);
}

TEST_CASE("linear skeleta") {
    CHECK(linear_skeleton(4, 1).cells().size() == 4);
    CHECK(linear_skeleton(4, 2).cells().size() == 6);
    CHECK(linear_skeleton(4, 0).cells().size() == 1);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int k = 0; k < static_cast<int>(n); ++k) {
            CHECK(check_balancing(linear_skeleton(n, k)).balanced);
            CHECK(degree(linear_skeleton(n, k)) == 1);
        }
}

TEST_CASE("degree of random fan curves matches the ray formula") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const TropicalCycle X = gen::fan_curve(rng, 3, 3);
        REQUIRE(check_balancing(X).balanced);
        CHECK(degree(X, trial) == plane_curve_degree_oracle(X));
        CHECK(degree(X) == degree(translate(X, gen::random_point(rng, 2))));
    }
}

TEST_CASE("stable intersection is commutative, seed independent and bounded by the degree product") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const TropicalCycle X = gen::fan_curve(rng, 3, 3);
        const TropicalCycle Y = translate(gen::fan_curve(rng, 3, 2), gen::random_point(rng, 2));
        const TropicalCycle XY = stable_intersection(X, Y, 1);
        CHECK(XY == stable_intersection(X, Y, 12345));
        CHECK(XY == stable_intersection(Y, X, 7));
        CHECK(total_weight(XY) <= degree(X) * degree(Y));
        CHECK(XY.is_effective());
    }
}

TEST_CASE("stable self-intersection of a fan curve") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const TropicalCycle X = gen::fan_curve(rng, 3, 3);
        const TropicalCycle XX = stable_intersection(X, X, trial);
        CHECK(total_weight(XX) <= degree(X) * degree(X));
        CHECK(XX == stable_intersection(X, X, trial + 100));
    }
}

TEST_CASE("curves with all ends in the standard directions meet in the degree product") {
    // Unions of translated lines have generic ends, so the bound is attained.
    std::mt19937_64 rng(37);
    const TropicalCycle L = linear_skeleton(3, 1);
    for (int trial = 0; trial < 8; ++trial) {
        const TropicalCycle X = translate(L, gen::random_point(rng, 2)) + translate(L, gen::random_point(rng, 2));
        const TropicalCycle Y = translate(L, gen::random_point(rng, 2)) * Integer(3);
        CHECK(degree(X) == 2);
        CHECK(total_weight(stable_intersection(X, Y, trial)) == 6);
    }
}

TEST_CASE("stable Minkowski sums of linear skeleta") {
    const TropicalCycle L1 = linear_skeleton(3, 1);
    const TropicalCycle S = stable_minkowski_sum(L1, L1);
    CHECK(S.dim() == 2);
    REQUIRE(S.cells().size() == 1);
    CHECK(S.cells()[0].weight == 2);
    CHECK(stable_minkowski_sum(L1, linear_skeleton(3, 0)) == L1);
    // Pairing with the reflection recovers the intersection degree.
    const TropicalCycle R = stable_minkowski_sum(L1, reflect(L1));
    CHECK(R.cells().size() == 1);
    CHECK(R.cells()[0].weight == 1);
}

TEST_CASE("multiplicities") {
    const AmbientSpace R2{2, false};
    const Polyhedron a = Polyhedron::cone(R2, {{1, 0}});
    const Polyhedron b = Polyhedron::cone(R2, {{1, 2}});
    CHECK(intersection_multiplicity(a, b) == 2);
    CHECK(minkowski_multiplicity(a, b) == 2);
    CHECK(intersection_multiplicity(a, a) == 0);
    CHECK(minkowski_multiplicity(a, a) == 0);
}

TEST_CASE("degree needs the quotient ambient") {
    const AmbientSpace R2{2, false};
    const TropicalCycle X = TropicalCycle::from_weighted_polyhedra(
        R2, 1, {{Polyhedron::cone(R2, {{1, 0}}, {{-1, 0}}), 1}});
    CHECK_THROWS_AS(degree(X), Error);
}
