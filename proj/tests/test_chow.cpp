#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures_data.hpp"
#include "generators.hpp"
#include "tropical/chow.hpp"

using namespace tropical;
using fixture::conic_form;
using fixture::hypersimplex;
using fixture::truncated_octahedron;

namespace {

RegularSubdivision random_subdivision(std::mt19937_64& rng, std::size_t dim, std::size_t count) {
    std::uniform_int_distribution<int> coord(0, 3), height(0, 6);
    std::set<IntVector> pts;
    while (pts.size() < count) {
        IntVector p(dim);
        for (auto& x : p) x = coord(rng);
        pts.insert(p);
    }
    std::vector<Rational> hs;
    for (std::size_t i = 0; i < count; ++i) hs.push_back(height(rng));
    return RegularSubdivision({dim, false}, {pts.begin(), pts.end()}, hs);
}

std::vector<IntVector> shifted(std::vector<IntVector> v) {
    std::sort(v.begin(), v.end());
    const IntVector base = v[0];
    for (auto& p : v)
        for (std::size_t i = 0; i < p.size(); ++i) p[i] -= base[i];
    return v;
}

}  // namespace

TEST_CASE("regular subdivisions of the unit square") {
    const std::vector<IntVector> sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const RegularSubdivision flat({2, false}, sq, {0, 0, 0, 0});
    CHECK(flat.maximal_cells() == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
    const RegularSubdivision bent({2, false}, sq, {0, 0, 0, 1});
    CHECK(bent.maximal_cells() == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 3}});
    // A point lifted above the lower hull is not a member of any cell.
    const RegularSubdivision raised({2, false}, {{0, 0}, {2, 0}, {0, 2}, {1, 0}}, {0, 0, 0, 5});
    CHECK(raised.maximal_cells() == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK(raised.vertices() == std::vector<IntVector>{{0, 0}, {0, 2}, {2, 0}});
}

TEST_CASE("normal complex of a segment and of the hypersimplex") {
    const RegularSubdivision seg({1, false}, {{0}, {3}}, {0, 0});
    const TropicalCycle N1 = normal_complex(seg, 1);
    REQUIRE(N1.cells().size() == 1);
    CHECK(N1.dim() == 0);
    CHECK(N1.cells()[0].weight == 3);

    const auto pts = hypersimplex(2, 4);
    const RegularSubdivision oct({4, true}, pts, std::vector<Rational>(pts.size(), Rational(0)));
    const TropicalCycle N = normal_complex(oct, 1);
    CHECK(N.dim() == 2);
    for (const auto& c : N.cells()) CHECK(c.weight == 1);
    CHECK(check_balancing(N).balanced);
    CHECK(normal_complex(oct, 0).cells().size() == 1);
    const TropicalCycle apex = normal_complex(oct, 3);
    REQUIRE(apex.cells().size() == 1);
    CHECK(apex.cells()[0].weight == 4);
}

TEST_CASE("normal complexes of random regular subdivisions are balanced") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        const RegularSubdivision S = random_subdivision(rng, dim, 5 + trial % 6);
        for (int e = 1; e <= S.dim(); ++e) CHECK(check_balancing(normal_complex(S, e)).balanced);
    }
}

TEST_CASE("chow map of points, hypersurfaces and linear spaces") {
    const TropicalCycle pt = TropicalCycle::from_weighted_polyhedra(
        {3, true}, 0, {{Polyhedron::point({3, true}, {2, -1}), 1}});
    CHECK(chow_map(pt) == translate(reflect(linear_skeleton(3, 1)), {2, -1}));

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        const TropicalCycle X = gen::fan_curve(rng, 3, 3);
        CHECK(chow_map(X) == X);
    }
    const auto pts = hypersimplex(2, 4);
    const RegularSubdivision oct({4, true}, pts, std::vector<Rational>(pts.size(), Rational(0)));
    CHECK(chow_map(linear_skeleton(4, 1)) == normal_complex(oct, 1));
}

TEST_CASE("degree of the chow map is codimension times degree") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 4; ++trial) {
        const TropicalCycle X = gen::fan_curve(rng, 4, 3, 1);
        CHECK(degree(chow_map(X), trial) == 2 * degree(X, trial));
    }
}

TEST_CASE("chow polytopes of linear spaces are hypersimplices") {
    for (std::size_t n = 3; n <= 4; ++n)
        for (std::size_t d = 1; d < n; ++d) {
            const TropicalCycle L = linear_skeleton(n, static_cast<int>(d) - 1);
            CHECK(chow_polytope(L) == hypersimplex(n - d, n));
        }
}

TEST_CASE("orthant shooting is constant on complement regions and ignores the seed") {
    const TropicalCycle L = linear_skeleton(3, 1);
    // The region opposite the ray e1 contains (-1, 0) in the chart.
    const IntVector v = orthant_shoot(L, {-1, 0});
    CHECK(v == IntVector{1, 0, 0});
    CHECK(orthant_shoot(L, {-5, 1}) == v);
    CHECK(orthant_shoot(L, {-1, 0}, 99) == v);
    CHECK_THROWS_AS(orthant_shoot(L, {1, 0}), Error);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        const TropicalCycle X = gen::fan_curve(rng, 3, 3);
        const ComplementRegions R = complement_regions(chow_map(X));
        std::map<std::size_t, IntVector> seen;
        for (std::size_t i = 0; i < R.chambers.size(); ++i) {
            const IntVector s = orthant_shoot(X, R.chambers[i].relative_interior_point(), trial);
            Integer sum = 0;
            for (const auto& x : s) sum += x;
            CHECK(sum == degree(X));
            const auto [it, fresh] = seen.emplace(R.region_of[i], s);
            if (!fresh) CHECK(it->second == s);
        }
    }
}

TEST_CASE("hypersurfaces recover their Newton polytope") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> coord(0, 3), height(0, 5);
    for (int trial = 0; trial < 6; ++trial) {
        std::set<IntVector> pts;
        while (pts.size() < 5) {
            const int a = coord(rng), b = coord(rng);
            if (a + b > 3) continue;
            pts.insert({a, b, 3 - a - b});
        }
        std::vector<Rational> hs;
        for (std::size_t i = 0; i < pts.size(); ++i) hs.push_back(height(rng));
        const RegularSubdivision S({3, true}, {pts.begin(), pts.end()}, hs);
        if (S.dim() < 2) continue;
        const TropicalCycle X = normal_complex(S, 1);
        CHECK(chow_polytope(X, trial) == S.support_vertices());
        CHECK(chow_subdivision_vertices(X, trial) == S.vertices());
    }
}

TEST_CASE("subdivision reconstruction round trip") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const RegularSubdivision S = random_subdivision(rng, 2, 4 + trial % 5);
        const TropicalCycle C = normal_complex(S, 1);
        const RegularSubdivision T = chow_subdivision_from_cycle(C);
        CHECK(normal_complex(T, 1) == C);
        CHECK(shifted(T.points()) == shifted(S.vertices()));
        CHECK(T.maximal_cells().size() == S.maximal_cells().size());
    }
    const TropicalCycle bad = TropicalCycle::from_weighted_polyhedra(
        {3, true}, 1, {{Polyhedron::cone({3, true}, {{1, 0}}), 1}});
    CHECK_THROWS_AS(chow_subdivision_from_cycle(bad), Error);
}

TEST_CASE("reflected tropical line comes from a triangle") {
    const RegularSubdivision T = chow_subdivision_from_cycle(reflect(linear_skeleton(3, 1)));
    CHECK(T.points().size() == 3);
    CHECK(T.maximal_cells().size() == 1);
    CHECK(normalized_volume(T.project(T.lower_faces(2)[0])) == 1);
    for (const auto& h : T.heights()) CHECK(h == 0);
}

TEST_CASE("chow form ingestion") {
    BracketChowForm lin;
    lin.n = 4;
    lin.d = 2;
    lin.r = 1;
    lin.terms.push_back({{{0, 2}}, Rational(0)});
    const RegularSubdivision S = ingest_chow_form(lin);
    CHECK(S.points() == std::vector<IntVector>{{1, 0, 1, 0}});
    CHECK(S.heights() == std::vector<Rational>{0});

    BracketChowForm bad = lin;
    bad.terms.push_back({{{0, 2}, {1, 3}}, Rational(0)});
    CHECK_THROWS_AS(ingest_chow_form(bad), Error);
}

TEST_CASE("the conic") {
    const RegularSubdivision S = ingest_chow_form(conic_form());
    CHECK(S.points().size() == 17);
    const auto it = std::find(S.points().begin(), S.points().end(), IntVector{1, 1, 1, 1});
    REQUIRE(it != S.points().end());
    CHECK(S.heights()[it - S.points().begin()] == 1);
    const auto jt = std::find(S.points().begin(), S.points().end(), IntVector{1, 1, 2, 0});
    REQUIRE(jt != S.points().end());
    CHECK(S.heights()[jt - S.points().begin()] == 1);

    CHECK(S.maximal_cells().size() == 5);
    CHECK(S.support_vertices() == truncated_octahedron());
    const TropicalCycle C = normal_complex(S, 1);
    CHECK(check_balancing(C).balanced);

    const TropicalCycle X = cycle_from_chow_subdivision(S, 2);
    CHECK(X.dim() == 1);
    CHECK(check_balancing(X).balanced);
    CHECK(X.is_effective());
    CHECK(degree(X) == 2);
    CHECK(chow_map(X) == C);
    CHECK(chow_polytope(X) == truncated_octahedron());
    const auto shots = chow_subdivision_vertices(X);
    CHECK(std::find(shots.begin(), shots.end(), IntVector{1, 1, 2, 0}) != shots.end());

    const RegularSubdivision T = chow_subdivision_from_cycle(C);
    CHECK(T.maximal_cells().size() == 5);
    CHECK(normal_complex(T, 1) == C);
    CHECK(shifted(T.points()) == shifted(S.vertices()));
}

TEST_CASE("toric chow map") {
    // Identity chart: N = Z^2 -> Z^3 / Z1.
    const ToricEmbedding id{3, IntMatrix({{1, 0}, {0, 1}, {0, 0}}, 2)};
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 3; ++trial) {
        const RatVector p = gen::random_point(rng, 2);
        const TropicalCycle pt = TropicalCycle::from_weighted_polyhedra(
            id.source(), 0, {{Polyhedron::point(id.source(), p), 1}});
        CHECK(pushforward(id.as_map(), chow_map_toric(pt, id)) == chow_map(pushforward(id.as_map(), pt)));
    }

    // Segre embedding of P1 x P1: Q is the unit square.
    const ToricEmbedding segre{4, IntMatrix({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 2)};
    const TropicalCycle pt = TropicalCycle::from_weighted_polyhedra(
        segre.source(), 0, {{Polyhedron::point(segre.source(), {1, 2}), 1}});
    const TropicalCycle ch = chow_map_toric(pt, segre);
    CHECK(ch == translate(reflect(normal_complex(segre.polytope(), 1)), {1, 2}));
    CHECK(ch.cells().size() == 2);
    CHECK(check_balancing(ch).balanced);
    CHECK_THROWS_AS(chow_map_toric(linear_skeleton(3, 0), segre), Error);
}

TEST_CASE("slicing the normal complex commutes with projecting the subdivision") {
    const std::vector<ToricEmbedding> embeddings{
        {4, IntMatrix({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 2)},
        {5, IntMatrix({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}}, 2)},
    };
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> height(0, 4);
    for (const auto& emb : embeddings) {
        const LatticeMap iota = emb.as_map();
        const AmbientSpace big{emb.n, true};
        const TropicalCycle plane = pushforward(
            iota, TropicalCycle::from_weighted_polyhedra(
                      emb.source(), 2, {{Polyhedron::cone(emb.source(), {}, {{1, 0}, {0, 1}}), 1}}));
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rational> hs;
            for (std::size_t i = 0; i < emb.n; ++i) hs.push_back(height(rng));
            const RegularSubdivision simplex(big, IntMatrix::identity(emb.n).row_list(), hs);
            const RegularSubdivision Q(emb.source(), emb.iota.row_list(), hs);
            for (int e = 1; e <= 2; ++e)
                CHECK(pushforward(iota, normal_complex(Q, e)) ==
                      stable_intersection(normal_complex(simplex, e), plane, trial));
        }
    }
}
