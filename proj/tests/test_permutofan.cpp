#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tropical/permutofan.hpp"

using namespace tropical;

namespace {

// Permutations of [n] with k descents, by listing them.
Integer descent_count(std::size_t n, std::size_t k) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Integer count = 0;
    do {
        std::size_t des = 0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (p[i] > p[i + 1]) ++des;
        if (des == k) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Ordered partitions of [n] into b nonempty blocks, by counting surjections.
std::size_t ordered_partitions(std::size_t n, std::size_t b) {
    std::size_t count = 0;
    std::vector<std::size_t> f(n, 0);
    while (true) {
        std::vector<bool> hit(b, false);
        for (const auto x : f) hit[x] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) ++count;
        std::size_t i = 0;
        while (i < n && ++f[i] == b) f[i++] = 0;
        if (i == n) break;
    }
    return count;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("permutohedral fan cones") {
    const PermutohedralFan F3(3);
    CHECK(F3.cones(1).size() == 6);
    CHECK(F3.cones(2).size() == 6);
    const PermutohedralFan F2(2);
    CHECK(F2.cones(1).size() == 2);
    for (std::size_t n = 2; n <= 5; ++n) {
        const PermutohedralFan F(n);
        for (int k = 0; k < static_cast<int>(n); ++k)
            CHECK(F.cones(k).size() == ordered_partitions(n, static_cast<std::size_t>(k) + 1));
    }
    // Faces of a cone are its subchains.
    const PermutohedralFan F4(4);
    for (const auto& c : F4.cones(3)) {
        const Polyhedron P = F4.cone(c);
        std::vector<Polyhedron> expected;
        for (std::size_t pos = 0; pos < c.size(); ++pos) {
            auto sub = c;
            sub.erase(sub.begin() + static_cast<long>(pos));
            expected.push_back(F4.cone(sub));
        }
        auto got = P.faces(2);
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
    }
}

TEST_CASE("Eulerian numbers") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t k = 0; k < n; ++k) CHECK(eulerian_number(n, k) == descent_count(n, k));
    CHECK(eulerian_number(5, 2) == 66);
    CHECK(eulerian_number(5, 1) == 26);
}

TEST_CASE("Minkowski weight spaces have Eulerian dimensions") {
    for (std::size_t n = 3; n <= 5; ++n) {
        const PermutohedralFan F(n);
        std::size_t total = 0;
        for (int k = 0; k < static_cast<int>(n); ++k) {
            const MinkowskiWeightSpace W = weight_space(F, k);
            CHECK(Integer(W.dim()) == descent_count(n, n - 1 - static_cast<std::size_t>(k)));
            total += W.dim();
            if (n <= 4)
                for (const auto& row : W.basis.row_list()) CHECK(check_balancing(F.cycle(k, row)).balanced);
        }
        CHECK(total == factorial(n));
    }
    const PermutohedralFan F(4);
    const MinkowskiWeightSpace top = weight_space(F, 3);
    REQUIRE(top.dim() == 1);
    CHECK(F.cycle(3, top.basis.row(0)).cells().size() == 1);
}

TEST_CASE("fan cycles are read back from their weights") {
    const PermutohedralFan F(4);
    const TropicalCycle L = linear_skeleton(4, 2);
    const IntVector w = F.weights_of(L);
    CHECK(F.cycle(2, w) == L);
    const TropicalCycle tilted = TropicalCycle::from_weighted_polyhedra(
        F.ambient(), 1, {{Polyhedron::cone(F.ambient(), {{1, 2, 0}}), 1}});
    CHECK_THROWS_AS(F.weights_of(tilted), Error);
}

TEST_CASE("sums of fan cones with negative basis rays are unions of fan cones") {
    for (std::size_t n = 3; n <= 5; ++n) {
        const PermutohedralFan F(n);
        const AmbientSpace amb = F.ambient();
        for (int k = 0; k < static_cast<int>(n); ++k)
            for (const auto& c : F.cones(k))
                for (std::size_t i = 0; i < n; ++i) {
                    IntVector neg = amb.basis_vector(i);
                    for (auto& x : neg) x = -x;
                    const Polyhedron P = minkowski_sum(F.cone(c), Polyhedron::cone(amb, {neg}));
                    std::vector<WeightedCell> inside;
                    for (const auto& e : F.cones(P.dim()))
                        if (P.contains(F.interior_point(e))) inside.push_back({F.cone(e), 1});
                    CHECK(TropicalCycle::from_weighted_polyhedra(amb, P.dim(), inside) ==
                          TropicalCycle::from_weighted_polyhedra(amb, P.dim(), {{P, 1}}));
                }
    }
}

TEST_CASE("chow map on fan cycles") {
    const PermutohedralFan F4(4);
    for (std::size_t d = 1; d <= 3; ++d) {
        const ChowLinearMap ch = chow_matrix(F4, d);
        CHECK(ch.matrix.cols() == ch.source.dim());
        CHECK(ch.matrix.rows() == ch.target.dim());
        if (d == 1 || d == 3) CHECK(ch.rank() == ch.source.dim());
        if (d == 3) CHECK(ch.matrix == IntMatrix::identity(ch.source.dim()));
    }
    // Between the extremes the map is still injective for n = 4.
    CHECK(chow_matrix(F4, 2).rank() == 11);
    CHECK(kernel_basis(F4, 2).empty());
}

TEST_CASE("kernel of the chow map for n = 5, d = 3") {
    const PermutohedralFan F(5);
    const ChowLinearMap ch = chow_matrix(F, 3);
    CHECK(ch.source.dim() == 66);
    CHECK(ch.target.dim() == 26);
    CHECK(ch.rank() == 26);
    const auto K = kernel_basis(F, ch);
    CHECK(K.size() == 40);
    for (const auto& k : K) CHECK(check_balancing(k).balanced);
    // Adding a kernel element does not change the Chow data of an effective cycle.
    const TropicalCycle Y = linear_skeleton(5, 2);
    const TropicalCycle chY = chow_map(Y);
    for (std::size_t i = 0; i < K.size(); i += 13) CHECK(chow_map(Y + K[i]) == chY);
    CHECK(chow_matrix(F, 1).rank() == chow_matrix(F, 1).source.dim());
}
