// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any criterion fails.
//
// All checks are exact. Time limits are wall-clock seconds per criterion (per cycle for 3).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "document.hpp"
#include "fixtures_data.hpp"
#include "generators.hpp"
#include "tropical/permutofan.hpp"

using namespace tropical;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

TropicalCycle fixture_cycle(const std::string& name) { return io::cycle_from_json(io::read_json_file(fx(name))); }

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(t0);
    if (out.ok && t > limit) out = {false, "time limit exceeded"};
    if (!out.ok) ++failures;
    std::printf("%s %2d  %s  [%.2f s, limit %.0f s]%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), t, limit,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

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

// Random tropical hypersurface in R^n / R1: normal complex of a lifted configuration in k * simplex.
TropicalCycle random_hypersurface(std::mt19937_64& rng, std::size_t n, int k) {
    std::vector<IntVector> pts;
    std::function<void(IntVector&, std::size_t, int)> fill = [&](IntVector& p, std::size_t i, int left) {
        if (i + 1 == n) {
            p[i] = left;
            pts.push_back(p);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            p[i] = a;
            fill(p, i + 1, left - a);
        }
    };
    IntVector p(n);
    fill(p, 0, k);
    std::uniform_int_distribution<int> height(0, 5);
    while (true) {
        std::vector<Rational> hs;
        for (std::size_t i = 0; i < pts.size(); ++i) hs.push_back(height(rng));
        TropicalCycle X = normal_complex(RegularSubdivision({n, true}, pts, hs), 1);
        if (!X.is_zero()) return X;
    }
}

RegularSubdivision random_configuration(std::mt19937_64& rng, std::size_t dim, std::size_t count) {
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

// Weight of a cycle filling the whole space.
Integer top_weight(const TropicalCycle& X) {
    if (X.is_zero()) return 0;
    if (X.cells().size() != 1) fail(ErrorKind::InternalInconsistency, "full dimensional cycle with several cells");
    return X.cells()[0].weight;
}

struct Named {
    std::string name;
    TropicalCycle X;
};

std::vector<Named> chow_suite() {
    std::vector<Named> suite;
    for (std::size_t n = 3; n <= 5; ++n)
        for (std::size_t d = 1; d < n; ++d)
            suite.push_back({"L_" + std::to_string(d - 1) + " in n=" + std::to_string(n),
                             linear_skeleton(n, static_cast<int>(d) - 1)});
    suite.push_back({"Bergman fan U(2,4)", fixture_cycle("bergman_u24.json")});
    suite.push_back({"Bergman fan K4", fixture_cycle("bergman_k4.json")});
    suite.push_back(
        {"conic", cycle_from_chow_subdivision(ingest_chow_form(io::chow_form_from_json(io::read_json_file(fx("conic_chowform.json")))), 2)});
    return suite;
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
    return s;
}

}  // namespace

int main() {
    const BracketChowForm conic_form = io::chow_form_from_json(io::read_json_file(fx("conic_chowform.json")));

    criterion(1, "conic: 5 maximal cells, vertex (1,1,2,0)", 10, [&] {
        const RegularSubdivision S = ingest_chow_form(conic_form);
        const auto cells = S.maximal_cells().size();
        const auto verts = S.vertices();
        const bool has = std::find(verts.begin(), verts.end(), IntVector{1, 1, 2, 0}) != verts.end();
        return Outcome{cells == 5 && has, std::to_string(cells) + " cells, (1,1,2,0) " + (has ? "present" : "missing")};
    });

    criterion(2, "conic support is 2*Delta(2,4) with two opposite corners truncated", 10, [&] {
        const RegularSubdivision S = ingest_chow_form(conic_form);
        const bool ok = S.support_vertices() == fixture::truncated_octahedron();
        return Outcome{ok, std::to_string(S.support_vertices().size()) + " support vertices"};
    });

    const std::vector<Named> suite = chow_suite();
    criterion(3, "normal complex of the rebuilt Chow subdivision equals ch(X), " + std::to_string(suite.size()) + " cycles",
              60.0 * static_cast<double>(suite.size()), [&] {
                  std::vector<std::string> bad;
                  double worst = 0;
                  for (const auto& [name, X] : suite) {
                      const auto t1 = Clock::now();
                      try {
                          const TropicalCycle C = chow_map(X);
                          if (!equal_up_to_refinement(normal_complex(chow_subdivision_from_cycle(C), 1), C))
                              bad.push_back(name);
                      } catch (const std::exception& e) {
                          bad.push_back(name + ": " + e.what());
                      }
                      const double t = seconds_since(t1);
                      worst = std::max(worst, t);
                      if (t > 60) bad.push_back(name + ": over 60 s");
                  }
                  char buf[64];
                  std::snprintf(buf, sizeof buf, "slowest cycle %.2f s", worst);
                  return Outcome{bad.empty(), bad.empty() ? std::string(buf) : join(bad)};
              });

    criterion(4, "deg ch(X) = (n - d) deg X", 120, [&] {
        std::vector<Named> all = suite;
        std::mt19937_64 rng(404);
        for (int i = 0; i < 6; ++i)
            all.push_back({"random curve", translate(gen::fan_curve(rng, 3 + i % 2, 3, 1), gen::random_point(rng, 2 + i % 2))});
        std::vector<std::string> bad;
        for (const auto& [name, X] : all) {
            const std::size_t n = X.ambient().n;
            const std::size_t d = static_cast<std::size_t>(X.dim()) + 1;
            const Integer lhs = degree(chow_map(X));
            const Integer rhs = Integer(n - d) * degree(X);
            if (lhs != rhs) bad.push_back(name + ": " + to_string(lhs) + " vs " + to_string(rhs));
        }
        return Outcome{bad.empty(), bad.empty() ? std::to_string(all.size()) + " cycles" : join(bad)};
    });

    // Randomized effective pairs of complementary dimension, shared by criteria 5 and 10.
    struct Pair {
        TropicalCycle X, Y;
    };
    std::vector<Pair> pairs;
    {
        std::mt19937_64 rng(505);
        for (int i = 0; i < 30; ++i)
            pairs.push_back({translate(gen::fan_curve(rng, 3, 3, 2), gen::random_point(rng, 2)),
                             i % 2 ? random_hypersurface(rng, 3, 1 + i % 3)
                                   : translate(gen::fan_curve(rng, 3, 2 + i % 3, 2), gen::random_point(rng, 2))});
        for (int i = 0; i < 30; ++i)
            pairs.push_back({translate(gen::fan_curve(rng, 4, 3, 1), gen::random_point(rng, 3)),
                             random_hypersurface(rng, 4, 1 + i % 2)});
    }

    criterion(5, "deg(X.Y) = deg(X + Y^refl) on " + std::to_string(pairs.size()) + " random pairs, n <= 4", 300, [&] {
        std::vector<std::string> bad;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const Integer lhs = total_weight(stable_intersection(pairs[i].X, pairs[i].Y, i));
            const Integer rhs = top_weight(stable_minkowski_sum(pairs[i].X, reflect(pairs[i].Y)));
            if (lhs != rhs) bad.push_back("pair " + std::to_string(i) + ": " + to_string(lhs) + " vs " + to_string(rhs));
        }
        return Outcome{bad.empty(), join(bad)};
    });

    criterion(6, "Minkowski weight spaces of the permutohedral fan have Eulerian dimensions, n = 3, 4, 5", 300, [&] {
        std::vector<std::string> bad;
        for (std::size_t n = 3; n <= 5; ++n) {
            const PermutohedralFan F(n);
            Integer total = 0;
            for (int k = 0; k < static_cast<int>(n); ++k) {
                const std::size_t dim = weight_space(F, k).dim();
                const Integer expected = descent_count(n, n - 1 - static_cast<std::size_t>(k));
                if (Integer(dim) != expected)
                    bad.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(dim));
                total += dim;
            }
            Integer fact = 1;
            for (std::size_t i = 2; i <= n; ++i) fact *= i;
            if (total != fact) bad.push_back("n=" + std::to_string(n) + " sum " + to_string(total));
        }
        return Outcome{bad.empty(), join(bad)};
    });

    criterion(7, "kernel of ch for n = 5, d = 3: source 66, image 26, kernel 40", 600, [&] {
        const PermutohedralFan F(5);
        const ChowLinearMap ch = chow_matrix(F, 3);
        const auto K = kernel_basis(F, ch);
        bool cycles_ok = true;
        for (const auto& k : K) cycles_ok = cycles_ok && check_balancing(k).balanced && chow_map(k).is_zero();
        std::ostringstream s;
        s << "source " << ch.source.dim() << ", image " << ch.rank() << ", kernel " << K.size()
          << (cycles_ok ? ", all balanced with zero image" : ", a kernel cycle fails");
        return Outcome{ch.source.dim() == 66 && ch.rank() == 26 && K.size() == 40 && cycles_ok, s.str()};
    });

    criterion(8, "linear space recognition: fixture Bergman fans true, conic false", 300, [&] {
        std::vector<Named> fans;
        for (const auto* name : {"bergman_u24.json", "bergman_k4.json", "line.json", "skeleton_n3_k0.json",
                                 "skeleton_n4_k0.json", "skeleton_n4_k1.json", "skeleton_n4_k2.json",
                                 "skeleton_n5_k0.json", "skeleton_n5_k1.json", "skeleton_n5_k2.json",
                                 "skeleton_n5_k3.json"})
            fans.push_back({name, fixture_cycle(name)});
        for (const auto* name : {"k4_matroid.json", "u24_matroid.json"})
            fans.push_back({name, bergman_fan(io::matroid_from_json(io::read_json_file(fx(name))))});
        std::vector<std::string> bad;
        for (const auto& [name, X] : fans) {
            const LinearSpaceCheck r = verify_tropical_linear_space(X);
            if (!r.is_linear_space || !r.subdivision) bad.push_back(name);
        }
        if (verify_tropical_linear_space(fixture_cycle("conic_cycle.json")).is_linear_space) bad.push_back("conic accepted");
        return Outcome{bad.empty(), bad.empty() ? std::to_string(fans.size()) + " fans" : join(bad)};
    });

    criterion(9, "normal complexes of 100 random lifted configurations are balanced in every codimension", 300, [&] {
        std::mt19937_64 rng(909);
        std::size_t complexes = 0;
        std::vector<std::string> bad;
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t dim = 1 + static_cast<std::size_t>(trial % 4);
            const std::size_t cap = std::min<std::size_t>(10, dim == 1 ? 4 : 10);
            const std::size_t count = 2 + static_cast<std::size_t>(rng() % (cap - 1));
            const RegularSubdivision S = random_configuration(rng, dim, count);
            for (int e = 1; e <= S.dim(); ++e) {
                ++complexes;
                if (!check_balancing(normal_complex(S, e)).balanced)
                    bad.push_back("trial " + std::to_string(trial) + " e=" + std::to_string(e));
            }
        }
        return Outcome{bad.empty(), bad.empty() ? std::to_string(complexes) + " skeleta" : join(bad)};
    });

    criterion(10, "deg(X.Y) <= deg X deg Y on the random effective suite", 300, [&] {
        std::vector<std::string> bad;
        std::size_t strict = 0;
        auto check = [&](const TropicalCycle& X, const TropicalCycle& Y, std::size_t i) {
            const Integer lhs = degree(stable_intersection(X, Y, i));
            const Integer rhs = degree(X) * degree(Y);
            if (lhs > rhs) bad.push_back("pair " + std::to_string(i) + ": " + to_string(lhs) + " > " + to_string(rhs));
            if (lhs < rhs) ++strict;
        };
        for (std::size_t i = 0; i < pairs.size(); ++i) check(pairs[i].X, pairs[i].Y, i);
        std::mt19937_64 rng(1010);
        for (std::size_t i = 0; i < 10; ++i)
            check(random_hypersurface(rng, 4, 1 + static_cast<int>(i % 2)), random_hypersurface(rng, 4, 2), pairs.size() + i);
        return Outcome{bad.empty(), bad.empty() ? std::to_string(pairs.size() + 10) + " pairs, " +
                                                      std::to_string(strict) + " strict"
                                                : join(bad)};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
