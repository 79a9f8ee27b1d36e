// tropical: command-line front end for cycles, Chow data, matroids and the permutohedral fan.
//
// Exit codes: 0 success, 1 domain failure (including an unbalanced cycle), 2 malformed input.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "document.hpp"
#include "tropical/permutofan.hpp"

using namespace tropical;
using io::json;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    bool quiet = false;
    std::string output;
};

Globals globals;

void emit(const std::string& text) {
    if (globals.output.empty())
        std::cout << text;
    else
        io::write_atomic(globals.output, text);
}

void emit(const json& j) { emit(j.dump(2) + "\n"); }

void note(const std::string& line) {
    if (!globals.quiet) std::cerr << line << "\n";
}

void print_error(const char* kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

TropicalCycle read_cycle(const std::string& path) { return io::cycle_from_json(io::read_json_file(path)); }

int cmd_balance(const std::string& path) {
    const TropicalCycle X = read_cycle(path);
    const BalancingReport r = check_balancing(X);
    json out{{"balanced", r.balanced}};
    if (!r.balanced) {
        if (r.witness) out["witness"] = io::polyhedron_to_json(*r.witness);
        json res = json::array();
        for (const auto& x : r.residual) res.push_back(io::integer_to_json(x));
        out["residual"] = res;
    }
    emit(out);
    return r.balanced ? 0 : 1;
}

json vertex_list(const std::vector<IntVector>& points) {
    json v = json::array();
    for (const auto& p : points) {
        json row = json::array();
        for (const auto& x : p) row.push_back(io::integer_to_json(x));
        v.push_back(row);
    }
    return json{{"vertices", v}};
}

int cmd_chow(const std::string& path, bool polytope, bool hypersurface, bool subdivision) {
    if (int(polytope) + int(hypersurface) + int(subdivision) != 1)
        throw io::MalformedInput("chow: pass exactly one of --polytope, --hypersurface, --subdivision");
    const json doc = io::read_json_file(path);
    if (doc.contains("terms")) {
        // A Chow form document stands for its Chow subdivision directly.
        const RegularSubdivision S = ingest_chow_form(io::chow_form_from_json(doc));
        if (subdivision) emit(io::subdivision_to_json(S));
        if (hypersurface) emit(io::cycle_to_json(normal_complex(S, 1)));
        if (polytope) emit(vertex_list(S.support_vertices()));
        return 0;
    }
    const TropicalCycle X = io::cycle_from_json(doc);
    if (polytope) {
        emit(vertex_list(chow_polytope(X, globals.seed)));
        return 0;
    }
    const TropicalCycle C = chow_map(X);
    if (hypersurface)
        emit(io::cycle_to_json(C));
    else
        emit(io::subdivision_to_json(chow_subdivision_from_cycle(C)));
    return 0;
}

int cmd_an_kernel(std::size_t n, std::size_t d, const std::string& dir) {
    if (n < 2 || n > 12 || d < 1 || d > n - 1)
        fail(ErrorKind::InvalidArgument, "an-kernel: need 2 <= n <= 12 and 1 <= d <= n - 1");
    const PermutohedralFan F(n);
    const ChowLinearMap ch = chow_matrix(F, d);
    const std::size_t image = ch.rank();
    json out{{"n", n}, {"d", d}, {"dim_source", ch.source.dim()}, {"dim_image", image},
             {"dim_kernel", ch.source.dim() - image}};
    if (!dir.empty()) {
        const auto K = kernel_basis(F, ch);
        std::filesystem::create_directories(dir);
        for (std::size_t i = 0; i < K.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "kernel_%03zu.json", i);
            io::write_atomic((std::filesystem::path(dir) / name).string(), io::cycle_to_json(K[i]).dump(2) + "\n");
        }
        note("wrote " + std::to_string(K.size()) + " kernel cycles to " + dir);
    }
    emit(out);
    return 0;
}

int cmd_linear_space(const std::string& path) {
    const LinearSpaceCheck r = verify_tropical_linear_space(read_cycle(path), globals.seed);
    json out{{"linear_space", r.is_linear_space}};
    if (r.subdivision) {
        out["rank"] = r.subdivision->rank();
        out["subdivision"] = io::subdivision_to_json(r.subdivision->subdivision());
    }
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropical cycles, Chow polytopes and Chow subdivisions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", globals.seed, "Seed for generic choices (default 0)");
    app.add_flag("--quiet", globals.quiet, "Suppress notes on stderr");
    app.add_option("--output", globals.output, "Write the result to this file instead of stdout");

    std::string a, b, map_file, plot_file, basis_dir;
    bool polytope = false, hypersurface = false, subdivision = false;
    std::size_t n = 0, d = 0;
    int k = 0;

    auto* balance = app.add_subcommand("balance", "Check the balancing condition; exit 1 when unbalanced");
    balance->add_option("cycle", a)->required();
    auto* intersect = app.add_subcommand("intersect", "Stable intersection of two cycles");
    intersect->add_option("first", a)->required();
    intersect->add_option("second", b)->required();
    auto* minkowski = app.add_subcommand("minkowski", "Stable Minkowski sum of two cycles");
    minkowski->add_option("first", a)->required();
    minkowski->add_option("second", b)->required();
    auto* reflect_cmd = app.add_subcommand("reflect", "The cycle -X");
    reflect_cmd->add_option("cycle", a)->required();
    auto* push = app.add_subcommand("push", "Push a cycle forward along a lattice map");
    push->add_option("cycle", a)->required();
    push->add_option("--map", map_file, "Map document")->required();
    auto* pull = app.add_subcommand("pull", "Pull a cycle back along a lattice map");
    pull->add_option("cycle", a)->required();
    pull->add_option("--map", map_file, "Map document")->required();
    auto* degree_cmd = app.add_subcommand("degree", "Degree of a cycle in R^n / R1");
    degree_cmd->add_option("cycle", a)->required();
    auto* chow = app.add_subcommand("chow", "Chow polytope, Chow hypersurface or Chow subdivision");
    chow->add_option("input", a, "Cycle document or Chow form document")->required();
    chow->add_flag("--polytope", polytope);
    chow->add_flag("--hypersurface", hypersurface);
    chow->add_flag("--subdivision", subdivision);
    auto* chowform = app.add_subcommand("chowform", "Regular subdivision of a bracket Chow form");
    chowform->add_option("form", a)->required();
    chowform->add_option("--plot", plot_file, "Also write a decimal geometry dump here");
    auto* an_kernel = app.add_subcommand("an-kernel", "Kernel of the Chow map on the permutohedral fan");
    an_kernel->add_option("--n", n)->required();
    an_kernel->add_option("--d", d)->required();
    an_kernel->add_option("--emit-basis", basis_dir, "Directory for kernel basis cycles");
    auto* skeleton = app.add_subcommand("skeleton", "The fan L_k in R^n / R1");
    skeleton->add_option("--n", n)->required();
    skeleton->add_option("--k", k)->required();
    auto* bergman = app.add_subcommand("bergman", "Tropical linear space of a matroid");
    bergman->add_option("matroid", a)->required();
    auto* linear_space = app.add_subcommand("linear-space", "Decide whether a cycle is a tropical linear space");
    linear_space->add_option("cycle", a)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("MalformedInput", e.what());
        return 2;
    }

    try {
        if (*balance) return cmd_balance(a);
        if (*intersect) {
            GenericityCertificate cert;
            const TropicalCycle Z = stable_intersection(read_cycle(a), read_cycle(b), globals.seed, &cert);
            note("stable intersection: " + std::to_string(cert.attempts) + " attempt(s), " +
                 std::to_string(cert.transverse_pairs) + " transverse pair(s)");
            emit(io::cycle_to_json(Z));
        }
        if (*minkowski) emit(io::cycle_to_json(stable_minkowski_sum(read_cycle(a), read_cycle(b))));
        if (*reflect_cmd) emit(io::cycle_to_json(reflect(read_cycle(a))));
        if (*push) emit(io::cycle_to_json(pushforward(io::map_from_json(io::read_json_file(map_file)), read_cycle(a))));
        if (*pull) emit(io::cycle_to_json(pullback(io::map_from_json(io::read_json_file(map_file)), read_cycle(a))));
        if (*degree_cmd) emit(to_string(degree(read_cycle(a), globals.seed)) + "\n");
        if (*chow) return cmd_chow(a, polytope, hypersurface, subdivision);
        if (*chowform) {
            const RegularSubdivision S = ingest_chow_form(io::chow_form_from_json(io::read_json_file(a)));
            if (!plot_file.empty()) io::write_atomic(plot_file, io::subdivision_plot(S).dump(2) + "\n");
            emit(io::subdivision_to_json(S));
        }
        if (*an_kernel) return cmd_an_kernel(n, d, basis_dir);
        if (*skeleton) emit(io::cycle_to_json(linear_skeleton(n, k)));
        if (*bergman) emit(io::cycle_to_json(bergman_fan(io::matroid_from_json(io::read_json_file(a)))));
        if (*linear_space) return cmd_linear_space(a);
        return 0;
    } catch (const io::MalformedInput& e) {
        print_error("MalformedInput", e.what());
        return 2;
    } catch (const json::exception& e) {
        print_error("MalformedInput", e.what());
        return 2;
    } catch (const Error& e) {
        print_error(error_kind_name(e.kind()), e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error("IOError", e.what());
        return 1;
    }
}
