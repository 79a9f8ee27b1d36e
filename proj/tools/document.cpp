#include "document.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <unistd.h>

namespace tropical::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedInput(what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

const json& array_field(const json& j, const char* key) {
    const json& a = field(j, key);
    if (!a.is_array()) malformed(std::string("field '") + key + "' must be an array");
    return a;
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
    if (j.is_string()) {
        try {
            const Rational r = parse_rational(j.get<std::string>());
            if (denominator(r) == 1) return numerator(r);
        } catch (const Error&) {
        }
    }
    malformed("expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error&) {
        }
    }
    malformed("expected a rational \"p/q\", got " + j.dump());
}

std::size_t size_from_json(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        malformed(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

IntVector int_vector(const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) malformed("expected an integer vector of length " + std::to_string(n));
    IntVector v;
    for (const auto& x : j) v.push_back(integer_from_json(x));
    return v;
}

RatVector rat_vector(const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) malformed("expected a rational vector of length " + std::to_string(n));
    RatVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json to_json(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
}

json to_json(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

// Representative of a direction in R^n / R1 with smallest coordinate zero.
IntVector direction_to_full(const AmbientSpace& amb, const IntVector& internal) {
    IntVector v = amb.to_full(internal);
    if (amb.quotient_all_ones && !v.empty()) {
        const Integer m = *std::min_element(v.begin(), v.end());
        for (auto& x : v) x -= m;
    }
    return v;
}

std::vector<std::size_t> subset_from_json(const json& j, std::size_t n) {
    if (!j.is_array()) malformed("a bracket must be an array of indices");
    std::vector<std::size_t> J;
    for (const auto& x : j) {
        const std::size_t i = size_from_json(x, "bracket index");
        if (i < 1 || i > n) malformed("bracket index out of range 1.." + std::to_string(n));
        J.push_back(i - 1);
    }
    return J;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace

json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return json(x.convert_to<long long>());
    return json(to_string(x));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) malformed("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        malformed(path + ": " + e.what());
    }
}

void write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename to " + path + ": " + ec.message());
    }
}

json ambient_to_json(const AmbientSpace& amb) { return {{"n", amb.n}, {"quotient_all_ones", amb.quotient_all_ones}}; }

AmbientSpace ambient_from_json(const json& j) {
    AmbientSpace amb;
    amb.n = size_from_json(field(j, "n"), "ambient n");
    const json& q = field(j, "quotient_all_ones");
    if (!q.is_boolean()) malformed("quotient_all_ones must be a boolean");
    amb.quotient_all_ones = q.get<bool>();
    if (amb.n == 0 || (amb.quotient_all_ones && amb.n < 2)) malformed("ambient too small");
    return amb;
}

json polyhedron_to_json(const Polyhedron& P) {
    const AmbientSpace& amb = P.ambient();
    json f;
    f["vertices"] = json::array();
    for (const auto& v : P.vertices()) f["vertices"].push_back(to_json(amb.to_full(v)));
    f["rays"] = json::array();
    for (const auto& r : P.rays()) f["rays"].push_back(to_json(direction_to_full(amb, r)));
    f["lineality"] = json::array();
    for (const auto& l : P.lineality()) f["lineality"].push_back(to_json(direction_to_full(amb, l)));
    return f;
}

json cycle_to_json(const TropicalCycle& X) {
    json j;
    j["ambient"] = ambient_to_json(X.ambient());
    j["dimension"] = X.dim();
    j["facets"] = json::array();
    for (const auto& c : X.cells()) {
        json f = polyhedron_to_json(c.cell);
        f["weight"] = integer_to_json(c.weight);
        j["facets"].push_back(f);
    }
    return j;
}

TropicalCycle cycle_from_json(const json& j) {
    const AmbientSpace amb = ambient_from_json(field(j, "ambient"));
    const json& facets = array_field(j, "facets");
    std::vector<WeightedCell> cells;
    for (const auto& f : facets) {
        std::vector<RatVector> verts;
        for (const auto& v : array_field(f, "vertices")) verts.push_back(amb.to_internal(rat_vector(v, amb.n)));
        if (verts.empty()) malformed("a facet needs at least one vertex");
        std::vector<IntVector> rays, lin;
        if (f.contains("rays"))
            for (const auto& r : array_field(f, "rays")) rays.push_back(amb.to_internal(int_vector(r, amb.n)));
        if (f.contains("lineality"))
            for (const auto& l : array_field(f, "lineality")) lin.push_back(amb.to_internal(int_vector(l, amb.n)));
        const Integer w = f.contains("weight") ? integer_from_json(f.at("weight")) : Integer(1);
        cells.push_back({Polyhedron::from_generators(amb, verts, rays, lin), w});
    }
    int dim;
    if (j.contains("dimension")) {
        if (!j.at("dimension").is_number_integer()) malformed("dimension must be an integer");
        dim = j.at("dimension").get<int>();
    } else if (!cells.empty()) {
        dim = cells[0].cell.dim();
    } else {
        malformed("an empty cycle needs a dimension");
    }
    return TropicalCycle::from_weighted_polyhedra(amb, dim, cells);
}

json subdivision_to_json(const RegularSubdivision& S) {
    json j;
    j["ambient"] = ambient_to_json(S.ambient());
    j["points"] = json::array();
    for (const auto& p : S.points()) j["points"].push_back(to_json(p));
    j["heights"] = to_json(S.heights());
    j["cells"] = S.maximal_cells();
    j["vertices"] = json::array();
    for (const auto& v : S.vertices()) j["vertices"].push_back(to_json(v));
    return j;
}

RegularSubdivision subdivision_from_json(const json& j) {
    const AmbientSpace amb = ambient_from_json(field(j, "ambient"));
    std::vector<IntVector> pts;
    for (const auto& p : array_field(j, "points")) pts.push_back(int_vector(p, amb.n));
    const json& h = array_field(j, "heights");
    if (h.size() != pts.size()) malformed("heights and points differ in length");
    std::vector<Rational> hs;
    for (const auto& x : h) hs.push_back(rational_from_json(x));
    return RegularSubdivision(amb, pts, hs);
}

json subdivision_plot(const RegularSubdivision& S) {
    json j;
    j["points"] = json::array();
    for (const auto& p : S.points()) {
        json row = json::array();
        for (const auto& x : p) row.push_back(to_double(Rational(x)));
        j["points"].push_back(row);
    }
    j["heights"] = json::array();
    for (const auto& h : S.heights()) j["heights"].push_back(to_double(h));
    auto index_of = [&](const RatVector& lifted) {
        for (std::size_t i = 0; i < S.points().size(); ++i) {
            bool same = S.heights()[i] == lifted.back();
            for (std::size_t k = 0; same && k < S.points()[i].size(); ++k) same = lifted[k] == Rational(S.points()[i][k]);
            if (same) return i;
        }
        fail(ErrorKind::InternalInconsistency, "plot: vertex is not an input point");
    };
    j["vertices"] = json::array();
    for (const auto& F : S.lower_faces(0)) j["vertices"].push_back(index_of(F.vertices()[0]));
    j["edges"] = json::array();
    for (const auto& F : S.lower_faces(1))
        j["edges"].push_back({index_of(F.vertices()[0]), index_of(F.vertices()[1])});
    j["cells"] = S.maximal_cells();
    return j;
}

json chow_form_to_json(const BracketChowForm& f) {
    json j{{"n", f.n}, {"d", f.d}, {"r", f.r}, {"terms", json::array()}};
    for (const auto& t : f.terms) {
        json mono = json::array();
        for (const auto& J : t.monomial) {
            json s = json::array();
            for (const auto i : J) s.push_back(i + 1);
            mono.push_back(s);
        }
        j["terms"].push_back({{"monomial", mono}, {"valuation", to_string(t.valuation)}});
    }
    return j;
}

BracketChowForm chow_form_from_json(const json& j) {
    BracketChowForm f;
    f.n = size_from_json(field(j, "n"), "n");
    f.d = size_from_json(field(j, "d"), "d");
    f.r = size_from_json(field(j, "r"), "r");
    for (const auto& t : array_field(j, "terms")) {
        BracketChowForm::Term term;
        for (const auto& J : array_field(t, "monomial")) term.monomial.push_back(subset_from_json(J, f.n));
        term.valuation = rational_from_json(field(t, "valuation"));
        f.terms.push_back(term);
    }
    return f;
}

json matroid_to_json(const Matroid& M) {
    json bases = json::array();
    for (const auto& B : M.bases()) {
        json b = json::array();
        for (const auto i : B) b.push_back(i + 1);
        bases.push_back(b);
    }
    return {{"n", M.size()}, {"rank", M.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
    const std::size_t n = size_from_json(field(j, "n"), "n");
    std::vector<std::vector<std::size_t>> bases;
    for (const auto& B : array_field(j, "bases")) bases.push_back(subset_from_json(B, n));
    return Matroid(n, bases);
}

LatticeMap map_from_json(const json& j) {
    LatticeMap h;
    h.source = ambient_from_json(field(j, "source"));
    h.target = ambient_from_json(field(j, "target"));
    const json& rows = array_field(j, "matrix");
    if (rows.size() != h.target.n) malformed("matrix needs one row per target coordinate");
    h.matrix = IntMatrix(h.source.n);
    for (const auto& r : rows) h.matrix.append_row(int_vector(r, h.source.n));
    return h;
}

}  // namespace tropical::io
