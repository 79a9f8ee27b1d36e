#include "tropical/arrangement.hpp"

#include <algorithm>
#include <map>

namespace tropical {

Rational evaluate(const IntVector& h, const RatVector& x) {
    Rational s = h[0];
    for (std::size_t i = 0; i < x.size(); ++i)
        if (h[i + 1] != 0) s += Rational(h[i + 1]) * x[i];
    return s;
}

IntVector canonical_hyperplane(const IntVector& row, const IntMatrix& E) {
    IntVector r = reduce_modulo(row, E);
    bool proper = false;
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0) proper = true;
    if (!proper) return {};
    std::size_t j = 0;
    while (r[j] == 0) ++j;
    if (r[j] < 0)
        for (auto& x : r) x = -x;
    return r;
}

std::vector<Polyhedron> split_by(const Polyhedron& P, const std::vector<IntVector>& hyperplanes) {
    std::vector<Polyhedron> pieces{P};
    for (const auto& h : hyperplanes) {
        std::vector<Polyhedron> next;
        for (const auto& Q : pieces) {
            if (side_of(Q, h) != 0) {
                next.push_back(Q);
                continue;
            }
            IntVector neg = h;
            for (auto& x : neg) x = -x;
            next.push_back(cut(Q, h));
            next.push_back(cut(Q, neg));
        }
        pieces = std::move(next);
    }
    return pieces;
}

std::string sign_pattern(const RatVector& p, const std::vector<IntVector>& hyperplanes) {
    std::string s(hyperplanes.size(), '0');
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
        const int v = sign(evaluate(hyperplanes[i], p));
        s[i] = v > 0 ? '+' : (v < 0 ? '-' : '0');
    }
    return s;
}

namespace {

void add_into(IntVector& a, const IntVector& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

std::vector<VectorCell> normalize_group(const std::vector<VectorCell>& items, bool coarsen) {
    const IntMatrix& E = items.front().cell.equations();
    std::map<IntVector, std::size_t> index;
    for (const auto& it : items)
        for (const auto& f : it.cell.facet_inequalities().row_list()) {
            IntVector h = canonical_hyperplane(f, E);
            if (!h.empty()) index.emplace(std::move(h), 0);
        }
    std::vector<IntVector> H;
    for (auto& [h, i] : index) {
        i = H.size();
        H.push_back(h);
    }

    std::map<std::string, VectorCell> cells;
    for (const auto& it : items) {
        for (auto& piece : split_by(it.cell, H)) {
            const std::string key = sign_pattern(piece.relative_interior_point(), H);
            auto found = cells.find(key);
            if (found == cells.end())
                cells.emplace(key, VectorCell{std::move(piece), it.weight});
            else
                add_into(found->second.weight, it.weight);
        }
    }
    for (auto it = cells.begin(); it != cells.end();) {
        if (is_zero(it->second.weight)) it = cells.erase(it);
        else ++it;
    }

    std::vector<VectorCell> out;
    if (!coarsen) {
        for (auto& [k, c] : cells) out.push_back(std::move(c));
        return out;
    }

    std::vector<bool> needed(H.size(), false);
    for (const auto& [key, c] : cells) {
        for (const auto& f : c.cell.facet_inequalities().row_list()) {
            const auto hit = index.find(canonical_hyperplane(f, E));
            if (hit == index.end()) fail(ErrorKind::InternalInconsistency, "normalize: facet outside arrangement");
            const std::size_t i = hit->second;
            if (needed[i]) continue;
            std::string flipped = key;
            flipped[i] = flipped[i] == '+' ? '-' : '+';
            const auto nb = cells.find(flipped);
            if (nb == cells.end() || nb->second.weight != c.weight) needed[i] = true;
        }
    }
    std::map<std::string, std::vector<const VectorCell*>> regions;
    for (const auto& [key, c] : cells) {
        std::string r;
        for (std::size_t i = 0; i < H.size(); ++i)
            if (needed[i]) r.push_back(key[i]);
        regions[r].push_back(&c);
    }
    for (const auto& [r, members] : regions) {
        if (members.size() == 1) {
            out.push_back(*members.front());
            continue;
        }
        std::vector<RatVector> V;
        std::vector<IntVector> R, L;
        for (const auto* m : members) {
            if (m->weight != members.front()->weight)
                fail(ErrorKind::InternalInconsistency, "normalize: region with varying weight");
            V.insert(V.end(), m->cell.vertices().begin(), m->cell.vertices().end());
            R.insert(R.end(), m->cell.rays().begin(), m->cell.rays().end());
            L.insert(L.end(), m->cell.lineality().begin(), m->cell.lineality().end());
        }
        const AmbientSpace& amb = members.front()->cell.ambient();
        out.push_back(VectorCell{Polyhedron::from_generators(amb, V, R, L), members.front()->weight});
    }
    return out;
}

}  // namespace

std::vector<VectorCell> normalize_cells(const std::vector<VectorCell>& items, bool coarsen) {
    std::map<IntMatrix, std::vector<VectorCell>> groups;
    for (const auto& it : items) {
        if (it.cell.is_empty() || is_zero(it.weight)) continue;
        groups[it.cell.equations()].push_back(it);
    }
    std::vector<VectorCell> out;
    for (const auto& [E, g] : groups) {
        auto part = normalize_group(g, coarsen);
        for (auto& c : part) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const VectorCell& a, const VectorCell& b) {
        if (a.cell == b.cell) return a.weight < b.weight;
        return a.cell < b.cell;
    });
    return out;
}

}  // namespace tropical
