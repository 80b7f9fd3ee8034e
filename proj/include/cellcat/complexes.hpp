#pragma once

// Compound objects built from cells: spheres as face-diagram colimits,
// handle attachment, geometric simplicial complex diagrams, abstract
// simplicial complexes, the conversions between them, and coend
// realization of a truncated simplicial set.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cellcat/asc.hpp"
#include "cellcat/cells.hpp"
#include "cellcat/kernel.hpp"
#include "cellcat/sset.hpp"

namespace cellcat {

// Indices with d_{n,i} o d_{n-1,alpha} = d_{n,j} o d_{n-1,beta} for i < j.
inline std::pair<int, int> sphere_indices(int n, int i, int j) {
    require(0 <= i && i < j && j <= n, "sphere_indices: need 0 <= i < j <= n");
    return {j - 1, i};
}

template <class Cat>
struct SphereData {
    int n = 0;
    typename Cat::Obj vertex;     // S^{n-1}
    typename Cat::Mor inclusion;  // S^{n-1} -> F_n
    bool is_monic = false;
};

// S^{n-1} as the colimit of one copy of F_{n-1} per face index, glued along
// shared F_{n-2} faces; the inclusion into F_n is induced by the face maps.
// S^{-1} is the empty object.
template <class Cat>
SphereData<Cat> sphere(const CellTower<Cat>& t, int n) {
    require(0 <= n && n <= t.N, "sphere: level out of range");
    SphereData<Cat> out;
    out.n = n;
    if (n == 0) {
        out.vertex = Cat::empty_like(t.cells[0]);
        out.inclusion = Cat::from_empty(out.vertex, t.cells[0]);
        out.is_monic = true;
        return out;
    }
    Diagram<Cat> d;
    for (int i = 0; i <= n; ++i) d.objects.push_back(t.cells[n - 1]);
    std::vector<typename Cat::Mor> legs;
    for (int i = 0; i <= n; ++i) legs.push_back(t.faces[n][i]);
    if (n >= 2) {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto [alpha, beta] = sphere_indices(n, i, j);
                int g = static_cast<int>(d.objects.size());
                d.objects.push_back(t.cells[n - 2]);
                d.arrows.push_back({g, i, t.faces[n - 1][alpha]});
                d.arrows.push_back({g, j, t.faces[n - 1][beta]});
                legs.push_back(Cat::compose(t.faces[n][i], t.faces[n - 1][alpha]));
                require(legs.back() == Cat::compose(t.faces[n][j], t.faces[n - 1][beta]),
                        "sphere: defining face equation failed");
            }
    }
    auto c = Cat::colimit(d);
    out.vertex = c.vertex;
    out.inclusion = Cat::factor_cocone(c.injections, legs);
    out.is_monic = Cat::is_monic(out.inclusion);
    return out;
}

// One k-handle to attach: the glueing map alpha : S^{k-1} -> x.
template <class Cat>
struct HandleSpec {
    int k = 0;
    typename Cat::Mor alpha;
};

template <class Cat>
struct AttachResult {
    typename Cat::Obj vertex;
    typename Cat::Mor base_injection;               // x -> vertex
    std::vector<typename Cat::Mor> cell_injections; // F_{k_s} -> vertex
};

// X u_{a_1} F_{k_1} ... u_{a_m} F_{k_m}: the multi-legged pushout gluing one
// cell per spec along its boundary sphere.
template <class Cat>
AttachResult<Cat> attach_handles(const CellTower<Cat>& t, const typename Cat::Obj& x,
                                 const std::vector<HandleSpec<Cat>>& specs) {
    Diagram<Cat> d;
    d.objects.push_back(x);
    std::vector<int> cell_nodes;
    for (const auto& s : specs) {
        auto sp = sphere<Cat>(t, s.k);
        require(s.alpha.dom == sp.vertex && s.alpha.cod == x,
                "attach_handles: alpha must map the boundary sphere into x");
        int cell = static_cast<int>(d.objects.size());
        d.objects.push_back(t.cells[s.k]);
        int bnd = static_cast<int>(d.objects.size());
        d.objects.push_back(sp.vertex);
        d.arrows.push_back({bnd, cell, sp.inclusion});
        d.arrows.push_back({bnd, 0, s.alpha});
        cell_nodes.push_back(cell);
    }
    auto c = Cat::colimit(d);
    AttachResult<Cat> out;
    out.vertex = c.vertex;
    out.base_injection = c.injections[0];
    for (int node : cell_nodes) out.cell_injections.push_back(c.injections[node]);
    return out;
}

// ---------------------------------------------------------------------------
// Geometric simplicial complex diagrams

struct GSCDiagram {
    struct Arrow {
        int from = 0, to = 0;  // node ids
        int j = 0;             // face index
    };
    std::vector<std::vector<int>> levels;  // node ids per level 0..L
    std::vector<Arrow> arrows;
};

inline void gsc_validate(const GSCDiagram& g) {
    std::map<int, int> level_of;
    for (std::size_t l = 0; l < g.levels.size(); ++l)
        for (int id : g.levels[l]) {
            require(!level_of.count(id), "gsc: node id appears twice");
            level_of[id] = static_cast<int>(l);
        }
    for (const auto& ar : g.arrows) {
        require(level_of.count(ar.from) && level_of.count(ar.to), "gsc: arrow endpoint unknown");
        int l = level_of.at(ar.from);
        require(level_of.at(ar.to) == l + 1, "gsc: arrows must connect consecutive levels");
        require(0 <= ar.j && ar.j <= l + 1, "gsc: face index out of range");
    }
}

template <class Cat>
ColimitData<Cat> gsc_colimit(const CellTower<Cat>& t, const GSCDiagram& g) {
    gsc_validate(g);
    require(static_cast<int>(g.levels.size()) - 1 <= t.N, "gsc_colimit: diagram exceeds tower");
    std::map<int, int> node_index;
    std::map<int, int> node_level;
    Diagram<Cat> d;
    for (std::size_t l = 0; l < g.levels.size(); ++l)
        for (int id : g.levels[l]) {
            node_index[id] = static_cast<int>(d.objects.size());
            node_level[id] = static_cast<int>(l);
            d.objects.push_back(t.cells[l]);
        }
    require(!d.objects.empty(), "gsc_colimit: empty diagram");
    for (const auto& ar : g.arrows) {
        int l = node_level.at(ar.from);
        d.arrows.push_back({node_index.at(ar.from), node_index.at(ar.to), t.faces[l + 1][ar.j]});
    }
    return Cat::colimit(d);
}

// The combinatorial record of a GSC: each node spans the vertex set reached
// by tracing arrows down to level 0.
inline ASC gsc_to_asc(const GSCDiagram& g) {
    gsc_validate(g);
    require(!g.levels.empty(), "gsc_to_asc: empty diagram");
    std::map<int, std::set<int>> span;
    std::vector<std::string> vertices;
    std::map<int, int> vertex_index;
    for (int id : g.levels[0]) {
        vertex_index[id] = static_cast<int>(vertices.size());
        vertices.push_back(std::to_string(id));
        span[id] = {vertex_index[id]};
    }
    for (std::size_t l = 1; l < g.levels.size(); ++l)
        for (int id : g.levels[l]) span[id] = {};
    // Propagate level by level so every source span is already complete.
    for (std::size_t l = 0; l + 1 < g.levels.size(); ++l)
        for (const auto& ar : g.arrows) {
            bool from_here = false;
            for (int id : g.levels[l])
                if (id == ar.from) from_here = true;
            if (!from_here) continue;
            span[ar.to].insert(span[ar.from].begin(), span[ar.from].end());
        }
    std::vector<std::vector<int>> faces;
    for (std::size_t l = 0; l < g.levels.size(); ++l)
        for (int id : g.levels[l]) {
            require(span[id].size() == l + 1,
                    "gsc_to_asc: node " + std::to_string(id) + " does not span " +
                        std::to_string(l + 1) + " distinct vertices");
            faces.emplace_back(span[id].begin(), span[id].end());
        }
    ASC a;
    a.vertices = vertices;
    for (auto& f : faces) a.faces.insert(f);
    asc_validate(a);  // closure must already hold; do not silently close
    return a;
}

// Canonical simplicial set of an ASC: n-simplices are the weakly increasing
// vertex tuples whose support is a face.
inline SSetObj asc_to_sset(const ASC& a, int dim) {
    asc_validate(a);
    const int V = static_cast<int>(a.vertices.size());
    std::vector<std::vector<std::vector<int>>> tuples(dim + 1);
    std::vector<std::map<std::vector<int>, int>> index(dim + 1);
    for (int n = 0; n <= dim; ++n) {
        std::vector<int> cur(n + 1, 0);
        std::function<void(int, int)> rec = [&](int pos, int lo) {
            if (pos == n + 1) {
                std::vector<int> support(cur);
                support.erase(std::unique(support.begin(), support.end()), support.end());
                if (a.faces.count(support)) {
                    index[n][cur] = static_cast<int>(tuples[n].size());
                    tuples[n].push_back(cur);
                }
                return;
            }
            for (int v = lo; v < V; ++v) {
                cur[pos] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, 0);
    }
    SSetObj x;
    x.dim = dim;
    x.levels.resize(dim + 1);
    x.faces.resize(dim + 1);
    x.degens.resize(dim + 1);
    for (int n = 0; n <= dim; ++n) x.levels[n] = static_cast<int>(tuples[n].size());
    for (int n = 1; n <= dim; ++n) {
        x.faces[n].assign(n + 1, std::vector<int>(x.levels[n]));
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < x.levels[n]; ++s) {
                std::vector<int> sub;
                for (int p = 0; p <= n; ++p)
                    if (p != i) sub.push_back(tuples[n][s][p]);
                x.faces[n][i][s] = index[n - 1].at(sub);
            }
    }
    for (int n = 0; n < dim; ++n) {
        x.degens[n].assign(n + 1, std::vector<int>(x.levels[n]));
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < x.levels[n]; ++s) {
                std::vector<int> dup;
                for (int p = 0; p <= n; ++p) {
                    dup.push_back(tuples[n][s][p]);
                    if (p == i) dup.push_back(tuples[n][s][p]);
                }
                x.degens[n][i][s] = index[n + 1].at(dup);
            }
    }
    auto bad = SSetCat::validate(x);
    require(bad.empty(), "asc_to_sset: generated tables violate the simplicial identities");
    return x;
}

// ---------------------------------------------------------------------------
// Realization

// Coend of the tower against a truncated simplicial set: one copy of F_n per
// n-simplex, glued along every face and degeneracy generator.
template <class Cat>
ColimitData<Cat> realize_colimit(const CellTower<Cat>& t, const SSetObj& x) {
    require(x.dim <= t.N, "realize: truncation too small for the tower, or tower too short");
    Diagram<Cat> d;
    std::vector<std::vector<int>> node(x.dim + 1);
    for (int n = 0; n <= x.dim; ++n) {
        node[n].resize(x.levels[n]);
        for (int s = 0; s < x.levels[n]; ++s) {
            node[n][s] = static_cast<int>(d.objects.size());
            d.objects.push_back(t.cells[n]);
        }
    }
    require(!d.objects.empty(), "realize: empty simplicial set");
    for (int n = 1; n <= x.dim; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < x.levels[n]; ++s)
                d.arrows.push_back({node[n - 1][x.faces[n][i][s]], node[n][s], t.faces[n][i]});
    for (int n = 0; n < x.dim; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < x.levels[n]; ++s)
                d.arrows.push_back({node[n + 1][x.degens[n][i][s]], node[n][s], t.degens[n][i]});
    return Cat::colimit(d);
}

template <class Cat>
typename Cat::Obj realize(const CellTower<Cat>& t, const SSetObj& x) {
    return realize_colimit<Cat>(t, x).vertex;
}

// For a representable input (the standard k-simplex) the cocone of functor
// images induces the canonical comparison map realize(Delta[k]) -> F_k.
template <class Cat>
typename Cat::Mor realize_representable_comparison(CosimplicialFunctor<Cat>& cf, int k,
                                                   const SSetObj& delta_k,
                                                   const ColimitData<Cat>& colim) {
    const auto& t = *cf.tower;
    require(k <= t.N, "realize comparison: level exceeds tower");
    std::vector<typename Cat::Mor> legs;
    std::size_t idx = 0;
    for (int n = 0; n <= delta_k.dim; ++n) {
        auto homs = delta_hom(n, k);
        require(static_cast<int>(homs.size()) == delta_k.levels[n],
                "realize comparison: input is not the standard simplex");
        for (const auto& phi : homs) {
            legs.push_back(apply_functor(cf, phi));
            ++idx;
        }
    }
    require(idx == colim.injections.size(), "realize comparison: node count mismatch");
    return Cat::factor_cocone(colim.injections, legs);
}

}  // namespace cellcat
