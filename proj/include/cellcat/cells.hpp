#pragma once

// The cell tower F_0..F_N: F_0 is the terminal object, F_1 the witness
// interval, and each further cell the wedge of the previous one.  Faces,
// degeneracies and centroids are generated recursively; the apex of every
// wedge sits at face index 0 (the convention forced by the cone equations),
// so Bottom realizes d~_{n+1,0}, the flatten degeneracy realizes s~_{n,0},
// and the wedge functor shifts generator indices up by one.

#include <map>
#include <string>
#include <vector>

#include "cellcat/delta.hpp"
#include "cellcat/kernel.hpp"
#include "cellcat/wedge.hpp"

namespace cellcat {

template <class Cat>
struct CellTower {
    int N = 0;
    AxiomWitnesses<Cat> witnesses;
    std::vector<typename Cat::Obj> cells;                 // F_0..F_N
    std::vector<WedgeData<Cat>> wedges;                   // wedges[n].vertex == cells[n+1]
    std::vector<std::vector<typename Cat::Mor>> faces;    // faces[n][i] : F_{n-1} -> F_n
    std::vector<std::vector<typename Cat::Mor>> degens;   // degens[n][i] : F_{n+1} -> F_n
    std::vector<typename Cat::Mor> centroids;             // centroids[n] : 1 -> F_n, n >= 1
    std::vector<typename Cat::Mor> contractions;          // F_n x F_1 -> F_n
    bool wedge_f0_is_interval = false;

    const typename Cat::Mor& face(int n, int i) const {
        require(1 <= n && n <= N && 0 <= i && i <= n, "face: index out of range");
        return faces[n][i];
    }
    const typename Cat::Mor& degeneracy(int n, int i) const {
        require(0 <= n && n < N && 0 <= i && i <= n, "degeneracy: index out of range");
        return degens[n][i];
    }
    const typename Cat::Mor& centroid(int n) const {
        require(1 <= n && n <= N, "centroid: index out of range");
        return centroids[n];
    }
};

template <class Cat>
CellTower<Cat> build_tower(int N, const AxiomWitnesses<Cat>& w) {
    require(N >= 1, "build_tower: N must be at least 1");
    require(w.contraction.has_value(), "build_tower: interval contraction witness required");

    CellTower<Cat> t;
    t.N = N;
    t.witnesses = w;
    t.cells = {w.terminal, w.interval};
    t.faces.resize(N + 1);
    t.degens.resize(N);
    t.centroids.resize(N + 1);
    t.contractions.resize(N + 1);

    t.wedges.push_back(wedge_interval_presentation<Cat>(w, &t.wedge_f0_is_interval));
    t.faces[1] = {t.wedges[0].bottom, t.wedges[0].top};
    t.centroids[1] = w.basepoint;
    require(t.centroids[1] == w.endpoint1,
            "build_tower: basepoint must be the pinched endpoint of the interval");

    t.contractions[0] = Cat::terminal_morphism(t.wedges[0].cylinder.vertex);
    t.contractions[1] = *w.contraction;

    for (int n = 1; n < N; ++n) {
        t.wedges.push_back(wedge_object<Cat>(t.cells[n], w));
        const auto& wn = t.wedges[n];
        t.cells.push_back(wn.vertex);

        t.faces[n + 1].resize(n + 2);
        t.faces[n + 1][0] = wn.bottom;
        for (int j = 0; j <= n; ++j)
            t.faces[n + 1][j + 1] = wedge_morphism<Cat>(t.faces[n][j], t.wedges[n - 1], wn);

        // a_{n+1} = Pinch o <a_1, a_n>; with a_1 the pinched endpoint this
        // always lands on the apex.
        t.centroids[n + 1] =
            Cat::compose(wn.pinch, pair_morphisms<Cat>(t.centroids[n], w.basepoint, wn.cylinder));
        require(t.centroids[n + 1] == wn.top, "build_tower: centroid did not land on the apex");

        t.contractions[n + 1] = wedge_contraction<Cat>(wn, w);
    }

    for (int n = 0; n < N; ++n) {
        t.degens[n].resize(n + 1);
        t.degens[n][0] = (n == 0)
                             ? flatten_contractible<Cat>(t.cells[0], t.contractions[0],
                                                         Cat::identity(t.cells[0]), t.wedges[0], w)
                             : flatten_contractible<Cat>(t.cells[n], t.contractions[n],
                                                         t.centroids[n], t.wedges[n], w);
        for (int j = 1; j <= n; ++j)
            t.degens[n][j] = wedge_morphism<Cat>(t.degens[n - 1][j - 1], t.wedges[n], t.wedges[n - 1]);
    }
    return t;
}

// ---------------------------------------------------------------------------
// The cosimplicial functor generated by a tower.

template <class Cat>
struct CosimplicialFunctor {
    const CellTower<Cat>* tower = nullptr;
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, typename Cat::Mor> cache;
};

template <class Cat>
typename Cat::Mor apply_functor(CosimplicialFunctor<Cat>& cf, const DeltaMor& phi) {
    require(delta_valid(phi), "apply_functor: not a monotone map");
    const auto& t = *cf.tower;
    require(phi.n <= t.N && phi.m <= t.N, "apply_functor: level exceeds tower");
    auto key = std::make_pair(std::make_pair(phi.m, phi.n), phi.img);
    auto it = cf.cache.find(key);
    if (it != cf.cache.end()) return it->second;

    typename Cat::Mor acc = Cat::identity(t.cells[phi.m]);
    auto word = delta_factorize(phi);
    for (auto g = word.rbegin(); g != word.rend(); ++g) {
        const auto& step = g->is_face ? t.faces[g->level][g->index] : t.degens[g->level][g->index];
        acc = Cat::compose(step, acc);
    }
    cf.cache.emplace(key, acc);
    return acc;
}

// ---------------------------------------------------------------------------
// Identity verification

struct IdentityInstance {
    std::string family;
    int n = 0, i = 0, j = 0;
    bool pass = true;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityInstance> instances;
    int failures = 0;

    void add(const std::string& family, int n, int i, int j, bool pass,
             const std::string& detail = "") {
        instances.push_back({family, n, i, j, pass, detail});
        if (!pass) ++failures;
    }
    bool all_pass() const { return failures == 0; }
};

namespace detail {

template <class Cat>
std::string mor_tables(const typename Cat::Mor&);

template <class Cat>
void check_eq(IdentityReport& rep, const std::string& family, int n, int i, int j,
              const typename Cat::Mor& lhs, const typename Cat::Mor& rhs) {
    bool ok = lhs == rhs;
    rep.add(family, n, i, j, ok, ok ? "" : "sides differ");
}

}  // namespace detail

// All six simplicial identity families plus the wedge/flatten identities the
// recursion rests on, every valid index instance up to the tower height.
template <class Cat>
IdentityReport verify_simplicial_identities(const CellTower<Cat>& t) {
    IdentityReport rep;
    const int N = t.N;
    auto C = [&](const typename Cat::Mor& g, const typename Cat::Mor& f) {
        return Cat::compose(g, f);
    };

    // (i)   d_i d_j = d_{j+1} d_i                    (i <= j)
    for (int n = 1; n <= N - 1; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                detail::check_eq<Cat>(rep, "dd", n, i, j, C(t.faces[n + 1][i], t.faces[n][j]),
                                      C(t.faces[n + 1][j + 1], t.faces[n][i]));

    // (ii)  s_j d_i = d_i s_{j-1}                    (i < j)
    for (int n = 1; n <= N - 1; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                detail::check_eq<Cat>(rep, "sd-lt", n, i, j, C(t.degens[n][j], t.faces[n + 1][i]),
                                      C(t.faces[n][i], t.degens[n - 1][j - 1]));

    // (iii) s_j d_j = id
    for (int n = 0; n <= N - 1; ++n)
        for (int j = 0; j <= n; ++j)
            detail::check_eq<Cat>(rep, "sd-eq", n, j, j, C(t.degens[n][j], t.faces[n + 1][j]),
                                  Cat::identity(t.cells[n]));

    // (iv)  s_j d_{j+1} = id
    for (int n = 0; n <= N - 1; ++n)
        for (int j = 0; j <= n; ++j)
            detail::check_eq<Cat>(rep, "sd-succ", n, j + 1, j, C(t.degens[n][j], t.faces[n + 1][j + 1]),
                                  Cat::identity(t.cells[n]));

    // (v)   s_j d_i = d_{i-1} s_j                    (i > j+1)
    for (int n = 1; n <= N - 1; ++n)
        for (int j = 0; j <= n - 1; ++j)
            for (int i = j + 2; i <= n + 1; ++i)
                detail::check_eq<Cat>(rep, "sd-gt", n, i, j, C(t.degens[n][j], t.faces[n + 1][i]),
                                      C(t.faces[n][i - 1], t.degens[n - 1][j]));

    // (vi)  s_j s_i = s_i s_{j+1}                    (i <= j)
    for (int n = 0; n <= N - 2; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                detail::check_eq<Cat>(rep, "ss", n, i, j, C(t.degens[n][j], t.degens[n + 1][i]),
                                      C(t.degens[n][i], t.degens[n + 1][j + 1]));

    // Wedge-bottom identity: Bottom_{W(X)} o Bottom_X = W(Bottom_X) o Bottom_X.
    for (int k = 0; k <= N - 2; ++k)
        detail::check_eq<Cat>(rep, "wedge-bottom", k, 0, 0,
                              C(t.faces[k + 2][0], t.faces[k + 1][0]),
                              C(t.faces[k + 2][1], t.faces[k + 1][0]));

    // Bottom naturality against faces: W(d_{n,i}) o Bottom = Bottom o d_{n,i}.
    for (int n = 1; n <= N - 1; ++n)
        for (int i = 0; i <= n; ++i)
            detail::check_eq<Cat>(rep, "bottom-natural-face", n, i, 0,
                                  C(t.faces[n + 1][i + 1], t.faces[n][0]),
                                  C(t.faces[n + 1][0], t.faces[n][i]));

    // Bottom naturality against degeneracies: W(s_{n-1,j}) o Bottom = Bottom o s_{n-1,j}.
    for (int n = 1; n <= N - 1; ++n)
        for (int j = 0; j <= n - 1; ++j)
            detail::check_eq<Cat>(rep, "bottom-natural-degen", n, 0, j,
                                  C(t.degens[n][j + 1], t.faces[n + 1][0]),
                                  C(t.faces[n][0], t.degens[n - 1][j]));

    // Flatten naturality against faces that preserve the centroid:
    // s_{n,0} o W(d_{n,i}) = d_{n,i} o s_{n-1,0} for i >= 1.
    for (int n = 1; n <= N - 1; ++n)
        for (int i = 1; i <= n; ++i)
            detail::check_eq<Cat>(rep, "flatten-natural-face", n, i, 0,
                                  C(t.degens[n][0], t.faces[n + 1][i + 1]),
                                  C(t.faces[n][i], t.degens[n - 1][0]));

    // Flatten retraction: s_{n,0} o Bottom = id (the contractibility identity).
    for (int n = 0; n <= N - 1; ++n)
        detail::check_eq<Cat>(rep, "flatten-retraction", n, 0, 0,
                              C(t.degens[n][0], t.faces[n + 1][0]), Cat::identity(t.cells[n]));

    // Flatten after the wedged bottom: s_{n,0} o W(Bottom) = id.
    for (int n = 1; n <= N - 1; ++n)
        detail::check_eq<Cat>(rep, "flatten-wedged-bottom", n, 1, 0,
                              C(t.degens[n][0], t.faces[n + 1][1]), Cat::identity(t.cells[n]));

    return rep;
}

}  // namespace cellcat
