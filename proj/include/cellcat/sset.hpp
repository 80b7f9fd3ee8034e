#pragma once

// Finite simplicial sets truncated at a fixed dimension D.  Products and
// colimits are levelwise; maps are determined by their values on
// nondegenerate simplices, which is what the backtracking hom-search
// exploits.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cellcat/delta.hpp"
#include "cellcat/types.hpp"
#include "cellcat/util.hpp"

namespace cellcat {

struct SSetObj {
    int dim = 0;                  // truncation bound D
    std::vector<int> levels;      // levels[n] = number of n-simplices, n = 0..D
    // faces[n][i] : level n -> level n-1, for 1 <= n <= D, 0 <= i <= n.
    std::vector<std::vector<std::vector<int>>> faces;
    // degens[n][i] : level n -> level n+1, for 0 <= n < D, 0 <= i <= n.
    std::vector<std::vector<std::vector<int>>> degens;

    auto operator<=>(const SSetObj&) const = default;
    bool operator==(const SSetObj&) const = default;
};

struct SSetMor {
    SSetObj dom;
    SSetObj cod;
    std::vector<std::vector<int>> level_maps;  // one image table per level

    auto operator<=>(const SSetMor&) const = default;
    bool operator==(const SSetMor&) const = default;
};

struct SSetViolation {
    std::string relation;  // e.g. "d_i d_j = d_{j-1} d_i"
    int n = 0, i = 0, j = 0, simplex = 0;
};

struct SSetCat {
    using Obj = SSetObj;
    using Mor = SSetMor;

    static constexpr const char* name = "sset";

    static int face_of(const Obj& x, int n, int i, int s) { return x.faces[n][i][s]; }
    static int degen_of(const Obj& x, int n, int i, int s) { return x.degens[n][i][s]; }

    // -- validation ---------------------------------------------------------

    static std::vector<SSetViolation> validate(const Obj& x) {
        std::vector<SSetViolation> out;
        const int D = x.dim;
        auto shape_bad = [&]() {
            if (static_cast<int>(x.levels.size()) != D + 1) return true;
            if (static_cast<int>(x.faces.size()) != D + 1 ||
                static_cast<int>(x.degens.size()) != D + 1)
                return true;
            for (int n = 1; n <= D; ++n) {
                if (static_cast<int>(x.faces[n].size()) != n + 1) return true;
                for (int i = 0; i <= n; ++i) {
                    if (static_cast<int>(x.faces[n][i].size()) != x.levels[n]) return true;
                    for (int v : x.faces[n][i])
                        if (v < 0 || v >= x.levels[n - 1]) return true;
                }
            }
            for (int n = 0; n < D; ++n) {
                if (static_cast<int>(x.degens[n].size()) != n + 1) return true;
                for (int i = 0; i <= n; ++i) {
                    if (static_cast<int>(x.degens[n][i].size()) != x.levels[n]) return true;
                    for (int v : x.degens[n][i])
                        if (v < 0 || v >= x.levels[n + 1]) return true;
                }
            }
            return false;
        };
        if (shape_bad()) {
            out.push_back({"table shape/totality", 0, 0, 0, 0});
            return out;
        }

        // d_i d_j = d_{j-1} d_i  (i < j), applied to n-simplices.
        for (int n = 2; n <= D; ++n)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    for (int s = 0; s < x.levels[n]; ++s)
                        if (x.faces[n - 1][i][x.faces[n][j][s]] !=
                            x.faces[n - 1][j - 1][x.faces[n][i][s]])
                            out.push_back({"d_i d_j = d_{j-1} d_i", n, i, j, s});

        // s_i s_j = s_{j+1} s_i  (i <= j), applied to n-simplices.
        for (int n = 0; n + 2 <= D; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    for (int s = 0; s < x.levels[n]; ++s)
                        if (x.degens[n + 1][i][x.degens[n][j][s]] !=
                            x.degens[n + 1][j + 1][x.degens[n][i][s]])
                            out.push_back({"s_i s_j = s_{j+1} s_i", n, i, j, s});

        // d_i s_j relations, applied to n-simplices.
        for (int n = 0; n + 1 <= D; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i)
                    for (int s = 0; s < x.levels[n]; ++s) {
                        int lhs = x.faces[n + 1][i][x.degens[n][j][s]];
                        int rhs;
                        if (i == j || i == j + 1)
                            rhs = s;
                        else if (i < j) {
                            if (n == 0) continue;
                            rhs = x.degens[n - 1][j - 1][x.faces[n][i][s]];
                        } else {  // i > j + 1
                            if (n == 0) continue;
                            rhs = x.degens[n - 1][j][x.faces[n][i - 1][s]];
                        }
                        if (lhs != rhs) out.push_back({"d_i s_j mixed relation", n, i, j, s});
                    }
        return out;
    }

    static Obj make_object(int dim, std::vector<int> levels,
                           std::vector<std::vector<std::vector<int>>> faces,
                           std::vector<std::vector<std::vector<int>>> degens) {
        Obj x{dim, std::move(levels), std::move(faces), std::move(degens)};
        auto bad = validate(x);
        require(bad.empty(), "sset object violates the simplicial identities (" +
                                 std::to_string(bad.size()) + " instances)");
        return x;
    }

    static void validate_map(const Mor& f) {
        require(f.dom.dim == f.cod.dim, "sset morphism: dimension bounds differ");
        const int D = f.dom.dim;
        require(static_cast<int>(f.level_maps.size()) == D + 1, "sset morphism: level maps missing");
        for (int n = 0; n <= D; ++n) {
            require(static_cast<int>(f.level_maps[n].size()) == f.dom.levels[n],
                    "sset morphism: level map not total");
            for (int v : f.level_maps[n])
                require(0 <= v && v < f.cod.levels[n], "sset morphism: image out of range");
        }
        for (int n = 1; n <= D; ++n)
            for (int i = 0; i <= n; ++i)
                for (int s = 0; s < f.dom.levels[n]; ++s)
                    require(f.cod.faces[n][i][f.level_maps[n][s]] ==
                                f.level_maps[n - 1][f.dom.faces[n][i][s]],
                            "sset morphism: does not commute with face " + std::to_string(n) + "," +
                                std::to_string(i));
        for (int n = 0; n < D; ++n)
            for (int i = 0; i <= n; ++i)
                for (int s = 0; s < f.dom.levels[n]; ++s)
                    require(f.cod.degens[n][i][f.level_maps[n][s]] ==
                                f.level_maps[n + 1][f.dom.degens[n][i][s]],
                            "sset morphism: does not commute with degeneracy");
    }

    static Mor make_morphism(Obj dom, Obj cod, std::vector<std::vector<int>> lm) {
        Mor f{std::move(dom), std::move(cod), std::move(lm)};
        validate_map(f);
        return f;
    }

    // -- basic structure ----------------------------------------------------

    static Mor identity(const Obj& x) {
        std::vector<std::vector<int>> lm(x.dim + 1);
        for (int n = 0; n <= x.dim; ++n) {
            lm[n].resize(x.levels[n]);
            std::iota(lm[n].begin(), lm[n].end(), 0);
        }
        return Mor{x, x, std::move(lm)};
    }

    static Mor compose(const Mor& g, const Mor& f) {
        require(f.cod == g.dom, "sset compose: codomain/domain mismatch");
        std::vector<std::vector<int>> lm(f.dom.dim + 1);
        for (int n = 0; n <= f.dom.dim; ++n) {
            lm[n].resize(f.level_maps[n].size());
            for (std::size_t s = 0; s < f.level_maps[n].size(); ++s)
                lm[n][s] = g.level_maps[n][f.level_maps[n][s]];
        }
        return Mor{f.dom, g.cod, std::move(lm)};
    }

    static Obj point(int dim) {
        Obj x;
        x.dim = dim;
        x.levels.assign(dim + 1, 1);
        x.faces.resize(dim + 1);
        x.degens.resize(dim + 1);
        for (int n = 1; n <= dim; ++n) x.faces[n].assign(n + 1, {0});
        for (int n = 0; n < dim; ++n) x.degens[n].assign(n + 1, {0});
        return x;
    }

    static Obj empty_like(const Obj& sample) {
        Obj x;
        x.dim = sample.dim;
        x.levels.assign(x.dim + 1, 0);
        x.faces.resize(x.dim + 1);
        x.degens.resize(x.dim + 1);
        for (int n = 1; n <= x.dim; ++n) x.faces[n].assign(n + 1, {});
        for (int n = 0; n < x.dim; ++n) x.degens[n].assign(n + 1, {});
        return x;
    }

    static Mor from_empty(const Obj& e, const Obj& t) {
        for (int c : e.levels) require(c == 0, "from_empty: source not empty");
        return Mor{e, t, std::vector<std::vector<int>>(e.dim + 1)};
    }

    static Obj terminal() { return point(default_dim); }
    static inline int default_dim = 5;  // used only when no object fixes the truncation

    static Mor terminal_morphism(const Obj& x) {
        Obj pt = point(x.dim);
        std::vector<std::vector<int>> lm(x.dim + 1);
        for (int n = 0; n <= x.dim; ++n) lm[n].assign(x.levels[n], 0);
        return Mor{x, pt, std::move(lm)};
    }

    // Standard simplex Delta[k] truncated at dim: n-simplices are the
    // monotone maps [n] -> [k] in lexicographic order.
    static Obj standard_simplex(int k, int dim) {
        Obj x;
        x.dim = dim;
        x.levels.resize(dim + 1);
        x.faces.resize(dim + 1);
        x.degens.resize(dim + 1);
        std::vector<std::vector<DeltaMor>> homs(dim + 1);
        std::vector<std::map<std::vector<int>, int>> index(dim + 1);
        for (int n = 0; n <= dim; ++n) {
            homs[n] = delta_hom(n, k);
            x.levels[n] = static_cast<int>(homs[n].size());
            for (int s = 0; s < x.levels[n]; ++s) index[n][homs[n][s].img] = s;
        }
        for (int n = 1; n <= dim; ++n) {
            x.faces[n].assign(n + 1, std::vector<int>(x.levels[n]));
            for (int i = 0; i <= n; ++i)
                for (int s = 0; s < x.levels[n]; ++s)
                    x.faces[n][i][s] = index[n - 1].at(delta_compose(homs[n][s], delta_face(n, i)).img);
        }
        for (int n = 0; n < dim; ++n) {
            x.degens[n].assign(n + 1, std::vector<int>(x.levels[n]));
            for (int i = 0; i <= n; ++i)
                for (int s = 0; s < x.levels[n]; ++s)
                    x.degens[n][i][s] =
                        index[n + 1].at(delta_compose(homs[n][s], delta_degeneracy(n, i)).img);
        }
        return x;
    }

    // -- products -----------------------------------------------------------

    static ProductData<SSetCat> product(const Obj& a, const Obj& b) {
        require(a.dim == b.dim, "sset product: dimension bounds differ");
        const int D = a.dim;
        Obj v;
        v.dim = D;
        v.levels.resize(D + 1);
        v.faces.resize(D + 1);
        v.degens.resize(D + 1);
        for (int n = 0; n <= D; ++n) v.levels[n] = a.levels[n] * b.levels[n];
        for (int n = 1; n <= D; ++n) {
            v.faces[n].assign(n + 1, std::vector<int>(v.levels[n]));
            for (int i = 0; i <= n; ++i)
                for (int sa = 0; sa < a.levels[n]; ++sa)
                    for (int sb = 0; sb < b.levels[n]; ++sb)
                        v.faces[n][i][sa * b.levels[n] + sb] =
                            a.faces[n][i][sa] * b.levels[n - 1] + b.faces[n][i][sb];
        }
        for (int n = 0; n < D; ++n) {
            v.degens[n].assign(n + 1, std::vector<int>(v.levels[n]));
            for (int i = 0; i <= n; ++i)
                for (int sa = 0; sa < a.levels[n]; ++sa)
                    for (int sb = 0; sb < b.levels[n]; ++sb)
                        v.degens[n][i][sa * b.levels[n] + sb] =
                            a.degens[n][i][sa] * b.levels[n + 1] + b.degens[n][i][sb];
        }
        std::vector<std::vector<int>> p1(D + 1), p2(D + 1);
        for (int n = 0; n <= D; ++n) {
            p1[n].resize(v.levels[n]);
            p2[n].resize(v.levels[n]);
            for (int sa = 0; sa < a.levels[n]; ++sa)
                for (int sb = 0; sb < b.levels[n]; ++sb) {
                    p1[n][sa * b.levels[n] + sb] = sa;
                    p2[n][sa * b.levels[n] + sb] = sb;
                }
        }
        return {v, Mor{v, a, std::move(p1)}, Mor{v, b, std::move(p2)}};
    }

    static Mor pair(const Mor& f, const Mor& g, const ProductData<SSetCat>& p) {
        require(f.dom == g.dom, "sset pair: domain mismatch");
        require(f.cod == p.proj1.cod && g.cod == p.proj2.cod, "sset pair: factor mismatch");
        const int D = f.dom.dim;
        std::vector<std::vector<int>> lm(D + 1);
        for (int n = 0; n <= D; ++n) {
            int nb = p.proj2.cod.levels[n];
            lm[n].resize(f.level_maps[n].size());
            for (std::size_t s = 0; s < lm[n].size(); ++s)
                lm[n][s] = f.level_maps[n][s] * nb + g.level_maps[n][s];
        }
        return Mor{f.dom, p.vertex, std::move(lm)};
    }

    // -- colimits -----------------------------------------------------------

    static ColimitData<SSetCat> colimit(const Diagram<SSetCat>& d) {
        require(!d.objects.empty(), "sset colimit: empty diagram");
        const int D = d.objects[0].dim;
        for (const auto& o : d.objects)
            require(o.dim == D, "sset colimit: dimension bounds differ");
        for (const auto& ar : d.arrows)
            require(ar.mor.dom == d.objects[ar.src] && ar.mor.cod == d.objects[ar.dst],
                    "sset colimit: arrow endpoints disagree with diagram");

        const int K = static_cast<int>(d.objects.size());
        std::vector<std::vector<int>> offset(D + 1, std::vector<int>(K + 1, 0));
        for (int n = 0; n <= D; ++n)
            for (int k = 0; k < K; ++k) offset[n][k + 1] = offset[n][k] + d.objects[k].levels[n];

        std::vector<std::vector<int>> parent(D + 1);
        for (int n = 0; n <= D; ++n) {
            parent[n].resize(offset[n][K]);
            std::iota(parent[n].begin(), parent[n].end(), 0);
        }
        auto find = [&](int n, int v) {
            while (parent[n][v] != v) v = parent[n][v] = parent[n][parent[n][v]];
            return v;
        };
        auto unite = [&](int n, int a, int b) {
            a = find(n, a);
            b = find(n, b);
            if (a == b) return;
            if (a > b) std::swap(a, b);
            parent[n][b] = a;
        };
        for (const auto& ar : d.arrows)
            for (int n = 0; n <= D; ++n)
                for (int s = 0; s < d.objects[ar.src].levels[n]; ++s)
                    unite(n, offset[n][ar.src] + s, offset[n][ar.dst] + ar.mor.level_maps[n][s]);

        // Dense class ids in least-member order.
        std::vector<std::vector<int>> class_id(D + 1);
        Obj v;
        v.dim = D;
        v.levels.assign(D + 1, 0);
        for (int n = 0; n <= D; ++n) {
            class_id[n].assign(offset[n][K], -1);
            for (int s = 0; s < offset[n][K]; ++s) {
                int r = find(n, s);
                if (class_id[n][r] < 0) class_id[n][r] = v.levels[n]++;
                class_id[n][s] = class_id[n][r];
            }
        }

        auto piece = [&](int n, int global) {
            int k = 0;
            while (offset[n][k + 1] <= global) ++k;
            return std::pair<int, int>(k, global - offset[n][k]);
        };

        // Structure tables induced from any member; checked on every member.
        v.faces.resize(D + 1);
        v.degens.resize(D + 1);
        for (int n = 1; n <= D; ++n) v.faces[n].assign(n + 1, std::vector<int>(v.levels[n], -1));
        for (int n = 0; n < D; ++n) v.degens[n].assign(n + 1, std::vector<int>(v.levels[n], -1));
        for (int n = 0; n <= D; ++n) {
            for (int s = 0; s < offset[n][K]; ++s) {
                auto [k, loc] = piece(n, s);
                int c = class_id[n][s];
                if (n >= 1)
                    for (int i = 0; i <= n; ++i) {
                        int img = class_id[n - 1][offset[n - 1][k] + d.objects[k].faces[n][i][loc]];
                        if (v.faces[n][i][c] < 0)
                            v.faces[n][i][c] = img;
                        else if (v.faces[n][i][c] != img)
                            throw backend_inconsistency("sset colimit: face table ill-defined");
                    }
                if (n < D)
                    for (int i = 0; i <= n; ++i) {
                        int img = class_id[n + 1][offset[n + 1][k] + d.objects[k].degens[n][i][loc]];
                        if (v.degens[n][i][c] < 0)
                            v.degens[n][i][c] = img;
                        else if (v.degens[n][i][c] != img)
                            throw backend_inconsistency("sset colimit: degeneracy table ill-defined");
                    }
            }
        }

        ColimitData<SSetCat> out;
        out.vertex = v;
        for (int k = 0; k < K; ++k) {
            std::vector<std::vector<int>> lm(D + 1);
            for (int n = 0; n <= D; ++n) {
                lm[n].resize(d.objects[k].levels[n]);
                for (int s = 0; s < d.objects[k].levels[n]; ++s)
                    lm[n][s] = class_id[n][offset[n][k] + s];
            }
            out.injections.push_back(Mor{d.objects[k], v, std::move(lm)});
        }
        return out;
    }

    static Mor factor_cocone(const std::vector<Mor>& injections, const std::vector<Mor>& legs) {
        require(!injections.empty() && injections.size() == legs.size(),
                "sset factor_cocone: arity mismatch");
        const Obj& vertex = injections[0].cod;
        const Obj& target = legs[0].cod;
        for (std::size_t k = 0; k < injections.size(); ++k) {
            require(injections[k].cod == vertex, "sset factor_cocone: injections disagree");
            require(legs[k].cod == target, "sset factor_cocone: legs disagree");
            require(injections[k].dom == legs[k].dom,
                    "sset factor_cocone: leg/injection domain mismatch");
        }
        const int D = vertex.dim;
        std::vector<std::vector<int>> lm(D + 1);
        for (int n = 0; n <= D; ++n) lm[n].assign(vertex.levels[n], -1);
        for (std::size_t k = 0; k < injections.size(); ++k)
            for (int n = 0; n <= D; ++n)
                for (std::size_t s = 0; s < injections[k].level_maps[n].size(); ++s) {
                    int at = injections[k].level_maps[n][s];
                    int val = legs[k].level_maps[n][s];
                    if (lm[n][at] < 0)
                        lm[n][at] = val;
                    else
                        require(lm[n][at] == val, "sset factor_cocone: cocone does not commute");
                }
        for (int n = 0; n <= D; ++n)
            for (int v : lm[n]) require(v >= 0, "sset factor_cocone: family not jointly surjective");
        Mor u{vertex, target, std::move(lm)};
        validate_map(u);
        return u;
    }

    // -- degeneracy bookkeeping ----------------------------------------------

    struct EZIndex {
        std::vector<std::vector<bool>> nondeg;                 // [n][s]
        std::vector<std::vector<std::pair<int, int>>> peel;    // [n][s] = (i, t) with s = s_i(t)
        std::vector<std::pair<int, int>> order;                // nondeg (n, s), level-major
    };

    static EZIndex ez_index(const Obj& x) {
        EZIndex ez;
        const int D = x.dim;
        ez.nondeg.resize(D + 1);
        ez.peel.resize(D + 1);
        for (int n = 0; n <= D; ++n) {
            ez.nondeg[n].assign(x.levels[n], true);
            ez.peel[n].assign(x.levels[n], {-1, -1});
        }
        for (int n = 0; n < D; ++n)
            for (int i = n; i >= 0; --i)  // smallest i wins as the recorded peel
                for (int t = 0; t < x.levels[n]; ++t) {
                    int s = x.degens[n][i][t];
                    ez.nondeg[n + 1][s] = false;
                    ez.peel[n + 1][s] = {i, t};
                }
        for (int n = 0; n <= D; ++n)
            for (int s = 0; s < x.levels[n]; ++s)
                if (ez.nondeg[n][s]) ez.order.push_back({n, s});
        return ez;
    }

    static std::vector<int> nondeg_census(const Obj& x) {
        auto ez = ez_index(x);
        std::vector<int> out(x.dim + 1, 0);
        for (int n = 0; n <= x.dim; ++n)
            for (int s = 0; s < x.levels[n]; ++s)
                if (ez.nondeg[n][s]) ++out[n];
        return out;
    }

    static std::string describe(const Obj& x) {
        auto c = nondeg_census(x);
        std::string s = "nondeg=[";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "]";
    }

    // -- hom search ----------------------------------------------------------

  private:
    struct SearchCtx {
        const Obj* x;
        const Obj* y;
        const EZIndex* ez;
        std::vector<std::vector<int>> assigned;  // value per x-simplex, -1 unknown
        std::vector<std::vector<int>> pins;      // pinned value per x-simplex core, -1 none
        bool bijective = false;
        std::vector<std::vector<bool>> used;     // bijective mode: y nondeg already used
        const EZIndex* ezy = nullptr;
        Budget* budget = nullptr;
        std::size_t max_count = SIZE_MAX;
        std::vector<Mor>* out = nullptr;
        bool exhausted = false;
    };

    // Value of an arbitrary (possibly degenerate) x-simplex under the partial
    // assignment of nondegenerate values.  Cores at lower levels are always
    // assigned before this is called.
    static int value_of(SearchCtx& c, int n, int s) {
        if (c.ez->nondeg[n][s]) return c.assigned[n][s];
        auto [i, t] = c.ez->peel[n][s];
        int v = value_of(c, n - 1, t);
        return c.y->degens[n - 1][i][v];
    }

    static void search_rec(SearchCtx& c, std::size_t k) {
        if (c.exhausted || c.out->size() >= c.max_count) return;
        if (k == c.ez->order.size()) {
            std::vector<std::vector<int>> lm(c.x->dim + 1);
            SearchCtx* cp = &c;
            for (int n = 0; n <= c.x->dim; ++n) {
                lm[n].resize(c.x->levels[n]);
                for (int s = 0; s < c.x->levels[n]; ++s) lm[n][s] = value_of(*cp, n, s);
            }
            Mor f{*c.x, *c.y, std::move(lm)};
            validate_map(f);
            c.out->push_back(std::move(f));
            return;
        }
        auto [n, s] = c.ez->order[k];
        int pin = c.pins[n][s];
        for (int cand = 0; cand < c.y->levels[n]; ++cand) {
            if (pin >= 0 && cand != pin) continue;
            if (c.bijective && (!c.ezy->nondeg[n][cand] || c.used[n][cand])) continue;
            if (!c.budget->spend()) {
                c.exhausted = true;
                return;
            }
            bool ok = true;
            for (int i = 0; i <= n && ok; ++i) {
                if (n == 0) break;
                int want = value_of(c, n - 1, c.x->faces[n][i][s]);
                if (c.y->faces[n][i][cand] != want) ok = false;
            }
            if (!ok) continue;
            c.assigned[n][s] = cand;
            if (c.bijective) c.used[n][cand] = true;
            search_rec(c, k + 1);
            if (c.bijective) c.used[n][cand] = false;
            c.assigned[n][s] = -1;
            if (c.exhausted || c.out->size() >= c.max_count) return;
        }
    }

    // Reduce elementwise pins to pins on nondegenerate cores; returns false
    // on a contradiction.
    static bool reduce_pins(const Obj& x, const Obj& y, const EZIndex& ez,
                            const std::vector<HomConstraint<SSetCat>>& cons,
                            std::vector<std::vector<int>>& pins) {
        pins.assign(x.dim + 1, {});
        for (int n = 0; n <= x.dim; ++n) pins[n].assign(x.levels[n], -1);
        for (const auto& c : cons) {
            require(c.embed.cod == x && c.value.cod == y && c.embed.dom == c.value.dom,
                    "sset hom_constrained: malformed constraint");
            for (int n = 0; n <= x.dim; ++n)
                for (std::size_t s = 0; s < c.embed.level_maps[n].size(); ++s) {
                    int at = c.embed.level_maps[n][s];
                    int val = c.value.level_maps[n][s];
                    // Peel down to the core, mirroring with d_i on the value.
                    int lvl = n, cur = at, v = val;
                    std::vector<int> word;
                    while (!ez.nondeg[lvl][cur]) {
                        auto [i, t] = ez.peel[lvl][cur];
                        word.push_back(i);
                        v = y.faces[lvl][i][v];
                        cur = t;
                        --lvl;
                    }
                    // The pinned value must re-expand to the original one.
                    int back = v, bl = lvl;
                    for (auto it = word.rbegin(); it != word.rend(); ++it) {
                        back = y.degens[bl][*it][back];
                        ++bl;
                    }
                    if (back != val) return false;
                    if (pins[lvl][cur] >= 0 && pins[lvl][cur] != v) return false;
                    pins[lvl][cur] = v;
                }
        }
        return true;
    }

    static Search<Mor> run_search(const Obj& x, const Obj& y,
                                  const std::vector<HomConstraint<SSetCat>>& cons, Budget& budget,
                                  std::size_t max_count, bool bijective) {
        require(x.dim == y.dim, "sset hom search: dimension bounds differ");
        Search<Mor> res;
        EZIndex ez = ez_index(x);
        EZIndex ezy = ez_index(y);
        if (bijective) {
            for (int n = 0; n <= x.dim; ++n) {
                int cx = 0, cy = 0;
                for (int s = 0; s < x.levels[n]; ++s) cx += ez.nondeg[n][s];
                for (int s = 0; s < y.levels[n]; ++s) cy += ezy.nondeg[n][s];
                if (cx != cy) {
                    res.status = SearchStatus::NotFound;
                    return res;
                }
            }
        }
        SearchCtx c;
        c.x = &x;
        c.y = &y;
        c.ez = &ez;
        c.ezy = &ezy;
        c.bijective = bijective;
        c.budget = &budget;
        c.max_count = max_count;
        c.out = &res.results;
        c.assigned.resize(x.dim + 1);
        for (int n = 0; n <= x.dim; ++n) c.assigned[n].assign(x.levels[n], -1);
        if (bijective) {
            c.used.resize(y.dim + 1);
            for (int n = 0; n <= y.dim; ++n) c.used[n].assign(y.levels[n], false);
        }
        if (!reduce_pins(x, y, ez, cons, c.pins)) {
            res.status = SearchStatus::NotFound;
            return res;
        }
        search_rec(c, 0);
        if (c.exhausted)
            res.status = SearchStatus::Exhausted;
        else
            res.status = res.results.empty() ? SearchStatus::NotFound : SearchStatus::Found;
        return res;
    }

  public:
    // Complete list of simplicial maps a -> b in deterministic order:
    // backtracking over nondegenerate simplices by increasing degree,
    // extended to degenerate ones by naturality.
    static Search<Mor> hom_set(const Obj& a, const Obj& b, Budget& budget) {
        return run_search(a, b, {}, budget, SIZE_MAX, false);
    }

    static Search<Mor> hom_constrained(const Obj& x, const Obj& y,
                                       const std::vector<HomConstraint<SSetCat>>& cons,
                                       Budget& budget, std::size_t max_count) {
        return run_search(x, y, cons, budget, max_count, false);
    }

    static Search<Mor> iso_search(const Obj& a, const Obj& b, Budget& budget) {
        return run_search(a, b, {}, budget, 1, true);
    }

    static bool is_iso(const Mor& f) {
        for (int n = 0; n <= f.dom.dim; ++n) {
            if (f.dom.levels[n] != f.cod.levels[n]) return false;
            std::vector<bool> hit(f.cod.levels[n], false);
            for (int v : f.level_maps[n]) {
                if (hit[v]) return false;
                hit[v] = true;
            }
        }
        return true;
    }

    static Mor invert_iso(const Mor& f) {
        require(is_iso(f), "sset invert_iso: not an isomorphism");
        std::vector<std::vector<int>> lm(f.dom.dim + 1);
        for (int n = 0; n <= f.dom.dim; ++n) {
            lm[n].resize(f.cod.levels[n]);
            for (std::size_t s = 0; s < f.level_maps[n].size(); ++s)
                lm[n][f.level_maps[n][s]] = static_cast<int>(s);
        }
        return Mor{f.cod, f.dom, std::move(lm)};
    }

    static bool is_monic(const Mor& f) {
        for (int n = 0; n <= f.dom.dim; ++n) {
            std::vector<bool> hit(f.cod.levels[n], false);
            for (int v : f.level_maps[n]) {
                if (hit[v]) return false;
                hit[v] = true;
            }
        }
        return true;
    }

    // Witness bundle at truncation dim.  The pinched end of the interval is
    // vertex 0, matching the face conventions of the generated tower; the
    // contraction is the pointwise-min map.  Order reversal of Delta[1]
    // conjugates d_i to d_{1-i}, so it is not a simplicial self-map and no
    // swap witness exists in this backend.
    static AxiomWitnesses<SSetCat> witnesses(int dim) {
        require(dim >= 2, "sset witnesses: dimension bound must be at least 2");
        AxiomWitnesses<SSetCat> w{};
        w.terminal = point(dim);
        w.interval = standard_simplex(1, dim);

        auto vertex_inclusion = [&](int vtx) {
            std::vector<std::vector<int>> lm(dim + 1);
            for (int n = 0; n <= dim; ++n) {
                // index of the constant-vtx monotone map in lex order
                auto homs = delta_hom(n, 1);
                int idx = -1;
                for (std::size_t s = 0; s < homs.size(); ++s) {
                    bool all = true;
                    for (int v : homs[s].img)
                        if (v != vtx) all = false;
                    if (all) idx = static_cast<int>(s);
                }
                lm[n] = {idx};
            }
            return Mor{w.terminal, w.interval, std::move(lm)};
        };
        w.endpoint0 = vertex_inclusion(1);  // d~_{1,0} skips 0, so it hits vertex 1
        w.endpoint1 = vertex_inclusion(0);
        w.swap.reset();
        w.basepoint = vertex_inclusion(0);

        auto pd = product(w.interval, w.interval);
        std::vector<std::vector<int>> lm(dim + 1);
        for (int n = 0; n <= dim; ++n) {
            auto homs = delta_hom(n, 1);
            std::map<std::vector<int>, int> index;
            for (std::size_t s = 0; s < homs.size(); ++s) index[homs[s].img] = static_cast<int>(s);
            int L = static_cast<int>(homs.size());
            lm[n].resize(L * L);
            for (int sa = 0; sa < L; ++sa)
                for (int sb = 0; sb < L; ++sb) {
                    std::vector<int> m(n + 1);
                    for (int j = 0; j <= n; ++j)
                        m[j] = std::min(homs[sa].img[j], homs[sb].img[j]);
                    lm[n][sa * L + sb] = index.at(m);
                }
        }
        w.contraction = Mor{pd.vertex, w.interval, std::move(lm)};
        return w;
    }
};

}  // namespace cellcat
