#pragma once

// Finite sets and functions.  Degenerate as a homotopy theory (everything is
// homotopic to everything) but exactly solvable, which is what makes it the
// primary oracle: the generated cell tower must reproduce the combinatorial
// simplex on the nose.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "cellcat/types.hpp"
#include "cellcat/util.hpp"

namespace cellcat {

struct FinSetObj {
    // Distinct element names; position in the vector is the element id used
    // by every morphism table.  Creation order is fixed and drives the
    // deterministic labeling of quotients.
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(labels.size()); }
    auto operator<=>(const FinSetObj&) const = default;
    bool operator==(const FinSetObj&) const = default;
};

struct FinSetMor {
    FinSetObj dom;
    FinSetObj cod;
    std::vector<int> table;  // table[i] = image of element i

    auto operator<=>(const FinSetMor&) const = default;
    bool operator==(const FinSetMor&) const = default;
};

struct FinSetCat {
    using Obj = FinSetObj;
    using Mor = FinSetMor;

    static constexpr const char* name = "finset";

    static Obj make_object(std::vector<std::string> labels) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                require(labels[i] != labels[j], "finset object: duplicate label " + labels[i]);
        return Obj{std::move(labels)};
    }

    static void validate(const Mor& f) {
        require(static_cast<int>(f.table.size()) == f.dom.size(), "finset morphism: table not total");
        for (int v : f.table)
            require(0 <= v && v < f.cod.size(), "finset morphism: image out of range");
    }

    static Mor make_morphism(Obj dom, Obj cod, std::vector<int> table) {
        Mor f{std::move(dom), std::move(cod), std::move(table)};
        validate(f);
        return f;
    }

    static Mor identity(const Obj& x) {
        std::vector<int> t(x.size());
        std::iota(t.begin(), t.end(), 0);
        return Mor{x, x, std::move(t)};
    }

    static Mor compose(const Mor& g, const Mor& f) {
        require(f.cod == g.dom, "finset compose: codomain/domain mismatch");
        std::vector<int> t(f.table.size());
        for (std::size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[f.table[i]];
        return Mor{f.dom, g.cod, std::move(t)};
    }

    static Obj terminal() { return Obj{{"*"}}; }

    static Obj empty_like(const Obj&) { return Obj{}; }

    static Mor from_empty(const Obj& e, const Obj& t) {
        require(e.size() == 0, "from_empty: source not empty");
        return Mor{e, t, {}};
    }

    static Mor terminal_morphism(const Obj& x) {
        return Mor{x, terminal(), std::vector<int>(x.size(), 0)};
    }

    // Cartesian product; pairs enumerated with the first factor slow.
    static ProductData<FinSetCat> product(const Obj& a, const Obj& b) {
        Obj v;
        std::vector<int> p1, p2;
        v.labels.reserve(static_cast<std::size_t>(a.size()) * b.size());
        for (int i = 0; i < a.size(); ++i) {
            for (int j = 0; j < b.size(); ++j) {
                v.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
                p1.push_back(i);
                p2.push_back(j);
            }
        }
        return {v, Mor{v, a, std::move(p1)}, Mor{v, b, std::move(p2)}};
    }

    static Mor pair(const Mor& f, const Mor& g, const ProductData<FinSetCat>& p) {
        require(f.dom == g.dom, "finset pair: domain mismatch");
        require(f.cod == p.proj1.cod && g.cod == p.proj2.cod, "finset pair: factor mismatch");
        int nb = p.proj2.cod.size();
        std::vector<int> t(f.table.size());
        for (std::size_t i = 0; i < f.table.size(); ++i) t[i] = f.table[i] * nb + g.table[i];
        return Mor{f.dom, p.vertex, std::move(t)};
    }

    // Colimit of a finite diagram: union-find on the disjoint union, one
    // relation x ~ f(x) per arrow.  Class ids follow the least member in
    // disjoint-union order, class labels are the least member's label.
    static ColimitData<FinSetCat> colimit(const Diagram<FinSetCat>& d) {
        require(!d.objects.empty(), "finset colimit: empty diagram");
        std::vector<int> offset(d.objects.size() + 1, 0);
        for (std::size_t k = 0; k < d.objects.size(); ++k)
            offset[k + 1] = offset[k] + d.objects[k].size();
        int total = offset.back();

        std::vector<int> parent(total);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int x, int y) {
            x = find(x);
            y = find(y);
            if (x == y) return;
            if (x > y) std::swap(x, y);  // keep least index as root
            parent[y] = x;
        };

        for (const auto& ar : d.arrows) {
            require(ar.src >= 0 && ar.src < static_cast<int>(d.objects.size()) &&
                        ar.dst >= 0 && ar.dst < static_cast<int>(d.objects.size()),
                    "finset colimit: arrow endpoint out of range");
            require(ar.mor.dom == d.objects[ar.src] && ar.mor.cod == d.objects[ar.dst],
                    "finset colimit: arrow morphism endpoints disagree with diagram");
            for (int e = 0; e < ar.mor.dom.size(); ++e)
                unite(offset[ar.src] + e, offset[ar.dst] + ar.mor.table[e]);
        }

        std::vector<int> class_id(total, -1);
        Obj vertex;
        for (int x = 0; x < total; ++x) {
            int r = find(x);
            if (class_id[r] < 0) {
                class_id[r] = vertex.size();
                int k = 0;
                while (offset[k + 1] <= r) ++k;
                vertex.labels.push_back(d.objects[k].labels[r - offset[k]]);
            }
            class_id[x] = class_id[r];
        }

        ColimitData<FinSetCat> out;
        out.vertex = vertex;
        for (std::size_t k = 0; k < d.objects.size(); ++k) {
            std::vector<int> t(d.objects[k].size());
            for (int e = 0; e < d.objects[k].size(); ++e) t[e] = class_id[offset[k] + e];
            out.injections.push_back(Mor{d.objects[k], vertex, std::move(t)});
        }
        return out;
    }

    // Factors a cocone through a jointly surjective family: returns the
    // unique u with u o inj_k = legs_k.  Rejects non-commuting cocones.
    static Mor factor_cocone(const std::vector<Mor>& injections, const std::vector<Mor>& legs) {
        require(!injections.empty() && injections.size() == legs.size(),
                "finset factor_cocone: arity mismatch");
        const Obj& vertex = injections[0].cod;
        const Obj& target = legs[0].cod;
        for (std::size_t k = 0; k < injections.size(); ++k) {
            require(injections[k].cod == vertex, "finset factor_cocone: injections disagree");
            require(legs[k].cod == target, "finset factor_cocone: legs disagree");
            require(injections[k].dom == legs[k].dom, "finset factor_cocone: leg/injection domain mismatch");
        }
        std::vector<int> t(vertex.size(), -1);
        for (std::size_t k = 0; k < injections.size(); ++k) {
            for (std::size_t e = 0; e < injections[k].table.size(); ++e) {
                int v = injections[k].table[e];
                int val = legs[k].table[e];
                if (t[v] < 0)
                    t[v] = val;
                else
                    require(t[v] == val, "finset factor_cocone: cocone does not commute");
            }
        }
        for (int v : t)
            require(v >= 0, "finset factor_cocone: family not jointly surjective");
        return Mor{vertex, target, std::move(t)};
    }

    // Every map a -> b, by lexicographic tables.
    static Search<Mor> hom_set(const Obj& a, const Obj& b, Budget& budget) {
        Search<Mor> out;
        if (b.size() == 0 && a.size() > 0) {
            out.status = SearchStatus::NotFound;
            return out;
        }
        std::vector<int> t(a.size(), 0);
        while (true) {
            if (!budget.spend()) {
                out.status = SearchStatus::Exhausted;
                return out;
            }
            out.results.push_back(Mor{a, b, t});
            int j = a.size() - 1;
            while (j >= 0 && t[j] == b.size() - 1) --j;
            if (j < 0) break;
            t[j] += 1;
            std::fill(t.begin() + j + 1, t.end(), 0);
        }
        out.status = out.results.empty() ? SearchStatus::NotFound : SearchStatus::Found;
        return out;
    }

    // Maps h : x -> y with h o e = v for each constraint (e, v).  Elements of
    // x not covered by any constraint range over all of y.
    static Search<Mor> hom_constrained(const Obj& x, const Obj& y,
                                       const std::vector<HomConstraint<FinSetCat>>& cons,
                                       Budget& budget, std::size_t max_count) {
        Search<Mor> out;
        std::vector<int> pin(x.size(), -1);
        for (const auto& c : cons) {
            require(c.embed.cod == x && c.value.cod == y && c.embed.dom == c.value.dom,
                    "finset hom_constrained: malformed constraint");
            for (std::size_t e = 0; e < c.embed.table.size(); ++e) {
                int at = c.embed.table[e];
                int val = c.value.table[e];
                if (pin[at] >= 0 && pin[at] != val) {
                    out.status = SearchStatus::NotFound;  // contradictory pins
                    return out;
                }
                pin[at] = val;
            }
        }
        std::vector<int> free_pos;
        for (int i = 0; i < x.size(); ++i)
            if (pin[i] < 0) free_pos.push_back(i);
        if (!free_pos.empty() && y.size() == 0) {
            out.status = SearchStatus::NotFound;
            return out;
        }

        std::vector<int> t(pin);
        bool exhausted = false;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (exhausted || out.results.size() >= max_count) return;
            if (k == free_pos.size()) {
                out.results.push_back(Mor{x, y, t});
                return;
            }
            for (int v = 0; v < y.size(); ++v) {
                if (!budget.spend()) {
                    exhausted = true;
                    return;
                }
                t[free_pos[k]] = v;
                rec(k + 1);
                if (exhausted || out.results.size() >= max_count) return;
            }
        };
        rec(0);
        if (exhausted)
            out.status = SearchStatus::Exhausted;
        else
            out.status = out.results.empty() ? SearchStatus::NotFound : SearchStatus::Found;
        return out;
    }

    // Finite sets are isomorphic exactly when they have the same size; the
    // index bijection is as good a witness as any.
    static Search<Mor> iso_search(const Obj& a, const Obj& b, Budget& budget) {
        Search<Mor> out;
        if (!budget.spend()) {
            out.status = SearchStatus::Exhausted;
            return out;
        }
        if (a.size() != b.size()) {
            out.status = SearchStatus::NotFound;
            return out;
        }
        std::vector<int> t(a.size());
        std::iota(t.begin(), t.end(), 0);
        out.results.push_back(Mor{a, b, std::move(t)});
        out.status = SearchStatus::Found;
        return out;
    }

    static bool is_monic(const Mor& f) {
        std::vector<bool> hit(f.cod.size(), false);
        for (int v : f.table) {
            if (hit[v]) return false;
            hit[v] = true;
        }
        return true;
    }

    static bool is_iso(const Mor& f) { return f.dom.size() == f.cod.size() && is_monic(f); }

    static Mor invert_iso(const Mor& f) {
        require(is_iso(f), "finset invert_iso: not an isomorphism");
        std::vector<int> t(f.cod.size());
        for (std::size_t i = 0; i < f.table.size(); ++i) t[f.table[i]] = static_cast<int>(i);
        return Mor{f.cod, f.dom, std::move(t)};
    }

    static std::string describe(const Obj& x) { return "|X|=" + std::to_string(x.size()); }

    // Witness bundle.  The pinched end of the interval is element 0 so that
    // the generated tower carries the standard simplex tables: d~_{1,0}
    // skips 0 (hits element 1), d~_{1,1} skips 1 (hits element 0), and the
    // wedge apex always lands at id 0.
    static AxiomWitnesses<FinSetCat> witnesses() {
        AxiomWitnesses<FinSetCat> w{};
        w.terminal = terminal();
        w.interval = make_object({"0", "1"});
        w.endpoint0 = Mor{w.terminal, w.interval, {1}};
        w.endpoint1 = Mor{w.terminal, w.interval, {0}};
        w.swap = Mor{w.interval, w.interval, {1, 0}};
        w.basepoint = Mor{w.terminal, w.interval, {0}};
        auto p = product(w.interval, w.interval);
        // min(x,t): identity on the d~_{1,0} face, constantly the basepoint
        // on the d~_{1,1} face.
        std::vector<int> t(4);
        for (int x = 0; x < 2; ++x)
            for (int s = 0; s < 2; ++s) t[x * 2 + s] = std::min(x, s);
        w.contraction = Mor{p.vertex, w.interval, std::move(t)};
        return w;
    }

};

}  // namespace cellcat
