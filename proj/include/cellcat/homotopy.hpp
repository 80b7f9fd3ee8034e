#pragma once

// Homotopy search, contractibility, the Base transformation and the cone
// construction for cells, with the mechanical convexity checks.

#include <optional>
#include <string>
#include <vector>

#include "cellcat/cells.hpp"
#include "cellcat/kernel.hpp"
#include "cellcat/wedge.hpp"

namespace cellcat {

template <class Cat>
struct HomotopyWitness {
    typename Cat::Mor f, g;
    typename Cat::Mor h;  // X x F_1 -> Y, restricting to f and g at the ends
};

// Searches for H with H o (X x d~_{1,0}) = f and H o (X x d~_{1,1}) = g.
template <class Cat>
Search<HomotopyWitness<Cat>> are_homotopic(const typename Cat::Mor& f, const typename Cat::Mor& g,
                                           const AxiomWitnesses<Cat>& w, Budget& budget,
                                           std::size_t max_count = 1) {
    require(f.dom == g.dom && f.cod == g.cod, "are_homotopic: morphisms are not parallel");
    auto cyl = product<Cat>(f.dom, w.interval);
    auto e0 = cylinder_face<Cat>(f.dom, w.endpoint0, cyl);
    auto e1 = cylinder_face<Cat>(f.dom, w.endpoint1, cyl);
    auto hs = Cat::hom_constrained(cyl.vertex, f.cod, {{e0, f}, {e1, g}}, budget, max_count);
    Search<HomotopyWitness<Cat>> out;
    out.status = hs.status;
    for (auto& h : hs.results) out.results.push_back({f, g, std::move(h)});
    return out;
}

// A found homotopy f ~ g converted into one g ~ f by precomposing the
// cylinder with X x swap.  Only available when the swap witness exists.
template <class Cat>
HomotopyWitness<Cat> swap_homotopy(const HomotopyWitness<Cat>& hw, const AxiomWitnesses<Cat>& w) {
    require(w.swap.has_value(), "swap_homotopy: swap witness absent");
    auto cyl = product<Cat>(hw.f.dom, w.interval);
    auto x_swap = morphism_product<Cat>(Cat::identity(hw.f.dom), *w.swap, cyl, cyl);
    return {hw.g, hw.f, Cat::compose(hw.h, x_swap)};
}

template <class Cat>
struct ContractibilityResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<typename Cat::Mor> point;        // 1 -> X
    std::optional<typename Cat::Mor> contraction;  // X x F_1 -> X
};

// Searches over points of X for a contraction of id_X onto that point.
// NotFound is definitive: every point was ruled out within budget.
template <class Cat>
ContractibilityResult<Cat> is_contractible(const typename Cat::Obj& x,
                                           const AxiomWitnesses<Cat>& w, Budget& budget) {
    ContractibilityResult<Cat> out;
    auto points = Cat::hom_set(w.terminal, x, budget);
    if (points.status == SearchStatus::Exhausted) {
        out.status = SearchStatus::Exhausted;
        return out;
    }
    bool any_exhausted = false;
    for (const auto& pt : points.results) {
        auto hs = are_homotopic<Cat>(Cat::identity(x), constant<Cat>(x, pt), w, budget);
        if (hs.status == SearchStatus::Found) {
            out.status = SearchStatus::Found;
            out.point = pt;
            out.contraction = hs.first().h;
            return out;
        }
        if (hs.status == SearchStatus::Exhausted) any_exhausted = true;
    }
    out.status = any_exhausted ? SearchStatus::Exhausted : SearchStatus::NotFound;
    return out;
}

struct RelationReport {
    SearchStatus status = SearchStatus::NotFound;
    int hom_size = 0;
    std::vector<std::vector<bool>> related;  // related[i][j]: hom[i] ~ hom[j] (one-sided)
    bool reflexive = false, symmetric = false, transitive = false;
};

// The raw one-sided homotopy relation on Hom(x, y), with the equivalence
// properties it happens to satisfy.
template <class Cat>
RelationReport check_homotopy_relation(const typename Cat::Obj& x, const typename Cat::Obj& y,
                                       const AxiomWitnesses<Cat>& w, Budget& budget) {
    RelationReport rep;
    auto homs = Cat::hom_set(x, y, budget);
    if (homs.status == SearchStatus::Exhausted) {
        rep.status = SearchStatus::Exhausted;
        return rep;
    }
    int n = static_cast<int>(homs.results.size());
    rep.hom_size = n;
    rep.related.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto hs = are_homotopic<Cat>(homs.results[i], homs.results[j], w, budget);
            if (hs.status == SearchStatus::Exhausted) {
                rep.status = SearchStatus::Exhausted;
                return rep;
            }
            rep.related[i][j] = hs.found();
        }
    rep.status = SearchStatus::Found;
    rep.reflexive = rep.symmetric = rep.transitive = true;
    for (int i = 0; i < n; ++i) {
        if (!rep.related[i][i]) rep.reflexive = false;
        for (int j = 0; j < n; ++j) {
            if (rep.related[i][j] != rep.related[j][i]) rep.symmetric = false;
            for (int k = 0; k < n; ++k)
                if (rep.related[i][j] && rep.related[j][k] && !rep.related[i][k])
                    rep.transitive = false;
        }
    }
    return rep;
}

// The relation's observed properties against the audited axioms: symmetry is
// expected whenever the swap witness passed, transitivity whenever the join
// axiom passed.  Reflexivity is unconditional.
struct RelationAuditCheck {
    bool reflexive_ok = false;
    bool symmetry_consistent = false;
    bool transitivity_consistent = false;

    bool all() const { return reflexive_ok && symmetry_consistent && transitivity_consistent; }
};

inline RelationAuditCheck cross_reference(const RelationReport& rel, const AxiomReport& audit) {
    RelationAuditCheck out;
    out.reflexive_ok = rel.reflexive;
    bool swap_pass = audit.entry("A:swap").verdict == Verdict::Pass;
    bool join_pass = audit.entry("A:F1_join").verdict == Verdict::Pass;
    out.symmetry_consistent = !swap_pass || rel.symmetric;
    out.transitivity_consistent = !join_pass || rel.transitive;
    return out;
}

// ---------------------------------------------------------------------------
// Base and Cone

template <class Cat>
struct BaseMapReport {
    SearchStatus status = SearchStatus::NotFound;
    std::vector<typename Cat::Mor> from;     // Hom(F_{n+1}, x)
    std::vector<typename Cat::Mor> to;       // Hom(F_n, x)
    std::vector<int> mapping;                // index into `to` per element of `from`
    bool natural = true;                     // shift-reindexed naturality squares
};

// Base_n : Hom(F_{n+1}, x) -> Hom(F_n, x), precomposition with the zeroth
// face; naturality against every face generator is re-checked on the
// enumerated hom-sets.
template <class Cat>
BaseMapReport<Cat> base_map(const CellTower<Cat>& t, const typename Cat::Obj& x, int n,
                            Budget& budget) {
    require(n + 1 <= t.N, "base_map: level out of range");
    BaseMapReport<Cat> rep;
    auto from = Cat::hom_set(t.cells[n + 1], x, budget);
    auto to = Cat::hom_set(t.cells[n], x, budget);
    if (from.status == SearchStatus::Exhausted || to.status == SearchStatus::Exhausted) {
        rep.status = SearchStatus::Exhausted;
        return rep;
    }
    rep.from = from.results;
    rep.to = to.results;
    for (const auto& sigma : rep.from) {
        auto img = Cat::compose(sigma, t.faces[n + 1][0]);
        int idx = -1;
        for (std::size_t k = 0; k < rep.to.size(); ++k)
            if (rep.to[k] == img) {
                idx = static_cast<int>(k);
                break;
            }
        require(idx >= 0, "base_map: hom enumeration missed a composite");
        rep.mapping.push_back(idx);
        if (n >= 1)
            for (int i = 0; i <= n && rep.natural; ++i) {
                auto lhs = Cat::compose(Cat::compose(sigma, t.faces[n + 1][i + 1]), t.faces[n][0]);
                auto rhs = Cat::compose(img, t.faces[n][i]);
                if (!(lhs == rhs)) rep.natural = false;
            }
    }
    rep.status = SearchStatus::Found;
    return rep;
}

// Cone_n(sigma) = collapse o Wedge(sigma), with collapse the flatten
// degeneracy s~_{m,0}.  Tests may plant a different collapse to check that
// the verifier notices.
template <class Cat>
struct ConeFamily {
    const CellTower<Cat>* tower = nullptr;
    int m = 0;
    typename Cat::Mor collapse;  // F_{m+1} -> F_m

    typename Cat::Mor apply(const typename Cat::Mor& sigma, int n) const {
        const auto& t = *tower;
        require(n <= t.N - 1, "cone: level out of range");
        require(sigma.dom == t.cells[n] && sigma.cod == t.cells[m], "cone: sigma has wrong endpoints");
        return Cat::compose(collapse, wedge_morphism<Cat>(sigma, t.wedges[n], t.wedges[m]));
    }
};

template <class Cat>
ConeFamily<Cat> cone(const CellTower<Cat>& t, int m) {
    require(0 <= m && m <= t.N - 1, "cone: target level out of range");
    return ConeFamily<Cat>{&t, m, t.degens[m][0]};
}

// Convexity verification: enumerates Hom(F_n, F_m) for n <= max_n and checks
// that the cone family is a right inverse of Base and natural against faces.
template <class Cat>
IdentityReport verify_convexity(const CellTower<Cat>& t, int m, int max_n, Budget& budget,
                                const ConeFamily<Cat>* family = nullptr) {
    require(m <= t.N - 1 && max_n <= t.N - 1, "verify_convexity: levels out of range");
    ConeFamily<Cat> def = family ? *family : cone(t, m);
    IdentityReport rep;
    for (int n = 0; n <= max_n; ++n) {
        auto homs = Cat::hom_set(t.cells[n], t.cells[m], budget);
        if (homs.status == SearchStatus::Exhausted) {
            rep.add("hom-enumeration", n, 0, 0, false, "budget exhausted");
            return rep;
        }
        int sidx = 0;
        for (const auto& sigma : homs.results) {
            auto cn = def.apply(sigma, n);
            rep.add("base-right-inverse", n, 0, sidx,
                    Cat::compose(cn, t.faces[n + 1][0]) == sigma);
            if (n >= 1) {
                for (int i = 1; i <= n + 1; ++i)
                    rep.add("cone-face-case", n, i, sidx,
                            Cat::compose(cn, t.faces[n + 1][i]) ==
                                def.apply(Cat::compose(sigma, t.faces[n][i - 1]), n - 1));
                for (int i = 0; i <= n; ++i)
                    rep.add("cone-naturality", n, i, sidx,
                            Cat::compose(cn, t.faces[n + 1][i + 1]) ==
                                def.apply(Cat::compose(sigma, t.faces[n][i]), n - 1));
            }
            ++sidx;
        }
    }
    return rep;
}

}  // namespace cellcat
