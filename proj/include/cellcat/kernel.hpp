#pragma once

// Backend-generic category operations and the axiom auditor.  A backend Cat
// provides Obj/Mor value types with decidable extensional equality plus the
// primitive constructions (products, finite-diagram colimits, cocone
// factorization, bounded hom enumeration).  Cross-backend composition is a
// type error rather than a runtime one: morphisms of different backends are
// different C++ types.

#include <string>
#include <vector>

#include "cellcat/types.hpp"
#include "cellcat/util.hpp"

namespace cellcat {

template <class Cat>
typename Cat::Mor compose(const typename Cat::Mor& g, const typename Cat::Mor& f) {
    require(f.cod == g.dom, std::string(Cat::name) + " compose: f.cod != g.dom");
    return Cat::compose(g, f);
}

template <class Cat>
typename Cat::Mor identity(const typename Cat::Obj& x) {
    return Cat::identity(x);
}

template <class Cat>
bool equal_morphisms(const typename Cat::Mor& f, const typename Cat::Mor& g) {
    require(f.dom == g.dom && f.cod == g.cod, "equal_morphisms: mismatched endpoints");
    return f == g;
}

template <class Cat>
typename Cat::Mor terminal_morphism(const typename Cat::Obj& x) {
    return Cat::terminal_morphism(x);
}

template <class Cat>
ProductData<Cat> product(const typename Cat::Obj& a, const typename Cat::Obj& b) {
    return Cat::product(a, b);
}

template <class Cat>
typename Cat::Mor pair_morphisms(const typename Cat::Mor& f, const typename Cat::Mor& g,
                                 const ProductData<Cat>& p) {
    require(f.dom == g.dom, "pair: domains differ");
    require(f.cod == p.proj1.cod, "pair: f does not land in the first factor");
    require(g.cod == p.proj2.cod, "pair: g does not land in the second factor");
    typename Cat::Mor u = Cat::pair(f, g, p);
    require(Cat::compose(p.proj1, u) == f && Cat::compose(p.proj2, u) == g,
            "pair: projection equations failed (backend inconsistency)");
    return u;
}

// f x g : a x c -> b x d.
template <class Cat>
typename Cat::Mor morphism_product(const typename Cat::Mor& f, const typename Cat::Mor& g,
                                   const ProductData<Cat>& pdom, const ProductData<Cat>& pcod) {
    return pair_morphisms<Cat>(Cat::compose(f, pdom.proj1), Cat::compose(g, pdom.proj2), pcod);
}

// The constant morphism x -> y through a point of y.
template <class Cat>
typename Cat::Mor constant(const typename Cat::Obj& x, const typename Cat::Mor& pt) {
    return Cat::compose(pt, Cat::terminal_morphism(x));
}

template <class Cat>
PushoutData<Cat> pushout(const Span<Cat>& s) {
    require(s.left.dom == s.apex && s.right.dom == s.apex, "pushout: span legs must share the apex");
    Diagram<Cat> d;
    d.objects = {s.apex, s.left.cod, s.right.cod};
    d.arrows.push_back({0, 1, s.left});
    d.arrows.push_back({0, 2, s.right});
    auto c = Cat::colimit(d);
    return PushoutData<Cat>{c.vertex, c.injections[1], c.injections[2]};
}

// Unique u with u o inj_left = cocone_left and u o inj_right = cocone_right.
// A cocone that does not commute over the original span surfaces here as an
// inconsistent assignment and is rejected.
template <class Cat>
typename Cat::Mor factor_through_pushout(const PushoutData<Cat>& p,
                                         const typename Cat::Mor& cocone_left,
                                         const typename Cat::Mor& cocone_right) {
    return Cat::factor_cocone({p.inj_left, p.inj_right}, {cocone_left, cocone_right});
}

template <class Cat>
ColimitData<Cat> coproduct(const std::vector<typename Cat::Obj>& objs) {
    require(!objs.empty(), "coproduct: empty sequence");
    Diagram<Cat> d;
    d.objects = objs;
    return Cat::colimit(d);
}

// ---------------------------------------------------------------------------
// Axiom audit

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct AxiomEntry {
    std::string axiom;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
};

struct AxiomReport {
    std::string backend;
    std::vector<AxiomEntry> entries;

    const AxiomEntry& entry(const std::string& axiom) const {
        for (const auto& e : entries)
            if (e.axiom == axiom) return e;
        throw cat_error("AxiomReport: no entry for " + axiom);
    }
    bool all_pass() const {
        for (const auto& e : entries)
            if (e.verdict != Verdict::Pass) return false;
        return true;
    }
};

namespace detail {

template <class Cat>
AxiomEntry audit_terminal_and_products(const AxiomWitnesses<Cat>& w, Budget& budget) {
    AxiomEntry e{"A:C", Verdict::Pass, ""};
    auto pd = product<Cat>(w.interval, w.interval);
    std::vector<typename Cat::Obj> samples = {w.terminal, w.interval, pd.vertex};
    for (const auto& x : samples) {
        auto maps = Cat::hom_set(x, w.terminal, budget);
        if (maps.status == SearchStatus::Exhausted)
            return {"A:C", Verdict::Inconclusive, "terminal check hit the search budget"};
        if (maps.results.size() != 1)
            return {"A:C", Verdict::Fail,
                    "terminal object admits " + std::to_string(maps.results.size()) +
                        " maps from " + Cat::describe(x)};
    }
    // Universal property of the product on a couple of concrete cones.
    std::vector<std::pair<typename Cat::Mor, typename Cat::Mor>> cones = {
        {Cat::identity(w.interval), Cat::identity(w.interval)},
        {constant<Cat>(w.interval, w.endpoint0), Cat::identity(w.interval)},
    };
    for (const auto& [f, g] : cones) {
        auto u = pair_morphisms<Cat>(f, g, pd);
        auto all = Cat::hom_set(w.interval, pd.vertex, budget);
        if (all.status == SearchStatus::Exhausted)
            return {"A:C", Verdict::Inconclusive, "product uniqueness check hit the search budget"};
        int solutions = 0;
        for (const auto& h : all.results)
            if (Cat::compose(pd.proj1, h) == f && Cat::compose(pd.proj2, h) == g) ++solutions;
        if (solutions != 1)
            return {"A:C", Verdict::Fail,
                    "product pairing not unique: " + std::to_string(solutions) + " solutions"};
        (void)u;
    }
    return e;
}

template <class Cat>
AxiomEntry audit_f1_join(const AxiomWitnesses<Cat>& w, Budget& budget) {
    Span<Cat> join_span{w.terminal, w.endpoint0, w.endpoint1};
    auto p = pushout<Cat>(join_span);
    if (w.join.has_value()) {
        const auto& j = *w.join;
        if (!(Cat::compose(j.left, w.endpoint0) == j.mid && Cat::compose(j.right, w.endpoint1) == j.mid))
            return {"A:F1_join", Verdict::Fail, "join witness square does not commute"};
        auto u = factor_through_pushout<Cat>(p, j.left, j.right);
        if (Cat::is_iso(u)) return {"A:F1_join", Verdict::Pass, "witnessed colimit is F_1"};
        return {"A:F1_join", Verdict::Fail, "witness factorization is not an isomorphism"};
    }
    auto iso = Cat::iso_search(p.vertex, w.interval, budget);
    switch (iso.status) {
        case SearchStatus::Found:
            return {"A:F1_join", Verdict::Pass, "join vertex isomorphic to F_1"};
        case SearchStatus::Exhausted:
            return {"A:F1_join", Verdict::Inconclusive, "isomorphism search hit the budget"};
        case SearchStatus::NotFound:
            break;
    }
    return {"A:F1_join", Verdict::Fail,
            "end-to-end join is not F_1: joined " + Cat::describe(p.vertex) + " vs interval " +
                Cat::describe(w.interval)};
}

template <class Cat>
AxiomEntry audit_pushout(const AxiomWitnesses<Cat>& w) {
    Span<Cat> s{w.terminal, w.endpoint0, w.endpoint1};
    auto p = pushout<Cat>(s);
    if (!(Cat::compose(p.inj_left, s.left) == Cat::compose(p.inj_right, s.right)))
        return {"A:pushout", Verdict::Fail, "pushout square does not commute"};
    auto u = factor_through_pushout<Cat>(p, p.inj_left, p.inj_right);
    if (!(u == Cat::identity(p.vertex)))
        return {"A:pushout", Verdict::Fail, "factoring the pushout's own cocone is not the identity"};
    return {"A:pushout", Verdict::Pass, ""};
}

}  // namespace detail

// Mechanical verdict for each axiom the construction imposes on the context
// category, as exhibited by one witness bundle.
template <class Cat>
AxiomReport audit_axioms(const AxiomWitnesses<Cat>& w, Budget& budget) {
    AxiomReport report;
    report.backend = Cat::name;

    report.entries.push_back(detail::audit_terminal_and_products<Cat>(w, budget));

    {
        AxiomEntry e{"A:brace", Verdict::Pass, ""};
        if (!(w.endpoint0.dom == w.terminal && w.endpoint1.dom == w.terminal &&
              w.endpoint0.cod == w.interval && w.endpoint1.cod == w.interval))
            e = {"A:brace", Verdict::Fail, "endpoint morphisms have wrong endpoints"};
        report.entries.push_back(e);
    }

    if (!w.swap.has_value()) {
        report.entries.push_back({"A:swap", Verdict::Fail, "witness absent"});
    } else {
        const auto& sw = *w.swap;
        bool ok = Cat::compose(sw, w.endpoint0) == w.endpoint1 &&
                  Cat::compose(sw, sw) == Cat::identity(w.interval);
        report.entries.push_back({"A:swap", ok ? Verdict::Pass : Verdict::Fail,
                                  ok ? "" : "swap equations failed"});
    }

    report.entries.push_back(detail::audit_f1_join<Cat>(w, budget));
    report.entries.push_back(detail::audit_pushout<Cat>(w));

    {
        auto maps = Cat::hom_set(w.interval, w.terminal, budget);
        bool ok = maps.status == SearchStatus::Found && maps.results.size() == 1;
        report.entries.push_back({"A:1_0_cell",
                                  ok ? Verdict::Pass : Verdict::Fail,
                                  ok ? "F_0 is the terminal object" : "F_0 is not terminal"});
    }

    if (!w.contraction.has_value()) {
        report.entries.push_back({"A:1_contract", Verdict::Fail, "witness absent"});
    } else {
        auto pd = product<Cat>(w.interval, w.interval);
        auto face0 = pair_morphisms<Cat>(Cat::identity(w.interval),
                                         constant<Cat>(w.interval, w.endpoint0), pd);
        auto face1 = pair_morphisms<Cat>(Cat::identity(w.interval),
                                         constant<Cat>(w.interval, w.endpoint1), pd);
        bool ok = Cat::compose(*w.contraction, face0) == Cat::identity(w.interval) &&
                  Cat::compose(*w.contraction, face1) == constant<Cat>(w.interval, w.basepoint);
        report.entries.push_back({"A:1_contract", ok ? Verdict::Pass : Verdict::Fail,
                                  ok ? "" : "contraction restriction equations failed"});
    }

    return report;
}

}  // namespace cellcat
