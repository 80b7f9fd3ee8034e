#pragma once

// The wedge construct: collapse the pinched end of the cylinder X x F_1 to a
// point.  Carries the Top / Pinch / Bottom structure morphisms, the functor
// action on morphisms, and the two flatten constructions.

#include <string>
#include <vector>

#include "cellcat/kernel.hpp"
#include "cellcat/types.hpp"
#include "cellcat/util.hpp"

namespace cellcat {

template <class Cat>
struct WedgeData {
    typename Cat::Obj input;      // X
    ProductData<Cat> cylinder;    // X x F_1
    typename Cat::Obj vertex;     // Wedge(X)
    typename Cat::Mor top;        // 1 -> Wedge(X)
    typename Cat::Mor pinch;      // X x F_1 -> Wedge(X)
    typename Cat::Mor bottom;     // X -> Wedge(X)
    typename Cat::Mor span_right; // X -> X x F_1, the pinched-face embedding
};

// Embedding of X into its cylinder at the endpoint picked by `end`.
template <class Cat>
typename Cat::Mor cylinder_face(const typename Cat::Obj& x, const typename Cat::Mor& end,
                                const ProductData<Cat>& cyl) {
    return pair_morphisms<Cat>(Cat::identity(x), constant<Cat>(x, end), cyl);
}

template <class Cat>
WedgeData<Cat> wedge_object(const typename Cat::Obj& x, const AxiomWitnesses<Cat>& w) {
    WedgeData<Cat> wd;
    wd.input = x;
    wd.cylinder = product<Cat>(x, w.interval);
    wd.span_right = cylinder_face<Cat>(x, w.endpoint1, wd.cylinder);
    Span<Cat> span{x, Cat::terminal_morphism(x), wd.span_right};
    auto po = pushout<Cat>(span);
    wd.vertex = po.vertex;
    wd.top = po.inj_left;
    wd.pinch = po.inj_right;
    wd.bottom = Cat::compose(wd.pinch, cylinder_face<Cat>(x, w.endpoint0, wd.cylinder));
    require(Cat::compose(wd.pinch, wd.span_right) == Cat::compose(wd.top, Cat::terminal_morphism(x)),
            "wedge: pushout square does not commute");
    return wd;
}

// Presents the interval witness itself as the wedge of the terminal object:
// vertex F_1, Top the pinched endpoint, Pinch the projection of the cylinder
// 1 x F_1, Bottom the other endpoint.  Verified to be a pushout of the same
// span so the face/degeneracy recursion can start at the witness interval
// instead of the anonymous Wedge(F_0).
template <class Cat>
WedgeData<Cat> wedge_interval_presentation(const AxiomWitnesses<Cat>& w, bool* iso_ok = nullptr) {
    WedgeData<Cat> wd;
    wd.input = w.terminal;
    wd.cylinder = product<Cat>(w.terminal, w.interval);
    wd.span_right = cylinder_face<Cat>(w.terminal, w.endpoint1, wd.cylinder);
    wd.vertex = w.interval;
    wd.top = w.endpoint1;
    wd.pinch = wd.cylinder.proj2;
    wd.bottom = w.endpoint0;

    // Comparison with the canonical pushout: the induced map must be iso.
    Span<Cat> span{w.terminal, Cat::terminal_morphism(w.terminal), wd.span_right};
    auto po = pushout<Cat>(span);
    auto u = factor_through_pushout<Cat>(po, wd.top, wd.pinch);
    bool ok = Cat::is_iso(u);
    if (iso_ok) *iso_ok = ok;
    require(ok, "wedge: the interval is not a pushout of the terminal-object wedge span");
    return wd;
}

// Functor action: the unique factorization of the target wedge cocone
// through the source wedge square.
template <class Cat>
typename Cat::Mor wedge_morphism(const typename Cat::Mor& phi, const WedgeData<Cat>& wa,
                                 const WedgeData<Cat>& wb) {
    require(phi.dom == wa.input && phi.cod == wb.input, "wedge_morphism: mismatched inputs");
    auto phi_cyl = morphism_product<Cat>(phi, Cat::identity(wa.cylinder.proj2.cod), wa.cylinder,
                                         wb.cylinder);
    return Cat::factor_cocone({wa.top, wa.pinch}, {wb.top, Cat::compose(wb.pinch, phi_cyl)});
}

// Flatten from an explicit contraction witness: the unique u with
// u o Pinch = contraction and u o Top = pt; it retracts Wedge(X) onto X.
template <class Cat>
typename Cat::Mor flatten_contractible(const typename Cat::Obj& x,
                                       const typename Cat::Mor& contraction,
                                       const typename Cat::Mor& pt, const WedgeData<Cat>& w,
                                       const AxiomWitnesses<Cat>& wit) {
    require(w.input == x, "flatten: wedge data is for a different object");
    auto e0 = cylinder_face<Cat>(x, wit.endpoint0, w.cylinder);
    auto e1 = cylinder_face<Cat>(x, wit.endpoint1, w.cylinder);
    require(Cat::compose(contraction, e0) == Cat::identity(x),
            "flatten: contraction does not restrict to the identity");
    require(Cat::compose(contraction, e1) == constant<Cat>(x, pt),
            "flatten: contraction does not restrict to the chosen point");
    auto u = Cat::factor_cocone({w.top, w.pinch}, {pt, contraction});
    require(Cat::compose(u, w.bottom) == Cat::identity(x),
            "flatten: not a left inverse of Bottom");
    return u;
}

// Flatten through a point alone.  u is determined by a contraction of X onto
// pt, so existence and uniqueness of u reduce to existence and uniqueness of
// such a contraction; both are searched for within the budget.
template <class Cat>
struct FlattenResult {
    SearchStatus status = SearchStatus::NotFound;
    int witness_count = 0;  // contractions found (search stops at 2)
    std::optional<typename Cat::Mor> flatten;
};

template <class Cat>
FlattenResult<Cat> flatten_at_point(const typename Cat::Obj& x, const typename Cat::Mor& pt,
                                    const WedgeData<Cat>& w, const AxiomWitnesses<Cat>& wit,
                                    Budget& budget) {
    require(pt.cod == x, "flatten_at_point: pt must be a point of x");
    auto e0 = cylinder_face<Cat>(x, wit.endpoint0, w.cylinder);
    auto e1 = cylinder_face<Cat>(x, wit.endpoint1, w.cylinder);
    std::vector<HomConstraint<Cat>> cons = {{e0, Cat::identity(x)},
                                            {e1, constant<Cat>(x, pt)}};
    auto hs = Cat::hom_constrained(w.cylinder.vertex, x, cons, budget, 2);
    FlattenResult<Cat> out;
    out.witness_count = static_cast<int>(hs.results.size());
    if (hs.status == SearchStatus::Exhausted && hs.results.size() < 2) {
        out.status = SearchStatus::Exhausted;
        return out;
    }
    if (hs.results.empty()) {
        out.status = SearchStatus::NotFound;
        return out;
    }
    if (hs.results.size() > 1)
        throw backend_inconsistency("flatten_at_point: factorization is not unique (" +
                                    std::string(Cat::name) + ")");
    out.status = SearchStatus::Found;
    out.flatten = flatten_contractible<Cat>(x, hs.results.front(), pt, w, wit);
    return out;
}

// Canonical contraction of Wedge(X) onto its apex, built from the interval's
// own contraction: on the cylinder part it contracts the F_1 coordinate,
// sending (x, s, t) to (x, contr(s, t)).  Computed by transporting the wedge
// span across - x F_1 (colimits commute with this product in both shipped
// backends; the comparison map is checked to be iso).
template <class Cat>
typename Cat::Mor wedge_contraction(const WedgeData<Cat>& w, const AxiomWitnesses<Cat>& wit) {
    require(wit.contraction.has_value(), "wedge_contraction: interval contraction witness absent");
    const auto& contr1 = *wit.contraction;
    const auto& x = w.input;
    const auto& f1 = wit.interval;

    auto p_w_f1 = product<Cat>(w.vertex, f1);           // Wedge(X) x F_1
    auto p_x_f1 = w.cylinder;                           // X x F_1
    auto p_xf1_f1 = product<Cat>(p_x_f1.vertex, f1);    // (X x F_1) x F_1
    auto p_1_f1 = product<Cat>(w.top.dom, f1);          // 1 x F_1
    auto p_f1_f1 = product<Cat>(f1, f1);                // F_1 x F_1

    // The wedge span tensored with F_1, and its pushout.
    auto left_leg = pair_morphisms<Cat>(
        Cat::compose(Cat::terminal_morphism(x), p_x_f1.proj1), p_x_f1.proj2, p_1_f1);
    auto right_leg = pair_morphisms<Cat>(Cat::compose(w.span_right, p_x_f1.proj1), p_x_f1.proj2,
                                         p_xf1_f1);
    Span<Cat> span{p_x_f1.vertex, left_leg, right_leg};
    auto po = pushout<Cat>(span);

    // Comparison iso with Wedge(X) x F_1.
    auto kappa = factor_through_pushout<Cat>(
        po,
        pair_morphisms<Cat>(Cat::compose(w.top, p_1_f1.proj1), p_1_f1.proj2, p_w_f1),
        pair_morphisms<Cat>(Cat::compose(w.pinch, p_xf1_f1.proj1), p_xf1_f1.proj2, p_w_f1));
    require(Cat::is_iso(kappa), "wedge_contraction: product does not commute with the wedge pushout");

    // Cocone computing the contraction on each part.
    auto const_apex = Cat::compose(w.top, Cat::terminal_morphism(p_1_f1.vertex));
    auto s_coords = pair_morphisms<Cat>(Cat::compose(p_x_f1.proj2, p_xf1_f1.proj1), p_xf1_f1.proj2,
                                       p_f1_f1);
    auto contracted = pair_morphisms<Cat>(Cat::compose(p_x_f1.proj1, p_xf1_f1.proj1),
                                          Cat::compose(contr1, s_coords), p_x_f1);
    auto on_cylinder = Cat::compose(w.pinch, contracted);
    auto u = factor_through_pushout<Cat>(po, const_apex, on_cylinder);

    auto contr = Cat::compose(u, Cat::invert_iso(kappa));

    auto e0 = cylinder_face<Cat>(w.vertex, wit.endpoint0, p_w_f1);
    auto e1 = cylinder_face<Cat>(w.vertex, wit.endpoint1, p_w_f1);
    require(Cat::compose(contr, e0) == Cat::identity(w.vertex),
            "wedge_contraction: does not restrict to the identity");
    require(Cat::compose(contr, e1) == constant<Cat>(w.vertex, w.top),
            "wedge_contraction: does not restrict to the apex");
    return contr;
}

}  // namespace cellcat
