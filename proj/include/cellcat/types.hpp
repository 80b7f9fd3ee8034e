#pragma once

// Shape-only templates shared by every backend and by the generic kernel
// operations.  A backend supplies Obj and Mor value types plus the
// constructions; these structs just bundle the results.

#include <optional>
#include <string>
#include <vector>

#include "cellcat/util.hpp"

namespace cellcat {

template <class Cat>
struct Span {
    typename Cat::Obj apex;
    typename Cat::Mor left;   // apex -> left codomain
    typename Cat::Mor right;  // apex -> right codomain
};

template <class Cat>
struct ProductData {
    typename Cat::Obj vertex;
    typename Cat::Mor proj1;
    typename Cat::Mor proj2;
};

template <class Cat>
struct PushoutData {
    typename Cat::Obj vertex;
    typename Cat::Mor inj_left;
    typename Cat::Mor inj_right;
};

// A finite diagram: numbered objects plus arrows between them.  Colimits of
// these drive pushouts, coproducts, spheres, handle attachment, GSC
// diagrams and coend realization alike.
template <class Cat>
struct Diagram {
    struct Arrow {
        int src = 0;
        int dst = 0;
        typename Cat::Mor mor;  // objects[src] -> objects[dst]
    };
    std::vector<typename Cat::Obj> objects;
    std::vector<Arrow> arrows;
};

template <class Cat>
struct ColimitData {
    typename Cat::Obj vertex;
    std::vector<typename Cat::Mor> injections;  // one per diagram object
};

// Elementwise pin for constrained hom-searches: along e : A -> X the unknown
// H : X -> Y must restrict to v : A -> Y, i.e. H o e = v.
template <class Cat>
struct HomConstraint {
    typename Cat::Mor embed;  // e
    typename Cat::Mor value;  // v
};

// The structure a backend must exhibit before towers can be built over it.
// Optional members may be absent; the axiom auditor then reports
// "witness absent" for the axioms that need them.
template <class Cat>
struct AxiomWitnesses {
    typename Cat::Obj terminal;              // F_0
    typename Cat::Obj interval;              // F_1
    typename Cat::Mor endpoint0;             // d~_{1,0} : 1 -> F_1
    typename Cat::Mor endpoint1;             // d~_{1,1} : 1 -> F_1
    std::optional<typename Cat::Mor> swap;   // F_1 -> F_1
    typename Cat::Mor basepoint;             // a_1 : 1 -> F_1
    struct JoinStructure {
        typename Cat::Mor left, right;  // F_1 -> F_1
        typename Cat::Mor mid;          // 1 -> F_1
    };
    std::optional<JoinStructure> join;
    std::optional<typename Cat::Mor> contraction;  // F_1 x F_1 -> F_1
};

}  // namespace cellcat
