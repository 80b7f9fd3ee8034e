#pragma once

// Integer homology: the nerve of an object under the tower functor, the
// normalized chain complex on its nondegenerate simplices, Smith normal
// form over arbitrary-precision integers, homology groups, induced maps,
// and the classical chain complex of an abstract simplicial complex.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "cellcat/asc.hpp"
#include "cellcat/cells.hpp"
#include "cellcat/sset.hpp"

namespace cellcat {

using Int = boost::multiprecision::cpp_int;

struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IMat eye(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const IMat&) const = default;
};

inline IMat operator*(const IMat& x, const IMat& y) {
    require(x.cols == y.rows, "matrix product: shape mismatch");
    IMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

inline bool is_zero(const IMat& m) {
    for (const auto& v : m.a)
        if (v != 0) return false;
    return true;
}

// Smith normal form with all four transforms: u*m*v = d, uinv = u^{-1},
// vinv = v^{-1}.  Pivot rule: smallest nonzero absolute value, then lowest
// row, then lowest column.
struct SmithForm {
    IMat d, u, uinv, v, vinv;
    int rank = 0;
    std::vector<Int> diag;  // nonzero invariant factors, d_1 | d_2 | ...
};

inline SmithForm smith_normal_form(const IMat& m) {
    SmithForm s;
    s.d = m;
    s.u = IMat::eye(m.rows);
    s.uinv = IMat::eye(m.rows);
    s.v = IMat::eye(m.cols);
    s.vinv = IMat::eye(m.cols);
    IMat& d = s.d;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < s.u.cols; ++c) std::swap(s.u.at(i, c), s.u.at(j, c));
        for (int r = 0; r < s.uinv.rows; ++r) std::swap(s.uinv.at(r, i), s.uinv.at(r, j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < s.v.rows; ++r) std::swap(s.v.at(r, i), s.v.at(r, j));
        for (int c = 0; c < s.vinv.cols; ++c) std::swap(s.vinv.at(i, c), s.vinv.at(j, c));
    };
    auto add_row = [&](int i, int j, const Int& k) {  // row_i += k * row_j
        if (k == 0) return;
        for (int c = 0; c < d.cols; ++c) d.at(i, c) += k * d.at(j, c);
        for (int c = 0; c < s.u.cols; ++c) s.u.at(i, c) += k * s.u.at(j, c);
        for (int r = 0; r < s.uinv.rows; ++r) s.uinv.at(r, j) -= k * s.uinv.at(r, i);
    };
    auto add_col = [&](int i, int j, const Int& k) {  // col_i += k * col_j
        if (k == 0) return;
        for (int r = 0; r < d.rows; ++r) d.at(r, i) += k * d.at(r, j);
        for (int r = 0; r < s.v.rows; ++r) s.v.at(r, i) += k * s.v.at(r, j);
        for (int c = 0; c < s.vinv.cols; ++c) s.vinv.at(j, c) -= k * s.vinv.at(i, c);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < s.u.cols; ++c) s.u.at(i, c) = -s.u.at(i, c);
        for (int r = 0; r < s.uinv.rows; ++r) s.uinv.at(r, i) = -s.uinv.at(r, i);
    };

    int t = 0;
    const int tmax = std::min(d.rows, d.cols);
    while (t < tmax) {
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < d.rows; ++r)
            for (int c = t; c < d.cols; ++c) {
                if (d.at(r, c) == 0) continue;
                Int mag = abs(d.at(r, c));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        bool clean = true;
        for (int r = t + 1; r < d.rows; ++r) {
            if (d.at(r, t) == 0) continue;
            Int q = d.at(r, t) / d.at(t, t);
            add_row(r, t, -q);
            if (d.at(r, t) != 0) clean = false;
        }
        for (int c = t + 1; c < d.cols; ++c) {
            if (d.at(t, c) == 0) continue;
            Int q = d.at(t, c) / d.at(t, t);
            add_col(c, t, -q);
            if (d.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; re-pivot

        // Pivot must divide the rest of the submatrix for the divisibility
        // chain; fold in an offending row and restart this step.
        bool divides = true;
        for (int r = t + 1; r < d.rows && divides; ++r)
            for (int c = t + 1; c < d.cols && divides; ++c)
                if (d.at(r, c) % d.at(t, t) != 0) {
                    add_row(t, r, 1);
                    divides = false;
                }
        if (!divides) continue;

        if (d.at(t, t) < 0) negate_row(t);
        ++t;
    }
    s.rank = t;
    for (int k = 0; k < t; ++k) s.diag.push_back(d.at(k, k));
    return s;
}

// Plain row-major text: "rows cols" then one line of entries per row.
inline std::string imat_to_text(const IMat& m) {
    std::string out = std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out += " ";
            out += m.at(r, c).str();
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chain complexes

struct ChainComplex {
    std::vector<int> ranks;        // generators per degree
    std::vector<IMat> boundaries;  // boundaries[n] : ranks[n-1] x ranks[n]; [0] has 0 rows

    int max_degree() const { return static_cast<int>(ranks.size()) - 1; }
};

inline void verify_boundary_squares_to_zero(const ChainComplex& c) {
    for (std::size_t n = 2; n < c.boundaries.size(); ++n)
        require(is_zero(c.boundaries[n - 1] * c.boundaries[n]),
                "chain complex: boundary composite is nonzero at degree " + std::to_string(n));
}

// Normalized chains on a truncated simplicial set: free on nondegenerate
// simplices, boundary the alternating face sum with degenerate images
// dropped.
inline ChainComplex normalized_chain_complex(const SSetObj& x) {
    auto ez = SSetCat::ez_index(x);
    ChainComplex c;
    std::vector<std::vector<int>> gen_index(x.dim + 1);
    for (int n = 0; n <= x.dim; ++n) {
        gen_index[n].assign(x.levels[n], -1);
        int r = 0;
        for (int sdx = 0; sdx < x.levels[n]; ++sdx)
            if (ez.nondeg[n][sdx]) gen_index[n][sdx] = r++;
        c.ranks.push_back(r);
    }
    c.boundaries.resize(x.dim + 1);
    c.boundaries[0] = IMat(0, c.ranks[0]);
    for (int n = 1; n <= x.dim; ++n) {
        IMat b(c.ranks[n - 1], c.ranks[n]);
        for (int sdx = 0; sdx < x.levels[n]; ++sdx) {
            if (gen_index[n][sdx] < 0) continue;
            for (int i = 0; i <= n; ++i) {
                int f = x.faces[n][i][sdx];
                if (gen_index[n - 1][f] < 0) continue;  // degenerate face: zero in normalized chains
                b.at(gen_index[n - 1][f], gen_index[n][sdx]) += (i % 2 == 0) ? 1 : -1;
            }
        }
        c.boundaries[n] = std::move(b);
    }
    verify_boundary_squares_to_zero(c);
    return c;
}

// Classical simplicial chains of an abstract simplicial complex: generators
// are its faces ordered by the global vertex order, boundary the alternating
// sum over deleted vertices.  Independent of the nerve pipeline; serves as
// its oracle on realizable complexes.
inline ChainComplex asc_chain_complex(const ASC& a) {
    asc_validate(a);
    int top = 0;
    for (const auto& f : a.faces) top = std::max<int>(top, static_cast<int>(f.size()) - 1);
    std::vector<std::vector<std::vector<int>>> gens(top + 1);
    for (const auto& f : a.faces) gens[f.size() - 1].push_back(f);
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    ChainComplex c;
    for (int n = 0; n <= top; ++n) {
        std::sort(gens[n].begin(), gens[n].end());
        for (std::size_t k = 0; k < gens[n].size(); ++k) index[n][gens[n][k]] = static_cast<int>(k);
        c.ranks.push_back(static_cast<int>(gens[n].size()));
    }
    c.boundaries.resize(top + 1);
    c.boundaries[0] = IMat(0, c.ranks[0]);
    for (int n = 1; n <= top; ++n) {
        IMat b(c.ranks[n - 1], c.ranks[n]);
        for (std::size_t k = 0; k < gens[n].size(); ++k)
            for (int i = 0; i <= n; ++i) {
                std::vector<int> sub;
                for (int j = 0; j <= n; ++j)
                    if (j != i) sub.push_back(gens[n][k][j]);
                b.at(index[n - 1].at(sub), static_cast<int>(k)) += (i % 2 == 0) ? 1 : -1;
            }
        c.boundaries[n] = std::move(b);
    }
    verify_boundary_squares_to_zero(c);
    return c;
}

// ---------------------------------------------------------------------------
// Homology groups

struct HomologyGroup {
    int degree = 0;
    long long betti = 0;
    std::vector<long long> torsion;  // entries > 1, each dividing the next
};

namespace detail {

// Presentation of H_n: kernel coordinates of ker(boundary_n) plus the Smith
// data of the image lattice of boundary_{n+1} inside it.
struct DegreePresentation {
    int kdim = 0;          // rank of the kernel
    IMat kernel_basis;     // ranks[n] x kdim
    IMat kernel_coords;    // kdim x ranks[n]
    IMat um, uminv;        // Smith transforms of the relation matrix
    std::vector<Int> factors;  // invariant factor per coordinate (0 = free)
    std::vector<int> survivors;  // coordinates with factor != 1
};

inline DegreePresentation degree_presentation(const ChainComplex& c, int n) {
    require(n >= 0 && n <= c.max_degree(), "homology: degree out of range");
    const IMat& A = c.boundaries[n];  // may have 0 rows for n == 0
    SmithForm sa = smith_normal_form(A);
    int k = c.ranks[n] - sa.rank;

    DegreePresentation p;
    p.kdim = k;
    p.kernel_basis = IMat(c.ranks[n], k);
    for (int r = 0; r < c.ranks[n]; ++r)
        for (int j = 0; j < k; ++j) p.kernel_basis.at(r, j) = sa.v.at(r, sa.rank + j);
    p.kernel_coords = IMat(k, c.ranks[n]);
    for (int j = 0; j < k; ++j)
        for (int cidx = 0; cidx < c.ranks[n]; ++cidx)
            p.kernel_coords.at(j, cidx) = sa.vinv.at(sa.rank + j, cidx);

    IMat B = (n + 1 <= c.max_degree()) ? c.boundaries[n + 1] : IMat(c.ranks[n], 0);
    IMat M = p.kernel_coords * B;  // k x p relation matrix
    SmithForm sm = smith_normal_form(M);
    p.um = sm.u;
    p.uminv = sm.uinv;
    p.factors.assign(k, 0);
    for (int i = 0; i < sm.rank; ++i) p.factors[i] = sm.diag[i];
    for (int i = 0; i < k; ++i)
        if (p.factors[i] != 1) p.survivors.push_back(i);
    return p;
}

inline Int reduce_mod(const Int& v, const Int& factor) {
    if (factor == 0) return v;
    Int r = v % factor;
    if (r < 0) r += factor;
    return r;
}

}  // namespace detail

inline std::vector<HomologyGroup> homology_groups(const ChainComplex& c, int max_degree) {
    require(max_degree <= c.max_degree(), "homology_groups: degree beyond complex range");
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= max_degree; ++n) {
        auto p = detail::degree_presentation(c, n);
        HomologyGroup g;
        g.degree = n;
        for (int i = 0; i < p.kdim; ++i) {
            if (p.factors[i] == 0)
                ++g.betti;
            else if (p.factors[i] > 1)
                g.torsion.push_back(p.factors[i].convert_to<long long>());
        }
        out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Nerve (generic over the backend)

template <class Cat>
struct Nerve {
    SearchStatus status = SearchStatus::NotFound;
    SSetObj shape;                                     // face/degeneracy actions as tables
    std::vector<std::vector<typename Cat::Mor>> elements;  // Hom(F_n, x) per degree
};

// Nerve(x)_n = Hom(F_n, x) with face action precomposition by F(d_{n,i}) and
// degeneracy action precomposition by F(s_{n,i}).
template <class Cat>
Nerve<Cat> nerve(const CellTower<Cat>& t, const typename Cat::Obj& x, int max_degree,
                 Budget& budget) {
    require(max_degree <= t.N, "nerve: degree exceeds tower");
    Nerve<Cat> nv;
    nv.shape.dim = max_degree;
    nv.shape.levels.resize(max_degree + 1);
    nv.shape.faces.resize(max_degree + 1);
    nv.shape.degens.resize(max_degree + 1);
    std::vector<std::map<typename Cat::Mor, int>> index;
    for (int n = 0; n <= max_degree; ++n) {
        auto hs = Cat::hom_set(t.cells[n], x, budget);
        if (hs.status == SearchStatus::Exhausted) {
            nv.status = SearchStatus::Exhausted;
            return nv;
        }
        nv.elements.push_back(hs.results);
        nv.shape.levels[n] = static_cast<int>(hs.results.size());
        std::map<typename Cat::Mor, int> idx;
        for (std::size_t k = 0; k < hs.results.size(); ++k)
            idx.emplace(hs.results[k], static_cast<int>(k));
        index.push_back(std::move(idx));
    }
    for (int n = 1; n <= max_degree; ++n) {
        nv.shape.faces[n].assign(n + 1, std::vector<int>(nv.shape.levels[n]));
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < nv.shape.levels[n]; ++s)
                nv.shape.faces[n][i][s] =
                    index[n - 1].at(Cat::compose(nv.elements[n][s], t.faces[n][i]));
    }
    for (int n = 0; n < max_degree; ++n) {
        nv.shape.degens[n].assign(n + 1, std::vector<int>(nv.shape.levels[n]));
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < nv.shape.levels[n]; ++s)
                nv.shape.degens[n][i][s] =
                    index[n + 1].at(Cat::compose(nv.elements[n][s], t.degens[n][i]));
    }
    auto bad = SSetCat::validate(nv.shape);
    require(bad.empty(), "nerve: face/degeneracy actions violate the presheaf identities");
    nv.status = SearchStatus::Found;
    return nv;
}

// ---------------------------------------------------------------------------
// Induced maps on homology

template <class Cat>
struct InducedHomology {
    SearchStatus status = SearchStatus::NotFound;
    std::vector<IMat> matrices;  // canonical matrix per degree 0..max_degree
};

// Postcomposition chain map between normalized nerve complexes, descended to
// homology in the Smith-canonical bases of both sides.  Matrices of equal
// maps agree entrywise; the identity induces identity matrices.
template <class Cat>
InducedHomology<Cat> induced_map_on_homology(const CellTower<Cat>& t, const typename Cat::Mor& f,
                                             int max_degree, Budget& budget) {
    InducedHomology<Cat> out;
    require(max_degree + 1 <= t.N, "induced map: tower too short for the requested degree");
    auto nx = nerve<Cat>(t, f.dom, max_degree + 1, budget);
    auto ny = nerve<Cat>(t, f.cod, max_degree + 1, budget);
    if (nx.status != SearchStatus::Found || ny.status != SearchStatus::Found) {
        out.status = SearchStatus::Exhausted;
        return out;
    }
    auto cx = normalized_chain_complex(nx.shape);
    auto cy = normalized_chain_complex(ny.shape);

    auto ezx = SSetCat::ez_index(nx.shape);
    auto ezy = SSetCat::ez_index(ny.shape);
    int top = nx.shape.dim;

    // Generator indices per level.
    auto gen_of = [](const SSetObj& o, const SSetCat::EZIndex& ez) {
        std::vector<std::vector<int>> g(o.dim + 1);
        for (int n = 0; n <= o.dim; ++n) {
            g[n].assign(o.levels[n], -1);
            int r = 0;
            for (int s = 0; s < o.levels[n]; ++s)
                if (ez.nondeg[n][s]) g[n][s] = r++;
        }
        return g;
    };
    auto gx = gen_of(nx.shape, ezx);
    auto gy = gen_of(ny.shape, ezy);

    // Chain map: nondegenerate sigma maps to f o sigma, dropped if degenerate.
    std::vector<IMat> phi(top + 1);
    for (int n = 0; n <= top; ++n) {
        std::map<typename Cat::Mor, int> idx;
        for (std::size_t k = 0; k < ny.elements[n].size(); ++k)
            idx.emplace(ny.elements[n][k], static_cast<int>(k));
        phi[n] = IMat(cy.ranks[n], cx.ranks[n]);
        for (int s = 0; s < nx.shape.levels[n]; ++s) {
            if (gx[n][s] < 0) continue;
            int img = idx.at(Cat::compose(f, nx.elements[n][s]));
            if (gy[n][img] >= 0) phi[n].at(gy[n][img], gx[n][s]) = 1;
        }
    }
    for (int n = 1; n <= top; ++n)
        require(cy.boundaries[n] * phi[n] == phi[n - 1] * cx.boundaries[n],
                "induced map: not a chain map");

    for (int n = 0; n <= max_degree; ++n) {
        auto px = detail::degree_presentation(cx, n);
        auto py = detail::degree_presentation(cy, n);
        IMat tk = py.kernel_coords * (phi[n] * px.kernel_basis);
        IMat full = py.um * (tk * px.uminv);
        IMat r(static_cast<int>(py.survivors.size()), static_cast<int>(px.survivors.size()));
        for (std::size_t i = 0; i < py.survivors.size(); ++i)
            for (std::size_t j = 0; j < px.survivors.size(); ++j)
                r.at(static_cast<int>(i), static_cast<int>(j)) = detail::reduce_mod(
                    full.at(py.survivors[i], px.survivors[j]), py.factors[py.survivors[i]]);
        out.matrices.push_back(std::move(r));
    }
    out.status = SearchStatus::Found;
    return out;
}

}  // namespace cellcat
