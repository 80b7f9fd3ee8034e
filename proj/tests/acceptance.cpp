// Acceptance suite: one line per criterion, PASS/FAIL plus elapsed time.
// Exits nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cellcat/complexes.hpp"
#include "cellcat/homology.hpp"
#include "cellcat/homotopy.hpp"
#include "cellcat/json_io.hpp"
#include "support/oracles.hpp"

using namespace cellcat;
using namespace cellcat::testing;

namespace {

struct Harness {
    int failures = 0;

    void run(const std::string& name, double limit_s, const std::function<bool(std::string&)>& fn) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > limit_s) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
        }
        std::printf("%-4s %-58s %7.2fs/%gs %s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                    limit_s, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

}  // namespace

int main() {
    Harness h;

    // 1. The finite-set tower carries the combinatorial simplex tables.
    h.run("01 finset tower equals the combinatorial simplex (N=8)", 5.0, [](std::string& d) {
        auto w = FinSetCat::witnesses();
        auto t = build_tower<FinSetCat>(8, w);
        bool ok = true;
        for (int n = 0; n <= 8; ++n) ok &= expect(t.cells[n].size() == n + 1, "cell size", d);
        for (int n = 1; n <= 8; ++n)
            for (int i = 0; i <= n; ++i)
                ok &= expect(t.faces[n][i].table == delta_face(n, i).img,
                             "face table " + std::to_string(n) + "," + std::to_string(i), d);
        for (int n = 0; n < 8; ++n)
            for (int i = 0; i <= n; ++i)
                ok &= expect(t.degens[n][i].table == delta_degeneracy(n, i).img,
                             "degeneracy table " + std::to_string(n) + "," + std::to_string(i), d);
        return ok;
    });

    // 2. Simplicial identities plus the auxiliary wedge/flatten identities.
    h.run("02 simplicial identities (finset N=6, sset N=3 D=4)", 60.0, [](std::string& d) {
        auto wf = FinSetCat::witnesses();
        auto tf = build_tower<FinSetCat>(6, wf);
        auto repf = verify_simplicial_identities(tf);
        auto ws = SSetCat::witnesses(4);
        auto ts = build_tower<SSetCat>(3, ws);
        auto reps = verify_simplicial_identities(ts);
        bool aux_present = false;
        for (const auto& inst : repf.instances)
            if (inst.family == "flatten-wedged-bottom") aux_present = true;
        d = std::to_string(repf.instances.size()) + "+" + std::to_string(reps.instances.size()) +
            " instances";
        if (repf.failures || reps.failures || !aux_present) {
            d = "failures: finset " + std::to_string(repf.failures) + ", sset " +
                std::to_string(reps.failures);
            return false;
        }
        return true;
    });

    // 3. Convexity: cone equations on every enumerated hom-set.
    h.run("03 convexity equations (finset n,m<=3; sset n,m<=2 D=4)", 120.0, [](std::string& d) {
        auto wf = FinSetCat::witnesses();
        auto tf = build_tower<FinSetCat>(4, wf);
        Budget bf{1ull << 32};
        int fail = 0, total = 0;
        for (int m = 0; m <= 3; ++m) {
            auto rep = verify_convexity(tf, m, 3, bf);
            fail += rep.failures;
            total += static_cast<int>(rep.instances.size());
        }
        auto ws = SSetCat::witnesses(4);
        auto ts = build_tower<SSetCat>(3, ws);
        Budget bs{1ull << 32};
        for (int m = 0; m <= 2; ++m) {
            auto rep = verify_convexity(ts, m, 2, bs);
            fail += rep.failures;
            total += static_cast<int>(rep.instances.size());
        }
        d = std::to_string(total) + " instances";
        if (fail) d = std::to_string(fail) + " failures";
        return fail == 0;
    });

    // 4. Contractibility of cells and wedges; the circle is not contractible.
    h.run("04 contractibility (cells, wedges, circle)", 120.0, [](std::string& d) {
        bool ok = true;
        auto wf = FinSetCat::witnesses();
        auto tf = build_tower<FinSetCat>(6, wf);
        for (int n = 1; n <= 6; ++n) {
            Budget b{1ull << 28};
            ok &= expect(
                is_contractible<FinSetCat>(tf.cells[n], wf, b).status == SearchStatus::Found,
                "finset F_" + std::to_string(n), d);
        }
        auto ws = SSetCat::witnesses(4);
        auto ts = build_tower<SSetCat>(3, ws);
        for (int n = 1; n <= 3; ++n) {
            Budget b{1ull << 30};
            ok &= expect(
                is_contractible<SSetCat>(ts.cells[n], ws, b).status == SearchStatus::Found,
                "sset F_" + std::to_string(n), d);
        }
        // five random small objects, every wedge contractible
        Rng rng(2026);
        for (int trial = 0; trial < 3; ++trial) {
            auto x = random_finset_obj(rng, 1, 3);
            auto wx = wedge_object<FinSetCat>(x, wf);
            Budget b{1ull << 28};
            ok &= expect(
                is_contractible<FinSetCat>(wx.vertex, wf, b).status == SearchStatus::Found,
                "finset wedge", d);
        }
        SSetPool pool(4);
        for (int trial = 0; trial < 2; ++trial) {
            auto wx = wedge_object<SSetCat>(pool.objects[trial + 1], ws);
            Budget b{1ull << 30};
            ok &= expect(is_contractible<SSetCat>(wx.vertex, ws, b).status == SearchStatus::Found,
                         "sset wedge", d);
        }
        Budget b{1ull << 30};
        ok &= expect(is_contractible<SSetCat>(circle_complex(4), ws, b).status ==
                         SearchStatus::NotFound,
                     "circle must fail definitively", d);
        return ok;
    });

    // 5. Homotopy invariance of homology in degrees 0..2.
    h.run("05 homotopy invariance of homology (20 witnessed pairs)", 120.0, [](std::string& d) {
        bool ok = true;
        int pairs = 0;
        auto wf = FinSetCat::witnesses();
        auto tf = build_tower<FinSetCat>(3, wf);
        Rng rng(97);
        while (pairs < 16) {
            auto x = random_finset_obj(rng, 1, 3);
            auto y = random_finset_obj(rng, 1, 3);
            auto f = random_finset_mor(rng, x, y);
            auto g = random_finset_mor(rng, x, y);
            Budget b{1ull << 28};
            if (!are_homotopic<FinSetCat>(f, g, wf, b).found()) continue;
            Budget b1{1ull << 30}, b2{1ull << 30};
            auto mf = induced_map_on_homology<FinSetCat>(tf, f, 2, b1);
            auto mg = induced_map_on_homology<FinSetCat>(tf, g, 2, b2);
            ok &= expect(mf.status == SearchStatus::Found && mg.status == SearchStatus::Found,
                         "induced map budget", d);
            for (int n = 0; n <= 2 && ok; ++n)
                ok &= expect(mf.matrices[n] == mg.matrices[n], "finset matrices differ", d);
            ++pairs;
        }
        auto ws = SSetCat::witnesses(4);
        auto ts = build_tower<SSetCat>(3, ws);
        std::vector<SSetObj> targets = {SSetCat::standard_simplex(1, 4), circle_complex(4),
                                        SSetCat::point(4)};
        for (const auto& y : targets) {
            Budget hb{1ull << 30};
            auto maps = SSetCat::hom_set(SSetCat::standard_simplex(1, 4), y, hb).results;
            int found_here = 0;
            for (std::size_t i = 0; i < maps.size() && found_here < 2; ++i)
                for (std::size_t j = 0; j < maps.size() && found_here < 2; ++j) {
                    if (i == j) continue;
                    Budget b{1ull << 28};
                    if (!are_homotopic<SSetCat>(maps[i], maps[j], ws, b).found()) continue;
                    Budget b1{1ull << 31}, b2{1ull << 31};
                    auto mf = induced_map_on_homology<SSetCat>(ts, maps[i], 2, b1);
                    auto mg = induced_map_on_homology<SSetCat>(ts, maps[j], 2, b2);
                    ok &= expect(
                        mf.status == SearchStatus::Found && mg.status == SearchStatus::Found,
                        "sset induced budget", d);
                    for (int n = 0; n <= 2 && ok; ++n)
                        ok &= expect(mf.matrices[n] == mg.matrices[n], "sset matrices differ", d);
                    ++found_here;
                    ++pairs;
                }
        }
        d = std::to_string(pairs) + " pairs";
        return ok && pairs >= 20;
    });

    // 6. Universal properties of products and pushouts, with uniqueness.
    h.run("06 universal properties (100 random instances per backend)", 30.0, [](std::string& d) {
        bool ok = true;
        Rng rng(361);
        for (int trial = 0; trial < 50; ++trial) {
            auto a = random_finset_obj(rng, 1, 4);
            auto b = random_finset_obj(rng, 1, 4);
            auto c = random_finset_obj(rng, 1, 4);
            auto p = product<FinSetCat>(a, b);
            auto f = random_finset_mor(rng, c, a);
            auto g = random_finset_mor(rng, c, b);
            auto u = pair_morphisms<FinSetCat>(f, g, p);
            Budget budget{1ull << 30};
            int solutions = 0;
            for (const auto& hcand : FinSetCat::hom_set(c, p.vertex, budget).results)
                if (FinSetCat::compose(p.proj1, hcand) == f &&
                    FinSetCat::compose(p.proj2, hcand) == g)
                    ++solutions;
            ok &= expect(solutions == 1 && FinSetCat::compose(p.proj1, u) == f,
                         "finset product uniqueness", d);

            auto apex = random_finset_obj(rng, 1, 3);
            Span<FinSetCat> s{apex, random_finset_mor(rng, apex, a),
                              random_finset_mor(rng, apex, b)};
            auto po = pushout<FinSetCat>(s);
            auto z = random_finset_obj(rng, 1, 4);
            auto umap = random_finset_mor(rng, po.vertex, z);
            auto cl = FinSetCat::compose(umap, po.inj_left);
            auto cr = FinSetCat::compose(umap, po.inj_right);
            auto v = factor_through_pushout<FinSetCat>(po, cl, cr);
            Budget budget2{1ull << 30};
            int solutions2 = 0;
            for (const auto& hcand : FinSetCat::hom_set(po.vertex, z, budget2).results)
                if (FinSetCat::compose(hcand, po.inj_left) == cl &&
                    FinSetCat::compose(hcand, po.inj_right) == cr)
                    ++solutions2;
            ok &= expect(solutions2 == 1 && v == umap, "finset pushout uniqueness", d);
        }
        auto ws = SSetCat::witnesses(2);
        SSetPool pool(2);
        int done = 0;
        while (done < 50) {
            const auto& a = pool.pick(rng);
            const auto& b = pool.pick(rng);
            const auto& c = pool.objects[rng.below(2)];  // point or interval keeps hom-sets small
            auto p = product<SSetCat>(a, b);
            Budget hb{1ull << 28};
            auto fs = SSetCat::hom_set(c, a, hb).results;
            auto gs = SSetCat::hom_set(c, b, hb).results;
            if (fs.empty() || gs.empty()) continue;
            const auto& f = fs[rng.below(fs.size())];
            const auto& g = gs[rng.below(gs.size())];
            auto u = pair_morphisms<SSetCat>(f, g, p);
            Budget budget{1ull << 30};
            auto all = SSetCat::hom_set(c, p.vertex, budget);
            int solutions = 0;
            for (const auto& hcand : all.results)
                if (SSetCat::compose(p.proj1, hcand) == f && SSetCat::compose(p.proj2, hcand) == g)
                    ++solutions;
            ok &= expect(all.status == SearchStatus::Found && solutions == 1,
                         "sset product uniqueness", d);
            (void)u;

            const auto& apex = pool.objects[rng.below(2)];
            Budget hb2{1ull << 28};
            auto ls = SSetCat::hom_set(apex, a, hb2).results;
            auto rs = SSetCat::hom_set(apex, b, hb2).results;
            if (ls.empty() || rs.empty()) continue;
            Span<SSetCat> s{apex, ls[rng.below(ls.size())], rs[rng.below(rs.size())]};
            auto po = pushout<SSetCat>(s);
            Budget hb3{1ull << 28};
            auto outs = SSetCat::hom_set(po.vertex, pool.objects[1], hb3).results;
            if (outs.empty()) continue;
            const auto& umap = outs[rng.below(outs.size())];
            auto cl = SSetCat::compose(umap, po.inj_left);
            auto cr = SSetCat::compose(umap, po.inj_right);
            auto v = factor_through_pushout<SSetCat>(po, cl, cr);
            ok &= expect(v == umap, "sset pushout factorization", d);
            Budget budget2{1ull << 30};
            int solutions2 = 0;
            for (const auto& hcand : SSetCat::hom_set(po.vertex, pool.objects[1], budget2).results)
                if (SSetCat::compose(hcand, po.inj_left) == cl &&
                    SSetCat::compose(hcand, po.inj_right) == cr)
                    ++solutions2;
            ok &= expect(solutions2 == 1, "sset pushout uniqueness", d);
            ++done;
        }
        return ok;
    });

    // 7. Smith normal form: transforms, divisibility, oracle agreement.
    h.run("07 smith normal form (200 random matrices)", 10.0, [](std::string& d) {
        Rng rng(555);
        bool ok = true;
        for (int trial = 0; trial < 200; ++trial) {
            IMat m(rng.range(1, 6), rng.range(1, 6));
            for (auto& v : m.a) v = rng.range(-9, 9);
            auto s = smith_normal_form(m);
            ok &= expect(s.u * (m * s.v) == s.d, "U*M*V = D", d);
            Int du = det(s.u), dv = det(s.v);
            ok &= expect((du == 1 || du == -1) && (dv == 1 || dv == -1), "unimodularity", d);
            for (std::size_t k = 1; k < s.diag.size(); ++k)
                ok &= expect(s.diag[k] % s.diag[k - 1] == 0, "divisibility chain", d);
            ok &= expect(snf_oracle_diag(m) == s.diag, "oracle agreement", d);
        }
        return ok;
    });

    // 8. Classical chain-complex homology spot checks.
    h.run("08 classical homology of point and triangles", 1.0, [](std::string& d) {
        auto betti = [](const ASC& a, int maxdeg) {
            std::vector<long long> out;
            for (const auto& g : homology_groups(asc_chain_complex(a), maxdeg))
                out.push_back(g.betti);
            return out;
        };
        bool ok = true;
        ok &= expect(betti(asc_from_faces({"v"}, {{0}}), 0) == std::vector<long long>{1}, "point",
                     d);
        ok &= expect(betti(asc_from_faces({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), 1) ==
                         std::vector<long long>{1, 1},
                     "hollow triangle", d);
        ok &= expect(betti(asc_from_faces({"a", "b", "c"}, {{0, 1, 2}}), 2) ==
                         std::vector<long long>{1, 0, 0},
                     "full triangle", d);
        for (const auto& g :
             homology_groups(asc_chain_complex(asc_from_faces({"a", "b", "c"}, {{0, 1, 2}})), 2))
            ok &= expect(g.torsion.empty(), "unexpected torsion", d);
        return ok;
    });

    // 9. Realization of representables is the corresponding cell.
    h.run("09 realize(Delta[n]) = F_n for n<=3, both backends", 60.0, [](std::string& d) {
        bool ok = true;
        auto wf = FinSetCat::witnesses();
        auto tf = build_tower<FinSetCat>(4, wf);
        CosimplicialFunctor<FinSetCat> cff{&tf, {}};
        for (int k = 0; k <= 3; ++k) {
            auto dk = SSetCat::standard_simplex(k, tf.N);
            auto colim = realize_colimit<FinSetCat>(tf, dk);
            auto u = realize_representable_comparison<FinSetCat>(cff, k, dk, colim);
            ok &= expect(FinSetCat::is_iso(u), "finset k=" + std::to_string(k), d);
        }
        auto ws = SSetCat::witnesses(4);
        auto ts = build_tower<SSetCat>(4, ws);
        CosimplicialFunctor<SSetCat> cfs{&ts, {}};
        for (int k = 0; k <= 3; ++k) {
            auto dk = SSetCat::standard_simplex(k, ts.N);
            auto colim = realize_colimit<SSetCat>(ts, dk);
            auto u = realize_representable_comparison<SSetCat>(cfs, k, dk, colim);
            ok &= expect(SSetCat::is_iso(u), "sset k=" + std::to_string(k), d);
        }
        return ok;
    });

    // 10. Axiom audit verdicts are exactly the documented table.
    h.run("10 axiom audit fixed verdicts", 10.0, [](std::string& d) {
        bool ok = true;
        auto wf = FinSetCat::witnesses();
        Budget bf{1ull << 28};
        auto rf = audit_axioms<FinSetCat>(wf, bf);
        for (const char* ax :
             {"A:C", "A:brace", "A:swap", "A:pushout", "A:1_0_cell", "A:1_contract"})
            ok &= expect(rf.entry(ax).verdict == Verdict::Pass, std::string("finset ") + ax, d);
        ok &= expect(rf.entry("A:F1_join").verdict == Verdict::Fail, "finset A:F1_join", d);
        ok &= expect(rf.entry("A:F1_join").note.find("|X|=3") != std::string::npos &&
                         rf.entry("A:F1_join").note.find("|X|=2") != std::string::npos,
                     "finset join counterexample sizes", d);

        auto ws = SSetCat::witnesses(4);
        Budget bs{1ull << 28};
        auto rs = audit_axioms<SSetCat>(ws, bs);
        for (const char* ax : {"A:C", "A:brace", "A:pushout", "A:1_0_cell", "A:1_contract"})
            ok &= expect(rs.entry(ax).verdict == Verdict::Pass, std::string("sset ") + ax, d);
        ok &= expect(rs.entry("A:swap").verdict == Verdict::Fail &&
                         rs.entry("A:swap").note == "witness absent",
                     "sset A:swap", d);
        ok &= expect(rs.entry("A:F1_join").verdict == Verdict::Fail, "sset A:F1_join", d);
        ok &= expect(rs.entry("A:F1_join").note.find("nondeg=[3,2") != std::string::npos &&
                         rs.entry("A:F1_join").note.find("nondeg=[2,1") != std::string::npos,
                     "sset join counterexample censuses", d);
        return ok;
    });

    // 11. Planted defects are detected and named.
    h.run("11 mutation sensitivity (cells, cone, validation)", 30.0, [](std::string& d) {
        bool ok = true;
        auto wf = FinSetCat::witnesses();
        auto tf = build_tower<FinSetCat>(3, wf);
        {
            auto broken = tf;
            std::swap(broken.faces[2][1].table[0], broken.faces[2][1].table[1]);
            auto rep = verify_simplicial_identities(broken);
            bool named = false;
            for (const auto& inst : rep.instances)
                if (!inst.pass && inst.family == "dd") named = true;
            ok &= expect(rep.failures > 0 && named, "face-table swap not detected", d);
        }
        {
            ConeFamily<FinSetCat> bad{&tf, 1, tf.degens[1][1]};
            Budget b{1ull << 28};
            auto rep = verify_convexity(tf, 1, 2, b, &bad);
            bool named = false;
            for (const auto& inst : rep.instances)
                if (!inst.pass &&
                    (inst.family == "base-right-inverse" || inst.family == "cone-face-case"))
                    named = true;
            ok &= expect(rep.failures > 0 && named, "wrong collapse not detected", d);
        }
        {
            auto x = SSetCat::standard_simplex(1, 3);
            x.faces[1][0][0] ^= 1;
            auto bad = SSetCat::validate(x);
            ok &= expect(!bad.empty() && !bad.front().relation.empty(),
                         "face redirection not detected", d);
        }
        return ok;
    });

    std::printf("%s: %d criterion(s) failed\n", h.failures ? "FAIL" : "PASS", h.failures);
    return h.failures ? 1 : 0;
}
