#include <catch2/catch_amalgamated.hpp>

#include "cellcat/kernel.hpp"
#include "cellcat/sset.hpp"
#include "support/oracles.hpp"

using namespace cellcat;
using namespace cellcat::testing;

TEST_CASE("standard simplices") {
    auto d1 = SSetCat::standard_simplex(1, 3);
    CHECK(d1.levels == std::vector<int>{2, 3, 4, 5});
    CHECK(SSetCat::nondeg_census(d1) == std::vector<int>{2, 1, 0, 0});
    CHECK(SSetCat::validate(d1).empty());

    auto d2 = SSetCat::standard_simplex(2, 3);
    CHECK(SSetCat::nondeg_census(d2) == std::vector<int>{3, 3, 1, 0});
}

TEST_CASE("validation reports a planted table defect") {
    auto d1 = SSetCat::standard_simplex(1, 3);
    CHECK(SSetCat::validate(d1).empty());
    auto broken = d1;
    broken.faces[1][0][0] ^= 1;  // redirect one face to the wrong vertex
    auto bad = SSetCat::validate(broken);
    CHECK(!bad.empty());
    bool names_face_relation = false;
    for (const auto& v : bad)
        if (v.relation.find("d_i") != std::string::npos) names_face_relation = true;
    CHECK(names_face_relation);
}

TEST_CASE("products are levelwise and validate") {
    auto d1 = SSetCat::standard_simplex(1, 3);
    auto p = SSetCat::product(d1, d1);
    CHECK(p.vertex.levels[0] == 4);
    CHECK(p.vertex.levels[2] == 16);
    CHECK(SSetCat::nondeg_census(p.vertex) == std::vector<int>{4, 5, 2, 0});
    CHECK(SSetCat::validate(p.vertex).empty());

    SECTION("unit law: point x X is isomorphic to X") {
        auto pt = SSetCat::point(3);
        auto pu = SSetCat::product(pt, d1);
        CHECK(SSetCat::is_iso(pu.proj2));
    }

    SECTION("pairing against the projections is the identity") {
        auto u = pair_morphisms<SSetCat>(p.proj1, p.proj2, p);
        CHECK(u == SSetCat::identity(p.vertex));
    }

    SECTION("a product simplex is degenerate exactly when both factors share a slot") {
        auto ez = SSetCat::ez_index(p.vertex);
        for (int n = 1; n <= p.vertex.dim; ++n) {
            // preimage slots per factor simplex
            std::vector<std::set<int>> slots_a(d1.levels[n]), slots_b(d1.levels[n]);
            for (int i = 0; i <= n - 1; ++i)
                for (int t = 0; t < d1.levels[n - 1]; ++t) {
                    slots_a[d1.degens[n - 1][i][t]].insert(i);
                    slots_b[d1.degens[n - 1][i][t]].insert(i);
                }
            for (int s = 0; s < p.vertex.levels[n]; ++s) {
                int sa = p.proj1.level_maps[n][s], sb = p.proj2.level_maps[n][s];
                bool shared = false;
                for (int i : slots_a[sa])
                    if (slots_b[sb].count(i)) shared = true;
                CHECK(ez.nondeg[n][s] == !shared);
            }
        }
    }
}

TEST_CASE("pushouts and coproducts are levelwise quotients") {
    auto w = SSetCat::witnesses(3);
    SECTION("collapsing the pinched face of the square gives the wedge census") {
        auto x = w.interval;
        auto cyl = SSetCat::product(x, w.interval);
        auto r = pair_morphisms<SSetCat>(SSetCat::identity(x), constant<SSetCat>(x, w.endpoint1),
                                         cyl);
        Span<SSetCat> s{x, SSetCat::terminal_morphism(x), r};
        auto p = pushout<SSetCat>(s);
        CHECK(SSetCat::nondeg_census(p.vertex) == std::vector<int>{3, 4, 2, 0});
        CHECK(SSetCat::validate(p.vertex).empty());
    }
    SECTION("two intervals glued end to end") {
        Span<SSetCat> s{w.terminal, w.endpoint0, w.endpoint1};
        auto p = pushout<SSetCat>(s);
        CHECK(SSetCat::nondeg_census(p.vertex) == std::vector<int>{3, 2, 0, 0});
        CHECK(SSetCat::validate(p.vertex).empty());
    }
    SECTION("coproduct of a point and an interval") {
        auto c = coproduct<SSetCat>({SSetCat::point(3), w.interval});
        CHECK(SSetCat::nondeg_census(c.vertex) == std::vector<int>{3, 1, 0, 0});
    }
}

TEST_CASE("hom enumeration agrees with brute force") {
    auto d1 = SSetCat::standard_simplex(1, 2);
    auto pt = SSetCat::point(2);
    auto circle = circle_complex(2);

    SECTION("maps from the point are the vertices") {
        Budget b{1 << 20};
        CHECK(SSetCat::hom_set(pt, circle, b).results.size() == 3);
    }
    SECTION("interval self-maps: identity plus two constants") {
        Budget b{1 << 20};
        auto maps = SSetCat::hom_set(d1, d1, b);
        CHECK(maps.results.size() == 3);
        CHECK(maps.results.size() == sset_hom_bruteforce(d1, d1).size());
    }
    SECTION("interval into the circle: one map per edge plus constants") {
        Budget b{1 << 20};
        auto maps = SSetCat::hom_set(d1, circle, b);
        CHECK(maps.results.size() == 6);
        // brute force over all level-map tuples at truncation 1
        auto d1s = SSetCat::standard_simplex(1, 1);
        auto circ1 = circle_complex(1);
        Budget b1{1 << 20};
        CHECK(SSetCat::hom_set(d1s, circ1, b1).results.size() ==
              sset_hom_bruteforce(d1s, circ1).size());
    }
    SECTION("brute force agreement on products") {
        auto d1s = SSetCat::standard_simplex(1, 1);
        auto sq = SSetCat::product(d1s, d1s).vertex;
        Budget b{1 << 22};
        auto maps = SSetCat::hom_set(sq, d1s, b);
        CHECK(maps.results.size() == sset_hom_bruteforce(sq, d1s).size());
    }
    SECTION("budget exhaustion is reported distinctly") {
        Budget tiny{2};
        CHECK(SSetCat::hom_set(d1, circle, tiny).status == SearchStatus::Exhausted);
        Budget enough{1 << 20};
        auto none = SSetCat::hom_set(circle, pt, enough);
        CHECK(none.status == SearchStatus::Found);  // unique collapse exists
    }
}

TEST_CASE("witness bundle") {
    auto w = SSetCat::witnesses(3);
    CHECK(!w.swap.has_value());
    REQUIRE(w.contraction.has_value());
    auto cyl = SSetCat::product(w.interval, w.interval);
    auto e0 = cylinder_face<SSetCat>(w.interval, w.endpoint0, cyl);
    auto e1 = cylinder_face<SSetCat>(w.interval, w.endpoint1, cyl);
    CHECK(SSetCat::compose(*w.contraction, e0) == SSetCat::identity(w.interval));
    CHECK(SSetCat::compose(*w.contraction, e1) == constant<SSetCat>(w.interval, w.basepoint));
    CHECK(SSetCat::validate(w.interval).empty());
}

TEST_CASE("iso search") {
    auto d1 = SSetCat::standard_simplex(1, 2);
    auto d2 = SSetCat::standard_simplex(2, 2);
    Budget b{1 << 20};
    CHECK(SSetCat::iso_search(d1, d1, b).status == SearchStatus::Found);
    CHECK(SSetCat::iso_search(d1, d2, b).status == SearchStatus::NotFound);
    auto got = SSetCat::iso_search(d1, d1, b);
    CHECK(SSetCat::is_iso(got.first()));
}

TEST_CASE("object JSON shape survives make_object") {
    auto circle = circle_complex(2);
    auto rebuilt = SSetCat::make_object(circle.dim, circle.levels, circle.faces, circle.degens);
    CHECK(rebuilt == circle);
}
