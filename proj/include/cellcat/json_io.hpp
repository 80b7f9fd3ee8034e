#pragma once

// JSON formats for objects, morphisms, towers and reports.  Everything is
// emitted through ordered_json so identical inputs serialize byte-identically.

#include <string>
#include <vector>

#include <json.hpp>

#include "cellcat/asc.hpp"
#include "cellcat/cells.hpp"
#include "cellcat/complexes.hpp"
#include "cellcat/finset.hpp"
#include "cellcat/homology.hpp"
#include "cellcat/homotopy.hpp"
#include "cellcat/kernel.hpp"
#include "cellcat/sset.hpp"

namespace cellcat {

using Json = nlohmann::ordered_json;

// -- finset ------------------------------------------------------------------

inline Json json_of(const FinSetObj& x) { return Json{{"labels", x.labels}}; }

inline FinSetObj finset_obj_from_json(const Json& j) {
    require(j.contains("labels") && j["labels"].is_array(), "finset object JSON: missing \"labels\"");
    std::vector<std::string> labels;
    for (const auto& v : j["labels"]) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    return FinSetCat::make_object(std::move(labels));
}

inline Json json_of(const FinSetMor& f) {
    Json map = Json::object();
    for (std::size_t i = 0; i < f.table.size(); ++i)
        map[f.dom.labels[i]] = f.cod.labels[f.table[i]];
    return Json{{"dom", json_of(f.dom)}, {"cod", json_of(f.cod)}, {"map", map}};
}

inline FinSetMor finset_mor_from_json(const Json& j) {
    require(j.contains("dom") && j.contains("cod") && j.contains("map"),
            "finset morphism JSON: need \"dom\", \"cod\", \"map\"");
    auto dom = finset_obj_from_json(j["dom"]);
    auto cod = finset_obj_from_json(j["cod"]);
    std::vector<int> table(dom.size(), -1);
    for (auto it = j["map"].begin(); it != j["map"].end(); ++it) {
        int from = -1, to = -1;
        for (int i = 0; i < dom.size(); ++i)
            if (dom.labels[i] == it.key()) from = i;
        std::string val = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        for (int i = 0; i < cod.size(); ++i)
            if (cod.labels[i] == val) to = i;
        require(from >= 0, "finset morphism JSON: unknown domain label \"" + it.key() + "\"");
        require(to >= 0, "finset morphism JSON: unknown codomain label \"" + val + "\"");
        table[from] = to;
    }
    for (int v : table) require(v >= 0, "finset morphism JSON: map not total");
    return FinSetCat::make_morphism(std::move(dom), std::move(cod), std::move(table));
}

// -- sset --------------------------------------------------------------------

inline Json json_of(const SSetObj& x) {
    Json faces = Json::object(), degens = Json::object();
    for (int n = 1; n <= x.dim; ++n)
        for (int i = 0; i <= n; ++i)
            faces[std::to_string(n) + "," + std::to_string(i)] = x.faces[n][i];
    for (int n = 0; n < x.dim; ++n)
        for (int i = 0; i <= n; ++i)
            degens[std::to_string(n) + "," + std::to_string(i)] = x.degens[n][i];
    return Json{{"dim", x.dim}, {"levels", x.levels}, {"faces", faces}, {"degens", degens}};
}

inline SSetObj sset_obj_from_json(const Json& j) {
    require(j.contains("dim") && j.contains("levels"), "sset object JSON: need \"dim\", \"levels\"");
    int dim = j["dim"].get<int>();
    require(dim >= 0, "sset object JSON: negative dim");
    std::vector<int> levels = j["levels"].get<std::vector<int>>();
    require(static_cast<int>(levels.size()) == dim + 1,
            "sset object JSON: \"levels\" must list dim+1 counts");
    std::vector<std::vector<std::vector<int>>> faces(dim + 1), degens(dim + 1);
    for (int n = 1; n <= dim; ++n) faces[n].resize(n + 1);
    for (int n = 0; n < dim; ++n) degens[n].resize(n + 1);
    auto fill = [&](const char* key, auto& tables, int lo, int hi) {
        for (int n = lo; n <= hi; ++n)
            for (int i = 0; i <= n; ++i) {
                std::string k = std::to_string(n) + "," + std::to_string(i);
                require(j.contains(key) && j[key].contains(k),
                        std::string("sset object JSON: missing table \"") + key + "\"[" + k + "]");
                tables[n][i] = j[key][k].template get<std::vector<int>>();
            }
    };
    fill("faces", faces, 1, dim);
    fill("degens", degens, 0, dim - 1);
    return SSetCat::make_object(dim, std::move(levels), std::move(faces), std::move(degens));
}

inline Json json_of(const SSetMor& f) {
    return Json{{"dom", json_of(f.dom)}, {"cod", json_of(f.cod)}, {"maps", f.level_maps}};
}

inline SSetMor sset_mor_from_json(const Json& j) {
    require(j.contains("dom") && j.contains("cod") && j.contains("maps"),
            "sset morphism JSON: need \"dom\", \"cod\", \"maps\"");
    return SSetCat::make_morphism(sset_obj_from_json(j["dom"]), sset_obj_from_json(j["cod"]),
                                  j["maps"].get<std::vector<std::vector<int>>>());
}

// -- complexes ----------------------------------------------------------------

inline Json json_of(const ASC& a) {
    Json faces = Json::array();
    for (const auto& f : a.faces) faces.push_back(f);
    return Json{{"vertices", a.vertices}, {"faces", faces}};
}

inline ASC asc_from_json(const Json& j) {
    require(j.contains("vertices") && j.contains("faces"),
            "asc JSON: need \"vertices\" and \"faces\"");
    ASC a;
    for (const auto& v : j["vertices"])
        a.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& f : j["faces"]) {
        auto face = f.get<std::vector<int>>();
        std::sort(face.begin(), face.end());
        a.faces.insert(face);
    }
    asc_validate(a);
    return a;
}

inline Json json_of(const GSCDiagram& g) {
    Json arrows = Json::array();
    for (const auto& ar : g.arrows)
        arrows.push_back(Json{{"from", ar.from}, {"to", ar.to}, {"j", ar.j}});
    return Json{{"levels", g.levels}, {"arrows", arrows}};
}

inline GSCDiagram gsc_from_json(const Json& j) {
    require(j.contains("levels") && j.contains("arrows"), "gsc JSON: need \"levels\" and \"arrows\"");
    GSCDiagram g;
    g.levels = j["levels"].get<std::vector<std::vector<int>>>();
    for (const auto& ar : j["arrows"])
        g.arrows.push_back({ar.at("from").get<int>(), ar.at("to").get<int>(), ar.at("j").get<int>()});
    gsc_validate(g);
    return g;
}

// -- towers -------------------------------------------------------------------

template <class Cat>
Json tower_to_json(const CellTower<Cat>& t) {
    Json cells = Json::array();
    for (const auto& c : t.cells) cells.push_back(json_of(c));
    Json faces = Json::object(), degens = Json::object(), centroids = Json::object();
    for (int n = 1; n <= t.N; ++n)
        for (int i = 0; i <= n; ++i)
            faces[std::to_string(n) + "," + std::to_string(i)] = json_of(t.faces[n][i]);
    for (int n = 0; n < t.N; ++n)
        for (int i = 0; i <= n; ++i)
            degens[std::to_string(n) + "," + std::to_string(i)] = json_of(t.degens[n][i]);
    for (int n = 1; n <= t.N; ++n) centroids[std::to_string(n)] = json_of(t.centroids[n]);
    return Json{{"backend", Cat::name},
                {"N", t.N},
                {"wedge_of_terminal_is_interval", t.wedge_f0_is_interval},
                {"cells", cells},
                {"faces", faces},
                {"degeneracies", degens},
                {"centroids", centroids}};
}

// -- reports ------------------------------------------------------------------

inline Json json_of(const IdentityReport& r) {
    Json inst = Json::array();
    for (const auto& i : r.instances) {
        Json e{{"family", i.family}, {"n", i.n}, {"i", i.i}, {"j", i.j}, {"pass", i.pass}};
        if (!i.detail.empty()) e["detail"] = i.detail;
        inst.push_back(e);
    }
    return Json{{"instances", inst}, {"failures", r.failures}, {"pass", r.failures == 0}};
}

inline Json json_of(const AxiomReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"axiom", e.axiom}, {"verdict", to_string(e.verdict)}, {"note", e.note}});
    return Json{{"backend", r.backend}, {"axioms", entries}};
}

inline Json json_of(const std::vector<HomologyGroup>& groups) {
    Json out = Json::array();
    for (const auto& g : groups)
        out.push_back(Json{{"degree", g.degree}, {"betti", g.betti}, {"torsion", g.torsion}});
    return out;
}

inline Json json_of(const RelationReport& r) {
    Json rel = Json::array();
    for (const auto& row : r.related) {
        Json jr = Json::array();
        for (bool b : row) jr.push_back(b);
        rel.push_back(jr);
    }
    return Json{{"status", to_string(r.status)}, {"hom_size", r.hom_size},
                {"related", rel},         {"reflexive", r.reflexive},
                {"symmetric", r.symmetric}, {"transitive", r.transitive}};
}

inline Json json_of(const IMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

}  // namespace cellcat
