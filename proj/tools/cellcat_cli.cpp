// Command-line surface: build towers, verify identities, audit axioms,
// compute homology, realize complexes, search homotopies.  All reports are
// JSON; exit codes are 0 all-pass, 1 verification failure, 2 input error,
// 3 budget exhaustion.

#include <fstream>
#include <type_traits>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cellcat/json_io.hpp"

namespace {

using namespace cellcat;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Config {
    std::string backend = "finset";
    int n = 3;
    int dim = 5;
    std::uint64_t budget = 10'000'000;
    std::uint64_t seed = 0;
    std::string out;
    std::string object_file;
    std::string input_file;
    std::string f_file, g_file;
    int max_degree = 2;
};

void emit(const Config& cfg, const Json& j) {
    if (cfg.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(cfg.out);
        if (!os) throw cat_error("cannot open output file " + cfg.out);
        os << j.dump(2) << "\n";
    }
}

Json header(const Config& cfg, const std::string& command) {
    Json h{{"command", command}, {"backend", cfg.backend}, {"seed", cfg.seed},
           {"budget", cfg.budget}};
    if (cfg.backend == "sset") h["dim"] = cfg.dim;
    return h;
}

template <class Cat>
AxiomWitnesses<Cat> make_witnesses(const Config&);

template <>
AxiomWitnesses<FinSetCat> make_witnesses<FinSetCat>(const Config&) {
    return FinSetCat::witnesses();
}
template <>
AxiomWitnesses<SSetCat> make_witnesses<SSetCat>(const Config& cfg) {
    return SSetCat::witnesses(cfg.dim);
}

template <class Cat>
typename Cat::Obj object_from_json(const Json&);

template <>
FinSetObj object_from_json<FinSetCat>(const Json& j) {
    return finset_obj_from_json(j);
}
template <>
SSetObj object_from_json<SSetCat>(const Json& j) {
    return sset_obj_from_json(j);
}

template <class Cat>
typename Cat::Mor morphism_from_json(const Json&);

template <>
FinSetMor morphism_from_json<FinSetCat>(const Json& j) {
    return finset_mor_from_json(j);
}
template <>
SSetMor morphism_from_json<SSetCat>(const Json& j) {
    return sset_mor_from_json(j);
}

Json load_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw cat_error("cannot open " + path);
    Json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw cat_error("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

template <class Cat>
int cmd_cells(const Config& cfg) {
    auto w = make_witnesses<Cat>(cfg);
    auto t = build_tower<Cat>(cfg.n, w);
    if constexpr (std::is_same_v<Cat, SSetCat>) {
        for (const auto& cell : t.cells)
            require(SSetCat::validate(cell).empty(), "cells: generated level fails validation");
    }
    Json out = header(cfg, "cells");
    out["tower"] = tower_to_json(t);
    emit(cfg, out);
    return kExitPass;
}

template <class Cat>
int cmd_verify(const Config& cfg) {
    auto w = make_witnesses<Cat>(cfg);
    auto t = build_tower<Cat>(cfg.n, w);
    Budget budget{cfg.budget};

    Json out = header(cfg, "verify");
    auto ids = verify_simplicial_identities(t);
    out["simplicial_identities"] = json_of(ids);

    int depth = std::string(Cat::name) == "finset" ? 3 : 2;
    depth = std::min(depth, t.N - 1);
    Json conv = Json::array();
    int conv_failures = 0;
    bool exhausted = false;
    for (int m = 0; m <= depth; ++m) {
        auto rep = verify_convexity(t, m, depth, budget);
        conv_failures += rep.failures;
        for (const auto& inst : rep.instances)
            if (!inst.pass && inst.family == "hom-enumeration") exhausted = true;
        conv.push_back(Json{{"m", m}, {"report", json_of(rep)}});
    }
    out["convexity"] = conv;
    out["pass"] = ids.failures == 0 && conv_failures == 0;
    emit(cfg, out);
    if (exhausted) return kExitBudget;
    return (ids.failures == 0 && conv_failures == 0) ? kExitPass : kExitFail;
}

template <class Cat>
int cmd_audit(const Config& cfg) {
    auto w = make_witnesses<Cat>(cfg);
    Budget budget{cfg.budget};
    auto rep = audit_axioms<Cat>(w, budget);
    Json out = header(cfg, "audit");
    out["report"] = json_of(rep);
    out["pass"] = rep.all_pass();
    emit(cfg, out);
    for (const auto& e : rep.entries)
        if (e.verdict == Verdict::Inconclusive) return kExitBudget;
    return rep.all_pass() ? kExitPass : kExitFail;
}

template <class Cat>
int cmd_homology(const Config& cfg) {
    auto w = make_witnesses<Cat>(cfg);
    auto x = object_from_json<Cat>(load_json(cfg.object_file));
    int n = std::max(cfg.n, cfg.max_degree + 1);
    auto t = build_tower<Cat>(n, w);
    Budget budget{cfg.budget};
    auto nv = nerve<Cat>(t, x, cfg.max_degree + 1, budget);
    if (nv.status != SearchStatus::Found) {
        emit(cfg, Json{{"error", "nerve enumeration exhausted the budget"}});
        return kExitBudget;
    }
    auto chain = normalized_chain_complex(nv.shape);
    auto groups = homology_groups(chain, cfg.max_degree);
    Json out = header(cfg, "homology");
    out["object"] = cfg.object_file;
    out["nerve_levels"] = nv.shape.levels;
    out["homology"] = json_of(groups);
    emit(cfg, out);
    return kExitPass;
}

template <class Cat>
int cmd_realize(const Config& cfg) {
    auto w = make_witnesses<Cat>(cfg);
    auto t = build_tower<Cat>(cfg.n, w);
    Json in = load_json(cfg.input_file);
    Json out = header(cfg, "realize");
    typename Cat::Obj result;
    if (in.contains("vertices")) {
        auto a = asc_from_json(in);
        auto x = asc_to_sset(a, t.N);
        out["input_kind"] = "asc";
        result = realize<Cat>(t, x);
    } else if (in.contains("levels") && in.contains("arrows")) {
        auto g = gsc_from_json(in);
        out["input_kind"] = "gsc";
        result = gsc_colimit<Cat>(t, g).vertex;
    } else {
        throw cat_error("realize: input is neither an ASC nor a GSC diagram");
    }
    out["object"] = json_of(result);
    out["summary"] = Cat::describe(result);
    emit(cfg, out);
    return kExitPass;
}

template <class Cat>
int cmd_homotopy(const Config& cfg) {
    auto w = make_witnesses<Cat>(cfg);
    auto f = morphism_from_json<Cat>(load_json(cfg.f_file));
    auto g = morphism_from_json<Cat>(load_json(cfg.g_file));
    Budget budget{cfg.budget};
    auto hs = are_homotopic<Cat>(f, g, w, budget);
    Json out = header(cfg, "homotopy");
    out["status"] = to_string(hs.status);
    if (hs.found()) out["witness"] = json_of(hs.first().h);
    emit(cfg, out);
    if (hs.status == SearchStatus::Exhausted) return kExitBudget;
    return hs.found() ? kExitPass : kExitFail;
}

template <int (*FS)(const Config&), int (*SS)(const Config&)>
int dispatch(const Config& cfg) {
    if (cfg.backend == "finset") return FS(cfg);
    if (cfg.backend == "sset") return SS(cfg);
    throw cat_error("unknown backend " + cfg.backend);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for cells, convexity and homology in finite categories"};
    app.require_subcommand(1);

    Config cfg;
    auto add_common = [&](CLI::App* cmd, bool with_n) {
        cmd->add_option("--backend", cfg.backend, "finset or sset")
            ->check(CLI::IsMember({"finset", "sset"}));
        if (with_n) cmd->add_option("--n", cfg.n, "tower height")->check(CLI::PositiveNumber);
        cmd->add_option("--dim", cfg.dim, "simplicial truncation (sset)")->check(CLI::Range(2, 12));
        cmd->add_option("--budget", cfg.budget, "search budget (candidates)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", cfg.seed, "seed recorded in reports");
        cmd->add_option("--out", cfg.out, "output file (default stdout)");
    };

    auto* cells = app.add_subcommand("cells", "build the cell tower and serialize it");
    add_common(cells, true);

    auto* verify = app.add_subcommand("verify", "verify simplicial identities and convexity");
    add_common(verify, true);

    auto* audit = app.add_subcommand("audit", "audit the backend's axiom witnesses");
    add_common(audit, false);

    auto* homology = app.add_subcommand("homology", "homology of an object via the nerve");
    add_common(homology, true);
    homology->add_option("--object", cfg.object_file, "object JSON file")->required();
    homology->add_option("--max-degree", cfg.max_degree, "highest homology degree")
        ->check(CLI::NonNegativeNumber);

    auto* realize_cmd = app.add_subcommand("realize", "realize an ASC or GSC as a backend object");
    add_common(realize_cmd, true);
    realize_cmd->add_option("--input", cfg.input_file, "ASC or GSC JSON file")->required();

    auto* homotopy = app.add_subcommand("homotopy", "search for a homotopy between two morphisms");
    add_common(homotopy, false);
    homotopy->add_option("--f", cfg.f_file, "first morphism JSON file")->required();
    homotopy->add_option("--g", cfg.g_file, "second morphism JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (app.got_subcommand(cells)) return dispatch<cmd_cells<FinSetCat>, cmd_cells<SSetCat>>(cfg);
        if (app.got_subcommand(verify))
            return dispatch<cmd_verify<FinSetCat>, cmd_verify<SSetCat>>(cfg);
        if (app.got_subcommand(audit)) return dispatch<cmd_audit<FinSetCat>, cmd_audit<SSetCat>>(cfg);
        if (app.got_subcommand(homology))
            return dispatch<cmd_homology<FinSetCat>, cmd_homology<SSetCat>>(cfg);
        if (app.got_subcommand(realize_cmd))
            return dispatch<cmd_realize<FinSetCat>, cmd_realize<SSetCat>>(cfg);
        if (app.got_subcommand(homotopy))
            return dispatch<cmd_homotopy<FinSetCat>, cmd_homotopy<SSetCat>>(cfg);
    } catch (const cat_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const backend_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
