// Command-line driver: every verification in the library as a subcommand.
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
// input-parse error. A failing axiom is a meaningful result (exit 1), not an
// operator error.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hsc/cosmash.hpp"
#include "hsc/cotensor.hpp"
#include "hsc/equivariant.hpp"
#include "hsc/hopf.hpp"
#include "hsc/io.hpp"
#include "hsc/subcat.hpp"
#include "hsc/ydmod.hpp"
#include "hsc/zoo.hpp"
#include "json.hpp"

using namespace hsc;
using nlohmann::json;

namespace {

struct Ctx {
    std::string format = "text";
    bool verbose = false;

    bool json_mode() const { return format == "json-report"; }
};

Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SemanticError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

template <typename T>
const T& get_as(const Document& doc, const std::string& name, const std::string& what) {
    const Record& rec = doc.find(name);
    if (auto* v = std::get_if<T>(&rec.value)) return *v;
    throw SemanticError(name, "record is not a " + what + " (kind: " + rec.kind + ")");
}

json matrix_json(const LinearMap& m) {
    json rows = json::array();
    for (const Entry& e : m.entries())
        rows.push_back(json::array({e.row, e.col, e.value.str()}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

// Uniform result printer; the report drives the exit code unless overridden.
int finish(const Ctx& ctx, const std::string& command, const CheckReport& rep, json extra,
           int force_exit = -1) {
    bool pass = rep.all_pass();
    if (ctx.json_mode()) {
        json out;
        out["command"] = command;
        out["pass"] = pass;
        json entries = json::array();
        for (const auto& e : rep.entries)
            entries.push_back(json{{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
        out["entries"] = entries;
        for (auto& [k, v] : extra.items()) out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.str();
        for (auto& [k, v] : extra.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        if (!rep.entries.empty())
            std::cout << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    if (force_exit >= 0) return force_exit;
    return pass ? 0 : 1;
}

// ---- golden-file export ----

Document catalog_document(const ZooItem& item) {
    Document doc;
    if (auto* h = std::get_if<HopfAlgebra>(&item.value))
        doc.records.push_back(Record{item.expect.name, "hopf", {}, *h});
    else
        doc.records.push_back(Record{item.expect.name, "bialgebra", {}, std::get<Bialgebra>(item.value)});
    return doc;
}

Document bicomodule_document(const std::string& name, const EquivariantBicomodule& m) {
    Document doc;
    doc.records.push_back(Record{"H", "bialgebra", {}, m.H});
    doc.records.push_back(Record{"C", "module_coalgebra", {{"over", "H"}}, m.C});
    doc.records.push_back(Record{"D", "module_coalgebra", {{"over", "H"}}, m.D});
    doc.records.push_back(Record{
        name, "equivariant_bicomodule", {{"over", "H"}, {"left", "C"}, {"right", "D"}}, m});
    return doc;
}

int zoo_export(const std::string& name, const std::string& dir) {
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& n, const Document& doc) {
        std::ofstream out(dir + "/" + n + ".hsc");
        out << serialize(doc);
        std::cerr << "wrote " << dir << "/" << n << ".hsc\n";
    };
    bool found = false;
    for (const ZooItem& item : zoo_catalog())
        if (name == "all" || name == item.expect.name) {
            write(item.expect.name, catalog_document(item));
            found = true;
        }
    for (const auto& [n, m] : zoo_bicomodules())
        if (name == "all" || name == n) {
            write(n, bicomodule_document(n, m));
            found = true;
        }
    if (!found) {
        std::cerr << "no zoo entry named '" << name << "'\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for module coalgebras and equivariant bicomodules"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"text", "json-report"}));
    app.add_flag("--verbose", ctx.verbose, "print derived matrices");

    std::string file, left, right, name, sub, mname, nname, dir = "zoo";
    std::uint64_t seed = 0;
    std::string probes = "default";

    auto* c_check = app.add_subcommand("check", "run the full checker suite on every record");
    c_check->add_option("file", file)->required();

    auto* c_cot = app.add_subcommand("cotensor", "cotensor product of two comodules");
    c_cot->add_option("file", file)->required();
    c_cot->add_option("--left", left, "right-comodule record")->required();
    c_cot->add_option("--right", right, "left-comodule record")->required();

    auto* c_xi = app.add_subcommand("xi", "build the structure maps and run the lax axioms");
    c_xi->add_option("file", file)->required();
    c_xi->add_option("--bicomodule", name)->required();
    c_xi->add_option("--probes", probes)->check(CLI::IsMember({"default"}));

    auto* c_act = app.add_subcommand("action", "recover the action from a stored table");
    c_act->add_option("file", file)->required();
    c_act->add_option("--xi", name, "xi_block record (over: the bicomodule)")->required();

    auto* c_anti = app.add_subcommand("antipode", "antipode extraction or corank diagnosis");
    c_anti->add_option("file", file)->required();

    auto* c_coinv = app.add_subcommand("coinv", "coinvariants of the left coaction");
    c_coinv->add_option("file", file)->required();
    c_coinv->add_option("--object", name)->required();

    auto* c_fund = app.add_subcommand("fundthm", "freeness of Hopf modules on coinvariants");
    c_fund->add_option("file", file)->required();
    c_fund->add_option("--object", name, "module_coalgebra record D")->required();
    c_fund->add_option("--probes", probes)->check(CLI::IsMember({"default"}));
    bool converse = false;
    c_fund->add_flag("--converse", converse, "also search for a freeness counterexample");

    auto* c_yd = app.add_subcommand("yd", "crossed-condition and lax-center checks");
    c_yd->add_option("file", file)->required();
    c_yd->add_option("--object", name)->required();

    auto* c_cos = app.add_subcommand("cosmash", "emit the cosmash coalgebra as a document");
    c_cos->add_option("file", file)->required();
    c_cos->add_option("--coalgebra", name, "module_coalgebra record")->required();

    auto* c_tau = app.add_subcommand("tau", "largest subcomodule supported on a subcoalgebra");
    c_tau->add_option("file", file)->required();
    c_tau->add_option("--sub", sub, "xi_block record holding the inclusion (over: the parent)")
        ->required();
    c_tau->add_option("--object", name, "comodule_r record")->required();

    auto* c_mor = app.add_subcommand("morita", "invertible-intertwiner search for a pair");
    c_mor->add_option("file", file)->required();
    c_mor->add_option("--m", mname)->required();
    c_mor->add_option("--n", nname)->required();
    c_mor->add_option("--seed", seed, "sampler seed");

    auto* c_zoo = app.add_subcommand("zoo", "builtin example structures");
    auto* c_exp = c_zoo->add_subcommand("export", "write golden files");
    c_exp->add_option("name", name, "entry name or 'all'")->required();
    c_exp->add_option("--dir", dir, "output directory");

    // let --format/--verbose appear after the subcommand too
    for (CLI::App* sc : app.get_subcommands(nullptr)) {
        sc->fallthrough();
        for (CLI::App* nested : sc->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_check) {
            Document doc = load(file);
            CheckReport all;
            for (const Record& rec : doc.records) all.merge(rec.name + ".", check_record(rec));
            return finish(ctx, "check", all, {{"file", file}});
        }
        if (*c_cot) {
            Document doc = load(file);
            const auto& m = get_as<RightComodule>(doc, left, "comodule_r");
            const auto& n = get_as<LeftComodule>(doc, right, "comodule_l");
            CotensorSpace p = cotensor(m, n);
            json extra{{"dim", p.dim()}};
            if (ctx.json_mode() || ctx.verbose) extra["inclusion"] = matrix_json(p.inclusion);
            std::vector<std::string> basis;
            for (int j = 0; j < p.dim(); ++j) {
                std::string label;
                for (const Entry& e : p.inclusion.entries())
                    if (e.col == j) {
                        if (!label.empty()) label += " + ";
                        if (!e.value.is_one()) label += e.value.str() + "*";
                        label += m.basis[e.row / n.dim] + "(x)" + n.basis[e.row % n.dim];
                    }
                basis.push_back(label.empty() ? "0" : label);
            }
            extra["basis"] = basis;
            return finish(ctx, "cotensor", {}, extra, 0);
        }
        if (*c_xi) {
            Document doc = load(file);
            const auto& m = get_as<EquivariantBicomodule>(doc, name, "equivariant_bicomodule");
            XiFamily fam = xi_family_from_action(m);
            return finish(ctx, "xi", check_lax_axioms(fam, default_probes(m)), {{"object", name}});
        }
        if (*c_act) {
            Document doc = load(file);
            const Record& xirec = doc.find(name);
            const auto& block = get_as<XiBlock>(doc, name, "xi_block");
            auto over = xirec.refs.find("over");
            if (over == xirec.refs.end()) throw SemanticError(name + ".over", "missing reference");
            EquivariantBicomodule m =
                get_as<EquivariantBicomodule>(doc, over->second, "equivariant_bicomodule");
            LinearMap act = action_from_xi(xi_family_from_table(m, block.matrix));
            CheckReport rep;
            rep.expect_equal("action.reproduces_stored_table", act, m.action);
            m.action = act;
            rep.merge("", roundtrip_bijection(m));
            json extra{{"object", over->second}};
            if (ctx.json_mode() || ctx.verbose) extra["action"] = matrix_json(act);
            return finish(ctx, "action", rep, extra);
        }
        if (*c_anti) {
            Document doc = load(file);
            for (const Record& rec : doc.records) {
                std::optional<Bialgebra> b;
                try {
                    b = bialgebra_of(rec);
                } catch (const SemanticError&) {
                    continue;  // not a bialgebra-like record
                }
                std::optional<LinearMap> s = extract_antipode(*b);
                json extra{{"record", rec.name}};
                if (!s) {
                    int corank = b->dim() * b->dim() - beta_map(*b).rank();
                    extra["hopf"] = false;
                    extra["corank"] = corank;
                    if (!ctx.json_mode())
                        std::cout << "NOT A HOPF ALGEBRA (beta singular, corank=" << corank
                                  << ")\n";
                    return finish(ctx, "antipode", {}, extra, 0);
                }
                extra["hopf"] = true;
                extra["antipode"] = matrix_json(*s);
                if (!ctx.json_mode()) std::cout << "antipode:\n" << s->str();
                return finish(ctx, "antipode", {}, extra, 0);
            }
            throw SemanticError(file, "no record with a bialgebra structure");
        }
        if (*c_coinv) {
            Document doc = load(file);
            const auto& m = get_as<EquivariantBicomodule>(doc, name, "equivariant_bicomodule");
            Coinvariants co = coinvariants(m);
            json extra{{"object", name}, {"dim", co.comodule.dim}};
            if (ctx.json_mode() || ctx.verbose) extra["inclusion"] = matrix_json(co.inclusion);
            return finish(ctx, "coinv", {}, extra, 0);
        }
        if (*c_fund) {
            Document doc = load(file);
            const auto& d = get_as<ModuleCoalgebra>(doc, name, "module_coalgebra");
            const Bialgebra& h = d.over;
            std::vector<RightComodule> ws = {
                RightComodule{d.coalg, 0, LinearMap::zero(d.field(), 0, 0), {}},
                regular_right_comodule(d.coalg), free_comodule(d.coalg, 2)};
            std::vector<EquivariantBicomodule> ms;
            for (const auto& w : ws) ms.push_back(psi_functor(h, d, w));
            CheckReport rep = fundamental_theorem_check(h, d, ws, ms);
            if (converse) rep.merge("converse.", converse_probe_search(h, d));
            return finish(ctx, "fundthm", rep, {{"object", name}});
        }
        if (*c_yd) {
            Document doc = load(file);
            const auto& m = get_as<YDModule>(doc, name, "yd_module");
            CheckReport rep = check_yd(m);
            rep.merge("center.",
                      check_lax_center(m, {trivial_h_comodule(m.H),
                                           regular_right_comodule(m.H.coalg)}));
            return finish(ctx, "yd", rep, {{"object", name}});
        }
        if (*c_cos) {
            Document doc = load(file);
            const auto& c = get_as<ModuleCoalgebra>(doc, name, "module_coalgebra");
            ModuleCoalgebra e = cosmash(c.over, c);
            Document out;
            out.records.push_back(Record{name + "_dual", "bialgebra", {}, e.over});
            out.records.push_back(
                Record{name + "_cosmash", "module_coalgebra", {{"over", name + "_dual"}}, e});
            std::cout << serialize(out);
            return 0;
        }
        if (*c_tau) {
            Document doc = load(file);
            const Record& srec = doc.find(sub);
            const auto& block = get_as<XiBlock>(doc, sub, "xi_block");
            auto over = srec.refs.find("over");
            if (over == srec.refs.end()) throw SemanticError(sub + ".over", "missing reference");
            Subcoalgebra d{coalgebra_of(doc.find(over->second)), block.matrix};
            const auto& m = get_as<RightComodule>(doc, name, "comodule_r");
            CheckReport rep = check_subcoalgebra(d);
            json extra{{"object", name}, {"sub", sub}};
            if (rep.all_pass()) {
                TauResult t = tau(d, m);
                extra["dim"] = t.restricted.dim;
                extra["steps"] = t.steps;
                if (ctx.json_mode() || ctx.verbose) extra["inclusion"] = matrix_json(t.inclusion);
            }
            return finish(ctx, "tau", rep, extra);
        }
        if (*c_mor) {
            Document doc = load(file);
            const auto& m = get_as<EquivariantBicomodule>(doc, mname, "equivariant_bicomodule");
            const auto& n = get_as<EquivariantBicomodule>(doc, nname, "equivariant_bicomodule");
            MoritaWitness w = morita_witness_check(m, n, seed);
            CheckReport rep;
            rep.add("morita.verified", w.verified,
                    w.verified ? "" : "no invertible intertwiner found (not a disproof)");
            json extra{{"m", mname},
                       {"n", nname},
                       {"seed", seed},
                       {"mn_solution_dim", w.mn_solution_dim},
                       {"nm_solution_dim", w.nm_solution_dim}};
            if (w.to_c && (ctx.json_mode() || ctx.verbose)) extra["to_c"] = matrix_json(*w.to_c);
            if (w.to_d && (ctx.json_mode() || ctx.verbose)) extra["to_d"] = matrix_json(*w.to_d);
            return finish(ctx, "morita", rep, extra);
        }
        if (*c_exp) return zoo_export(name, dir);
        std::cerr << app.help();
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SemanticError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // mathematical failure surfaced as an exception: a meaningful result
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
