// Python bindings: the main operations, driven through the textual document
// format so callers never juggle raw structure-constant tables.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsc/cosmash.hpp"
#include "hsc/cotensor.hpp"
#include "hsc/equivariant.hpp"
#include "hsc/hopf.hpp"
#include "hsc/io.hpp"
#include "hsc/subcat.hpp"
#include "hsc/ydmod.hpp"
#include "hsc/zoo.hpp"

namespace py = pybind11;
using namespace hsc;

namespace {

py::list report_list(const CheckReport& rep) {
    py::list out;
    for (const auto& e : rep.entries) {
        py::dict d;
        d["name"] = e.name;
        d["pass"] = e.pass;
        d["detail"] = e.detail;
        out.append(d);
    }
    return out;
}

py::list matrix_entries(const LinearMap& m) {
    py::list out;
    for (const Entry& e : m.entries()) out.append(py::make_tuple(e.row, e.col, e.value.str()));
    return out;
}

template <typename T>
const T& get_as(const Document& doc, const std::string& name, const char* what) {
    const Record& rec = doc.find(name);
    if (auto* v = std::get_if<T>(&rec.value)) return *v;
    throw SemanticError(name, std::string("record is not a ") + what);
}

}  // namespace

PYBIND11_MODULE(_hsc, m) {
    m.doc() = "exact verification of module coalgebras and equivariant bicomodules";

    py::register_exception<ParseError>(m, "DocumentParseError", PyExc_ValueError);
    py::register_exception<SemanticError>(m, "DocumentSemanticError", PyExc_ValueError);

    m.def("canonicalize", [](const std::string& text) { return serialize(parse_document(text)); },
          py::arg("text"), "Parse a document and re-emit it in canonical form.");

    m.def(
        "check",
        [](const std::string& text) {
            py::dict out;
            for (const Record& rec : parse_document(text).records)
                out[py::str(rec.name)] = report_list(check_record(rec));
            return out;
        },
        py::arg("text"), "Run the axiom suite of every record; entries keyed by record name.");

    m.def(
        "antipode",
        [](const std::string& text, const std::string& name) -> py::object {
            std::optional<LinearMap> s = extract_antipode(bialgebra_of(parse_document(text).find(name)));
            if (!s) return py::none();
            return matrix_entries(*s);
        },
        py::arg("text"), py::arg("name"),
        "Sparse antipode entries of the named bialgebra, or None when it is not Hopf.");

    m.def(
        "cotensor_dim",
        [](const std::string& text, const std::string& left, const std::string& right) {
            Document doc = parse_document(text);
            return cotensor(get_as<RightComodule>(doc, left, "comodule_r"),
                            get_as<LeftComodule>(doc, right, "comodule_l"))
                .dim();
        },
        py::arg("text"), py::arg("left"), py::arg("right"));

    m.def(
        "lax_axioms",
        [](const std::string& text, const std::string& name) {
            Document doc = parse_document(text);
            const auto& obj = get_as<EquivariantBicomodule>(doc, name, "equivariant_bicomodule");
            return report_list(check_lax_axioms(xi_family_from_action(obj), default_probes(obj)));
        },
        py::arg("text"), py::arg("name"),
        "Structure maps built from the action, checked against the lax module-functor axioms.");

    m.def(
        "coinvariants_dim",
        [](const std::string& text, const std::string& name) {
            Document doc = parse_document(text);
            return coinvariants(get_as<EquivariantBicomodule>(doc, name, "equivariant_bicomodule"))
                .comodule.dim;
        },
        py::arg("text"), py::arg("name"));

    m.def(
        "yd_check",
        [](const std::string& text, const std::string& name) {
            Document doc = parse_document(text);
            const auto& obj = get_as<YDModule>(doc, name, "yd_module");
            CheckReport rep = check_yd(obj);
            rep.merge("center.", check_lax_center(obj, {trivial_h_comodule(obj.H),
                                                        regular_right_comodule(obj.H.coalg)}));
            return report_list(rep);
        },
        py::arg("text"), py::arg("name"));

    m.def(
        "cosmash_document",
        [](const std::string& text, const std::string& name) {
            Document doc = parse_document(text);
            const auto& c = get_as<ModuleCoalgebra>(doc, name, "module_coalgebra");
            ModuleCoalgebra e = cosmash(c.over, c);
            Document out;
            out.records.push_back(Record{name + "_dual", "bialgebra", {}, e.over});
            out.records.push_back(
                Record{name + "_cosmash", "module_coalgebra", {{"over", name + "_dual"}}, e});
            return serialize(out);
        },
        py::arg("text"), py::arg("name"));

    m.def(
        "tau",
        [](const std::string& text, const std::string& sub, const std::string& object) {
            Document doc = parse_document(text);
            const Record& srec = doc.find(sub);
            const auto& block = get_as<XiBlock>(doc, sub, "xi_block");
            auto over = srec.refs.find("over");
            if (over == srec.refs.end()) throw SemanticError(sub + ".over", "missing reference");
            Subcoalgebra d{coalgebra_of(doc.find(over->second)), block.matrix};
            TauResult t = tau(d, get_as<RightComodule>(doc, object, "comodule_r"));
            py::dict out;
            out["dim"] = t.restricted.dim;
            out["steps"] = t.steps;
            out["inclusion"] = matrix_entries(t.inclusion);
            return out;
        },
        py::arg("text"), py::arg("sub"), py::arg("object"));

    m.def(
        "morita",
        [](const std::string& text, const std::string& mname, const std::string& nname,
           std::uint64_t seed) {
            Document doc = parse_document(text);
            MoritaWitness w = morita_witness_check(
                get_as<EquivariantBicomodule>(doc, mname, "equivariant_bicomodule"),
                get_as<EquivariantBicomodule>(doc, nname, "equivariant_bicomodule"), seed);
            py::dict out;
            out["verified"] = w.verified;
            out["mn_solution_dim"] = w.mn_solution_dim;
            out["nm_solution_dim"] = w.nm_solution_dim;
            out["to_c"] = w.to_c ? py::object(matrix_entries(*w.to_c)) : py::none();
            out["to_d"] = w.to_d ? py::object(matrix_entries(*w.to_d)) : py::none();
            return out;
        },
        py::arg("text"), py::arg("m"), py::arg("n"), py::arg("seed") = 0);

    m.def("zoo_names", [] {
        std::vector<std::string> names;
        for (const ZooItem& item : zoo_catalog()) names.push_back(item.expect.name);
        for (const auto& [n, _] : zoo_bicomodules()) names.push_back(n);
        return names;
    });

    m.def(
        "zoo_document",
        [](const std::string& name) -> std::string {
            for (const ZooItem& item : zoo_catalog())
                if (item.expect.name == name) {
                    Document doc;
                    if (auto* h = std::get_if<HopfAlgebra>(&item.value))
                        doc.records.push_back(Record{name, "hopf", {}, *h});
                    else
                        doc.records.push_back(
                            Record{name, "bialgebra", {}, std::get<Bialgebra>(item.value)});
                    return serialize(doc);
                }
            for (const auto& [n, obj] : zoo_bicomodules())
                if (n == name) {
                    Document doc;
                    doc.records.push_back(Record{"H", "bialgebra", {}, obj.H});
                    doc.records.push_back(Record{"C", "module_coalgebra", {{"over", "H"}}, obj.C});
                    doc.records.push_back(Record{"D", "module_coalgebra", {{"over", "H"}}, obj.D});
                    doc.records.push_back(Record{n, "equivariant_bicomodule",
                                                 {{"over", "H"}, {"left", "C"}, {"right", "D"}},
                                                 obj});
                    return serialize(doc);
                }
            throw SemanticError(name, "no such zoo entry");
        },
        py::arg("name"), "Builtin example structure as a canonical document.");
}
