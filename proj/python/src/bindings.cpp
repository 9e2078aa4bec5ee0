#include "qlogic/catalog.hpp"
#include "qlogic/cli.hpp"
#include "qlogic/cloning.hpp"
#include "qlogic/divisible.hpp"
#include "qlogic/error.hpp"
#include "qlogic/mv.hpp"
#include "qlogic/serialization.hpp"
#include "qlogic/states.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qlogic;

namespace {

py::object to_python(const Json &doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

Json from_python(const py::object &obj) {
    return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

std::optional<std::string> label_or_none(const EffectAlgebra &alg, ElementId e) {
    if (e == kUndefined) return std::nullopt;
    return alg.label(e);
}

py::dict search_to_python(const EffectAlgebra &alg, const SearchOutcome &outcome) {
    py::dict d;
    d["status"] = std::string(status_name(outcome.status));
    d["nodes_explored"] = outcome.nodes_explored;
    py::list witnesses;
    for (const auto &w : outcome.witnesses) witnesses.append(to_python(witness_to_json(alg, w)["witness"]));
    d["witnesses"] = witnesses;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite effect algebras, cloning bimorphisms, states and hidden-variable models";

    static py::handle error = py::exception<Error>(m, "QlogicError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error &e) {
            py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
            inst.attr("kind") = std::string(kind_name(e.kind()));
            inst.attr("witnesses") = e.witnesses();
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::class_<EffectAlgebra>(m, "EffectAlgebra")
        .def("__len__", &EffectAlgebra::size)
        .def_property_readonly("labels", &EffectAlgebra::labels)
        .def_property_readonly("zero", [](const EffectAlgebra &a) { return a.label(a.zero()); })
        .def_property_readonly("unit", [](const EffectAlgebra &a) { return a.label(a.unit()); })
        .def("sum", [](const EffectAlgebra &a, const std::string &p, const std::string &q) {
            return label_or_none(a, a.sum(a.id(p), a.id(q)));
        }, "p + q, or None when undefined")
        .def("supplement", [](const EffectAlgebra &a, const std::string &p) { return a.label(a.supplement(a.id(p))); })
        .def("leq", [](const EffectAlgebra &a, const std::string &p, const std::string &q) { return a.leq(a.id(p), a.id(q)); })
        .def("to_json", [](const EffectAlgebra &a) { return to_python(algebra_to_json(a)); })
        .def("__repr__", [](const EffectAlgebra &a) { return "<EffectAlgebra with " + std::to_string(a.size()) + " elements>"; });

    m.def("catalog", [](const std::string &spec) { return catalog::build(spec); }, py::arg("spec"),
          "Build a catalog algebra from a spec such as \"mo(3)\" or \"product(chain(2),chain(2))\".");
    m.def("loads", [](const std::string &text) { return load_algebra(text); }, py::arg("text"));
    m.def("from_dict", [](const py::object &obj) { return load_algebra(from_python(obj).dump()); }, py::arg("doc"));

    m.def("analyze", [](const EffectAlgebra &a) { return to_python(structure_to_json(a, analyze(a))); });
    m.def("is_boolean", [](const EffectAlgebra &a) { return is_boolean(a); });
    m.def("is_isomorphic", [](const EffectAlgebra &a, const EffectAlgebra &b) { return find_isomorphism(a, b).has_value(); });

    m.def("clone_search", [](const EffectAlgebra &a, bool enumerate_all, std::uint64_t budget) {
        std::optional<SearchOutcome> outcome;
        {
            py::gil_scoped_release release;
            outcome = find_cloning_bimorphism(a, {enumerate_all, budget});
        }
        return search_to_python(a, *outcome);
    }, py::arg("alg"), py::arg("enumerate_all") = false, py::arg("budget") = SearchConfig{}.node_budget);
    m.def("meet_witness", [](const EffectAlgebra &a) { return to_python(witness_to_json(a, meet_witness(a))["witness"]); });
    m.def("verify_witness", [](const EffectAlgebra &a, const py::object &rows) {
        Json doc{{"witness", from_python(rows)}};
        return verify_witness(a, witness_from_json(a, doc)).ok;
    });

    m.def("vertex_states", [](const EffectAlgebra &a) {
        auto polytope = enumerate_vertex_states(a);
        py::dict d;
        d["dimension"] = polytope.dimension;
        d["vertices"] = to_python(vertices_to_json(a, polytope));
        d["separating"] = is_separating(a, polytope).separating;
        return d;
    });

    m.def("hidden_variable", [](const EffectAlgebra &a, std::optional<std::vector<std::string>> parts,
                                std::size_t mixtures, std::uint64_t seed) {
        ChainDecomposition decomposition;
        if (parts) {
            for (const auto &label : *parts) decomposition.parts.push_back(a.id(label));
        } else {
            auto found = find_chain_decomposition(a, 1);
            if (found.empty()) throw Error(Error::Kind::DecompositionMismatch, "no decomposition into chains");
            decomposition = found.front();
        }
        auto search = find_cloning_bimorphism(a);
        if (search.status != SearchStatus::WitnessFound) throw Error(Error::Kind::NotBoolean, "no cloning bimorphism");
        auto model = hidden_variable_construct(a, search.witnesses.front(), decomposition);
        auto report = verify_hidden_variable(a, model, enumerate_vertex_states(a), mixtures, seed);
        py::dict d;
        d["model"] = to_python(model_to_json(a, model));
        d["passed"] = report.passed();
        d["vertex_states_checked"] = report.vertex_states_checked;
        d["mixtures_checked"] = report.mixtures_checked;
        d["violations"] = report.violations;
        return d;
    }, py::arg("alg"), py::arg("parts") = py::none(), py::arg("mixtures") = 100, py::arg("seed") = kDefaultSeed);

    auto div = m.def_submodule("divisible", "Functions from a finite set into [0,1]");
    div.def("cloning_laws", [](std::size_t n, std::uint64_t samples, std::uint64_t seed) {
        auto r = divisible::check_cloning_laws(n, samples, seed);
        return py::make_tuple(r.passed(), r.violations);
    }, py::arg("n"), py::arg("samples") = 1000, py::arg("seed") = kDefaultSeed);
    div.def("lukasiewicz_axioms", [](std::uint64_t samples, std::uint64_t seed) {
        return divisible::check_lukasiewicz_axioms(samples, seed).passed();
    }, py::arg("samples") = 1000, py::arg("seed") = kDefaultSeed);
    div.def("product_bimorphism", [](const py::object &f, const py::object &g) {
        return to_python(to_json(divisible::product_bimorphism(interval_function_from_json(from_python(f)),
                                                               interval_function_from_json(from_python(g)))));
    });
    div.def("indicator_algebra", &divisible::indicator_algebra, py::arg("n"));

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");

    m.attr("DEFAULT_SEED") = kDefaultSeed;
    m.attr("__version__") = std::string(cli::kVersion);
}
