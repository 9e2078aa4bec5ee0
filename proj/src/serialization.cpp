#include "qlogic/serialization.hpp"

#include "qlogic/error.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace qlogic {

namespace {

[[noreturn]] void malformed(const std::string &why) { throw Error(Error::Kind::Malformed, why); }

const std::string &as_string(const Json &j, const char *what) {
    if (!j.is_string()) malformed(std::string(what) + " must be a string");
    return j.get_ref<const std::string &>();
}

}  // namespace

RawTable algebra_from_json(const Json &doc) {
    if (!doc.is_object()) malformed("algebra file must hold a JSON object");
    for (const auto &[key, value] : doc.items()) {
        if (key != "elements" && key != "zero" && key != "unit" && key != "sums") malformed("unknown key \"" + key + "\"");
    }
    for (const char *key : {"elements", "zero", "unit", "sums"}) {
        if (!doc.contains(key)) malformed(std::string("missing key \"") + key + "\"");
    }
    if (!doc["elements"].is_array()) malformed("\"elements\" must be an array");
    if (!doc["sums"].is_array()) malformed("\"sums\" must be an array");
    std::vector<std::string> labels;
    for (const auto &e : doc["elements"]) labels.push_back(as_string(e, "element label"));
    std::vector<std::array<std::string, 3>> triples;
    for (const auto &t : doc["sums"]) {
        if (!t.is_array() || t.size() != 3) malformed("every sum must be an [a, b, c] triple");
        triples.push_back({as_string(t[0], "sum operand"), as_string(t[1], "sum operand"), as_string(t[2], "sum value")});
    }
    return RawTable::from_triples(labels, as_string(doc["zero"], "\"zero\""), as_string(doc["unit"], "\"unit\""),
                                  triples);
}

RawTable parse_algebra(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    return algebra_from_json(doc);
}

EffectAlgebra load_algebra(std::string_view text) { return validate(parse_algebra(text)); }

Json algebra_to_json(const EffectAlgebra &alg) {
    Json sums = Json::array();
    for (ElementId a = 0; a < alg.size(); ++a) {
        for (ElementId b = a; b < alg.size(); ++b) {
            if (ElementId c = alg.sum(a, b); c != kUndefined) sums.push_back({alg.label(a), alg.label(b), alg.label(c)});
        }
    }
    return Json{{"elements", alg.labels()},
                {"zero", alg.label(alg.zero())},
                {"unit", alg.label(alg.unit())},
                {"sums", std::move(sums)}};
}

Json witness_to_json(const EffectAlgebra &alg, const CloningWitness &witness) {
    std::vector<std::array<std::string, 3>> rows;
    for (ElementId p = 0; p < alg.size(); ++p) {
        for (ElementId q = 0; q < alg.size(); ++q) rows.push_back({alg.label(p), alg.label(q), alg.label(witness.at(p, q))});
    }
    std::sort(rows.begin(), rows.end());
    Json out = Json::array();
    for (auto &r : rows) out.push_back(r);
    return Json{{"witness", std::move(out)}};
}

CloningWitness witness_from_json(const EffectAlgebra &alg, const Json &doc) {
    if (!doc.is_object() || doc.size() != 1 || !doc.contains("witness") || !doc["witness"].is_array()) {
        malformed("witness file must be {\"witness\": [...]}");
    }
    const std::size_t n = alg.size();
    CloningWitness w{n, std::vector<ElementId>(n * n, kUndefined)};
    for (const auto &row : doc["witness"]) {
        if (!row.is_array() || row.size() != 3) malformed("every witness row must be a [p, q, c] triple");
        ElementId p = alg.id(as_string(row[0], "p")), q = alg.id(as_string(row[1], "q"));
        if (w.table[p * n + q] != kUndefined) malformed("witness lists (" + alg.label(p) + ", " + alg.label(q) + ") twice");
        w.table[p * n + q] = alg.id(as_string(row[2], "c"));
    }
    if (std::count(w.table.begin(), w.table.end(), kUndefined) != 0) malformed("witness table is incomplete");
    return w;
}

Json state_to_json(const EffectAlgebra &alg, const StateVector &state) {
    Json out = Json::object();
    for (ElementId e = 0; e < alg.size(); ++e) out[alg.label(e)] = to_fraction_string(state[e]);
    return out;
}

Json vertices_to_json(const EffectAlgebra &alg, const StatePolytope &polytope) {
    Json out = Json::array();
    for (const auto &v : polytope.vertices) out.push_back(state_to_json(alg, v));
    return out;
}

Json mv_to_json(const FiniteMv &mv) {
    const auto &L = mv.labels();
    Json plus = Json::array();
    for (std::size_t a = 0; a < mv.size(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < mv.size(); ++b) row.push_back(L[mv.plus(a, b)]);
        plus.push_back(std::move(row));
    }
    Json neg = Json::array();
    for (std::size_t a = 0; a < mv.size(); ++a) neg.push_back(L[mv.neg(a)]);
    return Json{{"elements", L}, {"zero", L[mv.zero()]}, {"one", L[mv.one()]}, {"plus", plus}, {"neg", neg}};
}

Json model_to_json(const EffectAlgebra &alg, const HiddenVariableModel &model) {
    Json parts = Json::array();
    for (ElementId p : model.decomposition.parts) parts.push_back(alg.label(p));
    Json h = Json::object();
    for (ElementId x = 0; x < alg.size(); ++x) {
        Json tuple = Json::array();
        for (ElementId c : model.components(model.h[x])) tuple.push_back(alg.label(c));
        h[alg.label(x)] = std::move(tuple);
    }
    Json components = Json::array();
    for (const auto &f : model.factors) components.push_back(mv_to_json(f));
    return Json{{"decomposition", std::move(parts)}, {"h", std::move(h)}, {"components", std::move(components)}};
}

Json structure_to_json(const EffectAlgebra &alg, const StructureReport &r) {
    auto labels = [&](const std::vector<ElementId> &ids) {
        Json out = Json::array();
        for (auto e : ids) out.push_back(alg.label(e));
        return out;
    };
    Json iota = Json::object();
    for (const auto &[e, n] : r.iota) iota[alg.label(e)] = n ? Json(*n) : Json("infinity");
    Json incompatible = Json::array();
    for (auto [p, q] : r.incompatible_pairs) incompatible.push_back({alg.label(p), alg.label(q)});
    return Json{{"size", alg.size()},
                {"is_effect_algebra", r.is_effect_algebra},
                {"is_orthoalgebra", r.is_orthoalgebra},
                {"is_orthomodular_poset", r.is_orthomodular_poset},
                {"is_boolean", r.is_boolean},
                {"sharp_elements", labels(r.sharp_elements)},
                {"atoms", labels(r.atoms)},
                {"iota", std::move(iota)},
                {"is_atomic", r.is_atomic},
                {"is_archimedean", r.is_archimedean},
                {"incompatible_pairs", std::move(incompatible)}};
}

namespace {

Json fractions(const std::vector<Rational> &values) {
    Json out = Json::array();
    for (const auto &v : values) out.push_back(to_fraction_string(v));
    return out;
}

std::vector<Rational> read_function(const Json &doc, std::size_t &n) {
    if (!doc.is_object() || doc.size() != 2 || !doc.contains("n") || !doc.contains("values")) {
        malformed("function must be {\"n\": N, \"values\": [...]}");
    }
    if (!doc["n"].is_number_unsigned() || !doc["values"].is_array()) malformed("bad \"n\" or \"values\"");
    n = doc["n"].get<std::size_t>();
    std::vector<Rational> values;
    for (const auto &v : doc["values"]) values.push_back(parse_fraction(as_string(v, "function value")));
    return values;
}

}  // namespace

Json to_json(const divisible::IntervalFunction &f) {
    return Json{{"n", f.domain_size()}, {"values", fractions(f.values())}};
}

Json to_json(const divisible::SquareIntervalFunction &f) {
    return Json{{"n", f.side()}, {"values", fractions(f.values())}};
}

divisible::IntervalFunction interval_function_from_json(const Json &doc) {
    std::size_t n = 0;
    auto values = read_function(doc, n);
    if (values.size() != n) malformed("expected " + std::to_string(n) + " values");
    return divisible::IntervalFunction(std::move(values));
}

divisible::SquareIntervalFunction square_function_from_json(const Json &doc) {
    std::size_t n = 0;
    auto values = read_function(doc, n);
    return divisible::SquareIntervalFunction(n, std::move(values));
}

}  // namespace qlogic
