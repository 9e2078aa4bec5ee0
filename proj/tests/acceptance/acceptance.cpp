// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include "qlogic/catalog.hpp"
#include "qlogic/cloning.hpp"
#include "qlogic/divisible.hpp"
#include "qlogic/mv.hpp"
#include "qlogic/states.hpp"

#include "fuzz.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qlogic;
namespace cat = qlogic::catalog;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream note;

    void fail(const std::string &why) {
        if (pass) note << why;
        pass = false;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Horizontal sums of two or more Boolean blocks with at most 16 elements.
std::vector<std::string> boolean_horizontal_sums() {
    std::vector<std::string> out;
    // number of 4-, 8- and 16-element blocks; each adds 2, 6, 14 inner elements
    for (int n4 = 0; n4 <= 7; ++n4) {
        for (int n8 = 0; n8 <= 2; ++n8) {
            for (int n16 = 0; n16 <= 1; ++n16) {
                int blocks = n4 + n8 + n16;
                if (blocks < 2 || 2 + 2 * n4 + 6 * n8 + 14 * n16 > 16) continue;
                std::string spec = "horizontal_sum(";
                auto add = [&](int count, const char *block) {
                    for (int i = 0; i < count; ++i) spec += std::string(spec.back() == '(' ? "" : ",") + block;
                };
                add(n4, "boolean_powerset(2)");
                add(n8, "boolean_powerset(3)");
                add(n16, "boolean_powerset(4)");
                out.push_back(spec + ")");
            }
        }
    }
    return out;
}

std::vector<std::string> orthoalgebra_catalog() {
    std::vector<std::string> specs;
    for (int k = 1; k <= 4; ++k) specs.push_back("boolean_powerset(" + std::to_string(k) + ")");
    for (int n = 1; n <= 4; ++n) specs.push_back("mo(" + std::to_string(n) + ")");
    specs.push_back("wright_triangle");
    for (auto &s : boolean_horizontal_sums()) specs.push_back(s);
    return specs;
}

std::vector<std::string> full_catalog() {
    std::vector<std::string> specs;
    for (int k = 1; k <= 5; ++k) specs.push_back("boolean_powerset(" + std::to_string(k) + ")");
    for (int d = 1; d <= 12; ++d) specs.push_back("chain(" + std::to_string(d) + ")");
    for (int n = 1; n <= 6; ++n) specs.push_back("mo(" + std::to_string(n) + ")");
    specs.push_back("wright_triangle");
    specs.push_back("product(chain(2),chain(2))");
    for (auto &s : boolean_horizontal_sums()) specs.push_back(s);
    return specs;
}

/// Witnesses collected by criterion 1 for the lemma check of criterion 3.
std::vector<std::pair<std::string, CloningWitness>> g_witnesses;

Verdict criterion_1() {
    Verdict v;
    auto start = Clock::now();
    int instances = 0, booleans = 0;
    for (const auto &spec : orthoalgebra_catalog()) {
        auto alg = cat::build(spec);
        auto outcome = find_cloning_bimorphism(alg);
        if (outcome.status == SearchStatus::Aborted) {
            v.fail(spec + ": search aborted");
            continue;
        }
        bool found = outcome.status == SearchStatus::WitnessFound;
        bool boolean = is_boolean(alg);
        if (found != boolean) v.fail(spec + ": witness " + (found ? "found" : "absent") + " but is_boolean=" + (boolean ? "true" : "false"));
        for (const auto &w : outcome.witnesses) {
            if (!verify_witness(alg, w).ok) v.fail(spec + ": returned witness does not verify");
            g_witnesses.emplace_back(spec, w);
        }
        ++instances;
        booleans += boolean;
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 300) v.fail("took " + std::to_string(elapsed) + " s");
    if (v.pass) v.note << instances << " orthoalgebras, " << booleans << " Boolean, witness iff Boolean on all, " << elapsed << " s";
    return v;
}

Verdict criterion_2() {
    Verdict v;
    std::ostringstream times;
    for (const char *spec : {"chain(2)", "chain(3)", "chain(4)", "chain(5)", "chain(6)", "product(chain(2),chain(2))"}) {
        auto start = Clock::now();
        auto alg = cat::build(spec);
        if (!is_atomic(alg)) v.fail(std::string(spec) + " is not atomic");
        if (!is_archimedean(alg)) v.fail(std::string(spec) + " is not Archimedean");
        if (is_boolean(alg)) v.fail(std::string(spec) + " is Boolean");
        auto outcome = find_cloning_bimorphism(alg);
        if (outcome.status != SearchStatus::NoWitness) v.fail(std::string(spec) + ": " + std::string(status_name(outcome.status)));
        double elapsed = seconds_since(start);
        if (elapsed >= 60) v.fail(std::string(spec) + " took " + std::to_string(elapsed) + " s");
        times << " " << spec << "=" << elapsed << "s";
    }
    if (v.pass) v.note << "atomic, Archimedean, non-Boolean, exhausted without witness:" << times.str();
    return v;
}

Verdict criterion_3() {
    Verdict v;
    std::size_t checked = 0;
    auto check = [&](const std::string &spec, const CloningWitness &w) {
        auto alg = cat::build(spec);
        if (!is_orthoalgebra(alg).holds) return;
        auto lemmas = check_witness_lemmas(alg, w);
        if (!lemmas.passed()) v.fail(spec + ": " + std::to_string(lemmas.zero_iff_orthogonal_violations.size()) +
                                     " zero/orthogonality and " + std::to_string(lemmas.idempotence_violations.size()) +
                                     " idempotence violations");
        ++checked;
    };
    for (const auto &[spec, w] : g_witnesses) check(spec, w);
    for (int k = 1; k <= 3; ++k) {
        std::string spec = "boolean_powerset(" + std::to_string(k) + ")";
        for (const auto &w : find_cloning_bimorphism(cat::build(spec), {true, SearchConfig{}.node_budget}).witnesses) check(spec, w);
    }
    if (checked == 0) v.fail("no witnesses to check");
    if (v.pass) v.note << checked << " witnesses, c(p,q)=0 iff p orthogonal to q and c(p,p)=p with zero violations";
    return v;
}

Verdict criterion_4() {
    Verdict v;
    for (int k = 1; k <= 3; ++k) {
        auto alg = cat::boolean_powerset(k);
        auto outcome = find_cloning_bimorphism(alg, {true, SearchConfig{}.node_budget});
        std::string name = "boolean_powerset(" + std::to_string(k) + ")";
        if (outcome.status != SearchStatus::WitnessFound) v.fail(name + ": " + std::string(status_name(outcome.status)));
        if (outcome.witnesses.size() != 1) v.fail(name + ": " + std::to_string(outcome.witnesses.size()) + " witnesses");
        else if (outcome.witnesses.front() != meet_witness(alg)) v.fail(name + ": witness differs from the meet table");
    }
    if (v.pass) v.note << "exactly one witness on boolean_powerset(1..3), equal to the meet table";
    return v;
}

Verdict criterion_5() {
    Verdict v;
    std::size_t vertices = 0, mixtures = 0;
    for (int k = 2; k <= 3; ++k) {
        auto alg = cat::boolean_powerset(k);
        std::string name = "boolean_powerset(" + std::to_string(k) + ")";
        auto search = find_cloning_bimorphism(alg);
        if (search.status != SearchStatus::WitnessFound) {
            v.fail(name + ": no witness");
            continue;
        }
        std::optional<HiddenVariableModel> model;
        try {
            model = hidden_variable_construct(alg, search.witnesses.front(), {atoms(alg)});
        } catch (const std::exception &e) {
            v.fail(name + ": " + e.what());
            continue;
        }
        std::vector<bool> hit(model->mv.size(), false);
        for (ElementId x = 0; x < alg.size(); ++x) {
            if (hit[model->h[x]]) v.fail(name + ": h not injective");
            hit[model->h[x]] = true;
            for (ElementId y = 0; y < alg.size(); ++y) {
                ElementId s = alg.sum(x, y);
                if (s != kUndefined && model->h[s] != model->mv.plus(model->h[x], model->h[y])) v.fail(name + ": h not additive");
            }
        }
        auto axioms = check_mv_axioms(model->mv);
        if (!axioms.exhaustive || !axioms.passed()) v.fail(name + ": MV axioms fail");
        auto report = verify_hidden_variable(alg, *model, enumerate_vertex_states(alg), 100, kDefaultSeed);
        if (!report.passed()) v.fail(name + ": " + report.violations.front());
        if (report.mixtures_checked != 100) v.fail(name + ": only " + std::to_string(report.mixtures_checked) + " mixtures");
        vertices += report.vertex_states_checked;
        mixtures += report.mixtures_checked;
    }
    if (v.pass) v.note << "h injective and additive, MV axioms exhaustive, lifted states exact on " << vertices
                       << " vertex states and " << mixtures << " mixtures (seed " << kDefaultSeed << ")";
    return v;
}

Verdict criterion_6() {
    Verdict v;
    const std::uint64_t samples = 1000;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto laws = divisible::check_cloning_laws(n, samples, kDefaultSeed);
        if (!laws.passed()) v.fail("N=" + std::to_string(n) + ": " + laws.violations.front());
        auto hidden = divisible::check_hidden_variable_instance(n, samples, kDefaultSeed);
        if (!hidden.passed()) v.fail("N=" + std::to_string(n) + ": " + hidden.violations.front());
        auto sharp = divisible::sharp_elements_sample(n);
        if (!sharp.passed() || !sharp.isomorphic_to_powerset.value_or(false)) {
            v.fail("N=" + std::to_string(n) + ": indicator functions are not the powerset");
        }
    }
    auto mv = divisible::check_lukasiewicz_axioms(samples, kDefaultSeed);
    if (!mv.passed()) v.fail("Lukasiewicz axiom " + std::to_string(mv.examples.front().axiom) + " fails");
    if (v.pass) v.note << samples << " samples per N=1..4 for diagonal cloning, additivity and biadditivity; "
                       << mv.triples_checked << " MV triples; indicators isomorphic to boolean_powerset(N) for N<=4";
    return v;
}

Verdict criterion_7() {
    Verdict v;
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"boolean_powerset(2)", 2}, {"boolean_powerset(3)", 3}, {"mo(2)", 4}, {"chain(2)", 1}};
    for (const auto &[spec, count] : expected) {
        auto got = enumerate_vertex_states(cat::build(spec)).vertices.size();
        if (got != count) v.fail(spec + ": " + std::to_string(got) + " vertices, expected " + std::to_string(count));
    }
    std::size_t algebras = 0;
    for (const auto &spec : full_catalog()) {
        auto alg = cat::build(spec);
        auto report = is_separating(alg, enumerate_vertex_states(alg));
        if (!report.separating) v.fail(spec + " is not separated by its states");
        ++algebras;
    }
    if (v.pass) v.note << "vertex counts 2, 3, 4, 1 as expected; " << algebras << " catalog algebras separating";
    return v;
}

Verdict criterion_8() {
    Verdict v;
    auto check = [&](const std::string &name, const EffectAlgebra &alg) {
        if (!is_cancellative(alg)) v.fail(name + ": not cancellative");
        for (ElementId p = 0; p < alg.size(); ++p) {
            if (alg.supplement(alg.supplement(p)) != p) v.fail(name + ": supplement is not an involution");
        }
        if (is_orthoalgebra(alg).holds != (sharp_elements(alg).size() == alg.size())) {
            v.fail(name + ": sharpness and orthoalgebra disagree");
        }
        for (const auto &state : enumerate_vertex_states(alg).vertices) {
            for (ElementId p = 0; p < alg.size(); ++p) {
                for (ElementId q = 0; q < alg.size(); ++q) {
                    if (alg.leq(p, q) && state[p] > state[q]) v.fail(name + ": a state is not monotone");
                }
            }
        }
    };
    std::size_t catalog_count = 0;
    for (const auto &spec : full_catalog()) {
        check(spec, cat::build(spec));
        ++catalog_count;
    }
    std::mt19937_64 rng(kDefaultSeed);
    for (int i = 0; i < 200; ++i) {
        auto sample = fuzz::random_algebra(rng, 10);
        check(sample.recipe + " (relabelled)", sample.algebra);
    }
    if (v.pass) v.note << catalog_count << " catalog algebras and 200 fuzz tables of <=10 elements (seed " << kDefaultSeed << ")";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria{
        {"cloning witness exists iff Boolean on the orthoalgebra catalog", criterion_1},
        {"atomic Archimedean chains and chain(2)^2 have no witness", criterion_2},
        {"witness lemmas on orthoalgebras", criterion_3},
        {"unique Boolean witness equals the meet table", criterion_4},
        {"hidden-variable construction on boolean_powerset(2..3)", criterion_5},
        {"L_N diagonal cloning, product bimorphism, Lukasiewicz MV, sharp indicators", criterion_6},
        {"vertex state counts and separation", criterion_7},
        {"structural sanity on catalog and fuzz tables", criterion_8},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v.fail(std::string("exception: ") + e.what());
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " | "
                  << v.note.str() << std::endl;
        failures += !v.pass;
    }
    std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
