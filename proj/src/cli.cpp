#include "qlogic/cli.hpp"

#include "qlogic/catalog.hpp"
#include "qlogic/cloning.hpp"
#include "qlogic/error.hpp"
#include "qlogic/mv.hpp"
#include "qlogic/random.hpp"
#include "qlogic/serialization.hpp"
#include "qlogic/states.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace qlogic::cli {

std::vector<std::string> split_labels(std::string_view csv) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char ch : csv) {
        if (ch == '{' || ch == '(') ++depth;
        if (ch == '}' || ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    out.push_back(current);
    return out;
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

namespace {

/// Thrown for input problems; maps to exit code 2.
struct InputError {
    std::string message;
};

struct Options {
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::string file;
    bool all = false;
    std::uint64_t budget = SearchConfig{}.node_budget;
    std::optional<std::string> parts;
    std::vector<std::string> catalog_args;
    std::optional<std::string> output;
};

struct Outcome {
    int code = kHolds;
    Json results;
    std::string text;
    bool seeded = false;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError{"cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Loads and validates; axiom violations come back as the second member.
std::pair<std::optional<EffectAlgebra>, std::optional<Error>> load(const std::string &text) {
    try {
        return {load_algebra(text), std::nullopt};
    } catch (const Error &e) {
        if (e.is_axiom_violation()) return {std::nullopt, e};
        throw InputError{e.what()};
    }
}

Json violation_json(const Error &e) {
    return Json{{"kind", std::string(kind_name(e.kind()))}, {"message", e.what()}, {"witnesses", e.witnesses()}};
}

Outcome invalid_algebra(const Error &e) {
    Outcome o;
    o.code = kFails;
    o.results = Json{{"valid", false}, {"violation", violation_json(e)}};
    o.text = "invalid: " + std::string(kind_name(e.kind())) + "\n" + e.what() + "\n";
    return o;
}

std::string join(const Json &labels) {
    std::string s;
    for (const auto &l : labels) s += (s.empty() ? "" : " ") + l.get<std::string>();
    return s.empty() ? "(none)" : s;
}

Outcome cmd_validate(const std::string &text) {
    auto [alg, violation] = load(text);
    if (violation) return invalid_algebra(*violation);
    Outcome o;
    o.results = Json{{"valid", true}, {"size", alg->size()}};
    o.text = "valid effect algebra with " + std::to_string(alg->size()) + " elements\n";
    return o;
}

Outcome cmd_analyze(const std::string &text) {
    auto [alg, violation] = load(text);
    if (violation) return invalid_algebra(*violation);
    Outcome o;
    o.results = structure_to_json(*alg, analyze(*alg));
    const auto &r = o.results;
    std::ostringstream t;
    t << "elements: " << r["size"] << "\n";
    for (const char *flag : {"is_orthoalgebra", "is_orthomodular_poset", "is_boolean", "is_atomic", "is_archimedean"}) {
        t << flag << ": " << (r[flag].get<bool>() ? "yes" : "no") << "\n";
    }
    t << "sharp elements: " << join(r["sharp_elements"]) << "\n";
    t << "atoms: " << join(r["atoms"]) << "\n";
    t << "isotropic index:";
    for (const auto &[label, n] : r["iota"].items()) t << " " << label << "=" << (n.is_string() ? "inf" : n.dump());
    t << "\nincompatible pairs: " << r["incompatible_pairs"].size() << "\n";
    for (const auto &pair : r["incompatible_pairs"]) t << "  " << pair[0].get<std::string>() << " " << pair[1].get<std::string>() << "\n";
    o.text = t.str();
    return o;
}

std::string witness_text(const EffectAlgebra &alg, const CloningWitness &w) {
    std::size_t width = 1;
    for (const auto &l : alg.labels()) width = std::max(width, l.size());
    std::ostringstream t;
    t << std::setw(int(width)) << "c" << " |";
    for (const auto &l : alg.labels()) t << " " << std::setw(int(width)) << l;
    t << "\n";
    for (ElementId p = 0; p < alg.size(); ++p) {
        t << std::setw(int(width)) << alg.label(p) << " |";
        for (ElementId q = 0; q < alg.size(); ++q) t << " " << std::setw(int(width)) << alg.label(w.at(p, q));
        t << "\n";
    }
    return t.str();
}

Json lemma_json(const EffectAlgebra &alg, const LemmaReport &lemmas) {
    Json pairs = Json::array();
    for (auto [p, q] : lemmas.zero_iff_orthogonal_violations) pairs.push_back({alg.label(p), alg.label(q)});
    Json idem = Json::array();
    for (auto p : lemmas.idempotence_violations) idem.push_back(alg.label(p));
    return Json{{"passed", lemmas.passed()}, {"zero_iff_orthogonal_violations", pairs}, {"idempotence_violations", idem}};
}

Outcome cmd_clone_search(const std::string &text, const Options &opt) {
    auto [alg, violation] = load(text);
    if (violation) return invalid_algebra(*violation);
    auto outcome = find_cloning_bimorphism(*alg, {opt.all, opt.budget});
    Outcome o;
    o.code = outcome.status == SearchStatus::WitnessFound ? kHolds
             : outcome.status == SearchStatus::NoWitness  ? kFails
                                                          : kAborted;
    Json witnesses = Json::array(), symmetric = Json::array();
    std::ostringstream t;
    t << "status: " << status_name(outcome.status) << "\n";
    t << "nodes explored: " << outcome.nodes_explored << "\n";
    for (const auto &w : outcome.witnesses) {
        witnesses.push_back(witness_to_json(*alg, w)["witness"]);
        symmetric.push_back(w.is_symmetric());
    }
    o.results = Json{{"status", std::string(status_name(outcome.status))},
                     {"nodes_explored", outcome.nodes_explored},
                     {"wall_time_ms", std::chrono::duration<double, std::milli>(outcome.wall_time).count()},
                     {"witness_count", outcome.witnesses.size()},
                     {"witnesses", std::move(witnesses)},
                     {"symmetric", std::move(symmetric)}};
    if (!outcome.witnesses.empty()) {
        bool meet_table = false;
        try {
            meet_table = outcome.witnesses.front() == meet_witness(*alg);
        } catch (const Error &) {
        }
        o.results["first_is_meet_table"] = meet_table;
        t << "witnesses: " << outcome.witnesses.size() << (meet_table ? " (first equals the meet table)" : "") << "\n";
        t << "first witness symmetric: " << (outcome.witnesses.front().is_symmetric() ? "yes" : "no") << "\n";
        t << witness_text(*alg, outcome.witnesses.front());
        if (is_orthoalgebra(*alg).holds) {
            auto lemmas = check_witness_lemmas(*alg, outcome.witnesses.front());
            o.results["lemmas"] = lemma_json(*alg, lemmas);
            t << "c(p,q)=0 iff p orthogonal to q, c(p,p)=p: " << (lemmas.passed() ? "hold" : "FAIL") << "\n";
        }
    }
    o.text = t.str();
    return o;
}

Outcome cmd_states(const std::string &text) {
    auto [alg, violation] = load(text);
    if (violation) return invalid_algebra(*violation);
    Outcome o;
    try {
        auto poly = enumerate_vertex_states(*alg);
        auto sep = is_separating(*alg, poly);
        Json merged = Json::array();
        for (auto [p, q] : sep.merged) merged.push_back({alg->label(p), alg->label(q)});
        o.results = Json{{"empty", false},
                         {"vertex_count", poly.vertices.size()},
                         {"dimension", poly.dimension},
                         {"separating", sep.separating},
                         {"merged_pairs", merged},
                         {"vertices", vertices_to_json(*alg, poly)}};
        std::ostringstream t;
        t << "vertex states: " << poly.vertices.size() << "\ndimension: " << poly.dimension
          << "\nseparating: " << (sep.separating ? "yes" : "no") << "\n";
        for (const auto &v : o.results["vertices"]) {
            t << " ";
            for (const auto &[label, value] : v.items()) t << " " << label << "=" << value.get<std::string>();
            t << "\n";
        }
        o.text = t.str();
    } catch (const Error &e) {
        if (e.kind() != Error::Kind::EmptyStateSpace) throw;
        o.code = kFails;
        o.results = Json{{"empty", true}, {"vertex_count", 0}, {"message", e.what()}};
        o.text = "no states: " + std::string(e.what()) + "\n";
    }
    return o;
}

Outcome hypothesis_unmet(const std::string &why, Json extra = Json::object()) {
    Outcome o;
    o.code = kFails;
    o.seeded = true;
    o.results = Json{{"hypotheses_met", false}, {"reason", why}};
    o.results.update(extra);
    o.text = "hypothesis unmet: " + why + "\n";
    return o;
}

constexpr const char *kLinearIdealReading = "[0,p] is totally ordered and closed under the partial sum";

Outcome cmd_hidden(const std::string &text, const Options &opt) {
    auto [alg, violation] = load(text);
    if (violation) return invalid_algebra(*violation);

    ChainDecomposition decomposition;
    if (opt.parts) {
        for (const auto &label : split_labels(*opt.parts)) {
            auto id = alg->find(label);
            if (!id) throw InputError{"unknown element \"" + label + "\" in --parts"};
            decomposition.parts.push_back(*id);
        }
        if (auto why = check_chain_decomposition(*alg, decomposition); !why.empty()) return hypothesis_unmet(why);
    } else {
        auto found = find_chain_decomposition(*alg, 1);
        if (found.empty()) return hypothesis_unmet("no decomposition of 1 into totally ordered ideals");
        decomposition = found.front();
    }
    Json parts = Json::array();
    for (auto p : decomposition.parts) parts.push_back(alg->label(p));

    auto search = find_cloning_bimorphism(*alg, {false, opt.budget});
    if (search.status == SearchStatus::Aborted) {
        Outcome o = hypothesis_unmet("cloning search aborted after " + std::to_string(search.nodes_explored) + " nodes");
        o.code = kAborted;
        return o;
    }
    if (search.status == SearchStatus::NoWitness) {
        return hypothesis_unmet("the algebra has no cloning bimorphism", {{"decomposition", parts}});
    }

    std::optional<HiddenVariableModel> built;
    try {
        built = hidden_variable_construct(*alg, search.witnesses.front(), decomposition);
    } catch (const Error &e) {
        if (e.kind() != Error::Kind::ConstructionFailed) throw;
        return hypothesis_unmet(e.what(), {{"decomposition", parts}});
    }
    const auto &model = *built;

    Outcome o;
    o.seeded = true;
    HiddenVariableReport report;
    try {
        report = verify_hidden_variable(*alg, model, enumerate_vertex_states(*alg), 100, opt.seed);
    } catch (const Error &e) {
        if (e.kind() != Error::Kind::EmptyStateSpace) throw;
        report.seed = opt.seed;
        report.violations.push_back("the algebra has no states to lift");
    }
    o.code = report.passed() ? kHolds : kFails;
    o.results = Json{{"hypotheses_met", true},
                     {"decomposition", parts},
                     {"linear_ideal", kLinearIdealReading},
                     {"model", model_to_json(*alg, model)},
                     {"verification",
                      {{"passed", report.passed()},
                       {"vertex_states_checked", report.vertex_states_checked},
                       {"mixtures_checked", report.mixtures_checked},
                       {"violations", report.violations}}}};
    std::ostringstream t;
    t << "decomposition: " << join(parts) << "\n";
    t << "MV target: " << model.mv.size() << " elements, product of " << model.factors.size() << " chains\n";
    t << "h:";
    for (const auto &[label, tuple] : o.results["model"]["h"].items()) {
        t << " " << label << "->(" << join(tuple) << ")";
    }
    t << "\nlifted states: " << report.vertex_states_checked << " vertices, " << report.mixtures_checked
      << " mixtures (seed " << opt.seed << ")\n";
    t << (report.passed() ? "w_bar(h(q)) = w(q) holds for every checked state\n" : "violations:\n");
    for (const auto &v : report.violations) t << "  " << v << "\n";
    o.text = t.str();
    return o;
}

Outcome cmd_catalog(const Options &opt, std::ostream &out, std::string &digest_source) {
    std::string expression = opt.catalog_args.front();
    if (opt.catalog_args.size() > 1) {
        expression += "(";
        for (std::size_t i = 1; i < opt.catalog_args.size(); ++i) expression += (i > 1 ? "," : "") + opt.catalog_args[i];
        expression += ")";
    }
    std::optional<EffectAlgebra> alg;
    catalog::CatalogSpec spec;
    try {
        spec = catalog::parse_spec(expression);
        alg = catalog::build(spec);
    } catch (const Error &e) {
        throw InputError{e.what()};
    }
    digest_source = spec.to_string();
    std::string document = algebra_to_json(*alg).dump(2) + "\n";
    Outcome o;
    if (!opt.output) {
        out << document;
        o.code = -1;  // the algebra itself is the output
        return o;
    }
    std::ofstream file(*opt.output, std::ios::binary);
    if (!(file << document)) throw InputError{"cannot write " + *opt.output};
    o.results = Json{{"catalog", spec.to_string()}, {"size", alg->size()}, {"path", *opt.output}};
    o.text = "wrote " + spec.to_string() + " (" + std::to_string(alg->size()) + " elements) to " + *opt.output + "\n";
    return o;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Finite effect algebras: validation, structure, cloning search, states, hidden variables",
                 std::string(kToolName)};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "Seed for sampled checks");

    auto file_command = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.file, "Algebra JSON file")->required();
        return sub;
    };
    file_command("validate", "Check the effect algebra axioms");
    file_command("analyze", "Report order structure, sharp elements, atoms and compatibility");
    auto *clone = file_command("clone-search", "Search for a cloning bimorphism");
    clone->add_flag("--all", opt.all, "Enumerate every witness");
    clone->add_option("--budget", opt.budget, "Node budget");
    file_command("states", "Enumerate the vertex states");
    auto *hidden = file_command("hidden", "Build and verify the hidden-variable model");
    hidden->add_option("--parts", opt.parts, "Decomposition of 1, comma separated labels");
    hidden->add_option("--budget", opt.budget, "Node budget of the internal cloning search");
    auto *cat = app.add_subcommand("catalog", "Write a catalog algebra as JSON");
    cat->add_option("spec", opt.catalog_args, "Name and parameters, or an expression like product(chain(2),chain(2))")
        ->required();
    cat->add_option("-o,--output", opt.output, "Output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kHolds : kInvalidInput;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    Outcome outcome;
    std::string digest_source;
    try {
        if (command == "catalog") {
            outcome = cmd_catalog(opt, out, digest_source);
            if (outcome.code == -1) return kHolds;
        } else {
            digest_source = read_file(opt.file);
            if (command == "validate") outcome = cmd_validate(digest_source);
            if (command == "analyze") outcome = cmd_analyze(digest_source);
            if (command == "clone-search") outcome = cmd_clone_search(digest_source, opt);
            if (command == "states") outcome = cmd_states(digest_source);
            if (command == "hidden") outcome = cmd_hidden(digest_source, opt);
        }
    } catch (const InputError &e) {
        err << "error: " << e.message << "\n";
        return kInvalidInput;
    } catch (const Error &e) {
        if (e.kind() != Error::Kind::BoundExceeded) throw;
        err << "aborted: " << e.what() << "\n";
        return kAborted;
    }

    if (opt.format == "json") {
        Json report{{"tool", std::string(kToolName)},
                    {"version", std::string(kVersion)},
                    {"command", command},
                    {"input_digest", sha256_hex(digest_source)}};
        if (outcome.seeded) report["seed"] = opt.seed;
        report["exit_code"] = outcome.code;
        report["results"] = outcome.results;
        out << report.dump(2) << "\n";
    } else {
        out << outcome.text;
    }
    return outcome.code;
}

}  // namespace qlogic::cli
