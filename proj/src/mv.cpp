#include "qlogic/mv.hpp"

#include "qlogic/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace qlogic {

bool MvAxiomReport::passed() const {
    return std::all_of(violations_per_axiom.begin(), violations_per_axiom.end(), [](auto v) { return v == 0; });
}

FiniteMv::FiniteMv(std::vector<std::string> labels, std::size_t zero, std::size_t one, std::vector<std::size_t> plus,
                   std::vector<std::size_t> neg)
    : labels_(std::move(labels)), zero_(zero), one_(one), plus_(std::move(plus)), neg_(std::move(neg)) {
    const std::size_t n = labels_.size();
    bool ok = n > 0 && zero_ < n && one_ < n && plus_.size() == n * n && neg_.size() == n;
    ok = ok && std::all_of(plus_.begin(), plus_.end(), [n](auto v) { return v < n; }) &&
         std::all_of(neg_.begin(), neg_.end(), [n](auto v) { return v < n; });
    if (!ok) throw Error(Error::Kind::Malformed, "MV tables do not match the carrier");
}

MvAxiomReport check_mv_axioms(const FiniteMv &mv) {
    MvOperations<std::size_t> ops{
        [&](std::size_t a, std::size_t b) { return mv.plus(a, b); },
        [&](std::size_t a) { return mv.neg(a); },
        mv.zero(),
        mv.one(),
        [&](std::size_t a) { return mv.labels()[a]; },
    };
    MvAxiomReport report;
    report.exhaustive = true;
    for (std::size_t a = 0; a < mv.size(); ++a) {
        for (std::size_t b = 0; b < mv.size(); ++b) {
            for (std::size_t c = 0; c < mv.size(); ++c) detail::check_mv_triple(ops, a, b, c, report);
        }
    }
    return report;
}

FiniteMv boolean_mv() {
    return FiniteMv({"0", "1"}, 0, 1, {0, 1, 1, 1}, {1, 0});
}

FiniteMv lukasiewicz_chain_mv(int n) {
    if (n < 1 || n > 63) throw Error(Error::Kind::BoundExceeded, "chain length must lie in [1, 63]");
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    std::vector<std::string> labels;
    std::vector<std::size_t> plus(size * size), neg(size);
    for (std::size_t i = 0; i < size; ++i) {
        labels.push_back(i == 0 ? "0" : i + 1 == size ? "1" : std::to_string(i) + "/" + std::to_string(n));
        neg[i] = size - 1 - i;
        for (std::size_t j = 0; j < size; ++j) plus[i * size + j] = std::min(i + j, size - 1);
    }
    return FiniteMv(std::move(labels), 0, size - 1, std::move(plus), std::move(neg));
}

FiniteMv product_mv(const std::vector<FiniteMv> &parts) {
    if (parts.empty()) throw Error(Error::Kind::Malformed, "product of no MV-algebras");
    std::size_t total = 1;
    for (const auto &p : parts) {
        total *= p.size();
        if (total > 4096) throw Error(Error::Kind::BoundExceeded, "MV product above 4096 elements");
    }
    auto decode = [&](std::size_t e) {
        std::vector<std::size_t> d(parts.size());
        for (std::size_t i = parts.size(); i-- > 0;) {
            d[i] = e % parts[i].size();
            e /= parts[i].size();
        }
        return d;
    };
    auto encode = [&](const std::vector<std::size_t> &d) {
        std::size_t e = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) e = e * parts[i].size() + d[i];
        return e;
    };
    std::vector<std::string> labels(total);
    std::vector<std::size_t> plus(total * total), neg(total);
    std::vector<std::size_t> zero, one;
    for (const auto &p : parts) {
        zero.push_back(p.zero());
        one.push_back(p.one());
    }
    for (std::size_t a = 0; a < total; ++a) {
        auto da = decode(a);
        std::string text = "(";
        std::vector<std::size_t> dn(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) text += ",";
            text += parts[i].labels()[da[i]];
            dn[i] = parts[i].neg(da[i]);
        }
        labels[a] = text + ")";
        neg[a] = encode(dn);
        for (std::size_t b = 0; b < total; ++b) {
            auto db = decode(b);
            std::vector<std::size_t> ds(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) ds[i] = parts[i].plus(da[i], db[i]);
            plus[a * total + b] = encode(ds);
        }
    }
    return FiniteMv(std::move(labels), encode(zero), encode(one), std::move(plus), std::move(neg));
}

FiniteMv mv_of_boolean(const EffectAlgebra &alg) {
    if (!is_boolean(alg)) throw Error(Error::Kind::NotBoolean, "MV structure by joins needs a Boolean algebra");
    const std::size_t n = alg.size();
    std::vector<std::size_t> plus(n * n), neg(n);
    for (ElementId a = 0; a < n; ++a) {
        neg[a] = alg.supplement(a);
        for (ElementId b = 0; b < n; ++b) plus[a * n + b] = *join(alg, a, b);
    }
    return FiniteMv(alg.labels(), alg.zero(), alg.unit(), std::move(plus), std::move(neg));
}

EffectAlgebra effect_algebra_of_mv(const FiniteMv &mv) {
    RawTable raw;
    raw.labels = mv.labels();
    raw.zero = mv.zero();
    raw.unit = mv.one();
    raw.sums.assign(mv.size() * mv.size(), kUndefined);
    for (std::size_t a = 0; a < mv.size(); ++a) {
        for (std::size_t b = 0; b < mv.size(); ++b) {
            if (mv.leq(a, mv.neg(b))) raw.set(a, b, mv.plus(a, b));
        }
    }
    return validate(raw);
}

bool is_linear_ideal(const EffectAlgebra &alg, ElementId p) {
    const ElementSet below = alg.down_set(p);
    for (ElementId x : members(below)) {
        for (ElementId y : members(below)) {
            if (!alg.leq(x, y) && !alg.leq(y, x)) return false;
            ElementId s = alg.sum(x, y);
            if (s != kUndefined && !contains(below, s)) return false;
        }
    }
    return true;
}

std::string check_chain_decomposition(const EffectAlgebra &alg, const ChainDecomposition &d) {
    if (d.parts.empty()) return "decomposition has no parts";
    ElementId total = alg.zero();
    for (ElementId p : d.parts) {
        if (p >= alg.size()) return "part outside the carrier";
        if (p == alg.zero()) return "part " + alg.label(p) + " is zero";
        if (!is_linear_ideal(alg, p)) return "[0, " + alg.label(p) + "] is not a totally ordered ideal";
        total = alg.sum(total, p);
        if (total == kUndefined) return "parts are not jointly orthogonal";
    }
    if (total != alg.unit()) return "parts do not sum to 1";
    return {};
}

std::vector<ChainDecomposition> find_chain_decomposition(const EffectAlgebra &alg, std::size_t limit) {
    std::vector<ElementId> candidates;
    for (ElementId p = 0; p < alg.size(); ++p) {
        if (p != alg.zero() && is_linear_ideal(alg, p)) candidates.push_back(p);
    }
    std::vector<ChainDecomposition> out;
    std::vector<ElementId> parts;
    auto extend = [&](auto &&self, std::size_t start, ElementId total) -> void {
        if (out.size() >= limit) return;
        if (total == alg.unit()) {
            out.push_back({parts});
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            ElementId next = alg.sum(total, candidates[i]);
            if (next == kUndefined) continue;
            parts.push_back(candidates[i]);
            self(self, i + 1, next);
            parts.pop_back();
        }
    };
    extend(extend, 0, alg.zero());
    return out;
}

std::vector<ElementId> HiddenVariableModel::components(std::size_t m) const {
    std::vector<ElementId> out(chains.size());
    for (std::size_t i = chains.size(); i-- > 0;) {
        out[i] = chains[i][m % chains[i].size()];
        m /= chains[i].size();
    }
    return out;
}

std::size_t HiddenVariableModel::encode(const std::vector<ElementId> &values) const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        auto it = std::find(chains[i].begin(), chains[i].end(), values[i]);
        if (it == chains[i].end()) return static_cast<std::size_t>(-1);
        m = m * chains[i].size() + static_cast<std::size_t>(it - chains[i].begin());
    }
    return m;
}

HiddenVariableModel hidden_variable_construct(const EffectAlgebra &alg, const CloningWitness &witness,
                                              const ChainDecomposition &decomposition) {
    auto fail = [](const std::string &why) -> void { throw Error(Error::Kind::ConstructionFailed, why); };
    if (auto check = verify_witness(alg, witness); !check.ok) fail("witness is not a cloning bimorphism: " + check.violation);
    if (auto why = check_chain_decomposition(alg, decomposition); !why.empty()) fail(why);
    for (ElementId p : decomposition.parts) {
        if (!is_sharp(alg, p)) fail("part " + alg.label(p) + " is not sharp");
    }

    std::vector<std::vector<ElementId>> chains;
    std::vector<FiniteMv> factors;
    std::size_t total = 1;
    for (ElementId p : decomposition.parts) {
        auto chain = members(alg.down_set(p));
        std::sort(chain.begin(), chain.end(), [&](ElementId x, ElementId y) {
            return std::popcount(alg.down_set(x)) < std::popcount(alg.down_set(y));
        });
        const std::size_t k = chain.size();
        auto pos = [&](ElementId e) { return static_cast<std::size_t>(std::find(chain.begin(), chain.end(), e) - chain.begin()); };
        std::vector<std::string> labels;
        std::vector<std::size_t> plus(k * k), neg(k);
        for (std::size_t i = 0; i < k; ++i) {
            labels.push_back(alg.label(chain[i]));
            // Truncated sum: x+y where defined (it stays in the ideal), else p.
            neg[i] = pos(alg.difference(p, chain[i]));
            for (std::size_t j = 0; j < k; ++j) {
                ElementId s = alg.sum(chain[i], chain[j]);
                plus[i * k + j] = s == kUndefined ? k - 1 : pos(s);
            }
        }
        factors.emplace_back(std::move(labels), 0, k - 1, std::move(plus), std::move(neg));
        chains.push_back(std::move(chain));
        total *= k;
        if (total > alg.size()) fail("product of the chains is larger than the algebra, h cannot be a bijection");
    }
    if (total != alg.size()) fail("product of the chains is smaller than the algebra, h cannot be a bijection");

    HiddenVariableModel model{product_mv(factors), decomposition, std::move(chains), {}, factors};
    if (!check_mv_axioms(model.mv).passed()) fail("product of truncated chains is not an MV-algebra");

    for (ElementId x = 0; x < alg.size(); ++x) {
        std::vector<ElementId> image;
        for (ElementId p : decomposition.parts) image.push_back(witness.at(p, x));
        std::size_t m = model.encode(image);
        if (m == static_cast<std::size_t>(-1)) fail("c(p_n, " + alg.label(x) + ") leaves [0, p_n]");
        model.h.push_back(m);
    }
    std::vector<bool> hit(model.mv.size(), false);
    for (ElementId x = 0; x < alg.size(); ++x) {
        if (hit[model.h[x]]) fail("h is not injective at " + alg.label(x));
        hit[model.h[x]] = true;
    }
    if (model.h[alg.zero()] != model.mv.zero()) fail("h(0) is not the MV zero");
    if (model.h[alg.unit()] != model.mv.one()) fail("h(1) is not the MV one");
    for (ElementId x = 0; x < alg.size(); ++x) {
        for (ElementId y = 0; y < alg.size(); ++y) {
            ElementId s = alg.sum(x, y);
            if (s != kUndefined && model.h[s] != model.mv.plus(model.h[x], model.h[y])) {
                fail("h(" + alg.label(x) + "+" + alg.label(y) + ") != h(x)+h(y)");
            }
            bool below = alg.leq(x, alg.supplement(y));
            if (below != model.mv.leq(model.h[x], model.mv.neg(model.h[y]))) {
                fail("order reflection fails at " + alg.label(x) + ", " + alg.label(y));
            }
        }
    }
    return model;
}

std::vector<Rational> lift_state(const EffectAlgebra &alg, const HiddenVariableModel &model, const StateVector &state) {
    std::vector<Rational> lifted(model.mv.size());
    for (std::size_t m = 0; m < model.mv.size(); ++m) {
        ElementId total = alg.zero();
        for (ElementId x : model.components(m)) {
            total = alg.sum(total, x);
            if (total == kUndefined) {
                throw Error(Error::Kind::ConstructionFailed, "components of " + model.mv.labels()[m] + " do not sum");
            }
        }
        lifted[m] = state[total];
    }
    return lifted;
}

std::vector<std::string> check_lifted_state(const EffectAlgebra &alg, const HiddenVariableModel &model,
                                            const StateVector &state, const std::vector<Rational> &lifted) {
    std::vector<std::string> out;
    const auto &mv = model.mv;
    const auto &L = mv.labels();
    if (lifted.size() != mv.size()) return {"lifted state has the wrong length"};
    if (lifted[mv.one()] != 1) out.push_back("lifted(1) = " + to_fraction_string(lifted[mv.one()]));
    for (std::size_t a = 0; a < mv.size(); ++a) {
        if (lifted[a] < 0) out.push_back("lifted(" + L[a] + ") < 0");
        for (std::size_t b = a; b < mv.size(); ++b) {
            if (!mv.leq(a, mv.neg(b))) continue;
            std::size_t s = mv.plus(a, b);
            if (lifted[a] + lifted[b] != lifted[s]) out.push_back("lifted not additive at " + L[a] + ", " + L[b]);
        }
    }
    for (ElementId q = 0; q < alg.size(); ++q) {
        if (lifted[model.h[q]] != state[q]) {
            out.push_back("lifted(h(" + alg.label(q) + ")) = " + to_fraction_string(lifted[model.h[q]]) +
                          " but state(" + alg.label(q) + ") = " + to_fraction_string(state[q]));
        }
    }
    return out;
}

StateVector random_mixture(const StatePolytope &states, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> weight(1, 1000);
    const std::size_t n = states.vertices.front().values.size();
    std::vector<Rational> w;
    Rational total = 0;
    for (std::size_t i = 0; i < states.vertices.size(); ++i) {
        w.emplace_back(weight(rng));
        total += w.back();
    }
    StateVector mix{std::vector<Rational>(n)};
    for (std::size_t i = 0; i < states.vertices.size(); ++i) {
        Rational coeff = w[i] / total;
        for (std::size_t e = 0; e < n; ++e) mix.values[e] += coeff * states.vertices[i][e];
    }
    return mix;
}

HiddenVariableReport verify_hidden_variable(const EffectAlgebra &alg, const HiddenVariableModel &model,
                                            const StatePolytope &states, std::size_t mixtures, std::uint64_t seed) {
    HiddenVariableReport report;
    report.seed = seed;
    auto check = [&](const StateVector &state, const std::string &name) {
        try {
            for (auto &v : check_lifted_state(alg, model, state, lift_state(alg, model, state))) {
                report.violations.push_back(name + ": " + v);
            }
        } catch (const Error &e) {
            report.violations.push_back(name + ": " + e.what());
        }
    };
    for (std::size_t i = 0; i < states.vertices.size(); ++i) {
        check(states.vertices[i], "vertex " + std::to_string(i));
        ++report.vertex_states_checked;
    }
    if (states.vertices.empty()) return report;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < mixtures; ++i) {
        check(random_mixture(states, rng), "mixture " + std::to_string(i));
        ++report.mixtures_checked;
    }
    return report;
}

}  // namespace qlogic
