#pragma once

#include "qlogic/cloning.hpp"
#include "qlogic/effect_algebra.hpp"
#include "qlogic/random.hpp"
#include "qlogic/rational.hpp"
#include "qlogic/states.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace qlogic {

/// One failed instance of an MV identity; axioms are numbered 1..8 in the
/// usual order (commutativity, associativity, a+a'=1, a+0=a, a''=a, 0'=1,
/// a+1=1, (a'+b)'+b=(a+b')'+a).
struct MvViolation {
    int axiom = 0;
    std::string a, b, c;
};

struct MvAxiomReport {
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t triples_checked = 0;
    std::array<std::uint64_t, 8> violations_per_axiom{};
    /// First few failing instances, in discovery order.
    std::vector<MvViolation> examples;

    bool passed() const;
    bool violates(int axiom) const { return violations_per_axiom.at(axiom - 1) != 0; }
};

/// Total operations on a value type, used for sampled checks on carriers that
/// are too large (or infinite) to enumerate.
template <class T>
struct MvOperations {
    std::function<T(const T &, const T &)> plus;
    std::function<T(const T &)> neg;
    T zero;
    T one;
    std::function<std::string(const T &)> show;
};

namespace detail {

template <class T>
void check_mv_triple(const MvOperations<T> &ops, const T &a, const T &b, const T &c, MvAxiomReport &report) {
    auto fail = [&](int axiom) {
        ++report.violations_per_axiom[axiom - 1];
        if (report.examples.size() < 16) report.examples.push_back({axiom, ops.show(a), ops.show(b), ops.show(c)});
    };
    const auto &plus = ops.plus;
    const auto &neg = ops.neg;
    if (!(plus(a, b) == plus(b, a))) fail(1);
    if (!(plus(plus(a, b), c) == plus(a, plus(b, c)))) fail(2);
    if (!(plus(a, neg(a)) == ops.one)) fail(3);
    if (!(plus(a, ops.zero) == a)) fail(4);
    if (!(neg(neg(a)) == a)) fail(5);
    if (!(neg(ops.zero) == ops.one)) fail(6);
    if (!(plus(a, ops.one) == ops.one)) fail(7);
    if (!(plus(neg(plus(neg(a), b)), b) == plus(neg(plus(a, neg(b))), a))) fail(8);
    ++report.triples_checked;
}

}  // namespace detail

/// Checks all eight identities on `sample_budget` triples drawn by `draw`
/// from a generator seeded with `seed`, after every triple of `corners`.
template <class T>
MvAxiomReport check_mv_axioms_sampled(const MvOperations<T> &ops, const std::function<T(std::mt19937_64 &)> &draw,
                                      std::uint64_t sample_budget, std::uint64_t seed,
                                      const std::vector<T> &corners = {}) {
    MvAxiomReport report;
    report.seed = seed;
    for (const auto &a : corners) {
        for (const auto &b : corners) {
            for (const auto &c : corners) detail::check_mv_triple(ops, a, b, c, report);
        }
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
        T a = draw(rng), b = draw(rng), c = draw(rng);
        detail::check_mv_triple(ops, a, b, c, report);
    }
    return report;
}

/// A finite MV-algebra given by tables. Element ids index `labels`.
class FiniteMv {
  public:
    FiniteMv(std::vector<std::string> labels, std::size_t zero, std::size_t one, std::vector<std::size_t> plus,
             std::vector<std::size_t> neg);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }
    std::size_t zero() const { return zero_; }
    std::size_t one() const { return one_; }
    std::size_t plus(std::size_t a, std::size_t b) const { return plus_[a * size() + b]; }
    std::size_t neg(std::size_t a) const { return neg_[a]; }
    /// a <= b iff a' + b = 1.
    bool leq(std::size_t a, std::size_t b) const { return plus(neg(a), b) == one_; }

  private:
    std::vector<std::string> labels_;
    std::size_t zero_, one_;
    std::vector<std::size_t> plus_;
    std::vector<std::size_t> neg_;
};

/// Exhaustive over all triples.
MvAxiomReport check_mv_axioms(const FiniteMv &mv);

/// {0, 1} with OR and NOT.
FiniteMv boolean_mv();
/// {0, 1/n, ..., 1} with truncated addition.
FiniteMv lukasiewicz_chain_mv(int n);
/// Componentwise operations; labels "(x,y,...)".
FiniteMv product_mv(const std::vector<FiniteMv> &parts);
/// a + b = a v b, a' = supplement. Throws Error(NotBoolean).
FiniteMv mv_of_boolean(const EffectAlgebra &alg);

/// a+b defined iff a <= b' in the MV order. The result is validated.
EffectAlgebra effect_algebra_of_mv(const FiniteMv &mv);

/// Parts p_1..p_N with p_1 + ... + p_N = 1 where every [0, p_n] is a totally
/// ordered ideal (down-closed, and x+y stays below p_n whenever x, y do).
struct ChainDecomposition {
    std::vector<ElementId> parts;
    friend bool operator==(const ChainDecomposition &, const ChainDecomposition &) = default;
};

/// [0,p] totally ordered and closed under the existing sums.
bool is_linear_ideal(const EffectAlgebra &alg, ElementId p);

/// Empty string when `d` satisfies the hypotheses, otherwise the reason.
std::string check_chain_decomposition(const EffectAlgebra &alg, const ChainDecomposition &d);

/// All decompositions, as index-ascending part lists in lexicographic order.
/// Stops after `limit` results.
std::vector<ChainDecomposition> find_chain_decomposition(const EffectAlgebra &alg, std::size_t limit = 10000);

/// M = product of the truncated chains [0, p_n], h(x) = (c(p_n, x))_n.
struct HiddenVariableModel {
    FiniteMv mv;
    ChainDecomposition decomposition;
    /// Elements of each chain [0, p_n] in increasing order.
    std::vector<std::vector<ElementId>> chains;
    /// h as MV element ids, indexed by source element.
    std::vector<std::size_t> h;
    /// The truncated chains as MV-algebras, one per part.
    std::vector<FiniteMv> factors;

    /// Source elements making up MV element m, one per component.
    std::vector<ElementId> components(std::size_t m) const;
    std::size_t encode(const std::vector<ElementId> &components) const;
};

/// Checks the hypotheses (verified witness, valid decomposition, sharp parts),
/// builds the model and checks the MV axioms, bijectivity and additivity of h,
/// h(0) = 0, h(1) = 1 and order reflection. Throws Error(ConstructionFailed)
/// naming the first failed condition.
HiddenVariableModel hidden_variable_construct(const EffectAlgebra &alg, const CloningWitness &witness,
                                              const ChainDecomposition &decomposition);

/// w_bar({x_n}) = w(x_1 + ... + x_N). Throws Error(ConstructionFailed) when a
/// component sum is undefined.
std::vector<Rational> lift_state(const EffectAlgebra &alg, const HiddenVariableModel &model, const StateVector &state);

/// Violations of "lifted is a state on the MV effect algebra" and of
/// lifted(h(q)) = state(q); empty when both hold.
std::vector<std::string> check_lifted_state(const EffectAlgebra &alg, const HiddenVariableModel &model,
                                            const StateVector &state, const std::vector<Rational> &lifted);

struct HiddenVariableReport {
    std::uint64_t seed = 0;
    std::size_t vertex_states_checked = 0;
    std::size_t mixtures_checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

/// Lifts every vertex state plus `mixtures` seeded random rational convex
/// combinations of them and checks both hidden-variable conditions exactly.
HiddenVariableReport verify_hidden_variable(const EffectAlgebra &alg, const HiddenVariableModel &model,
                                            const StatePolytope &states, std::size_t mixtures = 100,
                                            std::uint64_t seed = kDefaultSeed);

/// Random convex combination of the vertices with positive integer weights.
StateVector random_mixture(const StatePolytope &states, std::mt19937_64 &rng);

}  // namespace qlogic
