#pragma once

#include "qlogic/effect_algebra.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qlogic {

/// A total map c: E x E -> E standing for a cloning morphism composed with
/// the tensor bimorphism, c(p, q) = phi(p (x) q). Cloning existence is decided
/// at this level: a bimorphism with c(p,1) = c(1,p) = p factors through the
/// tensor product by its universal property, so the tensor object itself is
/// never built.
///
/// A witness is only meaningful together with the algebra it was built for.
struct CloningWitness {
    std::size_t size = 0;
    std::vector<ElementId> table;

    ElementId at(ElementId p, ElementId q) const { return table[p * size + q]; }
    bool is_symmetric() const;
    friend bool operator==(const CloningWitness &, const CloningWitness &) = default;
};

enum class SearchStatus { WitnessFound, NoWitness, Aborted };

std::string_view status_name(SearchStatus status);

struct SearchConfig {
    bool enumerate_all = false;
    std::uint64_t node_budget = 100'000'000;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::NoWitness;
    std::vector<CloningWitness> witnesses;
    /// Every value tried at a search variable, forced or not. The unit and
    /// zero rows/columns are fixed before the search and not counted.
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds wall_time{0};
};

/// Exhaustive backtracking over c(p, q), atom x atom pairs first and then the
/// remaining cells in lexicographic order, values ascending. Every additivity
/// constraint c(a+b, q) = c(a,q) + c(b,q) (and its mirror) is kept generalized
/// arc consistent, so the atom block propagates upward through the table.
/// NoWitness is only returned after the whole tree has been exhausted.
SearchOutcome find_cloning_bimorphism(const EffectAlgebra &alg, const SearchConfig &config = {});

/// c(p, q) = p ^ q. Throws Error(NotBoolean).
CloningWitness meet_witness(const EffectAlgebra &alg);

struct WitnessCheck {
    bool ok = true;
    std::string violation;
};

/// Checks the unit laws, c(1,1) = 1 and additivity in each argument. Rows are
/// checked before columns; the report describes the first failing instance.
WitnessCheck verify_witness(const EffectAlgebra &alg, const CloningWitness &candidate);

struct LemmaReport {
    /// Pairs where c(p,q) = 0 disagrees with p orthogonal to q.
    std::vector<std::pair<ElementId, ElementId>> zero_iff_orthogonal_violations;
    /// Elements with c(p,p) != p.
    std::vector<ElementId> idempotence_violations;

    bool passed() const { return zero_iff_orthogonal_violations.empty() && idempotence_violations.empty(); }
};

/// Throws Error(NotAnOrthoalgebra); on effect algebras these properties fail.
LemmaReport check_witness_lemmas(const EffectAlgebra &alg, const CloningWitness &witness);

struct MackeyDecomposition {
    ElementId common = 0;  // r = c(p, q)
    ElementId left = 0;    // a = c(p, q')
    ElementId right = 0;   // b = c(p', q)
    friend bool operator==(const MackeyDecomposition &, const MackeyDecomposition &) = default;
};

/// Builds p = r+a, q = r+b from the witness and checks it is the one and only
/// decomposition are_compatible() finds. Throws Error(DecompositionMismatch).
MackeyDecomposition compatibility_core(const EffectAlgebra &alg, const CloningWitness &witness, ElementId p,
                                       ElementId q);

}  // namespace qlogic
