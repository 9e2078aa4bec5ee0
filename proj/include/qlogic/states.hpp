#pragma once

#include "qlogic/effect_algebra.hpp"
#include "qlogic/rational.hpp"

#include <utility>
#include <vector>

namespace qlogic {

/// sum(coefficient * v_element) = rhs
struct LinearEquation {
    std::vector<std::pair<ElementId, int>> terms;
    Rational rhs;
};

/// The state polytope as a linear system over one variable per element:
/// v_a + v_b = v_c for every defined a+b = c, v_unit = 1, and v_p >= 0.
/// v_zero = 0 is a consequence of 0+0 = 0 and is not listed.
struct StateSystem {
    std::size_t variables = 0;
    std::vector<LinearEquation> equalities;
    std::vector<ElementId> nonnegative;
};

StateSystem state_constraints(const EffectAlgebra &alg);

struct StateVector {
    std::vector<Rational> values;

    const Rational &operator[](ElementId e) const { return values[e]; }
    friend bool operator==(const StateVector &, const StateVector &) = default;
};

struct StatePolytope {
    /// Sorted lexicographically by value vector.
    std::vector<StateVector> vertices;
    std::size_t dimension = 0;
};

inline constexpr std::size_t kStateCarrierCap = 32;

/// Exact vertex enumeration. The equalities are solved once to an affine
/// parametrization; each vertex is then the solution of a nonsingular choice
/// of active nonnegativity constraints that satisfies all the others.
/// Throws Error(EmptyStateSpace) when no state exists and
/// Error(BoundExceeded) above kStateCarrierCap elements.
StatePolytope enumerate_vertex_states(const EffectAlgebra &alg);

/// Same enumeration over an arbitrary system whose feasible set is bounded.
StatePolytope enumerate_vertices(const StateSystem &system);

/// Returns true when `state` satisfies every defining constraint exactly.
bool is_state(const EffectAlgebra &alg, const StateVector &state);

struct SeparationReport {
    bool separating = true;
    /// Pairs p < q that every vertex state assigns the same value.
    std::vector<std::pair<ElementId, ElementId>> merged;
};

SeparationReport is_separating(const EffectAlgebra &alg, const StatePolytope &polytope);

}  // namespace qlogic
