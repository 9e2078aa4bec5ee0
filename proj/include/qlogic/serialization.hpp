#pragma once

#include "qlogic/cloning.hpp"
#include "qlogic/divisible.hpp"
#include "qlogic/effect_algebra.hpp"
#include "qlogic/mv.hpp"
#include "qlogic/states.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace qlogic {

using Json = nlohmann::ordered_json;

/// Reads {"elements", "zero", "unit", "sums"}; unknown keys, wrong types and
/// bad JSON raise Error(Malformed). Nothing is validated beyond the shape.
RawTable parse_algebra(std::string_view text);
RawTable algebra_from_json(const Json &doc);

/// parse_algebra followed by validate().
EffectAlgebra load_algebra(std::string_view text);

/// Every defined sum is listed once (a <= b by index), 0 laws included.
Json algebra_to_json(const EffectAlgebra &alg);

/// {"witness": [[p, q, c], ...]} sorted by (label p, label q).
Json witness_to_json(const EffectAlgebra &alg, const CloningWitness &witness);
/// Throws Error(Malformed) unless every cell appears exactly once.
CloningWitness witness_from_json(const EffectAlgebra &alg, const Json &doc);

/// One {label: "p/q"} object per state.
Json state_to_json(const EffectAlgebra &alg, const StateVector &state);
Json vertices_to_json(const EffectAlgebra &alg, const StatePolytope &polytope);

Json mv_to_json(const FiniteMv &mv);
Json model_to_json(const EffectAlgebra &alg, const HiddenVariableModel &model);

Json structure_to_json(const EffectAlgebra &alg, const StructureReport &report);

Json to_json(const divisible::IntervalFunction &f);
Json to_json(const divisible::SquareIntervalFunction &f);
divisible::IntervalFunction interval_function_from_json(const Json &doc);
divisible::SquareIntervalFunction square_function_from_json(const Json &doc);

}  // namespace qlogic
