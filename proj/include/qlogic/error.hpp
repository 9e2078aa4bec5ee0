#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

/// Every failure the library reports. Axiom violations carry the labels of
/// the elements that witness them.
class Error : public std::runtime_error {
  public:
    enum class Kind {
        Malformed,
        BoundExceeded,
        Degenerate,
        CommutativityViolation,
        AssociativityViolation,
        SupplementMissing,
        SupplementNotUnique,
        UnitIsotropic,
        ZeroHasNoIndex,
        NotAnOrthoalgebra,
        NotBoolean,
        DecompositionMismatch,
        ConstructionFailed,
        EmptyStateSpace,
    };

    Error(Kind kind, const std::string &message, std::vector<std::string> witnesses = {});

    Kind kind() const noexcept { return kind_; }
    const std::vector<std::string> &witnesses() const noexcept { return witnesses_; }

    /// True for the effect-algebra axiom failures reported by validation.
    bool is_axiom_violation() const noexcept;

  private:
    Kind kind_;
    std::vector<std::string> witnesses_;
};

std::string_view kind_name(Error::Kind kind);

}  // namespace qlogic
