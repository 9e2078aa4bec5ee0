#include "qlogic/error.hpp"

namespace qlogic {

namespace {

std::string with_witnesses(const std::string &message, const std::vector<std::string> &witnesses) {
    if (witnesses.empty()) {
        return message;
    }
    std::string out = message + " [";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (i) out += ", ";
        out += witnesses[i];
    }
    return out + "]";
}

}  // namespace

Error::Error(Kind kind, const std::string &message, std::vector<std::string> witnesses)
    : std::runtime_error(with_witnesses(message, witnesses)), kind_(kind), witnesses_(std::move(witnesses)) {}

bool Error::is_axiom_violation() const noexcept {
    switch (kind_) {
        case Kind::Degenerate:
        case Kind::CommutativityViolation:
        case Kind::AssociativityViolation:
        case Kind::SupplementMissing:
        case Kind::SupplementNotUnique:
        case Kind::UnitIsotropic:
            return true;
        default:
            return false;
    }
}

std::string_view kind_name(Error::Kind kind) {
    switch (kind) {
        case Error::Kind::Malformed: return "Malformed";
        case Error::Kind::BoundExceeded: return "BoundExceeded";
        case Error::Kind::Degenerate: return "Degenerate";
        case Error::Kind::CommutativityViolation: return "CommutativityViolation";
        case Error::Kind::AssociativityViolation: return "AssociativityViolation";
        case Error::Kind::SupplementMissing: return "SupplementMissing";
        case Error::Kind::SupplementNotUnique: return "SupplementNotUnique";
        case Error::Kind::UnitIsotropic: return "UnitIsotropic";
        case Error::Kind::ZeroHasNoIndex: return "ZeroHasNoIndex";
        case Error::Kind::NotAnOrthoalgebra: return "NotAnOrthoalgebra";
        case Error::Kind::NotBoolean: return "NotBoolean";
        case Error::Kind::DecompositionMismatch: return "DecompositionMismatch";
        case Error::Kind::ConstructionFailed: return "ConstructionFailed";
        case Error::Kind::EmptyStateSpace: return "EmptyStateSpace";
    }
    return "Unknown";
}

}  // namespace qlogic
