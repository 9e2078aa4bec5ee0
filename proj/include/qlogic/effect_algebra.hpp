#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace qlogic {

/// Position of an element in the carrier list of its algebra.
using ElementId = std::size_t;

/// Subset of a carrier as a bitmask; carriers never exceed 64 elements.
using ElementSet = std::uint64_t;

inline constexpr ElementId kUndefined = static_cast<ElementId>(-1);
inline constexpr std::size_t kHardSizeCap = 64;

inline constexpr ElementSet bit(ElementId e) { return ElementSet{1} << e; }
inline constexpr bool contains(ElementSet s, ElementId e) { return (s >> e) & 1U; }

/// Ids of the set bits in ascending order.
std::vector<ElementId> members(ElementSet s);

/// Partial sum table as read from a file, before any axiom has been checked.
struct RawTable {
    std::vector<std::string> labels;
    ElementId zero = 0;
    ElementId unit = 0;
    /// Dense row-major size*size table, kUndefined where a+b is undefined.
    std::vector<ElementId> sums;

    std::size_t size() const { return labels.size(); }
    ElementId at(ElementId a, ElementId b) const { return sums[a * labels.size() + b]; }
    void set(ElementId a, ElementId b, ElementId c) { sums[a * labels.size() + b] = c; }

    /// Builds a table from labelled triples; each triple also defines the
    /// mirrored entry. Conflicting orientations raise CommutativityViolation,
    /// unknown or duplicate labels raise Malformed.
    static RawTable from_triples(const std::vector<std::string> &labels, std::string_view zero,
                                 std::string_view unit,
                                 const std::vector<std::array<std::string, 3>> &triples);
};

/// A validated finite effect algebra. Instances only come out of validate()
/// and are immutable afterwards; the order, supplements and differences are
/// derived once at construction.
class EffectAlgebra {
  public:
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }
    const std::string &label(ElementId e) const { return labels_[e]; }
    ElementId zero() const { return zero_; }
    ElementId unit() const { return unit_; }

    /// a+b, or kUndefined.
    ElementId sum(ElementId a, ElementId b) const { return sums_[a * size() + b]; }
    bool orthogonal(ElementId a, ElementId b) const { return sum(a, b) != kUndefined; }
    /// Elements b with a+b defined.
    ElementSet partners(ElementId a) const { return partners_[a]; }

    ElementId supplement(ElementId p) const { return supplement_[p]; }
    bool leq(ElementId p, ElementId q) const { return contains(up_[p], q); }
    ElementSet down_set(ElementId p) const { return down_[p]; }
    ElementSet up_set(ElementId p) const { return up_[p]; }
    /// The unique r with p+r = q, or kUndefined when p is not below q.
    ElementId difference(ElementId q, ElementId p) const { return difference_[q * size() + p]; }

    ElementSet all() const;
    std::optional<ElementId> find(std::string_view label) const;
    /// Throws Error(Malformed) for an unknown label.
    ElementId id(std::string_view label) const;

    RawTable raw() const;

    friend EffectAlgebra validate(const RawTable &raw, std::size_t size_cap);

  private:
    EffectAlgebra() = default;

    std::vector<std::string> labels_;
    ElementId zero_ = 0;
    ElementId unit_ = 0;
    std::vector<ElementId> sums_;
    std::vector<ElementSet> partners_;
    std::vector<ElementId> supplement_;
    std::vector<ElementSet> down_;
    std::vector<ElementSet> up_;
    std::vector<ElementId> difference_;
};

/// Checks every instance of the four effect-algebra axioms by exhaustion.
/// Throws Error naming the violated axiom and its witnesses.
EffectAlgebra validate(const RawTable &raw, std::size_t size_cap = kHardSizeCap);

struct OrderStructure {
    /// leq[p][q] is true iff p <= q.
    std::vector<std::vector<bool>> leq;
    std::vector<ElementId> supplement;
};

OrderStructure derive_order(const EffectAlgebra &alg);

/// A yes/no answer together with the element that refutes it.
struct OrthoalgebraCheck {
    bool holds = true;
    std::optional<ElementId> counterexample;
};

OrthoalgebraCheck is_orthoalgebra(const EffectAlgebra &alg);

std::optional<ElementId> meet(const EffectAlgebra &alg, ElementId p, ElementId q);
std::optional<ElementId> join(const EffectAlgebra &alg, ElementId p, ElementId q);

bool is_sharp(const EffectAlgebra &alg, ElementId p);
std::vector<ElementId> sharp_elements(const EffectAlgebra &alg);

std::vector<ElementId> atoms(const EffectAlgebra &alg);
bool is_atomic(const EffectAlgebra &alg);

/// Largest n for which p+...+p (n summands) is defined; nullopt if unbounded.
/// Throws Error(ZeroHasNoIndex) for the zero element.
std::optional<unsigned> isotropic_index(const EffectAlgebra &alg, ElementId p);
bool is_archimedean(const EffectAlgebra &alg);

/// One witness of compatibility: p = x+z, q = y+z with x+y+z defined.
struct Decomposition {
    ElementId x = 0;
    ElementId y = 0;
    ElementId z = 0;
    friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

std::vector<Decomposition> are_compatible(const EffectAlgebra &alg, ElementId p, ElementId q);

struct CoherenceCheck {
    bool holds = true;
    std::optional<std::array<ElementId, 3>> counterexample;
};

/// Throws Error(NotAnOrthoalgebra) when the input is not an orthoalgebra.
CoherenceCheck check_coherence(const EffectAlgebra &alg);

/// Orthoalgebra + coherence + pairwise compatibility.
bool is_boolean_by_compatibility(const EffectAlgebra &alg);
/// Lattice route: all meets and joins exist, the lattice is distributive, the
/// supplement is a complement, and a+b is defined exactly for disjoint pairs
/// with value a v b.
bool is_boolean_by_lattice(const EffectAlgebra &alg);
/// Runs both deciders; throws std::logic_error if they disagree.
bool is_boolean(const EffectAlgebra &alg);

bool is_cancellative(const EffectAlgebra &alg);

struct StructureReport {
    bool is_effect_algebra = true;
    bool is_orthoalgebra = false;
    bool is_orthomodular_poset = false;
    bool is_boolean = false;
    std::vector<ElementId> sharp_elements;
    std::vector<ElementId> atoms;
    /// Isotropic index per nonzero element; nullopt stands for infinity.
    std::map<ElementId, std::optional<unsigned>> iota;
    bool is_atomic = false;
    bool is_archimedean = false;
    std::vector<std::pair<ElementId, ElementId>> incompatible_pairs;
};

StructureReport analyze(const EffectAlgebra &alg);

/// Bijection a -> b (indexed by ids of a) preserving 0, 1 and the partial sum.
std::optional<std::vector<ElementId>> find_isomorphism(const EffectAlgebra &a, const EffectAlgebra &b);

}  // namespace qlogic
