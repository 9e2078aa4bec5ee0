#pragma once

#include "qlogic/mv.hpp"
#include "qlogic/random.hpp"
#include "qlogic/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qlogic::divisible {

/// A function from {1..N} to [0, 1] with exact rational values: an element
/// of the effect algebra of all such functions under pointwise addition.
class IntervalFunction {
  public:
    /// Throws Error(Malformed) if a value leaves [0, 1] or values is empty.
    explicit IntervalFunction(std::vector<Rational> values);

    static IntervalFunction constant(std::size_t n, const Rational &value);
    /// 1 on the (0-based) points in `support`, 0 elsewhere.
    static IntervalFunction indicator(std::size_t n, const std::vector<std::size_t> &support);

    std::size_t domain_size() const { return values_.size(); }
    const Rational &operator()(std::size_t x) const { return values_[x]; }
    const std::vector<Rational> &values() const { return values_; }

    friend bool operator==(const IntervalFunction &, const IntervalFunction &) = default;

  private:
    std::vector<Rational> values_;
};

/// A function on {1..N} x {1..N}, row-major; stands for an element of the
/// tensor square, which is identified with functions on the product set.
class SquareIntervalFunction {
  public:
    SquareIntervalFunction(std::size_t side, std::vector<Rational> values);

    std::size_t side() const { return side_; }
    const Rational &operator()(std::size_t x, std::size_t y) const { return values_[x * side_ + y]; }
    const std::vector<Rational> &values() const { return values_; }

    friend bool operator==(const SquareIntervalFunction &, const SquareIntervalFunction &) = default;

  private:
    std::size_t side_;
    std::vector<Rational> values_;
};

/// f+g, undefined (nullopt) as soon as f(x)+g(x) > 1 at some x.
/// Throws Error(Malformed) on mismatched domains.
std::optional<IntervalFunction> pointwise_sum(const IntervalFunction &f, const IntervalFunction &g);
std::optional<SquareIntervalFunction> pointwise_sum(const SquareIntervalFunction &f, const SquareIntervalFunction &g);

IntervalFunction complement(const IntervalFunction &f);
bool leq(const IntervalFunction &f, const IntervalFunction &g);
/// Pointwise minimum, the meet in this algebra.
IntervalFunction meet(const IntervalFunction &f, const IntervalFunction &g);
/// f ^ f' = 0, i.e. {0,1}-valued.
bool is_sharp(const IntervalFunction &f);

/// (f (x) g)(x, y) = f(x) g(y).
SquareIntervalFunction tensor(const IntervalFunction &f, const IntervalFunction &g);

/// The cloning map: F restricted to the diagonal.
IntervalFunction diagonal_clone(const SquareIntervalFunction &F);

/// diagonal_clone(tensor(f, g)), i.e. x -> f(x) g(x).
IntervalFunction product_bimorphism(const IntervalFunction &f, const IntervalFunction &g);

/// Truncated addition and negation on [0, 1].
struct LukaResult {
    Rational plus;
    Rational neg;
};
LukaResult luka_operations(const Rational &a, const Rational &b);

MvOperations<Rational> lukasiewicz_operations();

/// Sampled MV identities over [0, 1] cap Q, corners 0, 1/2, 1 included.
MvAxiomReport check_lukasiewicz_axioms(std::uint64_t samples, std::uint64_t seed = kDefaultSeed);

IntervalFunction random_function(std::size_t n, std::mt19937_64 &rng);
/// Random g with f+g defined.
IntervalFunction random_orthogonal(const IntervalFunction &f, std::mt19937_64 &rng);
SquareIntervalFunction random_square(std::size_t n, std::mt19937_64 &rng);

struct SharpReport {
    std::size_t n = 0;
    std::size_t indicators = 0;
    bool all_sharp = true;
    bool closed_under_complement = true;
    bool closed_under_sum = true;
    /// True when every pair of indicators was checked rather than a sample.
    bool closure_exhaustive = true;
    /// Set when the indicator algebra was compared with the powerset.
    std::optional<bool> isomorphic_to_powerset;
    /// S -> indicator(S) preserves order and sums on everything checked.
    bool canonical_map_is_isomorphism = true;

    bool passed() const;
};

/// Checks the 2^N indicator functions (N <= 16). Pairwise checks are
/// exhaustive while 4^N <= pair_budget and sampled otherwise; the full
/// isomorphism search against the powerset runs for N <= 5.
SharpReport sharp_elements_sample(std::size_t n, std::uint64_t pair_budget = 1 << 20,
                                  std::uint64_t seed = kDefaultSeed);

/// The indicator functions with the inherited partial sum, as a finite
/// algebra labelled like the powerset catalog entry. N <= 6.
EffectAlgebra indicator_algebra(std::size_t n);

struct CloningLawReport {
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

/// Unit laws of the diagonal map, additivity of the diagonal map on
/// orthogonal square functions, and biadditivity of the product bimorphism,
/// each on `samples` seeded draws plus the corner functions.
CloningLawReport check_cloning_laws(std::size_t n, std::uint64_t samples, std::uint64_t seed = kDefaultSeed);

/// With p_n the indicator of {n}: [0, p_n] totally ordered on samples,
/// h(f) = (p_n f)_n recovers f, and the lift w_bar({x_n}) = w(sum x_n) of a
/// random state w(f) = sum_x w_x f(x) satisfies w_bar(h(f)) = w(f).
CloningLawReport check_hidden_variable_instance(std::size_t n, std::uint64_t samples,
                                                std::uint64_t seed = kDefaultSeed);

}  // namespace qlogic::divisible
