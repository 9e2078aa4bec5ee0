#pragma once

#include "qlogic/rational.hpp"

#include <cstdint>
#include <random>

namespace qlogic {

/// Seed used by every sampled check unless the caller supplies one.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Uniform k/d in [0, 1] with d drawn from 1..max_denominator.
Rational random_unit_rational(std::mt19937_64 &rng, unsigned max_denominator = 64);

}  // namespace qlogic
