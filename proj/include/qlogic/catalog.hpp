#pragma once

#include "qlogic/effect_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qlogic::catalog {

/// Labels: "0", "1" and subsets written "{1,3}". Element id = subset bitmask.
EffectAlgebra boolean_powerset(int k);

/// {0, 1/D, ..., (D-1)/D, 1}; labels "0", "k/D", "1" (unreduced).
EffectAlgebra chain(int D);

/// 0, a1, a1', ..., an, an', 1 with only ai + ai' = 1 besides the 0 laws.
EffectAlgebra mo(int n);

/// Three 3-atom blocks {a,b,c}, {c,d,e}, {e,f,a} pasted into a 14-element
/// orthoalgebra. a, c, e are pairwise orthogonal but a+c+e does not exist.
EffectAlgebra wright_triangle();

/// Shared 0 and 1, no sums across components. Component i's inner labels are
/// prefixed with "s<i>." (1-based).
EffectAlgebra horizontal_sum(const std::vector<EffectAlgebra> &parts);

/// Componentwise partial sum; labels "(x,y,...)".
EffectAlgebra product(const std::vector<EffectAlgebra> &parts);

/// Recursive constructor description such as "product(chain(2),chain(2))".
struct CatalogSpec {
    std::string name;
    std::vector<int> parameters;
    std::vector<CatalogSpec> children;

    std::string to_string() const;
};

/// Parses "name(args)" expressions; a bare name means no arguments.
CatalogSpec parse_spec(std::string_view text);

/// Throws Error(BoundExceeded) outside the documented parameter ranges and
/// Error(Malformed) for unknown names or wrong arity.
EffectAlgebra build(const CatalogSpec &spec);
EffectAlgebra build(std::string_view text);

}  // namespace qlogic::catalog
