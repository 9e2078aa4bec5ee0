#include "qlogic/divisible.hpp"

#include "qlogic/catalog.hpp"
#include "qlogic/error.hpp"

#include <algorithm>

namespace qlogic::divisible {

namespace {

bool in_unit_interval(const Rational &v) { return v >= 0 && v <= 1; }

void require_same_domain(std::size_t a, std::size_t b) {
    if (a != b) throw Error(Error::Kind::Malformed, "functions have different domains");
}

/// Bitmask of the points where f is 1; nullopt unless f is {0,1}-valued.
std::optional<std::uint64_t> support_mask(const IntervalFunction &f) {
    std::uint64_t mask = 0;
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
        if (f(x) == 1) {
            mask |= std::uint64_t{1} << x;
        } else if (f(x) != 0) {
            return std::nullopt;
        }
    }
    return mask;
}

IntervalFunction indicator_of_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Rational> v(n);
    for (std::size_t x = 0; x < n; ++x) v[x] = (mask >> x) & 1U ? 1 : 0;
    return IntervalFunction(std::move(v));
}

std::string show(const IntervalFunction &f) {
    std::string out = "(";
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
        if (x) out += ", ";
        out += to_fraction_string(f(x));
    }
    return out + ")";
}

}  // namespace

IntervalFunction::IntervalFunction(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(Error::Kind::Malformed, "interval function on an empty domain");
    if (!std::all_of(values_.begin(), values_.end(), in_unit_interval)) {
        throw Error(Error::Kind::Malformed, "interval function value outside [0, 1]");
    }
}

IntervalFunction IntervalFunction::constant(std::size_t n, const Rational &value) {
    return IntervalFunction(std::vector<Rational>(n, value));
}

IntervalFunction IntervalFunction::indicator(std::size_t n, const std::vector<std::size_t> &support) {
    std::vector<Rational> v(n, Rational(0));
    for (auto x : support) {
        if (x >= n) throw Error(Error::Kind::Malformed, "indicator support outside the domain");
        v[x] = 1;
    }
    return IntervalFunction(std::move(v));
}

SquareIntervalFunction::SquareIntervalFunction(std::size_t side, std::vector<Rational> values)
    : side_(side), values_(std::move(values)) {
    if (side_ == 0 || values_.size() != side_ * side_) {
        throw Error(Error::Kind::Malformed, "square function needs side*side values");
    }
    if (!std::all_of(values_.begin(), values_.end(), in_unit_interval)) {
        throw Error(Error::Kind::Malformed, "square function value outside [0, 1]");
    }
}

std::optional<IntervalFunction> pointwise_sum(const IntervalFunction &f, const IntervalFunction &g) {
    require_same_domain(f.domain_size(), g.domain_size());
    std::vector<Rational> v(f.domain_size());
    for (std::size_t x = 0; x < v.size(); ++x) {
        v[x] = f(x) + g(x);
        if (v[x] > 1) return std::nullopt;
    }
    return IntervalFunction(std::move(v));
}

std::optional<SquareIntervalFunction> pointwise_sum(const SquareIntervalFunction &f, const SquareIntervalFunction &g) {
    require_same_domain(f.side(), g.side());
    std::vector<Rational> v(f.values().size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f.values()[i] + g.values()[i];
        if (v[i] > 1) return std::nullopt;
    }
    return SquareIntervalFunction(f.side(), std::move(v));
}

IntervalFunction complement(const IntervalFunction &f) {
    std::vector<Rational> v(f.domain_size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = 1 - f(x);
    return IntervalFunction(std::move(v));
}

bool leq(const IntervalFunction &f, const IntervalFunction &g) {
    require_same_domain(f.domain_size(), g.domain_size());
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
        if (f(x) > g(x)) return false;
    }
    return true;
}

IntervalFunction meet(const IntervalFunction &f, const IntervalFunction &g) {
    require_same_domain(f.domain_size(), g.domain_size());
    std::vector<Rational> v(f.domain_size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = std::min(f(x), g(x));
    return IntervalFunction(std::move(v));
}

bool is_sharp(const IntervalFunction &f) {
    return meet(f, complement(f)) == IntervalFunction::constant(f.domain_size(), 0);
}

SquareIntervalFunction tensor(const IntervalFunction &f, const IntervalFunction &g) {
    require_same_domain(f.domain_size(), g.domain_size());
    const std::size_t n = f.domain_size();
    std::vector<Rational> v(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) v[x * n + y] = f(x) * g(y);
    }
    return SquareIntervalFunction(n, std::move(v));
}

IntervalFunction diagonal_clone(const SquareIntervalFunction &F) {
    std::vector<Rational> v(F.side());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = F(x, x);
    return IntervalFunction(std::move(v));
}

IntervalFunction product_bimorphism(const IntervalFunction &f, const IntervalFunction &g) {
    require_same_domain(f.domain_size(), g.domain_size());
    std::vector<Rational> v(f.domain_size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = f(x) * g(x);
    return IntervalFunction(std::move(v));
}

LukaResult luka_operations(const Rational &a, const Rational &b) {
    if (!in_unit_interval(a) || !in_unit_interval(b)) {
        throw Error(Error::Kind::Malformed, "Lukasiewicz operands must lie in [0, 1]");
    }
    Rational sum = a + b;
    return {sum > 1 ? Rational(1) : sum, 1 - a};
}

MvOperations<Rational> lukasiewicz_operations() {
    return {
        [](const Rational &a, const Rational &b) { return luka_operations(a, b).plus; },
        [](const Rational &a) { return luka_operations(a, 0).neg; },
        Rational(0),
        Rational(1),
        [](const Rational &a) { return to_fraction_string(a); },
    };
}

MvAxiomReport check_lukasiewicz_axioms(std::uint64_t samples, std::uint64_t seed) {
    std::function<Rational(std::mt19937_64 &)> draw = [](std::mt19937_64 &rng) { return random_unit_rational(rng); };
    return check_mv_axioms_sampled(lukasiewicz_operations(), draw, samples, seed,
                                   {Rational(0), Rational(1, 2), Rational(1)});
}

IntervalFunction random_function(std::size_t n, std::mt19937_64 &rng) {
    std::vector<Rational> v(n);
    for (auto &x : v) x = random_unit_rational(rng);
    return IntervalFunction(std::move(v));
}

IntervalFunction random_orthogonal(const IntervalFunction &f, std::mt19937_64 &rng) {
    std::vector<Rational> v(f.domain_size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = random_unit_rational(rng) * (1 - f(x));
    return IntervalFunction(std::move(v));
}

SquareIntervalFunction random_square(std::size_t n, std::mt19937_64 &rng) {
    std::vector<Rational> v(n * n);
    for (auto &x : v) x = random_unit_rational(rng);
    return SquareIntervalFunction(n, std::move(v));
}

bool SharpReport::passed() const {
    return all_sharp && closed_under_complement && closed_under_sum && canonical_map_is_isomorphism &&
           isomorphic_to_powerset.value_or(true);
}

EffectAlgebra indicator_algebra(std::size_t n) {
    if (n < 1 || n > 6) throw Error(Error::Kind::BoundExceeded, "indicator algebra is built for N in [1, 6]");
    const std::uint64_t count = std::uint64_t{1} << n;
    RawTable raw;
    for (std::uint64_t s = 0; s < count; ++s) {
        std::string label = s == 0 ? "0" : s == count - 1 ? "1" : "{";
        if (label == "{") {
            for (std::size_t x = 0; x < n; ++x) {
                if (!((s >> x) & 1U)) continue;
                if (label.size() > 1) label += ",";
                label += std::to_string(x + 1);
            }
            label += "}";
        }
        raw.labels.push_back(label);
    }
    raw.zero = 0;
    raw.unit = count - 1;
    raw.sums.assign(count * count, kUndefined);
    for (std::uint64_t s = 0; s < count; ++s) {
        for (std::uint64_t t = 0; t < count; ++t) {
            auto sum = pointwise_sum(indicator_of_mask(n, s), indicator_of_mask(n, t));
            if (!sum) continue;
            auto mask = support_mask(*sum);
            if (!mask) throw Error(Error::Kind::ConstructionFailed, "sum of indicators is not an indicator");
            raw.set(s, t, *mask);
        }
    }
    return validate(raw);
}

SharpReport sharp_elements_sample(std::size_t n, std::uint64_t pair_budget, std::uint64_t seed) {
    if (n < 1 || n > 16) throw Error(Error::Kind::BoundExceeded, "sharp element check is limited to N in [1, 16]");
    SharpReport r;
    r.n = n;
    const std::uint64_t count = std::uint64_t{1} << n;
    const std::uint64_t full = count - 1;
    r.indicators = count;
    for (std::uint64_t s = 0; s < count; ++s) {
        auto f = indicator_of_mask(n, s);
        if (!is_sharp(f)) r.all_sharp = false;
        if (support_mask(complement(f)) != std::optional<std::uint64_t>(full & ~s)) r.closed_under_complement = false;
    }
    auto check_pair = [&](std::uint64_t s, std::uint64_t t) {
        auto f = indicator_of_mask(n, s), g = indicator_of_mask(n, t);
        auto sum = pointwise_sum(f, g);
        if (sum && (!is_sharp(*sum) || !support_mask(*sum))) r.closed_under_sum = false;
        bool disjoint = (s & t) == 0;
        bool expected_sum = sum && disjoint && support_mask(*sum) == std::optional<std::uint64_t>(s | t);
        if (disjoint != sum.has_value() || (disjoint && !expected_sum)) r.canonical_map_is_isomorphism = false;
        if (leq(f, g) != ((s & ~t) == 0)) r.canonical_map_is_isomorphism = false;
    };
    if (count * count <= pair_budget) {
        for (std::uint64_t s = 0; s < count; ++s) {
            for (std::uint64_t t = 0; t < count; ++t) check_pair(s, t);
        }
    } else {
        r.closure_exhaustive = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, full);
        for (std::uint64_t i = 0; i < pair_budget; ++i) check_pair(pick(rng), pick(rng));
    }
    if (n <= 5) {
        r.isomorphic_to_powerset = find_isomorphism(indicator_algebra(n), catalog::boolean_powerset(static_cast<int>(n))).has_value();
    }
    return r;
}

CloningLawReport check_cloning_laws(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
    CloningLawReport r;
    r.seed = seed;
    std::mt19937_64 rng(seed);
    const auto one = IntervalFunction::constant(n, 1);
    auto note = [&](const std::string &what, const IntervalFunction &f) {
        if (r.violations.size() < 32) r.violations.push_back(what + " at " + show(f));
    };

    std::vector<IntervalFunction> corners{IntervalFunction::constant(n, 0), one, IntervalFunction::constant(n, Rational(1, 2))};
    for (std::size_t x = 0; x < n; ++x) corners.push_back(IntervalFunction::indicator(n, {x}));

    auto check_units = [&](const IntervalFunction &f) {
        if (diagonal_clone(tensor(f, one)) != f) note("diagonal_clone(f (x) 1) != f", f);
        if (diagonal_clone(tensor(one, f)) != f) note("diagonal_clone(1 (x) f) != f", f);
    };
    auto check_biadditive = [&](const IntervalFunction &f1, const IntervalFunction &f2, const IntervalFunction &g) {
        auto f = pointwise_sum(f1, f2);
        if (!f) return note("sampler produced a non-orthogonal pair", f1);
        auto left = pointwise_sum(product_bimorphism(f1, g), product_bimorphism(f2, g));
        if (!left || *left != product_bimorphism(*f, g)) note("left additivity of the product bimorphism fails", g);
        auto right = pointwise_sum(product_bimorphism(g, f1), product_bimorphism(g, f2));
        if (!right || *right != product_bimorphism(g, *f)) note("right additivity of the product bimorphism fails", g);
    };
    auto check_morphism = [&](const SquareIntervalFunction &F, const SquareIntervalFunction &G) {
        auto sum = pointwise_sum(F, G);
        if (!sum) return note("sampler produced non-orthogonal squares", diagonal_clone(F));
        auto split = pointwise_sum(diagonal_clone(F), diagonal_clone(G));
        if (!split || *split != diagonal_clone(*sum)) note("diagonal_clone is not additive", diagonal_clone(F));
    };

    for (const auto &f : corners) {
        check_units(f);
        check_biadditive(f, IntervalFunction::constant(n, 0), one);
    }
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto f = random_function(n, rng);
        check_units(f);
        auto f2 = random_orthogonal(f, rng);
        check_biadditive(f, f2, random_function(n, rng));
        auto F = random_square(n, rng);
        std::vector<Rational> gv(n * n);
        for (std::size_t k = 0; k < gv.size(); ++k) gv[k] = random_unit_rational(rng) * (1 - F.values()[k]);
        check_morphism(F, SquareIntervalFunction(n, std::move(gv)));
        ++r.samples;
    }
    return r;
}

CloningLawReport check_hidden_variable_instance(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
    CloningLawReport r;
    r.seed = seed;
    std::mt19937_64 rng(seed);
    std::vector<IntervalFunction> parts;
    for (std::size_t k = 0; k < n; ++k) parts.push_back(IntervalFunction::indicator(n, {k}));
    auto note = [&](const std::string &what) {
        if (r.violations.size() < 32) r.violations.push_back(what);
    };
    std::uniform_int_distribution<int> weight(1, 1000);
    for (std::uint64_t i = 0; i < samples; ++i) {
        auto f = random_function(n, rng);
        auto g = random_function(n, rng);
        std::vector<Rational> w(n);
        Rational total = 0;
        for (auto &x : w) total += (x = weight(rng));
        for (auto &x : w) x /= total;
        auto state = [&](const IntervalFunction &e) {
            Rational s = 0;
            for (std::size_t x = 0; x < n; ++x) s += w[x] * e(x);
            return s;
        };

        IntervalFunction recombined = IntervalFunction::constant(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
            auto hf = product_bimorphism(parts[k], f);
            auto hg = product_bimorphism(parts[k], g);
            if (!leq(hf, parts[k])) note("h(f)_k leaves [0, p_k]");
            if (!leq(hf, hg) && !leq(hg, hf)) note("[0, p_k] is not totally ordered on the sample");
            if (hf(k) != f(k)) note("h(f)_k does not recover f(k)");
            auto next = pointwise_sum(recombined, hf);
            if (!next) {
                note("components of h(f) are not orthogonal");
                break;
            }
            recombined = *next;
        }
        // w_bar(h(f)) = w(sum_k h(f)_k)
        if (recombined != f) note("sum of the components of h(f) differs from f: " + show(f));
        if (state(recombined) != state(f)) note("w_bar(h(f)) != w(f) at " + show(f));
        ++r.samples;
    }
    return r;
}

}  // namespace qlogic::divisible
