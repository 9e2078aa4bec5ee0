#include "qlogic/effect_algebra.hpp"

#include "qlogic/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qlogic {

std::vector<ElementId> members(ElementSet s) {
    std::vector<ElementId> out;
    out.reserve(static_cast<std::size_t>(std::popcount(s)));
    while (s) {
        out.push_back(static_cast<ElementId>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

RawTable RawTable::from_triples(const std::vector<std::string> &labels, std::string_view zero,
                                std::string_view unit,
                                const std::vector<std::array<std::string, 3>> &triples) {
    RawTable raw;
    raw.labels = labels;
    std::unordered_map<std::string, ElementId> index;
    for (ElementId i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], i).second) {
            throw Error(Error::Kind::Malformed, "duplicate element label", {labels[i]});
        }
    }
    auto lookup = [&](std::string_view label) {
        auto it = index.find(std::string(label));
        if (it == index.end()) {
            throw Error(Error::Kind::Malformed, "unknown element label", {std::string(label)});
        }
        return it->second;
    };
    raw.zero = lookup(zero);
    raw.unit = lookup(unit);
    raw.sums.assign(labels.size() * labels.size(), kUndefined);
    for (const auto &[a_label, b_label, c_label] : triples) {
        ElementId a = lookup(a_label), b = lookup(b_label), c = lookup(c_label);
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            ElementId existing = raw.at(x, y);
            if (existing != kUndefined && existing != c) {
                throw Error(Error::Kind::CommutativityViolation, "conflicting sums for the same pair",
                            {labels[x], labels[y]});
            }
            raw.set(x, y, c);
        }
    }
    return raw;
}

ElementSet EffectAlgebra::all() const {
    return size() == 64 ? ~ElementSet{0} : (ElementSet{1} << size()) - 1;
}

std::optional<ElementId> EffectAlgebra::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<ElementId>(it - labels_.begin());
}

ElementId EffectAlgebra::id(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw Error(Error::Kind::Malformed, "unknown element label", {std::string(label)});
}

RawTable EffectAlgebra::raw() const {
    return RawTable{labels_, zero_, unit_, sums_};
}

EffectAlgebra validate(const RawTable &raw, std::size_t size_cap) {
    using K = Error::Kind;
    const std::size_t n = raw.size();
    if (size_cap > kHardSizeCap) {
        throw Error(K::BoundExceeded, "size cap above the hard limit of 64");
    }
    if (n == 0) {
        throw Error(K::Malformed, "empty carrier");
    }
    if (n > size_cap) {
        throw Error(K::BoundExceeded, "carrier has " + std::to_string(n) + " elements, cap is " +
                                          std::to_string(size_cap));
    }
    if (std::set<std::string>(raw.labels.begin(), raw.labels.end()).size() != n) {
        throw Error(K::Malformed, "element labels are not distinct");
    }
    if (raw.zero >= n || raw.unit >= n || raw.sums.size() != n * n) {
        throw Error(K::Malformed, "table shape does not match the carrier");
    }
    for (ElementId c : raw.sums) {
        if (c != kUndefined && c >= n) throw Error(K::Malformed, "sum table refers to a missing element");
    }
    const auto &L = raw.labels;
    if (raw.zero == raw.unit) {
        throw Error(K::Degenerate, "zero and unit coincide", {L[raw.zero]});
    }

    // (i) commutativity
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = a + 1; b < n; ++b) {
            if (raw.at(a, b) != raw.at(b, a)) {
                ElementId x = raw.at(a, b) != kUndefined ? a : b;
                ElementId y = x == a ? b : a;
                throw Error(K::CommutativityViolation, "a+b and b+a differ", {L[x], L[y]});
            }
        }
    }
    // (iv') p orthogonal to 1 forces p = 0
    for (ElementId p = 0; p < n; ++p) {
        if (p != raw.zero && raw.at(p, raw.unit) != kUndefined) {
            throw Error(K::UnitIsotropic, "nonzero element orthogonal to the unit", {L[p]});
        }
    }
    // (iii) unique supplement
    std::vector<ElementId> supplement(n, kUndefined);
    for (ElementId p = 0; p < n; ++p) {
        for (ElementId q = 0; q < n; ++q) {
            if (raw.at(p, q) != raw.unit) continue;
            if (supplement[p] != kUndefined) {
                throw Error(K::SupplementNotUnique, "element has two supplements", {L[p], L[supplement[p]], L[q]});
            }
            supplement[p] = q;
        }
        if (supplement[p] == kUndefined) {
            throw Error(K::SupplementMissing, "no q with p+q = 1", {L[p]});
        }
    }
    // (ii) associativity
    for (ElementId q = 0; q < n; ++q) {
        for (ElementId r = 0; r < n; ++r) {
            ElementId qr = raw.at(q, r);
            if (qr == kUndefined) continue;
            for (ElementId p = 0; p < n; ++p) {
                ElementId p_qr = raw.at(p, qr);
                if (p_qr == kUndefined) continue;
                ElementId pq = raw.at(p, q);
                if (pq == kUndefined || raw.at(pq, r) != p_qr) {
                    throw Error(K::AssociativityViolation, "p+(q+r) defined but (p+q)+r is not equal to it",
                                {L[p], L[q], L[r]});
                }
            }
        }
    }

    EffectAlgebra alg;
    alg.labels_ = raw.labels;
    alg.zero_ = raw.zero;
    alg.unit_ = raw.unit;
    alg.sums_ = raw.sums;
    alg.supplement_ = std::move(supplement);
    alg.partners_.assign(n, 0);
    alg.down_.assign(n, 0);
    alg.up_.assign(n, 0);
    alg.difference_.assign(n * n, kUndefined);
    for (ElementId p = 0; p < n; ++p) {
        for (ElementId r = 0; r < n; ++r) {
            ElementId q = raw.at(p, r);
            if (q == kUndefined) continue;
            alg.partners_[p] |= bit(r);
            alg.up_[p] |= bit(q);
            alg.down_[q] |= bit(p);
            if (alg.difference_[q * n + p] == kUndefined) alg.difference_[q * n + p] = r;
        }
    }
    return alg;
}

OrderStructure derive_order(const EffectAlgebra &alg) {
    OrderStructure out;
    const std::size_t n = alg.size();
    out.leq.assign(n, std::vector<bool>(n, false));
    out.supplement.resize(n);
    for (ElementId p = 0; p < n; ++p) {
        out.supplement[p] = alg.supplement(p);
        for (ElementId q = 0; q < n; ++q) out.leq[p][q] = alg.leq(p, q);
    }
    return out;
}

OrthoalgebraCheck is_orthoalgebra(const EffectAlgebra &alg) {
    for (ElementId p = 0; p < alg.size(); ++p) {
        if (p != alg.zero() && alg.orthogonal(p, p)) return {false, p};
    }
    return {};
}

std::optional<ElementId> meet(const EffectAlgebra &alg, ElementId p, ElementId q) {
    ElementSet lower = alg.down_set(p) & alg.down_set(q);
    for (ElementId m : members(lower)) {
        if ((alg.down_set(m) & lower) == lower) return m;
    }
    return std::nullopt;
}

std::optional<ElementId> join(const EffectAlgebra &alg, ElementId p, ElementId q) {
    ElementSet upper = alg.up_set(p) & alg.up_set(q);
    for (ElementId j : members(upper)) {
        if ((alg.up_set(j) & upper) == upper) return j;
    }
    return std::nullopt;
}

bool is_sharp(const EffectAlgebra &alg, ElementId p) {
    auto m = meet(alg, p, alg.supplement(p));
    return m && *m == alg.zero();
}

std::vector<ElementId> sharp_elements(const EffectAlgebra &alg) {
    std::vector<ElementId> out;
    for (ElementId p = 0; p < alg.size(); ++p) {
        if (is_sharp(alg, p)) out.push_back(p);
    }
    return out;
}

std::vector<ElementId> atoms(const EffectAlgebra &alg) {
    std::vector<ElementId> out;
    for (ElementId p = 0; p < alg.size(); ++p) {
        if (p != alg.zero() && alg.down_set(p) == (bit(alg.zero()) | bit(p))) out.push_back(p);
    }
    return out;
}

bool is_atomic(const EffectAlgebra &alg) {
    ElementSet atom_set = 0;
    for (ElementId a : atoms(alg)) atom_set |= bit(a);
    for (ElementId p = 0; p < alg.size(); ++p) {
        if (p != alg.zero() && (alg.down_set(p) & atom_set) == 0) return false;
    }
    return true;
}

std::optional<unsigned> isotropic_index(const EffectAlgebra &alg, ElementId p) {
    if (p == alg.zero()) {
        throw Error(Error::Kind::ZeroHasNoIndex, "the zero element has no isotropic index", {alg.label(p)});
    }
    ElementId multiple = p;
    unsigned count = 1;
    while (true) {
        ElementId next = alg.sum(multiple, p);
        if (next == kUndefined) return count;
        multiple = next;
        if (++count > alg.size()) return std::nullopt;
    }
}

bool is_archimedean(const EffectAlgebra &alg) {
    for (ElementId p = 0; p < alg.size(); ++p) {
        if (p != alg.zero() && !isotropic_index(alg, p)) return false;
    }
    return true;
}

std::vector<Decomposition> are_compatible(const EffectAlgebra &alg, ElementId p, ElementId q) {
    std::vector<Decomposition> out;
    for (ElementId z : members(alg.down_set(p) & alg.down_set(q))) {
        ElementId x = alg.difference(p, z);
        ElementId y = alg.difference(q, z);
        // x+z = p, so x+y+z is defined exactly when p+y is.
        if (alg.orthogonal(p, y)) out.push_back({x, y, z});
    }
    return out;
}

CoherenceCheck check_coherence(const EffectAlgebra &alg) {
    if (!is_orthoalgebra(alg).holds) {
        throw Error(Error::Kind::NotAnOrthoalgebra, "coherence is only defined for orthoalgebras");
    }
    const std::size_t n = alg.size();
    for (ElementId p = 0; p < n; ++p) {
        for (ElementId q = p; q < n; ++q) {
            ElementId pq = alg.sum(p, q);
            if (pq == kUndefined) continue;
            for (ElementId r = q; r < n; ++r) {
                if (alg.orthogonal(p, r) && alg.orthogonal(q, r) && !alg.orthogonal(pq, r)) {
                    return {false, std::array{p, q, r}};
                }
            }
        }
    }
    return {};
}

bool is_boolean_by_compatibility(const EffectAlgebra &alg) {
    if (!is_orthoalgebra(alg).holds || !check_coherence(alg).holds) return false;
    for (ElementId p = 0; p < alg.size(); ++p) {
        for (ElementId q = p + 1; q < alg.size(); ++q) {
            if (are_compatible(alg, p, q).empty()) return false;
        }
    }
    return true;
}

bool is_boolean_by_lattice(const EffectAlgebra &alg) {
    const std::size_t n = alg.size();
    std::vector<ElementId> meets(n * n), joins(n * n);
    for (ElementId p = 0; p < n; ++p) {
        for (ElementId q = 0; q < n; ++q) {
            auto m = meet(alg, p, q);
            auto j = join(alg, p, q);
            if (!m || !j) return false;
            meets[p * n + q] = *m;
            joins[p * n + q] = *j;
        }
    }
    auto M = [&](ElementId a, ElementId b) { return meets[a * n + b]; };
    auto J = [&](ElementId a, ElementId b) { return joins[a * n + b]; };
    for (ElementId p = 0; p < n; ++p) {
        ElementId c = alg.supplement(p);
        if (M(p, c) != alg.zero() || J(p, c) != alg.unit()) return false;
        for (ElementId q = 0; q < n; ++q) {
            bool disjoint = M(p, q) == alg.zero();
            if (disjoint != alg.orthogonal(p, q)) return false;
            if (disjoint && alg.sum(p, q) != J(p, q)) return false;
            for (ElementId r = 0; r < n; ++r) {
                if (M(p, J(q, r)) != J(M(p, q), M(p, r))) return false;
            }
        }
    }
    return true;
}

bool is_boolean(const EffectAlgebra &alg) {
    bool by_compat = is_boolean_by_compatibility(alg);
    if (by_compat != is_boolean_by_lattice(alg)) {
        throw std::logic_error("Boolean deciders disagree");
    }
    return by_compat;
}

bool is_cancellative(const EffectAlgebra &alg) {
    const std::size_t n = alg.size();
    for (ElementId a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        for (ElementId x : members(alg.partners(a))) {
            ElementId s = alg.sum(a, x);
            if (seen[s]) return false;
            seen[s] = true;
        }
    }
    return true;
}

StructureReport analyze(const EffectAlgebra &alg) {
    StructureReport r;
    r.is_orthoalgebra = is_orthoalgebra(alg).holds;
    r.is_orthomodular_poset = r.is_orthoalgebra && check_coherence(alg).holds;
    r.is_boolean = is_boolean(alg);
    r.sharp_elements = sharp_elements(alg);
    r.atoms = atoms(alg);
    for (ElementId p = 0; p < alg.size(); ++p) {
        if (p != alg.zero()) r.iota[p] = isotropic_index(alg, p);
    }
    r.is_atomic = is_atomic(alg);
    r.is_archimedean = is_archimedean(alg);
    for (ElementId p = 0; p < alg.size(); ++p) {
        for (ElementId q = p + 1; q < alg.size(); ++q) {
            if (are_compatible(alg, p, q).empty()) r.incompatible_pairs.emplace_back(p, q);
        }
    }
    return r;
}

namespace {

struct Signature {
    std::size_t partners, below, above;
    unsigned index;
    friend bool operator==(const Signature &, const Signature &) = default;
};

Signature signature(const EffectAlgebra &alg, ElementId p) {
    unsigned index = 0;
    if (p != alg.zero()) index = isotropic_index(alg, p).value_or(0);
    return {static_cast<std::size_t>(std::popcount(alg.partners(p))),
            static_cast<std::size_t>(std::popcount(alg.down_set(p))),
            static_cast<std::size_t>(std::popcount(alg.up_set(p))), index};
}

class IsomorphismSearch {
  public:
    IsomorphismSearch(const EffectAlgebra &a, const EffectAlgebra &b) : a_(a), b_(b), map_(a.size(), kUndefined) {
        for (ElementId p = 0; p < a.size(); ++p) {
            sig_a_.push_back(signature(a, p));
            sig_b_.push_back(signature(b, p));
        }
    }

    std::optional<std::vector<ElementId>> run() {
        if (!assign(a_.zero(), b_.zero()) || !assign(a_.unit(), b_.unit())) return std::nullopt;
        if (extend(0)) return map_;
        return std::nullopt;
    }

  private:
    bool consistent(ElementId v) const {
        for (ElementId u = 0; u < a_.size(); ++u) {
            if (map_[u] == kUndefined) continue;
            ElementId sa = a_.sum(v, u);
            ElementId sb = b_.sum(map_[v], map_[u]);
            if ((sa == kUndefined) != (sb == kUndefined)) return false;
            if (sa != kUndefined && map_[sa] != kUndefined && map_[sa] != sb) return false;
            ElementId w = a_.difference(v, u);
            if (w != kUndefined && map_[w] != kUndefined && b_.sum(map_[u], map_[w]) != map_[v]) return false;
        }
        return true;
    }

    bool assign(ElementId v, ElementId image) {
        if (sig_a_[v] != sig_b_[image] || used_ & bit(image)) return false;
        map_[v] = image;
        used_ |= bit(image);
        if (consistent(v)) return true;
        map_[v] = kUndefined;
        used_ &= ~bit(image);
        return false;
    }

    bool extend(ElementId v) {
        while (v < a_.size() && map_[v] != kUndefined) ++v;
        if (v == a_.size()) return true;
        for (ElementId image = 0; image < b_.size(); ++image) {
            if (!assign(v, image)) continue;
            if (extend(v + 1)) return true;
            map_[v] = kUndefined;
            used_ &= ~bit(image);
        }
        return false;
    }

    const EffectAlgebra &a_;
    const EffectAlgebra &b_;
    std::vector<ElementId> map_;
    std::vector<Signature> sig_a_, sig_b_;
    ElementSet used_ = 0;
};

}  // namespace

std::optional<std::vector<ElementId>> find_isomorphism(const EffectAlgebra &a, const EffectAlgebra &b) {
    if (a.size() != b.size()) return std::nullopt;
    auto map = IsomorphismSearch(a, b).run();
    if (!map) return std::nullopt;
    for (ElementId p = 0; p < a.size(); ++p) {
        for (ElementId q = 0; q < a.size(); ++q) {
            ElementId sa = a.sum(p, q);
            ElementId sb = b.sum((*map)[p], (*map)[q]);
            if (sa == kUndefined ? sb != kUndefined : sb != (*map)[sa]) {
                throw std::logic_error("isomorphism search returned an inconsistent map");
            }
        }
    }
    return map;
}

}  // namespace qlogic
