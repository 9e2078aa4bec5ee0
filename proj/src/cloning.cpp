#include "qlogic/cloning.hpp"

#include "qlogic/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlogic {

bool CloningWitness::is_symmetric() const {
    for (ElementId p = 0; p < size; ++p) {
        for (ElementId q = p + 1; q < size; ++q) {
            if (at(p, q) != at(q, p)) return false;
        }
    }
    return true;
}

std::string_view status_name(SearchStatus status) {
    switch (status) {
        case SearchStatus::WitnessFound: return "witness-found";
        case SearchStatus::NoWitness: return "no-witness";
        case SearchStatus::Aborted: return "aborted";
    }
    return "unknown";
}

namespace {

/// cell[z] = cell[x] + cell[y]
struct SumConstraint {
    std::uint32_t x, y, z;
};

class CloningSearch {
  public:
    CloningSearch(const EffectAlgebra &alg, const SearchConfig &config) : alg_(alg), n_(alg.size()), config_(config) {}

    SearchOutcome run() {
        auto start = std::chrono::steady_clock::now();
        setup();
        if (propagate_all()) {
            dfs(0);
        }
        SearchOutcome out;
        out.witnesses = std::move(witnesses_);
        out.nodes_explored = nodes_;
        if (aborted_) {
            out.status = SearchStatus::Aborted;
        } else {
            out.status = out.witnesses.empty() ? SearchStatus::NoWitness : SearchStatus::WitnessFound;
        }
        out.wall_time = std::chrono::steady_clock::now() - start;
        return out;
    }

  private:
    std::uint32_t cell(ElementId p, ElementId q) const { return static_cast<std::uint32_t>(p * n_ + q); }

    void setup() {
        domains_.assign(n_ * n_, alg_.all());
        std::vector<bool> fixed(n_ * n_, false);
        auto fix = [&](ElementId p, ElementId q, ElementId value) {
            domains_[cell(p, q)] &= bit(value);
            fixed[cell(p, q)] = true;
        };
        const ElementId zero = alg_.zero(), unit = alg_.unit();
        for (ElementId p = 0; p < n_; ++p) {
            fix(p, unit, p);
            fix(unit, p, p);
            // c(0,q) + c(0,q) = c(0+0,q) = c(0,q), so cancellativity forces 0.
            fix(zero, p, zero);
            fix(p, zero, zero);
        }

        for (ElementId a = 0; a < n_; ++a) {
            if (a == zero) continue;
            for (ElementId b = a; b < n_; ++b) {
                ElementId s = alg_.sum(a, b);
                if (b == zero || s == kUndefined) continue;
                for (ElementId q = 0; q < n_; ++q) {
                    constraints_.push_back({cell(a, q), cell(b, q), cell(s, q)});
                    constraints_.push_back({cell(q, a), cell(q, b), cell(q, s)});
                }
            }
        }
        watches_.assign(n_ * n_, {});
        for (std::uint32_t c = 0; c < constraints_.size(); ++c) {
            const auto &k = constraints_[c];
            watches_[k.x].push_back(c);
            if (k.y != k.x) watches_[k.y].push_back(c);
            watches_[k.z].push_back(c);
        }
        queued_.assign(constraints_.size(), false);

        std::vector<bool> ordered(n_ * n_, false);
        auto push_order = [&](std::uint32_t v) {
            if (fixed[v] || ordered[v]) return;
            ordered[v] = true;
            order_.push_back(v);
        };
        const auto atom_list = atoms(alg_);
        for (ElementId a : atom_list) {
            for (ElementId b : atom_list) push_order(cell(a, b));
        }
        for (std::uint32_t v = 0; v < n_ * n_; ++v) push_order(v);
    }

    void set_domain(std::uint32_t v, ElementSet value) {
        trail_.emplace_back(v, domains_[v]);
        domains_[v] = value;
    }

    void enqueue_watchers(std::uint32_t v) {
        for (std::uint32_t c : watches_[v]) {
            if (!queued_[c]) {
                queued_[c] = true;
                queue_.push_back(c);
            }
        }
    }

    bool revise(const SumConstraint &k) {
        ElementSet dx = domains_[k.x], dy = domains_[k.y], dz = domains_[k.z];
        ElementSet nx = 0, ny = 0, nz = 0;
        const bool same_cell = k.x == k.y;
        for (ElementId x : members(dx)) {
            ElementSet candidates = same_cell ? bit(x) & dy : dy;
            for (ElementId y : members(candidates & alg_.partners(x))) {
                ElementId s = alg_.sum(x, y);
                if (contains(dz, s)) {
                    nx |= bit(x);
                    ny |= bit(y);
                    nz |= bit(s);
                }
            }
        }
        if (nx == 0 || nz == 0) return false;
        for (auto [v, after] : {std::pair{k.x, nx}, std::pair{k.y, ny}, std::pair{k.z, nz}}) {
            if (after != domains_[v]) {
                set_domain(v, after);
                enqueue_watchers(v);
            }
        }
        return true;
    }

    bool drain() {
        bool ok = true;
        while (!queue_.empty()) {
            std::uint32_t c = queue_.back();
            queue_.pop_back();
            queued_[c] = false;
            if (ok && !revise(constraints_[c])) ok = false;
        }
        return ok;
    }

    bool propagate_all() {
        for (std::uint32_t c = 0; c < constraints_.size(); ++c) {
            queued_[c] = true;
            queue_.push_back(c);
        }
        for (ElementSet d : domains_) {
            if (d == 0) return false;
        }
        return drain();
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [v, old] = trail_.back();
            trail_.pop_back();
            domains_[v] = old;
        }
    }

    void record_solution() {
        CloningWitness w;
        w.size = n_;
        w.table.resize(n_ * n_);
        for (std::size_t v = 0; v < n_ * n_; ++v) w.table[v] = members(domains_[v]).front();
        if (!verify_witness(alg_, w).ok) {
            throw std::logic_error("search produced a table that fails verification");
        }
        witnesses_.push_back(std::move(w));
        if (!config_.enumerate_all) done_ = true;
    }

    void dfs(std::size_t depth) {
        if (depth == order_.size()) {
            record_solution();
            return;
        }
        const std::uint32_t v = order_[depth];
        for (ElementId value : members(domains_[v])) {
            if (++nodes_ > config_.node_budget) {
                aborted_ = true;
                return;
            }
            const std::size_t mark = trail_.size();
            bool ok = true;
            if (domains_[v] != bit(value)) {
                set_domain(v, bit(value));
                enqueue_watchers(v);
                ok = drain();
            }
            if (ok) dfs(depth + 1);
            undo(mark);
            if (done_ || aborted_) return;
        }
    }

    const EffectAlgebra &alg_;
    const std::size_t n_;
    const SearchConfig config_;
    std::vector<ElementSet> domains_;
    std::vector<SumConstraint> constraints_;
    std::vector<std::vector<std::uint32_t>> watches_;
    std::vector<std::uint32_t> order_;
    std::vector<std::pair<std::uint32_t, ElementSet>> trail_;
    std::vector<std::uint32_t> queue_;
    std::vector<bool> queued_;
    std::vector<CloningWitness> witnesses_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
    bool aborted_ = false;
};

}  // namespace

SearchOutcome find_cloning_bimorphism(const EffectAlgebra &alg, const SearchConfig &config) {
    return CloningSearch(alg, config).run();
}

CloningWitness meet_witness(const EffectAlgebra &alg) {
    if (!is_boolean(alg)) {
        throw Error(Error::Kind::NotBoolean, "the meet table is a cloning witness only on Boolean algebras");
    }
    CloningWitness w;
    w.size = alg.size();
    w.table.resize(w.size * w.size);
    for (ElementId p = 0; p < w.size; ++p) {
        for (ElementId q = 0; q < w.size; ++q) w.table[p * w.size + q] = *meet(alg, p, q);
    }
    return w;
}

WitnessCheck verify_witness(const EffectAlgebra &alg, const CloningWitness &candidate) {
    const std::size_t n = alg.size();
    if (candidate.size != n || candidate.table.size() != n * n) {
        return {false, "table shape does not match the algebra"};
    }
    for (ElementId v : candidate.table) {
        if (v >= n) return {false, "table entry outside the carrier"};
    }
    const auto &L = alg.labels();
    auto c = [&](ElementId p, ElementId q) { return candidate.at(p, q); };
    auto name = [&](ElementId p, ElementId q) { return "c(" + L[p] + ", " + L[q] + ")"; };
    for (ElementId p = 0; p < n; ++p) {
        if (c(p, alg.unit()) != p) return {false, "unit law: " + name(p, alg.unit()) + " = " + L[c(p, alg.unit())]};
        if (c(alg.unit(), p) != p) return {false, "unit law: " + name(alg.unit(), p) + " = " + L[c(alg.unit(), p)]};
    }
    // c(1,1) = 1 is the unit law at p = 1; kept as its own line for the report.
    if (c(alg.unit(), alg.unit()) != alg.unit()) return {false, "normalization: c(1, 1) != 1"};

    auto check_additivity = [&](bool rows) -> WitnessCheck {
        for (ElementId p = 0; p < n; ++p) {
            for (ElementId a = 0; a < n; ++a) {
                for (ElementId b = a; b < n; ++b) {
                    ElementId s = alg.sum(a, b);
                    if (s == kUndefined) continue;
                    auto at = [&](ElementId x) { return rows ? c(p, x) : c(x, p); };
                    auto nm = [&](ElementId x) { return rows ? name(p, x) : name(x, p); };
                    ElementId total = alg.sum(at(a), at(b));
                    if (total == at(s)) continue;
                    std::string where = rows ? "c(" + L[p] + ", " + L[a] + "+" + L[b] + ")"
                                             : "c(" + L[a] + "+" + L[b] + ", " + L[p] + ")";
                    std::string rhs = total == kUndefined ? "undefined" : L[total];
                    return {false, "additivity: " + nm(s) + " = " + where + " = " + L[at(s)] + " but " + nm(a) +
                                       " + " + nm(b) + " = " + L[at(a)] + " + " + L[at(b)] + " = " + rhs};
                }
            }
        }
        return {};
    };
    if (auto r = check_additivity(true); !r.ok) return r;
    return check_additivity(false);
}

LemmaReport check_witness_lemmas(const EffectAlgebra &alg, const CloningWitness &witness) {
    if (!is_orthoalgebra(alg).holds) {
        throw Error(Error::Kind::NotAnOrthoalgebra, "witness lemmas only hold on orthoalgebras");
    }
    LemmaReport report;
    for (ElementId p = 0; p < alg.size(); ++p) {
        for (ElementId q = 0; q < alg.size(); ++q) {
            if ((witness.at(p, q) == alg.zero()) != alg.orthogonal(p, q)) {
                report.zero_iff_orthogonal_violations.emplace_back(p, q);
            }
        }
        if (witness.at(p, p) != p) report.idempotence_violations.push_back(p);
    }
    return report;
}

MackeyDecomposition compatibility_core(const EffectAlgebra &alg, const CloningWitness &witness, ElementId p,
                                       ElementId q) {
    MackeyDecomposition d{witness.at(p, q), witness.at(p, alg.supplement(q)), witness.at(alg.supplement(p), q)};
    const auto &L = alg.labels();
    std::vector<std::string> names{L[p], L[q], L[d.common], L[d.left], L[d.right]};
    if (alg.sum(d.common, d.left) != p || alg.sum(d.common, d.right) != q || !alg.orthogonal(p, d.right)) {
        throw Error(Error::Kind::DecompositionMismatch, "p = r+a, q = r+b fails for the witness values", names);
    }
    auto found = are_compatible(alg, p, q);
    if (found.size() != 1 || !(found.front() == Decomposition{d.left, d.right, d.common})) {
        throw Error(Error::Kind::DecompositionMismatch, "witness decomposition is not the unique one", names);
    }
    return d;
}

}  // namespace qlogic
