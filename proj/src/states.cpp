#include "qlogic/states.hpp"

#include "qlogic/error.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace qlogic {

StateSystem state_constraints(const EffectAlgebra &alg) {
    StateSystem sys;
    sys.variables = alg.size();
    for (ElementId a = 0; a < alg.size(); ++a) {
        for (ElementId b = a; b < alg.size(); ++b) {
            ElementId c = alg.sum(a, b);
            if (c == kUndefined) continue;
            std::map<ElementId, int> coeff;
            coeff[a] += 1;
            coeff[b] += 1;
            coeff[c] -= 1;
            LinearEquation eq;
            for (auto [e, k] : coeff) {
                if (k != 0) eq.terms.emplace_back(e, k);
            }
            if (!eq.terms.empty()) sys.equalities.push_back(std::move(eq));
        }
    }
    sys.equalities.push_back({{{alg.unit(), 1}}, Rational(1)});
    for (ElementId p = 0; p < alg.size(); ++p) sys.nonnegative.push_back(p);
    return sys;
}

namespace {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Reduces [A | b] in place; returns the pivot column of every nonzero row.
std::vector<std::size_t> row_reduce(Matrix &m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && m[pick][col] == 0) ++pick;
        if (pick == m.size()) continue;
        std::swap(m[row], m[pick]);
        Rational inv = 1 / m[row][col];
        for (auto &x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t k = col; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank_of(Matrix m) {
    if (m.empty()) return 0;
    return row_reduce(m, m.front().size()).size();
}

/// Solves the square system rows * t = rhs; nullopt when singular.
std::optional<Row> solve_square(const std::vector<const Row *> &rows, const std::vector<const Rational *> &rhs) {
    const std::size_t d = rows.size();
    Matrix m(d, Row(d + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = (*rows[i])[j];
        m[i][d] = *rhs[i];
    }
    if (row_reduce(m, d).size() != d) return std::nullopt;
    Row t(d);
    for (std::size_t i = 0; i < d; ++i) t[i] = m[i][d];
    return t;
}

/// a_i . t >= bound_i
struct Halfspace {
    Row coeff;
    Rational bound;

    bool operator<(const Halfspace &o) const {
        if (coeff != o.coeff) return lex_less(coeff, o.coeff);
        return bound < o.bound;
    }
};

Rational dot(const Row &a, const Row &t) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * t[i];
    return s;
}

[[noreturn]] void empty_state_space() {
    throw Error(Error::Kind::EmptyStateSpace, "the algebra admits no state");
}

}  // namespace

StatePolytope enumerate_vertex_states(const EffectAlgebra &alg) {
    if (alg.size() > kStateCarrierCap) {
        throw Error(Error::Kind::BoundExceeded, "vertex enumeration is limited to 32 elements");
    }
    return enumerate_vertices(state_constraints(alg));
}

StatePolytope enumerate_vertices(const StateSystem &sys) {
    const std::size_t n = sys.variables;
    Matrix m;
    for (const auto &eq : sys.equalities) {
        Row row(n + 1);
        for (auto [e, k] : eq.terms) row[e] += k;
        row[n] = eq.rhs;
        m.push_back(std::move(row));
    }
    const auto pivots = row_reduce(m, n);
    for (std::size_t r = pivots.size(); r < m.size(); ++r) {
        if (m[r][n] != 0) empty_state_space();
    }

    // v = offset + basis * t over the free variables.
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_vars;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_vars.push_back(c);
    }
    const std::size_t d = free_vars.size();
    std::vector<Rational> offset(n);
    Matrix basis(n, Row(d));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        offset[pivots[r]] = m[r][n];
        for (std::size_t j = 0; j < d; ++j) basis[pivots[r]][j] = -m[r][free_vars[j]];
    }
    for (std::size_t j = 0; j < d; ++j) basis[free_vars[j]][j] = 1;

    std::set<Halfspace> unique_rows;
    for (ElementId p : sys.nonnegative) {
        Halfspace h{basis[p], -offset[p]};
        auto lead = std::find_if(h.coeff.begin(), h.coeff.end(), [](const Rational &x) { return x != 0; });
        if (lead == h.coeff.end()) {
            if (h.bound > 0) empty_state_space();
            continue;
        }
        Rational scale = abs(*lead);
        for (auto &x : h.coeff) x /= scale;
        h.bound /= scale;
        unique_rows.insert(std::move(h));
    }
    const std::vector<Halfspace> rows(unique_rows.begin(), unique_rows.end());
    const std::size_t k = rows.size();

    auto values_at = [&](const Row &t) {
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = offset[i] + dot(basis[i], t);
        return v;
    };

    std::set<std::vector<Rational>, decltype(&lex_less)> found(&lex_less);
    if (d == 0) {
        found.insert(values_at(Row{}));
    } else if (k >= d) {
        mpz_class combos;
        mpz_bin_uiui(combos.get_mpz_t(), k, d);
        if (combos > 50'000'000) {
            throw Error(Error::Kind::BoundExceeded, "too many active-set choices for exact enumeration");
        }
        std::vector<std::size_t> pick(d);
        for (std::size_t i = 0; i < d; ++i) pick[i] = i;
        std::vector<const Row *> active(d);
        std::vector<const Rational *> rhs(d);
        while (true) {
            for (std::size_t i = 0; i < d; ++i) {
                active[i] = &rows[pick[i]].coeff;
                rhs[i] = &rows[pick[i]].bound;
            }
            if (auto t = solve_square(active, rhs)) {
                bool feasible = std::all_of(rows.begin(), rows.end(),
                                            [&](const Halfspace &h) { return dot(h.coeff, *t) >= h.bound; });
                if (feasible) found.insert(values_at(*t));
            }
            std::size_t i = d;
            while (i > 0 && pick[i - 1] == k - d + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if (found.empty()) empty_state_space();

    StatePolytope poly;
    for (const auto &v : found) poly.vertices.push_back(StateVector{v});
    Matrix diffs;
    for (std::size_t i = 1; i < poly.vertices.size(); ++i) {
        Row diff(n);
        for (std::size_t j = 0; j < n; ++j) diff[j] = poly.vertices[i][j] - poly.vertices[0][j];
        diffs.push_back(std::move(diff));
    }
    poly.dimension = rank_of(std::move(diffs));
    return poly;
}

bool is_state(const EffectAlgebra &alg, const StateVector &state) {
    if (state.values.size() != alg.size() || state[alg.unit()] != 1) return false;
    for (ElementId a = 0; a < alg.size(); ++a) {
        if (state[a] < 0) return false;
        for (ElementId b = a; b < alg.size(); ++b) {
            ElementId c = alg.sum(a, b);
            if (c != kUndefined && state[a] + state[b] != state[c]) return false;
        }
    }
    return true;
}

SeparationReport is_separating(const EffectAlgebra &alg, const StatePolytope &polytope) {
    SeparationReport report;
    for (ElementId p = 0; p < alg.size(); ++p) {
        for (ElementId q = p + 1; q < alg.size(); ++q) {
            bool split = std::any_of(polytope.vertices.begin(), polytope.vertices.end(),
                                     [&](const StateVector &s) { return s[p] != s[q]; });
            if (!split) report.merged.emplace_back(p, q);
        }
    }
    report.separating = report.merged.empty();
    return report;
}

}  // namespace qlogic
