#include "qlogic/catalog.hpp"
#include "qlogic/error.hpp"
#include "qlogic/states.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qlogic;
namespace cat = qlogic::catalog;

namespace {

std::vector<std::vector<Rational>> values(const StatePolytope &p) {
    std::vector<std::vector<Rational>> out;
    for (const auto &v : p.vertices) out.push_back(v.values);
    return out;
}

}  // namespace

TEST(StateConstraints, ChainForcesHalf) {
    auto c2 = cat::chain(2);
    auto p = enumerate_vertex_states(c2);
    ASSERT_EQ(p.vertices.size(), 1u);
    EXPECT_EQ(p.vertices[0][c2.id("1/2")], Rational(1, 2));
    EXPECT_EQ(p.dimension, 0u);
}

TEST(StateConstraints, SystemShape) {
    auto sys = state_constraints(cat::mo(2));
    EXPECT_EQ(sys.variables, 6u);
    EXPECT_EQ(sys.nonnegative.size(), 6u);
    // only a_i + a_i' = 1 involves three distinct variables
    int non_zero_law = 0;
    for (const auto &eq : sys.equalities) {
        if (eq.terms.size() == 3) ++non_zero_law;
    }
    EXPECT_EQ(non_zero_law, 2);
}

TEST(VertexStates, Examples) {
    auto b2 = cat::boolean_powerset(2);
    auto p = enumerate_vertex_states(b2);
    ASSERT_EQ(p.vertices.size(), 2u);
    ElementId a = b2.id("{1}"), b = b2.id("{2}");
    EXPECT_EQ(p.vertices[0][a] + p.vertices[0][b], 1);
    EXPECT_EQ(p.vertices[0][a] * p.vertices[0][b], 0);
    EXPECT_EQ(p.dimension, 1u);

    auto m = enumerate_vertex_states(cat::mo(2));
    EXPECT_EQ(m.vertices.size(), 4u);
    EXPECT_EQ(m.dimension, 2u);
}

TEST(VertexStates, MatchBruteForceOracle) {
    for (const char *spec : {"boolean_powerset(1)", "boolean_powerset(2)", "boolean_powerset(3)", "chain(2)", "chain(5)",
                             "mo(2)", "mo(3)", "product(chain(2),chain(2))",
                             "horizontal_sum(boolean_powerset(2),chain(3))", "product(mo(1),chain(1))"}) {
        auto alg = cat::build(spec);
        EXPECT_EQ(values(enumerate_vertex_states(alg)), oracle::vertex_states(alg)) << spec;
    }
}

TEST(VertexStates, PowersetStatesAreDispersionFree) {
    for (int k = 1; k <= 4; ++k) {
        auto alg = cat::boolean_powerset(k);
        auto p = enumerate_vertex_states(alg);
        EXPECT_EQ(p.vertices.size(), static_cast<std::size_t>(k));
        for (const auto &v : p.vertices) {
            for (const auto &x : v.values) EXPECT_TRUE(x == 0 || x == 1);
        }
    }
}

TEST(VertexStates, SatisfyConstraintsExactly) {
    for (const char *spec : {"wright_triangle", "mo(4)", "chain(7)", "product(chain(2),chain(3))"}) {
        auto alg = cat::build(spec);
        auto p = enumerate_vertex_states(alg);
        for (const auto &v : p.vertices) {
            EXPECT_TRUE(is_state(alg, v));
            for (ElementId q = 0; q < alg.size(); ++q) {
                EXPECT_EQ(v[alg.supplement(q)], 1 - v[q]);
                for (ElementId r = 0; r < alg.size(); ++r) {
                    if (alg.leq(q, r)) EXPECT_LE(v[q], v[r]);
                }
            }
        }
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
            EXPECT_TRUE(lex_less(p.vertices[i - 1].values, p.vertices[i].values));
        }
    }
}

TEST(VertexStates, CarrierCap) {
    EXPECT_EQ(enumerate_vertex_states(cat::boolean_powerset(5)).vertices.size(), 5u);
    try {
        enumerate_vertex_states(cat::build("product(boolean_powerset(1),boolean_powerset(5))"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), Error::Kind::BoundExceeded);
    }
}

TEST(Separation, Examples) {
    auto b2 = cat::boolean_powerset(2);
    EXPECT_TRUE(is_separating(b2, enumerate_vertex_states(b2)).separating);
    auto c2 = cat::chain(2);
    EXPECT_TRUE(is_separating(c2, enumerate_vertex_states(c2)).separating);
    auto hs = cat::build("horizontal_sum(boolean_powerset(1),boolean_powerset(1))");
    auto p = enumerate_vertex_states(hs);
    auto r = is_separating(hs, p);
    EXPECT_EQ(r.separating, r.merged.empty());
}

TEST(VertexStates, InfeasibleSystemsHaveNoStates) {
    auto kind_of = [](const StateSystem &sys) {
        try {
            enumerate_vertices(sys);
        } catch (const Error &e) {
            return e.kind();
        }
        return Error::Kind::Malformed;
    };
    // inconsistent equalities
    StateSystem clash{1, {{{{0, 1}}, Rational(1)}, {{{0, 1}}, Rational(2)}}, {0}};
    EXPECT_EQ(kind_of(clash), Error::Kind::EmptyStateSpace);
    // unique solution with a negative coordinate
    StateSystem negative{2, {{{{0, 1}, {1, 1}}, Rational(1)}, {{{0, 1}, {1, -1}}, Rational(3)}}, {0, 1}};
    EXPECT_EQ(kind_of(negative), Error::Kind::EmptyStateSpace);
    // x0 = 1 + x1 but x0 + x2 = 1/2: infeasible only through x >= 0
    StateSystem squeezed{3, {{{{0, 1}, {1, -1}}, Rational(1)}, {{{0, 1}, {2, 1}}, Rational(1, 2)}}, {0, 1, 2}};
    EXPECT_EQ(kind_of(squeezed), Error::Kind::EmptyStateSpace);
    // relaxing the bound makes x = (1, 0, 0) the single vertex
    squeezed.equalities[1].rhs = Rational(1);
    auto poly = enumerate_vertices(squeezed);
    ASSERT_EQ(poly.vertices.size(), 1u);
    EXPECT_EQ(poly.vertices[0].values, (std::vector<Rational>{Rational(1), Rational(0), Rational(0)}));
}

TEST(VertexStates, AlgebraPathUsesTheSameEnumeration) {
    auto mo = cat::mo(2);
    EXPECT_EQ(values(enumerate_vertices(state_constraints(mo))), values(enumerate_vertex_states(mo)));
}
