#include "qlogic/catalog.hpp"
#include "qlogic/error.hpp"
#include "qlogic/serialization.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qlogic;
namespace cat = qlogic::catalog;

namespace {

Error::Kind build_error(const std::string &spec) {
    try {
        cat::build(spec);
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << spec << " was accepted";
    return Error::Kind::Malformed;
}

}  // namespace

TEST(Powerset, Examples) {
    EXPECT_EQ(cat::boolean_powerset(1).labels(), (std::vector<std::string>{"0", "1"}));
    auto b2 = cat::boolean_powerset(2);
    EXPECT_EQ(b2.size(), 4u);
    EXPECT_EQ(atoms(b2).size(), 2u);
    EXPECT_TRUE(is_boolean_by_compatibility(cat::boolean_powerset(3)));
    EXPECT_TRUE(is_boolean_by_lattice(cat::boolean_powerset(3)));
    auto b3 = cat::boolean_powerset(3);
    EXPECT_EQ(b3.label(b3.sum(b3.id("{1}"), b3.id("{2,3}"))), "1");
    EXPECT_EQ(b3.label(5), "{1,3}");
}

TEST(Chain, Examples) {
    EXPECT_TRUE(find_isomorphism(cat::chain(1), cat::boolean_powerset(1)));
    auto c2 = cat::chain(2);
    EXPECT_EQ(c2.labels(), (std::vector<std::string>{"0", "1/2", "1"}));
    EXPECT_EQ(c2.sum(1, 1), c2.unit());
    auto c3 = cat::chain(3);
    EXPECT_EQ(isotropic_index(c3, c3.id("1/3")), 3u);
    EXPECT_EQ(cat::chain(6).label(2), "2/6");
    for (int d = 2; d <= 12; ++d) {
        auto c = cat::chain(d);
        EXPECT_TRUE(is_atomic(c) && is_archimedean(c));
        EXPECT_FALSE(is_boolean(c));
    }
}

TEST(Mo, Examples) {
    EXPECT_TRUE(find_isomorphism(cat::mo(1), cat::boolean_powerset(2)));
    EXPECT_FALSE(is_boolean(cat::mo(2)));
    EXPECT_TRUE(check_coherence(cat::mo(2)).holds);
    EXPECT_EQ(cat::mo(2).labels(), (std::vector<std::string>{"0", "a1", "a1'", "a2", "a2'", "1"}));
    for (int n = 1; n <= 6; ++n) {
        auto m = cat::mo(n);
        EXPECT_TRUE(is_orthoalgebra(m).holds);
        EXPECT_EQ(is_boolean(m), n == 1);
    }
}

TEST(Wright, Examples) {
    auto w = cat::wright_triangle();
    EXPECT_EQ(w.size(), 14u);
    EXPECT_TRUE(is_orthoalgebra(w).holds);
    EXPECT_EQ(atoms(w).size(), 6u);
    ElementId a = w.id("a"), c = w.id("c"), e = w.id("e");
    EXPECT_TRUE(w.orthogonal(a, c) && w.orthogonal(c, e) && w.orthogonal(a, e));
    EXPECT_EQ(w.sum(a, c), w.id("b'"));
    EXPECT_FALSE(w.orthogonal(w.sum(a, c), e));
    EXPECT_FALSE(check_coherence(w).holds);
}

TEST(Constructions, Examples) {
    auto hs = cat::build("horizontal_sum(boolean_powerset(2),boolean_powerset(2))");
    EXPECT_TRUE(find_isomorphism(hs, cat::mo(2)));
    EXPECT_EQ(hs.label(1), "s1.{1}");
    auto p = cat::build("product(chain(2),chain(2))");
    EXPECT_EQ(p.size(), 9u);
    EXPECT_TRUE(is_atomic(p) && is_archimedean(p));
    EXPECT_FALSE(is_boolean(p));
    EXPECT_EQ(p.label(p.zero()), "(0,0)");
    EXPECT_EQ(p.label(p.unit()), "(1,1)");
    EXPECT_EQ(p.label(1), "(0,1/2)");
    EXPECT_TRUE(find_isomorphism(cat::build("product(boolean_powerset(1),boolean_powerset(1))"), cat::boolean_powerset(2)));
}

TEST(Constructions, BooleanOnlyWhereExpected) {
    EXPECT_TRUE(is_boolean(cat::build("product(boolean_powerset(2),mo(1))")));
    EXPECT_FALSE(is_boolean(cat::build("product(boolean_powerset(2),chain(2))")));
    EXPECT_FALSE(is_boolean(cat::build("horizontal_sum(boolean_powerset(2),boolean_powerset(3))")));
    EXPECT_TRUE(is_boolean(cat::build("horizontal_sum(boolean_powerset(2))")));
}

TEST(Specs, ParseAndPrint) {
    auto spec = cat::parse_spec(" product( chain(2) , mo(3) ) ");
    EXPECT_EQ(spec.to_string(), "product(chain(2),mo(3))");
    EXPECT_EQ(cat::parse_spec("wright_triangle").to_string(), "wright_triangle");
    EXPECT_EQ(build_error("chain(13)"), Error::Kind::BoundExceeded);
    EXPECT_EQ(build_error("boolean_powerset(0)"), Error::Kind::BoundExceeded);
    EXPECT_EQ(build_error("mo(7)"), Error::Kind::BoundExceeded);
    EXPECT_EQ(build_error("product(boolean_powerset(4),boolean_powerset(3))"), Error::Kind::BoundExceeded);
    EXPECT_EQ(build_error("torus(2)"), Error::Kind::Malformed);
    EXPECT_EQ(build_error("chain(2"), Error::Kind::Malformed);
    EXPECT_EQ(build_error("chain(2,3)"), Error::Kind::Malformed);
    EXPECT_EQ(build_error("wright_triangle(1)"), Error::Kind::Malformed);
}

TEST(Specs, SerializationIsDeterministic) {
    for (const char *spec : {"boolean_powerset(3)", "chain(5)", "mo(3)", "wright_triangle",
                             "product(chain(2),boolean_powerset(2))", "horizontal_sum(chain(3),mo(2))"}) {
        EXPECT_EQ(algebra_to_json(cat::build(spec)).dump(), algebra_to_json(cat::build(spec)).dump()) << spec;
        auto round = load_algebra(algebra_to_json(cat::build(spec)).dump());
        EXPECT_EQ(round.raw().sums, cat::build(spec).raw().sums);
    }
}
