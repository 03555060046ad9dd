#include <doctest.h>

#include "wact/magma.hpp"

using namespace wact;

namespace {
const FieldSpec Q = FieldSpec::rationals();

std::vector<Variable> vars(std::initializer_list<const char*> names) {
    std::vector<Variable> out;
    for (const char* n : names) out.push_back(Variable{n});
    return out;
}
}  // namespace

TEST_CASE("word parsing round-trips and rejects junk") {
    CHECK(parse_word("((x*y)*z)").str() == "((x*y)*z)");
    CHECK(parse_word("  ( x * ( y1 * z ) ) ").str() == "(x*(y1*z))");
    CHECK(parse_word("x").degree() == 1);
    CHECK_THROWS(parse_word("(x*y"));
    CHECK_THROWS(parse_word("(x y)"));
    CHECK_THROWS(parse_word("(X*y)"));
    CHECK_THROWS(parse_word("x)"));
}

TEST_CASE("multilinear basis sizes are Catalan(n-1) * n!") {
    CHECK(enumerate_multilinear(vars({"x", "y"})).size() == 2);
    CHECK(enumerate_multilinear(vars({"f", "x", "y"})).size() == 12);
    CHECK(enumerate_multilinear(vars({"f", "g", "x", "y"})).size() == 120);
    CHECK(enumerate_multilinear(vars({"f", "g", "x", "y", "z"})).size() == 1680);
    CHECK_THROWS(enumerate_multilinear(std::vector<Variable>(6, Variable{"x"})));
}

TEST_CASE("degree-2 and degree-3 orders are the fixed ones") {
    auto ord2 = enumerate_multilinear(vars({"x", "y"}));
    CHECK(ord2.words[0].str() == "(x*y)");
    CHECK(ord2.words[1].str() == "(y*x)");

    auto ord3 = enumerate_multilinear(vars({"f", "x", "y"}));
    const char* expected[12] = {"(f*(x*y))", "(f*(y*x))", "((x*y)*f)", "((y*x)*f)",
                                "((f*y)*x)", "((f*x)*y)", "((y*f)*x)", "((x*f)*y)",
                                "(x*(f*y))", "(y*(f*x))", "(x*(y*f))", "(y*(x*f))"};
    for (std::size_t i = 0; i < 12; ++i) CHECK(ord3.words[i].str() == expected[i]);
}

TEST_CASE("every word appears exactly once in an ordering") {
    auto ord = enumerate_multilinear(vars({"f", "g", "x", "y"}));
    CHECK(ord.index.size() == 120);
    for (const auto& w : ord.words) {
        auto ls = w.leaves();
        CHECK(ls.size() == 4);
    }
}

TEST_CASE("substitution replaces every occurrence and keeps multilinearity") {
    SUBCASE("identity substitution") {
        MultilinearPoly p = MultilinearPoly::monomial(vars({"x", "y", "z"}), Q, parse_word("(x*(y*z))"),
                                                      Scalar(Q, 1));
        MultilinearPoly q = substitute(p, Variable{"z"}, parse_word("z"));
        CHECK(q.terms() == p.terms());
    }
    SUBCASE("Leibniz substitution x -> (g*x)") {
        MultilinearPoly p(vars({"x", "y", "z"}), Q);
        p.add_term(parse_word("((x*y)*z)"), Scalar(Q, 1));
        p.add_term(parse_word("((x*z)*y)"), Scalar(Q, -1));
        p.add_term(parse_word("(x*(y*z))"), Scalar(Q, -1));
        MultilinearPoly q = substitute(p, Variable{"x"}, parse_word("(g*x)"));
        CHECK(q.is_multilinear());
        CHECK(q.terms().count(parse_word("(((g*x)*y)*z)")) == 1);
        CHECK(q.terms().count(parse_word("(((g*x)*z)*y)")) == 1);
        CHECK(q.terms().count(parse_word("((g*x)*(y*z))")) == 1);
        CHECK(q.terms().size() == 3);
    }
    SUBCASE("variable collision is rejected") {
        MultilinearPoly p = MultilinearPoly::monomial(vars({"x", "y"}), Q, parse_word("(x*y)"), Scalar(Q, 1));
        CHECK_THROWS(substitute(p, Variable{"x"}, parse_word("(y*w)")));
    }
}

TEST_CASE("border multiplication wraps every monomial") {
    MultilinearPoly p(vars({"f", "x", "y"}), Q);
    p.add_term(parse_word("(f*(x*y))"), Scalar(Q, 1));
    p.add_term(parse_word("((f*x)*y)"), Scalar(Q, -1));
    p.add_term(parse_word("((f*y)*x)"), Scalar(Q, 1));
    MultilinearPoly q = border_multiply(p, Variable{"g"}, Side::left);
    CHECK(q.is_multilinear());
    CHECK(q.terms().count(parse_word("(g*(f*(x*y)))")) == 1);
    CHECK(q.terms().count(parse_word("(g*((f*x)*y))")) == 1);
    CHECK(q.terms().count(parse_word("(g*((f*y)*x))")) == 1);

    MultilinearPoly zero(vars({"x", "y"}), Q);
    CHECK(border_multiply(zero, Variable{"z"}, Side::right).is_zero());

    MultilinearPoly xy = MultilinearPoly::monomial(vars({"x", "y"}), Q, parse_word("(x*y)"), Scalar(Q, 1));
    CHECK(border_multiply(xy, Variable{"z"}, Side::right).terms().count(parse_word("((x*y)*z)")) == 1);
}

TEST_CASE("permute_vars is a group action") {
    auto v3 = vars({"x", "y", "z"});
    MultilinearPoly p(v3, Q);
    p.add_term(parse_word("((x*y)*z)"), Scalar(Q, 1));
    p.add_term(parse_word("(z*(y*x))"), Scalar(Q, 3));

    SUBCASE("identity acts trivially") {
        CHECK(permute_vars(p, {}, v3).terms() == p.terms());
    }
    SUBCASE("commutator is antisymmetric") {
        auto v2 = vars({"x", "y"});
        MultilinearPoly c(v2, Q);
        c.add_term(parse_word("(x*y)"), Scalar(Q, 1));
        c.add_term(parse_word("(y*x)"), Scalar(Q, -1));
        MultilinearPoly swapped = permute_vars(c, {{"x", "y"}, {"y", "x"}}, v2);
        CHECK((swapped + c).is_zero());
    }
    SUBCASE("composition equals composite relabeling") {
        std::map<std::string, std::string> s1{{"x", "y"}, {"y", "z"}, {"z", "x"}};
        std::map<std::string, std::string> s2{{"x", "z"}, {"y", "x"}, {"z", "y"}};
        MultilinearPoly lhs = permute_vars(permute_vars(p, s1, v3), s2, v3);
        std::map<std::string, std::string> comp;
        for (const auto& [k, mid] : s1) comp[k] = s2.at(mid);
        CHECK(lhs.terms() == permute_vars(p, comp, v3).terms());
    }
}

TEST_CASE("to_row and from_row invert each other") {
    auto ord = enumerate_multilinear(vars({"f", "x", "y"}));
    SUBCASE("first basis monomial") {
        MultilinearPoly p = MultilinearPoly::monomial(ord.vars, Q, parse_word("(f*(x*y))"), Scalar(Q, 1));
        Vec row = to_row(p, ord);
        CHECK(row[0] == Scalar(Q, 1));
        for (std::size_t i = 1; i < 12; ++i) CHECK(row[i].is_zero());
    }
    SUBCASE("zero polynomial") {
        MultilinearPoly z(ord.vars, Q);
        CHECK(is_zero(to_row(z, ord)));
    }
    SUBCASE("round trip both ways") {
        MultilinearPoly p(ord.vars, Q);
        p.add_term(parse_word("(f*(x*y))"), Scalar(Q, -1));
        p.add_term(parse_word("((f*y)*x)"), Scalar(Q, -1));
        p.add_term(parse_word("((f*x)*y)"), Scalar(Q, 1));
        Vec row = to_row(p, ord);
        CHECK(from_row(row, ord).terms() == p.terms());
        Vec row2 = to_row(from_row(row, ord), ord);
        CHECK(row == row2);
    }
}
