#include <catch2/catch_amalgamated.hpp>

#include <beltrami/expr.hpp>

#include <cmath>

#include "exprgen.hpp"
#include "testutil.hpp"

using namespace beltrami;

namespace {

double eval_at(const std::string& src, double u, double v) {
    return eval(parse(src), u, v);
}

}  // namespace

TEST_CASE("grammar basics") {
    SECTION("product of calls") {
        const Expr e = parse("cosh(u)*cos(v)");
        const auto& n = e.root();
        REQUIRE(n.kind == ast::Node::Kind::Binary);
        CHECK(n.op == '*');
        REQUIRE(n.lhs->kind == ast::Node::Kind::Call);
        CHECK(n.lhs->fn == FnKind::Cosh);
        CHECK(n.lhs->lhs->kind == ast::Node::Kind::Variable);
        REQUIRE(n.rhs->kind == ast::Node::Kind::Call);
        CHECK(n.rhs->fn == FnKind::Cos);
    }
    SECTION("power is right-associative") {
        CHECK(eval_at("2^3^2", 0, 0) == Catch::Approx(512.0));
        CHECK(eval_at("2^-1", 0, 0) == Catch::Approx(0.5));
        CHECK(eval_at("-2^2", 0, 0) == Catch::Approx(-4.0));
    }
    SECTION("precedence and whitespace") {
        CHECK(eval_at(" 1 + 2*3 ^ 2 ", 0, 0) == Catch::Approx(19.0));
        CHECK(eval_at("(1+2)*3", 0, 0) == Catch::Approx(9.0));
        CHECK(eval_at("6/3/2", 0, 0) == Catch::Approx(1.0));
        CHECK(eval_at("1-2-3", 0, 0) == Catch::Approx(-4.0));
    }
    SECTION("constants") {
        CHECK(eval_at("pi", 0, 0) == Catch::Approx(M_PI));
        CHECK(eval_at("e", 0, 0) == Catch::Approx(M_E));
        CHECK(eval_at("1e-3", 0, 0) == Catch::Approx(0.001));
    }
}

TEST_CASE("parse errors carry 1-based byte offsets") {
    SECTION("unterminated call") {
        try {
            parse("sin(u");
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& err) {
            CHECK(err.offset == 6);
        }
    }
    SECTION("unknown identifier") {
        try {
            parse("2*foo(u)");
            FAIL("expected UnknownIdentifier");
        } catch (const UnknownIdentifier& err) {
            CHECK(err.offset == 3);
        }
    }
    SECTION("arity errors") {
        CHECK_THROWS_AS(parse("sin()"), ArityError);
        CHECK_THROWS_AS(parse("sin(u, v)"), ArityError);
    }
    SECTION("trailing input") { CHECK_THROWS_AS(parse("1+2)"), SyntaxError); }
    SECTION("empty input") { CHECK_THROWS_AS(parse(""), SyntaxError); }
}

TEST_CASE("unparse round trip reproduces the tree") {
    auto gen = testutil::rng(311);
    testutil::ExprGen eg(gen);
    for (int rep = 0; rep < 120; ++rep) {
        const std::string src = eg.gen(4);
        const Expr e = parse(src);
        const std::string printed = unparse(e);
        const Expr e2 = parse(printed);
        REQUIRE(tree_equal(e, e2));
        // fixed point after one iteration
        REQUIRE(unparse(e2) == printed);
    }
    CHECK(unparse(parse("2 ^ 3 ^ 2")) == "2^3^2");
    CHECK(unparse(parse("(2^3)^2")) == "(2^3)^2");
    CHECK(unparse(parse("1-(2-3)")) == "1-(2-3)");
}

TEST_CASE("eval_jet value slot equals scalar evaluation") {
    auto gen = testutil::rng(1234);
    testutil::ExprGen eg(gen);
    std::uniform_real_distribution<double> point(-2.0, 2.0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::string src = eg.gen(6);
        const Expr e = parse(src);
        const double u = point(gen), v = point(gen);
        const double direct = eval(e, u, v);
        const Jet j = eval_jet(e, Jet::seed(u, Var::U, 3), Jet::seed(v, Var::V, 3));
        REQUIRE(std::isfinite(direct));
        REQUIRE(testutil::rel_err(j.value(), direct) < 1e-14);
    }
}

TEST_CASE("eval_jet derivative examples") {
    SECTION("u*u at 3") {
        const Jet j = eval_jet(parse("u*u"), Jet::seed(3, Var::U, 2), Jet::seed(0, Var::V, 2));
        CHECK(j.coeff(0, 0) == Catch::Approx(9.0));
        CHECK(j.coeff(1, 0) == Catch::Approx(6.0));
        CHECK(j.coeff(2, 0) == Catch::Approx(1.0));
    }
    SECTION("pi is a constant jet") {
        const Jet j = eval_jet(parse("pi"), Jet::seed(1, Var::U, 2), Jet::seed(2, Var::V, 2));
        CHECK(j.value() == Catch::Approx(M_PI));
        CHECK(j.coeff(1, 0) == 0.0);
        CHECK(j.coeff(0, 1) == 0.0);
    }
    SECTION("cosh(u) matches the jet lift") {
        const Jet j =
            eval_jet(parse("cosh(u)"), Jet::seed(0, Var::U, 2), Jet::seed(0, Var::V, 2));
        CHECK(j.coeff(0, 0) == Catch::Approx(1.0));
        CHECK(j.coeff(2, 0) == Catch::Approx(0.5));
    }
    SECTION("variable exponent falls back to exp(b ln a)") {
        const Jet j = eval_jet(parse("u^v"), Jet::seed(2.0, Var::U, 3), Jet::seed(1.5, Var::V, 3));
        CHECK(j.value() == Catch::Approx(std::pow(2.0, 1.5)));
        const double dv = testutil::fd_d1([](double t) { return std::pow(2.0, t); }, 1.5);
        CHECK(testutil::rel_err(j.partial(0, 1), dv) < 1e-6);
    }
}

TEST_CASE("evaluation errors carry the offending span") {
    const Expr e = parse("1 + sqrt(u-9)");
    try {
        eval_jet(e, Jet::seed(1.0, Var::U, 3), Jet::seed(0.0, Var::V, 3));
        FAIL("expected EvalError");
    } catch (const EvalError& err) {
        CHECK(err.offset == 5);   // span of the sqrt call
        CHECK(err.end == 14);
    }
    CHECK_THROWS_AS(
        eval_jet(parse("1/(u-u)"), Jet::seed(1.0, Var::U, 3), Jet::seed(0.0, Var::V, 3)),
        EvalError);
}

TEST_CASE("profile expressions restrict to u") {
    CHECK(parse("cosh(u)").uses(Var::U));
    CHECK_FALSE(parse("cosh(u)").uses(Var::V));
    CHECK(parse("sin(u)*cos(v)").uses(Var::V));
}
