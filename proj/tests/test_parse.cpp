#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lieclass/parse.hpp"
#include "support.hpp"

using namespace lieclass;
using namespace lieclass::testing;

TEST_CASE("single equation") {
    InputDocument doc = parse_document("u_xy + y*u_x = 0\n");
    REQUIRE(doc.equations.size() == 1);
    CHECK(doc.equations[0] == op({{1, 1, rf(1)}, {1, 0, ry()}}));
}

TEST_CASE("derivative suffixes count letters in any order") {
    CHECK(parse_operator("u_xxy") == dpow(2, 1));
    CHECK(parse_operator("u_xyx") == dpow(2, 1));
    CHECK(parse_operator("u") == DiffOp(rf(1)));
}

TEST_CASE("rational coefficients and powers") {
    DiffOp d = parse_operator("(3*x+6)/x^2 * u_xx - 18/x^3 * u");
    CHECK(d.coeff(2, 0) == (rf(3) * rx() + rf(6)) / (rx() * rx()));
    CHECK(d.coeff(0, 0) == rf(-18) / (rx() * rx() * rx()));
}

TEST_CASE("equations move the right side over") {
    InputDocument doc = parse_document("u_xx = y*u_y\n");
    CHECK(doc.equations[0] == op({{2, 0, rf(1)}, {0, 1, -ry()}}));
}

TEST_CASE("comments, blank lines and directives") {
    InputDocument doc = parse_document(
        "# a comment\n"
        "@depth 12\n"
        "@unknown w\n"
        "\n"
        "w_xy = 0  # trailing comment\n");
    CHECK(doc.options.at("depth") == "12");
    CHECK(doc.unknown == "w");
    REQUIRE(doc.equations.size() == 1);
    CHECK(doc.equations[0] == dpow(1, 1));
}

TEST_CASE("error diagnostics") {
    CHECK_THROWS_AS(parse_document("u_x * u_y = 0\n"), ParseError);
    try {
        parse_document("u_x * u_y = 0\n");
    } catch (const ParseError& e) {
        CHECK(e.code == "nonlinear");
        CHECK(e.line == 1);
    }
    try {
        parse_document("u_x + v = 0\n");
    } catch (const ParseError& e) {
        CHECK(e.code == "unknown-symbol");
    }
    try {
        parse_document("u_x + 1 = 0\n");
    } catch (const ParseError& e) {
        CHECK(e.code == "inhomogeneous");
    }
    try {
        parse_document("u_x + = 0\n");
    } catch (const ParseError& e) {
        CHECK(e.code == "syntax");
    }
    CHECK_THROWS_AS(parse_document("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_document("u_x^2 = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_document("1/u = 0\n"), ParseError);
}

TEST_CASE("print-parse round trip") {
    const char* src =
        "u_xxx = (3*x+6)/x^2 * u_xx + 6*y/x^3 * u_xy + (2*x-12)/x^3 * u_x - 18/x^3 * u\n"
        "u_xxy + 6/x^2 * u_xy = 0\n";
    InputDocument doc = parse_document(src);
    InputDocument doc2 = parse_document(render_document(doc));
    CHECK(doc.unknown == doc2.unknown);
    CHECK(doc.equations == doc2.equations);
}

TEST_CASE("scalar expression parser") {
    CHECK(parse_ratfunc("x^2 - y^2") == rx() * rx() - ry() * ry());
    CHECK(parse_ratfunc("1/2") == rf(1, 2));
    CHECK_THROWS_AS(parse_ratfunc("x +"), ParseError);
}
