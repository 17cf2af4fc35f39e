#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "prefcore/model_io.hpp"

using namespace prefcore;
using prefcore::testing::load_fixture;
using prefcore::testing::read_fixture;

TEST_CASE("every fixture parses and survives a print round trip") {
    const char* names[] = {"fig1-cpnet", "fig2-lptree", "fig3-cpnet",
                           "fig4-cprnet", "fig5-cprnet", "fig7-lptree"};
    for (const char* name : names) {
        CAPTURE(name);
        ModelDocument doc = parse_model(read_fixture(name));
        ModelDocument again = parse_model(print_model(doc));
        CHECK(document_equal(doc, again));
        // Printing is canonical: a second round trip is byte-stable.
        CHECK(print_model(doc) == print_model(again));
    }
}

TEST_CASE("fixture kinds and sections") {
    auto fig3 = load_fixture("fig3-cpnet");
    CHECK(fig3.kind == ModelKind::Cpnet);
    CHECK(fig3.cpnet.has_value());
    CHECK_FALSE(fig3.constraints.has_value());

    auto fig5 = load_fixture("fig5-cprnet");
    CHECK(fig5.kind == ModelKind::Cprnet);
    CHECK(fig5.cprnet.has_value());
    REQUIRE(fig5.constraints.has_value());
    CHECK(fig5.constraints->constraints.size() == 4);

    auto fig7 = load_fixture("fig7-lptree");
    CHECK(fig7.kind == ModelKind::Lptree);
    CHECK(fig7.lptree.has_value());
    REQUIRE(fig7.constraints.has_value());
    CHECK(fig7.constraints->constraints.size() == 8);
}

TEST_CASE("printing expands constraint sugar to table form") {
    auto fig5 = load_fixture("fig5-cprnet");
    std::string text = print_model(fig5);
    // 'if A=a1 then B=b2' forbids exactly (a1, b1).
    CHECK(text.find("table A B : a1 b2 , a2 b1 , a2 b2") != std::string::npos);
    // 'iff A=a1 D=d2' keeps the two agreeing tuples.
    CHECK(text.find("table A D : a1 d2 , a2 d1") != std::string::npos);
    CHECK(text.find("iff") == std::string::npos);
}

TEST_CASE("tokens split on punctuation without spaces") {
    ModelDocument tight = parse_model(
        "kind cpnet\n"
        "var A a1 a2\n"
        "cpt A\n"
        ":a1>a2\n");
    ModelDocument spaced = parse_model(
        "kind cpnet\n"
        "var A a1 a2\n"
        "cpt A\n"
        ": a1 > a2  # best first\n");
    CHECK(document_equal(tight, spaced));
}

TEST_CASE("documents with an empty constraints section stay distinguishable") {
    ModelDocument with = parse_model(
        "kind cpnet\nvar A a1 a2\ncpt A\n: a1 > a2\nconstraints\n");
    CHECK(with.constraints.has_value());
    CHECK(with.constraints->constraints.empty());

    ModelDocument without =
        parse_model("kind cpnet\nvar A a1 a2\ncpt A\n: a1 > a2\n");
    CHECK_FALSE(without.constraints.has_value());
    CHECK_FALSE(document_equal(with, without));
}

TEST_CASE("syntax errors carry their position") {
    try {
        parse_model("kind cpnet\nvar A a1 a2\ncpt A\n: a1 > a2\n: a1 > a2\n");
        FAIL("duplicate row context not diagnosed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(e.line() == 5);
    }
}

TEST_CASE("malformed documents are rejected") {
    // No kind line.
    CHECK_ERROR_CODE(parse_model("var A a1 a2\n"), ParseError);
    CHECK_ERROR_CODE(parse_model("kind something\n"), ParseError);
    CHECK_ERROR_CODE(parse_model(""), ParseError);
    // No variables.
    CHECK_ERROR_CODE(parse_model("kind cpnet\ncpt A\n: a1 > a2\n"), ParseError);
    // Duplicate variable names surface from structural validation.
    CHECK_ERROR_CODE(
        parse_model("kind cpnet\nvar A a1 a2\nvar A a1 a2\ncpt A\n: a1 > a2\n"),
        InvalidModel);
    // Missing row for the a2 context.
    CHECK_ERROR_CODE(parse_model("kind cpnet\nvar A a1 a2\nvar B b1 b2\n"
                                 "cpt A\n: a1 > a2\ncpt B : A\na1 : b1 > b2\n"),
                     ParseError);
    // Importance statements belong to cprnet documents only.
    CHECK_ERROR_CODE(parse_model("kind cpnet\nvar A a1 a2\nvar B b1 b2\n"
                                 "cpt A\n: a1 > a2\ncpt B\n: b1 > b2\n"
                                 "ari A B\n"),
                     ParseError);
    // Tree nodes belong to lptree documents.
    CHECK_ERROR_CODE(
        parse_model("kind cpnet\nvar A a1 a2\nnode 1 A\n: a1 > a2\n"),
        ParseError);
    // A child declared before its parent.
    CHECK_ERROR_CODE(parse_model("kind lptree\nvar A a1 a2\nvar B b1 b2\n"
                                 "node 2 B parent 1 labels a1 a2\n: b1 > b2\n"
                                 "node 1 A\n: a1 > a2\n"),
                     ParseError);
    // Labels must name values of the parent's variable.
    CHECK_ERROR_CODE(parse_model("kind lptree\nvar A a1 a2\nvar B b1 b2\n"
                                 "node 1 A\n: a1 > a2\n"
                                 "node 2 B parent 1 labels b1 b2\n: b1 > b2\n"),
                     ParseError);
    // Symmetric partial-row preferences.
    CHECK_ERROR_CODE(parse_model("kind cpnet\nvar A a1 a2\ncpt A\n"
                                 ": partial a1 > a2 , a2 > a1\n"),
                     ParseError);
    // Constraint tuple arity must match the scope.
    CHECK_ERROR_CODE(parse_model("kind cpnet\nvar A a1 a2\ncpt A\n: a1 > a2\n"
                                 "constraints\ntable A : a1 a1\n"),
                     ParseError);
    // Unknown value in constraint sugar.
    CHECK_ERROR_CODE(parse_model("kind cpnet\nvar A a1 a2\nvar B b1 b2\n"
                                 "cpt A\n: a1 > a2\ncpt B\n: b1 > b2\n"
                                 "constraints\nif A=a9 then B=b1\n"),
                     ParseError);
}

TEST_CASE("document equality distinguishes kinds and content") {
    auto a = load_fixture("fig3-cpnet");
    auto b = load_fixture("fig3-cpnet");
    CHECK(document_equal(a, b));
    auto c = load_fixture("fig4-cprnet");
    CHECK_FALSE(document_equal(a, c));
}
