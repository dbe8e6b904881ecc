#include <string>

#include "actmed/errors.hpp"
#include "actmed/sexpr.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace actmed;

TEST_CASE("atoms, literals and lists parse") {
    Sexpr e = parse_sexpr("(query-ref :sender a (nested 'two words'))");
    REQUIRE(e.is_list());
    REQUIRE(e.items.size() == 4);
    CHECK(e.items[0] == Sexpr::atom("query-ref"));
    CHECK(e.items[1] == Sexpr::atom(":sender"));
    CHECK(e.items[3].is_list());
    CHECK(e.items[3].items[1] == Sexpr::literal("two words"));
}

TEST_CASE("comments and surrounding whitespace are skipped") {
    Sexpr e = parse_sexpr("; leading\n  (a ; inline\n   b)\n; trailing\n");
    REQUIRE(e.is_list());
    CHECK(e.items.size() == 2);
}

TEST_CASE("literal escapes round-trip") {
    for (std::string s : {"", "it's", "back\\slash", "a'b\\c'", "tab\there"}) {
        Sexpr lit = Sexpr::literal(s);
        CHECK(parse_sexpr(lit.to_string()) == lit);
    }
}

TEST_CASE("malformed input raises a positioned error") {
    CHECK_THROWS_AS(parse_sexpr("(a b"), SyntaxError);
    CHECK_THROWS_AS(parse_sexpr("a) b"), SyntaxError);
    CHECK_THROWS_AS(parse_sexpr("'unterminated"), SyntaxError);
    CHECK_THROWS_AS(parse_sexpr(""), SyntaxError);
    CHECK_THROWS_AS(parse_sexpr("(a) (b)"), SyntaxError);

    try {
        parse_sexpr("(a 'x");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& err) {
        CHECK(err.position > 0);
    }
}

TEST_CASE("print-parse identity on random trees") {
    testsupport::Rng rng(101);
    for (int i = 0; i < 2000; ++i) {
        Sexpr tree = testsupport::random_sexpr(rng);
        CAPTURE(tree.to_string());
        CHECK(parse_sexpr(tree.to_string()) == tree);
    }
}
