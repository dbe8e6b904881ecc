#include <string>

#include "actmed/abox.hpp"
#include "actmed/errors.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace actmed;

TEST_CASE("assertions behave as a set") {
    ABox box;
    CHECK(box.insert(Assertion::cls("Inquiry", "Message01")));
    CHECK_FALSE(box.insert(Assertion::cls("Inquiry", "Message01")));
    CHECK(box.insert(Assertion::prop("hasContent", "Message01", Term::individual("FIR01"))));
    CHECK(box.size() == 2);
    CHECK(box.contains(Assertion::cls("Inquiry", "Message01")));
    CHECK_FALSE(box.contains(Assertion::cls("Inquiry", "Message02")));
}

TEST_CASE("accessors see subjects, objects and classes") {
    ABox box;
    box.insert(Assertion::cls("Inquiry", "m"));
    box.insert(Assertion::cls("Directive", "m"));
    box.insert(Assertion::prop("hasContent", "m", Term::individual("c")));
    box.insert(Assertion::prop("hasLanguage", "m", Term::lit("fipa-sl0")));

    CHECK(box.classes_of("m") == std::vector<std::string>{"Directive", "Inquiry"});
    CHECK(box.individuals() == std::set<std::string>{"c", "m"});
    CHECK(box.object_of("m", "hasContent") == Term::individual("c"));
    CHECK(box.object_of("m", "hasLanguage") == Term::lit("fipa-sl0"));
    CHECK_FALSE(box.object_of("m", "hasQuery").has_value());
    CHECK(box.objects_of("m", "hasContent").size() == 1);
}

TEST_CASE("merge is union") {
    ABox a;
    a.insert(Assertion::cls("A", "x"));
    ABox b;
    b.insert(Assertion::cls("A", "x"));
    b.insert(Assertion::cls("B", "y"));
    a.merge(b);
    CHECK(a.size() == 2);
}

TEST_CASE("block parsing handles prefixes, markers and literals") {
    std::string text =
        "@prefix rdf <http://www.w3.org/1999/02/22-rdf-syntax-ns#>\n"
        "@message Message01\n"
        "# a comment line\n"
        "Message01 rdf:type Inquiry\n"
        "Message01 hasLanguage 'fipa-sl0'\n"
        "Message01 hasContent FIR01\n";
    AssertionBlockDoc doc = parse_assertion_block(text);
    CHECK(doc.message_id == "Message01");
    CHECK(doc.prefixes.at("rdf") == "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
    CHECK(doc.abox.size() == 3);
    CHECK(doc.abox.contains(Assertion::cls("Inquiry", "Message01")));
    CHECK(doc.abox.contains(Assertion::prop("hasLanguage", "Message01", Term::lit("fipa-sl0"))));
}

TEST_CASE("undeclared prefixes are rejected") {
    CHECK_THROWS_AS(parse_assertion_block("x foo:type C\n"), Error);
    CHECK_THROWS_AS(parse_assertion_block("x p med:val\n"), Error);
    CHECK_NOTHROW(parse_assertion_block("x rdf:type C\n"));  // rdf is built in
}

TEST_CASE("malformed triples are rejected") {
    CHECK_THROWS_AS(parse_assertion_block("onlytwo tokens\n"), SyntaxError);
    CHECK_THROWS_AS(parse_assertion_block("a b c d\n"), SyntaxError);
    CHECK_THROWS_AS(parse_assertion_block("x p 'unterminated\n"), SyntaxError);
}

TEST_CASE("dump-parse identity on random assertion sets") {
    testsupport::Rng rng(202);
    for (int i = 0; i < 1000; ++i) {
        ABox box = testsupport::random_abox(rng);
        AssertionBlockDoc doc = parse_assertion_block(dump_assertion_block(box, "MessageX"));
        CHECK(doc.abox == box);
        CHECK(doc.message_id == "MessageX");
    }
}
