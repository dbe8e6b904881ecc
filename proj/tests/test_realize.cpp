#include <string>

#include "actmed/abox.hpp"
#include "actmed/codec.hpp"
#include "actmed/ontology.hpp"
#include "actmed/realize.hpp"
#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace actmed;
using namespace actmed::onto;

namespace {

std::string data_path(const std::string& rel) { return std::string(ACTMED_DATA_DIR "/") + rel; }

Ontology stack(const std::string& application) {
    Ontology o = load_ontology(data_path("ontologies/common.ont"));
    o.merge(load_ontology(data_path("ontologies/domain.ont")));
    o.merge(load_ontology(data_path("ontologies/" + application)));
    return o;
}

ABox vitalsign_basic() {
    msg::TranslatorProfile profile =
        msg::load_profile(data_path("profiles/medicalfipa.profile"));
    msg::StructuredMessage m = msg::parse(
        {msg::Syntax::FipaAcl,
         "(query-ref :sender ConditionsChecker :receiver VitalSignAgent :language fipa-sl0"
         " :reply-with Message01 :content ((any ?x (vital-sign ?x Helen))))"});
    return msg::to_abox(m, profile);
}

}  // namespace

TEST_CASE("the vital-sign query realizes its source-side memberships") {
    ABox derived = realize(stack("medicalfipa.ont"), vitalsign_basic());

    ABox expected;
    expected.insert(Assertion::cls("Inquiry", "Message01"));
    expected.insert(Assertion::cls("Directive", "Message01"));
    expected.insert(Assertion::cls("CommunicationAct", "Message01"));
    expected.insert(Assertion::cls("ReportAct", "FIR01"));
    expected.insert(Assertion::cls("ContentExpression", "FIR01"));
    expected.insert(Assertion::cls("ContentExpression", "RE01"));
    expected.insert(Assertion::cls("MedicalConcept", "VS01"));
    CHECK(derived == expected);
}

TEST_CASE("the saturated query is recognized by the target definitions") {
    ABox m_sat = saturate(stack("medicalfipa.ont"), vitalsign_basic());
    ABox derived = realize(stack("aingeru.ont"), m_sat);

    ABox expected;
    expected.insert(Assertion::cls("VitalSignInfRef", "RE01"));
    expected.insert(Assertion::cls("VitalSignInfGive", "FIR01"));
    expected.insert(Assertion::cls("A-VitalSignQueryRef", "Message01"));
    CHECK(derived == expected);
}

TEST_CASE("recognition chains through nested definitions") {
    Ontology o = parse_ontology(
        "Q EquivalentTo A and (p some R)\n"
        "R EquivalentTo B and (q some C)\n");
    ABox m;
    m.insert(Assertion::cls("A", "x"));
    m.insert(Assertion::prop("p", "x", Term::individual("y")));
    m.insert(Assertion::cls("B", "y"));
    m.insert(Assertion::prop("q", "y", Term::individual("z")));
    m.insert(Assertion::cls("C", "z"));

    ABox sat = saturate(o, m);
    CHECK(sat.contains(Assertion::cls("R", "y")));
    CHECK(sat.contains(Assertion::cls("Q", "x")));
}

TEST_CASE("realization adds class memberships only") {
    testsupport::Rng rng(505);
    for (int i = 0; i < 200; ++i) {
        Ontology o = testsupport::random_tbox(rng);
        ABox m = testsupport::random_abox(rng);
        ABox added = realize(o, m);
        for (const Assertion& a : added.assertions()) {
            CHECK(a.is_class());
            CHECK_FALSE(m.contains(a));
        }
    }
}

TEST_CASE("saturation contains its input and is a fixpoint") {
    testsupport::Rng rng(606);
    for (int i = 0; i < 200; ++i) {
        Ontology o = testsupport::random_tbox(rng);
        ABox m = testsupport::random_abox(rng);
        ABox sat = saturate(o, m);
        for (const Assertion& a : m.assertions()) CHECK(sat.contains(a));
        CHECK(realize(o, sat).empty());
        CHECK(saturate(o, sat) == sat);
    }
}

TEST_CASE("no structural recognition concludes a force primitive") {
    Ontology o = parse_ontology(
        "Assertive SubClassOf CommunicationAct\n"
        "Directive EquivalentTo ReportAct and (hasQuery some RefExpression)\n");
    ABox m;
    m.insert(Assertion::cls("ReportAct", "x"));
    m.insert(Assertion::prop("hasQuery", "x", Term::individual("y")));
    m.insert(Assertion::cls("RefExpression", "y"));
    CHECK_FALSE(saturate(o, m).contains(Assertion::cls("Directive", "x")));
    // the subsumption direction still works
    ABox n;
    n.insert(Assertion::cls("Directive", "z"));
    CHECK(realize(o, n).contains(Assertion::cls("ReportAct", "z")));
}

TEST_CASE("existentials never introduce individuals") {
    Ontology o = parse_ontology("A SubClassOf p some B\n");
    ABox m;
    m.insert(Assertion::cls("A", "x"));
    ABox sat = saturate(o, m);
    CHECK(sat == m);
    CHECK(sat.individuals() == std::set<std::string>{"x"});
}

TEST_CASE("satisfies checks a definition body directly") {
    Ontology o = stack("aingeru.ont");
    ABox m = saturate(stack("medicalfipa.ont"), vitalsign_basic());
    ClassExpr body = ClassExpr::conj(
        {ClassExpr::atomic("RefExpression"),
         ClassExpr::some("hasSubject", ClassExpr::atomic("VitalSign"))});
    CHECK(satisfies(o, m, "RE01", body));
    CHECK_FALSE(satisfies(o, m, "FIR01", body));
}

TEST_CASE("library realization matches the reference realization") {
    testsupport::Rng rng(707);
    for (int i = 0; i < 1200; ++i) {
        Ontology o = testsupport::random_tbox(rng);
        ABox m = testsupport::random_abox(rng);
        CAPTURE(i);
        CHECK(saturate(o, m) == testsupport::oracle_saturate(o, m));
    }
}
