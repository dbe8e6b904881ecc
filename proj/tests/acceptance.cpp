// Acceptance runner: executes the eight shipping criteria end to end and
// prints one verdict line per criterion. Criteria 1-3 drive the installed
// command-line binary; the rest exercise the library against independent
// reference implementations.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "actmed/checker.hpp"
#include "actmed/codec.hpp"
#include "actmed/commitments.hpp"
#include "actmed/engine.hpp"
#include "actmed/mediator.hpp"
#include "actmed/realize.hpp"
#include "actmed/registry.hpp"
#include "support/generators.hpp"
#include "support/handcrafted.hpp"
#include "support/oracles.hpp"

using namespace actmed;

namespace {

int failures = 0;

std::string data_path(const std::string& rel) { return std::string(ACTMED_DATA_DIR "/") + rel; }
std::string golden_path(const std::string& rel) {
    return std::string(ACTMED_GOLDEN_DIR "/") + rel;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) return "<unreadable: " + path + ">";
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct Scratch {
    std::filesystem::path dir;
    Scratch() {
        dir = std::filesystem::temp_directory_path() /
              ("actmed-acceptance-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~Scratch() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name) { return (dir / name).string(); }
};

Scratch& scratch() {
    static Scratch s;
    return s;
}

std::string shquote(const std::string& s) { return "'" + s + "'"; }

// Runs the CLI, captures stdout/stderr into scratch files, returns the exit
// status (or -1 when the process did not exit normally).
int run_cli(const std::string& args, std::string& out, std::string& err) {
    std::string out_file = scratch().file("out.txt");
    std::string err_file = scratch().file("err.txt");
    std::string cmd = shquote(ACTMED_CLI_PATH) + " " + args + " > " + shquote(out_file) +
                      " 2> " + shquote(err_file);
    int rc = std::system(cmd.c_str());
    out = slurp(out_file);
    err = slurp(err_file);
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "    " << what << "\n";
        }
    }
};

void verdict(int number, const std::string& title, const Check& c) {
    std::cout << "criterion " << number << ": " << (c.ok ? "PASS" : "FAIL") << " - " << title
              << "\n";
    if (!c.ok) {
        std::cerr << "criterion " << number << " failures:\n" << c.detail.str();
        ++failures;
    }
}

// Pulls the indented observation lines under `header:` out of a report.
std::set<std::string> report_section(const std::string& report, const std::string& header) {
    std::set<std::string> out;
    std::istringstream in(report);
    std::string line;
    bool active = false;
    while (std::getline(in, line)) {
        if (line == header + ":") {
            active = true;
            continue;
        }
        if (active) {
            if (line.rfind("  ", 0) != 0) break;
            if (line != "  (none)") out.insert(line.substr(2));
        }
    }
    return out;
}

// ---------------------------------------------------------------- criteria

void criterion_1() {
    Check c;
    std::string out, err;
    auto started = std::chrono::steady_clock::now();
    int rc = run_cli("convert --registry " + shquote(data_path("registry.cfg")) +
                         " --from MedicalFIPAAgents --to Aingeru --in " +
                         shquote(data_path("messages/vitalsign-query.acl")),
                     out, err);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                         .count();

    c.expect(rc == 0, "convert exited with " + std::to_string(rc) + ": " + err);
    c.expect(out == slurp(golden_path("aingeru-vitalsign.block")),
             "converted message differs from the reference output");
    c.expect(out.find("Message01 rdf:type A-VitalSignQueryRef") != std::string::npos,
             "root membership A-VitalSignQueryRef(Message01) missing");
    c.expect(out.find("FIR01 rdf:type VitalSignInfGive") != std::string::npos,
             "inferred membership VitalSignInfGive(FIR01) missing");
    c.expect(out.find("RE01 rdf:type VitalSignInfRef") != std::string::npos,
             "inferred membership VitalSignInfRef(RE01) missing");
    c.expect(seconds < 1.0, "conversion took " + std::to_string(seconds) + "s");
    verdict(1, "query conversion into the typed system", c);
}

void criterion_2() {
    Check c;
    std::string base = "check --registry " + shquote(data_path("registry.cfg")) +
                       " --from MedicalFIPAAgents --to Aingeru --in " +
                       shquote(data_path("messages/vitalsign-query.acl"));
    std::string out, err;
    int rc = run_cli(base, out, err);
    c.expect(rc == 0, "check exited with " + std::to_string(rc) + ": " + err);
    c.expect(out == slurp(golden_path("s5-check.report")),
             "report differs from the reference report");

    std::set<std::string> phi_source = {
        "HoldsAt(CC(Actor02,Actor01,accept(Actor02,Actor01,FIR01),FIR01),1)",
        "HoldsAt(FIPA-Inform-Ref(FIR01),1)",
        "HoldsAt(RefExpression(RE01),1)",
        "HoldsAt(hasQuery(FIR01,RE01),1)",
    };
    std::set<std::string> phi_target = {
        "HoldsAt(CC(Actor02,Actor01,accept(Actor02,Actor01,FIR01),FIR01),1)",
        "HoldsAt(VitalSignInfGive(FIR01),1)",
        "HoldsAt(VitalSignInfRef(RE01),1)",
        "HoldsAt(hasQuery(FIR01,RE01),1)",
    };
    c.expect(report_section(out, "phi-source") == phi_source,
             "source obligations are not exactly the expected four");
    c.expect(report_section(out, "phi-target") == phi_target,
             "target obligations are not exactly the expected four");
    c.expect(out.find("verdict: satisfactory") != std::string::npos,
             "verdict line missing or negative");

    std::string traced, terr;
    rc = run_cli("--trace " + base, traced, terr);
    c.expect(rc == 0, "traced check exited with " + std::to_string(rc));
    for (std::string line : {
             "[VitalSignInfGive=>ReportAct] HoldsAt(ReportAct(FIR01),1)",
             "[VitalSignInfRef=>RefExpression] HoldsAt(RefExpression(RE01),1)",
             "[def:FIPA-Inform-Ref] HoldsAt(FIPA-Inform-Ref(FIR01),1)",
         })
        c.expect(traced.find(line) != std::string::npos, "trace lacks derivation " + line);
    verdict(2, "conversion verdict with its proof obligations", c);
}

void criterion_3() {
    Check c;
    std::string base = "check --registry " + shquote(data_path("synth/registry.cfg")) +
                       " --from S1 --to S2 --in " + shquote(data_path("synth/m1.acl"));
    std::string out, err;
    int rc = run_cli(base + " --gamma " + shquote(data_path("synth/gamma-f.obs")), out, err);
    c.expect(rc == 2, "context-bound check exited with " + std::to_string(rc) + ": " + err);
    c.expect(out == slurp(golden_path("synth-gamma-f.report")),
             "context-bound report differs from the reference");
    c.expect(report_section(out, "missing") == std::set<std::string>{"HoldsAt(g,1)"},
             "missing set is not exactly HoldsAt(g,1)");

    rc = run_cli(base, out, err);
    c.expect(rc == 0, "context-free check exited with " + std::to_string(rc) + ": " + err);
    c.expect(out == slurp(golden_path("synth-empty.report")),
             "context-free report differs from the reference");
    verdict(3, "one conversion pair, two verdicts under different contexts", c);
}

void criterion_4() {
    Check c;
    std::vector<testsupport::HandCase> cases = testsupport::handcrafted_cases();
    c.expect(cases.size() >= 20,
             "only " + std::to_string(cases.size()) + " handcrafted cases");
    for (const testsupport::HandCase& h : cases) {
        ec::Gamma phi = ec::step(h.in.gamma, h.in.delta, h.in.sigma, h.in.psi, h.in.time);
        c.expect(phi == h.expected, "one-step result differs: " + h.name);
        c.expect(ec::check_consistent(phi) == h.consistent,
                 "consistency flag differs: " + h.name);
    }
    verdict(4, "single-step effect and inertia behaviour on handcrafted cases", c);
}

void criterion_5() {
    Check c;

    // the worked lifecycle: condition created, detached, discharged
    auto send = [](const std::string& act, const std::string& m, const std::string& s,
                   const std::string& r, const std::string& p) {
        ec::EventTerm e;
        e.act_class = act;
        e.message = m;
        e.sender = s;
        e.receiver = r;
        e.content = p;
        return e;
    };
    std::vector<ec::EffectAxiom> sigma = commit::sigma_c();
    for (const ec::EffectAxiom& a : commit::sigma_t(commit::default_registry()))
        sigma.push_back(a);
    sigma.push_back(
        ec::parse_effect_clause("AcceptAct", "initiates accept(receiver,sender,content)"));

    ec::Gamma gamma;
    int t = 0;
    std::vector<ec::EventTerm> conversation = {
        send("Inquiry", "m1", "Actor01", "Actor02", "FIR01"),
        send("AcceptAct", "m2", "Actor01", "Actor02", "FIR01"),
        send("Responsive", "m3", "Actor02", "Actor01", "FIR01"),
    };
    for (const ec::EventTerm& e : conversation) {
        ec::Narrative delta;
        delta.add(e, t);
        ec::Gamma phi = ec::step(gamma, delta, sigma, ec::ConstraintSet{}, t);
        c.expect(phi == testsupport::oracle_commitments(gamma, delta, sigma, t),
                 "lifecycle step diverges from the schema reading at t=" + std::to_string(t));
        gamma.clear();
        for (const ec::Observation& obs : phi)
            if (obs.positive) gamma.insert(obs);
        ++t;
    }
    c.expect(gamma == ec::Gamma{ec::Observation::holds(ec::parse_fluent("FIR01"), 3),
                                ec::Observation::holds(
                                    ec::parse_fluent("accept(Actor02,Actor01,FIR01)"), 3)},
             "conversation does not end with the answer on the table");

    // random conversations against the same reading
    testsupport::Rng rng(5150);
    const std::vector<std::string> agents = {"a", "b", "c"};
    const std::vector<std::string> contents = {"k0", "k1", "k2", "q0", "q1"};
    for (int i = 0; i < 400 && c.ok; ++i) {
        ec::Gamma g;
        int held = rng.range(1, 4);
        for (int j = 0; j < held; ++j) {
            std::string x = rng.pick(agents), y = rng.pick(agents), p = rng.pick(contents);
            if (rng.coin(0.45))
                g.insert(ec::Observation::holds(
                    ec::Fluent::commitment(x, y, ec::Fluent::named(p)), 0));
            else if (rng.coin(0.7))
                g.insert(ec::Observation::holds(
                    ec::Fluent::cond_commitment(x, y, ec::Fluent::named(rng.pick(contents)),
                                                ec::Fluent::named(p)),
                    0));
            else
                g.insert(ec::Observation::holds(ec::Fluent::named(p), 0));
        }
        ec::Narrative delta;
        std::vector<ec::EffectAxiom> s = commit::sigma_c();
        int events = rng.range(1, 2);
        for (int j = 0; j < events; ++j) {
            std::string act = "A" + std::to_string(j);
            delta.add(send(act, "m" + std::to_string(j), rng.pick(agents), rng.pick(agents),
                           rng.pick(contents)),
                      0);
            if (rng.coin(0.8)) s.push_back(ec::parse_effect_clause(act, "initiates content"));
            if (rng.coin(0.5))
                s.push_back(ec::parse_effect_clause(act, "initiates " + rng.pick(contents)));
        }
        ec::Gamma phi = ec::step(g, delta, s, ec::ConstraintSet{}, 0);
        c.expect(phi == testsupport::oracle_commitments(g, delta, s, 0),
                 "random conversation " + std::to_string(i) + " diverges");
    }
    verdict(5, "commitment dynamics against the schema-by-schema reading", c);
}

void criterion_6() {
    Check c;
    auto started = std::chrono::steady_clock::now();

    testsupport::Rng rng(6001);
    int step_runs = 0, step_bad = 0;
    for (int i = 0; i < 1000; ++i) {
        testsupport::EcInstance in = testsupport::random_ec_instance(rng);
        ec::Gamma phi = ec::step(in.gamma, in.delta, in.sigma, in.psi, in.time);
        testsupport::OracleStep expected =
            testsupport::oracle_step(in.gamma, in.delta, in.sigma, in.psi, in.time);
        ++step_runs;
        if (expected.consistent) {
            if (!ec::check_consistent(phi) || phi != expected.phi) ++step_bad;
        } else if (ec::check_consistent(phi)) {
            ++step_bad;
        }
    }

    testsupport::Rng rng2(6002);
    int realize_runs = 0, realize_bad = 0;
    for (int i = 0; i < 1000; ++i) {
        onto::Ontology o = testsupport::random_tbox(rng2);
        ABox m = testsupport::random_abox(rng2);
        ++realize_runs;
        if (onto::saturate(o, m) != testsupport::oracle_saturate(o, m)) ++realize_bad;
    }

    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                         .count();
    c.expect(step_runs >= 1000, "not enough one-step instances");
    c.expect(step_bad == 0, std::to_string(step_bad) + " one-step discrepancies");
    c.expect(realize_runs >= 1000, "not enough realization instances");
    c.expect(realize_bad == 0, std::to_string(realize_bad) + " realization discrepancies");
    c.expect(seconds < 60.0, "randomized comparison took " + std::to_string(seconds) + "s");
    verdict(6, "randomized agreement with enumeration and fixpoint references", c);
}

void criterion_7() {
    Check c;
    testsupport::Rng rng(7007);
    for (msg::Syntax syntax :
         {msg::Syntax::FipaAcl, msg::Syntax::Kqml, msg::Syntax::AssertionBlock}) {
        int bad = 0;
        for (int i = 0; i < 1000; ++i) {
            msg::StructuredMessage m = testsupport::random_message(rng, syntax);
            if (msg::parse(msg::serialize(m, syntax)) != m) ++bad;
            auto [envelope, content] = msg::split(m);
            if (msg::join(envelope, content) != m) ++bad;
        }
        c.expect(bad == 0, std::to_string(bad) + " round-trip failures under " +
                               msg::to_string(syntax));
    }
    verdict(7, "message round-trips under every syntax", c);
}

void criterion_8() {
    Check c;
    med::SystemRegistry reg = med::SystemRegistry::load(data_path("registry.cfg"));
    testsupport::Rng rng(8008);
    const std::vector<std::string> fluents = {"w0", "w1", "w2", "w3"};

    int reflexive = 0;
    for (int i = 0; i < 100; ++i) {
        msg::StructuredMessage m = msg::parse(
            {msg::Syntax::FipaAcl,
             "(query-ref :sender ConditionsChecker :receiver VitalSignAgent :language fipa-sl0"
             " :reply-with Message" +
                 std::to_string(10 + rng.below(90)) +
                 " :content ((any ?x (vital-sign ?x Helen))))"});
        conv::ConversionCase cc;
        cc.source = med::side_for(reg, "MedicalFIPAAgents", m);
        cc.target = med::side_for(reg, "MedicalFIPAAgents", m);
        cc.time = 0;
        int extra = rng.range(0, 2);
        for (int j = 0; j < extra; ++j)
            cc.gamma.insert(ec::Observation::holds(ec::Fluent::named(rng.pick(fluents)), 0));
        conv::ConversionReport report = conv::check(cc);
        ++reflexive;
        if (!report.satisfactory || !report.missing.empty()) {
            c.expect(false, "reflexive case " + std::to_string(i) + " not satisfactory");
            break;
        }
    }
    c.expect(reflexive >= 100, "not enough reflexive cases");

    med::SystemRegistry synth = med::SystemRegistry::load(data_path("synth/registry.cfg"));
    msg::RawMessage raw{msg::Syntax::FipaAcl,
                        "(a1 :sender Alpha :receiver Beta :reply-with M01 :content ())"};
    med::ConvertOutcome converted = med::convert(synth, raw, "S1", "S2");
    std::mt19937 shuffler(88);
    for (int with_f : {0, 1}) {
        conv::ConversionReport reference;
        for (int i = 0; i < 20; ++i) {
            std::vector<ec::EffectAxiom> sigma = synth.sigma();
            std::shuffle(sigma.begin(), sigma.end(), shuffler);
            conv::ConversionCase cc;
            cc.source = med::side_for(synth, "S1", converted.source_message);
            cc.target = med::side_for(synth, "S2", converted.target_message);
            cc.source.sigma = sigma;
            cc.target.sigma = sigma;
            cc.time = 0;
            if (with_f) cc.gamma.insert(ec::parse_observation("HoldsAt(f,0)"));
            conv::ConversionReport report = conv::check(cc);
            if (i == 0) {
                reference = report;
                c.expect(report.satisfactory == (with_f == 0),
                         "unexpected verdict for context variant " + std::to_string(with_f));
            } else {
                bool same = report.satisfactory == reference.satisfactory &&
                            report.phi_source == reference.phi_source &&
                            report.phi_target == reference.phi_target &&
                            report.missing == reference.missing;
                c.expect(same, "verdict changed under reordered inputs");
            }
        }
    }
    verdict(8, "verdicts are reflexive and order-insensitive", c);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures) {
        std::cerr << failures << " criterion(s) failed\n";
        return 1;
    }
    return 0;
}
