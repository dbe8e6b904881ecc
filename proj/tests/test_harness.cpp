#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "actmed/errors.hpp"
#include "actmed/harness.hpp"
#include "doctest.h"

using namespace actmed;
using namespace actmed::med;

namespace {

std::string data_path(const std::string& rel) { return std::string(ACTMED_DATA_DIR "/") + rel; }
std::string golden_path(const std::string& rel) {
    return std::string(ACTMED_GOLDEN_DIR "/") + rel;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    std::filesystem::path dir;

    TempDir() {
        static int counter = 0;
        dir = std::filesystem::temp_directory_path() /
              ("actmed-harness-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }

    std::filesystem::path write(const std::string& name, const std::string& text) {
        std::filesystem::path p = dir / name;
        std::ofstream out(p);
        out << text;
        return p;
    }
};

}  // namespace

TEST_CASE("wire frames encode and decode losslessly") {
    WireFrame frame{"Message01", "MedicalFIPAAgents", "Aingeru",
                    "@message Message01\nMessage01 rdf:type Inquiry\n"};
    std::string text = encode_frame(frame);
    CHECK(text.rfind("CONVERT Message01 MedicalFIPAAgents Aingeru\n", 0) == 0);
    CHECK(text.substr(text.size() - 2) == "\n\n");

    WireFrame back = decode_frame(text);
    CHECK(back.message_id == frame.message_id);
    CHECK(back.from == frame.from);
    CHECK(back.to == frame.to);
    CHECK(back.body == frame.body);
}

TEST_CASE("broken frames are refused") {
    CHECK_THROWS_AS(decode_frame("no newline anywhere"), Error);
    CHECK_THROWS_AS(decode_frame("HELLO a b c\nbody\n\n"), Error);
    CHECK_THROWS_AS(decode_frame("CONVERT onlyid\nbody\n\n"), Error);
}

TEST_CASE("the in-process transport is a keyed fifo") {
    InProcTransport transport;
    transport.bind("inproc:A");
    transport.bind("inproc:B");

    CHECK_FALSE(transport.poll("inproc:A").has_value());
    transport.send("inproc:A", {"M1", "X", "A", "b1\n"});
    transport.send("inproc:A", {"M2", "X", "A", "b2\n"});
    auto first = transport.poll("inproc:A");
    auto second = transport.poll("inproc:A");
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(first->message_id == "M1");
    CHECK(second->message_id == "M2");
    CHECK_FALSE(transport.poll("inproc:A").has_value());
    CHECK_FALSE(transport.poll("inproc:B").has_value());

    CHECK_THROWS_AS(transport.send("inproc:C", {"M", "X", "C", ""}), Error);
    CHECK_THROWS_AS(transport.poll("inproc:C"), Error);
}

TEST_CASE("the tcp transport carries frames across a loopback socket") {
    TcpTransport transport;
    const std::string address = "127.0.0.1:45711";
    transport.bind(address);

    CHECK_FALSE(transport.poll(address).has_value());
    transport.send(address, {"Message01", "S1", "S2", "x rdf:type C\n"});

    std::optional<WireFrame> got;
    for (int i = 0; i < 200 && !got; ++i) {
        got = transport.poll(address);
        if (!got) std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    REQUIRE(got.has_value());
    CHECK(got->message_id == "Message01");
    CHECK(got->from == "S1");
    CHECK(got->to == "S2");
    CHECK(got->body == "x rdf:type C\n");

    CHECK_THROWS_AS(transport.bind("127.0.0.1:notaport"), Error);
    CHECK_THROWS_AS(transport.bind("nocolon"), Error);
    CHECK_THROWS_AS(transport.send("127.0.0.1:45799", {"M", "a", "b", ""}), Error);
    CHECK_THROWS_AS(transport.poll("127.0.0.1:45798"), Error);
}

TEST_CASE("the directory announces joins to earlier observers") {
    Directory directory;
    std::vector<std::string> seen;
    directory.on_join([&](const DirectoryEntry& e) { seen.push_back(e.system); });
    directory.register_manager("S1", "inproc:S1");
    directory.register_manager("S2", "inproc:S2");

    CHECK(seen == std::vector<std::string>{"S1", "S2"});
    CHECK(directory.lookup("S1") == "inproc:S1");
    CHECK_FALSE(directory.lookup("S3").has_value());
    CHECK(directory.entries().size() == 2);
}

TEST_CASE("the scripted run reproduces the reference transcript") {
    std::ostringstream transcript;
    int status = run_harness(data_path("registry.cfg"),
                             data_path("scenarios/vitalsign.scn"), transcript);
    CHECK(status == 0);
    CHECK(transcript.str() == slurp(golden_path("vitalsign-scenario.transcript")));
}

TEST_CASE("a receiver nobody hosts ends the submit in an error state") {
    TempDir tmp;
    tmp.write("lost.acl",
              "(query-ref :sender ConditionsChecker :receiver Nobody :language fipa-sl0"
              " :reply-with Message07 :content ((any ?x (vital-sign ?x Helen))))");
    auto scenario = tmp.write("lost.scn", "inject MedicalFIPAAgents lost.acl\n");

    std::ostringstream transcript;
    int status = run_harness(data_path("registry.cfg"), scenario, transcript);
    CHECK(status == 1);
    CHECK(transcript.str().find(
              "[MedicalFIPAAgents] Error(Dispatching): no registered system hosts agent "
              "Nobody") != std::string::npos);
}

TEST_CASE("scenario script problems are reported, not fatal") {
    TempDir tmp;
    auto scenario = tmp.write("odd.scn",
                              "# comment\n"
                              "frobnicate MedicalFIPAAgents x\n"
                              "inject NoSuchSystem x.acl\n"
                              "inject MedicalFIPAAgents missing.acl\n");
    std::ostringstream transcript;
    int status = run_harness(data_path("registry.cfg"), scenario, transcript);
    CHECK(status == 1);
    std::string text = transcript.str();
    CHECK(text.find("scenario error: unknown op 'frobnicate'") != std::string::npos);
    CHECK(text.find("scenario error: bad inject line") != std::string::npos);
    CHECK(text.find("scenario error: cannot open") != std::string::npos);
    CHECK(text.find("[harness] done") != std::string::npos);
}

TEST_CASE("a missing config or scenario fails cleanly") {
    std::ostringstream transcript;
    CHECK(run_harness("/nonexistent/reg.cfg", "/nonexistent/s.scn", transcript) == 1);
    CHECK(transcript.str().find("[harness] config error:") != std::string::npos);

    std::ostringstream transcript2;
    CHECK(run_harness(data_path("registry.cfg"), "/nonexistent/s.scn", transcript2) == 1);
    CHECK(transcript2.str().find("cannot open scenario") != std::string::npos);
}

TEST_CASE("the pipeline also runs over tcp managers") {
    TempDir tmp;
    std::string cfg =
        "common " + data_path("ontologies/common.ont") + "\n" +
        "domain " + data_path("ontologies/domain.ont") + "\n" +
        "transport tcp\n"
        "effects Inquiry: initiates CC(receiver,sender,accept(receiver,sender,content),content)\n"
        "system MedicalFIPAAgents\n"
        "  syntax fipa-acl\n"
        "  ontology " + data_path("ontologies/medicalfipa.ont") + "\n" +
        "  profile " + data_path("profiles/medicalfipa.profile") + "\n" +
        "  agent ConditionsChecker\n"
        "  address 127.0.0.1:45721\n"
        "end\n"
        "system Aingeru\n"
        "  syntax assertion-block\n"
        "  ontology " + data_path("ontologies/aingeru.ont") + "\n" +
        "  profile " + data_path("profiles/aingeru.profile") + "\n" +
        "  agent VitalSignAgent\n"
        "  address 127.0.0.1:45722\n"
        "end\n";
    auto config = tmp.write("tcp.cfg", cfg);
    auto scenario =
        tmp.write("tcp.scn", "inject MedicalFIPAAgents " + data_path("messages/vitalsign-query.acl") + "\n");

    std::ostringstream transcript;
    int status = run_harness(config, scenario, transcript);
    std::string text = transcript.str();
    CAPTURE(text);
    CHECK(status == 0);
    CHECK(text.find("Dispatching: Message01 -> Aingeru at 127.0.0.1:45722") !=
          std::string::npos);
    CHECK(text.find("[Aingeru] RealizingTarget: 3 derived") != std::string::npos);
    CHECK(text.find("[Aingeru]   | Message01 rdf:type A-VitalSignQueryRef") !=
          std::string::npos);
    CHECK(text.find("[Aingeru] Done") != std::string::npos);
}
