#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "actmed/errors.hpp"
#include "actmed/harness.hpp"
#include "actmed/mediator.hpp"
#include "actmed/realize.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw actmed::Error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void print_payload(const std::string& text) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"communication act mediator: message conversion across agent systems"};
    app.require_subcommand(1);
    bool trace = false;
    app.add_flag("--trace", trace, "print the derivation trace");

    std::string registry_file = "data/registry.cfg";
    std::string from, to, in_file, syntax_tag, gamma_file;
    std::string ontology_file, abox_file, config_file, scenario_file;

    CLI::App* convert = app.add_subcommand("convert", "translate a message between systems");
    convert->add_option("--registry", registry_file, "system registry config");
    convert->add_option("--from", from, "source system id")->required();
    convert->add_option("--to", to, "target system id")->required();
    convert->add_option("--in", in_file, "message file")->required();
    convert->add_option("--syntax", syntax_tag, "override the input syntax tag");

    CLI::App* check = app.add_subcommand("check", "convert and judge the conversion");
    check->add_option("--registry", registry_file, "system registry config");
    check->add_option("--from", from, "source system id")->required();
    check->add_option("--to", to, "target system id")->required();
    check->add_option("--in", in_file, "message file")->required();
    check->add_option("--gamma", gamma_file, "shared context observations");

    CLI::App* reason = app.add_subcommand("reason", "print what realization derives");
    reason->add_option("--ontology", ontology_file, "ontology file")->required();
    reason->add_option("--abox", abox_file, "assertion-block file")->required();

    CLI::App* harness = app.add_subcommand("harness", "run a scenario across managers");
    harness->add_option("--config", config_file, "system registry config")->required();
    harness->add_option("--scenario", scenario_file, "scenario script")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (convert->parsed()) {
            auto reg = actmed::med::SystemRegistry::load(registry_file);
            actmed::msg::Syntax syntax = syntax_tag.empty()
                                             ? reg.system(from).syntax
                                             : actmed::msg::syntax_from(syntax_tag);
            actmed::msg::RawMessage raw{syntax, read_file(in_file)};
            auto out = actmed::med::convert(reg, raw, from, to);
            print_payload(out.output.text);
            if (trace) std::cerr << out.trace.to_text();
            return 0;
        }
        if (check->parsed()) {
            auto reg = actmed::med::SystemRegistry::load(registry_file);
            actmed::msg::RawMessage raw{reg.system(from).syntax, read_file(in_file)};
            actmed::ec::Gamma gamma;
            if (!gamma_file.empty()) gamma = actmed::ec::load_gamma(gamma_file);
            auto out = actmed::med::convert_and_check(reg, raw, from, to, gamma);
            std::cout << out.report.to_text();
            if (trace) {
                std::cout << "trace:\n";
                for (const auto& line : out.report.trace.lines)
                    std::cout << "  " << line << "\n";
            }
            return out.report.satisfactory ? 0 : 2;
        }
        if (reason->parsed()) {
            auto ontology = actmed::onto::load_ontology(ontology_file);
            auto doc = actmed::parse_assertion_block(read_file(abox_file));
            auto derived = actmed::onto::realize(ontology, doc.abox);
            for (const auto& a : derived.assertions()) std::cout << a.to_string() << "\n";
            return 0;
        }
        if (harness->parsed())
            return actmed::med::run_harness(config_file, scenario_file, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
