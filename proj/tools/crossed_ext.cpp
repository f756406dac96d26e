// crossed-ext: runs cohomology and crossed-module computations described in a
// JSON workspace file.

#include "crossext/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int fail_load(const crossext::Error& e, const std::string& format, const std::string& command) {
    if (format == "json") {
        crossext::Json j = {{"command", command},
                            {"pass", false},
                            {"error", std::string(crossext::code_name(e.code()))},
                            {"detail", e.what()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "crossed-ext: " << e.what() << "\n";
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology, crossed modules and crossed extensions of small Lie and Leibniz algebras"};
    app.set_version_flag("--version", "crossed-ext 0.1.0");

    std::string command;
    std::string input;
    std::string field;
    std::size_t max_degree = 4;
    std::string format = "human";
    app.add_option("command", command, "check | cohomology | theta | classify | baer-sum | pushout | connecting | yoneda | report")
        ->required()
        ->check(CLI::IsMember(crossext::command_names()));
    app.add_option("--input,-i", input, "workspace JSON file ('-' for stdin)")->required();
    app.add_option("--field", field, "q or p:<prime>; overrides the document's field");
    app.add_option("--max-degree", max_degree, "highest cohomology degree")->capture_default_str();
    app.add_option("--format", format, "human or json")->check(CLI::IsMember({"human", "json"}))->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::stringstream text;
    if (input == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "crossed-ext: cannot open " << input << "\n";
            return 2;
        }
        text << in.rdbuf();
    }

    crossext::Workspace ws;
    try {
        std::optional<crossext::FieldSpec> override;
        if (!field.empty()) override = crossext::FieldSpec::parse(field);
        ws = crossext::parse_workspace(text.str(), override);
    } catch (const crossext::Error& e) {
        return fail_load(e, format, command);
    } catch (const std::invalid_argument& e) {
        return fail_load(crossext::Error(crossext::ErrorCode::ParseError, e.what()), format, command);
    }

    crossext::CommandOptions opt;
    opt.max_degree = max_degree;
    auto reports = crossext::run_named(ws, command, opt);
    for (const auto& r : reports)
        for (const auto& w : r.warnings) std::cerr << "warning: " << r.command << " " << r.target << ": " << w << "\n";
    if (format == "json") {
        std::cout << crossext::render_json(ws, command, reports).dump(2) << "\n";
    } else {
        std::cout << crossext::render_human(reports);
    }
    return crossext::all_pass(reports) ? 0 : 1;
}
