// sconv: command-line front end. Reads a JSON instance (file or stdin),
// writes a JSON certificate to stdout.
//
// Exit codes: 0 success, 1 structured library error or failed check,
// 2 parse or usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sconv/commands.hpp"
#include "sconv/errors.hpp"

namespace {

using sconv::io::json;

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw sconv::ParseError("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical convexity on gauge spheres with exact certificates"};
    app.require_subcommand(1);

    sconv::commands::Options opts;
    std::string input = "-";
    for (const auto& name : sconv::commands::names()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", input, "JSON instance file, - for stdin");
        sub->add_option("--float-digits", opts.float_digits, "Significant digits in presentation floats")
            ->check(CLI::Range(1, 17));
        sub->add_option("--seed", opts.seed, "Seed for randomized checks");
        sub->add_option("--samples", opts.samples, "Sample count for randomized checks");
        if (name == "separate") sub->add_flag("--closed", opts.closed, "Closed-hemisphere variant");
        if (name == "verify") {
            sub->add_option("--suite", opts.suite, "Randomized suite to run")->check(CLI::IsMember({"prop1"}));
            sub->add_flag("--replay", opts.replay, "Replay a certificate document");
            sub->add_flag("--require-star", opts.require_star, "Demand the scaled-star check");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit({{"error", {{"kind", "usage"}, {"message", e.what()}}}});
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    json doc;
    try {
        doc = json::parse(slurp(input));
    } catch (const json::exception& e) {
        emit({{"command", command}, {"error", {{"kind", "parse"}, {"message", e.what()}}}});
        return 2;
    } catch (const sconv::ParseError& e) {
        emit(sconv::commands::error_document(command, e));
        return 2;
    }

    try {
        const auto r = sconv::commands::run(command, doc, opts);
        emit(r.output);
        return r.exit_code;
    } catch (const sconv::ParseError& e) {
        emit(sconv::commands::error_document(command, e));
        return 2;
    } catch (const sconv::Error& e) {
        emit(sconv::commands::error_document(command, e));
        return 1;
    }
}
