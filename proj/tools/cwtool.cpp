#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "cw/errors.hpp"

namespace {

const char* const kCommands[] = {"gamma",      "mutate", "walk",      "dimvec",      "delta-dimvec",
                                 "mu-i",       "identities", "pbw",  "euler-gen",   "phi-eval",
                                 "minor-check", "acyclic", "selftest"};

// --input is either a path or an inline JSON document
nlohmann::json read_input(const std::string& arg) {
    if (arg.empty()) return nlohmann::json::object();
    std::string text;
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw cw::Error(cw::ErrorKind::BadInput, "cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw cw::Error(cw::ErrorKind::BadInput, e.what());
    }
}

int fail(int code, const std::string& kind, const std::string& msg) {
    nlohmann::json d{{"error", kind}, {"message", msg}, {"exit_code", code}};
    std::cerr << d.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cwtool: reduced words, cluster mutations and their checks"};
    cwtool::JobSpec job;
    std::string input, output;
    app.add_option("command", job.command, "operation to run")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(kCommands), std::end(kCommands))));
    app.add_option("--input", input, "input JSON file or inline document");
    app.add_option("--output", output, "write the result here instead of stdout");
    app.add_option("--mode", job.mode, "coefficient handling")
        ->check(CLI::IsMember({"frozen", "invertible", "specialized"}));
    app.add_option("--depth", job.depth, "walk depth")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", job.seed, "seed for randomized runs");
    app.add_flag("--plan-only", job.plan_only, "mu-i: only the combinatorial plan");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    nlohmann::json result;
    try {
        job.input = read_input(input);
        result = cwtool::run_job(job);
    } catch (const cw::Error& e) {
        return fail(cw::is_validation(e.kind()) ? 2 : 3, cw::kind_name(e.kind()), e.what());
    } catch (const std::exception& e) {
        return fail(3, "Internal", e.what());
    }

    std::string text = result.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) return fail(2, "BadInput", "cannot write " + output);
        out << text;
    }
    return 0;
}
