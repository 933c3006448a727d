// Command-line front end: analyze, laplace, solve, invariants, classic, zoo.
#include "lieclass/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_file(const std::string& command, const std::string& path, bool json_out,
             const lieclass::RunOptions& opts) {
    lieclass::Report rep;
    try {
        lieclass::InputDocument doc = lieclass::parse_document(slurp(path));
        rep = lieclass::run(command, doc, opts);
    } catch (const lieclass::ParseError& e) {
        nlohmann::json doc;
        doc["command"] = command;
        doc["diagnostics"] = {{{"code", e.code}, {"message", e.what()}}};
        doc["status"] = lieclass::ExitParseError;
        rep.exit_status = lieclass::ExitParseError;
        rep.json = doc.dump(2);
        rep.human = std::string("error [") + e.code + "] " + e.what() + "\n";
    }
    std::cout << (json_out ? rep.json : rep.human);
    if (!json_out && !rep.human.empty() && rep.human.back() != '\n') std::cout << "\n";
    if (json_out) std::cout << "\n";
    return rep.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis and closed-form integration of linear overdetermined "
                 "PDE systems on the plane"};
    app.require_subcommand(1);

    bool json_out = false;
    app.add_flag("--json", json_out, "emit the JSON report instead of text");

    lieclass::RunOptions opts;
    std::string file, dir;

    auto add_input = [&](CLI::App* c) {
        c->fallthrough();
        c->add_option("file", file, "input .pde file");
        c->add_option("--all", dir, "run every .pde file in a directory");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "formal analysis: type, class, complexity");
    add_input(analyze);
    analyze->add_flag("--trace", opts.trace, "include the Laplace kappa-trace");

    CLI::App* laplace = app.add_subcommand("laplace", "one generalized Laplace step");
    add_input(laplace);

    CLI::App* solve = app.add_subcommand("solve", "integrate in closed form");
    add_input(solve);
    solve->add_option("--func", opts.func_name, "name of the arbitrary function (default f)");

    CLI::App* invariants = app.add_subcommand("invariants", "relative invariants and branch");
    add_input(invariants);

    CLI::App* classic = app.add_subcommand("classic", "classical Laplace sequence of a single u_xy equation");
    add_input(classic);
    classic->add_option("--depth", opts.depth, "sequence depth (default 10)");

    CLI::App* zoo = app.add_subcommand("zoo", "enumerate class-1 types by complexity");
    zoo->fallthrough();
    int kappa = -1, upto = -1;
    zoo->add_option("--kappa", kappa, "single complexity value");
    zoo->add_option("--upto", upto, "table for kappa = 1..N");

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    std::string command = sub->get_name();

    if (command == "zoo") {
        opts.kappa = kappa;
        opts.upto = upto;
        lieclass::Report rep = lieclass::run_zoo(opts);
        std::cout << (json_out ? rep.json + "\n" : rep.human);
        return rep.exit_status;
    }

    if (!dir.empty()) {
        int worst = 0;
        std::vector<std::filesystem::path> files;
        for (auto& e : std::filesystem::directory_iterator(dir))
            if (e.path().extension() == ".pde") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (auto& p : files) {
            std::cout << "== " << p.string() << "\n";
            worst = std::max(worst, run_file(command, p.string(), json_out, opts));
        }
        return worst;
    }
    if (file.empty()) {
        std::cerr << "error: no input file\n";
        return lieclass::ExitParseError;
    }
    return run_file(command, file, json_out, opts);
}
