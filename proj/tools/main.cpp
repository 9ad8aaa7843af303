#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "detscheme/errors.hpp"

#ifndef DETSCHEME_FIXTURE_DIR
#define DETSCHEME_FIXTURE_DIR "fixtures"
#endif

int main(int argc, char** argv) {
    using namespace detscheme;
    CLI::App app{"Determinantal schemes: classification, complexes and verification"};
    std::string command, problem_path, kind = "en", fixtures = DETSCHEME_FIXTURE_DIR;
    std::optional<std::uint64_t> seed;
    std::optional<int> max_degree, size, row;
    bool as_json = false, bless = false;

    app.add_option("command", command, "classify | minors | complex | betti | cm-type | annihilator | flag | "
                                       "section | canonical | hilbert | examples")
        ->required()
        ->check(CLI::IsMember({"classify", "minors", "complex", "betti", "cm-type", "annihilator", "flag", "section",
                               "canonical", "hilbert", "examples"}));
    app.add_option("problem", problem_path, "problem file (JSON)");
    app.add_flag("--json", as_json, "machine-readable report on stdout");
    app.add_option("--seed", seed, "seed, overrides the problem file");
    app.add_option("--max-degree", max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    app.add_option("--size", size, "minor size")->check(CLI::PositiveNumber);
    app.add_option("--kind", kind, "complex kind")->check(CLI::IsMember({"en", "br"}));
    app.add_option("--row", row, "row to delete (section)")->check(CLI::NonNegativeNumber);
    app.add_option("--fixtures", fixtures, "fixture directory (examples)");
    app.add_flag("--bless", bless, "rewrite golden files (examples)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (command == "examples") return cli::run_examples(fixtures, bless, as_json, std::cout);
        if (problem_path.empty()) {
            std::cerr << "error: " << command << " needs a problem file\n";
            return 2;
        }
        const auto problem = cli::load_problem_file(problem_path);
        cli::Options opts{command, seed, max_degree, size, row, kind};
        const auto rep = cli::run(opts, problem);
        if (as_json) std::cout << cli::to_json(rep).dump(2) << '\n';
        else std::cout << cli::render_text(rep);
        return rep.exit_code;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 1;
    }
}
