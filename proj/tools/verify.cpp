#include "ncres/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
    using namespace ncres;
    CLI::App app{"Exact verification of boundary residue computations for Dirac-type operators"};

    std::string op_name, format_name = "text", oracle_name = "off";
    int dim = 0;
    bool emit_cases = false;
    unsigned seed = 1;

    app.add_option("--operator", op_name, "Operator: dirac or signature")
        ->required()
        ->check(CLI::IsMember({"dirac", "signature"}));
    app.add_option("--dim", dim, "Manifold dimension: 3 or 4")
        ->required()
        ->check(CLI::IsMember({3, 4}));
    app.add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"text", "json", "markdown"}));
    app.add_flag("--emit-cases", emit_cases, "Include a record for every case contribution");
    app.add_option("--oracle", oracle_name, "Numeric cross-check: off or numeric")
        ->check(CLI::IsMember({"off", "numeric"}));
    app.add_option("--seed", seed, "Seed for oracle sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help on -h with success status; keep that, map real
        // parse errors to exit 2.
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    RunConfig cfg;
    cfg.op = op_name == "signature" ? OperatorKind::Signature : OperatorKind::Dirac;
    cfg.dim = dim;
    cfg.format = format_name == "json"       ? ReportFormat::Json
                 : format_name == "markdown" ? ReportFormat::Markdown
                                             : ReportFormat::Text;
    cfg.emit_cases = emit_cases;
    cfg.oracle = oracle_name == "numeric";
    cfg.seed = seed;

    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        RunReport rep = run_verify(cfg);
        switch (cfg.format) {
            case ReportFormat::Json: std::cout << to_json(rep) << "\n"; break;
            case ReportFormat::Markdown: render_markdown(rep, std::cout); break;
            case ReportFormat::Text: render_text(rep, std::cout); break;
        }
        return exit_code(rep);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
