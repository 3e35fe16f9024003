// Command-line driver: runs the verification suites and writes one
// deterministic JSON report per suite (byte-identical across reruns with the
// same parameters and seed).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <CLI11.hpp>

#include "voa/suites.hpp"

namespace {

int write_report(const voa::VerificationReport& rep, const std::string& outDir) {
    std::filesystem::create_directories(outDir);
    std::filesystem::path path = std::filesystem::path(outDir) /
                                 ("report-" + rep.suite + ".json");
    std::ofstream out(path, std::ios::binary);
    out << rep.to_json().dump(2) << "\n";
    out.close();
    std::cout << rep.suite << ": " << (rep.all_pass() ? "PASS" : "FAIL") << " ("
              << rep.cases.size() << " cases, " << rep.fail_count() << " failures) -> "
              << path.string() << "\n";
    if (!rep.all_pass())
        for (const auto& c : rep.cases)
            if (!c.pass) std::cout << "  FAIL " << c.id << ": " << c.detail << "\n";
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification harness for the rank-one free-boson vertex algebra"};
    app.require_subcommand(1);

    std::string configPath, outDir = ".";
    app.add_option("--config", configPath, "key=value config file");
    app.add_option("--out", outDir, "directory for JSON reports");

    voa::SuiteConfig cfg;
    // apply the config file before parsing so explicit flags take precedence
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
        if (!path.empty()) {
            try {
                cfg = voa::load_config(path, cfg);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
    }

    auto* hvec = app.add_subcommand("hvec", "build the quadratic generators");
    auto* hvecBuild = hvec->add_subcommand("build", "build H^2..H^{2r} and sync the text cache");
    int hvecR = 3;
    hvecBuild->add_option("--r", hvecR, "highest generator index r");
    hvec->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);

    std::vector<std::string> chosen;
    auto addSuite = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = verify->add_subcommand(name, desc);
        sub->callback([&chosen, name] { chosen.push_back(name); });
        return sub;
    };

    auto* hcomm = addSuite("hcomm", "defining commutation of the quadratic generators");
    hcomm->add_option("--r", cfg.hcommR, "check H^2..H^{2r}");
    hcomm->add_option("--range", cfg.range, "mode index range");
    auto addWeight = [&](CLI::App* sub) {
        sub->add_option_function<std::string>(
            "--max-weight", [&cfg](const std::string& s) { cfg.maxWeight = voa::parse_rational(s); },
            "state basis weight bound");
    };
    addWeight(hcomm);

    addSuite("table1", "grade-preserving eigenvalues on the five lowest-weight states");

    auto* appendix = addSuite("appendix", "closed commutator formulas for the generators");
    appendix->add_option("--range", cfg.range, "mode index range");
    addWeight(appendix);

    auto* borcherds = addSuite("borcherds", "seeded identity samples and mutual commutation");
    borcherds->add_option("--samples", cfg.borcherdsSamples, "number of random instances");
    borcherds->add_option("--seed", cfg.seed, "RNG seed (recorded in the report)");

    auto* zhu = addSuite("zhu", "top-level algebra relations with membership certificates");
    zhu->add_option("--cutoff", cfg.zhuCutoff, "certification weight bound");

    addSuite("idempotents", "projection idempotents of the top-level algebra");

    auto* lattice = addSuite("lattice", "lattice-module checks at norm 2k");
    int latticeK = 0;
    lattice->add_option("--k", latticeK, "single norm parameter (default: 1,2,3)");

    addSuite("ext", "parametrized self-extensions and Jordan blocks");

    auto* gap = addSuite("gap", "non-solvability of the eigenvalue constraint");
    gap->add_option("--bound", cfg.gapBound, "search bound");

    auto* allCmd = verify->add_subcommand("all", "every suite in order");
    allCmd->callback([&chosen] {
        for (const auto& n : voa::all_suites()) chosen.push_back(n);
    });

    CLI11_PARSE(app, argc, argv);

    try {
        if (const char* env = std::getenv("VOA_CACHE_DIR")) cfg.cacheDir = env;
        if (latticeK > 0) cfg.ks = {latticeK};

        int rc = 0;
        if (hvecBuild->parsed()) rc |= write_report(voa::hvec_build(hvecR, cfg.cacheDir), outDir);
        for (const auto& name : chosen) rc |= write_report(voa::run_suite(name, cfg), outDir);
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
