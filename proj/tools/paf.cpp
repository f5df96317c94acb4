// Command-line front end: certified entropy, homology, fibered-face and
// census computations for the multitwist families.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paf/cli.hpp"

namespace {

// "7" or "3..200"
bool parse_range(const std::string& s, int& lo, int& hi) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoi(s);
        } else {
            lo = std::stoi(s.substr(0, pos));
            hi = std::stoi(s.substr(pos + 2));
        }
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified entropy and homology bounds for multitwist families"};
    app.require_subcommand(1);

    paf::cli::RunConfig cfg;
    std::string g_spec = "2";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--fixtures", cfg.fixture_dir, "fixture directory override");
        sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    };

    auto* family = app.add_subcommand("family", "emit the curve system for a genus");
    family->add_option("--g", g_spec, "genus")->required();
    family->add_flag("--with-word", cfg.with_word, "include the twist word");
    add_common(family);

    auto* entropy = app.add_subcommand("entropy", "certified mu and entropy brackets");
    entropy->add_option("--g", g_spec, "genus or range a..b")->required();
    entropy->add_option("--tol", cfg.tol, "bracket tolerance");
    entropy->add_option("--jobs", cfg.jobs, "worker threads");
    entropy->add_option("--format", cfg.format, "json (lines) or csv");
    add_common(entropy);

    auto* kappa = app.add_subcommand("kappa", "fixed homology dimension of the families");
    kappa->add_option("--g", g_spec, "genus");
    kappa->add_option("--field", cfg.field, "q or a prime characteristic");
    kappa->add_option("--variant", cfg.variant, "f2p | odd-k | k3 | k1");
    kappa->add_option("--k", cfg.k, "odd k for --variant odd-k");
    add_common(kappa);

    auto* appendix = app.add_subcommand("appendix", "fibered-cone claims table");
    bool claims = false;
    appendix->add_flag("--claims", claims, "evaluate the claims (default behavior)");
    appendix->add_option("--gmax", cfg.appendix_gmax, "sweep limit for psi_normalized");
    appendix->add_option("--tol", cfg.tol, "root bracket tolerance");
    add_common(appendix);

    auto* bounds = app.add_subcommand("bounds", "explicit sandwich for L(k, g)");
    bounds->add_option("--k", cfg.k, "fixed-subspace dimension")->required();
    bounds->add_option("--g", g_spec, "genus")->required();
    add_common(bounds);

    auto* constants = app.add_subcommand("constants", "volume-constants ledger");
    add_common(constants);

    auto* census = app.add_subcommand("census", "lattice census of dilated polytopes");
    census->add_option("--polytope", cfg.polytope_file, "polytope JSON file")->required();
    census->add_option("--k", cfg.census_k, "ambient dimension")->required();
    census->add_option("--gmax", cfg.census_gmax, "largest genus");
    census->add_option("--stride", cfg.census_stride, "genus stride");
    census->add_option("--isom-order", cfg.isom_order, "order of the isometry group");
    add_common(census);

    auto* report = app.add_subcommand("report", "consolidate prior run outputs");
    report->add_option("--in", cfg.in_dir, "directory with prior outputs")->required();
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (!parse_range(g_spec, cfg.g_min, cfg.g_max)) {
        std::cerr << "error: bad --g value '" << g_spec << "'\n";
        return 2;
    }
    return paf::cli::run(cfg, std::cout, std::cerr);
}
