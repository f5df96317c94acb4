#pragma once

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "paf/census.hpp"
#include "paf/curves.hpp"
#include "paf/family.hpp"
#include "paf/fibered.hpp"
#include "paf/geom.hpp"
#include "paf/homology.hpp"
#include "paf/thurston.hpp"

namespace paf::cli {

using nlohmann::ordered_json;

struct RunConfig {
    std::string subcommand;
    int g_min = 0, g_max = 0;
    long long k = -1;
    std::string field = "q";
    std::string variant;  // "", "f2p", "odd-k", "k3", "k1"
    std::string format = "json";  // json | csv (sweep subcommands)
    double tol = 1e-9;
    std::string fixture_dir;
    std::string polytope_file;
    int census_k = 2;
    int census_gmax = 20;
    int census_stride = 1;
    long long isom_order = 1;
    int appendix_gmax = 300;
    bool with_word = false;
    int jobs = 1;
    std::string out_path;
    std::string in_dir;
};

namespace detail {

inline std::string fixture_dir(const RunConfig& cfg) {
    return cfg.fixture_dir.empty() ? family_detail::data_dir() : cfg.fixture_dir;
}

inline Rat tol_to_rat(double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    long long den = 1;
    double t = tol;
    while (t < 1 && den < (1LL << 55)) {
        t *= 2;
        den *= 2;
    }
    long long num = (long long)t;  // tol >= num/den, within a factor of 2
    return Rat(std::max(1LL, num), den);
}

inline bool word_all_positive(const TwistWord& w) {
    for (const auto& [id, s] : w.letters)
        if (s < 0) return false;
    return true;
}

struct EntropyRow {
    int g;
    QBracket mu;
    long long row_sum;
    Ival h;
};

inline EntropyRow entropy_row(int g, double tol, const std::string& dir) {
    FamilyBuild fb = build_family(g, dir);
    IMat m = gram(fb.system.intersections);
    EntropyRow row;
    row.g = g;
    row.mu = pf_eigenvalue(m, tol_to_rat(tol));
    row.row_sum = row_sum_bound(m);
    row.h = word_all_positive(fb.word) ? entropy_prod(row.mu) : entropy_diff(row.mu);
    return row;
}

inline ordered_json entropy_row_json(const EntropyRow& r) {
    ordered_json j;
    j["g"] = r.g;
    // pf_eigenvalue brackets are dyadic rationals: exact as doubles
    j["mu_lower"] = r.mu.lower.to_double();
    j["mu_upper"] = r.mu.upper.to_double();
    j["row_sum_bound"] = r.row_sum;
    j["h_lower"] = r.h.lo();
    j["h_upper"] = r.h.hi();
    return j;
}

inline ordered_json ival_json(const Ival& v) {
    ordered_json j;
    j["lower"] = v.lo();
    j["upper"] = v.hi();
    return j;
}

}  // namespace detail

inline int cmd_family(const RunConfig& cfg, std::ostream& out) {
    FamilyBuild fb = build_family(cfg.g_min, detail::fixture_dir(cfg));
    ordered_json j = to_json(fb.system);
    if (cfg.with_word) {
        auto w = ordered_json::array();
        for (const auto& [id, s] : fb.word.letters) w.push_back({id, s});
        j["word"] = w;
    }
    out << j.dump() << "\n";
    return 0;
}

inline int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
    if (cfg.g_min < 2 || cfg.g_max < cfg.g_min)
        throw std::invalid_argument("entropy: need 2 <= g_min <= g_max");
    if (cfg.format != "json" && cfg.format != "csv")
        throw std::invalid_argument("entropy: format must be json or csv");
    const double six_log2 = 6 * std::log(2.0);
    std::vector<detail::EntropyRow> rows((size_t)(cfg.g_max - cfg.g_min + 1));
    std::string dir = detail::fixture_dir(cfg);
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (int g = cfg.g_min; g <= cfg.g_max; ++g)
            rows[(size_t)(g - cfg.g_min)] = detail::entropy_row(g, cfg.tol, dir);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{cfg.g_min};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    int g = next.fetch_add(1);
                    if (g > cfg.g_max) return;
                    rows[(size_t)(g - cfg.g_min)] = detail::entropy_row(g, cfg.tol, dir);
                }
            });
        for (auto& th : pool) th.join();
    }
    bool pass = true;
    if (cfg.format == "csv") out << "g,mu_lower,mu_upper,row_sum_bound,h_lower,h_upper\n";
    for (const auto& r : rows) {
        if (cfg.format == "csv") {
            char buf[256];
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%lld,%.17g,%.17g\n", r.g,
                          r.mu.lower.to_double(), r.mu.upper.to_double(), r.row_sum,
                          r.h.lo(), r.h.hi());
            out << buf;
        } else {
            out << detail::entropy_row_json(r).dump() << "\n";
        }
        if (!(r.h.hi() < six_log2)) pass = false;
    }
    return pass ? 0 : 1;
}

inline int cmd_kappa(const RunConfig& cfg, std::ostream& out) {
    std::string dir = detail::fixture_dir(cfg);
    FamilyBuild fb;
    long long expected;
    int g;
    if (cfg.variant.empty()) {
        g = cfg.g_min;
        fb = build_family(g, dir);
        expected = 2LL * g;
    } else if (cfg.variant == "f2p") {
        g = 2;
        fb = build_f2prime(dir);
        expected = 2;
    } else if (cfg.variant == "odd-k") {
        if (cfg.k < 5) throw std::invalid_argument("kappa --variant odd-k needs --k odd >= 5");
        fb = build_odd_variant(cfg.k, dir);
        g = fb.system.genus;
        expected = cfg.k;
    } else if (cfg.variant == "k3" || cfg.variant == "k1") {
        g = 2;
        auto [k3, k1] = build_k3_k1_examples(dir);
        fb = cfg.variant == "k3" ? k3 : k1;
        expected = cfg.variant == "k3" ? 3 : 1;
    } else {
        throw std::invalid_argument("unknown kappa variant: " + cfg.variant);
    }
    FieldSpec field = cfg.field == "q" ? FieldSpec::rationals() : FieldSpec::prime(std::stoll(cfg.field));
    IMat action = word_action(fb.system, fb.word);
    long long kv = kappa(action, field);
    ordered_json j;
    j["g"] = g;
    j["field"] = cfg.field;
    j["kappa"] = kv;
    j["b1"] = betti_of_mapping_torus(kv);
    j["expected"] = expected;
    j["pass"] = kv == expected;
    out << j.dump() << "\n";
    return kv == expected ? 0 : 1;
}

inline int cmd_appendix(const RunConfig& cfg, std::ostream& out) {
    ordered_json rows = ordered_json::array();
    bool all_pass = true;
    // table rows as {g or t, class, norm, h, normalized, target, pass}
    auto add_row = [&](const std::string& label, const std::string& g_or_t,
                       const std::string& cls, long long norm, const Ival* h,
                       const Ival& normalized, const std::string& target, bool pass) {
        ordered_json r;
        r["label"] = label;
        r["g_or_t"] = g_or_t;
        r["class"] = cls;
        if (norm > 0) r["norm"] = norm;
        if (h) r["h"] = detail::ival_json(*h);
        r["normalized"] = detail::ival_json(normalized);
        r["target"] = target;
        r["pass"] = pass;
        rows.push_back(r);
        if (!pass) all_pass = false;
    };
    auto cls_str = [](const FiberedClass& c) {
        return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
    };
    double tol = cfg.tol;
    const Ival log_phi4 = h1(Rat(0), tol);

    // the genus-2 minimum: largest root of x^4 - x^3 - x^2 - x + 1
    {
        EntropyProfile p = normalized_entropy({1, 2}, tol);
        add_row("L(0,2)", "g=2", "(1,2)", p.norm, &p.entropy, p.normalized,
                "h in [0.54352, 0.54355]",
                p.entropy.lo() >= 0.54352 && p.entropy.hi() <= 0.54355);
    }
    // h1(0) against the closed form 2 log((3+sqrt(5))/2)
    {
        EntropyProfile p = normalized_entropy({0, 1}, tol);
        Ival closed = Ival(2.0) * log((Ival(3.0) + sqrt(Ival(5.0))) * Ival(0.5));
        add_row("h1(0)", "t=0", "(0,1)", p.norm, &p.entropy, p.normalized,
                "= log(phi^4) within 1e-9", std::abs(p.normalized.mid() - closed.mid()) < 1e-9);
    }
    // (2g-2) h(psi_g) for g = 3, 4, 5
    {
        struct Target {
            long long g;
            double lo, hi;
            const char* text;
        } targets[] = {{3, 1.34, 1.36, "in [1.34, 1.36]"},
                       {4, 1.38, 1.41, "in [1.38, 1.41]"}};
        for (const auto& tgt : targets) {
            FiberedClass ac = alpha_class(tgt.g);
            EntropyProfile p = normalized_entropy(ac, tol);
            Ival psi = psi_normalized(tgt.g, tol);
            add_row("(2g-2)h(psi_g)", "g=" + std::to_string(tgt.g), cls_str(ac), p.norm,
                    &p.entropy, psi, tgt.text, psi.lo() >= tgt.lo && psi.hi() <= tgt.hi);
        }
        FiberedClass a5 = alpha_class(5);
        EntropyProfile p5 = normalized_entropy(a5, tol);
        Ival psi5 = psi_normalized(5, tol);
        add_row("(2g-2)h(psi_g)", "g=5", cls_str(a5), p5.norm, &p5.entropy, psi5,
                "< log(phi^4) (reference value 1.45; oracle value reported)",
                psi5.hi() < log_phi4.lo());
    }
    // full sweep psi_normalized(g) < log(phi^4)
    {
        bool sweep = true;
        Ival worst(0.0);
        long long worst_g = 3;
        for (long long g = 3; g <= cfg.appendix_gmax; ++g) {
            Ival p = psi_normalized(g, tol);
            if (p.hi() > worst.hi()) {
                worst = p;
                worst_g = g;
            }
            if (!(p.hi() < log_phi4.lo())) sweep = false;
        }
        add_row("max (2g-2)h(psi_g)", "g=3.." + std::to_string(cfg.appendix_gmax),
                cls_str(alpha_class(worst_g)), 0, nullptr, worst, "< log(phi^4)", sweep);
    }
    // difference quotient bound and the (2/3) log(phi^4) constant
    {
        Ival q = (h1(Rat(1, 2), tol) - h1(Rat(3, 7), tol)) * Ival(14.0);
        add_row("(h1(1/2)-h1(3/7))*14", "t=3/7..1/2", "-", 0, nullptr, q, "<= 1.06",
                q.hi() <= 1.06);
        Ival c = Ival(Rat(2, 3)) * log_phi4;
        add_row("(2/3) log(phi^4)", "-", "-", 0, nullptr, c, ">= 1.28", c.lo() >= 1.28);
    }
    // F(t) < log(phi^4) on (0, 3/7]
    {
        bool grid = true;
        for (int i = 1; i <= 42; ++i)
            if (!(appendix_F(Rat(i, 100), tol).hi() < log_phi4.lo())) grid = false;
        Ival f37 = appendix_F(Rat(3, 7), tol);
        if (!(f37.hi() < log_phi4.lo())) grid = false;
        add_row("F(t)", "t=1/100..42/100, 3/7", "-", 0, nullptr, f37, "< log(phi^4)", grid);
    }
    // h1 increasing on the sampled grid
    {
        bool inc = true;
        Ival prev = h1(Rat(0), tol);
        for (int i = 1; i <= 7; ++i) {
            Ival cur = h1(Rat(i, 8), tol);
            if (!(cur.hi() > prev.lo())) inc = false;
            prev = cur;
        }
        add_row("h1 monotone", "t=0,1/8,...,7/8", "-", 0, nullptr, prev, "increasing", inc);
    }
    out << rows.dump(1) << "\n";
    return all_pass ? 0 : 1;
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    TheoremBounds b = theorem_bounds(cfg.k, cfg.g_min);
    ordered_json j;
    j["k"] = cfg.k;
    j["g"] = cfg.g_min;
    j["lower"] = detail::ival_json(b.lower);
    j["upper"] = detail::ival_json(b.upper);
    long long g0 = std::max(cfg.k / 2, 2LL);
    if (cfg.k >= 2 && cfg.k % 2 == 0 && cfg.g_min >= g0) {
        DecompositionPlan plan = upper_bound_plan(cfg.g_min, cfg.k);
        ordered_json pj;
        pj["g0"] = plan.g0;
        pj["l"] = plan.l;
        pj["r"] = plan.r;
        pj["branch"] = plan.branch == DecompositionPlan::Branch::BaseCase ? "base-case"
                       : plan.branch == DecompositionPlan::Branch::Coprime ? "coprime"
                                                                           : "non-coprime";
        j["plan"] = pj;
    }
    bool pass = b.lower.hi() <= b.upper.lo();
    j["pass"] = pass;
    out << j.dump() << "\n";
    return pass ? 0 : 1;
}

inline int cmd_constants(const RunConfig&, std::ostream& out) {
    ConstantsLedger c = compute_constants();
    ordered_json j;
    j["epsilon"] = detail::ival_json(c.epsilon);
    j["small_ball"] = detail::ival_json(c.small_ball);
    j["big_ball"] = detail::ival_json(c.big_ball);
    j["small_ball_over_pi"] = detail::ival_json(c.small_ball_paren);
    j["valence_ratio"] = detail::ival_json(c.valence);
    j["net_coefficient"] = detail::ival_json(c.net_coefficient);
    j["net_coefficient_coarse"] = detail::ival_json(c.net_coefficient_coarse);
    j["betti_coefficient"] = detail::ival_json(c.betti_coefficient);
    j["lower_constant"] = detail::ival_json(c.lower_constant);
    j["culler_shalen_coefficient"] = detail::ival_json(c.cs_coefficient);
    ordered_json checks;
    checks["valence_below_493.2244575"] = c.valence_ok();
    checks["betti_coefficient_in_(333,333.08]_and_<=334.08"] = c.betti_ok();
    checks["lower_constant_in_[0.00031,0.00032)"] = c.lower_ok();
    checks["culler_shalen_>=_0.326"] = c.cs_ok();
    checks["weeks_334.08*0.94_>_5"] = c.weeks_ok();
    j["checks"] = checks;
    j["pass"] = c.all_ok();
    out << j.dump(1) << "\n";
    return c.all_ok() ? 0 : 1;
}

inline RationalPolytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polytope file: " + path);
    nlohmann::json j;
    in >> j;
    int k = j.at("dimension").get<int>();
    std::vector<std::vector<Rat>> vs;
    for (const auto& vj : j.at("vertices")) {
        std::vector<Rat> v;
        for (const auto& c : vj) {
            if (c.is_string()) v.push_back(Rat::from_decimal(c.get<std::string>()));
            else if (c.is_number_integer()) v.push_back(Rat(c.get<long long>()));
            else v.push_back(Rat::from_decimal(std::to_string(c.get<double>())));
        }
        vs.push_back(v);
    }
    return RationalPolytope(k, vs);
}

inline int cmd_census(const RunConfig& cfg, std::ostream& out) {
    RationalPolytope k = load_polytope(cfg.polytope_file);
    if (k.dim != cfg.census_k)
        throw std::invalid_argument("census: polytope dimension does not match --k");
    std::vector<int> genera;
    for (int g = 2; g <= cfg.census_gmax; g += std::max(1, cfg.census_stride)) genera.push_back(g);
    auto records = omega_census(k, genera);
    GrowthFit fit = growth_fit(records, cfg.census_k);
    out << "g,dilation,integral,primitive,floor_bound\n";
    for (const auto& r : records) {
        double floor_bound = (fit.c1 * std::pow((double)r.g, cfg.census_k) - fit.c2) /
                             (double)std::max(1LL, cfg.isom_order);
        out << r.g << "," << r.dilation << "," << r.integral_count << "," << r.primitive_count
            << "," << floor_bound << "\n";
    }
    out << "# slope=" << fit.slope << " c1=" << fit.c1 << " c2=" << fit.c2
        << " degree_ok=" << (fit.degree_ok ? 1 : 0) << "\n";
    return fit.degree_ok ? 0 : 1;
}

inline int cmd_report(const RunConfig& cfg, std::ostream& out) {
    namespace fs = std::filesystem;
    if (cfg.in_dir.empty() || !fs::exists(cfg.in_dir))
        throw std::runtime_error("report: input directory missing");
    ordered_json table = ordered_json::array();
    bool any = false, any_fail = false;
    auto mark = [&](const std::string& criterion, const std::string& status,
                    const std::string& detail_s) {
        ordered_json r;
        r["criterion"] = criterion;
        r["status"] = status;
        if (!detail_s.empty()) r["detail"] = detail_s;
        table.push_back(r);
        if (status == "fail") any_fail = true;
        if (status != "skipped") any = true;
    };

    fs::path dir(cfg.in_dir);
    // entropy.jsonl: every h_upper < 6 log 2, mu_upper < 62 for g >= 3,
    // the exact genus-2 eigenvalue, and the genus-8 fixture window
    if (fs::exists(dir / "entropy.jsonl")) {
        std::ifstream in(dir / "entropy.jsonl");
        std::string line;
        bool ok_h = true, ok_mu = true;
        bool saw_g2 = false, g2_exact = false, saw_g8 = false, g8_window = false;
        double worst_h = 0, worst_mu = 0;
        const double six_log2 = 6 * std::log(2.0);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            double hu = j.at("h_upper").get<double>();
            double ml = j.at("mu_lower").get<double>();
            double mu = j.at("mu_upper").get<double>();
            int g = j.at("g").get<int>();
            worst_h = std::max(worst_h, hu);
            if (!(hu < six_log2)) ok_h = false;
            if (g >= 3) {
                worst_mu = std::max(worst_mu, mu);
                if (!(mu < 62)) ok_mu = false;
            }
            if (g == 2) {
                saw_g2 = true;
                g2_exact = ml == 64.0 && mu == 64.0;
            }
            if (g == 8) {
                saw_g8 = true;
                g8_window = ml >= 61.968 && mu <= 61.988;
            }
        }
        mark("entropy: h(f_g) < 6 log 2", ok_h ? "pass" : "fail",
             "max h_upper = " + std::to_string(worst_h));
        mark("entropy: mu_g < 62 for g >= 3", ok_mu ? "pass" : "fail",
             "max mu_upper = " + std::to_string(worst_mu));
        if (saw_g2)
            mark("entropy: mu_2 = 64 exactly", g2_exact ? "pass" : "fail", "");
        if (saw_g8)
            mark("entropy: mu_8 in [61.968, 61.988]", g8_window ? "pass" : "fail",
                 "fixture-dependent");
    } else {
        mark("entropy: h(f_g) < 6 log 2", "skipped", "entropy.jsonl not found");
        mark("entropy: mu_g < 62 for g >= 3", "skipped", "entropy.jsonl not found");
    }
    // kappa.jsonl rows carry their own pass flags
    if (fs::exists(dir / "kappa.jsonl")) {
        std::ifstream in(dir / "kappa.jsonl");
        std::string line;
        bool ok = true;
        int n = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            ++n;
            if (!j.value("pass", false)) ok = false;
        }
        mark("homology: kappa values match their targets", ok && n > 0 ? "pass" : "fail",
             std::to_string(n) + " rows");
    } else {
        mark("homology: kappa values match their targets", "skipped", "kappa.jsonl not found");
    }
    // appendix.json rows
    if (fs::exists(dir / "appendix.json")) {
        std::ifstream in(dir / "appendix.json");
        nlohmann::json rows;
        in >> rows;
        for (const auto& r : rows)
            mark("appendix: " + r.at("label").get<std::string>(),
                 r.at("pass").get<bool>() ? "pass" : "fail", r.at("target").get<std::string>());
    } else {
        mark("appendix: claims 1-4", "skipped", "appendix.json not found");
    }
    // constants.json checks
    if (fs::exists(dir / "constants.json")) {
        std::ifstream in(dir / "constants.json");
        nlohmann::json c;
        in >> c;
        for (auto& [key, val] : c.at("checks").items())
            mark("constants: " + key, val.get<bool>() ? "pass" : "fail", "");
    } else {
        mark("constants: volume pipeline", "skipped", "constants.json not found");
    }
    // census.csv trailer
    if (fs::exists(dir / "census.csv")) {
        std::ifstream in(dir / "census.csv");
        std::string line, last;
        while (std::getline(in, line))
            if (!line.empty()) last = line;
        bool ok = last.find("degree_ok=1") != std::string::npos;
        mark("census: growth degree matches k", ok ? "pass" : "fail", last);
    } else {
        mark("census: growth degree matches k", "skipped", "census.csv not found");
    }

    if (!any) throw std::runtime_error("report: no run outputs found in " + cfg.in_dir);
    out << table.dump(1) << "\n";
    return any_fail ? 1 : 0;
}

/// Dispatches a parsed config; returns the process exit code (0 pass,
/// 1 check failure, 2 usage/data error).  Output is deterministic for a
/// fixed config, independent of the parallelism degree.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path);
            if (!file) throw std::runtime_error("cannot open output file " + cfg.out_path);
            sink = &file;
        }
        if (cfg.subcommand == "family") return cmd_family(cfg, *sink);
        if (cfg.subcommand == "entropy") return cmd_entropy(cfg, *sink);
        if (cfg.subcommand == "kappa") return cmd_kappa(cfg, *sink);
        if (cfg.subcommand == "appendix") return cmd_appendix(cfg, *sink);
        if (cfg.subcommand == "bounds") return cmd_bounds(cfg, *sink);
        if (cfg.subcommand == "constants") return cmd_constants(cfg, *sink);
        if (cfg.subcommand == "census") return cmd_census(cfg, *sink);
        if (cfg.subcommand == "report") return cmd_report(cfg, *sink);
        err << "unknown subcommand: " << cfg.subcommand << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace paf::cli
