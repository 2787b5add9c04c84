#include "fmhd/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmhd/bogovskii.hpp"
#include "fmhd/estimates.hpp"
#include "fmhd/evolver.hpp"
#include "fmhd/experiments.hpp"
#include "fmhd/fourier_identities.hpp"
#include "fmhd/norms.hpp"
#include "fmhd/operators.hpp"
#include "fmhd/random_fields.hpp"
#include "fmhd/regime.hpp"
#include "fmhd/snapshot.hpp"
#include "fmhd/stokes.hpp"
#include "fmhd/stokes_kernel.hpp"

namespace fmhd {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strict schema gate: every present key must be declared, required ones present.
void check_keys(const json& obj, const std::string& ctx, std::set<std::string> required,
                std::set<std::string> optional) {
    if (!obj.is_object()) throw ConfigError(ctx + ": expected an object");
    for (const auto& item : obj.items()) {
        if (!required.count(item.key()) && !optional.count(item.key()))
            throw ConfigError(ctx + ": unknown key '" + item.key() + "'");
    }
    for (const auto& key : required)
        if (!obj.contains(key)) throw ConfigError(ctx + ": missing key '" + key + "'");
}

double get_num(const json& obj, const std::string& ctx, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw ConfigError(ctx + ": key '" + key + "' must be a number");
    return obj[key].get<double>();
}
double get_num_or(const json& obj, const std::string& key, double dflt) {
    return obj.contains(key) ? obj[key].get<double>() : dflt;
}

GridSpec parse_grid(const json& cfg) {
    check_keys(cfg, "grid", {"d", "M", "L"}, {});
    GridSpec g;
    g.d = static_cast<int>(get_num(cfg, "grid", "d"));
    g.M = static_cast<int>(get_num(cfg, "grid", "M"));
    g.L = get_num(cfg, "grid", "L");
    g.validate();
    return g;
}

void parse_model(const json& cfg, ModelParams& p) {
    check_keys(cfg, "model", {"alpha", "beta", "R"}, {"nu", "eta"});
    p.alpha = get_num(cfg, "model", "alpha");
    p.beta = get_num(cfg, "model", "beta");
    p.nu = get_num_or(cfg, "nu", 1.0);
    p.eta = get_num_or(cfg, "eta", 1.0);
    p.trunc.R = get_num(cfg, "model", "R");
}

void parse_time(const json& cfg, ModelParams& p) {
    check_keys(cfg, "time", {"dt", "t_final"}, {"snapshot_stride"});
    p.dt = get_num(cfg, "time", "dt");
    p.t_final = get_num(cfg, "time", "t_final");
    p.snapshot_stride = static_cast<int>(get_num_or(cfg, "snapshot_stride", 0.0));
}

// Initial data: an explicit mode list or a seeded random spectrum; the
// projector P S_R is applied by the evolver in all cases.
SpectralField parse_initial(const json& cfg, const GridSpec& grid, const TruncationSpec& trunc,
                            std::uint64_t seed) {
    check_keys(cfg, "initial", {}, {"modes", "random", "zero"});
    SpectralField b(grid, grid.d, true);
    if (cfg.contains("zero")) {
        if (cfg.contains("modes") || cfg.contains("random"))
            throw ConfigError("initial: 'zero' excludes other keys");
        return b;
    }
    if (cfg.contains("modes") == cfg.contains("random"))
        throw ConfigError("initial: need exactly one of 'modes' or 'random'");

    if (cfg.contains("modes")) {
        if (!cfg["modes"].is_array()) throw ConfigError("initial.modes: expected an array");
        for (const auto& m : cfg["modes"]) {
            check_keys(m, "initial.modes[]", {"k", "component", "amplitude"}, {"phase"});
            if (!m["k"].is_array() || m["k"].size() != static_cast<std::size_t>(grid.d))
                throw ConfigError("initial.modes[].k: expected d integers");
            std::array<int, 3> k{0, 0, 0};
            for (int ax = 0; ax < grid.d; ++ax)
                k[ax] = m["k"][static_cast<std::size_t>(ax)].get<int>();
            int comp = m["component"].get<int>();
            if (comp < 0 || comp >= grid.d) throw ConfigError("initial.modes[].component out of range");
            double amp = m["amplitude"].get<double>();
            double phase = m.contains("phase") ? m["phase"].get<double>() : 0.0;
            // amplitude * cos(2 pi k.x / L + phase) on the chosen component
            std::array<int, 3> mk{0, 0, 0};
            for (int ax = 0; ax < grid.d; ++ax) mk[ax] = -k[ax];
            complexd half = 0.5 * amp * std::exp(complexd{0.0, phase});
            b.at_freq(comp, k) += half;
            b.at_freq(comp, mk) += std::conj(half);
        }
        return b;
    }

    const auto& r = cfg["random"];
    check_keys(r, "initial.random", {"spectrum_sigma"}, {"seed", "kmax", "amplitude"});
    double sigma = r["spectrum_sigma"].get<double>();
    std::uint64_t s = r.contains("seed") ? r["seed"].get<std::uint64_t>() : seed;
    int kmax = r.contains("kmax") ? r["kmax"].get<int>() : trunc.k_max(grid);
    Rng rng(s);
    SpectralField f = random_divfree_field(grid, kmax, sigma, rng);
    if (r.contains("amplitude")) {
        double target = r["amplitude"].get<double>();
        double n = f.l2_norm();
        if (n > 0.0) f *= target / n;
    }
    return f;
}

// the norms module's report shape: {norm_name, parameters, value}
json norm_report(const std::string& name, const json& parameters, double value) {
    return json{{"norm_name", name}, {"parameters", parameters}, {"value", value}};
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << text;
    if (!os) throw std::runtime_error("write failed for " + path.string());
}

void write_report(const fs::path& path, const json& report) {
    write_text(path, report.dump(2) + "\n");
}

void write_diagnostics_csv(const fs::path& path, const std::vector<DiagnosticRecord>& records) {
    std::string out = "t,b_l2_sq,b_hbeta_sq,u_halpha_sq,u_weak_lorentz,energy_residual,"
                      "max_div_b,max_div_u\n";
    for (const auto& r : records) {
        out += fmt_double(r.t) + "," + fmt_double(r.b_l2_sq) + "," + fmt_double(r.b_hbeta_sq) +
               "," + fmt_double(r.u_halpha_sq) + "," + fmt_double(r.u_weak_lorentz) + "," +
               fmt_double(r.energy_residual) + "," + fmt_double(r.max_div_b) + "," +
               fmt_double(r.max_div_u) + "\n";
    }
    write_text(path, out);
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const json& cfg, const fs::path& outdir, std::uint64_t seed) {
    check_keys(cfg, "config", {"grid", "model", "time", "initial"}, {"seed", "output_dir"});
    ModelParams p;
    p.grid = parse_grid(cfg["grid"]);
    parse_model(cfg["model"], p);
    parse_time(cfg["time"], p);
    p.validate();
    SpectralField b0 = parse_initial(cfg["initial"], p.grid, p.trunc, seed);

    json report;
    int exit_code = 0;
    try {
        SimulationResult res = simulate(p, b0);
        write_diagnostics_csv(outdir / "diagnostics.csv", res.records);
        int snap_id = 0;
        for (const auto& [t, field] : res.snapshots) {
            char name[64];
            std::snprintf(name, sizeof(name), "snapshot_%06d.fmhd", snap_id++);
            write_snapshot((outdir / name).string(), field);
        }
        double worst_resid = 0.0, worst_div = 0.0;
        bool monotone = true;
        for (std::size_t i = 0; i < res.records.size(); ++i) {
            const auto& r = res.records[i];
            worst_resid = std::max(worst_resid, r.energy_residual);
            worst_div = std::max(worst_div, std::max(r.max_div_b, r.max_div_u));
            if (i > 0 && res.records[i].b_l2_sq >
                             res.records[i - 1].b_l2_sq * (1.0 + 1e-10) + 1e-30)
                monotone = false;
        }
        report["status"] = "completed";
        report["steps"] = res.records.size() - 1;
        report["final_time"] = res.records.back().t;
        report["final_b_l2_sq"] = res.records.back().b_l2_sq;
        report["max_energy_residual"] = worst_resid;
        report["max_divergence"] = worst_div;
        report["b_l2_monotone_nonincreasing"] = monotone;
        report["final_norms"] = json::array(
            {norm_report("lebesgue", {{"p", 2.0}}, lebesgue_norm(res.b_final, 2.0)),
             norm_report("sobolev_homogeneous", {{"s", p.beta}},
                         sobolev_norm(res.b_final, p.beta, true)),
             norm_report("lorentz_weak_velocity",
                         {{"p", p.grid.d / (p.grid.d + 1.0 - 2.0 * p.alpha)}},
                         res.records.back().u_weak_lorentz)});
    } catch (const SimulationAbort& e) {
        report["status"] = std::string("aborted: ") + e.what();
        exit_code = 2;
    }
    write_report(outdir / "report.json", report);
    return exit_code;
}

// ------------------------------------------------------------------ stokes

int cmd_stokes(const json& cfg, const fs::path& outdir, const fs::path& config_dir) {
    check_keys(cfg, "config", {"model", "input_snapshot"},
               {"seed", "output_dir", "max_plugback_residual", "max_energy_residual"});
    check_keys(cfg["model"], "model", {"alpha"}, {"nu"});
    double alpha = get_num(cfg["model"], "model", "alpha");
    double nu = get_num_or(cfg["model"], "nu", 1.0);

    fs::path input = cfg["input_snapshot"].get<std::string>();
    if (input.is_relative()) input = config_dir / input;
    SpectralField F = read_snapshot(input.string());
    if (F.components() != F.grid().d * F.grid().d)
        throw ConfigError("stokes: input snapshot is not a 2-tensor field");

    StokesSolution sol = solve_stokes_spectral(F, alpha, nu);
    double plugback = stokes_plugback_residual(sol, F);
    double energy = stokes_energy_residual(sol, F);
    write_snapshot((outdir / "velocity.fmhd").string(), sol.velocity);
    write_snapshot((outdir / "pressure.fmhd").string(), sol.pressure);

    bool theory_range = alpha > 0.5 && alpha < 0.5 * (F.grid().d + 1);
    json report{{"alpha", alpha},
                {"nu", nu},
                {"plugback_residual", plugback},
                {"energy_residual", energy},
                {"alpha_in_theory_range", theory_range}};
    write_report(outdir / "report.json", report);

    double max_pb = get_num_or(cfg, "max_plugback_residual", 1e-10);
    double max_en = get_num_or(cfg, "max_energy_residual", 1e-9);
    return (plugback <= max_pb && energy <= max_en) ? 0 : 2;
}

// ------------------------------------------------------------ kernel-check

TestFn parse_test_fn(const json& j) {
    check_keys(j, "psi", {"shape"}, {"a", "b"});
    TestFn fn;
    std::string shape = j["shape"].get<std::string>();
    if (shape == "gaussian")
        fn.shape = TestFnShape::gaussian;
    else if (shape == "x_gaussian")
        fn.shape = TestFnShape::x_gaussian;
    else if (shape == "xx_gaussian")
        fn.shape = TestFnShape::xx_gaussian;
    else
        throw ConfigError("psi.shape: unknown shape '" + shape + "'");
    fn.a = j.contains("a") ? j["a"].get<int>() : 0;
    fn.b = j.contains("b") ? j["b"].get<int>() : 0;
    return fn;
}

int cmd_kernel_check(const json& cfg, const fs::path& outdir) {
    check_keys(cfg, "config", {},
               {"seed", "output_dir", "identity_checks", "coefficient_checks",
                "max_discrepancy"});
    double tol = get_num_or(cfg, "max_discrepancy", 1e-6);

    json checks = json::array();
    bool ok = true;

    if (cfg.contains("identity_checks")) {
        for (const auto& c : cfg["identity_checks"]) {
            check_keys(c, "identity_checks[]", {"part", "lambda", "d", "psi"},
                       {"j", "k", "l"});
            TestFn fn = parse_test_fn(c["psi"]);
            IdentityCheckResult res = fourier_identity_check(
                c["part"].get<int>(), c["lambda"].get<double>(), c["d"].get<int>(),
                c.contains("j") ? c["j"].get<int>() : 0, c.contains("k") ? c["k"].get<int>() : 0,
                c.contains("l") ? c["l"].get<int>() : 0, fn);
            bool pass = res.rel_discrepancy < tol;
            ok = ok && pass;
            checks.push_back(json{{"part", res.part},
                                  {"lambda", res.lambda},
                                  {"indices", {res.j, res.k, res.l}},
                                  {"psi", res.test_fn},
                                  {"frequency_side", {res.frequency_side.real(), res.frequency_side.imag()}},
                                  {"space_side", {res.space_side.real(), res.space_side.imag()}},
                                  {"rel_discrepancy", res.rel_discrepancy},
                                  {"pass", pass}});
        }
    }

    json coeffs = json::array();
    if (cfg.contains("coefficient_checks")) {
        for (const auto& c : cfg["coefficient_checks"]) {
            check_keys(c, "coefficient_checks[]", {"alpha", "d"}, {});
            double a = c["alpha"].get<double>();
            int d = c["d"].get<int>();
            coeffs.push_back(json{{"alpha", a}, {"d", d}, {"coefficient", kernel_coefficient(a, d)}});
        }
    }

    json report{{"identity_checks", checks}, {"coefficients", coeffs}, {"all_pass", ok}};
    write_report(outdir / "report.json", report);
    return ok ? 0 : 2;
}

// ------------------------------------------------------------------ regime

json regime_to_json(const RegimeReport& r) {
    return json{{"d", r.d},
                {"alpha", r.alpha},
                {"beta", r.beta},
                {"existence", r.existence},
                {"uniqueness", r.uniqueness},
                {"min_combination", r.min_combination},
                {"existence_margin", r.existence_margin},
                {"uniqueness_margin", r.uniqueness_margin},
                {"alpha_lower_margin", r.alpha_lower_margin},
                {"alpha_upper_margin", r.alpha_upper_margin},
                {"beta_uniqueness_margin", r.beta_uniqueness_margin},
                {"remark_cases", r.remark_cases}};
}

int cmd_regime(const json& cfg, const fs::path& outdir) {
    check_keys(cfg, "config", {}, {"seed", "output_dir", "d", "alpha", "beta", "table"});
    json report;
    if (cfg.contains("table")) {
        json rows = json::array();
        for (const auto& row : cfg["table"]) {
            if (!row.is_array() || row.size() != 3)
                throw ConfigError("regime.table: rows must be [d, alpha, beta]");
            rows.push_back(regime_to_json(classify_regime(
                row[0].get<int>(), row[1].get<double>(), row[2].get<double>())));
        }
        report["table"] = rows;
    } else {
        if (!cfg.contains("d") || !cfg.contains("alpha") || !cfg.contains("beta"))
            throw ConfigError("regime: need d, alpha, beta (or a table)");
        report = regime_to_json(classify_regime(cfg["d"].get<int>(), cfg["alpha"].get<double>(),
                                                cfg["beta"].get<double>()));
    }
    write_report(outdir / "report.json", report);
    return 0;
}

// ---------------------------------------------------------- estimate-check

json ratio_to_json(const RatioReport& r) {
    return json{{"name", r.name},
                {"trials", r.trials},
                {"skipped", r.skipped},
                {"max_ratio", r.max_ratio},
                {"min_ratio", r.min_ratio}};
}

int cmd_estimate_check(const json& cfg, const fs::path& outdir, std::uint64_t seed) {
    check_keys(cfg, "config", {"estimate", "grid", "trials"},
               {"seed", "output_dir", "alpha", "beta", "mu", "s0", "s", "p", "p1", "theta",
                "gamma", "doubling", "max_growth"});
    std::string which = cfg["estimate"].get<std::string>();
    GridSpec grid = parse_grid(cfg["grid"]);
    int trials = static_cast<int>(get_num(cfg, "config", "trials"));
    bool doubling = cfg.contains("doubling") ? cfg["doubling"].get<bool>() : true;
    double max_growth = get_num_or(cfg, "max_growth", 2.0);

    auto run_at = [&](const GridSpec& g) -> RatioReport {
        if (which == "product") {
            double alpha = get_num(cfg, "config", "alpha");
            double beta = get_num(cfg, "config", "beta");
            double mu = get_num_or(cfg, "mu", 0.0);
            ExponentSelection sel = exponent_search(g.d, alpha, beta, mu);
            return product_estimate_check(alpha, beta, sel, trials, g, seed);
        }
        if (which == "gagliardo")
            return gagliardo_check(grid.d, get_num(cfg, "config", "s0"),
                                   get_num(cfg, "config", "s"), get_num(cfg, "config", "p"),
                                   get_num(cfg, "config", "p1"), get_num(cfg, "config", "theta"),
                                   trials, g, seed);
        if (which == "sobolev_lorentz")
            return sobolev_lorentz_check(grid.d, get_num(cfg, "config", "s"),
                                         get_num(cfg, "config", "p"), get_num(cfg, "config", "p1"),
                                         get_num(cfg, "config", "theta"), trials, g, seed);
        if (which == "commutator")
            return commutator_check(grid.d, get_num(cfg, "config", "s"),
                                    get_num(cfg, "config", "gamma"), trials, g, seed);
        throw ConfigError("estimate-check: unknown estimate '" + which + "'");
    };

    RatioReport base = run_at(grid);
    json report{{"estimate", which}, {"base", ratio_to_json(base)}};
    int exit_code = 0;
    if (doubling) {
        GridSpec fine = grid;
        fine.M = 2 * grid.M;
        RatioReport refined = run_at(fine);
        double growth = (base.max_ratio > 0.0) ? refined.max_ratio / base.max_ratio : 0.0;
        report["refined"] = ratio_to_json(refined);
        report["max_ratio_growth"] = growth;
        report["stable"] = growth < max_growth;
        if (!(growth < max_growth)) exit_code = 2;
    }
    write_report(outdir / "report.json", report);
    return exit_code;
}

// ------------------------------------------------------------- convergence

int cmd_convergence(const json& cfg, const fs::path& outdir, std::uint64_t seed) {
    check_keys(cfg, "config", {"grid", "model", "time", "initial", "r_list"},
               {"seed", "output_dir"});
    ModelParams p;
    p.grid = parse_grid(cfg["grid"]);
    parse_model(cfg["model"], p);
    parse_time(cfg["time"], p);
    std::vector<double> r_list = cfg["r_list"].get<std::vector<double>>();
    SpectralField b0 = parse_initial(cfg["initial"], p.grid, p.trunc, seed);

    ConvergenceReport rep = convergence_study(p, r_list, b0);
    json report{{"r_values", rep.r_values},
                {"errors", rep.errors},
                {"strictly_decreasing", rep.strictly_decreasing}};
    write_report(outdir / "report.json", report);
    return rep.strictly_decreasing ? 0 : 2;
}

// --------------------------------------------------------------- stability

int cmd_stability(const json& cfg, const fs::path& outdir, std::uint64_t seed) {
    check_keys(cfg, "config", {"grid", "model", "time", "initial", "delta"},
               {"seed", "output_dir", "perturbation_seed", "quadratic_ratio_check",
                "ratio_bounds"});
    ModelParams p;
    p.grid = parse_grid(cfg["grid"]);
    parse_model(cfg["model"], p);
    parse_time(cfg["time"], p);
    double delta = get_num(cfg, "config", "delta");
    std::uint64_t pseed =
        cfg.contains("perturbation_seed") ? cfg["perturbation_seed"].get<std::uint64_t>() : 777;
    SpectralField b0 = parse_initial(cfg["initial"], p.grid, p.trunc, seed);

    StabilityReport full = stability_experiment(p, b0, delta, pseed);
    json report{{"in_uniqueness_regime", full.in_uniqueness_regime},
                {"delta", delta},
                {"fitted_C", full.fitted_C},
                {"envelope_sup", full.envelope_sup},
                {"final_D", full.final_D},
                {"D0", full.D.empty() ? 0.0 : full.D.front()},
                {"lambda_exponent", full.lambda_exponent},
                {"mu_exponent", full.mu_exponent}};
    if (!full.in_uniqueness_regime) report["label"] = "out-of-theory";

    int exit_code = 0;
    bool ratio_check = cfg.contains("quadratic_ratio_check")
                           ? cfg["quadratic_ratio_check"].get<bool>()
                           : true;
    if (ratio_check && delta > 0.0) {
        StabilityReport half = stability_experiment(p, b0, 0.5 * delta, pseed);
        double ratio = (half.final_D > 0.0) ? full.final_D / half.final_D : 0.0;
        report["final_D_half_delta"] = half.final_D;
        report["quadratic_ratio"] = ratio;
        double lo = 3.2, hi = 4.8;
        if (cfg.contains("ratio_bounds")) {
            lo = cfg["ratio_bounds"][0].get<double>();
            hi = cfg["ratio_bounds"][1].get<double>();
        }
        bool pass = ratio >= lo && ratio <= hi;
        report["quadratic_ratio_pass"] = pass;
        if (full.in_uniqueness_regime && !pass) exit_code = 2;
    }
    if (full.envelope_sup > 1.0 + 1e-9) exit_code = 2;
    write_report(outdir / "report.json", report);
    return exit_code;
}

// ---------------------------------------------------------- bogovskii-check

int cmd_bogovskii_check(const json& cfg, const fs::path& outdir) {
    check_keys(cfg, "config", {},
               {"seed", "output_dir", "d", "half_width", "n_cells", "refinement", "max_error"});
    BoxGrid grid;
    grid.d = cfg.contains("d") ? cfg["d"].get<int>() : 2;
    grid.A = get_num_or(cfg, "half_width", 4.0);
    grid.n_cells = cfg.contains("n_cells") ? cfg["n_cells"].get<int>() : 256;
    grid.validate();
    double max_error = get_num_or(cfg, "max_error", 1e-6);

    BumpWeights w;
    w.d = grid.d;
    json per_function = json::array();
    double worst = 0.0;
    for (const auto& [name, g] : smooth_corpus(grid)) {
        std::vector<BoxFunction> B = bogovskii_B(g, w);
        BoxFunction div = fd_divergence(B);
        double total = box_integral(g);
        double err = 0.0;
        const int N = grid.nodes();
        std::size_t flat = 0;
        std::array<int, 3> idx{0, 0, 0};
        for (flat = 0; flat < div.values.size(); ++flat) {
            std::size_t rem = flat;
            for (int ax = grid.d - 1; ax >= 0; --ax) {
                idx[ax] = static_cast<int>(rem % static_cast<std::size_t>(N));
                rem /= static_cast<std::size_t>(N);
            }
            std::array<double, 3> x{0.0, 0.0, 0.0};
            for (int ax = 0; ax < grid.d; ++ax) x[ax] = grid.coord(idx[ax]);
            double target = g.values[flat] - w.phi(x) * total;
            err = std::max(err, std::abs(div.values[flat] - target));
        }
        worst = std::max(worst, err);
        per_function.push_back(json{{"name", name}, {"max_error", err}});
    }

    json report{{"d", grid.d},
                {"n_cells", grid.n_cells},
                {"half_width", grid.A},
                {"per_function", per_function},
                {"max_error", worst},
                {"pass", worst < max_error}};
    write_report(outdir / "report.json", report);
    return worst < max_error ? 0 : 2;
}

}  // namespace

int run_subcommand(const std::string& subcommand, const std::string& config_path,
                   const RunOverrides& overrides) {
    try {
        std::ifstream is(config_path);
        if (!is) {
            std::cerr << "error: cannot open config file '" << config_path << "'\n";
            return 1;
        }
        json cfg;
        try {
            cfg = json::parse(is);
        } catch (const json::parse_error& e) {
            std::cerr << "error: config parse failure: " << e.what() << "\n";
            return 1;
        }

        std::uint64_t seed = 12345;
        if (cfg.contains("seed")) seed = cfg["seed"].get<std::uint64_t>();
        if (overrides.seed) seed = *overrides.seed;

        fs::path outdir = ".";
        if (cfg.contains("output_dir")) outdir = cfg["output_dir"].get<std::string>();
        if (overrides.output_dir) outdir = *overrides.output_dir;
        fs::create_directories(outdir);

        fs::path config_dir = fs::path(config_path).parent_path();
        if (config_dir.empty()) config_dir = ".";

        if (subcommand == "simulate") return cmd_simulate(cfg, outdir, seed);
        if (subcommand == "stokes") return cmd_stokes(cfg, outdir, config_dir);
        if (subcommand == "kernel-check") return cmd_kernel_check(cfg, outdir);
        if (subcommand == "regime") return cmd_regime(cfg, outdir);
        if (subcommand == "estimate-check") return cmd_estimate_check(cfg, outdir, seed);
        if (subcommand == "convergence") return cmd_convergence(cfg, outdir, seed);
        if (subcommand == "stability") return cmd_stability(cfg, outdir, seed);
        if (subcommand == "bogovskii-check") return cmd_bogovskii_check(cfg, outdir);
        std::cerr << "error: unknown subcommand '" << subcommand << "'\n";
        return 1;
    } catch (const AssertionFailure& e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return 2;
    } catch (const SimulationAbort& e) {
        std::cerr << "simulation aborted: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"fmhd: fractional Stokes-Magneto pseudo-spectral toolkit"};
    app.require_subcommand(1);

    static const std::vector<std::pair<std::string, std::string>> names = {
        {"simulate", "evolve the truncated Stokes-Magneto system"},
        {"stokes", "fractional Stokes solve of a tensor-field snapshot"},
        {"kernel-check", "Fourier-identity and kernel-coefficient checks"},
        {"regime", "existence/uniqueness regime classification"},
        {"estimate-check", "product/interpolation inequality measurements"},
        {"convergence", "Cauchy convergence study in the cutoff R"},
        {"stability", "perturbation growth and Gronwall envelope"},
        {"bogovskii-check", "divergence-solving operator corpus run"}};
    std::string config_path;
    RunOverrides overrides;
    std::uint64_t seed_flag = 0;
    std::string outdir_flag;

    std::vector<CLI::App*> subs;
    for (const auto& [name, blurb] : names) {
        CLI::App* sub = app.add_subcommand(name, blurb);
        sub->add_option("config", config_path, "JSON config file")->required();
        sub->add_option("--seed", seed_flag, "override the config seed");
        sub->add_option("--output-dir", outdir_flag, "override the output directory");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            if (subs[i]->count("--seed") > 0) overrides.seed = seed_flag;
            if (subs[i]->count("--output-dir") > 0) overrides.output_dir = outdir_flag;
            return run_subcommand(names[i].first, config_path, overrides);
        }
    }
    return 1;
}

}  // namespace fmhd
