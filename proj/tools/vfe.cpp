// Command-line front end: exact polygon construction, pseudo-spectral
// simulation, cross-validation analysis and table reproduction.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "vfe/analysis.hpp"
#include "vfe/gauss_sums.hpp"
#include "vfe/serialize.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_bad_args = 2;
constexpr int exit_numerical = 3;
constexpr int exit_acceptance = 4;

fs::path output_root() {
    if (const char* env = std::getenv("VFE_OUT_DIR")) return fs::path(env);
    return fs::path(".");
}

fs::path resolve_out(const std::string& out) {
    const fs::path p(out);
    return p.is_absolute() ? p : output_root() / p;
}

// ---------------------------------------------------------------------------
// line-oriented key=value config with a versioned header
// ---------------------------------------------------------------------------

using Config = std::map<std::string, std::string>;

Config load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config: " + path.string());
    std::string line;
    bool header_seen = false;
    Config cfg;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# vfe-config", 0) == 0) {
            if (line != "# vfe-config v1")
                throw std::runtime_error("unsupported config version: " + line);
            header_seen = true;
            continue;
        }
        if (line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad config line: " + line);
        cfg[line.substr(0, eq)] = line.substr(eq + 1);
    }
    if (!header_seen) throw std::runtime_error("config missing '# vfe-config v1' header");
    return cfg;
}

void save_config(const Config& cfg, const fs::path& path) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    out << "# vfe-config v1\n";
    for (const auto& [k, v] : cfg) out << k << '=' << v << '\n';
}

// runs independent jobs on worker threads, results collected in input order
template <typename Job>
auto dispatch(const std::vector<Job>& jobs) {
    using Result = decltype(jobs.front()());
    std::vector<Result> results(jobs.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(jobs.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
        return results;
    }
    std::vector<std::future<Result>> futures;
    futures.reserve(jobs.size());
    for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = futures[i].get();
    return results;
}

// ---------------------------------------------------------------------------
// gauss
// ---------------------------------------------------------------------------

int cmd_gauss(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (c < 1) {
        std::cerr << "gauss: c must be >= 1\n";
        return exit_bad_args;
    }
    if (vfe::gauss::gcd(a, c) != 1) {
        std::cerr << "gauss: closed form needs gcd(a, c) = 1 (gcd = "
                  << vfe::gauss::gcd(a, c) << ")\n";
        return exit_bad_args;
    }
    const vfe::gauss::GaussArgs args{a, b, c};
    const auto direct = vfe::gauss::sum_direct(args);
    const auto closed = vfe::gauss::sum_closed(args);
    const double mag = vfe::gauss::magnitude(args);
    const double diff = std::abs(direct - closed);
    std::cout << "G(" << a << ", " << b << ", " << c << ")\n"
              << "  direct  = " << vfe::io::format_full(direct.real()) << " + "
              << vfe::io::format_full(direct.imag()) << "i\n"
              << "  closed  = " << vfe::io::format_full(closed.real()) << " + "
              << vfe::io::format_full(closed.imag()) << "i\n"
              << "  |G|     = " << vfe::io::format_full(mag) << "\n"
              << "  agree   = " << (diff < 1e-10 ? "yes" : "NO") << " (|direct - closed| = "
              << diff << ")\n";
    return diff < 1e-10 ? exit_ok : exit_numerical;
}

// ---------------------------------------------------------------------------
// algebraic
// ---------------------------------------------------------------------------

int cmd_algebraic(int sides, std::int64_t p, std::int64_t q, const std::string& out) {
    const auto time = vfe::RationalTime::make(sides, p, q);
    const auto check = vfe::closure_check(time);
    vfe::SkewPolygon poly;
    try {
        poly = vfe::build_polygon(time);
    } catch (const std::runtime_error& e) {
        std::cerr << "algebraic: " << e.what() << "\n";
        return exit_numerical;
    }
    const fs::path dir = resolve_out(out);
    fs::create_directories(dir);
    const auto stem = "polygon_M" + std::to_string(time.sides) + "_p" + std::to_string(time.p) +
                      "_q" + std::to_string(time.q);
    vfe::io::write_polygon_csv(poly, dir / (stem + ".csv"));
    vfe::io::write_polygon_json(poly, dir / (stem + ".json"));
    std::cout << "t = (2pi/" << time.sides << "^2) * " << time.p << "/" << time.q << "\n"
              << "closure residual: trace " << check.trace_residual << ", M-th power "
              << check.root_residual << "\n"
              << "sides: " << poly.distinct_sides() << " (segments " << poly.segments() << ")\n"
              << "closure gap |X(2pi) - X(0)|: " << poly.closure_gap() << "\n"
              << "wrote " << (dir / (stem + ".csv")).string() << ", .json\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

std::vector<double> parse_dump_times(const std::string& spec_str, int sides) {
    if (spec_str.empty()) return {};
    if (spec_str == "paper1260") return vfe::paper_comparison_times(sides);
    std::ifstream in(spec_str);
    if (!in) throw std::runtime_error("cannot read dump-times file: " + spec_str);
    std::vector<double> times;
    double t;
    while (in >> t) times.push_back(t);
    return times;
}

int cmd_simulate(const vfe::GridSpec& spec, const std::string& dump_times_arg,
                 const std::string& out) {
    spec.validate();
    const auto dump_times = parse_dump_times(dump_times_arg, spec.sides);
    const fs::path dir = resolve_out(out);
    fs::create_directories(dir);

    const auto t0 = std::chrono::steady_clock::now();
    const vfe::Trajectory traj = vfe::run(spec, dump_times);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<fs::path> files;
    vfe::io::write_trajectory_csv(traj, dir / "trajectory.csv");
    files.push_back(dir / "trajectory.csv");
    std::vector<std::int64_t> dump_steps;
    for (const auto& dump : traj.dumps) {
        const auto step = static_cast<std::int64_t>(std::llround(dump.time / spec.dt()));
        dump_steps.push_back(step);
        const auto file = dir / ("state_" + std::to_string(step) + ".csv");
        vfe::io::write_state_csv(dump, file);
        files.push_back(file);
    }
    vfe::io::write_run_manifest(spec, dump_steps, files, wall, dir / "manifest.json");

    Config cfg{{"subcommand", "simulate"},
               {"M", std::to_string(spec.sides)},
               {"nodes_per_side", std::to_string(spec.nodes_per_side)},
               {"steps", std::to_string(spec.steps)},
               {"dump_times", dump_times_arg},
               {"out", out}};
    save_config(cfg, dir / "config.vfe");

    std::cout << "simulated M=" << spec.sides << " N/M=" << spec.nodes_per_side << " steps="
              << spec.steps << " in " << wall << " s\n"
              << "wrote " << files.size() << " data files + manifest.json to " << dir.string()
              << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    std::string run_dir;
    std::string out = "analysis";
    int phi_terms = 8192;
    std::int64_t holder_p = 1;
    std::int64_t holder_q = 5;
    double window_min = 1e-4;
    double window_max = 1e-2;
};

int cmd_analyze(const AnalyzeOptions& opt) {
    const vfe::Trajectory traj = vfe::io::read_run(opt.run_dir);
    const int sides = traj.spec.sides;
    const fs::path dir = resolve_out(opt.out);
    fs::create_directories(dir);

    json report;
    report["format"] = "vfe-report-1";
    report["run"] = opt.run_dir;
    report["M"] = sides;

    const vfe::SpeedFit speed = vfe::fit_center_speed(traj);
    report["speed"] = {{"c_M", speed.speed}, {"max_deviation", speed.max_deviation}};

    if (!traj.dumps.empty()) {
        std::vector<vfe::RationalTime> times;
        times.reserve(traj.dumps.size());
        for (const auto& dump : traj.dumps) {
            const auto step = static_cast<std::int64_t>(std::llround(dump.time / traj.spec.dt()));
            times.push_back(vfe::RationalTime::make(sides, step, traj.spec.steps));
        }
        const double max_err = vfe::compare_trajectories(traj.dumps, times, speed.speed);
        report["trajectory_comparison"] = {{"states", traj.dumps.size()}, {"max_error", max_err}};

        if (sides == 3) {
            const double t13 = traj.spec.t_final() / 3.0;
            for (const auto& dump : traj.dumps) {
                if (std::abs(dump.time - t13) < 1e-6 * t13) {
                    report["tangent_midpoints"] = {
                        {"max_componentwise_error", vfe::compare_tangent_midpoints(dump, 3)}};
                    break;
                }
            }
        }
    }

    const auto z_plain = vfe::corner_curve(traj);
    const auto z_norm = vfe::normalized_corner_curve(traj, speed.speed);
    vfe::io::write_time_samples_csv(z_plain, "z", dir / "z_t.csv");

    std::vector<std::complex<double>> zs, phis;
    zs.reserve(z_norm.size());
    phis.reserve(z_norm.size());
    std::vector<vfe::TimeSample> phi_samples;
    phi_samples.reserve(z_norm.size());
    for (const auto& s : z_norm) {
        zs.push_back(s.value);
        const auto phi = vfe::phi_series(s.t, opt.phi_terms);
        phis.push_back(phi);
        phi_samples.push_back({s.t, phi});
    }
    vfe::io::write_time_samples_csv(phi_samples, "phi", dir / "phi_t.csv");

    const vfe::AffineFit affine = vfe::affine_fit(zs, phis);
    report["affine"] = {{"lambda", affine.lambda},
                        {"mu_re", affine.mu.real()},
                        {"mu_im", affine.mu.imag()},
                        {"max_abs_err", affine.max_abs_err},
                        {"max_rel_err", affine.max_rel_err},
                        {"phi_terms", opt.phi_terms}};

    try {
        const double t_corner = static_cast<double>(opt.holder_p) / static_cast<double>(opt.holder_q);
        const vfe::HolderFit holder =
            vfe::holder_exponent(z_norm, t_corner, opt.window_min, opt.window_max);
        report["holder"] = {{"p", opt.holder_p},         {"q", opt.holder_q},
                            {"exponent", holder.exponent}, {"r_squared", holder.r_squared},
                            {"window_min", holder.window_min}, {"window_max", holder.window_max},
                            {"samples", holder.samples}};
        // log-log pairs for plotting
        std::ofstream pairs(dir / "holder_pairs.csv");
        pairs << "log_dt,log_dz\n";
        std::size_t nearest = 0;
        double best = std::abs(z_norm[0].t - t_corner);
        for (std::size_t i = 1; i < z_norm.size(); ++i)
            if (std::abs(z_norm[i].t - t_corner) < best) {
                best = std::abs(z_norm[i].t - t_corner);
                nearest = i;
            }
        for (const auto& s : z_norm) {
            const double ad = std::abs(s.t - t_corner);
            if (ad < opt.window_min || ad > opt.window_max) continue;
            const double dz = std::abs(s.value - z_norm[nearest].value);
            if (dz > 0.0)
                pairs << vfe::io::format_full(std::log(ad)) << ','
                      << vfe::io::format_full(std::log(dz)) << '\n';
        }
    } catch (const std::invalid_argument& e) {
        report["holder"] = {{"error", e.what()}};
    }

    std::ofstream out(dir / "report.json");
    out << report.dump(2) << '\n';
    std::cout << "analysis of " << opt.run_dir << ":\n"
              << "  c_M = " << speed.speed << ", max|h - c_M t| = " << speed.max_deviation << "\n";
    if (report.contains("trajectory_comparison"))
        std::cout << "  max|X_num - c_M t e_z - X_alg| = "
                  << report["trajectory_comparison"]["max_error"].get<double>() << "\n";
    if (report.contains("tangent_midpoints"))
        std::cout << "  tangent midpoint error = "
                  << report["tangent_midpoints"]["max_componentwise_error"].get<double>() << "\n";
    std::cout << "  affine: lambda = " << affine.lambda << ", max_abs_err = " << affine.max_abs_err
              << "\n"
              << "wrote report.json to " << dir.string() << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

void print_results(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
}

vfe::GridSpec desk_spec(int sides, const std::string& scale) {
    vfe::GridSpec spec;
    spec.sides = sides;
    if (scale == "paper") {
        spec.nodes_per_side = 8192;
        spec.steps = 151200LL * 256LL;  // 151200 * 4^r with N/M = 512 * 2^r, r = 4
    } else {
        spec.nodes_per_side = 512;
        spec.steps = 151200;
    }
    return spec;
}

int finish(const std::vector<CriterionResult>& results, const std::string& table,
           const std::string& out) {
    print_results(results);
    json j;
    j["format"] = "vfe-report-1";
    j["table"] = table;
    j["criteria"] = json::array();
    bool all = true;
    for (const auto& r : results) {
        j["criteria"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all = all && r.pass;
    }
    const fs::path dir = resolve_out(out);
    fs::create_directories(dir);
    std::ofstream f(dir / ("reproduce_" + table + ".json"));
    f << j.dump(2) << '\n';
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all ? exit_ok : exit_acceptance;
}

std::string fmt(double v) {
    std::ostringstream oss;
    oss.precision(5);
    oss << v;
    return oss.str();
}

int cmd_reproduce(const std::string& table, const std::string& scale, const std::string& out) {
    std::vector<CriterionResult> results;

    if (table == "table1") {
        const std::vector<int> ms = {3, 5, 10};
        const std::map<int, double> expected_dev = {
            {3, 4.3096e-5}, {5, 4.8504e-6}, {10, 2.8697e-7}};
        std::vector<std::function<vfe::SpeedFit()>> jobs;
        for (const int m : ms)
            jobs.emplace_back([m, &scale] { return vfe::fit_center_speed(vfe::run(desk_spec(m, scale))); });
        const auto fits = dispatch(jobs);
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const int m = ms[i];
            const auto& fit = fits[i];
            if (m == 3) {
                const bool ok = std::abs(fit.speed - 0.7644) <= 5e-3;
                results.push_back({"c_3 = 0.7644 +- 5e-3", ok, "measured " + fmt(fit.speed)});
            }
            const double ref = expected_dev.at(m);
            const bool ok = fit.max_deviation <= 2.0 * ref && fit.max_deviation >= ref / 2.0;
            results.push_back({"max|h - c_M t| within factor 2 (M=" + std::to_string(m) + ")", ok,
                               "measured " + fmt(fit.max_deviation) + ", reference " + fmt(ref)});
        }
        return finish(results, table, out);
    }

    if (table == "table2") {
        const std::vector<std::pair<int, double>> cases = {{3, 2.4847e-3}, {10, 1.5782e-4}};
        for (const auto& [m, ref] : cases) {
            const auto spec = desk_spec(m, scale);
            const auto traj = vfe::run(spec, vfe::paper_comparison_times(m));
            const auto fit = vfe::fit_center_speed(traj);
            std::vector<vfe::RationalTime> times;
            for (const auto& dump : traj.dumps) {
                const auto step = static_cast<std::int64_t>(std::llround(dump.time / spec.dt()));
                times.push_back(vfe::RationalTime::make(m, step, spec.steps));
            }
            const double err = vfe::compare_trajectories(traj.dumps, times, fit.speed);
            const bool ok = err <= 2.0 * ref && err >= ref / 2.0;
            results.push_back({"max|X_num - c_M t e_z - X_alg| within factor 2 (M=" +
                                   std::to_string(m) + ")",
                               ok, "measured " + fmt(err) + ", reference " + fmt(ref)});
        }
        return finish(results, table, out);
    }

    if (table == "riemann") {
        const std::vector<int> ms = {3, 4, 5, 6, 7, 8};
        std::vector<std::function<double()>> jobs;
        for (const int m : ms)
            jobs.emplace_back([m, &scale] {
                const auto traj = vfe::run(desk_spec(m, scale));
                const auto fit = vfe::fit_center_speed(traj);
                const auto z_norm = vfe::normalized_corner_curve(traj, fit.speed);
                std::vector<std::complex<double>> zs, phis;
                for (const auto& s : z_norm) {
                    zs.push_back(s.value);
                    phis.push_back(vfe::phi_series(s.t));
                }
                return vfe::affine_fit(zs, phis).max_abs_err;
            });
        const auto errs = dispatch(jobs);
        std::string seq;
        for (std::size_t i = 0; i < ms.size(); ++i)
            seq += "M=" + std::to_string(ms[i]) + ": " + fmt(errs[i]) + (i + 1 < ms.size() ? ", " : "");
        bool decreasing = true;
        for (std::size_t i = 1; i < 4; ++i) decreasing = decreasing && errs[i] < errs[i - 1];
        results.push_back({"max|phi - lambda_M z_M - mu_M| strictly decreasing over M=3..6",
                           decreasing, seq});
        return finish(results, table, out);
    }

    if (table == "holder") {
        const auto traj = vfe::run(desk_spec(3, scale));
        const auto fit = vfe::fit_center_speed(traj);
        const auto z_norm = vfe::normalized_corner_curve(traj, fit.speed);
        const auto holder = vfe::holder_exponent(z_norm, 1.0 / 5.0);
        const bool ok = holder.exponent >= 0.4 && holder.exponent <= 0.6 && holder.r_squared > 0.95;
        results.push_back({"Holder exponent in [0.4, 0.6] with r^2 > 0.95 at M=3, t_{1,5}", ok,
                           "exponent " + fmt(holder.exponent) + ", r^2 " + fmt(holder.r_squared) +
                               ", " + std::to_string(holder.samples) + " samples"});
        return finish(results, table, out);
    }

    std::cerr << "reproduce: unknown table '" << table << "'\n";
    return exit_bad_args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-path engine for the vortex filament flow of regular polygons"};
    app.require_subcommand(1);

    // gauss
    auto* gauss = app.add_subcommand("gauss", "evaluate a generalized quadratic Gauss sum");
    std::int64_t ga = 0, gb = 0, gc = 1;
    gauss->add_option("-a", ga, "quadratic coefficient")->required();
    gauss->add_option("-b", gb, "linear coefficient")->required();
    gauss->add_option("-c", gc, "modulus (>= 1)")->required();

    // algebraic
    auto* algebraic = app.add_subcommand("algebraic", "construct the exact polygon at t_pq");
    int am = 3;
    std::int64_t ap = 1, aq = 1;
    std::string aout = "algebraic";
    algebraic->add_option("--M", am, "initial sides")->required();
    algebraic->add_option("--p", ap, "numerator")->required();
    algebraic->add_option("--q", aq, "denominator")->required();
    algebraic->add_option("--out", aout, "output directory");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "pseudo-spectral evolution over one period");
    int sm = 3, snodes = 512;
    std::int64_t ssteps = 151200;
    std::string sdump, sout = "run", sconfig;
    simulate->add_option("--M", sm, "initial sides");
    simulate->add_option("--nodes-per-side", snodes, "N/M, a power of two");
    simulate->add_option("--steps", ssteps, "time steps");
    simulate->add_option("--dump-times", sdump, "'paper1260' or a file of times");
    simulate->add_option("--out", sout, "output directory");
    simulate->add_option("--config", sconfig, "key=value config file");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "cross-validation and fractality diagnostics");
    AnalyzeOptions aopt;
    std::string aconfig;
    analyze->add_option("--run", aopt.run_dir, "simulate output directory");
    analyze->add_option("--out", aopt.out, "output directory");
    analyze->add_option("--phi-terms", aopt.phi_terms, "phi series truncation");
    analyze->add_option("--holder-p", aopt.holder_p, "corner time numerator");
    analyze->add_option("--holder-q", aopt.holder_q, "corner time denominator");
    analyze->add_option("--window-min", aopt.window_min, "Holder window lower edge");
    analyze->add_option("--window-max", aopt.window_max, "Holder window upper edge");
    analyze->add_option("--config", aconfig, "key=value config file");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "re-run a published table or figure");
    std::string rtable, rscale = "desk", rout = "reproduce";
    reproduce->add_option("table", rtable, "table1 | table2 | riemann | holder")->required();
    reproduce->add_option("--scale", rscale, "desk | paper")
        ->check(CLI::IsMember({"desk", "paper"}));
    reproduce->add_option("--out", rout, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? exit_ok : exit_bad_args;
    }

    try {
        if (gauss->parsed()) return cmd_gauss(ga, gb, gc);
        if (algebraic->parsed()) return cmd_algebraic(am, ap, aq, aout);
        if (simulate->parsed()) {
            if (!sconfig.empty()) {
                const Config cfg = load_config(sconfig);
                if (cfg.count("M")) sm = std::stoi(cfg.at("M"));
                if (cfg.count("nodes_per_side")) snodes = std::stoi(cfg.at("nodes_per_side"));
                if (cfg.count("steps")) ssteps = std::stoll(cfg.at("steps"));
                if (cfg.count("dump_times")) sdump = cfg.at("dump_times");
                if (cfg.count("out")) sout = cfg.at("out");
            }
            vfe::GridSpec spec;
            spec.sides = sm;
            spec.nodes_per_side = snodes;
            spec.steps = ssteps;
            return cmd_simulate(spec, sdump, sout);
        }
        if (analyze->parsed()) {
            if (!aconfig.empty()) {
                const Config cfg = load_config(aconfig);
                if (cfg.count("run")) aopt.run_dir = cfg.at("run");
                if (cfg.count("out")) aopt.out = cfg.at("out");
                if (cfg.count("phi_terms")) aopt.phi_terms = std::stoi(cfg.at("phi_terms"));
                if (cfg.count("holder_p")) aopt.holder_p = std::stoll(cfg.at("holder_p"));
                if (cfg.count("holder_q")) aopt.holder_q = std::stoll(cfg.at("holder_q"));
                if (cfg.count("window_min")) aopt.window_min = std::stod(cfg.at("window_min"));
                if (cfg.count("window_max")) aopt.window_max = std::stod(cfg.at("window_max"));
            }
            if (aopt.run_dir.empty()) {
                std::cerr << "analyze: --run is required\n";
                return exit_bad_args;
            }
            return cmd_analyze(aopt);
        }
        if (reproduce->parsed()) return cmd_reproduce(rtable, rscale, rout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_args;
    } catch (const vfe::blow_up_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_ok;
}
