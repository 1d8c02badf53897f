#include "homeo/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "homeo/acceptance.hpp"
#include "homeo/errors.hpp"
#include "homeo/report.hpp"
#include "homeo/svg.hpp"
#include "homeo/verify.hpp"

namespace homeo::cli {

namespace {

// Validation failures that map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s, const std::string& whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("cannot parse complex number '" + whole + "'");
    }
    if (used != s.size()) throw UsageError("cannot parse complex number '" + whole + "'");
    return v;
}

PlanePoint to_plane(std::complex<double> c) { return {c.real(), c.imag()}; }

ClosedDisc make_disc(const char* which, const std::string& center, double radius) {
    try {
        return ClosedDisc(to_plane(parse_complex(center)), radius);
    } catch (const InvalidDisc& e) {
        throw UsageError(std::string("invalid ") + which + " disc (requires radius > 0 and |center| + radius < 1): " +
                         e.what());
    }
}

void validate_config(const CliConfig& config) {
    if (config.samples < 8) throw UsageError("--samples must be at least 8");
    for (const auto& f : config.formats) {
        if (f != "json" && f != "csv" && f != "svg") throw UsageError("unknown --format '" + f + "' (json, csv, svg)");
    }
    if (!config.out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(config.out_dir, ec);
        if (ec || !std::filesystem::is_directory(config.out_dir)) {
            throw UsageError("cannot create output directory '" + config.out_dir.string() + "'");
        }
    }
}

bool wants(const CliConfig& config, const char* format) {
    return !config.out_dir.empty() && config.formats.count(format) > 0;
}

void write_file(const CliConfig& config, const char* name, const std::string& content) {
    const auto path = config.out_dir / name;
    std::ofstream os(path, std::ios::binary);
    os << content;
    if (!os) throw std::runtime_error("failed to write " + path.string());
}

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int finish(const CliConfig& config, VerificationReport& report, const Stopwatch& watch, std::ostream& out,
           std::ostream& err) {
    if (config.timing) report.wall_time = watch.seconds();
    out << to_text(report);
    if (wants(config, "json")) write_file(config, "report.json", to_json(report));
    if (report.all_passed()) return kPass;
    err << "failed checks:";
    for (const auto& name : report.failed_names()) err << ' ' << name;
    err << '\n';
    return kCheckFailure;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_swap_disc(const std::string& alpha, double r, const std::string& beta, double s, const CliConfig& config,
                  std::ostream& out, std::ostream& err) {
    const ClosedDisc src = make_disc("source", alpha, r);
    const ClosedDisc dst = make_disc("target", beta, s);
    validate_config(config);
    const Stopwatch watch;

    const CompositeMap h = plan_disc_swap(src, dst);
    VerificationReport report;
    report.seed = config.seed;
    report.checks = disc_swap_checks(src, dst, h, config.seed, config.samples);

    const double displacement = boundary_identity_check(h, {config.seed + 7, config.samples, DiscUniform{}});
    report.checks.push_back(
        CheckResult::make("swap.max_displacement", displacement, 2.0, 0.0, Relation::LessEqual, true));

    out << "support radius t = " << format_number(h.support_radius) << ", chain length " << h.chain.size() << '\n';
    if (wants(config, "svg")) {
        const DiscHighlight marks[] = {{src.center(), src.radius(), "#1f77b4"}, {dst.center(), dst.radius(), "#d62728"}};
        write_file(config, "deformation.svg",
                   deformation_grid_svg([&](PlanePoint z) { return composite_apply(h, z); }, marks));
    }
    return finish(config, report, watch, out, err);
}

int cmd_ball_converge(int q, int k_max, const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (q < 2) throw UsageError("--q must be at least 2 (got " + std::to_string(q) + ")");
    if (k_max < 1 || k_max > 40) throw UsageError("--k-max must be in [1, 40]");
    validate_config(config);
    const Stopwatch watch;

    std::vector<double> ts;
    for (int k = 0; k <= k_max; ++k) ts.push_back(1.0 + std::ldexp(1.0, -k));
    const auto rows = convergence_sweep(q, ts, {config.seed, config.samples, BallUniform{q}});

    VerificationReport report;
    report.seed = config.seed;
    const std::size_t fd_points = std::min<std::size_t>(config.samples, 200);
    const SampleSet fd_samples = generate({config.seed + 1, fd_points, BallUniform{q}});

    for (const auto& row : rows) {
        const double t = row.t;
        const std::string tag = "t=" + format_number(t);
        report.checks.push_back(CheckResult::make("sup_f_minus_id_bound," + tag, row.sup_f_minus_id, (t - 1.0) / 2.0,
                                                  0.0, Relation::LessEqual));
        report.checks.push_back(CheckResult::make("diag_bound," + tag, row.max_diag_dev,
                                                  diag_partial_deviation_bound(t), 0.0, Relation::LessEqual));
        report.checks.push_back(CheckResult::make("offdiag_bound," + tag, row.max_offdiag, offdiag_partial_bound(t),
                                                  0.0, Relation::LessEqual));
        const double envelope = (t - 1.0) / 2.0 + (t * t - 1.0) + t * (t - 1.0);
        report.checks.push_back(
            CheckResult::make("c1_envelope," + tag, row.c1_distance, envelope, 0.0, Relation::LessEqual));

        const RadialBallMapParams p{t, q};
        const VectorMap map = [t](std::span<const double> x, std::span<double> o) { f_apply_into(t, x, o); };
        double fd = 0.0;
        for (std::size_t i = 0; i < fd_samples.size(); ++i) {
            std::vector<double> c(fd_samples.point(i).begin(), fd_samples.point(i).end());
            const double n = BallPoint(c).norm();
            // keep the stencil inside the ball and away from the removable singularity
            if (n > 1.0 - 2.0 * kFdStep) {
                for (double& v : c) v *= (1.0 - 2.0 * kFdStep) / n;
            }
            if (n < 0.05) continue;
            const BallPoint x(std::move(c));
            fd = std::max(fd, fd_jacobian(map, x, kFdStep).max_abs_diff(f_jacobian(p, x)));
        }
        report.checks.push_back(CheckResult::make("jacobian_fd," + tag, fd, 0.0, kFdTol, Relation::Equal));
    }
    if (rows.size() > 1) {
        double worst = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k < rows.size(); ++k) worst = std::max(worst, rows[k].c1_distance - rows[k - 1].c1_distance);
        report.checks.push_back(CheckResult::make("c1_strictly_decreasing", worst, 0.0, 0.0, Relation::Less));
        if (rows.back().t - 1.0 < (rows.front().t - 1.0) / 100.0) {
            report.checks.push_back(CheckResult::make("c1_hundredfold_drop", rows.back().c1_distance,
                                                      rows.front().c1_distance / 100.0, 0.0, Relation::Less));
        }
    }
    out << "final c1 distance " << format_number(rows.back().c1_distance) << " at t = " << format_number(rows.back().t)
        << '\n';
    if (wants(config, "csv")) write_file(config, "sweep.csv", sweep_csv(rows));
    return finish(config, report, watch, out, err);
}

int cmd_probe_sigma(double a, double b, double eps, double delta, const CliConfig& config, std::ostream& out,
                    std::ostream& err) {
    if (!(delta > 0.0 && delta < eps && eps < 1.0 - b && b >= 0.0 && std::isfinite(a))) {
        throw UsageError("probe-sigma requires 0 < delta < eps < 1 - b with 0 <= b < 1");
    }
    validate_config(config);
    const Stopwatch watch;
    VerificationReport report;
    report.seed = config.seed;
    report.checks.push_back(sigma_claim_probe(a, b, eps, delta, {config.seed, config.samples, RadialGrid{2}}));
    const CheckResult& probe = report.checks.back();
    out << (probe.passed ? "claim holds" : "claim violated") << ", measured " << format_number(probe.measured)
        << " vs eps - delta = " << format_number(probe.target) << '\n';
    finish(config, report, watch, out, err);
    return kPass;
}

int cmd_render(const std::string& kind, const std::string& alpha, const std::string& beta, double r, double s,
               double rho, double delta, double a, double b, double eps, double u, const CliConfig& config,
               std::ostream& out) {
    validate_config(config);
    std::string svg;
    try {
        if (kind == "swap") {
            const ClosedDisc src = make_disc("source", alpha, r);
            const ClosedDisc dst = make_disc("target", beta, s);
            const CompositeMap h = plan_disc_swap(src, dst);
            const DiscHighlight marks[] = {{src.center(), src.radius(), "#1f77b4"}, {dst.center(), dst.radius(), "#d62728"}};
            svg = deformation_grid_svg([&](PlanePoint z) { return composite_apply(h, z); }, marks);
        } else if (kind == "radial") {
            const RadialExpansionParams p{to_plane(parse_complex(alpha)), rho, delta};
            validate(p);
            const DiscHighlight marks[] = {{p.alpha, p.rho, "#1f77b4"}, {p.alpha, p.rho + p.delta, "#d62728"}};
            svg = deformation_grid_svg([&](PlanePoint z) { return radial_expansion_apply(p, z); }, marks);
        } else if (kind == "twist") {
            const TwistParams p{a, b, eps};
            validate(p);
            svg = deformation_grid_svg([&](PlanePoint z) { return twist_apply(p, z); });
        } else if (kind == "translation") {
            const TranslationParams p{u, delta};
            validate(p);
            const DiscHighlight marks[] = {{{u, 0.0}, delta, "#1f77b4"}, {{0.0, 0.0}, delta, "#d62728"}};
            svg = deformation_grid_svg([&](PlanePoint z) { return translation_apply(p, z); }, marks);
        } else {
            throw UsageError("--kind must be one of swap, radial, twist, translation");
        }
    } catch (const InvalidParameter& e) {
        throw UsageError(e.what());
    }
    if (config.out_dir.empty()) {
        out << svg;
    } else {
        write_file(config, "deformation.svg", svg);
    }
    return kPass;
}

int cmd_selftest(const CliConfig& config, double tolerance_scale, std::ostream& out, std::ostream& err) {
    validate_config(config);
    AcceptanceOptions options;
    options.seed = config.seed;
    options.tolerance_scale = tolerance_scale;
    options.timing = config.timing;
    const auto results = run_acceptance(options);
    for (const auto& r : results) {
        out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.description << '\n';
    }
    VerificationReport report = acceptance_report(results, options);
    if (wants(config, "json")) write_file(config, "report.json", to_json(report));
    if (report.all_passed()) return kPass;
    err << "failed checks:";
    for (const auto& name : report.failed_names()) err << ' ' << name;
    err << '\n';
    return kCheckFailure;
}

std::set<std::string> split_formats(const std::string& s) {
    std::set<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.insert(item);
    }
    return out;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c != ' '; });
    if (s.empty()) throw UsageError("empty complex number");
    if (const auto comma = s.find(','); comma != std::string::npos) {
        const std::string re = s.substr(0, comma);
        const std::string im = s.substr(comma + 1);
        if (re.empty() || im.empty()) throw UsageError("cannot parse complex number '" + text + "'");
        return {parse_real(re, text), parse_real(im, text)};
    }
    if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not a leading sign or an exponent sign
    for (std::size_t pos = body.size(); pos-- > 1;) {
        if ((body[pos] == '+' || body[pos] == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
            return {parse_real(body.substr(0, pos), text), parse_real(body.substr(pos), text)};
        }
    }
    return {0.0, parse_real(body, text)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Disc homeomorphisms and radial ball maps: construction and numerical verification", "homeo"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig config;
    std::string out_dir;
    std::string formats = "json,csv";
    app.add_option("--seed", config.seed, "PRNG seed")->capture_default_str();
    app.add_option("--samples", config.samples, "sample count (>= 8)")->capture_default_str();
    app.add_option("--out", out_dir, "output directory for report/CSV/SVG files");
    app.add_option("--format", formats, "comma-separated subset of json,csv,svg")->capture_default_str();
    app.add_flag("--timing", config.timing, "record wall-clock time in reports");

    std::string alpha = "0", beta = "0", kind = "swap";
    double r = 0.1, s = 0.1, rho = 0.2, delta = 0.1, a = 0.0, b = 0.5, eps = 0.2, u = 0.3;
    int q = 2, k_max = 10;
    double tolerance_scale = 1.0;

    auto* swap = app.add_subcommand("swap-disc", "plan and verify a homeomorphism carrying one disc onto another");
    swap->add_option("--alpha", alpha, "source center, e.g. 0.3 or 0.3-0.1i or 0.3,-0.1")->required();
    swap->add_option("--r", r, "source radius")->required();
    swap->add_option("--beta", beta, "target center")->required();
    swap->add_option("--s", s, "target radius")->required();

    auto* ball = app.add_subcommand("ball-converge", "sweep t -> 1+ and check the C1 convergence bounds");
    ball->add_option("--q", q, "dimension (>= 2)")->capture_default_str();
    ball->add_option("--k-max", k_max, "sweep t_k = 1 + 2^-k for k = 0..k-max")->capture_default_str();

    auto* probe = app.add_subcommand("probe-sigma", "measure the blend-width claim of the annular twist");
    probe->add_option("--a", a, "rotation angle")->required();
    probe->add_option("--b", b, "core radius")->required();
    probe->add_option("--eps", eps, "wide blend width")->required();
    probe->add_option("--delta", delta, "narrow blend width")->required();

    auto* render = app.add_subcommand("render", "write an SVG deformation grid");
    render->add_option("--kind", kind, "swap, radial, twist or translation")->capture_default_str();
    render->add_option("--alpha", alpha, "center (swap source / radial center)");
    render->add_option("--r", r, "swap source radius");
    render->add_option("--beta", beta, "swap target center");
    render->add_option("--s", s, "swap target radius");
    render->add_option("--rho", rho, "radial inner radius");
    render->add_option("--delta", delta, "radial expansion amount / translation pad width");
    render->add_option("--a", a, "twist angle");
    render->add_option("--b", b, "twist core radius");
    render->add_option("--eps", eps, "twist blend width");
    render->add_option("--u", u, "translation distance");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");
    selftest->add_option("--tolerance-scale", tolerance_scale, "test hook: scale every tolerance")->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    config.out_dir = out_dir;
    config.formats = split_formats(formats);

    try {
        if (*swap) return cmd_swap_disc(alpha, r, beta, s, config, out, err);
        if (*ball) return cmd_ball_converge(q, k_max, config, out, err);
        if (*probe) return cmd_probe_sigma(a, b, eps, delta, config, out, err);
        if (*render) return cmd_render(kind, alpha, beta, r, s, rho, delta, a, b, eps, u, config, out);
        if (*selftest) return cmd_selftest(config, tolerance_scale, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidDisc& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailure;
    }
    return kUsageError;
}

}  // namespace homeo::cli
