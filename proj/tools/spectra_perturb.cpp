// Command-line front end: evaluate the bound catalog on matrix files, run
// randomized campaigns, and write the worked-example fixtures.
//
// Exit codes: 0 no violations, 1 violations found, 2 input error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "spectra_perturb/bounds.hpp"
#include "spectra_perturb/campaign.hpp"
#include "spectra_perturb/ensembles.hpp"
#include "spectra_perturb/quantities.hpp"
#include "spectra_perturb/report_io.hpp"

namespace sp = spectra_perturb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << text;
}

struct BoundsArgs {
    std::string a_path;
    std::string e_path;
    bool hermitian = false;
    bool dump_schur = false;
    std::string out;
    std::string format = "json";
};

int cmd_bounds(const BoundsArgs& args)
{
    const auto t0 = Clock::now();
    const sp::Matrix a = sp::read_matrix_file(args.a_path);
    const sp::Matrix e = sp::read_matrix_file(args.e_path);
    if (a.rows() != e.rows()) {
        throw sp::DimensionError("A is " + std::to_string(a.rows()) + "x" + std::to_string(a.rows()) + " but E is " +
                                 std::to_string(e.rows()) + "x" + std::to_string(e.rows()));
    }
    const double load_ms = ms_since(t0);

    const auto t1 = Clock::now();
    const sp::PerturbationCase c = sp::make_case(a, e);
    if (!c.a_is_normal) {
        throw sp::HypothesisError("A is not normal (||AA* - A*A||_F = " + std::to_string(sp::commutator_defect(a)) +
                                  ")");
    }
    if (args.hermitian && !c.a_is_hermitian) {
        throw sp::HypothesisError("--hermitian given but A is not Hermitian");
    }
    const double case_ms = ms_since(t1);

    const auto t2 = Clock::now();
    const sp::BoundReport report = sp::evaluate_all(c, args.hermitian);
    const double eval_ms = ms_since(t2);

    std::string text;
    if (args.format == "csv") {
        text = sp::csv_header() + '\n' + sp::csv_row(0, c.n(), "input", report, !report.violations.empty()) + '\n';
    } else {
        sp::ReportMeta meta;
        meta.source = args.a_path + " + " + args.e_path;
        meta.hermitian_requested = args.hermitian;
        meta.timing_ms = {{"load", load_ms}, {"schur", case_ms}, {"evaluate", eval_ms}, {"total", ms_since(t0)}};
        sp::Json j = sp::report_to_json(report, c, meta);
        if (args.dump_schur) {
            j["schur"] = sp::schur_to_json(c.schur_tilde);
        }
        text = j.dump(2) + '\n';
    }
    write_text(args.out, text);
    for (const auto& id : report.violations) {
        std::cerr << "violation: " << id << '\n';
    }
    return report.violations.empty() ? kExitOk : kExitViolation;
}

struct CampaignArgs {
    std::size_t trials = 1;
    long long n_min = 2;
    long long n_max = 12;
    std::string kind = "normal";
    std::string trace_mode = "generic";
    std::optional<std::uint64_t> seed;
    double tol = 1e-8;
    unsigned jobs = 1;
    std::string out;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag)
{
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("SPECTRA_PERTURB_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const std::uint64_t v = std::stoull(env, &used, 0);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw InputError(std::string("SPECTRA_PERTURB_SEED is not an unsigned integer: '") + env + "'");
    }
    return 0;
}

sp::CampaignConfig to_config(const CampaignArgs& args)
{
    sp::CampaignConfig cfg;
    cfg.trials = args.trials;
    cfg.n_min = static_cast<Eigen::Index>(args.n_min);
    cfg.n_max = static_cast<Eigen::Index>(args.n_max);
    cfg.kind = sp::parse_ensemble_kind(args.kind);
    cfg.trace_mode = sp::parse_trace_mode(args.trace_mode);
    cfg.seed = resolve_seed(args.seed);
    cfg.tol = args.tol;
    cfg.jobs = args.jobs;
    cfg.validate();
    return cfg;
}

void report_violations(const sp::CampaignSummary& s)
{
    for (const auto& m : s.violation_messages) {
        std::cerr << "violation: " << m << '\n';
    }
}

int cmd_verify(const CampaignArgs& args)
{
    const sp::CampaignConfig cfg = to_config(args);
    const auto t0 = Clock::now();
    const sp::CampaignSummary s = sp::run_campaign(cfg);
    std::cerr << "verify: " << s.trials << " trials in " << ms_since(t0) << " ms\n";
    write_text(args.out, sp::summary_to_json(s).dump(2) + '\n');
    report_violations(s);
    return s.violation_count == 0 ? kExitOk : kExitViolation;
}

int cmd_tightness(const CampaignArgs& args)
{
    const sp::CampaignConfig cfg = to_config(args);
    const auto t0 = Clock::now();
    const sp::CampaignSummary s = sp::run_campaign(cfg);
    std::cerr << "tightness: " << s.trials << " trials in " << ms_since(t0) << " ms\n";
    write_text(args.out, sp::trials_csv(s));
    std::cout << sp::win_histogram_csv(s);
    report_violations(s);
    return s.violation_count == 0 ? kExitOk : kExitViolation;
}

struct FixtureArgs {
    std::string name;
    long long n = 0;
    std::string out_dir;
};

int cmd_fixture(const FixtureArgs& args)
{
    const auto f = sp::fixture_matrices(args.name, static_cast<Eigen::Index>(args.n));
    const std::filesystem::path dir(args.out_dir);
    std::filesystem::create_directories(dir);
    sp::write_json_file(dir / "A.json", sp::matrix_to_json(f.a));
    sp::write_json_file(dir / "E.json", sp::matrix_to_json(f.e));

    sp::Json values = sp::Json::array();
    for (const auto& v : sp::fixture_expected(args.name, static_cast<Eigen::Index>(args.n))) {
        values.push_back(sp::Json{{"key", v.key}, {"value", v.value}, {"source", v.source}});
    }
    sp::write_json_file(dir / "expected.json", sp::Json{{"fixture", f.name}, {"n", f.n}, {"expected", values}});
    return kExitOk;
}

void add_campaign_flags(CLI::App* cmd, CampaignArgs& args)
{
    cmd->add_option("--trials", args.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--n-min", args.n_min, "Smallest matrix size")->required();
    cmd->add_option("--n-max", args.n_max, "Largest matrix size")->required();
    cmd->add_option("--kind", args.kind, "normal | hermitian | normal-blocked")
        ->check(CLI::IsMember({"normal", "hermitian", "normal-blocked"}));
    cmd->add_option("--trace-mode", args.trace_mode, "zero | generic")->check(CLI::IsMember({"zero", "generic"}));
    cmd->add_option("--seed", args.seed, "Campaign seed (fallback: SPECTRA_PERTURB_SEED, then 0)");
    cmd->add_option("--tol", args.tol, "Relative domination slack");
    cmd->add_option("--jobs", args.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral perturbation bounds for normal matrices"};
    app.require_subcommand(1);

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Evaluate the bound catalog on A and E read from JSON");
    bounds->add_option("--a", bounds_args.a_path, "Matrix JSON for A")->required();
    bounds->add_option("--e", bounds_args.e_path, "Matrix JSON for E")->required();
    bounds->add_flag("--hermitian", bounds_args.hermitian, "Require Hermitian A and evaluate the Hermitian bounds");
    bounds->add_flag("--dump-schur", bounds_args.dump_schur, "Include the Schur form of A + E in the report");
    bounds->add_option("--out", bounds_args.out, "Output path (default stdout)");
    bounds->add_option("--format", bounds_args.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    CampaignArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Randomized domination and ordering campaign");
    add_campaign_flags(verify, verify_args);
    verify->add_option("--out", verify_args.out, "Summary JSON path (default stdout)");

    CampaignArgs tight_args;
    auto* tightness = app.add_subcommand("tightness", "Per-trial bound values and win histogram");
    add_campaign_flags(tightness, tight_args);
    tightness->add_option("--out", tight_args.out, "Per-trial CSV path")->required();

    FixtureArgs fixture_args;
    auto* fixture = app.add_subcommand("fixture", "Write a worked-example fixture");
    fixture->add_option("--name", fixture_args.name, "intro_2x2 | phi_example | example_4_4")->required();
    fixture->add_option("--n", fixture_args.n, "Size (example_4_4 only)");
    fixture->add_option("--out-dir", fixture_args.out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (bounds->parsed()) {
            if (bounds_args.dump_schur && bounds_args.format == "csv") {
                throw InputError("--dump-schur requires --format json");
            }
            return cmd_bounds(bounds_args);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_args);
        }
        if (tightness->parsed()) {
            return cmd_tightness(tight_args);
        }
        return cmd_fixture(fixture_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitViolation;
    }
}
