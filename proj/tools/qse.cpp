// Command-line front end: stability certificates, critical-charge scans,
// model classification, and the verification suites.  All JSON output is
// canonical (sorted keys, fixed float format) so runs are byte-reproducible.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qse/certificate.hpp"
#include "qse/instability.hpp"
#include "qse/json_io.hpp"
#include "qse/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;

struct AlphaOption {
    double alpha = 1.0 / 137.0;
    double alpha_inverse = 0.0;
    CLI::Option* inv_opt = nullptr;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--alpha", alpha, "fine-structure constant");
        inv_opt = cmd->add_option("--alpha-inverse", alpha_inverse,
                                  "reciprocal fine-structure constant (e.g. 137)");
        a->excludes(inv_opt);
        inv_opt->excludes(a);
    }
    double value() const {
        return (inv_opt != nullptr && inv_opt->count() > 0) ? 1.0 / alpha_inverse : alpha;
    }
};

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_certify(const AlphaOption& al, double Z, double m, double lambda, int N, int K,
                const std::optional<double>& eps, bool optimize, bool paper_mode) {
    qse::PhysicalParams params;
    params.alpha = al.value();
    params.Z = Z;
    params.m = m;
    params.lambda = lambda;
    params.N = N;
    params.K = K;
    params.validate();
    std::optional<double> use_eps = eps;
    if (optimize) use_eps = std::nullopt;  // certify optimizes when eps is absent
    const qse::StabilityCertificate cert = qse::certify(params, use_eps, paper_mode);
    std::cout << qse::canonical_json(qse::certificate_json(cert));
    return cert.feasible ? kExitOk : kExitInfeasible;
}

int run_maxz(const AlphaOption& al, long long zcap, bool paper_mode) {
    const double alpha = al.value();
    if (!(alpha > 0.0)) throw std::invalid_argument("maxz: alpha must be positive");
    const long long z = qse::max_Z(alpha, paper_mode, zcap);
    qse::PhysicalParams params;
    params.alpha = alpha;
    params.Z = static_cast<double>(z);
    const std::optional<double> eps = qse::optimize_eps(params, paper_mode);
    qse::Json out;
    out["alpha"] = alpha;
    out["max_Z"] = z;
    out["eps"] = eps ? qse::Json(*eps) : qse::Json(nullptr);
    std::cout << qse::canonical_json(out);
    return z >= 1 ? kExitOk : kExitInfeasible;
}

int run_phase(double alpha_min, double alpha_max, int steps, long long z_max,
              bool paper_mode, int jobs, const std::string& output) {
    if (steps < 1) throw std::invalid_argument("phase: --steps must be >= 1");
    if (!(alpha_min > 0.0) || !(alpha_max >= alpha_min))
        throw std::invalid_argument("phase: need 0 < alpha-min <= alpha-max");
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = steps == 1 ? alpha_min
                             : alpha_min + (alpha_max - alpha_min) * i / double(steps - 1);
    const auto rows = qse::phase_scan(grid, z_max, paper_mode,
                                      static_cast<unsigned>(std::max(jobs, 0)));
    std::string csv = "alpha,max_Z,eps\n";
    for (const auto& r : rows) {
        csv += format_g17(r.alpha);
        csv += ',';
        csv += std::to_string(r.max_Z);
        csv += ',';
        csv += format_g17(r.eps);
        csv += '\n';
    }
    if (output.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw std::runtime_error("phase: cannot open output file " + output);
        f << csv;
    }
    return kExitOk;
}

int run_classify(const AlphaOption& al, double Z, int N, int K, const std::string& projector,
                 const std::string& field, const std::string& cutoff,
                 const std::string& coulomb, const std::optional<double>& alpha_critical) {
    qse::ModelVariant variant;
    variant.projector = projector == "free" ? qse::ProjectorChoice::free_projector
                                            : qse::ProjectorChoice::dressed_projector;
    variant.field =
        field == "classical" ? qse::FieldType::classical : qse::FieldType::quantized;
    variant.cutoff = cutoff == "yes";
    variant.coulomb = coulomb == "yes";
    const double alpha = al.value();
    const qse::Verdict v = qse::classify(variant, alpha, Z, N, K, alpha_critical);
    std::cout << qse::canonical_json(qse::verdict_json(variant, alpha, Z, N, K, v));
    const bool unstable = v.kind == qse::VerdictKind::instability_first_kind ||
                          v.kind == qse::VerdictKind::instability_second_kind;
    return unstable ? kExitInfeasible : kExitOk;
}

int run_verify(const std::string& suite, long long trials, std::uint64_t seed, int jobs) {
    qse::SuiteOptions options;
    options.trials = trials;
    options.seed = seed;
    options.jobs = jobs;
    const qse::SuiteResult result = qse::run_suite(suite, options);
    std::cout << qse::canonical_json(qse::suite_json(result));
    return (result.pass || result.advisory) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability certificates and numerical verification"};
    app.require_subcommand(1);

    // certify
    auto* certify = app.add_subcommand("certify", "evaluate the stability certificate");
    AlphaOption cert_alpha;
    cert_alpha.attach(certify);
    double cert_Z = 1.0, cert_m = 1.0, cert_lambda = 1.0;
    int cert_N = 1, cert_K = 1;
    certify->add_option("--Z", cert_Z, "nuclear charge");
    certify->add_option("--m", cert_m, "electron mass");
    certify->add_option("--lambda", cert_lambda, "ultraviolet cutoff");
    certify->add_option("--N", cert_N, "electron count")->check(CLI::PositiveNumber);
    certify->add_option("--K", cert_K, "nucleus count")->check(CLI::PositiveNumber);
    std::optional<double> cert_eps;
    auto* eps_opt = certify->add_option("--eps", cert_eps, "mass-extraction parameter");
    bool cert_optimize = false;
    certify->add_flag("--optimize-eps", cert_optimize, "pick eps maximizing the bound")
        ->excludes(eps_opt);
    bool cert_paper = false;
    certify->add_flag("--paper-mode", cert_paper, "use the printed rounding kappa >= 64.5");

    // maxz
    auto* maxz = app.add_subcommand("maxz", "largest feasible integer nuclear charge");
    AlphaOption maxz_alpha;
    maxz_alpha.attach(maxz);
    long long maxz_cap = -1;
    maxz->add_option("--zcap", maxz_cap, "search cap (-1 = unbounded)");
    bool maxz_paper = false;
    maxz->add_flag("--paper-mode", maxz_paper, "use the printed rounding kappa >= 64.5");

    // phase
    auto* phase = app.add_subcommand("phase", "max_Z over a grid of alpha values (CSV)");
    double ph_min = 1.0 / 200.0, ph_max = 1.0 / 100.0;
    int ph_steps = 10, ph_jobs = 0;
    long long ph_zmax = 200;
    std::string ph_output;
    phase->add_option("--alpha-min", ph_min, "grid start");
    phase->add_option("--alpha-max", ph_max, "grid end (inclusive)");
    phase->add_option("--steps", ph_steps, "grid points");
    phase->add_option("--z-max", ph_zmax, "cap on the charge search");
    phase->add_option("--jobs", ph_jobs, "worker threads (default QSE_JOBS or hardware)");
    phase->add_option("--output", ph_output, "CSV file (default stdout)");
    bool ph_paper = false;
    phase->add_flag("--paper-mode", ph_paper, "use the printed rounding kappa >= 64.5");

    // classify
    auto* classify = app.add_subcommand("classify", "stability verdict for a model variant");
    AlphaOption cl_alpha;
    cl_alpha.attach(classify);
    double cl_Z = 1.0;
    int cl_N = 1, cl_K = 1;
    std::string cl_projector = "dressed", cl_field = "quantized";
    std::string cl_cutoff = "yes", cl_coulomb = "yes";
    classify->add_option("--Z", cl_Z, "nuclear charge");
    classify->add_option("--N", cl_N, "electron count")->check(CLI::PositiveNumber);
    classify->add_option("--K", cl_K, "nucleus count")->check(CLI::PositiveNumber);
    classify->add_option("--projector", cl_projector, "free | dressed")
        ->check(CLI::IsMember({"free", "dressed"}));
    classify->add_option("--field", cl_field, "classical | quantized")
        ->check(CLI::IsMember({"classical", "quantized"}));
    classify->add_option("--cutoff", cl_cutoff, "yes | no")
        ->check(CLI::IsMember({"yes", "no"}));
    classify->add_option("--coulomb", cl_coulomb, "yes | no")
        ->check(CLI::IsMember({"yes", "no"}));
    std::optional<double> cl_alpha_critical;
    classify->add_option("--alpha-critical", cl_alpha_critical,
                         "caller-supplied critical coupling for the dressed model");

    // verify
    auto* verify = app.add_subcommand("verify", "run a numerical verification suite");
    std::string vf_suite;
    verify->add_option("--suite", vf_suite, "bks | fock | coulomb | localization | dirac | lt | projector")
        ->required()
        ->check(CLI::IsMember(qse::suite_names()));
    long long vf_trials = 0;
    std::uint64_t vf_seed = 0;
    int vf_jobs = 0;
    verify->add_option("--trials", vf_trials, "trial count (0 = suite default)");
    verify->add_option("--seed", vf_seed, "base RNG seed");
    verify->add_option("--jobs", vf_jobs, "worker threads (default QSE_JOBS or hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (certify->parsed())
            return run_certify(cert_alpha, cert_Z, cert_m, cert_lambda, cert_N, cert_K,
                               cert_eps, cert_optimize, cert_paper);
        if (maxz->parsed()) return run_maxz(maxz_alpha, maxz_cap, maxz_paper);
        if (phase->parsed())
            return run_phase(ph_min, ph_max, ph_steps, ph_zmax, ph_paper, ph_jobs, ph_output);
        if (classify->parsed())
            return run_classify(cl_alpha, cl_Z, cl_N, cl_K, cl_projector, cl_field, cl_cutoff,
                                cl_coulomb, cl_alpha_critical);
        if (verify->parsed()) return run_verify(vf_suite, vf_trials, vf_seed, vf_jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
