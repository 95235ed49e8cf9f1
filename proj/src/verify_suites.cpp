#include "qse/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "qse/field_bounds.hpp"
#include "qse/fock.hpp"
#include "qse/geometry.hpp"
#include "qse/lattice_dirac.hpp"
#include "qse/lieb_thirring.hpp"
#include "qse/localization.hpp"
#include "qse/modes.hpp"
#include "qse/parallel.hpp"
#include "qse/rng.hpp"
#include "qse/spectral.hpp"

namespace qse {

namespace {

using C = std::complex<double>;

Eigen::MatrixXcd random_gaussian(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = C(gauss(rng), gauss(rng));
    return g;
}

Eigen::MatrixXcd random_hermitian(int d, std::mt19937_64& rng) {
    const Eigen::MatrixXcd g = random_gaussian(d, d, rng);
    return 0.5 * (g + g.adjoint());
}

Eigen::MatrixXcd random_psd(int d, int rank, std::mt19937_64& rng) {
    const Eigen::MatrixXcd g = random_gaussian(d, rank, rng);
    return g * g.adjoint() / double(d);
}

// worst signed violation accumulated trial by trial; > 0 means failure
struct TrialTally {
    std::vector<double> violation;
    explicit TrialTally(long long trials) : violation(trials, 0.0) {}
    SuiteResult reduce(std::string name, long long skipped = 0) const {
        SuiteResult r;
        r.name = std::move(name);
        r.trials = static_cast<long long>(violation.size());
        r.skipped = skipped;
        r.max_violation = violation.empty()
                              ? 0.0
                              : *std::max_element(violation.begin(), violation.end());
        for (double v : violation)
            if (v > 0.0) ++r.failures;
        r.pass = r.failures == 0;
        return r;
    }
};

SuiteResult run_bks_suite(const SuiteOptions& o) {
    const long long trials = o.trials > 0 ? o.trials : 10000;
    TrialTally tally(trials);
    parallel_for(trials, resolve_jobs(o.jobs), [&](std::size_t i) {
        auto rng = trial_rng(o.seed, i);
        const int d = 2 + static_cast<int>(rng() % 19);
        Eigen::MatrixXcd a, b;
        switch (i % 3) {
            case 0:  // Wishart-type
                a = random_psd(d, d, rng);
                b = random_psd(d, d, rng);
                break;
            case 1: {  // commuting diagonal
                std::exponential_distribution<double> expo(1.0);
                Eigen::VectorXd da(d), db(d);
                for (int k = 0; k < d; ++k) da[k] = expo(rng);
                for (int k = 0; k < d; ++k) db[k] = expo(rng);
                a = da.asDiagonal().toDenseMatrix().cast<C>();
                b = db.asDiagonal().toDenseMatrix().cast<C>();
                break;
            }
            default:  // rank-deficient
                a = random_psd(d, std::max(1, d / 3), rng);
                b = random_psd(d, std::max(1, d / 2), rng);
                break;
        }
        try {
            const BksResult res = bks_check(a, b);
            tally.violation[i] = res.lhs - res.rhs - 1e-10;
        } catch (const std::exception&) {
            tally.violation[i] = std::numeric_limits<double>::infinity();
        }
    });
    return tally.reduce("bks");
}

SuiteResult run_fock_suite(const SuiteOptions& o) {
    const long long trials = o.trials > 0 ? o.trials : 200;
    TrialTally tally(trials);
    parallel_for(trials, resolve_jobs(o.jobs), [&](std::size_t i) {
        auto rng = trial_rng(o.seed, i);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        const double Lambda = 0.5 + 0.5 * (i % 4);
        // radial order 2 and angular order 2 are the smallest making the
        // volume and quadratic direction moments exact, which the
        // saturating kernel norms rely on
        const int n_radial = i % 4 == 3 ? 3 : 2;
        const ModeSet modes = build_modeset(Lambda, n_radial, 2, o.seed * 1000003 + i + 1);
        const TruncatedFock fock(modes, 3);
        double worst = -1.0;
        try {
            // vacuum second moment of the vector potential vs closed form
            const Eigen::Vector3d origin = Eigen::Vector3d::Zero();
            double measured = 0.0;
            for (int comp = 0; comp < 3; ++comp) {
                const auto g = field_coeffs(modes, FieldKind::vector_potential, comp, origin);
                std::vector<C> gbar(g.size());
                std::transform(g.begin(), g.end(), gbar.begin(),
                               [](C z) { return std::conj(z); });
                for (const auto& [idx, val] : fock.apply_ladder_basis(0, g, gbar))
                    measured += std::norm(val);
            }
            const double expected = vacuum_a_squared(modes);
            worst = std::max(worst, std::abs(measured - expected) / (1.0 + expected) - 1e-12);

            // equal-kind commutators vanish; mixed pairs match their scalar
            const Eigen::Vector3d x(unit(rng), unit(rng), unit(rng));
            const Eigen::Vector3d y(unit(rng), unit(rng), unit(rng));
            const int ci = static_cast<int>(rng() % 3), cj = static_cast<int>(rng() % 3);
            const FieldKind kinds[3] = {FieldKind::vector_potential, FieldKind::magnetic,
                                        FieldKind::electric};
            for (FieldKind k1 : kinds) {
                const auto same = field_commutator_check(fock, k1, ci, x, k1, cj, y);
                worst = std::max(worst, std::abs(same.scalar) - 1e-12);
                worst = std::max(worst, same.residual - 1e-12);
            }
            const auto ab = field_commutator_check(fock, FieldKind::vector_potential, ci, x,
                                                   FieldKind::magnetic, cj, y);
            worst = std::max(worst, std::abs(ab.scalar) - 1e-12);
            worst = std::max(worst, ab.residual - 1e-12);
            const auto ae = field_commutator_check(fock, FieldKind::vector_potential, ci, x,
                                                   FieldKind::electric, cj, y);
            worst = std::max(worst, ae.residual - 1e-12);

            // canonical commutation on the prefix where truncation is exact
            const std::size_t m = rng() % modes.n_modes();
            const Eigen::SparseMatrix<C> a = fock.annihilator(m);
            const Eigen::SparseMatrix<C> ad = a.adjoint();
            Eigen::SparseMatrix<C> ccr = (a * ad - ad * a).pruned();
            const std::size_t p1 = fock.prefix_dim(1);
            double ccr_err = 0.0;
            for (std::size_t v = 0; v < p1; ++v) {
                Eigen::VectorXcd col = ccr.col(v);
                col[v] -= 1.0;
                ccr_err = std::max(ccr_err, col.norm());
            }
            worst = std::max(worst, ccr_err - 1e-12);

            // saturating delta weight: kernel norm 1, bound margin >= 0
            const BoundConstants bc = bound_constants(FieldBoundKind::b_pointwise, Lambda);
            const WeightField w = WeightField::delta(x, *bc.weight_scale);
            const LemmaResult lem =
                lemma_check(fock, w, VertexFamily::magnetic_family, LemmaForm::symmetrized_minus);
            worst = std::max(worst, std::abs(lem.kernel_norm - 1.0) - 1e-12);
            worst = std::max(worst, -lem.margin - 1e-10 * (1.0 + lem.subtraction));

            // pointwise domination at a random point for each field kind
            if (i % 5 == 0) {
                for (FieldKind k1 : kinds) {
                    const PointwiseResult pw = pointwise_bound_check(fock, y, k1);
                    worst = std::max(worst, -pw.margin - 1e-10 * (1.0 + pw.subtraction));
                }
            }
        } catch (const std::exception&) {
            worst = std::numeric_limits<double>::infinity();
        }
        tally.violation[i] = worst;
    });
    return tally.reduce("fock");
}

SuiteResult run_coulomb_suite(const SuiteOptions& o) {
    const long long trials = o.trials > 0 ? o.trials : 10000;
    TrialTally tally(trials);
    parallel_for(trials, resolve_jobs(o.jobs), [&](std::size_t i) {
        auto rng = trial_rng(o.seed, i);
        const double zs[3] = {1.0, 10.0, 42.0};
        const double Z = zs[i % 3];
        const double box = (i / 3) % 2 == 0 ? 1.0 : 25.0;
        std::uniform_real_distribution<double> pos(0.0, box);
        NuclearConfig nuclei;
        nuclei.Z = Z;
        const int K = 1 + static_cast<int>(rng() % 4);
        const int N = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < K; ++k)
            nuclei.positions.emplace_back(pos(rng), pos(rng), pos(rng));
        ElectronConfig electrons;
        for (int n = 0; n < N; ++n)
            electrons.positions.emplace_back(pos(rng), pos(rng), pos(rng));
        try {
            const double vc = coulomb_energy(electrons, nuclei);
            const double margin = coulomb_lower_bound_margin(electrons, nuclei);
            tally.violation[i] = -margin - 1e-12 * std::max(1.0, std::abs(vc));
        } catch (const std::exception&) {
            tally.violation[i] = std::numeric_limits<double>::infinity();
        }
    });
    return tally.reduce("coulomb");
}

SuiteResult run_localization_suite(const SuiteOptions& o) {
    const long long configs = o.trials > 0 ? o.trials : 3;
    TrialTally tally(configs);
    std::vector<std::pair<std::string, double>> metrics;
    for (long long i = 0; i < configs; ++i) {
        auto rng = trial_rng(o.seed, i);
        const int K = 1 + static_cast<int>(i % 4);
        const double L = 1.0;
        std::uniform_real_distribution<double> pos(0.0, 2.5 * L);
        NuclearConfig nuclei;
        nuclei.Z = 1.0;
        while (static_cast<int>(nuclei.positions.size()) < K) {
            Eigen::Vector3d p(pos(rng), pos(rng), pos(rng));
            bool ok = true;
            for (const auto& q : nuclei.positions)
                if ((p - q).norm() < 0.75 * L) ok = false;
            if (ok) nuclei.positions.push_back(p);
        }
        const LocalizationFamily fam = build_localization(nuclei, L, L / 8.0, o.jobs);
        const GradientCheck gc = gradient_bound_check(fam);
        tally.violation[i] = gc.sup - gc.slack_bound;
        metrics.emplace_back("sup_over_bound_" + std::to_string(i), gc.sup / gc.bound);
    }
    SuiteResult r = tally.reduce("localization");
    r.metrics = std::move(metrics);
    return r;
}

SuiteResult run_dirac_suite(const SuiteOptions& o) {
    const long long trials = o.trials > 0 ? o.trials : 1000;
    const long long gauge_trials = std::max<long long>(3, trials / 200);
    TrialTally tally(trials + gauge_trials + 1);
    long long skipped = 0;

    // chiral projector symmetry on random anticommuting families
    std::vector<int> skip_flags(trials, 0);
    parallel_for(trials, resolve_jobs(o.jobs), [&](std::size_t i) {
        auto rng = trial_rng(o.seed, i);
        double worst = -1.0;
        try {
            if (i % 50 == 0) {
                // free Dirac momentum block: spectrum is +-sqrt(p^2 + m^2), twice
                std::uniform_real_distribution<double> unit(-2.0, 2.0);
                const Eigen::Vector3d p(unit(rng), unit(rng), unit(rng));
                const double m = 0.5 + (i % 3);
                const Eigen::Matrix4cd h = free_dirac_matrix(p, m);
                const Eigen::Matrix4cd u = chiral_u_matrix();
                Eigen::MatrixXcd y = random_hermitian(2, rng);
                Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(4, 4);
                s.topLeftCorner(2, 2) = y;
                s.bottomRightCorner(2, 2) = y;
                const ChiralResult res = chiral_projector_check(h, u, s);
                if (res.skipped_degenerate) {
                    skip_flags[i] = 1;
                } else {
                    worst = std::max(worst, res.pass ? -1.0 : 1.0);
                    const double e = std::sqrt(p.squaredNorm() + m * m);
                    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
                    const Eigen::Vector4d expected(-e, -e, e, e);
                    worst = std::max(worst,
                                     (es.eigenvalues() - expected).cwiseAbs().maxCoeff() - 1e-10);
                }
            } else {
                const int d = 2 + static_cast<int>(rng() % 9);
                const int dim = 2 * d;
                Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
                u.topRightCorner(d, d) = Eigen::MatrixXcd::Identity(d, d);
                u.bottomLeftCorner(d, d) = -Eigen::MatrixXcd::Identity(d, d);
                const Eigen::MatrixXcd g = random_gaussian(dim, dim, rng);
                const Eigen::MatrixXcd anti = g + u * g * u;  // g - U g U^{-1}, U^{-1} = -U
                const Eigen::MatrixXcd h = 0.5 * (anti + anti.adjoint());
                const Eigen::MatrixXcd y = random_hermitian(d, rng);
                Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
                s.topLeftCorner(d, d) = y;
                s.bottomRightCorner(d, d) = y;
                const ChiralResult res = chiral_projector_check(h, u, s);
                if (res.skipped_degenerate)
                    skip_flags[i] = 1;
                else
                    worst = std::max(
                        worst, std::max({res.projector_residual - 1e-10 * dim,
                                         res.spectrum_symmetry - 1e-10 * (1.0 + h.norm()),
                                         res.sandwich_mismatch - 1e-10 * (1.0 + s.norm())}));
            }
        } catch (const std::exception&) {
            worst = std::numeric_limits<double>::infinity();
        }
        tally.violation[i] = worst;
    });
    for (int f : skip_flags) skipped += f;

    // lattice square identity on random band-limited gauges
    std::vector<double> residuals(gauge_trials, 0.0);
    parallel_for(gauge_trials, resolve_jobs(o.jobs), [&](std::size_t i) {
        try {
            const LatticeGauge gauge =
                LatticeGauge::random(2.0 * std::numbers::pi, 16, 4, 3, 0.7, o.seed + 77 * i + 1);
            residuals[i] = dirac_square_identity(gauge, 1.0 / 137.0, 1.0, 2, o.seed + i);
        } catch (const std::exception&) {
            residuals[i] = std::numeric_limits<double>::infinity();
        }
    });
    for (long long i = 0; i < gauge_trials; ++i)
        tally.violation[trials + i] = residuals[i] - 1e-10;

    // aliasing negative control: an out-of-band gauge must break the identity
    try {
        const LatticeGauge aliased =
            LatticeGauge::random(2.0 * std::numbers::pi, 16, 6, 3, 0.7, o.seed + 5, false);
        const double res = dirac_square_identity(aliased, 1.0 / 137.0, 1.0, 2, o.seed, true);
        tally.violation[trials + gauge_trials] = res > 1e-8 ? -1.0 : 1.0;
    } catch (const std::exception&) {
        tally.violation[trials + gauge_trials] = std::numeric_limits<double>::infinity();
    }

    SuiteResult r = tally.reduce("dirac", skipped);
    return r;
}

SuiteResult run_lt_suite(const SuiteOptions& o) {
    struct Well {
        double depth, sigma;
        Eigen::Vector3d center;
    };
    const std::vector<Well> wells = {{1.0, 2.0, {0.5, 0.5, 0.5}},
                                     {4.0, 2.0, {0.5, 0.5, 0.5}},
                                     {2.0, 1.6, {0.3, 0.4, 0.6}}};
    const int n = 16;
    const double box = 12.0;
    SuiteResult r;
    r.name = "lt";
    r.advisory = true;
    r.trials = static_cast<long long>(wells.size());
    double worst = -1.0;
    for (std::size_t i = 0; i < wells.size(); ++i) {
        const auto V = gaussian_well(n, box, wells[i].center, wells[i].depth, wells[i].sigma);
        const LiebThirringResult lt = lieb_thirring_ratio(n, box, V, 1.0);
        r.metrics.emplace_back("ratio_" + std::to_string(i), lt.ratio);
        r.metrics.emplace_back("negative_count_" + std::to_string(i),
                               static_cast<double>(lt.negative_count));
        if (lt.ratio > 1.2) ++r.failures;
        worst = std::max(worst, lt.ratio - 1.2);
    }
    r.max_violation = worst;
    r.pass = r.failures == 0;
    (void)o;
    return r;
}

SuiteResult run_projector_suite(const SuiteOptions& o) {
    const long long trials = o.trials > 0 ? o.trials : 10000;
    TrialTally tally(trials);
    parallel_for(trials, resolve_jobs(o.jobs), [&](std::size_t i) {
        auto rng = trial_rng(o.seed, i);
        const int d = 2 + static_cast<int>(rng() % 29);
        Eigen::MatrixXcd f;
        if (i % 3 == 0) {
            // exact orthogonal projector of random rank
            const int rank = 1 + static_cast<int>(rng() % d);
            const Eigen::MatrixXcd g = random_gaussian(d, rank, rng);
            const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
            const Eigen::MatrixXcd q =
                qr.householderQ() * Eigen::MatrixXcd::Identity(d, rank);
            f = q * q.adjoint();
        } else {
            // Hermitian contraction
            Eigen::MatrixXcd h = random_hermitian(d, rng);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
            const double nrm = es.eigenvalues().cwiseAbs().maxCoeff();
            std::uniform_real_distribution<double> shrink(0.2, 1.0);
            f = h * (shrink(rng) / std::max(nrm, 1e-12));
        }
        const Eigen::MatrixXcd x = random_hermitian(d, rng);
        const Eigen::MatrixXcd y =
            random_psd(d, i % 7 == 0 ? std::max(1, d / 2) : d, rng);
        try {
            // half-power sums carry sqrt(eps_mach)-level roundoff near zero
            const ProjectionResult res = projection_trace_checks(f, x, y);
            const double eps_mach = std::numeric_limits<double>::epsilon();
            const double v1 = res.compressed_half_moment - res.dominated_half_moment -
                              d * std::sqrt(eps_mach * (1.0 + x.norm()));
            const double v2 = res.compressed_half_trace - res.full_half_trace -
                              d * std::sqrt(eps_mach * (1.0 + y.norm()));
            const double v3 = res.spectra_mismatch - 1e-10 * (1.0 + y.norm());
            tally.violation[i] = std::max({v1, v2, v3, res.pass ? -1.0 : 1.0});
        } catch (const std::exception&) {
            tally.violation[i] = std::numeric_limits<double>::infinity();
        }
    });
    return tally.reduce("projector");
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"bks", "fock", "coulomb", "localization", "dirac", "lt", "projector"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "bks") return run_bks_suite(options);
    if (name == "fock") return run_fock_suite(options);
    if (name == "coulomb") return run_coulomb_suite(options);
    if (name == "localization") return run_localization_suite(options);
    if (name == "dirac") return run_dirac_suite(options);
    if (name == "lt") return run_lt_suite(options);
    if (name == "projector") return run_projector_suite(options);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace qse
