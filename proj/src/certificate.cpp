#include "qse/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qse/parallel.hpp"

namespace qse {

namespace {

constexpr double kPi = std::numbers::pi;

// Minimizer of the domination LHS over eps for fixed kappa*alpha (derivative
// of x^2/(x-b)^{3/2} in x = 1-eps vanishes at x = 4b).
double minimizing_eps(double kappa_alpha_sq) {
    return std::max(0.0, 1.0 - 4.0 * kappa_alpha_sq);
}

}  // namespace

double field_domination_max() { return 1.0 / (8.0 * kPi * 0.060); }

double kappa_min(double Z, int q, bool paper_mode) {
    if (Z < 0.0) throw std::invalid_argument("kappa_min: Z must be >= 0");
    if (q != 2 && q != 4) throw std::invalid_argument("kappa_min: q must be 2 or 4");
    const double floor = (paper_mode && q == 2) ? 64.5 : q / 0.031;
    return std::max(floor, kPi * Z);
}

std::optional<double> field_domination_lhs(double eps, double kappa, double alpha) {
    if (!(eps >= 0.0) || !(eps < 1.0)) throw std::invalid_argument("field_domination_lhs: eps must be in [0,1)");
    const double x = 1.0 - eps;
    const double denom = x - kappa * kappa * alpha * alpha;
    if (!(denom > 0.0)) return std::nullopt;
    return x * x * alpha / (denom * std::sqrt(denom));
}

std::optional<double> eps_max(double alpha, double kappa) {
    const double ka = kappa * alpha;
    if (!(ka < 1.0)) return std::nullopt;
    const double b = ka * ka;
    const double t = field_domination_max();
    const auto at_zero = field_domination_lhs(0.0, kappa, alpha);
    if (!at_zero || *at_zero > t) return std::nullopt;
    // Bisect on [max(0, 1-4b), 1-b): LHS is increasing there, <= t at the left
    // end (it is <= LHS(0) <= t), and diverges at the right end.
    double lo = minimizing_eps(b);
    double hi = 1.0 - b;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const auto v = field_domination_lhs(mid, kappa, alpha);
        if (v && *v <= t)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

bool feasible_at_some_eps(double alpha, double kappa) {
    const double ka = kappa * alpha;
    if (!(ka < 1.0)) return false;
    const auto v = field_domination_lhs(minimizing_eps(ka * ka), kappa, alpha);
    return v && *v <= field_domination_max();
}

namespace {

EnergyBoundReport make_report(const PhysicalParams& p, double kappa, double eps) {
    EnergyBoundReport r;
    r.kappa = kappa;
    r.epsilon = eps;
    const double root = std::sqrt(1.0 - eps);
    const double coul = std::pow(std::sqrt(2.0 * p.Z) + 2.3, 2);
    const double c2_4 =
        (static_cast<double>(p.N) / p.K) * (6.0 * root + 0.5 * p.alpha * coul) * (2.0 * kPi / 27.0);
    r.C2 = std::pow(c2_4, 0.25);
    r.C3 = 6.0 * root / r.C2;
    r.term_mass = std::sqrt(eps) * p.m * p.N;
    r.term_c3 = -6.0 * root * p.lambda * p.N / r.C2;
    r.term_coulomb = -(p.alpha * p.lambda / (2.0 * r.C2)) * coul * p.N;
    r.term_field = -(9.0 / (2.0 * kPi)) * p.lambda * std::pow(r.C2, 3) * p.K;
    r.total = r.term_mass + r.term_c3 + r.term_coulomb + r.term_field;
    r.total_per_electron = r.total / p.N;
    return r;
}

}  // namespace

StabilityCertificate certify(const PhysicalParams& params, std::optional<double> eps, bool paper_mode) {
    params.validate(/*allow_zero_mass=*/true);
    if (eps && (!(*eps >= 0.0) || !(*eps < 1.0)))
        throw std::invalid_argument("certify: eps must lie in [0, 1)");

    StabilityCertificate cert;
    cert.params = params;
    cert.kappa = kappa_min(params.Z, 2, paper_mode);

    bool interval_ok = true;
    double e = 0.0;
    if (eps) {
        e = *eps;
    } else {
        const auto best = optimize_eps(params, paper_mode);
        if (best)
            e = *best;
        else
            interval_ok = false;  // fall back to eps = 0; nothing is claimed
    }

    cert.epsilon = e;
    cert.report = make_report(params, cert.kappa, e);
    cert.C2 = cert.report.C2;
    cert.C3 = cert.report.C3;

    const auto lhs = field_domination_lhs(e, cert.kappa, params.alpha);
    const bool kinetic_ok = cert.kappa * params.alpha * cert.kappa * params.alpha < 1.0 - e;
    cert.feasible = interval_ok && kinetic_ok && lhs && *lhs <= field_domination_max();
    return cert;
}

std::optional<double> optimize_eps(const PhysicalParams& params, bool paper_mode) {
    const double kappa = kappa_min(params.Z, 2, paper_mode);
    const auto hi = eps_max(params.alpha, kappa);
    if (!hi) return std::nullopt;

    const auto value = [&](double e) {
        return make_report(params, kappa, e).total_per_electron;
    };
    // Golden-section maximization on [0, eps_max] to width 1e-10.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = *hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = value(c), fd = value(d);
    while (b - a > 1e-10) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = value(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = value(c);
        }
    }
    const double mid = 0.5 * (a + b);
    // The objective is increasing in eps for every admissible parameter set,
    // so the optimum sits at the interval end; snap if the values agree.
    return value(*hi) >= value(mid) ? *hi : mid;
}

long long max_Z(double alpha, bool paper_mode, long long zcap) {
    if (!(alpha > 0.0)) throw std::invalid_argument("max_Z: alpha must be positive");
    // Unbounded searches still get a guard; it binds only for alpha below
    // ~3e-10, far outside the physically scanned range.
    const long long guard = (zcap >= 0) ? zcap : 1000000000LL;
    long long best = -1;
    for (long long z = 0; z <= guard; ++z) {
        if (!feasible_at_some_eps(alpha, kappa_min(static_cast<double>(z), 2, paper_mode)))
            break;  // feasibility is monotone non-increasing in Z
        best = z;
    }
    return best < 0 ? 0 : best;
}

std::vector<PhaseRow> phase_scan(const std::vector<double>& alpha_grid,
                                 long long z_max,
                                 bool paper_mode,
                                 unsigned jobs) {
    for (std::size_t i = 0; i + 1 < alpha_grid.size(); ++i)
        if (!(alpha_grid[i] < alpha_grid[i + 1]))
            throw std::invalid_argument("phase_scan: alpha grid must be ascending");
    for (double a : alpha_grid)
        if (!(a > 0.0)) throw std::invalid_argument("phase_scan: alpha grid must be positive");

    std::vector<PhaseRow> rows(alpha_grid.size());
    parallel_for(alpha_grid.size(), jobs, [&](std::size_t i) {
        const double a = alpha_grid[i];
        PhaseRow row;
        row.alpha = a;
        row.max_Z = max_Z(a, paper_mode, z_max);
        const double kappa = kappa_min(static_cast<double>(row.max_Z), 2, paper_mode);
        if (feasible_at_some_eps(a, kappa)) {
            const auto e = eps_max(a, kappa);
            row.eps = e ? *e : std::numeric_limits<double>::quiet_NaN();
        } else {
            row.eps = std::numeric_limits<double>::quiet_NaN();
        }
        rows[i] = row;
    });
    return rows;
}

}  // namespace qse
