#include "qse/lattice_dirac.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qse/rng.hpp"

namespace qse {

namespace {

using C = std::complex<double>;

Eigen::Matrix2cd pauli_sigma(int j) {
    Eigen::Matrix2cd s;
    switch (j) {
        case 0: s << C(0, 0), C(1, 0), C(1, 0), C(0, 0); break;
        case 1: s << C(0, 0), C(0, -1), C(0, 1), C(0, 0); break;
        default: s << C(1, 0), C(0, 0), C(0, 0), C(-1, 0); break;
    }
    return s;
}

}  // namespace

LatticeGauge::LatticeGauge(double box, int n, int band, std::vector<GaugeMode> modes,
                           bool enforce_band)
    : box_(box), n_(n), band_(band) {
    if (!(box > 0.0)) throw std::invalid_argument("LatticeGauge: box must be positive");
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("LatticeGauge: n must be even and >= 8");
    if (band < 0 || band > n / 2 - 1)
        throw std::invalid_argument("LatticeGauge: band must lie within the grid band");
    if (enforce_band && band > n / 4)
        throw std::domain_error("LatticeGauge: band exceeds half the grid band");
    for (const auto& mode : modes)
        if (mode.freq.cwiseAbs().maxCoeff() > band)
            throw std::invalid_argument("LatticeGauge: mode outside declared band");

    const long sites = site_count();
    a_ = Eigen::MatrixXd::Zero(3, sites);
    b_ = Eigen::MatrixXd::Zero(3, sites);
    const double h = box / n;
    const double kunit = 2.0 * std::numbers::pi / box;
    for (long s = 0; s < sites; ++s) {
        const int iz = static_cast<int>(s % n), iy = static_cast<int>((s / n) % n),
                  ix = static_cast<int>(s / (static_cast<long>(n) * n));
        const Eigen::Vector3d x(ix * h, iy * h, iz * h);
        for (const auto& mode : modes) {
            const Eigen::Vector3d kappa = kunit * mode.freq.cast<double>();
            const C phase = std::exp(C(0.0, kappa.dot(x)));
            // componentwise i*(kappa x c); Eigen's cross() conjugates complex
            // results, which would flip the imaginary part of the amplitude
            Eigen::Vector3cd curl_amp;
            for (int j = 0; j < 3; ++j) {
                const int u = (j + 1) % 3, v = (j + 2) % 3;
                curl_amp[j] = C(0.0, 1.0) *
                              (kappa[u] * mode.amplitude[v] - kappa[v] * mode.amplitude[u]);
            }
            for (int j = 0; j < 3; ++j) {
                a_(j, s) += 2.0 * std::real(mode.amplitude[j] * phase);
                b_(j, s) += 2.0 * std::real(curl_amp[j] * phase);
            }
        }
    }
}

LatticeGauge LatticeGauge::random(double box, int n, int band, int n_modes, double amplitude,
                                  std::uint64_t seed, bool enforce_band) {
    auto rng = trial_rng(seed, 0);
    std::uniform_int_distribution<int> fdist(-band, band);
    std::normal_distribution<double> gauss(0.0, amplitude);
    std::vector<GaugeMode> modes;
    modes.reserve(n_modes);
    for (int i = 0; i < n_modes; ++i) {
        GaugeMode m;
        m.freq = Eigen::Vector3i(fdist(rng), fdist(rng), fdist(rng));
        for (int j = 0; j < 3; ++j) m.amplitude[j] = C(gauss(rng), gauss(rng));
        modes.push_back(m);
    }
    return LatticeGauge(box, n, band, std::move(modes), enforce_band);
}

SpectralMomentum::SpectralMomentum(double box, int n) : n_(n) {
    const double kunit = 2.0 * std::numbers::pi / box;
    p1d_ = Eigen::MatrixXcd::Zero(n, n);
    for (int f = 0; f < n; ++f) {
        const int signed_f = f <= n / 2 - 1 ? f : f - n;
        const double kappa = kunit * signed_f;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                p1d_(x, y) += kappa / double(n) *
                              std::exp(C(0.0, 2.0 * std::numbers::pi * f * (x - y) / n));
    }
}

Eigen::VectorXcd SpectralMomentum::apply(int axis, const Eigen::VectorXcd& field) const {
    const long n = n_;
    if (field.size() != n * n * n) throw std::invalid_argument("SpectralMomentum: size mismatch");
    Eigen::VectorXcd out(field.size());
    // site index s = (ix*n + iy)*n + iz; stride of the chosen axis
    const long stride = axis == 0 ? n * n : axis == 1 ? n : 1;
    const long nlines = n * n;
    Eigen::VectorXcd line(n);
    for (long l = 0; l < nlines; ++l) {
        // base index of the l-th line along `axis`
        long base;
        if (axis == 0)
            base = l;  // (iy, iz) fixed
        else if (axis == 1)
            base = (l / n) * n * n + (l % n);  // (ix, iz) fixed
        else
            base = l * n;  // (ix, iy) fixed
        for (long t = 0; t < n; ++t) line[t] = field[base + t * stride];
        line = (p1d_ * line).eval();
        for (long t = 0; t < n; ++t) out[base + t * stride] = line[t];
    }
    return out;
}

namespace {

// covariant momentum (p_j + sqrt(alpha) A_j) on one spinor component
Eigen::VectorXcd covariant(const SpectralMomentum& mom, const LatticeGauge& g, double sqrt_alpha,
                           int axis, const Eigen::VectorXcd& comp) {
    Eigen::VectorXcd out = mom.apply(axis, comp);
    for (long s = 0; s < comp.size(); ++s) out[s] += sqrt_alpha * g.a_samples()(axis, s) * comp[s];
    return out;
}

struct Spinor {
    // four components over n^3 sites
    std::array<Eigen::VectorXcd, 4> c;
    long sites() const { return c[0].size(); }
};

Spinor dirac_apply(const SpectralMomentum& mom, const LatticeGauge& g, double sqrt_alpha, double m,
                   const Spinor& psi) {
    const long sites = psi.sites();
    Spinor out;
    for (int a = 0; a < 4; ++a) out.c[a] = m * (a < 2 ? 1.0 : -1.0) * psi.c[a];
    for (int j = 0; j < 3; ++j) {
        const Eigen::Matrix2cd sj = pauli_sigma(j);
        std::array<Eigen::VectorXcd, 4> pi;
        for (int a = 0; a < 4; ++a) pi[a] = covariant(mom, g, sqrt_alpha, j, psi.c[a]);
        // alpha_j = [[0, sigma_j], [sigma_j, 0]]
        for (int r = 0; r < 2; ++r)
            for (int col = 0; col < 2; ++col) {
                if (sj(r, col) == C{}) continue;
                out.c[r] += sj(r, col) * pi[2 + col];
                out.c[2 + r] += sj(r, col) * pi[col];
            }
    }
    return out;
}

Spinor pauli_apply(const SpectralMomentum& mom, const LatticeGauge& g, double sqrt_alpha,
                   const Spinor& psi) {
    Spinor out;
    for (int a = 0; a < 4; ++a) out.c[a] = Eigen::VectorXcd::Zero(psi.sites());
    for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 4; ++a)
            out.c[a] += covariant(mom, g, sqrt_alpha, j,
                                  covariant(mom, g, sqrt_alpha, j, psi.c[a]));
    // sqrt(alpha) sigma.B on both 2-spinor blocks
    for (int j = 0; j < 3; ++j) {
        const Eigen::Matrix2cd sj = pauli_sigma(j);
        for (int r = 0; r < 2; ++r)
            for (int col = 0; col < 2; ++col) {
                if (sj(r, col) == C{}) continue;
                for (int blk = 0; blk < 4; blk += 2) {
                    const auto& src = psi.c[blk + col];
                    auto& dst = out.c[blk + r];
                    for (long s = 0; s < psi.sites(); ++s)
                        dst[s] += sqrt_alpha * g.b_samples()(j, s) * sj(r, col) * src[s];
                }
            }
    }
    return out;
}

Spinor random_band_limited_spinor(const LatticeGauge& g, int band, std::mt19937_64& rng) {
    const int n = g.n();
    const double kunit = 2.0 * std::numbers::pi / g.box();
    const double h = g.box() / n;
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> fdist(-band, band);
    Spinor psi;
    for (int a = 0; a < 4; ++a) psi.c[a] = Eigen::VectorXcd::Zero(g.site_count());
    for (int mode = 0; mode < 6; ++mode) {
        const Eigen::Vector3i f(fdist(rng), fdist(rng), fdist(rng));
        const Eigen::Vector3d kappa = kunit * f.cast<double>();
        Eigen::Vector4cd amp;
        for (int a = 0; a < 4; ++a) amp[a] = C(gauss(rng), gauss(rng));
        for (long s = 0; s < g.site_count(); ++s) {
            const int iz = static_cast<int>(s % n), iy = static_cast<int>((s / n) % n),
                      ix = static_cast<int>(s / (static_cast<long>(n) * n));
            const C phase = std::exp(C(0.0, kappa.dot(Eigen::Vector3d(ix * h, iy * h, iz * h))));
            for (int a = 0; a < 4; ++a) psi.c[a][s] += amp[a] * phase;
        }
    }
    return psi;
}

}  // namespace

double dirac_square_identity(const LatticeGauge& gauge, double alpha, double m, int probes,
                             std::uint64_t seed, bool allow_band_violation) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("dirac_square_identity: alpha must be >= 0");
    if (gauge.band() > gauge.n() / 4 && !allow_band_violation)
        throw std::domain_error("dirac_square_identity: gauge band exceeds half the grid band");
    const SpectralMomentum mom(gauge.box(), gauge.n());
    const double sqrt_alpha = std::sqrt(alpha);
    const int probe_band = std::max(1, gauge.n() / 4 - 1);
    auto rng = trial_rng(seed, 0);
    double worst = 0.0;
    for (int p = 0; p < probes; ++p) {
        const Spinor psi = random_band_limited_spinor(gauge, probe_band, rng);
        const Spinor dpsi = dirac_apply(mom, gauge, sqrt_alpha, m, psi);
        const Spinor ddpsi = dirac_apply(mom, gauge, sqrt_alpha, m, dpsi);
        const Spinor tpsi = pauli_apply(mom, gauge, sqrt_alpha, psi);
        double num = 0.0, den = 0.0;
        for (int a = 0; a < 4; ++a) {
            num += (ddpsi.c[a] - tpsi.c[a] - m * m * psi.c[a]).squaredNorm();
            den += psi.c[a].squaredNorm();
        }
        if (den > 0.0) worst = std::max(worst, std::sqrt(num / den));
    }
    return worst;
}

}  // namespace qse
