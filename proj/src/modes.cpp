#include "qse/modes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qse/rng.hpp"

namespace qse {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    // Newton iteration on Legendre P_n, symmetric pairs filled together.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n == 1) {
        nodes[0] = 0.0;
        weights[0] = 2.0;
    }
}

Eigen::Matrix3d seeded_rotation(std::uint64_t seed) {
    if (seed == 0) return Eigen::Matrix3d::Identity();
    auto rng = trial_rng(seed, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    // Uniform rotation from a normalized quaternion.
    Eigen::Vector4d q;
    for (int i = 0; i < 4; ++i) q[i] = gauss(rng);
    q.normalize();
    const double w = q[0], x = q[1], y = q[2], z = q[3];
    Eigen::Matrix3d r;
    r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
        2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
        2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return r;
}

namespace {

std::array<Eigen::Vector3d, 2> polarization_pair(const Eigen::Vector3d& k) {
    const Eigen::Vector3d khat = k.normalized();
    Eigen::Vector3d e1 = Eigen::Vector3d::UnitZ().cross(k);
    if (e1.norm() <= 1e-8)
        e1 = Eigen::Vector3d::UnitX();
    else
        e1.normalize();
    const Eigen::Vector3d e2 = khat.cross(e1);
    return {e1, e2};
}

}  // namespace

ModeSet build_modeset(double Lambda, int n_radial, int n_angular, std::uint64_t seed) {
    if (!(Lambda > 0.0)) throw std::invalid_argument("build_modeset: Lambda must be positive");
    if (n_radial < 1 || n_angular < 1)
        throw std::invalid_argument("build_modeset: quadrature orders must be >= 1");

    std::vector<double> rn, rw, cn, cw;
    gauss_legendre(n_radial, rn, rw);
    gauss_legendre(n_angular, cn, cw);

    const int n_phi = 2 * n_angular;  // even count keeps phi -> phi + pi inside the set
    const double two_pi = 2.0 * std::numbers::pi;
    const Eigen::Matrix3d rot = seeded_rotation(seed);

    ModeSet ms;
    ms.Lambda = Lambda;
    ms.kpoints.reserve(static_cast<std::size_t>(n_radial) * n_angular * n_phi);
    ms.weights.reserve(ms.kpoints.capacity());
    for (int a = 0; a < n_radial; ++a) {
        const double r = 0.5 * Lambda * (rn[a] + 1.0);
        const double wr = 0.5 * Lambda * rw[a] * r * r;
        for (int b = 0; b < n_angular; ++b) {
            const double c = cn[b];
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int f = 0; f < n_phi; ++f) {
                const double phi = two_pi * (f + 0.5) / n_phi;
                Eigen::Vector3d k(r * s * std::cos(phi), r * s * std::sin(phi), r * c);
                ms.kpoints.push_back(rot * k);
                ms.weights.push_back(wr * cw[b] * two_pi / n_phi);
            }
        }
    }
    ms.pols.reserve(ms.kpoints.size());
    for (const auto& k : ms.kpoints) ms.pols.push_back(polarization_pair(k));
    return ms;
}

}  // namespace qse
