#include "qse/lieb_thirring.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>

namespace qse {

LiebThirringResult lieb_thirring_ratio(int n, double box, const std::vector<double>& V,
                                       double c1) {
    if (n < 2) throw std::invalid_argument("lieb_thirring_ratio: n must be >= 2");
    if (!(box > 0.0)) throw std::invalid_argument("lieb_thirring_ratio: box must be positive");
    if (!(c1 > 0.0)) throw std::invalid_argument("lieb_thirring_ratio: c1 must be positive");
    const long sites = static_cast<long>(n) * n * n;
    if (static_cast<long>(V.size()) != sites)
        throw std::invalid_argument("lieb_thirring_ratio: V must have n^3 samples");
    for (double v : V)
        if (!(v >= 0.0)) throw std::invalid_argument("lieb_thirring_ratio: V must be nonnegative");

    const double h = box / n;
    const double inv_h2 = 1.0 / (h * h);

    // c1 * (-Laplacian_7pt) - V, dense symmetric, column major
    std::vector<double> H(static_cast<std::size_t>(sites) * sites, 0.0);
    auto at = [&](long r, long c) -> double& { return H[static_cast<std::size_t>(c) * sites + r]; };
    auto site = [&](int ix, int iy, int iz) -> long {
        return (static_cast<long>(ix) * n + iy) * n + iz;
    };
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) {
                const long s = site(ix, iy, iz);
                at(s, s) = 6.0 * c1 * inv_h2 - V[s];
                const long nb[6] = {site((ix + 1) % n, iy, iz), site((ix + n - 1) % n, iy, iz),
                                    site(ix, (iy + 1) % n, iz), site(ix, (iy + n - 1) % n, iz),
                                    site(ix, iy, (iz + 1) % n), site(ix, iy, (iz + n - 1) % n)};
                for (long t : nb) at(s, t) += -c1 * inv_h2;
            }

    std::vector<double> eigs(sites);
    const lapack_int info = LAPACKE_dsyev(LAPACK_COL_MAJOR, 'N', 'U',
                                          static_cast<lapack_int>(sites), H.data(),
                                          static_cast<lapack_int>(sites), eigs.data());
    if (info != 0) throw std::runtime_error("lieb_thirring_ratio: eigensolver failed");

    LiebThirringResult out{0.0, 0.0, 0.0, 0};
    for (long s = 0; s < sites; ++s) {
        if (eigs[s] < 0.0) {
            out.moment_sum += std::sqrt(-eigs[s]);
            ++out.negative_count;
        }
        out.v2_integral += V[s] * V[s];
    }
    out.v2_integral *= h * h * h;
    const double bound = kHalfMomentConstant * std::pow(c1, -1.5) * out.v2_integral;
    out.ratio = bound > 0.0 ? out.moment_sum / bound : 0.0;
    return out;
}

std::vector<double> gaussian_well(int n, double box, const Eigen::Vector3d& center, double depth,
                                  double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_well: sigma must be positive");
    if (!(depth >= 0.0)) throw std::invalid_argument("gaussian_well: depth must be nonnegative");
    const long sites = static_cast<long>(n) * n * n;
    std::vector<double> V(sites);
    const double h = box / n;
    for (long s = 0; s < sites; ++s) {
        const int iz = static_cast<int>(s % n), iy = static_cast<int>((s / n) % n),
                  ix = static_cast<int>(s / (static_cast<long>(n) * n));
        double r2 = 0.0;
        const double xs[3] = {ix * h, iy * h, iz * h};
        for (int j = 0; j < 3; ++j) {
            double d = std::fmod(std::abs(xs[j] - center[j] * box), box);
            d = std::min(d, box - d);
            r2 += d * d;
        }
        V[s] = depth * std::exp(-0.5 * r2 / (sigma * sigma));
    }
    return V;
}

}  // namespace qse
