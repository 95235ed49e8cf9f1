#include "qse/localization.hpp"

#include <cmath>
#include <stdexcept>

#include "qse/parallel.hpp"

namespace qse {

namespace {

// Lattice offsets inside the kernel ball |o|*h <= L.  The continuum kernel is
// constant on its support, so the normalized discrete kernel is the uniform
// average over these offsets.
std::vector<Eigen::Vector3i> kernel_offsets(double L, double h) {
    const int reach = static_cast<int>(std::floor(L / h + 1e-9));
    const double r2max = (L / h) * (L / h) * (1.0 + 1e-12);
    std::vector<Eigen::Vector3i> offsets;
    for (int i = -reach; i <= reach; ++i)
        for (int j = -reach; j <= reach; ++j)
            for (int k = -reach; k <= reach; ++k)
                if (double(i) * i + double(j) * j + double(k) * k <= r2max)
                    offsets.emplace_back(i, j, k);
    return offsets;
}

double min_dist(const Eigen::Vector3d& x, const std::vector<Eigen::Vector3d>& R) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& r : R) d = std::min(d, (x - r).norm());
    return d;
}

}  // namespace

LocalizationFamily build_localization(const NuclearConfig& nuclei, double L, double h,
                                      unsigned jobs) {
    nuclei.validate();
    if (!(L > 0.0) || !(h > 0.0)) throw std::invalid_argument("build_localization: L, h must be positive");
    if (h > L / 8.0 * (1.0 + 1e-12)) throw std::domain_error("build_localization: grid too coarse (need h <= L/8)");

    const auto& R = nuclei.positions;
    Eigen::Vector3d lo = R[0], hi = R[0];
    for (const auto& r : R) {
        lo = lo.cwiseMin(r);
        hi = hi.cwiseMax(r);
    }
    const double pad = 3.0 * L + 4.0 * h;
    lo.array() -= pad;
    hi.array() += pad;

    LocalizationFamily fam;
    fam.L = L;
    ScalarGrid g;
    g.origin = lo;
    g.h = h;
    g.nx = static_cast<int>(std::ceil((hi.x() - lo.x()) / h)) + 1;
    g.ny = static_cast<int>(std::ceil((hi.y() - lo.y()) / h)) + 1;
    g.nz = static_cast<int>(std::ceil((hi.z() - lo.z()) / h)) + 1;
    const std::size_t total = std::size_t(g.nx) * g.ny * g.nz;
    if (total > std::size_t(4) * 1024 * 1024)
        throw std::length_error("build_localization: grid exceeds desk-scale point cap");
    g.v.assign(total, 0.0);

    const auto offsets = kernel_offsets(L, h);
    const double weight = 1.0 / static_cast<double>(offsets.size());

    fam.phi1 = g;
    auto& phi1 = fam.phi1;
    parallel_for(static_cast<std::size_t>(g.nx), jobs, [&](std::size_t ii) {
        const int i = static_cast<int>(ii);
        for (int j = 0; j < g.ny; ++j)
            for (int k = 0; k < g.nz; ++k) {
                const Eigen::Vector3d x = g.point(i, j, k);
                const double d = min_dist(x, R);
                double val;
                if (d <= L) {
                    val = 1.0;  // every kernel sample stays within 2L of a nucleus
                } else if (d > 3.0 * L) {
                    val = 0.0;  // every kernel sample stays farther than 2L
                } else {
                    std::size_t inside = 0;
                    for (const auto& o : offsets) {
                        const Eigen::Vector3d y = x + h * o.cast<double>();
                        if (min_dist(y, R) <= 2.0 * L) ++inside;
                    }
                    val = weight * static_cast<double>(inside);
                }
                phi1.v[phi1.idx(i, j, k)] = val;
            }
    });

    fam.phi2 = phi1;
    fam.F = phi1;
    fam.G = phi1;
    for (std::size_t t = 0; t < total; ++t) {
        const double p1 = phi1.v[t];
        const double p2 = 1.0 - p1;
        const double norm = std::sqrt(p1 * p1 + p2 * p2);  // >= 1/sqrt(2) since p1 in [0,1]
        fam.phi2.v[t] = p2;
        fam.F.v[t] = p1 / norm;
        fam.G.v[t] = p2 / norm;
    }
    return fam;
}

GradientCheck gradient_bound_check(const LocalizationFamily& fam) {
    const auto& F = fam.F;
    const auto& G = fam.G;
    const double h = F.h;
    double sup = 0.0;
    for (int i = 1; i + 1 < F.nx; ++i)
        for (int j = 1; j + 1 < F.ny; ++j)
            for (int k = 1; k + 1 < F.nz; ++k) {
                double s = 0.0;
                const std::size_t xm = F.idx(i - 1, j, k), xp = F.idx(i + 1, j, k);
                const std::size_t ym = F.idx(i, j - 1, k), yp = F.idx(i, j + 1, k);
                const std::size_t zm = F.idx(i, j, k - 1), zp = F.idx(i, j, k + 1);
                for (const auto* f : {&F, &G}) {
                    const double dx = (f->v[xp] - f->v[xm]) / (2.0 * h);
                    const double dy = (f->v[yp] - f->v[ym]) / (2.0 * h);
                    const double dz = (f->v[zp] - f->v[zm]) / (2.0 * h);
                    s += dx * dx + dy * dy + dz * dz;
                }
                sup = std::max(sup, s);
            }
    GradientCheck out;
    out.sup = sup;
    out.bound = 36.0 / (fam.L * fam.L);
    out.slack_bound = out.bound * (1.0 + h / fam.L);
    out.pass = sup <= out.slack_bound;
    return out;
}

}  // namespace qse
