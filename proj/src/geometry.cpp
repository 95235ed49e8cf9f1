#include "qse/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qse {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void NuclearConfig::validate() const {
    if (positions.empty()) throw std::domain_error("NuclearConfig: need at least one nucleus");
    if (!(Z >= 0.0)) throw std::domain_error("NuclearConfig: charge must be nonnegative");
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j)
            if ((positions[i] - positions[j]).norm() == 0.0)
                throw std::domain_error("NuclearConfig: coincident nuclei");
}

std::vector<double> voronoi_radii(const NuclearConfig& nuclei) {
    nuclei.validate();
    const auto& R = nuclei.positions;
    std::vector<double> D(R.size(), kInf);
    for (std::size_t j = 0; j < R.size(); ++j) {
        for (std::size_t i = 0; i < R.size(); ++i) {
            if (i == j) continue;
            D[j] = std::min(D[j], 0.5 * (R[j] - R[i]).norm());
        }
    }
    return D;
}

std::size_t nearest_nucleus(const Eigen::Vector3d& x, const NuclearConfig& nuclei) {
    const auto& R = nuclei.positions;
    std::size_t best = 0;
    double best_d = (x - R[0]).norm();
    for (std::size_t j = 1; j < R.size(); ++j) {
        const double d = (x - R[j]).norm();
        if (d < best_d) {
            best = j;
            best_d = d;
        }
    }
    return best;
}

double w_potential(const Eigen::Vector3d& x, const NuclearConfig& nuclei) {
    const auto D = voronoi_radii(nuclei);
    const std::size_t j = nearest_nucleus(x, nuclei);
    const double r = (x - nuclei.positions[j]).norm();
    if (r == 0.0) return kInf;
    // Long-range branch on r >= 10 D_j/11; D_j = +inf keeps it everywhere.
    if (std::isinf(D[j]) || r >= (10.0 / 11.0) * D[j]) {
        const double c = std::sqrt(nuclei.Z) + 1.0 / std::sqrt(2.0);
        return c * c / r;
    }
    return nuclei.Z / r + 121.0 / (42.0 * D[j]);
}

double coulomb_energy(const ElectronConfig& electrons, const NuclearConfig& nuclei) {
    const auto& xs = electrons.positions;
    const auto& R = nuclei.positions;
    const double Z = nuclei.Z;
    double v = 0.0;
    for (const auto& x : xs)
        for (const auto& r : R) {
            const double d = (x - r).norm();
            v += (d == 0.0) ? -kInf : -Z / d;
        }
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            const double d = (xs[i] - xs[j]).norm();
            v += (d == 0.0) ? kInf : 1.0 / d;
        }
    for (std::size_t k = 0; k < R.size(); ++k)
        for (std::size_t l = k + 1; l < R.size(); ++l) v += Z * Z / (R[k] - R[l]).norm();
    return v;
}

double coulomb_lower_bound_margin(const ElectronConfig& electrons, const NuclearConfig& nuclei) {
    const double vc = coulomb_energy(electrons, nuclei);
    const auto D = voronoi_radii(nuclei);
    double bound = 0.0;
    for (const auto& x : electrons.positions) bound -= w_potential(x, nuclei);
    double inv_d = 0.0;
    for (double d : D) inv_d += std::isinf(d) ? 0.0 : 1.0 / d;
    bound += nuclei.Z * nuclei.Z / 8.0 * inv_d;
    return vc - bound;
}

LocalizedCoulombBound localized_coulomb_bound(int N, double L, double Z) {
    if (!(L > 0.0)) throw std::invalid_argument("localized_coulomb_bound: L must be positive");
    if (!(Z >= 0.0)) throw std::invalid_argument("localized_coulomb_bound: Z must be nonnegative");
    if (N < 0) throw std::invalid_argument("localized_coulomb_bound: N must be nonnegative");
    const double s = std::sqrt(2.0 * Z);
    const double strong_mag = std::max((s + 1.0) * (s + 1.0), 2.0 * Z + 110.0 / 21.0);
    const double weak_mag = (s + 2.3) * (s + 2.3);
    LocalizedCoulombBound out;
    out.strong = -(N / (2.0 * L)) * strong_mag;
    out.weak = -(N / (2.0 * L)) * weak_mag;
    return out;
}

}  // namespace qse
