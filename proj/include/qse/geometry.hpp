#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qse {

struct NuclearConfig {
    std::vector<Eigen::Vector3d> positions;  // pairwise distinct
    double Z = 0.0;                          // common charge, >= 0

    void validate() const;  // throws std::domain_error on coincident nuclei
};

struct ElectronConfig {
    std::vector<Eigen::Vector3d> positions;
};

// D_j = half the distance from nucleus j to its nearest other nucleus;
// +infinity when K = 1.  Throws std::domain_error on coincident nuclei.
std::vector<double> voronoi_radii(const NuclearConfig& nuclei);

// Index of the nucleus nearest to x; ties broken by lowest index.
std::size_t nearest_nucleus(const Eigen::Vector3d& x, const NuclearConfig& nuclei);

// Single-particle potential dominating the Coulomb attraction inside the
// Voronoi cell of the nearest nucleus j:
//   (sqrt(Z) + 1/sqrt(2))^2 / |x-R_j|   for |x-R_j| >= 10 D_j / 11,
//   Z/|x-R_j| + 121/(42 D_j)            otherwise.
// The branch radius with D_j = +inf never binds, so a lone nucleus always
// takes the long-range form.  x exactly on a nucleus returns +inf (sentinel).
double w_potential(const Eigen::Vector3d& x, const NuclearConfig& nuclei);

// Total Coulomb energy
//   -Z sum_{i,k} 1/|x_i-R_k| + sum_{i<j} 1/|x_i-x_j| + Z^2 sum_{k<l} 1/|R_k-R_l|.
// Coinciding points produce +/-inf sentinels per term sign, never exceptions.
double coulomb_energy(const ElectronConfig& electrons, const NuclearConfig& nuclei);

// V_c minus its single-particle lower bound -sum_i W(x_i) + (Z^2/8) sum_j 1/D_j.
// Nonnegative for every configuration.
double coulomb_lower_bound_margin(const ElectronConfig& electrons, const NuclearConfig& nuclei);

struct LocalizedCoulombBound {
    double strong = 0.0;  // -(N/2L) * max{(sqrt(2Z)+1)^2, 2Z + 110/21}
    double weak = 0.0;    // -(N/2L) * (sqrt(2Z)+2.3)^2, always <= strong
};

// Both forms of the per-ball Coulomb energy floor at localization radius L.
LocalizedCoulombBound localized_coulomb_bound(int N, double L, double Z);

}  // namespace qse
