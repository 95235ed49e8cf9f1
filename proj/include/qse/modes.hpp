#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

namespace qse {

// Quadrature discretization of the photon momentum ball |k| <= Lambda.
// Modes are indexed m = 2*p + lambda over k-points p and polarizations
// lambda in {0, 1}; both polarizations share the k-point weight.
struct ModeSet {
    double Lambda = 0.0;
    std::vector<Eigen::Vector3d> kpoints;
    std::vector<double> weights;  // volume weights, sum ~ (4*pi/3)*Lambda^3
    std::vector<std::array<Eigen::Vector3d, 2>> pols;

    std::size_t n_kpoints() const { return kpoints.size(); }
    std::size_t n_modes() const { return 2 * kpoints.size(); }
    const Eigen::Vector3d& k_of(std::size_t m) const { return kpoints[m / 2]; }
    double weight_of(std::size_t m) const { return weights[m / 2]; }
    const Eigen::Vector3d& pol_of(std::size_t m) const { return pols[m / 2][m % 2]; }
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Product quadrature: Gauss-Legendre radial on [0, Lambda] (n_radial nodes),
// Gauss-Legendre polar in cos(theta) (n_angular nodes), uniform azimuthal
// (2*n_angular nodes), which is exactly symmetric under k -> -k.  A nonzero
// seed applies a deterministic random rotation to the whole design (the
// polarization charts are assigned after rotation):
//   eps1 = normalize(z x k) when |z x k| > 1e-8, else x-hat; eps2 = k-hat x eps1.
ModeSet build_modeset(double Lambda, int n_radial, int n_angular, std::uint64_t seed = 0);

// Deterministic rotation matrix used by build_modeset for nonzero seeds.
Eigen::Matrix3d seeded_rotation(std::uint64_t seed);

}  // namespace qse
