#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qse {

// Continuum half-moment constant in the bound sum sqrt|e_i| <= l * int V^2.
inline constexpr double kHalfMomentConstant = 0.060;

struct LiebThirringResult {
    double moment_sum;    // sum of sqrt|e_i| over negative eigenvalues
    double v2_integral;   // grid quadrature of V^2
    double ratio;         // moment_sum / (l * c1^{-3/2} * v2_integral)
    int negative_count;
};

// Negative-spectrum half moment of c1*(-Laplacian) - V on a periodic n^3
// grid (7-point discrete Laplacian), compared against the continuum bound.
// V must be sampled nonnegative (site index s = (ix*n + iy)*n + iz).  The
// discretization is continuum-faithful only while the bound states live in
// the lowest part of the lattice band, i.e. V varies on scales well above
// the grid spacing; the ratio is a diagnostic, not a theorem about the grid.
LiebThirringResult lieb_thirring_ratio(int n, double box, const std::vector<double>& V, double c1);

// Periodic Gaussian well of the given depth centered at `center` (fractions
// of the box in [0,1)^3), width sigma in length units, minimum-image metric.
std::vector<double> gaussian_well(int n, double box, const Eigen::Vector3d& center, double depth,
                                  double sigma);

}  // namespace qse
