#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "qse/geometry.hpp"

namespace qse {

struct ScalarGrid {
    Eigen::Vector3d origin = Eigen::Vector3d::Zero();
    double h = 0.0;
    int nx = 0, ny = 0, nz = 0;
    std::vector<double> v;

    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * ny + j) * nz + k;
    }
    Eigen::Vector3d point(int i, int j, int k) const {
        return origin + h * Eigen::Vector3d(i, j, k);
    }
    std::size_t size() const { return v.size(); }
};

// phi1 = (uniform ball kernel of radius L) * (indicator of the union of
// radius-2L balls around the nuclei); phi2 = 1 - phi1; F and G are the
// normalized pair F = phi1/sqrt(phi1^2+phi2^2), G = phi2/sqrt(...).
struct LocalizationFamily {
    double L = 0.0;
    ScalarGrid phi1, phi2, F, G;
};

// Builds the family on a uniform grid of spacing h covering the nuclei padded
// by 3L + 4h.  The discrete kernel is the exact uniform average over lattice
// offsets inside the radius-L ball, so phi1 = 1 wherever the nearest nucleus
// is closer than L and phi1 = 0 beyond 3L, exactly.
// Throws std::domain_error when h > L/8 (too coarse) and std::length_error
// when the grid would exceed the desk-scale point cap.
LocalizationFamily build_localization(const NuclearConfig& nuclei, double L, double h,
                                      unsigned jobs = 0);

struct GradientCheck {
    double sup = 0.0;          // max over interior grid points of |dF|^2 + |dG|^2
    double bound = 0.0;        // 36 / L^2
    double slack_bound = 0.0;  // 36 / L^2 * (1 + h/L)
    bool pass = false;         // sup <= slack_bound
};

// Central-difference gradient bound over all interior grid points.
GradientCheck gradient_bound_check(const LocalizationFamily& family);

}  // namespace qse
