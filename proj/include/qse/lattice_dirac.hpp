#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace qse {

// Band-limited gauge field on a periodic n^3 grid of side `box`.  The vector
// potential is a real trigonometric polynomial with integer frequencies of
// max-norm <= band; the magnetic field is its exact curl, differentiated in
// the coefficient algebra.  Pointwise grid products of fields with combined
// band below the grid Nyquist band equal the exact function products, which
// is what makes the Dirac/Pauli square identity exact here.
struct GaugeMode {
    Eigen::Vector3i freq;
    Eigen::Vector3cd amplitude;
};

class LatticeGauge {
public:
    // enforce_band = false permits band > n/4 to build aliasing demonstrations.
    LatticeGauge(double box, int n, int band, std::vector<GaugeMode> modes,
                 bool enforce_band = true);
    static LatticeGauge random(double box, int n, int band, int n_modes, double amplitude,
                               std::uint64_t seed, bool enforce_band = true);

    double box() const { return box_; }
    int n() const { return n_; }
    int band() const { return band_; }
    long site_count() const { return static_cast<long>(n_) * n_ * n_; }
    // component-major samples, 3 x n^3, site index s = (ix*n + iy)*n + iz
    const Eigen::MatrixXd& a_samples() const { return a_; }
    const Eigen::MatrixXd& b_samples() const { return b_; }

private:
    double box_;
    int n_;
    int band_;
    Eigen::MatrixXd a_, b_;
};

// Applies the free momentum p_axis = -i d/dx_axis spectrally (exact on the
// grid's trigonometric algebra) to a field over n^3 sites.
class SpectralMomentum {
public:
    SpectralMomentum(double box, int n);
    Eigen::VectorXcd apply(int axis, const Eigen::VectorXcd& field) const;

private:
    int n_;
    Eigen::MatrixXcd p1d_;  // one-axis momentum matrix, n x n
};

// Residual of D(A)^2 = Pauli(A) + m^2 over random band-limited spinor probes,
// max over probes of |D(D psi) - T psi - m^2 psi| / |psi|.  Probes are
// band-limited to n/4 - 1 so the identity is exact in grid arithmetic exactly
// when the gauge band respects the <= n/4 invariant; gauges violating it are
// rejected unless allow_band_violation (the aliasing negative control).
double dirac_square_identity(const LatticeGauge& gauge, double alpha, double m, int probes = 4,
                             std::uint64_t seed = 1, bool allow_band_violation = false);

}  // namespace qse
