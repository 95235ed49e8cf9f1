#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "qse/fock.hpp"
#include "qse/modes.hpp"

namespace qse {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Field operators over a mode set.

enum class FieldKind { vector_potential, magnetic, electric };

// Ladder coefficients gamma_m such that the i-th component of the field at x
// is sum_m gamma_m a_m + conj(gamma_m) a*_m:
//   vector_potential: (sqrt(w)/2pi) (eps_i / sqrt|k|) e^{ik.x}
//   magnetic:         (i sqrt(w)/2pi) ((k x eps)_i / sqrt|k|) e^{ik.x}
//   electric:         (i sqrt(w)/2pi) sqrt|k| eps_i e^{ik.x}
std::vector<Complex> field_coeffs(const ModeSet& modes, FieldKind kind, int component,
                                  const Eigen::Vector3d& x);

// Closed form for the vacuum expectation of sum_i A_i(x)^2:
// (1/4pi^2) sum_{modes} weight / |k|.
double vacuum_a_squared(const ModeSet& modes);

struct FieldOperators {
    std::array<Eigen::SparseMatrix<Complex>, 3> A, B, E;
    Eigen::SparseMatrix<Complex> Hf;
};

// Assembles explicit sparse matrices; throws std::length_error when
// fock.dim() exceeds dim_cap.
FieldOperators build_field_operators(const TruncatedFock& fock, const Eigen::Vector3d& x,
                                     std::size_t dim_cap = 25000);

// Commutator [X_i(x), Y_j(y)] of two field components.  In the exact mode
// algebra this is the scalar sum_m (gx_m conj(gy_m) - gy_m conj(gx_m));
// residual is the sup over basis states of occupation <= n_max - 2 (where
// the truncated composition is exact) of |([X,Y] - scalar) v|.
struct CommutatorResult {
    Complex scalar;
    double residual;
};
CommutatorResult field_commutator_check(const TruncatedFock& fock, FieldKind xkind, int i,
                                        const Eigen::Vector3d& x, FieldKind ykind, int j,
                                        const Eigen::Vector3d& y);

// ---------------------------------------------------------------------------
// Weight functions and the one-photon comparison kernel.

// Nonnegative spatial weight w entering the field-energy lower bounds; one of
//   constant:  w(y) = value everywhere (infinite integral),
//   delta:     w = mass * delta_point,
//   sampled:   w given on grid cells of volume cell_volume.
class WeightField {
public:
    enum class Kind { constant, delta, sampled };

    static WeightField constant(double value);
    static WeightField delta(const Eigen::Vector3d& point, double mass);
    static WeightField sampled(std::vector<Eigen::Vector3d> points, std::vector<double> values,
                               double cell_volume);

    Kind kind() const { return kind_; }
    double constant_value() const { return const_value_; }
    const Eigen::Vector3d& delta_point() const { return point_; }
    double delta_mass() const { return mass_; }
    const std::vector<Eigen::Vector3d>& grid_points() const { return points_; }
    const std::vector<double>& grid_values() const { return values_; }
    double cell_volume() const { return cell_volume_; }

    // integral of w; +infinity for the constant kind (unless value == 0)
    double integral() const;
    // (2pi)^{-3/2} \int w(y) e^{iq.y} dy; throws for the constant kind
    Complex fourier(const Eigen::Vector3d& q) const;

private:
    Kind kind_ = Kind::constant;
    double const_value_ = 0.0;
    Eigen::Vector3d point_ = Eigen::Vector3d::Zero();
    double mass_ = 0.0;
    std::vector<Eigen::Vector3d> points_;
    std::vector<double> values_;
    double cell_volume_ = 0.0;
};

// One-photon vertex families v-hat_{lambda}(k) in C^3:
//   magnetic_family: (k x eps_lambda) / ((2pi)^{3/2} |k|)
//   electric_family: eps_lambda / (2pi)^{3/2}
//   potential_family: eps_lambda / ((2pi)^{3/2} |k|)
enum class VertexFamily { magnetic_family, electric_family, potential_family };

Eigen::Vector3cd vertex_vector(VertexFamily fam, const Eigen::Vector3d& k,
                               const Eigen::Vector3d& eps);

// Spectral norm of the Hermitian kernel
//   M[(p,l),(q,u)] = (2pi)^{3/2} sqrt(w_p w_q) (sum_j conj(vhat_{l,j}(k_p))
//                    vhat_{u,j}(k_q)) what(k_q - k_p)
// over mode pairs.  The constant kind uses the diagonal discretization
// what(k_q - k_p) -> value * (2pi)^{3/2} delta_{pq} / w_p, under which a unit
// constant weight with the magnetic family gives exactly the identity.
double weight_kernel_norm(const WeightField& w, VertexFamily fam, const ModeSet& modes);

// ---------------------------------------------------------------------------
// Field-energy lower bound checks on a truncated Fock space.

// Two interchangeable routes from the kernel-norm condition to an operator
// bound.  The number-conserving route compares Hf with the quadratic form
// sum sqrt(w_m w_n)-kernel a*_m a_n.  The symmetrized routes square the
// Hermitian combinations L + L* or i(L - L*) against w; they require an
// integrable weight and carry the subtraction (1/2) (int w) sum_m weight_m
// |k_m| |vhat(m)|^2.
enum class LemmaForm { number_conserving, symmetrized_plus, symmetrized_minus };

struct LemmaResult {
    double margin;        // smallest eigenvalue of the bound's margin matrix
    double kernel_norm;   // spectral norm of the comparison kernel
    double subtraction;   // additive constant (zero for number_conserving)
};

// Verifies Hf >= (bound form) on the sectors of occupation <= n_max - 2,
// where truncation is exact.  Throws std::domain_error when the kernel norm
// exceeds 1 (the bound's hypothesis) or when a symmetrized form is requested
// for a non-integrable weight.
LemmaResult lemma_check(const TruncatedFock& fock, const WeightField& w, VertexFamily fam,
                        LemmaForm form);

// Named instances of the field-energy bounds with closed-form constants:
//   b_integral:  Hf >= (1/8pi) int B^2 w  - (Lambda^4/8pi^2) int w
//   b_pointwise: Hf >= (9pi/8) Lambda^-3 B(x)^2 - (9/8) Lambda
//   e_pointwise: Hf >= (9pi/8) Lambda^-3 E(x)^2 - (9/8) Lambda
//   a_pointwise: Hf >= (3pi/8) Lambda^-1 A(x)^2 - (3/4) Lambda
enum class FieldBoundKind { b_integral, b_pointwise, e_pointwise, a_pointwise };

struct BoundConstants {
    double prefactor;
    double subtraction;
    std::optional<double> weight_scale;  // the delta mass C saturating the kernel norm
};
BoundConstants bound_constants(FieldBoundKind kind, double Lambda);

struct PointwiseResult {
    double margin;  // lambda_min of P(Hf + subtraction)P - prefactor sum_i Gram_i
    double prefactor;
    double subtraction;
};

// Checks Hf + subtraction - prefactor * sum_i X_i(x)^2 >= 0 on the sectors of
// occupation <= n_max - 2 for X in {A, B, E} with the constants above.
PointwiseResult pointwise_bound_check(const TruncatedFock& fock, const Eigen::Vector3d& x,
                                      FieldKind which);

}  // namespace qse
