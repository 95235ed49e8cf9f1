#pragma once

#include <Eigen/Dense>
#include <optional>

namespace qse {

// Frobenius Hermiticity residual ||M - M^*||_F.
double hermiticity_residual(const Eigen::MatrixXcd& m);

// Sum of |e|^p over the negative eigenvalues e of a Hermitian matrix;
// p must be 1 or 1/2.
double negative_part_trace(const Eigen::MatrixXcd& h, double p);

// Negative part [H]_- as a positive semidefinite matrix.
Eigen::MatrixXcd negative_part(const Eigen::MatrixXcd& h);

// Tr[A - B]_-  <=  Tr[A^2 - B^2]_-^{1/2} for positive semidefinite A, B.
struct BksResult {
    double lhs;
    double rhs;
    bool pass;
};
BksResult bks_check(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Trace comparisons under a Hermitian contraction F (||F|| <= 1):
//   (i)   Tr [FXF]_-^{1/2}  <= Tr (F [X]_- F)^{1/2}     (X Hermitian)
//   (ii)  Tr (FYF)^{1/2}    <= Tr Y^{1/2}               (Y PSD)
//   (iii) the nonzero spectra of R^*R and RR^* coincide, R = Y^{1/2} F.
struct ProjectionResult {
    double compressed_half_moment;  // Tr [FXF]_-^{1/2}
    double dominated_half_moment;   // Tr (F [X]_- F)^{1/2}
    double compressed_half_trace;   // Tr (FYF)^{1/2}
    double full_half_trace;         // Tr Y^{1/2}
    double spectra_mismatch;        // max gap between sorted spectra in (iii)
    bool pass;
};
ProjectionResult projection_trace_checks(const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& x,
                                         const Eigen::MatrixXcd& y);

// Spectral-projector symmetry for H anticommuting with a unitary U with
// U^2 = -1: the negative projector is U^* P^+ U, the spectrum of H is
// symmetric about 0, and for any S commuting with U the compressions
// P^+ S P^+ and P^- S P^- share their spectrum.  Checks are skipped when H
// has (numerically) zero eigenvalues, where the splitting is ambiguous.
struct ChiralResult {
    bool skipped_degenerate;
    double projector_residual;  // ||P^- - U^* P^+ U||_F
    double spectrum_symmetry;   // mismatch between eigs(H) and -eigs(H)
    double sandwich_mismatch;   // spectra of P^+ S P^+ vs P^- S P^- (0 without S)
    bool pass;
};
ChiralResult chiral_projector_check(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& u,
                                    const std::optional<Eigen::MatrixXcd>& s = std::nullopt,
                                    double degeneracy_tol = 1e-8);

// 4x4 free Dirac matrix alpha.p + m beta in the standard representation,
// and the antiunitary-free chiral partner U = [[0, I], [-I, 0]].
Eigen::Matrix4cd free_dirac_matrix(const Eigen::Vector3d& p, double m);
Eigen::Matrix4cd chiral_u_matrix();

}  // namespace qse
