#include "qse/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qse {

namespace {

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

void require_hermitian(const Eigen::MatrixXcd& m, const char* what) {
    const double scale = 1.0 + m.norm();
    if (hermiticity_residual(m) > 1e-13 * scale) throw std::invalid_argument(what);
}

void require_psd(const Eigen::MatrixXcd& m, const char* what) {
    require_hermitian(m, what);
    const double scale = 1.0 + m.norm();
    if (hermitian_eigenvalues(m).minCoeff() < -1e-10 * scale) throw std::domain_error(what);
}

// Tr M^{1/2} for PSD M, clipping roundoff-negative eigenvalues.
double half_trace(const Eigen::MatrixXcd& m) {
    const Eigen::VectorXd ev = hermitian_eigenvalues(m);
    double s = 0.0;
    for (int i = 0; i < ev.size(); ++i) s += std::sqrt(std::max(0.0, ev[i]));
    return s;
}

}  // namespace

double hermiticity_residual(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermiticity_residual: matrix must be square");
    return (m - m.adjoint()).norm();
}

double negative_part_trace(const Eigen::MatrixXcd& h, double p) {
    if (p != 1.0 && p != 0.5)
        throw std::invalid_argument("negative_part_trace: exponent must be 1 or 1/2");
    require_hermitian(h, "negative_part_trace: matrix must be Hermitian");
    const Eigen::VectorXd ev = hermitian_eigenvalues(h);
    double s = 0.0;
    for (int i = 0; i < ev.size(); ++i)
        if (ev[i] < 0.0) s += p == 1.0 ? -ev[i] : std::sqrt(-ev[i]);
    return s;
}

Eigen::MatrixXcd negative_part(const Eigen::MatrixXcd& h) {
    require_hermitian(h, "negative_part: matrix must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (h + h.adjoint()));
    Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) ev[i] = std::max(0.0, -ev[i]);
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

BksResult bks_check(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("bks_check: dimension mismatch");
    require_psd(a, "bks_check: A must be positive semidefinite");
    require_psd(b, "bks_check: B must be positive semidefinite");
    const double lhs = negative_part_trace(a - b, 1.0);
    const double rhs = negative_part_trace(a * a - b * b, 0.5);
    return {lhs, rhs, lhs <= rhs + 1e-10};
}

ProjectionResult projection_trace_checks(const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& x,
                                         const Eigen::MatrixXcd& y) {
    if (f.rows() != f.cols() || x.rows() != x.cols() || y.rows() != y.cols() ||
        f.rows() != x.rows() || x.rows() != y.rows())
        throw std::invalid_argument("projection_trace_checks: dimension mismatch");
    require_hermitian(f, "projection_trace_checks: F must be Hermitian");
    require_hermitian(x, "projection_trace_checks: X must be Hermitian");
    require_psd(y, "projection_trace_checks: Y must be positive semidefinite");
    const Eigen::VectorXd fev = hermitian_eigenvalues(f);
    if (fev.cwiseAbs().maxCoeff() > 1.0 + 1e-12)
        throw std::domain_error("projection_trace_checks: F must be a contraction");

    const double lhs1 = negative_part_trace(f * x * f, 0.5);
    const double rhs1 = half_trace(f * negative_part(x) * f);

    const double lhs2 = half_trace(f * y * f);
    const double rhs2 = half_trace(y);

    // R = Y^{1/2} F; R^*R and RR^* share nonzero spectra
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ey(0.5 * (y + y.adjoint()));
    Eigen::VectorXd yev = ey.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXcd r = ey.eigenvectors() * yev.asDiagonal() * ey.eigenvectors().adjoint() * f;
    Eigen::VectorXd s1 = hermitian_eigenvalues(r.adjoint() * r);
    Eigen::VectorXd s2 = hermitian_eigenvalues(r * r.adjoint());
    std::sort(s1.data(), s1.data() + s1.size());
    std::sort(s2.data(), s2.data() + s2.size());
    const double mismatch = (s1 - s2).cwiseAbs().maxCoeff();

    // Half-power sums amplify eigenvalue roundoff near zero to sqrt(eps_mach),
    // so the comparison tolerances scale with n*sqrt(eps_mach*||.||); the
    // spectra match is a plain eigenvalue comparison and stays linear.
    const double n = static_cast<double>(f.rows());
    const double eps_mach = std::numeric_limits<double>::epsilon();
    const double tol1 = n * std::sqrt(eps_mach * (1.0 + x.norm()));
    const double tol2 = n * std::sqrt(eps_mach * (1.0 + y.norm()));
    const double scale3 = 1.0 + s1.cwiseAbs().maxCoeff();
    const bool pass =
        lhs1 <= rhs1 + tol1 && lhs2 <= rhs2 + tol2 && mismatch <= 1e-10 * scale3;
    return {lhs1, rhs1, lhs2, rhs2, mismatch, pass};
}

ChiralResult chiral_projector_check(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& u,
                                    const std::optional<Eigen::MatrixXcd>& s,
                                    double degeneracy_tol) {
    if (h.rows() != h.cols() || u.rows() != u.cols() || u.rows() != h.rows() ||
        (s && (s->rows() != s->cols() || s->rows() != h.rows())))
        throw std::invalid_argument("chiral_projector_check: dimension mismatch");
    require_hermitian(h, "chiral_projector_check: H must be Hermitian");
    const int n = static_cast<int>(h.rows());
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    if ((u.adjoint() * u - id).norm() > 1e-12 * n)
        throw std::invalid_argument("chiral_projector_check: U must be unitary");
    if ((u * u + id).norm() > 1e-12 * n)
        throw std::invalid_argument("chiral_projector_check: U^2 must be -1");
    const double hscale = 1.0 + h.norm();
    if ((u * h + h * u).norm() > 1e-12 * hscale)
        throw std::domain_error("chiral_projector_check: H must anticommute with U");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (h + h.adjoint()));
    const Eigen::VectorXd ev = es.eigenvalues();
    if (ev.cwiseAbs().minCoeff() <= degeneracy_tol * hscale)
        return {true, 0.0, 0.0, 0.0, true};

    Eigen::MatrixXcd pplus = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd pminus = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXcd vv = es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
        (ev[i] > 0.0 ? pplus : pminus) += vv;
    }
    const double projector_residual = (pminus - u.adjoint() * pplus * u).norm();

    Eigen::VectorXd asc = ev, desc = -ev;
    std::sort(asc.data(), asc.data() + n);
    std::sort(desc.data(), desc.data() + n);
    const double symmetry = (asc - desc).cwiseAbs().maxCoeff();

    double sandwich = 0.0;
    if (s) {
        require_hermitian(*s, "chiral_projector_check: S must be Hermitian");
        const double sscale = 1.0 + s->norm();
        if ((u * *s - *s * u).norm() > 1e-10 * sscale)
            throw std::invalid_argument("chiral_projector_check: S must commute with U");
        Eigen::VectorXd sp = hermitian_eigenvalues(pplus * *s * pplus);
        Eigen::VectorXd sm = hermitian_eigenvalues(pminus * *s * pminus);
        std::sort(sp.data(), sp.data() + n);
        std::sort(sm.data(), sm.data() + n);
        sandwich = (sp - sm).cwiseAbs().maxCoeff();
    }

    const bool pass = projector_residual <= 1e-10 * n && symmetry <= 1e-10 * hscale &&
                      sandwich <= 1e-10 * (s ? 1.0 + s->norm() : 1.0);
    return {false, projector_residual, symmetry, sandwich, pass};
}

Eigen::Matrix4cd free_dirac_matrix(const Eigen::Vector3d& p, double m) {
    using C = std::complex<double>;
    Eigen::Matrix2cd sigma[3];
    sigma[0] << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
    sigma[1] << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
    sigma[2] << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
    Eigen::Matrix2cd sp = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 3; ++i) sp += p[i] * sigma[i];
    Eigen::Matrix4cd d = Eigen::Matrix4cd::Zero();
    d.block<2, 2>(0, 2) = sp;
    d.block<2, 2>(2, 0) = sp;
    d.block<2, 2>(0, 0) = m * Eigen::Matrix2cd::Identity();
    d.block<2, 2>(2, 2) = -m * Eigen::Matrix2cd::Identity();
    return d;
}

Eigen::Matrix4cd chiral_u_matrix() {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u.block<2, 2>(0, 2) = Eigen::Matrix2cd::Identity();
    u.block<2, 2>(2, 0) = -Eigen::Matrix2cd::Identity();
    return u;
}

}  // namespace qse
