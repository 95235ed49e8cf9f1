#include "qse/field_bounds.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qse {

namespace {

constexpr double kPi = std::numbers::pi;
const double kTwoPiPow32 = std::pow(2.0 * kPi, 1.5);

using SparseVec = TruncatedFock::SparseVec;

void sort_by_index(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

Complex sparse_dot(const SparseVec& a, const SparseVec& b) {
    Complex s{};
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            ++i;
        else if (b[j].first < a[i].first)
            ++j;
        else {
            s += std::conj(a[i].second) * b[j].second;
            ++i;
            ++j;
        }
    }
    return s;
}

// Gram matrix G(u,v) = <H e_u, H e_v> of a Hermitian ladder operator
// H = sum_m c_m a_m + d_m a*_m over the first P basis states.
Eigen::MatrixXcd ladder_gram(const TruncatedFock& fock, std::size_t P, const std::vector<Complex>& c,
                             const std::vector<Complex>& d) {
    std::vector<SparseVec> cols(P);
    for (std::size_t v = 0; v < P; ++v) {
        cols[v] = fock.apply_ladder_basis(v, c, d);
        sort_by_index(cols[v]);
    }
    Eigen::MatrixXcd G(P, P);
    for (std::size_t u = 0; u < P; ++u)
        for (std::size_t v = u; v < P; ++v) {
            G(u, v) = sparse_dot(cols[u], cols[v]);
            G(v, u) = std::conj(G(u, v));
        }
    return G;
}

double min_eigenvalue(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// rho-weighted evaluation cells of an integrable weight
std::vector<std::pair<Eigen::Vector3d, double>> weight_cells(const WeightField& w) {
    std::vector<std::pair<Eigen::Vector3d, double>> cells;
    if (w.kind() == WeightField::Kind::delta) {
        if (w.delta_mass() != 0.0) cells.emplace_back(w.delta_point(), w.delta_mass());
    } else if (w.kind() == WeightField::Kind::sampled) {
        for (std::size_t c = 0; c < w.grid_points().size(); ++c)
            if (w.grid_values()[c] != 0.0)
                cells.emplace_back(w.grid_points()[c], w.grid_values()[c] * w.cell_volume());
    }
    return cells;
}

// Factor Psi sqrt(D) of the kernel M = Psi D Psi^*, rows = modes, columns =
// 3 x cells.  Valid for integrable (delta/sampled) weights.
Eigen::MatrixXcd kernel_factor(const WeightField& w, VertexFamily fam, const ModeSet& modes) {
    const auto cells = weight_cells(w);
    const std::size_t M = modes.n_modes();
    Eigen::MatrixXcd psi(M, 3 * cells.size());
    for (std::size_t m = 0; m < M; ++m) {
        const Eigen::Vector3d& k = modes.k_of(m);
        const double sw = std::sqrt(modes.weight_of(m));
        const Eigen::Vector3cd vh = vertex_vector(fam, k, modes.pol_of(m));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const double sr = std::sqrt(cells[c].second);
            const Complex phase = std::exp(Complex(0.0, -k.dot(cells[c].first)));
            for (int j = 0; j < 3; ++j)
                psi(m, 3 * c + j) = sr * sw * std::conj(vh[j]) * phase;
        }
    }
    return psi;
}

// Full kernel matrix over mode pairs (2P x 2P).
Eigen::MatrixXcd kernel_matrix(const WeightField& w, VertexFamily fam, const ModeSet& modes) {
    const std::size_t M = modes.n_modes();
    if (w.kind() == WeightField::Kind::constant) {
        // diagonal discretization: what -> value (2pi)^{3/2} delta_pq / w_p
        Eigen::MatrixXcd kern = Eigen::MatrixXcd::Zero(M, M);
        const double scale = std::pow(2.0 * kPi, 3.0) * w.constant_value();
        for (std::size_t p = 0; p < modes.n_kpoints(); ++p) {
            const Eigen::Vector3d& k = modes.kpoints[p];
            Eigen::Vector3cd vh[2] = {vertex_vector(fam, k, modes.pols[p][0]),
                                      vertex_vector(fam, k, modes.pols[p][1])};
            for (int l = 0; l < 2; ++l)
                for (int u = 0; u < 2; ++u) kern(2 * p + l, 2 * p + u) = scale * vh[l].dot(vh[u]);
        }
        return kern;
    }
    const Eigen::MatrixXcd psi = kernel_factor(w, fam, modes);
    return psi * psi.adjoint();
}

std::vector<Complex> ladder_l_coeffs(const ModeSet& modes, VertexFamily fam, int j,
                                     const Eigen::Vector3d& y) {
    std::vector<Complex> c(modes.n_modes());
    for (std::size_t m = 0; m < modes.n_modes(); ++m) {
        const Eigen::Vector3d& k = modes.k_of(m);
        const Eigen::Vector3cd vh = vertex_vector(fam, k, modes.pol_of(m));
        c[m] = std::sqrt(modes.weight_of(m)) * std::sqrt(k.norm()) * vh[j] *
               std::exp(Complex(0.0, k.dot(y)));
    }
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field operators

std::vector<Complex> field_coeffs(const ModeSet& modes, FieldKind kind, int component,
                                  const Eigen::Vector3d& x) {
    if (component < 0 || component > 2)
        throw std::invalid_argument("field_coeffs: component must be 0, 1 or 2");
    std::vector<Complex> g(modes.n_modes());
    for (std::size_t m = 0; m < modes.n_modes(); ++m) {
        const Eigen::Vector3d& k = modes.k_of(m);
        const Eigen::Vector3d& eps = modes.pol_of(m);
        const double omega = k.norm();
        const double amp = std::sqrt(modes.weight_of(m)) / (2.0 * kPi);
        const Complex phase = std::exp(Complex(0.0, k.dot(x)));
        switch (kind) {
            case FieldKind::vector_potential:
                g[m] = amp * eps[component] / std::sqrt(omega) * phase;
                break;
            case FieldKind::magnetic:
                g[m] = Complex(0.0, amp) * k.cross(eps)[component] / std::sqrt(omega) * phase;
                break;
            case FieldKind::electric:
                g[m] = Complex(0.0, amp) * std::sqrt(omega) * eps[component] * phase;
                break;
        }
    }
    return g;
}

double vacuum_a_squared(const ModeSet& modes) {
    double s = 0.0;
    for (std::size_t m = 0; m < modes.n_modes(); ++m)
        s += modes.weight_of(m) / modes.k_of(m).norm();
    return s / (4.0 * kPi * kPi);
}

FieldOperators build_field_operators(const TruncatedFock& fock, const Eigen::Vector3d& x,
                                     std::size_t dim_cap) {
    if (fock.dim() > dim_cap)
        throw std::length_error("build_field_operators: dimension exceeds cap");
    const int n = static_cast<int>(fock.dim());
    FieldOperators ops;
    auto assemble = [&](FieldKind kind, int i) {
        const auto g = field_coeffs(fock.modes(), kind, i, x);
        std::vector<Complex> gbar(g.size());
        std::transform(g.begin(), g.end(), gbar.begin(), [](Complex z) { return std::conj(z); });
        std::vector<Eigen::Triplet<Complex>> trips;
        for (std::size_t v = 0; v < fock.dim(); ++v)
            for (const auto& [row, val] : fock.apply_ladder_basis(v, g, gbar))
                trips.emplace_back(static_cast<int>(row), static_cast<int>(v), val);
        Eigen::SparseMatrix<Complex> mat(n, n);
        mat.setFromTriplets(trips.begin(), trips.end());
        return mat;
    };
    for (int i = 0; i < 3; ++i) {
        ops.A[i] = assemble(FieldKind::vector_potential, i);
        ops.B[i] = assemble(FieldKind::magnetic, i);
        ops.E[i] = assemble(FieldKind::electric, i);
    }
    const auto diag = fock.hf_diagonal();
    std::vector<Eigen::Triplet<Complex>> trips;
    for (int v = 0; v < n; ++v)
        if (diag[v] != 0.0) trips.emplace_back(v, v, Complex(diag[v], 0.0));
    ops.Hf.resize(n, n);
    ops.Hf.setFromTriplets(trips.begin(), trips.end());
    return ops;
}

CommutatorResult field_commutator_check(const TruncatedFock& fock, FieldKind xkind, int i,
                                        const Eigen::Vector3d& x, FieldKind ykind, int j,
                                        const Eigen::Vector3d& y) {
    const auto gx = field_coeffs(fock.modes(), xkind, i, x);
    const auto gy = field_coeffs(fock.modes(), ykind, j, y);
    std::vector<Complex> gxbar(gx.size()), gybar(gy.size());
    std::transform(gx.begin(), gx.end(), gxbar.begin(), [](Complex z) { return std::conj(z); });
    std::transform(gy.begin(), gy.end(), gybar.begin(), [](Complex z) { return std::conj(z); });

    Complex scalar{};
    for (std::size_t m = 0; m < gx.size(); ++m)
        scalar += gx[m] * std::conj(gy[m]) - gy[m] * std::conj(gx[m]);

    const std::size_t P = fock.prefix_dim(2);
    std::vector<Complex> scratch(fock.dim(), Complex{});
    std::vector<std::uint32_t> touched;
    auto add_composed = [&](std::size_t v, const std::vector<Complex>& c1,
                            const std::vector<Complex>& d1, const std::vector<Complex>& c2,
                            const std::vector<Complex>& d2, Complex sign) {
        for (const auto& [mid, amp] : fock.apply_ladder_basis(v, c1, d1))
            for (const auto& [row, val] : fock.apply_ladder_basis(mid, c2, d2)) {
                if (scratch[row] == Complex{}) touched.push_back(row);
                scratch[row] += sign * amp * val;
            }
    };
    double residual = 0.0;
    for (std::size_t v = 0; v < P; ++v) {
        touched.clear();
        add_composed(v, gy, gybar, gx, gxbar, Complex(1.0, 0.0));   // X (Y v)
        add_composed(v, gx, gxbar, gy, gybar, Complex(-1.0, 0.0));  // - Y (X v)
        if (scratch[v] == Complex{}) touched.push_back(v);
        scratch[v] -= scalar;
        double nrm2 = 0.0;
        for (auto idx : touched) {
            nrm2 += std::norm(scratch[idx]);
            scratch[idx] = Complex{};
        }
        residual = std::max(residual, std::sqrt(nrm2));
    }
    return {scalar, residual};
}

// ---------------------------------------------------------------------------
// Weight fields

WeightField WeightField::constant(double value) {
    if (value < 0.0) throw std::invalid_argument("WeightField: negative weight");
    WeightField w;
    w.kind_ = Kind::constant;
    w.const_value_ = value;
    return w;
}

WeightField WeightField::delta(const Eigen::Vector3d& point, double mass) {
    if (mass < 0.0) throw std::invalid_argument("WeightField: negative weight");
    WeightField w;
    w.kind_ = Kind::delta;
    w.point_ = point;
    w.mass_ = mass;
    return w;
}

WeightField WeightField::sampled(std::vector<Eigen::Vector3d> points, std::vector<double> values,
                                 double cell_volume) {
    if (points.empty() || points.size() != values.size())
        throw std::invalid_argument("WeightField: point/value size mismatch");
    if (!(cell_volume > 0.0)) throw std::invalid_argument("WeightField: cell volume must be positive");
    for (double v : values)
        if (!(v >= 0.0)) throw std::invalid_argument("WeightField: negative weight");
    WeightField w;
    w.kind_ = Kind::sampled;
    w.points_ = std::move(points);
    w.values_ = std::move(values);
    w.cell_volume_ = cell_volume;
    return w;
}

double WeightField::integral() const {
    switch (kind_) {
        case Kind::constant:
            return const_value_ == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        case Kind::delta:
            return mass_;
        case Kind::sampled: {
            double s = 0.0;
            for (double v : values_) s += v;
            return s * cell_volume_;
        }
    }
    return 0.0;
}

Complex WeightField::fourier(const Eigen::Vector3d& q) const {
    const double norm = std::pow(2.0 * kPi, -1.5);
    switch (kind_) {
        case Kind::constant:
            throw std::domain_error("WeightField::fourier: constant weight has no transform");
        case Kind::delta:
            return norm * mass_ * std::exp(Complex(0.0, q.dot(point_)));
        case Kind::sampled: {
            Complex s{};
            for (std::size_t c = 0; c < points_.size(); ++c)
                s += values_[c] * std::exp(Complex(0.0, q.dot(points_[c])));
            return norm * cell_volume_ * s;
        }
    }
    return {};
}

Eigen::Vector3cd vertex_vector(VertexFamily fam, const Eigen::Vector3d& k,
                               const Eigen::Vector3d& eps) {
    const double omega = k.norm();
    if (omega == 0.0) throw std::domain_error("vertex_vector: zero wave vector");
    switch (fam) {
        case VertexFamily::magnetic_family:
            return (k.cross(eps) / (kTwoPiPow32 * omega)).cast<Complex>();
        case VertexFamily::electric_family:
            return (eps / kTwoPiPow32).cast<Complex>();
        case VertexFamily::potential_family:
            return (eps / (kTwoPiPow32 * omega)).cast<Complex>();
    }
    return Eigen::Vector3cd::Zero();
}

double weight_kernel_norm(const WeightField& w, VertexFamily fam, const ModeSet& modes) {
    if (modes.n_modes() == 0) return 0.0;
    if (w.kind() == WeightField::Kind::constant) {
        // block diagonal over k-points; norm is the largest 2x2 block norm
        const double scale = std::pow(2.0 * kPi, 3.0) * w.constant_value();
        double best = 0.0;
        for (std::size_t p = 0; p < modes.n_kpoints(); ++p) {
            const Eigen::Vector3d& k = modes.kpoints[p];
            Eigen::Matrix2cd b;
            Eigen::Vector3cd vh[2] = {vertex_vector(fam, k, modes.pols[p][0]),
                                      vertex_vector(fam, k, modes.pols[p][1])};
            for (int l = 0; l < 2; ++l)
                for (int u = 0; u < 2; ++u) b(l, u) = scale * vh[l].dot(vh[u]);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(0.5 * (b + b.adjoint()),
                                                               Eigen::EigenvaluesOnly);
            best = std::max(best, es.eigenvalues().cwiseAbs().maxCoeff());
        }
        return best;
    }
    const Eigen::MatrixXcd psi = kernel_factor(w, fam, modes);
    if (psi.cols() == 0) return 0.0;
    // PSD kernel psi psi^*; use whichever Gram is smaller
    Eigen::MatrixXcd gram =
        psi.cols() <= psi.rows() ? (psi.adjoint() * psi).eval() : (psi * psi.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (gram + gram.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    return std::max(0.0, es.eigenvalues().maxCoeff());
}

// ---------------------------------------------------------------------------
// Bound checks

LemmaResult lemma_check(const TruncatedFock& fock, const WeightField& w, VertexFamily fam,
                        LemmaForm form) {
    const ModeSet& modes = fock.modes();
    const double nrm = weight_kernel_norm(w, fam, modes);
    if (nrm > 1.0 + 1e-10)
        throw std::domain_error("lemma_check: weight kernel norm exceeds 1");

    const std::size_t P = fock.prefix_dim(2);
    const auto hf = fock.hf_diagonal();

    if (form == LemmaForm::number_conserving) {
        const std::size_t M = modes.n_modes();
        Eigen::MatrixXcd kern = kernel_matrix(w, fam, modes);
        for (std::size_t a = 0; a < M; ++a)
            for (std::size_t b = 0; b < M; ++b)
                kern(a, b) *= std::sqrt(modes.k_of(a).norm() * modes.k_of(b).norm());
        Eigen::MatrixXcd margin = -fock.number_form_matrix(kern, P);
        for (std::size_t v = 0; v < P; ++v) margin(v, v) += hf[v];
        return {min_eigenvalue(margin), nrm, 0.0};
    }

    if (w.kind() == WeightField::Kind::constant)
        throw std::domain_error("lemma_check: symmetrized form needs an integrable weight");

    double mode_sum = 0.0;
    for (std::size_t m = 0; m < modes.n_modes(); ++m) {
        const Eigen::Vector3d& k = modes.k_of(m);
        mode_sum += modes.weight_of(m) * k.norm() *
                    vertex_vector(fam, k, modes.pol_of(m)).squaredNorm();
    }
    const double sub = 0.5 * w.integral() * mode_sum;

    Eigen::MatrixXcd margin = Eigen::MatrixXcd::Zero(P, P);
    for (std::size_t v = 0; v < P; ++v) margin(v, v) = hf[v] + sub;
    for (const auto& [point, rho] : weight_cells(w)) {
        for (int j = 0; j < 3; ++j) {
            auto c = ladder_l_coeffs(modes, fam, j, point);
            if (form == LemmaForm::symmetrized_minus)
                for (auto& z : c) z *= Complex(0.0, 1.0);
            std::vector<Complex> d(c.size());
            std::transform(c.begin(), c.end(), d.begin(), [](Complex z) { return std::conj(z); });
            margin -= 0.25 * rho * ladder_gram(fock, P, c, d);
        }
    }
    return {min_eigenvalue(margin), nrm, sub};
}

BoundConstants bound_constants(FieldBoundKind kind, double Lambda) {
    if (!(Lambda > 0.0)) throw std::invalid_argument("bound_constants: Lambda must be positive");
    switch (kind) {
        case FieldBoundKind::b_integral:
            return {1.0 / (8.0 * kPi), std::pow(Lambda, 4) / (8.0 * kPi * kPi), std::nullopt};
        case FieldBoundKind::b_pointwise:
        case FieldBoundKind::e_pointwise:
            return {9.0 * kPi / (8.0 * std::pow(Lambda, 3)), 9.0 * Lambda / 8.0,
                    9.0 * kPi * kPi / std::pow(Lambda, 3)};
        case FieldBoundKind::a_pointwise:
            return {3.0 * kPi / (8.0 * Lambda), 3.0 * Lambda / 4.0, 3.0 * kPi * kPi / Lambda};
    }
    throw std::invalid_argument("bound_constants: unknown kind");
}

PointwiseResult pointwise_bound_check(const TruncatedFock& fock, const Eigen::Vector3d& x,
                                      FieldKind which) {
    const ModeSet& modes = fock.modes();
    FieldBoundKind kind = FieldBoundKind::b_pointwise;
    if (which == FieldKind::electric) kind = FieldBoundKind::e_pointwise;
    if (which == FieldKind::vector_potential) kind = FieldBoundKind::a_pointwise;
    const BoundConstants bc = bound_constants(kind, modes.Lambda);

    const std::size_t P = fock.prefix_dim(2);
    const auto hf = fock.hf_diagonal();
    Eigen::MatrixXcd margin = Eigen::MatrixXcd::Zero(P, P);
    for (std::size_t v = 0; v < P; ++v) margin(v, v) = hf[v] + bc.subtraction;
    for (int i = 0; i < 3; ++i) {
        const auto g = field_coeffs(modes, which, i, x);
        std::vector<Complex> gbar(g.size());
        std::transform(g.begin(), g.end(), gbar.begin(), [](Complex z) { return std::conj(z); });
        margin -= bc.prefactor * ladder_gram(fock, P, g, gbar);
    }
    return {min_eigenvalue(margin), bc.prefactor, bc.subtraction};
}

}  // namespace qse
