#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qse/fock.hpp"
#include "qse/field_bounds.hpp"
#include "qse/modes.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace qse;
namespace {
constexpr double kPi = std::numbers::pi;
using C = std::complex<double>;
}  // namespace

TEST_CASE("Gauss-Legendre nodes and weights") {
    std::vector<double> x, w;
    gauss_legendre(1, x, w);
    CHECK(x[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(w[0] == doctest::Approx(2.0).epsilon(1e-15));

    gauss_legendre(2, x, w);
    CHECK(x[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-14));

    // n nodes integrate polynomials of degree <= 2n-1 exactly
    gauss_legendre(5, x, w);
    for (int deg = 0; deg <= 9; ++deg) {
        double s = 0.0;
        for (int i = 0; i < 5; ++i) s += w[i] * std::pow(x[i], deg);
        const double exact = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;
        CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }

    CHECK_THROWS_AS(gauss_legendre(0, x, w), std::invalid_argument);
}

TEST_CASE("mode set quadrature moments") {
    const double Lambda = 2.0;
    for (int nr : {2, 3}) {
        const auto ms = build_modeset(Lambda, nr, 2);
        CHECK(ms.n_kpoints() == static_cast<std::size_t>(nr) * 2 * 4);
        CHECK(ms.n_modes() == 2 * ms.n_kpoints());

        double vol = 0, m1 = 0, mm1 = 0, mm2 = 0, m2 = 0;
        for (std::size_t p = 0; p < ms.n_kpoints(); ++p) {
            const double w = ms.weights[p];
            const double o = ms.kpoints[p].norm();
            CHECK(o <= Lambda * (1 + 1e-12));
            CHECK(o > 0.0);
            CHECK(w > 0.0);
            vol += w;
            m1 += w * o;
            mm1 += w / o;
            mm2 += w / (o * o);
            m2 += w * o * o;
        }
        // radial integrands r^{2+j}: exact whenever 2+j <= 2*nr-1
        CHECK(vol == doctest::Approx(4.0 * kPi / 3.0 * std::pow(Lambda, 3)).epsilon(1e-13));
        CHECK(m1 == doctest::Approx(kPi * std::pow(Lambda, 4)).epsilon(1e-13));
        CHECK(mm1 == doctest::Approx(2.0 * kPi * Lambda * Lambda).epsilon(1e-13));
        CHECK(mm2 == doctest::Approx(4.0 * kPi * Lambda).epsilon(1e-13));
        if (nr >= 3)
            CHECK(m2 == doctest::Approx(4.0 * kPi / 5.0 * std::pow(Lambda, 5)).epsilon(1e-13));
    }
}

TEST_CASE("mode set symmetry and direction moments") {
    const auto ms = build_modeset(1.5, 2, 2);

    // exact antipodal pairing with matched weights
    for (std::size_t p = 0; p < ms.n_kpoints(); ++p) {
        bool found = false;
        for (std::size_t q = 0; q < ms.n_kpoints(); ++q) {
            if ((ms.kpoints[p] + ms.kpoints[q]).norm() < 1e-12 * ms.kpoints[p].norm()) {
                CHECK(ms.weights[p] == doctest::Approx(ms.weights[q]).epsilon(1e-14));
                found = true;
                break;
            }
        }
        CHECK(found);
    }

    // quadratic direction moments are isotropic
    double vol = 0;
    Eigen::Matrix3d mom = Eigen::Matrix3d::Zero();
    Eigen::Vector3d first = Eigen::Vector3d::Zero();
    for (std::size_t p = 0; p < ms.n_kpoints(); ++p) {
        const Eigen::Vector3d khat = ms.kpoints[p].normalized();
        vol += ms.weights[p];
        first += ms.weights[p] * khat;
        mom += ms.weights[p] * khat * khat.transpose();
    }
    CHECK(first.norm() <= 1e-13 * vol);
    CHECK((mom - (vol / 3.0) * Eigen::Matrix3d::Identity()).norm() <= 1e-13 * vol);
}

TEST_CASE("polarization frames") {
    for (std::uint64_t seed : {0ull, 9ull}) {
        const auto ms = build_modeset(1.0, 2, 2, seed);
        for (std::size_t p = 0; p < ms.n_kpoints(); ++p) {
            const Eigen::Vector3d khat = ms.kpoints[p].normalized();
            const auto& e1 = ms.pols[p][0];
            const auto& e2 = ms.pols[p][1];
            CHECK(std::abs(e1.norm() - 1.0) <= 1e-13);
            CHECK(std::abs(e2.norm() - 1.0) <= 1e-13);
            CHECK(std::abs(e1.dot(e2)) <= 1e-13);
            CHECK(std::abs(e1.dot(khat)) <= 1e-13);
            CHECK(std::abs(e2.dot(khat)) <= 1e-13);
            CHECK((khat.cross(e1) - e2).norm() <= 1e-12);  // right-handed chart
        }
    }
}

TEST_CASE("seeded rotation is a proper rotation and preserves moments") {
    const auto r = seeded_rotation(123);
    CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).norm() <= 1e-13);
    CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(seeded_rotation(123) == r);  // deterministic

    const auto a = build_modeset(1.0, 2, 2, 0);
    const auto b = build_modeset(1.0, 2, 2, 123);
    double va = 0, vb = 0;
    for (double w : a.weights) va += w;
    for (double w : b.weights) vb += w;
    CHECK(va == doctest::Approx(vb).epsilon(1e-14));
    // the rotated design is the rotation of the unrotated one
    for (std::size_t p = 0; p < a.n_kpoints(); ++p)
        CHECK((seeded_rotation(123) * a.kpoints[p] - b.kpoints[p]).norm() <= 1e-12);
}

TEST_CASE("vacuum field strength closed form") {
    // (1/4pi^2) sum w/|k| over modes equals Lambda^2/pi at every radial order
    for (double Lambda : {0.5, 1.0, 2.0})
        for (int nr : {1, 2, 3}) {
            const auto ms = build_modeset(Lambda, nr, 2);
            CHECK(vacuum_a_squared(ms) ==
                  doctest::Approx(Lambda * Lambda / kPi).epsilon(1e-13));
        }
}

TEST_CASE("truncated dimension") {
    CHECK(fock_dimension(2, 3) == 10);
    CHECK(fock_dimension(4, 3) == 35);
    CHECK(fock_dimension(16, 3) == 969);
    CHECK(fock_dimension(32, 3) == 6545);
    CHECK(fock_dimension(48, 3) == 20825);
    CHECK(fock_dimension(5, 0) == 1);
    CHECK(fock_dimension(0, 4) == 1);
    CHECK_THROWS_AS(fock_dimension(1000000, 30), std::length_error);
    CHECK_THROWS_AS(fock_dimension(2, -1), std::invalid_argument);
}

TEST_CASE("Fock basis layout") {
    const auto ms = build_modeset(1.0, 1, 1);  // 2 k-points, 4 modes
    REQUIRE(ms.n_modes() == 4);
    TruncatedFock fock(ms, 3);
    CHECK(fock.dim() == 35);
    CHECK(fock.n_max() == 3);
    CHECK(fock.sector_begin(0) == 0);
    CHECK(fock.sector_end(0) == 1);
    CHECK(fock.sector_end(1) == 5);
    CHECK(fock.sector_end(2) == 15);
    CHECK(fock.sector_end(3) == 35);
    CHECK(fock.prefix_dim(0) == 35);
    CHECK(fock.prefix_dim(1) == 15);
    CHECK(fock.prefix_dim(2) == 5);
    CHECK(fock.prefix_dim(3) == 1);
    for (std::size_t v = 0; v < fock.dim(); ++v) {
        const int occ = fock.occupation_of(v);
        CHECK(occ >= 0);
        CHECK(occ <= 3);
        if (v > 0) CHECK(occ >= fock.occupation_of(v - 1));  // sector ordering
    }
    CHECK_THROWS_AS(TruncatedFock(ms, 9), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedFock(ms, 3, 10), std::length_error);
}

TEST_CASE("canonical commutation relations on the exact prefix") {
    const auto ms = build_modeset(1.0, 1, 1);
    TruncatedFock fock(ms, 3);
    const auto pd = static_cast<Eigen::Index>(fock.prefix_dim(1));
    for (std::size_t m = 0; m < fock.n_modes(); ++m)
        for (std::size_t n = 0; n < fock.n_modes(); ++n) {
            const auto am = fock.annihilator(m);
            const auto an = fock.annihilator(n);
            const Eigen::SparseMatrix<C> comm =
                (am * an.adjoint() - an.adjoint() * am).pruned();
            const Eigen::MatrixXcd dense = Eigen::MatrixXcd(comm).topLeftCorner(pd, pd);
            const double expect = (m == n) ? 1.0 : 0.0;
            CHECK((dense - expect * Eigen::MatrixXcd::Identity(pd, pd)).norm() <= 1e-12);
        }
}

TEST_CASE("ladder application routes agree") {
    const auto ms = build_modeset(1.0, 1, 1);
    TruncatedFock fock(ms, 3);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    std::vector<C> c(fock.n_modes()), d(fock.n_modes());
    for (auto& z : c) z = C(g(rng), g(rng));
    for (auto& z : d) z = C(g(rng), g(rng));

    Eigen::VectorXcd v(fock.dim());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = C(g(rng), g(rng));

    const Eigen::VectorXcd direct = fock.apply_ladder(v, c, d);

    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(fock.dim(), fock.dim());
    for (std::size_t m = 0; m < fock.n_modes(); ++m) {
        const Eigen::MatrixXcd am = Eigen::MatrixXcd(fock.annihilator(m));
        op += c[m] * am + d[m] * am.adjoint();
    }
    CHECK((direct - op * v).norm() <= 1e-12 * (1.0 + v.norm()));

    // sparse basis-column route matches too
    for (std::size_t col : {0ul, 3ul, 17ul}) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(fock.dim());
        e[static_cast<Eigen::Index>(col)] = 1.0;
        const Eigen::VectorXcd full = fock.apply_ladder(e, c, d);
        Eigen::VectorXcd sparse = Eigen::VectorXcd::Zero(fock.dim());
        for (const auto& [row, val] : fock.apply_ladder_basis(col, c, d))
            sparse[row] += val;
        CHECK((full - sparse).norm() <= 1e-13 * (1.0 + full.norm()));
    }
}

TEST_CASE("field energy diagonal") {
    const auto ms = build_modeset(1.0, 1, 1);
    TruncatedFock fock(ms, 2);
    const auto hf = fock.hf_diagonal();
    CHECK(hf[0] == 0.0);
    // sector 1: one photon in mode m costs |k_m|
    for (std::size_t v = fock.sector_begin(1); v < fock.sector_end(1); ++v) {
        const std::size_t m = v - fock.sector_begin(1);
        CHECK(hf[v] == doctest::Approx(ms.k_of(m).norm()).epsilon(1e-14));
    }
    // two photons in the same mode cost twice the single cost
    const double o0 = ms.k_of(0).norm();
    bool found_double = false;
    for (std::size_t v = fock.sector_begin(2); v < fock.sector_end(2); ++v)
        if (std::abs(hf[v] - 2.0 * o0) < 1e-12) found_double = true;
    CHECK(found_double);
}

TEST_CASE("number-conserving quadratic form") {
    const auto ms = build_modeset(1.0, 1, 1);
    TruncatedFock fock(ms, 3);
    const std::size_t P = fock.prefix_dim(0);

    // identity kernel counts photons
    const Eigen::MatrixXcd n_op =
        fock.number_form_matrix(Eigen::MatrixXcd::Identity(4, 4), P);
    for (std::size_t v = 0; v < P; ++v)
        CHECK(std::abs(n_op(v, v) - static_cast<double>(fock.occupation_of(v))) <= 1e-13);

    // random Hermitian kernel vs explicit ladder assembly
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd K(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) K(i, j) = C(g(rng), g(rng));
    K = (K + K.adjoint()).eval();

    Eigen::MatrixXcd explicit_op = Eigen::MatrixXcd::Zero(fock.dim(), fock.dim());
    for (int m = 0; m < 4; ++m) {
        const Eigen::MatrixXcd am = Eigen::MatrixXcd(fock.annihilator(m));
        for (int n = 0; n < 4; ++n)
            explicit_op += K(m, n) * (am.adjoint() * Eigen::MatrixXcd(fock.annihilator(n)));
    }
    const Eigen::MatrixXcd got = fock.number_form_matrix(K, P);
    CHECK((got - explicit_op.topLeftCorner(P, P)).norm() <= 1e-11);

    CHECK_THROWS_AS(fock.number_form_matrix(Eigen::MatrixXcd::Identity(3, 3), P),
                    std::invalid_argument);
    CHECK_THROWS_AS(fock.number_form_matrix(Eigen::MatrixXcd::Identity(4, 4), P + 1),
                    std::out_of_range);
}

TEST_CASE("vacuum expectation via explicit operators matches the closed form") {
    const auto ms = build_modeset(1.3, 2, 2);
    TruncatedFock fock(ms, 2);
    const auto ops = build_field_operators(fock, Eigen::Vector3d(0.2, -0.1, 0.4));
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(fock.dim());
    vac[0] = 1.0;
    double a2 = 0.0;
    for (int i = 0; i < 3; ++i) a2 += std::real(vac.dot(ops.A[i] * (ops.A[i] * vac)));
    CHECK(a2 == doctest::Approx(vacuum_a_squared(ms)).epsilon(1e-12));

    // Hf matches the diagonal
    const auto hf = fock.hf_diagonal();
    for (std::size_t v = 0; v < fock.dim(); ++v)
        CHECK(std::abs(ops.Hf.coeff(v, v).real() - hf[v]) <= 1e-13 * (1.0 + hf[v]));
}
