#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qse/lieb_thirring.hpp"

#include <cmath>

using namespace qse;

TEST_CASE("half-moment constant") {
    CHECK(kHalfMomentConstant == 0.060);
}

TEST_CASE("zero potential has no bound states") {
    const int n = 6;
    std::vector<double> V(static_cast<std::size_t>(n) * n * n, 0.0);
    const auto r = lieb_thirring_ratio(n, 5.0, V, 1.0);
    // the periodic Laplacian's constant mode sits at exactly zero; allow the
    // eigensolver to place it a rounding error below
    CHECK(r.moment_sum <= 1e-5);
    CHECK(r.negative_count <= 1);
    CHECK(r.v2_integral == 0.0);
    CHECK(r.ratio == 0.0);
}

TEST_CASE("periodic Gaussian well samples") {
    const int n = 8;
    const double box = 4.0;
    const auto V = gaussian_well(n, box, Eigen::Vector3d(0.0, 0.5, 0.5), 3.0, 0.8);
    REQUIRE(V.size() == static_cast<std::size_t>(n) * n * n);

    // the center lies on a grid site: the maximum equals the depth
    double vmax = 0.0;
    for (double v : V) vmax = std::max(vmax, v);
    CHECK(vmax == doctest::Approx(3.0).epsilon(1e-14));
    const long c = (0L * n + n / 2) * n + n / 2;
    CHECK(V[c] == doctest::Approx(3.0).epsilon(1e-14));

    // minimum-image periodicity: shifting the center by one box is a no-op
    const auto W = gaussian_well(n, box, Eigen::Vector3d(1.0, 0.5, 0.5), 3.0, 0.8);
    for (std::size_t s = 0; s < V.size(); ++s) CHECK(V[s] == doctest::Approx(W[s]).epsilon(1e-13));

    // wrap-around distance: the site one step back across the boundary sees
    // the well at distance h, not (n-1) h
    const long back = (static_cast<long>(n - 1) * n + n / 2) * n + n / 2;
    CHECK(V[back] == doctest::Approx(3.0 * std::exp(-0.5 * 0.25 / 0.64)).epsilon(1e-12));

    CHECK_THROWS_AS(gaussian_well(n, box, Eigen::Vector3d::Zero(), 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(gaussian_well(n, box, Eigen::Vector3d::Zero(), -1.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("discrete half-moment diagnostic on a small well") {
    const int n = 10;
    const double box = 8.0;
    const auto V = gaussian_well(n, box, Eigen::Vector3d(0.5, 0.5, 0.5), 2.0, 1.6);
    const auto r = lieb_thirring_ratio(n, box, V, 1.0);

    CHECK(r.negative_count >= 1);
    CHECK(r.moment_sum > 0.0);
    CHECK(r.ratio > 0.0);
    CHECK(r.ratio <= 1.2);  // well within the continuum bound on resolved wells

    // the quadrature of V^2 matches a direct sum over samples
    double direct = 0.0;
    for (double v : V) direct += v * v;
    direct *= std::pow(box / n, 3);
    CHECK(r.v2_integral == doctest::Approx(direct).epsilon(1e-14));

    // a deeper well binds at least as much half-moment
    const auto V2 = gaussian_well(n, box, Eigen::Vector3d(0.5, 0.5, 0.5), 4.0, 1.6);
    const auto r2 = lieb_thirring_ratio(n, box, V2, 1.0);
    CHECK(r2.moment_sum > r.moment_sum);
    CHECK(r2.negative_count >= r.negative_count);

    // stiffer kinetic constant shrinks the moment sum
    const auto r3 = lieb_thirring_ratio(n, box, V, 2.0);
    CHECK(r3.moment_sum < r.moment_sum);
}

TEST_CASE("input validation") {
    std::vector<double> V(8, 0.0);
    CHECK_THROWS_AS(lieb_thirring_ratio(2, 1.0, V, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lieb_thirring_ratio(2, 0.0, V, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lieb_thirring_ratio(1, 1.0, V, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lieb_thirring_ratio(3, 1.0, V, 1.0), std::invalid_argument);  // size mismatch
    V[3] = -0.5;
    CHECK_THROWS_AS(lieb_thirring_ratio(2, 1.0, V, 1.0), std::invalid_argument);
}
