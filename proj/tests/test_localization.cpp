#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qse/localization.hpp"

#include <cmath>

using namespace qse;
using Eigen::Vector3d;

namespace {
NuclearConfig lone_nucleus() {
    NuclearConfig n;
    n.positions = {Vector3d::Zero()};
    n.Z = 1.0;
    return n;
}
}  // namespace

TEST_CASE("scalar grid indexing") {
    ScalarGrid g;
    g.origin = Vector3d(1, 2, 3);
    g.h = 0.5;
    g.nx = 4;
    g.ny = 5;
    g.nz = 6;
    g.v.assign(static_cast<std::size_t>(4) * 5 * 6, 0.0);
    CHECK(g.size() == 120);
    CHECK(g.idx(0, 0, 0) == 0);
    CHECK(g.idx(0, 0, 1) == 1);
    CHECK(g.idx(0, 1, 0) == 6);
    CHECK(g.idx(1, 0, 0) == 30);
    CHECK(g.point(0, 0, 0) == g.origin);
    CHECK((g.point(2, 1, 3) - Vector3d(2.0, 2.5, 4.5)).norm() == 0.0);
}

TEST_CASE("partition pair around a lone nucleus") {
    const double L = 1.0;
    const double h = L / 8.0;
    const auto fam = build_localization(lone_nucleus(), L, h);
    CHECK(fam.L == L);
    REQUIRE(fam.phi1.size() > 0);
    REQUIRE(fam.phi1.size() == fam.phi2.size());
    REQUIRE(fam.phi1.size() == fam.F.size());
    REQUIRE(fam.phi1.size() == fam.G.size());

    const auto& p1 = fam.phi1;
    int inner = 0, outer = 0;
    for (int i = 0; i < p1.nx; ++i)
        for (int j = 0; j < p1.ny; ++j)
            for (int k = 0; k < p1.nz; ++k) {
                const std::size_t t = p1.idx(i, j, k);
                const double r = p1.point(i, j, k).norm();
                const double v1 = p1.v[t];
                const double v2 = fam.phi2.v[t];
                CHECK(v1 >= 0.0);
                CHECK(v1 <= 1.0);
                // complementary pair and normalized pair
                CHECK(std::abs(v1 + v2 - 1.0) <= 1e-15);
                const double f = fam.F.v[t], g = fam.G.v[t];
                CHECK(std::abs(f * f + g * g - 1.0) <= 1e-12);
                if (r < L - 1e-12) {
                    CHECK(v1 == 1.0);  // fully inside: exact plateau
                    CHECK(f == 1.0);
                    CHECK(g == 0.0);
                    ++inner;
                }
                if (r > 3.0 * L + 1e-12) {
                    CHECK(v1 == 0.0);  // fully outside: exact zero
                    CHECK(f == 0.0);
                    CHECK(g == 1.0);
                    ++outer;
                }
            }
    CHECK(inner > 100);   // the grid actually samples both exact regions
    CHECK(outer > 1000);
}

TEST_CASE("gradient bound for one and two nuclei") {
    const double L = 1.0;
    const double h = L / 8.0;

    auto fam1 = build_localization(lone_nucleus(), L, h);
    const auto g1 = gradient_bound_check(fam1);
    CHECK(g1.bound == 36.0 / (L * L));
    CHECK(g1.slack_bound == doctest::Approx(36.0 / (L * L) * (1.0 + h / L)).epsilon(1e-15));
    CHECK(g1.sup <= g1.slack_bound);
    CHECK(g1.pass);
    CHECK(g1.sup > 0.0);

    NuclearConfig two;
    two.positions = {Vector3d::Zero(), Vector3d(1.5 * L, 0.5 * L, 0)};
    two.Z = 1.0;
    auto fam2 = build_localization(two, L, h);
    const auto g2 = gradient_bound_check(fam2);
    CHECK(g2.pass);
    CHECK(g2.sup <= g2.slack_bound);
}

TEST_CASE("construction is deterministic across worker counts") {
    NuclearConfig two;
    two.positions = {Vector3d::Zero(), Vector3d(1.2, 0, 0)};
    two.Z = 1.0;
    const auto a = build_localization(two, 1.0, 0.125, 1);
    const auto b = build_localization(two, 1.0, 0.125, 3);
    REQUIRE(a.F.size() == b.F.size());
    for (std::size_t t = 0; t < a.F.size(); ++t) {
        CHECK(a.phi1.v[t] == b.phi1.v[t]);
        CHECK(a.F.v[t] == b.F.v[t]);
        CHECK(a.G.v[t] == b.G.v[t]);
    }
}

TEST_CASE("grid spacing guard") {
    CHECK_THROWS_AS(build_localization(lone_nucleus(), 1.0, 0.2), std::domain_error);
    CHECK_THROWS_AS(build_localization(lone_nucleus(), 1.0, 0.126), std::domain_error);
    CHECK_NOTHROW(build_localization(lone_nucleus(), 1.0, 0.125));
}
