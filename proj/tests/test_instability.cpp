#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qse/instability.hpp"

#include <cmath>
#include <string>

using namespace qse;

namespace {
ModelVariant make_variant(ProjectorChoice p, FieldType f, bool cutoff, bool coulomb) {
    ModelVariant v;
    v.projector = p;
    v.field = f;
    v.cutoff = cutoff;
    v.coulomb = coulomb;
    return v;
}
}  // namespace

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_kind_name(VerdictKind::stable_second_kind)) ==
          "stable_second_kind");
    CHECK(std::string(verdict_kind_name(VerdictKind::positive_hamiltonian)) ==
          "positive_hamiltonian");
    CHECK(std::string(verdict_kind_name(VerdictKind::instability_first_kind)) ==
          "instability_first_kind");
    CHECK(std::string(verdict_kind_name(VerdictKind::instability_second_kind)) ==
          "instability_second_kind");
    CHECK(std::string(verdict_kind_name(VerdictKind::conditional)) == "conditional");
}

TEST_CASE("free-projector rows collapse for every positive coupling") {
    const double alpha = 1.0 / 137.0;
    for (FieldType f : {FieldType::classical, FieldType::quantized})
        for (bool coulomb : {false, true}) {
            const auto no_cut =
                classify(make_variant(ProjectorChoice::free_projector, f, false, coulomb),
                         alpha, 1.0);
            CHECK(no_cut.kind == VerdictKind::instability_first_kind);
            CHECK_FALSE(no_cut.citations.empty());

            const auto cut =
                classify(make_variant(ProjectorChoice::free_projector, f, true, coulomb),
                         alpha, 1.0);
            CHECK(cut.kind == VerdictKind::instability_second_kind);
            CHECK_FALSE(cut.citations.empty());
        }
}

TEST_CASE("dressed-projector rows") {
    const double alpha = 1.0 / 137.0;

    // no Coulomb: the energy is manifestly nonnegative in every covered row
    for (FieldType f : {FieldType::classical, FieldType::quantized})
        for (bool cutoff : {false, true}) {
            const bool covered = f == FieldType::classical || cutoff;
            const auto v = classify(
                make_variant(ProjectorChoice::dressed_projector, f, cutoff, false), alpha, 1.0);
            CHECK(v.kind ==
                  (covered ? VerdictKind::positive_hamiltonian : VerdictKind::conditional));
        }

    // quantized field without cutoff stays open even with Coulomb
    const auto open = classify(
        make_variant(ProjectorChoice::dressed_projector, FieldType::quantized, false, true),
        alpha, 1.0);
    CHECK(open.kind == VerdictKind::conditional);

    // with Coulomb the verdict follows the certificate
    const auto table =
        make_variant(ProjectorChoice::dressed_projector, FieldType::quantized, true, true);
    CHECK(classify(table, alpha, 1.0).kind == VerdictKind::stable_second_kind);
    CHECK(classify(table, alpha, 42.0).kind == VerdictKind::stable_second_kind);
    CHECK(classify(table, alpha, 43.0).kind == VerdictKind::conditional);
    CHECK(classify(table, alpha, 100.0).kind == VerdictKind::conditional);
    CHECK(classify(table, alpha, 200.0).kind == VerdictKind::instability_first_kind);

    // a caller-supplied critical coupling closes the gap region
    CHECK(classify(table, alpha, 100.0, 1, 1, 1.0 / 200.0).kind ==
          VerdictKind::instability_first_kind);
    CHECK(classify(table, alpha, 100.0, 1, 1, 1.0 / 100.0).kind == VerdictKind::conditional);

    // the classical-field row uses the same certificate region
    const auto classical =
        make_variant(ProjectorChoice::dressed_projector, FieldType::classical, false, true);
    CHECK(classify(classical, alpha, 1.0).kind == VerdictKind::stable_second_kind);
    CHECK(classify(classical, alpha, 200.0).kind == VerdictKind::instability_first_kind);

    CHECK_THROWS_AS(classify(table, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(classify(table, alpha, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(classify(table, alpha, 1.0, 0, 1), std::invalid_argument);
}

TEST_CASE("variational upper bound for the free projector") {
    // N = 2, alpha = a = b = mu = 1
    const auto r = free_projector_upper_bound(2.0, 1.0, 1.0, 1.0, 1.0);
    CHECK(r.unscaled == doctest::Approx(-1.48015790021025362).epsilon(1e-14));
    CHECK(r.scaled == doctest::Approx(-2.74007895010512659).epsilon(1e-14));
    CHECK(r.n_crit_unscaled == 2);
    CHECK(r.n_crit_scaled == 2);

    // the critical counts bracket the sign change of each shape
    for (double alpha : {0.01, 0.1, 0.5})
        for (double a : {1.0, 3.0})
            for (double b : {0.5, 2.0}) {
                const auto rc = free_projector_upper_bound(10.0, alpha, a, b, 2.0);
                const auto at = [&](double nn) {
                    return free_projector_upper_bound(nn, alpha, a, b, 2.0);
                };
                // just below the threshold both canceling terms are equal in
                // size, so an exact zero may round a few ulps negative
                const auto slack = [&](double nn) { return 1e-12 * (1.0 + alpha * b * nn * nn); };
                const double nu = static_cast<double>(rc.n_crit_unscaled);
                const double ns = static_cast<double>(rc.n_crit_scaled);
                CHECK(at(nu).unscaled < 0.0);
                if (rc.n_crit_unscaled > 1) CHECK(at(nu - 1).unscaled >= -slack(nu - 1));
                CHECK(at(ns).scaled < 0.0);
                if (rc.n_crit_scaled > 1) CHECK(at(ns - 1).scaled >= -slack(ns - 1));
            }

    // the scale factor multiplies the scaled shape only
    const auto m1 = free_projector_upper_bound(5.0, 0.1, 1.0, 1.0, 1.0);
    const auto m3 = free_projector_upper_bound(5.0, 0.1, 1.0, 1.0, 3.0);
    CHECK(m3.scaled == doctest::Approx(3.0 * m1.scaled).epsilon(1e-14));
    CHECK(m3.unscaled == m1.unscaled);

    CHECK_THROWS_AS(free_projector_upper_bound(1.0, 0.1, 0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(free_projector_upper_bound(1.0, 0.1, 1.0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(free_projector_upper_bound(1.0, 0.1, 1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(free_projector_upper_bound(1.0, 0.0, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(free_projector_upper_bound(-1.0, 0.1, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("many-nuclei collapse condition") {
    // alpha = 1, c = 1: need total charge >= 1 and spread charge >= 2
    CHECK(nuclei_instability_condition({1.0, 1.0}, 1.0, 1.0));
    CHECK_FALSE(nuclei_instability_condition({1.0}, 1.0, 1.0));  // sum of squares too small
    CHECK(nuclei_instability_condition({2.0}, 1.0, 1.0));
    CHECK_FALSE(nuclei_instability_condition({0.5, 0.5, 0.5, 0.5}, 1.0, 1.0));

    // weak coupling raises the required total like alpha^{-3/2}
    CHECK_FALSE(nuclei_instability_condition({1.0, 1.0}, 0.01, 1.0));
    const double need = std::pow(0.01, -1.5);  // 1000
    std::vector<double> many(1000, 1.0);
    CHECK(nuclei_instability_condition(many, 0.01, 1.0));
    CHECK(many.size() >= need);

    CHECK_THROWS_AS(nuclei_instability_condition({1.0, -1.0}, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(nuclei_instability_condition({1.0}, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(nuclei_instability_condition({1.0}, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("critical charge thresholds") {
    const auto c = critical_Z(1.0 / 137.0);
    CHECK(c.z_fourpi == doctest::Approx(174.433817628717293).epsilon(1e-14));
    CHECK(c.z_kato == c.z_fourpi);  // eps = 0 collapses the two

    const auto k = critical_Z(1.0 / 137.0, 0.05);
    CHECK(k.z_fourpi == c.z_fourpi);
    CHECK(k.z_kato == doctest::Approx(178.741474115984175).epsilon(1e-14));

    const auto w = critical_Z(1.0 / 137.0, 3.0);
    CHECK(w.z_kato == doctest::Approx(2.0 * w.z_fourpi).epsilon(1e-14));

    CHECK_THROWS_AS(critical_Z(0.0), std::invalid_argument);
    CHECK_THROWS_AS(critical_Z(0.01, -0.1), std::invalid_argument);
}
