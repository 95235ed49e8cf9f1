#include "qse/instability.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qse/certificate.hpp"

namespace qse {

namespace {
constexpr double kPi = std::numbers::pi;

std::string coulomb_slug(bool coulomb) { return coulomb ? "with-coulomb" : "no-coulomb"; }
std::string cutoff_slug(bool cutoff) { return cutoff ? "with-cutoff" : "no-cutoff"; }
}  // namespace

const char* verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::stable_second_kind: return "stable_second_kind";
        case VerdictKind::positive_hamiltonian: return "positive_hamiltonian";
        case VerdictKind::instability_first_kind: return "instability_first_kind";
        case VerdictKind::instability_second_kind: return "instability_second_kind";
        case VerdictKind::conditional: return "conditional";
    }
    return "conditional";
}

Verdict classify(const ModelVariant& variant, double alpha, double Z, int N, int K,
                 std::optional<double> alpha_critical) {
    if (!(alpha > 0.0)) throw std::invalid_argument("classify: alpha must be positive");
    if (!(Z >= 0.0)) throw std::invalid_argument("classify: Z must be nonnegative");
    if (N < 1 || K < 1) throw std::invalid_argument("classify: N, K must be >= 1");

    Verdict v;
    if (variant.projector == ProjectorChoice::free_projector) {
        // Free-projector rows: unstable for every alpha > 0; the cutoff only
        // softens first-kind collapse to second-kind growth.
        v.kind = variant.cutoff ? VerdictKind::instability_second_kind
                                : VerdictKind::instability_first_kind;
        v.conditions = {"alpha > 0 (arbitrarily small)"};
        v.citations = {"free-projector-table:" + coulomb_slug(variant.coulomb) + ":" +
                       cutoff_slug(variant.cutoff)};
        return v;
    }

    // Dressed projector.  The decision rows cover a classical field with or
    // without cutoff, and a quantized field with cutoff.
    const bool covered = variant.field == FieldType::classical || variant.cutoff;
    if (!covered) {
        v.kind = VerdictKind::conditional;
        v.conditions = {"quantized field without ultraviolet cutoff: not covered by the decision tables"};
        v.citations = {"dressed-projector-table:uncovered-variant"};
        return v;
    }

    if (!variant.coulomb) {
        v.kind = VerdictKind::positive_hamiltonian;
        v.citations = {"dressed-projector-table:no-coulomb"};
        return v;
    }

    PhysicalParams params;
    params.alpha = alpha;
    params.Z = Z;
    params.N = N;
    params.K = K;
    const StabilityCertificate cert = certify(params, std::nullopt, true);
    if (cert.feasible) {
        v.kind = VerdictKind::stable_second_kind;
        v.conditions = {"certificate feasible: kappa*alpha < 1 and field-domination inequality hold"};
        v.citations = {"dressed-projector-table:with-coulomb:stable-region", "stability-certificate"};
        return v;
    }
    const double z_four_pi = 4.0 / (kPi * alpha);
    if (Z * alpha > 4.0 / kPi) {
        v.kind = VerdictKind::instability_first_kind;
        v.conditions = {"Z*alpha > 4/pi (Z > " + std::to_string(z_four_pi) + ")"};
        v.citations = {"dressed-projector-table:with-coulomb:unstable-region",
                       "critical-coupling:four-over-pi"};
        return v;
    }
    if (alpha_critical && alpha > *alpha_critical) {
        v.kind = VerdictKind::instability_first_kind;
        v.conditions = {"alpha > alpha_critical = " + std::to_string(*alpha_critical)};
        v.citations = {"dressed-projector-table:with-coulomb:unstable-region",
                       "critical-coupling:alpha"};
        return v;
    }
    v.kind = VerdictKind::conditional;
    v.conditions = {"between the certificate region and the Z*alpha > 4/pi instability threshold"};
    v.citations = {"dressed-projector-table:with-coulomb:gap-region"};
    return v;
}

ProjectorBoundResult free_projector_upper_bound(double N, double alpha, double a, double b,
                                                double mu) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("free_projector_upper_bound: a and b must be positive");
    if (!(mu > 0.0)) throw std::domain_error("free_projector_upper_bound: mu must be positive");
    if (!(alpha > 0.0) || !(N >= 0.0))
        throw std::invalid_argument("free_projector_upper_bound: bad alpha or N");
    ProjectorBoundResult r;
    r.unscaled = a * std::pow(N, 4.0 / 3.0) - alpha * b * N * N;
    r.scaled = mu * (a * std::cbrt(N) - alpha * b * N * N);
    // a N^{4/3} < alpha b N^2  <=>  N > (a/(alpha b))^{3/2}
    // a N^{1/3} < alpha b N^2  <=>  N > (a/(alpha b))^{3/5}
    const double base = a / (alpha * b);
    r.n_crit_unscaled = static_cast<long long>(std::floor(std::pow(base, 1.5))) + 1;
    r.n_crit_scaled = static_cast<long long>(std::floor(std::pow(base, 0.6))) + 1;
    return r;
}

bool nuclei_instability_condition(const std::vector<double>& charges, double alpha,
                                  double const_c) {
    if (!(const_c > 0.0))
        throw std::invalid_argument("nuclei_instability_condition: const_c must be positive");
    if (!(alpha > 0.0))
        throw std::invalid_argument("nuclei_instability_condition: alpha must be positive");
    double sum = 0.0, sum_sq = 0.0;
    for (double z : charges) {
        if (!(z >= 0.0))
            throw std::invalid_argument("nuclei_instability_condition: negative charge");
        sum += z;
        sum_sq += z * z;
    }
    return sum >= const_c * std::pow(alpha, -1.5) && sum_sq >= 2.0;
}

CriticalZ critical_Z(double alpha, double eps) {
    if (!(alpha > 0.0)) throw std::invalid_argument("critical_Z: alpha must be positive");
    if (!(eps >= 0.0)) throw std::invalid_argument("critical_Z: eps must be nonnegative");
    const double z_four_pi = 4.0 / (kPi * alpha);
    return {z_four_pi, z_four_pi * std::sqrt(1.0 + eps)};
}

}  // namespace qse
