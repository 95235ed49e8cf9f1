#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qse {

// Model variants: which Dirac operator defines the electron subspace,
// whether the field is classical or quantized, and whether an ultraviolet
// cutoff and the Coulomb interaction are present.
enum class ProjectorChoice { free_projector, dressed_projector };
enum class FieldType { classical, quantized };

struct ModelVariant {
    ProjectorChoice projector = ProjectorChoice::dressed_projector;
    FieldType field = FieldType::quantized;
    bool cutoff = true;
    bool coulomb = true;
};

enum class VerdictKind {
    stable_second_kind,
    positive_hamiltonian,
    instability_first_kind,
    instability_second_kind,
    conditional
};

struct Verdict {
    VerdictKind kind = VerdictKind::conditional;
    std::vector<std::string> conditions;  // human-readable thresholds
    std::vector<std::string> citations;   // stable anchor slugs
};

const char* verdict_kind_name(VerdictKind kind);

// Decision table over model variants.  For the dressed projector with
// Coulomb interaction the verdict defers to the stability certificate:
// stable_second_kind iff the certificate is feasible at (alpha, Z);
// instability_first_kind when Z*alpha > 4/pi or alpha exceeds a
// caller-supplied critical coupling; conditional in the unresolved region
// between the two (and for the quantized-field-no-cutoff variant, which the
// decision tables do not cover).
Verdict classify(const ModelVariant& variant, double alpha, double Z, int N = 1, int K = 1,
                 std::optional<double> alpha_critical = std::nullopt);

// Variational upper bound shapes a*N^{4/3} - alpha*b*N^2 (unscaled) and
// mu*(a*N^{1/3} - alpha*b*N^2) (scaled); a, b are caller-supplied positive
// constants, mu > 0 a scale.  n_crit_* are the smallest integer N making the
// corresponding form negative.
struct ProjectorBoundResult {
    double unscaled;
    double scaled;
    long long n_crit_unscaled;
    long long n_crit_scaled;
};
ProjectorBoundResult free_projector_upper_bound(double N, double alpha, double a, double b,
                                                double mu);

// True iff sum Z_j >= const_c * alpha^{-3/2} and sum Z_j^2 >= 2: enough
// nuclear charge in total, spread over nuclei that are individually heavy
// enough, makes the total Coulomb energy negative at fixed field cost.
bool nuclei_instability_condition(const std::vector<double>& charges, double alpha,
                                  double const_c);

// Critical charges: Z_fourpi = 4/(pi*alpha) and the epsilon-dependent
// sufficient condition Z_kato = (4/pi) * sqrt(1+eps) / alpha.
struct CriticalZ {
    double z_fourpi;
    double z_kato;
};
CriticalZ critical_Z(double alpha, double eps = 0.0);

}  // namespace qse
