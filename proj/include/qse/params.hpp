#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qse {

// Units: hbar = c = 1 throughout.  alpha, Z, C2, C3, kappa, epsilon are
// dimensionless; m and lambda carry energy units, so every report term is an
// energy.
struct PhysicalParams {
    double alpha = 1.0 / 137.0;  // fine-structure constant, > 0
    double Z = 1.0;              // common nuclear charge, >= 0 (real-valued)
    double m = 1.0;              // electron mass, > 0 (m = 0 allowed in certify)
    double lambda = 1.0;         // ultraviolet photon-momentum cutoff, > 0
    int N = 1;                   // electron count, >= 1
    int K = 1;                   // nucleus count, >= 1

    void validate(bool allow_zero_mass = false) const;
};

// Per-term decomposition of the energy lower bound.  The four terms are, in
// order: +sqrt(eps)*m*N, -6*sqrt(1-eps)*lambda*N/C2, the Coulomb-capture term
// -(alpha*lambda/(2*C2))*(sqrt(2Z)+2.3)^2*N, and the field payback
// -(9/(2*pi))*lambda*C2^3*K.
struct EnergyBoundReport {
    double kappa = 0.0;
    double epsilon = 0.0;
    double C2 = 0.0;
    double C3 = 0.0;
    double term_mass = 0.0;
    double term_c3 = 0.0;
    double term_coulomb = 0.0;
    double term_field = 0.0;
    double total = 0.0;
    double total_per_electron = 0.0;
};

// Replace per-nucleus charges by the common cap (the concavity extreme).
// Returns (Z, K).  Throws std::domain_error on an empty list, a negative
// charge, or a charge above the cap.
std::pair<double, int> reduce_charges(const std::vector<double>& charges, double Zcap);

}  // namespace qse
