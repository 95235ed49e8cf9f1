#pragma once

#include <optional>
#include <vector>

#include "qse/params.hpp"

namespace qse {

// Upper admissible value of the field-domination ratio: 1/(8*pi*0.060),
// where 0.060 is the Lieb-Thirring half-moment constant used by the bound.
double field_domination_max();

// Floor on the localization parameter kappa: max(q/0.031, pi*Z), with q the
// admissible spin-state count (2 here; 4 kept for comparison).  paper_mode
// substitutes the printed rounding 64.5 for 2/0.031 = 64.516...
double kappa_min(double Z, int q, bool paper_mode);

// LHS of the field-domination condition,
//   (1-eps)^2 * alpha / (1 - eps - (kappa*alpha)^2)^{3/2}.
// Feasibility requires this <= field_domination_max().  Returns nullopt when
// the denominator base 1 - eps - (kappa*alpha)^2 is <= 0: that is an
// infeasibility signal (the kinetic-positivity window is empty), not an error.
std::optional<double> field_domination_lhs(double eps, double kappa, double alpha);

// Largest eps in [0, 1-(kappa*alpha)^2) satisfying the domination condition,
// by bisection to absolute tolerance 1e-12 on the increasing branch of the
// LHS.  The LHS in eps is unimodal with minimum at max(0, 1-4(kappa*alpha)^2),
// so the feasible set is the interval [0, eps_max] whenever eps = 0 is
// feasible.  Returns nullopt if kappa*alpha >= 1 or eps = 0 is infeasible.
std::optional<double> eps_max(double alpha, double kappa);

// True iff some eps >= 0 makes the full condition system feasible; evaluates
// the LHS at its minimizing eps.
bool feasible_at_some_eps(double alpha, double kappa);

struct StabilityCertificate {
    PhysicalParams params;
    double kappa = 0.0;
    double epsilon = 0.0;
    double C2 = 0.0;
    double C3 = 0.0;
    EnergyBoundReport report;
    bool feasible = false;
};

// Evaluate the certificate at the given eps (or the optimized one when eps is
// absent).  kappa is always the minimal admissible value with q = 2.  When
// the system is infeasible the certificate is still filled in (at eps = 0 if
// no eps was supplied) but feasible = false and the report is not a claimed
// bound.
StabilityCertificate certify(const PhysicalParams& params,
                             std::optional<double> eps,
                             bool paper_mode);

// eps in [0, eps_max] maximizing total_per_electron, by golden-section search
// to interval width 1e-10.  nullopt when the feasible interval is empty.
std::optional<double> optimize_eps(const PhysicalParams& params, bool paper_mode);

// Largest integer Z feasible at some eps, found by incrementing Z with
// kappa = kappa_min(Z).  Returns 0 when nothing is feasible (Z = 0 included;
// callers needing the distinction use feasible_at_some_eps directly).
// zcap >= 0 bounds the search (phase scans); zcap < 0 means unbounded.
long long max_Z(double alpha, bool paper_mode, long long zcap = -1);

struct PhaseRow {
    double alpha = 0.0;
    long long max_Z = 0;
    double eps = 0.0;  // NaN when no Z is feasible at this alpha
};

// One row per grid alpha; rows are independent and evaluated concurrently
// when jobs > 1, with order-stable output.
std::vector<PhaseRow> phase_scan(const std::vector<double>& alpha_grid,
                                 long long z_max,
                                 bool paper_mode,
                                 unsigned jobs = 1);

}  // namespace qse
