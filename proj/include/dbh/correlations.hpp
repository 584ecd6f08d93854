// Correlation measures on two-qubit states: quantum mutual information,
// measurement-conditioned entropy with optimization over projective
// measurements on either qubit, classical correlation, quantum discord, and
// measurement-induced disturbance (MID). All entropies are in bits.

#pragma once

#include "dbh/blackhole.hpp"
#include "dbh/qcore.hpp"

namespace correlations {

// I = S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const qcore::DensityMatrix& rho);

// sum over outcomes of p * S(post-state); a branch with p < 1e-14 contributes 0.
double conditional_entropy(const qcore::DensityMatrix& rho, qcore::Side side,
                           const qcore::BlochMeasurement& m);

struct MinimizationResult {
    double min_value = 0.0;
    qcore::BlochMeasurement argmin;
};

// 64x64 (theta, phi) coarse grid followed by per-coordinate golden-section
// refinement (bracket one grid cell, shrunk to 1e-9 rad), converging the
// objective well below 1e-9. Returns the best value seen and its angles.
MinimizationResult minimize_conditional_entropy(const qcore::DensityMatrix& rho,
                                                qcore::Side side);

// C = S(unmeasured marginal) - min over measurements of the conditional entropy.
double classical_correlation(const qcore::DensityMatrix& rho, qcore::Side side);

// D = S(measured marginal) - S(rho_AB) + min conditional entropy
//   = mutual_information - classical_correlation.
double quantum_discord(const qcore::DensityMatrix& rho, qcore::Side side);

struct MidResult {
    double mid_classical = 0.0;  // I(eta): mutual information left after dephasing
    double mid_quantum = 0.0;    // I(rho) - I(eta)
};

// Dephase rho in the eigenbases of its marginals (deterministic tie-break from
// the eigensolver; degenerate marginals fall back to the computational basis)
// and split the mutual information into classical and quantum parts.
MidResult mid(const qcore::DensityMatrix& rho);

struct CorrelationReport {
    double mutual_info = 0.0;
    double classical_a = 0.0;  // measurement on A
    double classical_b = 0.0;  // measurement on B
    double discord_a = 0.0;
    double discord_b = 0.0;
    double mid_classical = 0.0;
    double mid_quantum = 0.0;
    qcore::BlochMeasurement argmin_a;
    qcore::BlochMeasurement argmin_b;
};

// All measures of the shared state at the given physical parameters.
CorrelationReport full_report(const blackhole::DilatonParams& p);

}  // namespace correlations
