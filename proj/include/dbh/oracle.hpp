// Independent brute-force verification paths used by the test suite and the
// CLI self-check: Fock-route state reconstruction, dense-grid measurement
// optimization, and the vacuum/one-particle orthogonality diagnostic.
// These never replace the main computation; independence is the point.

#pragma once

#include "dbh/blackhole.hpp"
#include "dbh/qcore.hpp"

namespace oracle {

struct OracleReport {
    double max_entrywise_deviation = 0.0;  // direct vs Fock-route shared state
    double max_objective_gap = 0.0;        // grid discord minus refined discord, worst side
    qcore::cplx vacuum_excited_overlap = 0.0;
};

// ||shared_state_direct - shared_state_fock||_max at the given parameters.
// Expected <= 1e-10 whenever |q_r| = 1; reported (not asserted) otherwise.
double verify_state_construction(const blackhole::DilatonParams& p);

// Discord from an exhaustive grid_size x grid_size measurement lattice
// (theta_i = i*pi/n, phi_j = 2*pi*j/n, i,j = 0..n-1), no refinement.
// Requires grid_size >= 64.
double grid_discord(const qcore::DensityMatrix& rho, qcore::Side side, int grid_size);

// Inner product <vacuum | one-particle> of the two Kruskal kets; vanishes
// whenever |q_r| = 1 and equals q_l * sin^2 r * cos r in general.
qcore::cplx overlap_diagnostic(const blackhole::DilatonParams& p);

// Bundle of all three diagnostics at one parameter point.
OracleReport self_check(const blackhole::DilatonParams& p);

}  // namespace oracle
