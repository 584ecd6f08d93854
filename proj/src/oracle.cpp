#include "dbh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dbh/correlations.hpp"

namespace oracle {

using qcore::cplx;
using qcore::DensityMatrix;
using qcore::Side;

double verify_state_construction(const blackhole::DilatonParams& p) {
    const DensityMatrix direct = blackhole::shared_state_direct(p);
    const DensityMatrix fock = blackhole::shared_state_fock(p);
    return qcore::max_abs_diff(direct.matrix(), fock.matrix());
}

double grid_discord(const DensityMatrix& rho, Side side, int grid_size) {
    if (grid_size < 64) throw std::invalid_argument("grid_discord: grid_size must be >= 64");
    const double pi = std::numbers::pi;

    double best = 1e300;
    for (int i = 0; i < grid_size; ++i) {
        const double theta = pi * i / grid_size;
        for (int j = 0; j < grid_size; ++j) {
            const double phi = 2.0 * pi * j / grid_size;
            best = std::min(best, correlations::conditional_entropy(
                                      rho, side, qcore::BlochMeasurement{theta, phi}));
        }
    }

    const DensityMatrix measured = qcore::partial_trace(rho, {side == Side::A ? 0 : 1});
    return qcore::von_neumann_entropy(measured) - qcore::von_neumann_entropy(rho) + best;
}

cplx overlap_diagnostic(const blackhole::DilatonParams& p) {
    const blackhole::SqueezeAngle r = blackhole::squeeze_angle(p);
    const qcore::StateVector vac = blackhole::kruskal_vacuum(r);
    const qcore::StateVector one = blackhole::kruskal_one_particle(r, p.q_r);
    cplx overlap = 0.0;
    for (int i = 0; i < 16; ++i) overlap += std::conj(vac[i]) * one[i];
    return overlap;
}

OracleReport self_check(const blackhole::DilatonParams& p) {
    OracleReport report;
    report.max_entrywise_deviation = verify_state_construction(p);
    report.vacuum_excited_overlap = overlap_diagnostic(p);

    const DensityMatrix rho = blackhole::shared_state_direct(p);
    for (Side side : {Side::A, Side::B}) {
        const double gap =
            grid_discord(rho, side, 256) - correlations::quantum_discord(rho, side);
        report.max_objective_gap = std::max(report.max_objective_gap, gap);
    }
    return report;
}

}  // namespace oracle
