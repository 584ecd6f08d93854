#include "dbh/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace correlations {

using qcore::BlochMeasurement;
using qcore::DensityMatrix;
using qcore::MeasurementResult;
using qcore::Outcome;
using qcore::Side;

double mutual_information(const DensityMatrix& rho) {
    const DensityMatrix a = qcore::partial_trace(rho, {0});
    const DensityMatrix b = qcore::partial_trace(rho, {1});
    return qcore::von_neumann_entropy(a) + qcore::von_neumann_entropy(b) -
           qcore::von_neumann_entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho, Side side, const BlochMeasurement& m) {
    double total = 0.0;
    for (Outcome outcome : {Outcome::plus, Outcome::minus}) {
        const MeasurementResult r = qcore::measure_subsystem(rho, side, m, outcome);
        if (r.post) total += r.p * qcore::von_neumann_entropy(*r.post);
    }
    return total;
}

namespace {

// Golden-section minimization on [lo, hi]; shrinks the bracket to `tol` and
// returns the best point probed (never worse than the best endpoint).
std::pair<double, double> golden_section(const std::function<double(double)>& f, double lo,
                                         double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    double best_x = (f1 < f2) ? x1 : x2;
    double best_f = std::min(f1, f2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
        if (f1 < best_f) {
            best_f = f1;
            best_x = x1;
        }
        if (f2 < best_f) {
            best_f = f2;
            best_x = x2;
        }
    }
    return {best_x, best_f};
}

}  // namespace

MinimizationResult minimize_conditional_entropy(const DensityMatrix& rho, Side side) {
    constexpr int kGrid = 64;
    const double pi = std::numbers::pi;

    auto objective = [&](double theta, double phi) {
        return conditional_entropy(rho, side, BlochMeasurement{theta, phi});
    };

    // Coarse scan: theta on [0, pi] inclusive, phi on [0, 2 pi) half-open.
    double best_theta = 0.0, best_phi = 0.0;
    double best = objective(0.0, 0.0);
    for (int i = 0; i < kGrid; ++i) {
        const double theta = pi * i / (kGrid - 1);
        for (int j = 0; j < kGrid; ++j) {
            const double phi = 2.0 * pi * j / kGrid;
            const double value = objective(theta, phi);
            if (value < best) {
                best = value;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // Coordinate refinement: golden section on each angle in turn, bracketing
    // one coarse cell around the incumbent.
    const double dtheta = pi / (kGrid - 1);
    const double dphi = 2.0 * pi / kGrid;
    constexpr double kAngleTol = 1e-9;
    for (int round = 0; round < 2; ++round) {
        auto [theta, f_theta] = golden_section(
            [&](double t) { return objective(t, best_phi); },
            std::max(0.0, best_theta - dtheta), std::min(pi, best_theta + dtheta), kAngleTol);
        if (f_theta < best) {
            best = f_theta;
            best_theta = theta;
        }
        auto [phi, f_phi] = golden_section(
            [&](double p) { return objective(best_theta, p); },
            best_phi - dphi, best_phi + dphi, kAngleTol);
        if (f_phi < best) {
            best = f_phi;
            best_phi = phi;
        }
    }
    if (best_phi < 0.0) best_phi += 2.0 * pi;

    return MinimizationResult{best, BlochMeasurement{best_theta, best_phi}};
}

double classical_correlation(const DensityMatrix& rho, Side side) {
    const DensityMatrix unmeasured =
        qcore::partial_trace(rho, {side == Side::A ? 1 : 0});
    return qcore::von_neumann_entropy(unmeasured) -
           minimize_conditional_entropy(rho, side).min_value;
}

double quantum_discord(const DensityMatrix& rho, Side side) {
    const DensityMatrix measured = qcore::partial_trace(rho, {side == Side::A ? 0 : 1});
    return qcore::von_neumann_entropy(measured) - qcore::von_neumann_entropy(rho) +
           minimize_conditional_entropy(rho, side).min_value;
}

MidResult mid(const DensityMatrix& rho) {
    const DensityMatrix a = qcore::partial_trace(rho, {0});
    const DensityMatrix b = qcore::partial_trace(rho, {1});
    const qcore::Eigensystem ea = qcore::hermitian_eigensystem(a.matrix());
    const qcore::Eigensystem eb = qcore::hermitian_eigensystem(b.matrix());
    const DensityMatrix eta = qcore::dephase_in_bases(rho, ea.vectors, eb.vectors);

    MidResult r;
    r.mid_classical = mutual_information(eta);
    r.mid_quantum = mutual_information(rho) - r.mid_classical;
    return r;
}

CorrelationReport full_report(const blackhole::DilatonParams& p) {
    const DensityMatrix rho = blackhole::shared_state_direct(p);
    const DensityMatrix ma = qcore::partial_trace(rho, {0});
    const DensityMatrix mb = qcore::partial_trace(rho, {1});
    const double sa = qcore::von_neumann_entropy(ma);
    const double sb = qcore::von_neumann_entropy(mb);
    const double sab = qcore::von_neumann_entropy(rho);

    const MinimizationResult min_a = minimize_conditional_entropy(rho, Side::A);
    const MinimizationResult min_b = minimize_conditional_entropy(rho, Side::B);
    const MidResult m = mid(rho);

    CorrelationReport report;
    report.mutual_info = sa + sb - sab;
    report.classical_a = sb - min_a.min_value;
    report.classical_b = sa - min_b.min_value;
    report.discord_a = report.mutual_info - report.classical_a;
    report.discord_b = report.mutual_info - report.classical_b;
    report.mid_classical = m.mid_classical;
    report.mid_quantum = m.mid_quantum;
    report.argmin_a = min_a.argmin;
    report.argmin_b = min_b.argmin;
    return report;
}

}  // namespace correlations
