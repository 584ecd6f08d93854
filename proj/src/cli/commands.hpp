// Implementation of the command-line operations, kept as a plain library so
// the test suite can exercise CSV/SVG emission and crossing search directly.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dbh/blackhole.hpp"
#include "dbh/correlations.hpp"

namespace cliops {

struct SweepConfig {
    double mass = 1.0;
    double omega = 1.0;
    double q_r = 1.0;
    double alpha_min = 0.0;
    double alpha_max = 0.999;
    int steps = 200;

    void validate() const;  // throws std::domain_error unless 0 <= min < max < mass, steps >= 2
    blackhole::DilatonParams params_at(double alpha) const;
};

struct SweepRow {
    double alpha = 0.0;
    double temperature = 0.0;
    double sin_r = 0.0;
    correlations::CorrelationReport report;
};

// One row per alpha, uniformly spaced on [alpha_min, alpha_max] (both ends
// included), ascending. Rows are computed concurrently; the result order and
// content are independent of the thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& c);

// Header plus one line per row; 12 significant digits, LF line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Thrown by find_crossing when the two classical correlations never coincide
// on the requested interval.
struct NoCrossingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Locate the alpha where C(measure on A) - C(measure on B) changes sign:
// 64-point bracket scan followed by bisection to an interval <= 1e-5.
double find_crossing(const SweepConfig& c);

// Human-readable dump of the shared state at one parameter point: real and
// imaginary parts (12 significant digits), descending eigenvalues, marginal
// entropies, and the vacuum/one-particle overlap diagnostic.
std::string state_dump(const blackhole::DilatonParams& p);

// SVG line charts (pure text, no external renderer).
std::string classical_svg(const SweepConfig& c, const std::vector<SweepRow>& rows);
std::string quantum_svg(const SweepConfig& c, const std::vector<SweepRow>& rows);

// Write `content` to `path`; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace cliops
