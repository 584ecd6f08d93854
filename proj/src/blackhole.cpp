#include "dbh/blackhole.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blackhole {

using qcore::cplx;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;
using qcore::StateVector;

double DilatonParams::q_l() const { return std::sqrt(std::max(0.0, 1.0 - std::norm(q_r))); }

void DilatonParams::validate() const {
    if (!(mass > 0.0)) throw std::domain_error("DilatonParams: mass must be positive");
    if (!(alpha >= 0.0)) throw std::domain_error("DilatonParams: alpha must be non-negative");
    if (!(alpha < mass)) throw std::domain_error("DilatonParams: alpha must be < mass");
    if (!(omega > 0.0)) throw std::domain_error("DilatonParams: omega must be positive");
    if (std::abs(q_r) > 1.0 + 1e-12) throw std::domain_error("DilatonParams: |q_r| must be <= 1");
}

SqueezeAngle squeeze_angle(const DilatonParams& p) {
    p.validate();
    const double x = 8.0 * std::numbers::pi * p.omega * (p.mass - p.alpha);
    SqueezeAngle r;
    r.cos_r = 1.0 / std::sqrt(std::exp(-x) + 1.0);
    r.sin_r = 1.0 / std::sqrt(std::exp(x) + 1.0);
    return r;
}

double hawking_temperature(const DilatonParams& p) {
    p.validate();
    return 1.0 / (8.0 * std::numbers::pi * (p.mass - p.alpha));
}

double occupation_number(const DilatonParams& p) {
    const double t = hawking_temperature(p);
    return 1.0 / (std::exp(p.omega / t) + 1.0);
}

namespace {

// |m n m' n'> -> flat index.
constexpr int ket(int m, int n, int mp, int np) { return 8 * m + 4 * n + 2 * mp + np; }

}  // namespace

StateVector kruskal_vacuum(const SqueezeAngle& r) {
    const double c = r.cos_r, s = r.sin_r;
    std::vector<cplx> a(16, 0.0);
    a[ket(0, 0, 0, 0)] = c * c;
    a[ket(0, 0, 1, 1)] = -s * c;
    a[ket(1, 1, 0, 0)] = s * c;
    a[ket(1, 1, 1, 1)] = -s * s;
    return StateVector(std::move(a));
}

StateVector kruskal_one_particle(const SqueezeAngle& r, cplx q_r) {
    if (std::abs(q_r) > 1.0 + 1e-12)
        throw std::domain_error("kruskal_one_particle: |q_r| must be <= 1");
    const double q_l = std::sqrt(std::max(0.0, 1.0 - std::norm(q_r)));
    const double c = r.cos_r, s = r.sin_r;
    std::vector<cplx> a(16, 0.0);
    a[ket(1, 0, 0, 0)] = q_r * c;
    a[ket(1, 0, 1, 1)] = -q_r * s;
    a[ket(1, 1, 0, 0)] = q_l * s;
    a[ket(0, 0, 0, 1)] = q_l * c;
    return StateVector(std::move(a));
}

DensityMatrix shared_state_direct(const DilatonParams& p) {
    const SqueezeAngle r = squeeze_angle(p);
    const double c2 = r.cos_r * r.cos_r, s2 = r.sin_r * r.sin_r;
    const double ql2 = 1.0 - std::norm(p.q_r);
    const double chi0 = std::norm(p.q_r) + ql2 * s2;

    ComplexMatrix m(4);
    m(0, 0) = 0.5 * c2;                    // |00><00|
    m(0, 3) = 0.5 * std::conj(p.q_r) * r.cos_r;  // |00><11|
    m(3, 0) = 0.5 * p.q_r * r.cos_r;             // |11><00|
    m(1, 1) = 0.5 * s2;                    // |01><01|
    m(2, 2) = 0.5 * ql2 * c2;              // |10><10|
    m(3, 3) = 0.5 * chi0;                  // |11><11|
    return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix shared_state_out_full(const DilatonParams& p) {
    p.validate();
    const SqueezeAngle r = squeeze_angle(p);
    const StateVector vac = kruskal_vacuum(r);
    const StateVector one = kruskal_one_particle(r, p.q_r);

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    std::vector<cplx> a(32, 0.0);
    for (int i = 0; i < 16; ++i) {
        a[i] = inv_sqrt2 * vac[i];
        a[16 + i] = inv_sqrt2 * one[i];
    }
    const StateVector shared(std::move(a));

    // Factors: [A, out fermion, in antifermion, out antifermion, in fermion].
    const DensityMatrix full = qcore::outer(shared, {2, 2, 2, 2, 2});
    return qcore::partial_trace(full, {0, 1, 3});  // drop both inside modes
}

DensityMatrix shared_state_fock(const DilatonParams& p) {
    return qcore::partial_trace(shared_state_out_full(p), {0, 1});  // drop the out antifermion
}

}  // namespace blackhole
