// Physics layer for a massless fermion mode outside a Garfinkle-Horowitz-
// Strominger dilaton black hole: squeeze angle of the Bogoliubov mixing,
// Hawking temperature and spectrum, explicit Kruskal-mode states, and the
// two-qubit state shared by an inertial observer (A) and an observer hovering
// near the horizon (B), built two independent ways.
//
// Mode-factor convention, frozen for the whole code base:
//   single-mode Kruskal space (dim 16), ket |m n m' n'>:
//     m  - outside  fermion      k   (occupation 0/1)
//     n  - inside   antifermion -k
//     m' - outside  antifermion -k
//     n' - inside   fermion      k
//   flat index = 8*m + 4*n + 2*m' + n'.
//   With the inertial qubit A prepended (dim 32): index = 16*a + 8*m + 4*n + 2*m' + n'.

#pragma once

#include "dbh/qcore.hpp"

namespace blackhole {

struct DilatonParams {
    double mass = 1.0;      // black-hole mass M (geometric units)
    double alpha = 0.0;     // dilaton parameter, 0 <= alpha < M
    double omega = 1.0;     // mode frequency
    qcore::cplx q_r = 1.0;  // weight of the outside-fermion branch, |q_r| <= 1

    // Weight of the inside-antifermion branch; real, non-negative by convention.
    double q_l() const;

    void validate() const;  // throws std::domain_error on violation
};

// cos r = [exp(-8 pi omega (M - alpha)) + 1]^(-1/2),
// sin r = [exp(+8 pi omega (M - alpha)) + 1]^(-1/2).
struct SqueezeAngle {
    double cos_r = 1.0;
    double sin_r = 0.0;
};

SqueezeAngle squeeze_angle(const DilatonParams& p);

// T = 1 / (8 pi (M - alpha)).
double hawking_temperature(const DilatonParams& p);

// Fermi-Dirac occupation N = 1 / (exp(omega/T) + 1); equals sin_r^2.
double occupation_number(const DilatonParams& p);

// Kruskal vacuum of the mode, expanded over the four-factor basis above:
//   cos^2 r |0000> - sin r cos r |0011> + sin r cos r |1100> - sin^2 r |1111>.
qcore::StateVector kruskal_vacuum(const SqueezeAngle& r);

// First excited (one-fermion) Kruskal state:
//   q_r cos r |1000> - q_r sin r |1011> + q_l sin r |1100> + q_l cos r |0001>.
qcore::StateVector kruskal_one_particle(const SqueezeAngle& r, qcore::cplx q_r);

// The shared state rho^{A,B} after tracing the unobservable modes, written
// directly from its closed form (C = cos r, S = sin r, chi0 = |q_r|^2 + |q_l|^2 S^2):
//   1/2 [ C^2 |00><00| + conj(q_r) C |00><11| + q_r C |11><00|
//         + |q_l|^2 C^2 |10><10| + S^2 |01><01| + chi0 |11><11| ].
qcore::DensityMatrix shared_state_direct(const DilatonParams& p);

// Intermediate of the Fock-space route: the 8x8 state on [A, out-fermion,
// out-antifermion] after tracing both inside modes of the full 32-dim
// pure state (|0>_A vacuum + |1>_A one-particle)/sqrt(2).
qcore::DensityMatrix shared_state_out_full(const DilatonParams& p);

// Independent construction of the shared state: build the 32-dim pure state,
// trace the two inside modes, then trace the outside antifermion. Agrees with
// shared_state_direct entrywise to 1e-10 whenever |q_r| = 1.
qcore::DensityMatrix shared_state_fock(const DilatonParams& p);

}  // namespace blackhole
