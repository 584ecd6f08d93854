#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "dbh/qcore.hpp"
#include "doctest.h"

using namespace qcore;

namespace {

ComplexMatrix sigma_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m(2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

StateVector bell_phi_plus() {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return StateVector({inv_sqrt2, 0.0, 0.0, inv_sqrt2});
}

// Random mixed state on `dim` levels: normalized A A^dag with Gaussian A.
DensityMatrix random_state(std::mt19937& rng, int dim, std::vector<int> dims) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = cplx(gauss(rng), gauss(rng));
    ComplexMatrix rho = a * adjoint(a);
    const double tr = trace(rho).real();
    return DensityMatrix(cplx(1.0 / tr) * rho, std::move(dims));
}

// Random Hermitian matrix with entries of order 1.
ComplexMatrix random_hermitian(std::mt19937& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(dim);
    for (int i = 0; i < dim; ++i) {
        a(i, i) = gauss(rng);
        for (int j = i + 1; j < dim; ++j) {
            a(i, j) = cplx(gauss(rng), gauss(rng));
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

}  // namespace

TEST_CASE("tensor product basics") {
    const ComplexMatrix i4 = tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
    CHECK(max_abs_diff(i4, ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix p = tensor_product(diag2(1.0, 0.0), diag2(0.0, 1.0));
    ComplexMatrix expect(4);
    expect(1, 1) = 1.0;
    CHECK(max_abs_diff(p, expect) == 0.0);

    const ComplexMatrix xx = tensor_product(sigma_x(), sigma_x());
    CHECK(max_abs_diff(xx * xx, ComplexMatrix::identity(4)) < 1e-15);
}

TEST_CASE("partial trace of known states") {
    const DensityMatrix bell = outer(bell_phi_plus(), {2, 2});
    for (int keep : {0, 1}) {
        const DensityMatrix marginal = partial_trace(bell, {keep});
        CHECK(max_abs_diff(marginal.matrix(), cplx(0.5) * ComplexMatrix::identity(2)) < 1e-15);
    }

    std::mt19937 rng(7);
    const DensityMatrix ra = random_state(rng, 2, {2});
    const DensityMatrix rb = random_state(rng, 2, {2});
    const DensityMatrix prod(tensor_product(ra.matrix(), rb.matrix()), {2, 2});
    CHECK(max_abs_diff(partial_trace(prod, {0}).matrix(), ra.matrix()) < 1e-14);
    CHECK(max_abs_diff(partial_trace(prod, {1}).matrix(), rb.matrix()) < 1e-14);
}

TEST_CASE("partial trace composes and rejects bad indices") {
    std::mt19937 rng(11);
    const DensityMatrix rho = random_state(rng, 8, {2, 2, 2});

    const DensityMatrix two_step = partial_trace(partial_trace(rho, {0, 1}), {0});
    const DensityMatrix one_step = partial_trace(rho, {0});
    CHECK(max_abs_diff(two_step.matrix(), one_step.matrix()) < 1e-12);

    CHECK_THROWS_AS((void)partial_trace(rho, {3}), std::out_of_range);
    CHECK_THROWS_AS((void)partial_trace(rho, {}), std::out_of_range);
    CHECK_THROWS_AS((void)partial_trace(rho, {1, 1}), std::out_of_range);
}

TEST_CASE("eigensystem of textbook matrices") {
    const Eigensystem d = hermitian_eigensystem(diag2(0.75, 0.25));
    CHECK(d.values[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(d.values[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(d.vectors(0, 0) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(d.vectors(1, 1) - cplx(1.0)) < 1e-12);

    const Eigensystem x = hermitian_eigensystem(sigma_x());
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    CHECK(x.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
    // Canonical phase: first component real positive.
    CHECK(std::abs(x.vectors(0, 0) - cplx(inv_sqrt2)) < 1e-12);
    CHECK(std::abs(x.vectors(1, 0) - cplx(inv_sqrt2)) < 1e-12);
    CHECK(std::abs(x.vectors(0, 1) - cplx(inv_sqrt2)) < 1e-12);
    CHECK(std::abs(x.vectors(1, 1) - cplx(-inv_sqrt2)) < 1e-12);
}

TEST_CASE("eigensystem of the shared state at the deep-thermal point") {
    // rho = diag(1/4, 1/4, 0, 1/2) plus (|00><11| + h.c.)/(2 sqrt 2).
    // By the characteristic polynomial of its {|00>,|11>} block (trace 3/4,
    // determinant 0), the spectrum is {3/4, 1/4, 0, 0}.
    ComplexMatrix m(4);
    m(0, 0) = 0.25;
    m(1, 1) = 0.25;
    m(3, 3) = 0.5;
    m(0, 3) = 1.0 / (2.0 * std::numbers::sqrt2);
    m(3, 0) = m(0, 3);
    const Eigensystem es = hermitian_eigensystem(m);
    CHECK(es.values[0] == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(es.values[1] == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(std::abs(es.values[2]) < 1e-10);
    CHECK(std::abs(es.values[3]) < 1e-10);
}

TEST_CASE("eigensystem on random Hermitian input") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 7);
        const ComplexMatrix a = random_hermitian(rng, dim);
        const Eigensystem es = hermitian_eigensystem(a);

        for (int i = 1; i < dim; ++i) CHECK(es.values[i - 1] >= es.values[i]);

        // Residual ||A v - lambda v|| and orthonormality.
        for (int c = 0; c < dim; ++c) {
            for (int r = 0; r < dim; ++r) {
                cplx av = 0.0;
                for (int k = 0; k < dim; ++k) av += a(r, k) * es.vectors(k, c);
                CHECK(std::abs(av - es.values[c] * es.vectors(r, c)) < 1e-10);
            }
        }
        CHECK(max_abs_diff(adjoint(es.vectors) * es.vectors, ComplexMatrix::identity(dim)) <
              1e-10);
    }

    ComplexMatrix bad(2);
    bad(0, 1) = 1.0;  // not Hermitian
    CHECK_THROWS_AS((void)hermitian_eigensystem(bad), std::invalid_argument);
}

TEST_CASE("eigensystem is deterministic") {
    std::mt19937 rng(31);
    const ComplexMatrix a = random_hermitian(rng, 6);
    const Eigensystem first = hermitian_eigensystem(a);
    const Eigensystem second = hermitian_eigensystem(a);
    CHECK(first.values == second.values);
    CHECK(max_abs_diff(first.vectors, second.vectors) == 0.0);
}

TEST_CASE("von Neumann entropy") {
    ComplexMatrix pure(2);
    pure(0, 0) = 1.0;
    CHECK(von_neumann_entropy(DensityMatrix(pure, {2})) == 0.0);

    CHECK(von_neumann_entropy(DensityMatrix(cplx(0.5) * ComplexMatrix::identity(2), {2})) ==
          doctest::Approx(1.0).epsilon(1e-12));

    CHECK(von_neumann_entropy(DensityMatrix(diag2(0.25, 0.75), {2})) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("entropy is basis independent") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_state(rng, 4, {2, 2});
        const ComplexMatrix u = hermitian_eigensystem(random_hermitian(rng, 4)).vectors;
        const DensityMatrix rotated(u * rho.matrix() * adjoint(u), {2, 2});
        CHECK(von_neumann_entropy(rotated) ==
              doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-10));
    }
}

TEST_CASE("Bloch projectors") {
    {
        auto [plus, minus] = bloch_projectors({0.0, 0.0});
        CHECK(max_abs_diff(plus, diag2(1.0, 0.0)) < 1e-15);
        CHECK(max_abs_diff(minus, diag2(0.0, 1.0)) < 1e-15);
    }
    {
        auto [plus, minus] = bloch_projectors({std::numbers::pi / 2.0, 0.0});
        ComplexMatrix px(2);
        px(0, 0) = px(0, 1) = px(1, 0) = px(1, 1) = 0.5;
        CHECK(max_abs_diff(plus, px) < 1e-15);
        ComplexMatrix mx(2);
        mx(0, 0) = mx(1, 1) = 0.5;
        mx(0, 1) = mx(1, 0) = -0.5;
        CHECK(max_abs_diff(minus, mx) < 1e-15);
    }

    std::mt19937 rng(53);
    std::uniform_real_distribution<double> ang(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const BlochMeasurement m{ang(rng) * std::numbers::pi, ang(rng) * 2.0 * std::numbers::pi};
        auto [plus, minus] = bloch_projectors(m);
        CHECK(max_abs_diff(plus + minus, ComplexMatrix::identity(2)) < 1e-12);
        CHECK(max_abs_diff(plus * plus, plus) < 1e-12);
        CHECK(max_abs_diff(minus * minus, minus) < 1e-12);
        CHECK(std::abs(trace(plus * minus)) < 1e-12);
        CHECK(trace(plus).real() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("measurement of the maximally entangled state is unbiased") {
    const DensityMatrix bell = outer(bell_phi_plus(), {2, 2});
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> ang(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const BlochMeasurement m{ang(rng) * std::numbers::pi, ang(rng) * 2.0 * std::numbers::pi};
        for (Outcome o : {Outcome::plus, Outcome::minus}) {
            const MeasurementResult r = measure_subsystem(bell, Side::A, m, o);
            CHECK(r.p == doctest::Approx(0.5).epsilon(1e-12));
            REQUIRE(r.post.has_value());
            // The post-state of the partner qubit is pure.
            CHECK(von_neumann_entropy(*r.post) < 1e-9);
        }
    }
}

TEST_CASE("measurement of a product state leaves the partner untouched") {
    std::mt19937 rng(61);
    const DensityMatrix ra = random_state(rng, 2, {2});
    const DensityMatrix rb = random_state(rng, 2, {2});
    const DensityMatrix prod(tensor_product(ra.matrix(), rb.matrix()), {2, 2});
    const BlochMeasurement m{1.1, 2.2};
    for (Outcome o : {Outcome::plus, Outcome::minus}) {
        const MeasurementResult r = measure_subsystem(prod, Side::A, m, o);
        REQUIRE(r.post.has_value());
        CHECK(max_abs_diff(r.post->matrix(), rb.matrix()) < 1e-12);
    }
}

TEST_CASE("measurement matches the explicit projector sandwich") {
    // Independent path: build (Pi (x) I), multiply out, normalize, trace out.
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> ang(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_state(rng, 4, {2, 2});
        const BlochMeasurement m{ang(rng) * std::numbers::pi, ang(rng) * 2.0 * std::numbers::pi};
        const Side side = (trial % 2 == 0) ? Side::A : Side::B;

        double p_total = 0.0;
        for (Outcome o : {Outcome::plus, Outcome::minus}) {
            const MeasurementResult r = measure_subsystem(rho, side, m, o);
            p_total += r.p;
            if (!r.post) continue;

            auto [plus, minus] = bloch_projectors(m);
            const ComplexMatrix& proj = (o == Outcome::plus) ? plus : minus;
            const ComplexMatrix full =
                (side == Side::A) ? tensor_product(proj, ComplexMatrix::identity(2))
                                  : tensor_product(ComplexMatrix::identity(2), proj);
            const ComplexMatrix sandwiched = full * rho.matrix() * full;
            const double p_ref = trace(sandwiched).real();
            CHECK(r.p == doctest::Approx(p_ref).epsilon(1e-12));

            const DensityMatrix normalized(cplx(1.0 / p_ref) * sandwiched, {2, 2});
            const DensityMatrix post_ref = partial_trace(normalized, {side == Side::A ? 1 : 0});
            CHECK(max_abs_diff(r.post->matrix(), post_ref.matrix()) < 1e-13);
        }
        CHECK(p_total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("measurement along the state's own axis has a degenerate branch") {
    const DensityMatrix up(tensor_product(diag2(1.0, 0.0), cplx(0.5) * ComplexMatrix::identity(2)),
                           {2, 2});
    const MeasurementResult r = measure_subsystem(up, Side::A, {0.0, 0.0}, Outcome::minus);
    CHECK(r.p < 1e-14);
    CHECK(!r.post.has_value());
}

TEST_CASE("dephasing in product bases") {
    const ComplexMatrix comp = ComplexMatrix::identity(2);

    // A state diagonal in the supplied bases is a fixed point.
    ComplexMatrix d(4);
    d(0, 0) = 0.4;
    d(1, 1) = 0.3;
    d(2, 2) = 0.2;
    d(3, 3) = 0.1;
    const DensityMatrix diag_state(d, {2, 2});
    CHECK(max_abs_diff(dephase_in_bases(diag_state, comp, comp).matrix(), d) < 1e-14);

    // The maximally entangled state loses its off-diagonal coherence.
    const DensityMatrix bell = outer(bell_phi_plus(), {2, 2});
    ComplexMatrix expect(4);
    expect(0, 0) = 0.5;
    expect(3, 3) = 0.5;
    CHECK(max_abs_diff(dephase_in_bases(bell, comp, comp).matrix(), expect) < 1e-14);

    // Dephasing in the marginal eigenbases preserves both marginals.
    std::mt19937 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_state(rng, 4, {2, 2});
        const ComplexMatrix ba =
            hermitian_eigensystem(partial_trace(rho, {0}).matrix()).vectors;
        const ComplexMatrix bb =
            hermitian_eigensystem(partial_trace(rho, {1}).matrix()).vectors;
        const DensityMatrix eta = dephase_in_bases(rho, ba, bb);
        CHECK(max_abs_diff(partial_trace(eta, {0}).matrix(),
                           partial_trace(rho, {0}).matrix()) < 1e-12);
        CHECK(max_abs_diff(partial_trace(eta, {1}).matrix(),
                           partial_trace(rho, {1}).matrix()) < 1e-12);
    }

    ComplexMatrix skew(2);
    skew(0, 0) = 1.0;
    skew(0, 1) = 0.5;
    skew(1, 1) = 1.0;
    CHECK_THROWS_AS((void)dephase_in_bases(bell, skew, comp), std::invalid_argument);
}

TEST_CASE("density matrix invariants are enforced") {
    ComplexMatrix not_hermitian(2);
    not_hermitian(0, 0) = 0.5;
    not_hermitian(1, 1) = 0.5;
    not_hermitian(0, 1) = cplx(0.0, 1e-3);
    not_hermitian(1, 0) = cplx(0.0, 1e-3);  // equal, not conjugate
    CHECK_THROWS_AS(DensityMatrix(not_hermitian, {2}), std::invalid_argument);

    CHECK_THROWS_AS(DensityMatrix(diag2(0.6, 0.6), {2}), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix(diag2(1.5, -0.5), {2}), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix(diag2(0.5, 0.5), {3}), std::invalid_argument);

    CHECK_THROWS_AS(StateVector({0.5, 0.5}), std::invalid_argument);
}
