#include "dbh/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcore {

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    if (n != b.dim()) throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    if (n != b.dim()) throw std::invalid_argument("matrix sum: dimension mismatch");
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    if (n != b.dim()) throw std::invalid_argument("matrix difference: dimension mismatch");
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = s * a(i, j);
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = std::conj(a(j, i));
    return c;
}

cplx trace(const ComplexMatrix& a) {
    cplx t = 0.0;
    for (int i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    ComplexMatrix c(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return c;
}

StateVector::StateVector(std::vector<cplx> amplitudes) : a_(std::move(amplitudes)) {
    if (a_.empty()) throw std::invalid_argument("StateVector: empty amplitude list");
    double norm2 = 0.0;
    for (const cplx& c : a_) norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("StateVector: norm deviates from 1 beyond 1e-12");
}

namespace {

// Smallest eigenvalue of a Hermitian matrix; closed form for dim 2,
// Jacobi otherwise.
double min_eigenvalue(const ComplexMatrix& m) {
    if (m.dim() == 1) return m(0, 0).real();
    if (m.dim() == 2) {
        const double a = m(0, 0).real(), d = m(1, 1).real();
        const double h = std::hypot((a - d) / 2.0, std::abs(m(0, 1)));
        return (a + d) / 2.0 - h;
    }
    const Eigensystem es = hermitian_eigensystem(m);
    return es.values.back();
}

void check_density_invariants(const ComplexMatrix& m, const std::vector<int>& dims) {
    if (m.dim() < 1) throw std::invalid_argument("DensityMatrix: empty matrix");
    int prod = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("DensityMatrix: subsystem dimension < 1");
        prod *= d;
    }
    if (dims.empty() || prod != m.dim())
        throw std::invalid_argument("DensityMatrix: subsystem dimensions do not factor the matrix");
    double herm = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i; j < m.dim(); ++j)
            herm = std::max(herm, std::abs(m(i, j) - std::conj(m(j, i))));
    if (herm > 1e-12) throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(trace(m) - cplx{1.0}) > 1e-12)
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 beyond 1e-12");
    if (min_eigenvalue(m) < -1e-10)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond -1e-10");
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, std::vector<int> dims)
    : m_(std::move(m)), dims_(std::move(dims)) {
    check_density_invariants(m_, dims_);
}

DensityMatrix outer(const StateVector& psi, std::vector<int> dims) {
    const int n = psi.dim();
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const std::vector<int>& dims = rho.dims();
    const int f = static_cast<int>(dims.size());

    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
        kept.front() < 0 || kept.back() >= f)
        throw std::out_of_range("partial_trace: invalid subsystem index set");

    std::vector<int> traced;
    for (int s = 0; s < f; ++s)
        if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);

    // Row-major strides over the full factor list.
    std::vector<int> stride(f, 1);
    for (int s = f - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

    int dim_keep = 1, dim_tr = 1;
    std::vector<int> kdims;
    for (int s : kept) {
        kdims.push_back(dims[s]);
        dim_keep *= dims[s];
    }
    for (int s : traced) dim_tr *= dims[s];

    // Flat index of the full space from a kept-subspace index and a traced-subspace index.
    auto full_index = [&](int ik, int it) {
        int idx = 0;
        for (int s = static_cast<int>(kept.size()) - 1; s >= 0; --s) {
            idx += (ik % dims[kept[s]]) * stride[kept[s]];
            ik /= dims[kept[s]];
        }
        for (int s = static_cast<int>(traced.size()) - 1; s >= 0; --s) {
            idx += (it % dims[traced[s]]) * stride[traced[s]];
            it /= dims[traced[s]];
        }
        return idx;
    };

    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out(dim_keep);
    for (int i = 0; i < dim_keep; ++i)
        for (int j = 0; j < dim_keep; ++j) {
            cplx acc = 0.0;
            for (int t = 0; t < dim_tr; ++t) acc += m(full_index(i, t), full_index(j, t));
            out(i, j) = acc;
        }
    return DensityMatrix(std::move(out), std::move(kdims));
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
    const int n = m.dim();
    double herm = 0.0, scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            herm = std::max(herm, std::abs(m(i, j) - std::conj(m(j, i))));
            scale = std::max(scale, std::abs(m(i, j)));
        }
    if (herm > 1e-10) throw std::invalid_argument("hermitian_eigensystem: input not Hermitian");
    scale = std::max(scale, 1.0);

    // Work on the exactly-Hermitian average to keep diagonals real.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double stop = 1e-14 * n * scale;  // on the off-diagonal Frobenius mass
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag <= 1e-300) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const cplx u = a(p, q) / mag;  // phase of the pivot
                const double app = a(p, p).real(), aqq = a(q, q).real();
                // Real Jacobi angle for the phase-stripped 2x2 block.
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Plane rotation G: G(p,p)=c, G(p,q)=s, G(q,p)=-s*conj(u), G(q,q)=c*conj(u).
                // Columns: A <- A G.
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(u) * akq;
                    a(k, q) = s * akp + c * std::conj(u) * akq;
                }
                // Rows: A <- G^dag A.
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * u * aqk;
                    a(q, k) = s * apk + c * u * aqk;
                }
                a(p, q) = a(q, p) = 0.0;  // zeroed by construction
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(u) * vkq;
                    v(k, q) = s * vkp + c * std::conj(u) * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    Eigensystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n);
    for (int c = 0; c < n; ++c) {
        const int src = order[c];
        es.values[c] = a(src, src).real();
        // Canonical phase: largest-magnitude component real positive.
        int kmax = 0;
        double best = -1.0;
        for (int k = 0; k < n; ++k) {
            const double mag = std::abs(v(k, src));
            if (mag > best) {
                best = mag;
                kmax = k;
            }
        }
        cplx phase = v(kmax, src);
        phase = (std::abs(phase) > 0.0) ? phase / std::abs(phase) : cplx{1.0};
        for (int k = 0; k < n; ++k) es.vectors(k, c) = v(k, src) * std::conj(phase);
    }
    return es;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    std::vector<double> lambda;
    if (rho.dim() == 2) {
        const ComplexMatrix& m = rho.matrix();
        const double a = m(0, 0).real(), d = m(1, 1).real();
        const double h = std::hypot((a - d) / 2.0, std::abs(m(0, 1)));
        lambda = {(a + d) / 2.0 + h, (a + d) / 2.0 - h};
    } else {
        lambda = hermitian_eigensystem(rho.matrix()).values;
    }
    double s = 0.0;
    for (double l : lambda)
        if (l >= 1e-14) s -= l * std::log2(l);
    return std::max(s, 0.0);
}

std::pair<ComplexMatrix, ComplexMatrix> bloch_projectors(const BlochMeasurement& m) {
    const double nx = std::sin(m.theta) * std::cos(m.phi);
    const double ny = std::sin(m.theta) * std::sin(m.phi);
    const double nz = std::cos(m.theta);
    ComplexMatrix plus(2), minus(2);
    plus(0, 0) = 0.5 * (1.0 + nz);
    plus(1, 1) = 0.5 * (1.0 - nz);
    plus(0, 1) = 0.5 * cplx(nx, -ny);
    plus(1, 0) = 0.5 * cplx(nx, ny);
    minus(0, 0) = 0.5 * (1.0 - nz);
    minus(1, 1) = 0.5 * (1.0 + nz);
    minus(0, 1) = -plus(0, 1);
    minus(1, 0) = -plus(1, 0);
    return {plus, minus};
}

MeasurementResult measure_subsystem(const DensityMatrix& rho, Side side,
                                    const BlochMeasurement& m, Outcome outcome) {
    if (rho.dims() != std::vector<int>{2, 2})
        throw std::invalid_argument("measure_subsystem: expected a two-qubit state");

    auto [plus, minus] = bloch_projectors(m);
    const ComplexMatrix& proj = (outcome == Outcome::plus) ? plus : minus;
    const ComplexMatrix& r = rho.matrix();

    // Tr_measured[(Pi (x) I) rho (Pi (x) I)] without forming the 4x4 products:
    // since Pi^2 = Pi and the trace is cyclic over the measured factor,
    //   side A:  post(b,b') = sum_{c,c'} Pi(c',c) rho(c b, c' b')
    //   side B:  post(a,a') = sum_{d,d'} Pi(d',d) rho(a d, a' d').
    ComplexMatrix post(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx acc = 0.0;
            for (int c = 0; c < 2; ++c)
                for (int cp = 0; cp < 2; ++cp)
                    acc += proj(cp, c) * ((side == Side::A) ? r(2 * c + i, 2 * cp + j)
                                                            : r(2 * i + c, 2 * j + cp));
            post(i, j) = acc;
        }

    MeasurementResult result;
    result.p = trace(post).real();
    if (result.p < 1e-14) return result;  // degenerate branch

    result.post = DensityMatrix(cplx(1.0 / result.p) * post, {2});
    return result;
}

DensityMatrix dephase_in_bases(const DensityMatrix& rho, const ComplexMatrix& basis_a,
                               const ComplexMatrix& basis_b) {
    if (rho.dims() != std::vector<int>{2, 2})
        throw std::invalid_argument("dephase_in_bases: expected a two-qubit state");
    for (const ComplexMatrix* basis : {&basis_a, &basis_b}) {
        if (basis->dim() != 2 ||
            max_abs_diff(adjoint(*basis) * (*basis), ComplexMatrix::identity(2)) > 1e-10)
            throw std::invalid_argument("dephase_in_bases: basis is not unitary within 1e-10");
    }

    auto column_projector = [](const ComplexMatrix& basis, int col) {
        ComplexMatrix pi(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) pi(i, j) = basis(i, col) * std::conj(basis(j, col));
        return pi;
    };

    ComplexMatrix eta(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const ComplexMatrix pij =
                tensor_product(column_projector(basis_a, i), column_projector(basis_b, j));
            eta = eta + pij * rho.matrix() * pij;
        }
    return DensityMatrix(std::move(eta), {2, 2});
}

}  // namespace qcore
