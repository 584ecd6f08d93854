// Dense complex linear algebra for small Hilbert spaces (dim <= 32):
// tensor products, partial traces, Hermitian eigensystems, von Neumann
// entropy, and one-qubit projective measurements.
//
// All functions are pure; values can be freely moved between threads.

#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace qcore {

using cplx = std::complex<double>;

// Row-major dense complex square matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : n_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static ComplexMatrix identity(int dim);

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& a);
cplx trace(const ComplexMatrix& a);

// max_ij |a(i,j) - b(i,j)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product: entry ((i*b.dim+k),(j*b.dim+l)) = a(i,j) * b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Unit-norm complex vector.
class StateVector {
public:
    explicit StateVector(std::vector<cplx> amplitudes);  // throws if not unit norm

    int dim() const { return static_cast<int>(a_.size()); }
    const std::vector<cplx>& amplitudes() const { return a_; }
    cplx operator[](int i) const { return a_[static_cast<size_t>(i)]; }

private:
    std::vector<cplx> a_;
};

// Hermitian, unit-trace, positive-semidefinite matrix together with the
// ordered list of subsystem dimensions (their product equals the matrix dim).
// The constructor enforces: ||rho - rho^dag||_max <= 1e-12, |Tr rho - 1| <= 1e-12,
// smallest eigenvalue >= -1e-10.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix m, std::vector<int> dims);  // throws on violation

    const ComplexMatrix& matrix() const { return m_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim() const { return m_.dim(); }

private:
    ComplexMatrix m_;
    std::vector<int> dims_;
};

// |psi><psi| with the given subsystem dimensions.
DensityMatrix outer(const StateVector& psi, std::vector<int> dims);

// Trace out every subsystem not listed in `keep`; kept subsystems stay in
// their original order. Throws on empty/duplicate/out-of-range indices.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

struct Eigensystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // orthonormal columns, vectors.col(i) <-> values[i]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic:
// fixed sweep order, stable descending sort (exact ties keep the order the
// sweep produced), and each eigenvector is scaled so that its
// largest-magnitude component (lowest index on ties) is real and positive.
// Throws if the input deviates from Hermitian by more than 1e-10.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

// S = -sum_i lambda_i log2 lambda_i, with 0*log 0 = 0 and eigenvalues
// below 1e-14 treated as exactly zero.
double von_neumann_entropy(const DensityMatrix& rho);

// One-qubit projective measurement direction on the Bloch sphere.
struct BlochMeasurement {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)
};

// P_+/- = (I +/- n.sigma)/2 with n = (sin t cos p, sin t sin p, cos t).
std::pair<ComplexMatrix, ComplexMatrix> bloch_projectors(const BlochMeasurement& m);

enum class Side { A, B };
enum class Outcome { plus, minus };

struct MeasurementResult {
    double p = 0.0;
    // Post-measurement state of the *unmeasured* qubit. Empty when p < 1e-14
    // (degenerate branch); such a branch contributes zero conditional entropy.
    std::optional<DensityMatrix> post;
};

// Projective measurement of one qubit of a two-qubit state:
// p = Tr[(Pi (x) I) rho (Pi (x) I)] (or I (x) Pi for side B), and
// post = Tr_measured[Pi rho Pi] / p.
MeasurementResult measure_subsystem(const DensityMatrix& rho, Side side,
                                    const BlochMeasurement& m, Outcome outcome);

// eta = sum_{i,j} (pi_i^A (x) pi_j^B) rho (pi_i^A (x) pi_j^B) where pi_i are
// the rank-1 projectors onto the columns of the supplied one-qubit bases.
// Throws if a basis is not unitary within 1e-10.
DensityMatrix dephase_in_bases(const DensityMatrix& rho, const ComplexMatrix& basis_a,
                               const ComplexMatrix& basis_b);

}  // namespace qcore
