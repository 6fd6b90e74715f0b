#pragma once

#include <complex>

#include <Eigen/Dense>

#include "sqz/basis.hpp"

namespace sqz {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Normalized amplitude vector over a declared basis. Index n in a Fock or
// Dicke basis means n excitations.
class StateVector {
public:
    // Normalizes; throws Error on a zero vector or length/basis mismatch.
    StateVector(BasisDescriptor basis, Vector amps);

    const BasisDescriptor& basis() const { return basis_; }
    const Vector& amps() const { return amps_; }
    long dim() const { return amps_.size(); }

private:
    BasisDescriptor basis_;
    Vector amps_;
};

class OperatorMatrix {
public:
    // Validates max|M - M^dag| <= 1e-12 and sets the flag.
    static OperatorMatrix hermitian(BasisDescriptor basis, Matrix entries);
    // No symmetry requirement (propagators, ladder operators, ...).
    static OperatorMatrix general(BasisDescriptor basis, Matrix entries);

    const BasisDescriptor& basis() const { return basis_; }
    const Matrix& mat() const { return entries_; }
    bool is_hermitian() const { return hermitian_; }

private:
    OperatorMatrix(BasisDescriptor basis, Matrix entries, bool hermitian);

    BasisDescriptor basis_;
    Matrix entries_;
    bool hermitian_;
};

struct EigenSystem {
    BasisDescriptor basis;
    Eigen::VectorXd eigenvalues;  // ascending
    Matrix eigenvectors;          // unitary, columns match eigenvalues
};

enum class Side { Left, Right };

// Hermitian eigendecomposition. Throws NotHermitian when the flag is unset.
EigenSystem eigh(const OperatorMatrix& op);

// U = exp(-i H t) via eigendecomposition. The EigenSystem overload reuses one
// factorization across a whole time grid.
OperatorMatrix propagator(const OperatorMatrix& op, double t);
OperatorMatrix propagator(const EigenSystem& es, double t);

StateVector apply(const OperatorMatrix& op, const StateVector& psi);

// Kronecker products; the left argument owns the slow index.
StateVector tensor(const StateVector& a, const StateVector& b);
OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b);

// Reduced density matrix of the kept factor. The input must live in a Tensor
// basis; output is Hermitian with unit trace.
OperatorMatrix partial_trace(const StateVector& psi, Side keep);
OperatorMatrix partial_trace(const OperatorMatrix& rho, Side keep);

Complex expval(const StateVector& psi, const OperatorMatrix& op);  // <psi|A|psi>
Complex expval(const OperatorMatrix& rho, const OperatorMatrix& op);  // tr(rho A)

}  // namespace sqz
