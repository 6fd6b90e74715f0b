#include "sqz/qalgebra.hpp"

#include <cmath>
#include <utility>

namespace sqz {

namespace {

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

StateVector::StateVector(BasisDescriptor basis, Vector amps)
    : basis_(std::move(basis)), amps_(std::move(amps)) {
    if (amps_.size() != basis_.dim())
        throw Error("StateVector: " + std::to_string(amps_.size()) + " amplitudes for basis " +
                    basis_.str());
    const double n = amps_.norm();
    if (!(n > 1e-150)) throw Error("StateVector: cannot normalize a zero amplitude vector");
    amps_ /= n;
}

OperatorMatrix::OperatorMatrix(BasisDescriptor basis, Matrix entries, bool hermitian)
    : basis_(std::move(basis)), entries_(std::move(entries)), hermitian_(hermitian) {
    if (entries_.rows() != basis_.dim() || entries_.cols() != basis_.dim())
        throw Error("OperatorMatrix: entries are " + std::to_string(entries_.rows()) + "x" +
                    std::to_string(entries_.cols()) + " but basis " + basis_.str() + " has dim " +
                    std::to_string(basis_.dim()));
}

OperatorMatrix OperatorMatrix::hermitian(BasisDescriptor basis, Matrix entries) {
    const double defect = hermiticity_defect(entries);
    if (defect > 1e-12)
        throw NotHermitian("matrix fails the Hermitian check, max|M - M^dag| = " +
                           std::to_string(defect));
    return OperatorMatrix(std::move(basis), std::move(entries), true);
}

OperatorMatrix OperatorMatrix::general(BasisDescriptor basis, Matrix entries) {
    return OperatorMatrix(std::move(basis), std::move(entries), false);
}

EigenSystem eigh(const OperatorMatrix& op) {
    if (!op.is_hermitian()) throw NotHermitian("eigh needs an operator carrying the Hermitian flag");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.mat());
    if (solver.info() != Eigen::Success) throw Error("eigh: eigendecomposition did not converge");
    return {op.basis(), solver.eigenvalues(), solver.eigenvectors()};
}

OperatorMatrix propagator(const EigenSystem& es, double t) {
    const auto phases =
        (Complex(0.0, -t) * es.eigenvalues.cast<Complex>().array()).exp().matrix();
    Matrix u = es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
    return OperatorMatrix::general(es.basis, std::move(u));
}

OperatorMatrix propagator(const OperatorMatrix& op, double t) {
    return propagator(eigh(op), t);
}

StateVector apply(const OperatorMatrix& op, const StateVector& psi) {
    if (op.basis() != psi.basis())
        throw BasisMismatch("apply: operator on " + op.basis().str() + ", state on " +
                            psi.basis().str());
    return StateVector(psi.basis(), op.mat() * psi.amps());
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const long db = b.dim();
    Vector out(a.dim() * db);
    for (long i = 0; i < a.dim(); ++i) out.segment(i * db, db) = a.amps()[i] * b.amps();
    return StateVector(BasisDescriptor::tensor(a.basis(), b.basis()), std::move(out));
}

OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b) {
    const long da = a.mat().rows(), db = b.mat().rows();
    Matrix out(da * db, da * db);
    for (long i = 0; i < da; ++i)
        for (long k = 0; k < da; ++k) out.block(i * db, k * db, db, db) = a.mat()(i, k) * b.mat();
    const bool herm = a.is_hermitian() && b.is_hermitian();
    auto basis = BasisDescriptor::tensor(a.basis(), b.basis());
    return herm ? OperatorMatrix::hermitian(std::move(basis), std::move(out))
                : OperatorMatrix::general(std::move(basis), std::move(out));
}

namespace {

OperatorMatrix hermitized(BasisDescriptor basis, Matrix rho) {
    Matrix h = 0.5 * (rho + rho.adjoint());
    return OperatorMatrix::hermitian(std::move(basis), std::move(h));
}

}  // namespace

OperatorMatrix partial_trace(const StateVector& psi, Side keep) {
    const auto& basis = psi.basis();
    if (basis.kind() != BasisDescriptor::Kind::Tensor)
        throw NotTensorBasis("partial_trace needs a tensor-product basis, got " + basis.str());
    const long dl = basis.left().dim(), dr = basis.right().dim();
    // psi reshaped as M(i_left, i_right); rho_left = M M^dag, rho_right = (M^dag M)^T
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        psi.amps().data(), dl, dr);
    if (keep == Side::Left) return hermitized(basis.left(), m * m.adjoint());
    return hermitized(basis.right(), (m.adjoint() * m).transpose());
}

OperatorMatrix partial_trace(const OperatorMatrix& rho, Side keep) {
    const auto& basis = rho.basis();
    if (basis.kind() != BasisDescriptor::Kind::Tensor)
        throw NotTensorBasis("partial_trace needs a tensor-product basis, got " + basis.str());
    const long dl = basis.left().dim(), dr = basis.right().dim();
    if (keep == Side::Left) {
        Matrix out = Matrix::Zero(dl, dl);
        for (long i = 0; i < dl; ++i)
            for (long k = 0; k < dl; ++k)
                for (long f = 0; f < dr; ++f) out(i, k) += rho.mat()(i * dr + f, k * dr + f);
        return hermitized(basis.left(), std::move(out));
    }
    Matrix out = Matrix::Zero(dr, dr);
    for (long f = 0; f < dr; ++f)
        for (long g = 0; g < dr; ++g)
            for (long i = 0; i < dl; ++i) out(f, g) += rho.mat()(i * dr + f, i * dr + g);
    return hermitized(basis.right(), std::move(out));
}

Complex expval(const StateVector& psi, const OperatorMatrix& op) {
    if (op.basis() != psi.basis())
        throw BasisMismatch("expval: operator on " + op.basis().str() + ", state on " +
                            psi.basis().str());
    return psi.amps().dot(op.mat() * psi.amps());
}

Complex expval(const OperatorMatrix& rho, const OperatorMatrix& op) {
    if (op.basis() != rho.basis())
        throw BasisMismatch("expval: operator on " + op.basis().str() + ", density matrix on " +
                            rho.basis().str());
    return (rho.mat() * op.mat()).trace();
}

}  // namespace sqz
