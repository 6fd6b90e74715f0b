#include "sqz/qstates.hpp"

#include <cmath>

namespace sqz {

namespace {

Matrix lowering(int dim) {
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

void check_eta(const SpinCoherentParam& p) {
    const double ae = std::abs(p.eta);
    if (!(ae > 0.0 && ae < 1.0))
        throw EtaOutOfRange("spin coherent parameter needs 0 < |eta| < 1, got |eta| = " +
                            std::to_string(ae));
}

// Unnormalized amplitudes of |eta>, built by the stable ratio recurrence
// c_{n+1}/c_n = eta sqrt((2j-n)/(n+1)); c_0 = (1+|eta|^2)^{-j} keeps the exact
// binomial normalization.
Vector scs_amps(double j, Complex eta) {
    const int twoj = static_cast<int>(std::llround(2.0 * j));
    Vector c(twoj + 1);
    c[0] = std::exp(-j * std::log1p(std::norm(eta)));
    for (int n = 0; n < twoj; ++n)
        c[n + 1] = c[n] * eta * std::sqrt((twoj - n) / (n + 1.0));
    return c;
}

}  // namespace

OperatorMatrix BosonOps::x_theta(double theta) const {
    const Complex ph = std::polar(1.0, theta);
    Matrix m = a.mat() * std::conj(ph) + a.mat().adjoint() * ph;
    return OperatorMatrix::hermitian(a.basis(), std::move(m));
}

BosonOps boson_ops(int n_max) {
    auto basis = BasisDescriptor::fock(n_max);
    const int dim = n_max + 1;
    Matrix am = lowering(dim);
    Matrix num = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) num(n, n) = n;
    Matrix x = am + am.adjoint();
    Matrix p = Complex(0, -1) * (am - am.adjoint());
    return BosonOps{OperatorMatrix::general(basis, am),
                    OperatorMatrix::general(basis, am.adjoint()),
                    OperatorMatrix::hermitian(basis, std::move(num)),
                    OperatorMatrix::hermitian(basis, std::move(x)),
                    OperatorMatrix::hermitian(basis, std::move(p))};
}

SpinOps spin_ops(double j) {
    auto basis = BasisDescriptor::dicke(j);
    const int dim = static_cast<int>(basis.dim());
    const double twoj = 2.0 * j;
    Matrix sm = Matrix::Zero(dim, dim);  // S_- |n> = sqrt(n (2j - n + 1)) |n-1>
    for (int n = 1; n < dim; ++n) sm(n - 1, n) = std::sqrt(n * (twoj - n + 1.0));
    Matrix sp = sm.adjoint();
    Matrix sx = 0.5 * (sp + sm);
    Matrix sy = Complex(0, -0.5) * (sp - sm);
    Matrix sz = Matrix::Zero(dim, dim);
    Matrix num = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        num(n, n) = n;
        sz(n, n) = n - j;
    }
    return SpinOps{j,
                   OperatorMatrix::general(basis, std::move(sp)),
                   OperatorMatrix::general(basis, std::move(sm)),
                   OperatorMatrix::hermitian(basis, std::move(sx)),
                   OperatorMatrix::hermitian(basis, std::move(sy)),
                   OperatorMatrix::hermitian(basis, std::move(sz)),
                   OperatorMatrix::hermitian(basis, std::move(num))};
}

double poisson_tail(double mean, int n_max) {
    if (mean <= 0.0) return 0.0;
    // Sum the tail upward from n_max + 1; terms decay superexponentially once
    // n exceeds the mean, so the loop terminates quickly.
    double term = std::exp(-mean + (n_max + 1) * std::log(mean) - std::lgamma(n_max + 2.0));
    double tail = 0.0;
    for (int n = n_max + 1;; ++n) {
        tail += term;
        term *= mean / (n + 1.0);
        if (static_cast<double>(n) > mean && term < tail * 1e-18 + 1e-300) break;
        if (n > n_max + 1000000) break;
    }
    return tail;
}

int fock_cutoff_for(double alpha_abs, double tail_tol, int n_min) {
    const double mean = alpha_abs * alpha_abs;
    int n = n_min;
    while (poisson_tail(mean, n) > tail_tol) ++n;
    return n;
}

namespace {

// Amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!) on |0..n_max>, with the
// truncation-tail precondition shared by coherent_state and cat_state.
Vector coherent_amps_checked(Complex alpha, int n_max) {
    const double mean = std::norm(alpha);
    const double tail = poisson_tail(mean, n_max);
    if (tail > 1e-12)
        throw TruncationTooSmall("coherent amplitude |alpha| = " + std::to_string(std::abs(alpha)) +
                                     " has Poisson tail " + std::to_string(tail) +
                                     " beyond n_max = " + std::to_string(n_max) +
                                     " (limit 1e-12); raise n_max",
                                 tail);
    Vector c(n_max + 1);
    c[0] = std::exp(-0.5 * mean);
    for (int n = 0; n < n_max; ++n) c[n + 1] = c[n] * alpha / std::sqrt(n + 1.0);
    return c;
}

}  // namespace

StateVector coherent_state(Complex alpha, int n_max) {
    return StateVector(BasisDescriptor::fock(n_max), coherent_amps_checked(alpha, n_max));
}

StateVector cat_state(Complex alpha, CatParity parity, int n_max) {
    if (parity == CatParity::Odd && alpha == Complex(0.0, 0.0))
        throw OddCatAtZero("odd cat state is undefined at alpha = 0");
    Vector c = coherent_amps_checked(alpha, n_max);
    const int keep = parity == CatParity::Even ? 0 : 1;
    for (int n = 0; n <= n_max; ++n)
        if (n % 2 != keep) c[n] = Complex(0.0, 0.0);
    return StateVector(BasisDescriptor::fock(n_max), std::move(c));
}

StateVector spin_coherent_state(const SpinCoherentParam& p) {
    check_eta(p);
    return StateVector(BasisDescriptor::dicke(p.j), scs_amps(p.j, p.eta));
}

StateVector spin_cat_state(const SpinCoherentParam& p, CatParity parity) {
    check_eta(p);
    Vector c = scs_amps(p.j, p.eta);
    const int keep = parity == CatParity::Even ? 0 : 1;
    for (long n = 0; n < c.size(); ++n)
        if (n % 2 != keep) c[n] = Complex(0.0, 0.0);
    if (c.size() == 1 && parity == CatParity::Odd)
        throw Error("odd spin cat needs 2j >= 1");
    return StateVector(BasisDescriptor::dicke(p.j), std::move(c));
}

OperatorMatrix displacement(Complex alpha, int n_max) {
    // D(alpha) = exp(G) with G = alpha a^dag - alpha^* a; K = iG is Hermitian
    // and D = exp(-iK) comes from eigh.
    const int dim = n_max + 1;
    Matrix k = Matrix::Zero(dim, dim);
    const Complex i(0.0, 1.0);
    for (int n = 1; n < dim; ++n) {
        const double r = std::sqrt(static_cast<double>(n));
        k(n, n - 1) = i * alpha * r;          // i alpha a^dag
        k(n - 1, n) = -i * std::conj(alpha) * r;  // -i alpha^* a
    }
    return propagator(OperatorMatrix::hermitian(BasisDescriptor::fock(n_max), std::move(k)), 1.0);
}

OperatorMatrix rotation(double theta, double phi, double j) {
    // R = exp(G) with G = -(theta/2)(S_+ e^{-i phi} - S_- e^{i phi}).
    auto basis = BasisDescriptor::dicke(j);
    const int dim = static_cast<int>(basis.dim());
    const double twoj = 2.0 * j;
    Matrix k = Matrix::Zero(dim, dim);
    const Complex i(0.0, 1.0);
    const Complex ph = std::polar(1.0, phi);
    for (int n = 1; n < dim; ++n) {
        const double r = std::sqrt(n * (twoj - n + 1.0));
        // K = iG: entries on the S_+ position (n, n-1) and S_- position (n-1, n)
        k(n, n - 1) = -i * 0.5 * theta * std::conj(ph) * r;
        k(n - 1, n) = i * 0.5 * theta * ph * r;
    }
    return propagator(OperatorMatrix::hermitian(std::move(basis), std::move(k)), 1.0);
}

}  // namespace sqz
