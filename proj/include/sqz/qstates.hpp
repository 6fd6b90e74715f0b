#pragma once

#include "sqz/qalgebra.hpp"

namespace sqz {

enum class CatParity { Even, Odd };

// Complex spin-coherent parameter eta with its spin length j.
// The library enforces 0 < |eta| < 1; gamma = (1-|eta|^2)/(1+|eta|^2) is then
// in (0,1).
struct SpinCoherentParam {
    double j;
    Complex eta;
};

struct BosonOps {
    OperatorMatrix a, a_dag, number, x, p;

    // X_theta = a e^{-i theta} + a^dag e^{i theta}; X_0 = X, X_{pi/2} = P.
    OperatorMatrix x_theta(double theta) const;
};

struct SpinOps {
    double j;
    OperatorMatrix s_plus, s_minus, s_x, s_y, s_z, number;
};

BosonOps boson_ops(int n_max);
SpinOps spin_ops(double j);

// P(Poisson(mean) > n_max); the truncation-tail estimate for coherent states.
double poisson_tail(double mean, int n_max);

// Smallest cutoff with poisson_tail(|alpha|^2, n) <= tail_tol, floored at n_min.
int fock_cutoff_for(double alpha_abs, double tail_tol = 1e-12, int n_min = 16);

StateVector coherent_state(Complex alpha, int n_max);

// (|alpha> + |-alpha>)/sqrt(2(1+e^{-2|alpha|^2})) for Even, the minus pair for
// Odd. Only same-parity Fock amplitudes are nonzero (exact zeros elsewhere).
StateVector cat_state(Complex alpha, CatParity parity, int n_max);

// Amplitudes (1+|eta|^2)^{-j} binom(2j,n)^{1/2} eta^n over |n>_j.
StateVector spin_coherent_state(const SpinCoherentParam& p);

// (|eta> +- |-eta>)/sqrt(2 +- 2 gamma^{2j}); parity-selected amplitudes.
StateVector spin_cat_state(const SpinCoherentParam& p, CatParity parity);

// D(alpha) = exp(alpha a^dag - alpha^* a), computed by exponentiating the
// Hermitian matrix i*(generator) through eigh.
OperatorMatrix displacement(Complex alpha, int n_max);

// R(theta, phi) = exp(-theta/2 (S_+ e^{-i phi} - S_- e^{i phi})).
OperatorMatrix rotation(double theta, double phi, double j);

}  // namespace sqz
