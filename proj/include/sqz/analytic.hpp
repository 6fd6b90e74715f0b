#pragma once

#include <vector>

#include "sqz/qstates.hpp"

namespace sqz {

// Factorial moments of the atomic excitation number: F1 = <N>, F2 = <N(N-1)>.
struct FactorialMoments {
    double f1, f2;
};

struct CatOptimum {
    double alpha_star;
    double zeta_star;
};

// One point of the j -> infinity sequence at fixed 2j|eta|^2 = |alpha|^2.
struct LimitSequencePoint {
    double j;
    double eta_abs;
    double xi;           // state-vector evaluation on the spin cat
    double zeta_target;  // closed-form cat squeezing at |alpha|^2
    double gap;          // |xi - zeta_target|
    double mean_excitation_fraction;  // <N> / (2j)
    double f1, f2;       // state-vector factorial moments, for limit monitoring
};

// Even: 1 + 2|alpha|^2 (tanh|alpha|^2 - 1), always < 1 for |alpha|^2 > 0.
// Odd:  1 + 2|alpha|^2 (coth|alpha|^2 - 1), always > 1.
double zeta_cat_closed(double alpha_abs2, CatParity parity);

// Golden-section minimization of the even closed form over alpha in [lo, hi].
CatOptimum minimize_zeta_even(double lo = 0.1, double hi = 2.0, double tol = 1e-6);

// Closed forms in gamma = (1-|eta|^2)/(1+|eta|^2); see the matching direct-sum
// oracle in the tests.
FactorialMoments factorial_moments_cat(const SpinCoherentParam& p, CatParity parity);

// xi_tilde = [2j-1 + (4j-2)|eta|^2] F1 - (1+|eta|^2) F2 - 2j(2j-1)|eta|^2,
// evaluated in an algebraically equal product form whose sign stays exact
// even where the three terms cancel to below machine precision.
double xi_tilde_linear(const SpinCoherentParam& p, CatParity parity);

// For each j, build the spin cat at eta = sqrt(|alpha|^2 / 2j), evaluate xi on
// the state vector, and record the gap to the closed-form cat value.
std::vector<LimitSequencePoint> contraction_limit_scan(double alpha_abs2,
                                                       const std::vector<double>& j_list,
                                                       CatParity parity);

}  // namespace sqz
