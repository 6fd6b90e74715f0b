#pragma once

#include <optional>

#include "sqz/qalgebra.hpp"

namespace sqz {

struct PrincipalSqueezing {
    double zeta;        // min over theta of (Delta X_theta)^2; < 1 means squeezed
    double theta_star;  // minimizing angle, canonical representative in [0, pi)
    double zeta_tilde;  // <a^dag a> - |<a^2>|; negative value certifies zeta < 1
};

struct KitagawaResult {
    double xi;                    // 2 * lambda_min / j
    Eigen::Vector3d mean_spin;    // (<S_x>, <S_y>, <S_z>)
    Eigen::Vector3d n_perp_star;  // minimizing unit direction, perpendicular to the mean spin
};

struct EvenOddXi {
    double xi;
    double xi_tilde;  // 2j<N> - <N^2> - |<S_-^2>|; xi = 1 + xi_tilde / j
};

// Aggregate for the CLI report; bosonic fields for Fock-basis states, spin
// fields for Dicke-basis states, unset when undefined for the input.
struct SqueezingReport {
    std::optional<double> zeta, theta_star, zeta_tilde;
    std::optional<double> xi, xi_tilde, xi_prime;
    std::optional<Eigen::Vector3d> mean_spin, n_perp_star;
};

// zeta = 1 + 2(<a^dag a> - |<a>|^2) - 2|<a^2> - <a>^2| on a Fock-basis state;
// reduces to 1 + 2<a^dag a> - 2|<a^2>| when <a> = 0.
PrincipalSqueezing principal_squeezing(const StateVector& state);

// (Delta X_theta)^2 computed through operator matrices; the independent route
// against the closed-form zeta.
double variance_xtheta(const StateVector& state, double theta);

// Brute-force minimum of variance_xtheta: 720-point theta grid plus
// golden-section refinement. Check oracle for principal_squeezing.
double min_variance_theta_scan(const StateVector& state);

// xi from the smaller eigenvalue of the 2x2 covariance of two spin components
// perpendicular to the mean spin. Throws DegenerateMeanSpin for |<S>| <= 1e-8.
KitagawaResult spin_squeezing_kitagawa(const StateVector& state);
KitagawaResult spin_squeezing_kitagawa(const OperatorMatrix& rho);

// Shortcut for states with <S_+> = 0 (parity eigenstates, z-aligned spin):
// xi = 1 + (2j<N> - <N^2> - |<S_-^2>|)/j. Throws MeanSpinNotAxial otherwise.
EvenOddXi spin_squeezing_evenodd(const StateVector& state);

// xi' = xi / |<S>/j|^2; equals xi / |<S_z/j>|^2 for z-aligned states.
double spin_squeezing_wineland(const StateVector& state);

// Displace by -<a> so the result has <a> = 0; zeta is invariant.
StateVector normalize_frame_boson(const StateVector& state);

// Rotate the mean spin onto the -z axis (ground-dominated convention); xi is
// invariant. Azimuth taken from atan2 so the rotated <S_x>, <S_y> vanish.
StateVector normalize_frame_spin(const StateVector& state);

}  // namespace sqz
