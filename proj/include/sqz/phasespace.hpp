#pragma once

#include <vector>

#include "sqz/qalgebra.hpp"

namespace sqz {

enum class QPlane { FieldAlpha, AtomEta };

struct GridSpec {
    double re_min, re_max;
    int re_points;
    double im_min, im_max;
    int im_points;

    static GridSpec square(double lo, double hi, int points) {
        return {lo, hi, points, lo, hi, points};
    }
};

// Rectangular grid of Q-function values. Axes are in the native parameter of
// the plane (alpha for the field, eta for atoms); multiplying them by
// alpha_scale lands both planes on a common alpha axis (eta * sqrt(2j) -> alpha,
// the contraction scaling). values(row, col) follows (im_axis, re_axis).
struct PhaseGrid {
    QPlane plane;
    std::vector<double> re_axis, im_axis;
    double alpha_scale = 1.0;
    double time_tau = 0.0;  // tau of the state the grid was taken from
    Eigen::MatrixXd values;
};

// Q(alpha) = <alpha| rho_field |alpha> with rho_field = partial_trace(keep
// right), evaluated with raw truncated coherent overlaps (no renormalization;
// exact for the truncated reduced state). Needs a Tensor basis whose right
// factor is Fock.
PhaseGrid field_q(const StateVector& state, const GridSpec& spec, double time_tau = 0.0);

// Q(eta) = <eta| rho_atoms |eta> with spin-coherent overlaps; grid points with
// |eta| >= 1 are recorded as 0. Needs a Tensor basis whose left factor is Dicke.
PhaseGrid atom_husimi(const StateVector& state, const GridSpec& spec, double time_tau = 0.0);

// Normalized cross-correlation (cosine similarity) of the two value matrices;
// requires the alpha-identified axes to agree within 1e-9.
double grid_similarity(const PhaseGrid& a, const PhaseGrid& b);

}  // namespace sqz
