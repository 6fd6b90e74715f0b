#include "sqz/phasespace.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "sqz/errors.hpp"

namespace sqz {

namespace {

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 2) throw Error("grid axis needs at least 2 points");
    if (!(hi > lo)) throw Error("grid axis needs max > min");
    std::vector<double> out(points);
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) out[i] = lo + step * i;
    out.back() = hi;
    return out;
}

// Truncated coherent-state amplitudes, not renormalized: exact overlaps
// <n|alpha> for n below the cutoff.
Vector coherent_overlap_amps(Complex alpha, int dim) {
    Vector c(dim);
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n + 1 < dim; ++n) c[n + 1] = c[n] * alpha / std::sqrt(n + 1.0);
    return c;
}

// Spin-coherent overlap amplitudes <n|eta>_j; unlike the state constructor
// this accepts eta = 0 (the ladder ground state).
Vector scs_overlap_amps(Complex eta, double j, int dim) {
    Vector c(dim);
    c[0] = std::exp(-j * std::log1p(std::norm(eta)));
    const double twoj = 2.0 * j;
    for (int n = 0; n + 1 < dim; ++n)
        c[n + 1] = c[n] * eta * std::sqrt((twoj - n) / (n + 1.0));
    return c;
}

}  // namespace

PhaseGrid field_q(const StateVector& state, const GridSpec& spec, double time_tau) {
    if (state.basis().kind() != BasisDescriptor::Kind::Tensor ||
        state.basis().right().kind() != BasisDescriptor::Kind::Fock)
        throw BasisMismatch("field_q needs Tensor(*, Fock), got " + state.basis().str());
    const OperatorMatrix rho = partial_trace(state, Side::Right);
    const int dim = rho.basis().dim();

    PhaseGrid grid;
    grid.plane = QPlane::FieldAlpha;
    grid.re_axis = linspace(spec.re_min, spec.re_max, spec.re_points);
    grid.im_axis = linspace(spec.im_min, spec.im_max, spec.im_points);
    grid.alpha_scale = 1.0;
    grid.time_tau = time_tau;
    grid.values.resize(spec.im_points, spec.re_points);
    detail::parallel_for(spec.im_points, [&](long row) {
        for (int col = 0; col < spec.re_points; ++col) {
            const Complex alpha(grid.re_axis[col], grid.im_axis[row]);
            const Vector c = coherent_overlap_amps(alpha, dim);
            grid.values(row, col) = c.dot(rho.mat() * c).real();
        }
    });
    return grid;
}

PhaseGrid atom_husimi(const StateVector& state, const GridSpec& spec, double time_tau) {
    if (state.basis().kind() != BasisDescriptor::Kind::Tensor ||
        state.basis().left().kind() != BasisDescriptor::Kind::Dicke)
        throw BasisMismatch("atom_husimi needs Tensor(Dicke, *), got " + state.basis().str());
    const OperatorMatrix rho = partial_trace(state, Side::Left);
    const double j = rho.basis().j();
    const int dim = rho.basis().dim();

    PhaseGrid grid;
    grid.plane = QPlane::AtomEta;
    grid.re_axis = linspace(spec.re_min, spec.re_max, spec.re_points);
    grid.im_axis = linspace(spec.im_min, spec.im_max, spec.im_points);
    grid.alpha_scale = std::sqrt(2.0 * j);
    grid.time_tau = time_tau;
    grid.values.resize(spec.im_points, spec.re_points);
    detail::parallel_for(spec.im_points, [&](long row) {
        for (int col = 0; col < spec.re_points; ++col) {
            const Complex eta(grid.re_axis[col], grid.im_axis[row]);
            if (std::norm(eta) >= 1.0) {
                grid.values(row, col) = 0.0;
                continue;
            }
            const Vector c = scs_overlap_amps(eta, j, dim);
            grid.values(row, col) = c.dot(rho.mat() * c).real();
        }
    });
    return grid;
}

double grid_similarity(const PhaseGrid& a, const PhaseGrid& b) {
    if (a.re_axis.size() != b.re_axis.size() || a.im_axis.size() != b.im_axis.size())
        throw AxisMismatch("grid_similarity: point counts differ");
    for (std::size_t i = 0; i < a.re_axis.size(); ++i)
        if (std::abs(a.re_axis[i] * a.alpha_scale - b.re_axis[i] * b.alpha_scale) > 1e-9)
            throw AxisMismatch("grid_similarity: re axes disagree after alpha scaling");
    for (std::size_t i = 0; i < a.im_axis.size(); ++i)
        if (std::abs(a.im_axis[i] * a.alpha_scale - b.im_axis[i] * b.alpha_scale) > 1e-9)
            throw AxisMismatch("grid_similarity: im axes disagree after alpha scaling");
    const double na = a.values.norm();
    const double nb = b.values.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    const double sim = (a.values.array() * b.values.array()).sum() / (na * nb);
    return std::min(sim, 1.0);
}

}  // namespace sqz
