#include "sqz/squeezing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "sqz/qstates.hpp"

namespace sqz {

namespace {

constexpr double kPi = std::numbers::pi;

void require_fock(const StateVector& state, const char* who) {
    if (state.basis().kind() != BasisDescriptor::Kind::Fock)
        throw BasisMismatch(std::string(who) + " needs a Fock-basis state, got " +
                            state.basis().str());
    // Moments taken below the cutoff are only meaningful when the state does
    // not pile up against it.
    const double edge = std::norm(state.amps()[state.dim() - 1]);
    if (edge > 1e-10)
        throw TruncationTooSmall(std::string(who) + ": state carries probability " +
                                     std::to_string(edge) + " at the Fock cutoff",
                                 edge);
}

void require_dicke(const StateVector& state, const char* who) {
    if (state.basis().kind() != BasisDescriptor::Kind::Dicke)
        throw BasisMismatch(std::string(who) + " needs a Dicke-basis state, got " +
                            state.basis().str());
}

struct BosonMoments {
    Complex a{0.0, 0.0}, a2{0.0, 0.0};
    double n = 0.0;
};

// Direct ladder sums; exact on the truncated state (a only lowers).
BosonMoments boson_moments(const Vector& c) {
    BosonMoments m;
    const long d = c.size();
    for (long k = 0; k < d; ++k) {
        const double p = std::norm(c[k]);
        m.n += p * k;
        if (k + 1 < d) m.a += std::conj(c[k]) * c[k + 1] * std::sqrt(k + 1.0);
        if (k + 2 < d) m.a2 += std::conj(c[k]) * c[k + 2] * std::sqrt((k + 1.0) * (k + 2.0));
    }
    return m;
}

struct SpinMoments {
    Complex s_plus{0.0, 0.0}, s_minus2{0.0, 0.0};
    double n = 0.0, n2 = 0.0;
};

SpinMoments spin_moments(const Vector& c, double twoj) {
    SpinMoments m;
    const long d = c.size();
    auto r = [twoj](long n) { return std::sqrt(n * (twoj - n + 1.0)); };
    for (long n = 0; n < d; ++n) {
        const double p = std::norm(c[n]);
        m.n += p * n;
        m.n2 += p * n * n;
        if (n + 1 < d) m.s_plus += c[n] * r(n + 1) * std::conj(c[n + 1]);
        if (n >= 2) m.s_minus2 += std::conj(c[n - 2]) * r(n) * r(n - 1) * c[n];
    }
    return m;
}

}  // namespace

PrincipalSqueezing principal_squeezing(const StateVector& state) {
    require_fock(state, "principal_squeezing");
    const auto m = boson_moments(state.amps());
    const Complex d = m.a2 - m.a * m.a;
    const double centered_n = m.n - std::norm(m.a);
    const double zeta = 1.0 + 2.0 * centered_n - 2.0 * std::abs(d);
    double theta = 0.0;
    if (std::abs(d) > 1e-14) {
        theta = std::fmod(0.5 * (kPi + std::arg(d)), kPi);
        if (theta < 0.0) theta += kPi;
    }
    return {zeta, theta, m.n - std::abs(m.a2)};
}

double variance_xtheta(const StateVector& state, double theta) {
    require_fock(state, "variance_xtheta");
    const auto x = boson_ops(state.basis().n_max()).x_theta(theta);
    const Vector y = x.mat() * state.amps();
    const double mean = state.amps().dot(y).real();
    return y.squaredNorm() - mean * mean;
}

double min_variance_theta_scan(const StateVector& state) {
    auto f = [&state](double th) { return variance_xtheta(state, th); };
    const int coarse = 720;
    double best_th = 0.0, best = f(0.0);
    for (int k = 1; k < coarse; ++k) {
        const double th = kPi * k / coarse;
        const double v = f(th);
        if (v < best) {
            best = v;
            best_th = th;
        }
    }
    // golden-section refinement around the best coarse point
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = best_th - kPi / coarse, b = best_th + kPi / coarse;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-12) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return std::min({best, fc, fd});
}

namespace {

KitagawaResult kitagawa_impl(const BasisDescriptor& basis,
                             const std::function<double(const Matrix&)>& re_expect) {
    const double j = basis.j();
    if (j <= 0.0) throw Error("spin squeezing needs j > 0");
    const auto ops = spin_ops(j);
    const std::array<const Matrix*, 3> s = {&ops.s_x.mat(), &ops.s_y.mat(), &ops.s_z.mat()};

    Eigen::Vector3d mean;
    for (int i = 0; i < 3; ++i) mean[i] = re_expect(*s[i]);
    const double len = mean.norm();
    if (len <= 1e-8)
        throw DegenerateMeanSpin("mean spin length " + std::to_string(len) +
                                 " <= 1e-8; no axis to measure against");
    const Eigen::Vector3d mhat = mean / len;

    // Orthonormal pair spanning the plane perpendicular to the mean spin.
    int least = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(mhat[i]) < std::abs(mhat[least])) least = i;
    Eigen::Vector3d n1 = mhat.cross(Eigen::Vector3d::Unit(least)).normalized();
    Eigen::Vector3d n2 = mhat.cross(n1);

    Matrix s1 = n1[0] * *s[0] + n1[1] * *s[1] + n1[2] * *s[2];
    Matrix s2 = n2[0] * *s[0] + n2[1] * *s[1] + n2[2] * *s[2];
    // <S_{n_i}> = 0 in the perpendicular plane, so these are the covariances.
    const double a = re_expect(s1 * s1);
    const double b = re_expect(s2 * s2);
    const double cc = re_expect(s1 * s2 + s2 * s1);
    const double lam_min = 0.5 * (a + b) - std::hypot(0.5 * (a - b), 0.5 * cc);
    const double phi = 0.5 * (std::atan2(cc, a - b) + kPi);
    KitagawaResult out;
    out.xi = 2.0 * lam_min / j;
    out.mean_spin = mean;
    out.n_perp_star = std::cos(phi) * n1 + std::sin(phi) * n2;
    return out;
}

}  // namespace

KitagawaResult spin_squeezing_kitagawa(const StateVector& state) {
    require_dicke(state, "spin_squeezing_kitagawa");
    const Vector& amps = state.amps();
    return kitagawa_impl(state.basis(), [&amps](const Matrix& op) {
        return amps.dot(op * amps).real();
    });
}

KitagawaResult spin_squeezing_kitagawa(const OperatorMatrix& rho) {
    if (rho.basis().kind() != BasisDescriptor::Kind::Dicke)
        throw BasisMismatch("spin_squeezing_kitagawa needs a Dicke-basis density matrix, got " +
                            rho.basis().str());
    const Matrix& r = rho.mat();
    return kitagawa_impl(rho.basis(), [&r](const Matrix& op) {
        return (r * op).trace().real();
    });
}

EvenOddXi spin_squeezing_evenodd(const StateVector& state) {
    require_dicke(state, "spin_squeezing_evenodd");
    const double j = state.basis().j();
    if (j <= 0.0) throw Error("spin squeezing needs j > 0");
    const auto m = spin_moments(state.amps(), 2.0 * j);
    if (std::abs(m.s_plus) > 1e-10)
        throw MeanSpinNotAxial("the even/odd shortcut needs <S_+> = 0, got |<S_+>| = " +
                               std::to_string(std::abs(m.s_plus)));
    const double xi_tilde = 2.0 * j * m.n - m.n2 - std::abs(m.s_minus2);
    return {1.0 + xi_tilde / j, xi_tilde};
}

double spin_squeezing_wineland(const StateVector& state) {
    const auto kr = spin_squeezing_kitagawa(state);
    const double j = state.basis().j();
    const double rel = kr.mean_spin.norm() / j;
    return kr.xi / (rel * rel);
}

StateVector normalize_frame_boson(const StateVector& state) {
    require_fock(state, "normalize_frame_boson");
    const Complex mean_a = boson_moments(state.amps()).a;
    return apply(displacement(-mean_a, state.basis().n_max()), state);
}

StateVector normalize_frame_spin(const StateVector& state) {
    require_dicke(state, "normalize_frame_spin");
    const auto ops = spin_ops(state.basis().j());
    Eigen::Vector3d mean(expval(state, ops.s_x).real(), expval(state, ops.s_y).real(),
                         expval(state, ops.s_z).real());
    const double len = mean.norm();
    if (len <= 1e-8)
        throw DegenerateMeanSpin("mean spin length " + std::to_string(len) +
                                 " <= 1e-8; no frame to normalize");
    const double theta = std::acos(std::clamp(mean[2] / len, -1.0, 1.0));
    const double phi = std::atan2(mean[1], mean[0]);
    // Rotating by pi - theta about the axis set by phi carries the mean spin
    // onto -z (the ground-dominated convention).
    return apply(rotation(kPi - theta, phi, state.basis().j()), state);
}

}  // namespace sqz
