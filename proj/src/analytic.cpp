#include "sqz/analytic.hpp"

#include <cmath>

#include "sqz/qstates.hpp"
#include "sqz/squeezing.hpp"

namespace sqz {

double zeta_cat_closed(double alpha_abs2, CatParity parity) {
    if (alpha_abs2 < 0.0) throw Error("zeta_cat_closed: |alpha|^2 must be >= 0");
    const double s = alpha_abs2;
    if (parity == CatParity::Even) {
        if (s == 0.0) return 1.0;  // vacuum limit
        return 1.0 + 2.0 * s * (std::tanh(s) - 1.0);
    }
    if (s <= 0.0) throw OddCatAtZero("odd cat state is undefined at alpha = 0");
    return 1.0 + 2.0 * s * (1.0 / std::tanh(s) - 1.0);
}

CatOptimum minimize_zeta_even(double lo, double hi, double tol) {
    if (!(0.0 < lo && lo < hi && hi <= 3.0))
        throw Error("minimize_zeta_even: bracket must satisfy 0 < lo < hi <= 3");
    auto f = [](double alpha) { return zeta_cat_closed(alpha * alpha, CatParity::Even); };
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
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
    const double alpha_star = 0.5 * (a + b);
    return {alpha_star, f(alpha_star)};
}

FactorialMoments factorial_moments_cat(const SpinCoherentParam& p, CatParity parity) {
    const double j = p.j;
    if (j < 0.5) throw Error("factorial_moments_cat: j must be at least 1/2");
    const double ae2 = std::norm(p.eta);
    if (!(ae2 > 0.0 && ae2 < 1.0))
        throw EtaOutOfRange("factorial_moments_cat needs 0 < |eta| < 1");
    const double gamma = (1.0 - ae2) / (1.0 + ae2);
    const double twoj = 2.0 * j;
    const double g2j = std::pow(gamma, twoj);
    const double g2jm1 = std::pow(gamma, twoj - 1.0);
    const double g2jm2 = std::pow(gamma, twoj - 2.0);
    const double pre1 = twoj * ae2 / (1.0 + ae2);
    const double pre2 = twoj * (twoj - 1.0) * ae2 * ae2 / ((1.0 + ae2) * (1.0 + ae2));
    if (parity == CatParity::Even)
        return {pre1 * (1.0 - g2jm1) / (1.0 + g2j), pre2 * (1.0 + g2jm2) / (1.0 + g2j)};
    return {pre1 * (1.0 + g2jm1) / (1.0 - g2j), pre2 * (1.0 - g2jm2) / (1.0 - g2j)};
}

double xi_tilde_linear(const SpinCoherentParam& p, CatParity parity) {
    const double j = p.j;
    if (j < 0.5) throw Error("xi_tilde_linear: j must be at least 1/2");
    const double ae2 = std::norm(p.eta);
    if (!(ae2 > 0.0 && ae2 < 1.0)) throw EtaOutOfRange("xi_tilde_linear needs 0 < |eta| < 1");
    // Substituting the closed-form F1, F2 into the linear combination
    // [2j-1+(4j-2)|eta|^2] F1 - (1+|eta|^2) F2 - 2j(2j-1)|eta|^2 collapses it
    // to a single product, which keeps the sign exact where the direct sums
    // cancel to below machine precision (large j|eta|^2):
    //   even: -2j(2j-1) |eta|^2/(1+|eta|^2) gamma^{2j-2} (1+gamma) / (1+gamma^{2j})
    //   odd:  the same magnitude over (1-gamma^{2j}), positive.
    const double gamma = (1.0 - ae2) / (1.0 + ae2);
    const double twoj = 2.0 * j;
    const double c = twoj * (twoj - 1.0) * ae2 / (1.0 + ae2);
    const double core = c * std::pow(gamma, twoj - 2.0) * (1.0 + gamma);
    const double g2j = std::pow(gamma, twoj);
    if (parity == CatParity::Even) return -core / (1.0 + g2j);
    return core / (1.0 - g2j);
}

std::vector<LimitSequencePoint> contraction_limit_scan(double alpha_abs2,
                                                       const std::vector<double>& j_list,
                                                       CatParity parity) {
    if (alpha_abs2 <= 0.0) throw Error("contraction_limit_scan: |alpha|^2 must be > 0");
    const double zeta_target = zeta_cat_closed(alpha_abs2, parity);
    std::vector<LimitSequencePoint> out;
    out.reserve(j_list.size());
    for (double j : j_list) {
        const double twoj = 2.0 * j;
        const double eta_abs = std::sqrt(alpha_abs2 / twoj);
        if (eta_abs >= 1.0)
            throw EtaOutOfRange("contraction_limit_scan: |alpha|^2 = " +
                                std::to_string(alpha_abs2) + " needs 2j > |alpha|^2");
        const auto state = spin_cat_state({j, Complex(eta_abs, 0.0)}, parity);
        const auto eo = spin_squeezing_evenodd(state);
        // factorial moments straight off the amplitudes, as a cross-check handle
        double f1 = 0.0, f2 = 0.0;
        const Vector& c = state.amps();
        for (long n = 0; n < c.size(); ++n) {
            const double p = std::norm(c[n]);
            f1 += p * n;
            f2 += p * n * (n - 1.0);
        }
        LimitSequencePoint pt;
        pt.j = j;
        pt.eta_abs = eta_abs;
        pt.xi = eo.xi;
        pt.zeta_target = zeta_target;
        pt.gap = std::abs(eo.xi - zeta_target);
        pt.mean_excitation_fraction = f1 / twoj;
        pt.f1 = f1;
        pt.f2 = f2;
        out.push_back(pt);
    }
    return out;
}

}  // namespace sqz
