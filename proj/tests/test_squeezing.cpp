#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "sqz/analytic.hpp"
#include "sqz/squeezing.hpp"
#include "testutil.hpp"

using sqz::BasisDescriptor;
using sqz::CatParity;
using sqz::Complex;
using sqz::StateVector;
using sqz::Vector;

namespace {

// Smallest in-plane spin variance by brute force over the perpendicular angle.
double min_perp_variance(const StateVector& st, const Eigen::Vector3d& mean_spin) {
    const double j = st.basis().j();
    const auto ops = sqz::spin_ops(j);
    const Eigen::Vector3d m = mean_spin.normalized();
    Eigen::Vector3d seed = std::abs(m.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                 : Eigen::Vector3d::UnitY();
    const Eigen::Vector3d n1 = m.cross(seed).normalized();
    const Eigen::Vector3d n2 = m.cross(n1);
    const int samples = 3600;
    std::vector<double> var(samples);
    int arg = 0;
    for (int k = 0; k < samples; ++k) {
        const double phi = std::numbers::pi * k / samples;
        const Eigen::Vector3d n = std::cos(phi) * n1 + std::sin(phi) * n2;
        const sqz::Matrix sn =
            n.x() * ops.s_x.mat() + n.y() * ops.s_y.mat() + n.z() * ops.s_z.mat();
        const Vector snpsi = sn * st.amps();
        var[k] = snpsi.squaredNorm();
        if (var[k] < var[arg]) arg = k;
    }
    // The sampled minimum is off by O(step^2); a parabola through the argmin
    // and its neighbours (the curve is smooth and pi-periodic) removes that.
    const double y0 = var[(arg + samples - 1) % samples];
    const double y1 = var[arg];
    const double y2 = var[(arg + 1) % samples];
    const double denom = y0 - 2.0 * y1 + y2;
    if (denom <= 0.0) return y1;
    return y1 - (y2 - y0) * (y2 - y0) / (8.0 * denom);
}

}  // namespace

TEST_CASE("vacuum is the squeezing reference point") {
    Vector amps = Vector::Zero(17);
    amps[0] = 1.0;
    const StateVector vac(BasisDescriptor::fock(16), amps);
    const auto ps = sqz::principal_squeezing(vac);
    CHECK(ps.zeta == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ps.theta_star == doctest::Approx(0.0));
    CHECK(ps.zeta_tilde == doctest::Approx(0.0));
}

TEST_CASE("even cat at the optimum amplitude") {
    const double alpha = 0.7995;
    const auto cat = sqz::cat_state(alpha, CatParity::Even, 16);
    const auto ps = sqz::principal_squeezing(cat);
    CHECK(ps.zeta == doctest::Approx(0.4431).epsilon(5e-4));
    CHECK(std::abs(ps.zeta - sqz::zeta_cat_closed(alpha * alpha, CatParity::Even)) <= 1e-9);
    // real alpha squeezes the P quadrature
    CHECK(ps.theta_star == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
    CHECK(ps.zeta_tilde < 0.0);
}

TEST_CASE("odd cat antisqueezes") {
    const auto cat = sqz::cat_state(1.0, CatParity::Odd, 16);
    const auto ps = sqz::principal_squeezing(cat);
    // 1 + 2 s (coth s - 1) at s = 1
    const double coth1 = 1.0 / std::tanh(1.0);
    CHECK(std::abs(ps.zeta - (1.0 + 2.0 * (coth1 - 1.0))) <= 1e-9);
    CHECK(ps.zeta > 1.0);
    CHECK(std::abs(ps.zeta - sqz::zeta_cat_closed(1.0, CatParity::Odd)) <= 1e-9);
}

TEST_CASE("closed-form zeta equals the theta-scan on assorted states") {
    std::mt19937_64 gen(314);
    const auto basis = BasisDescriptor::fock(12);
    for (int rep = 0; rep < 8; ++rep) {
        // random vectors fill every level, so give them headroom above the cutoff
        const auto st = testutil::pad_fock(testutil::random_state(basis, gen), 4);
        const auto ps = sqz::principal_squeezing(st);
        CHECK(std::abs(ps.zeta - sqz::min_variance_theta_scan(st)) <= 1e-10);
        CHECK(std::abs(ps.zeta - sqz::variance_xtheta(st, ps.theta_star)) <= 1e-10);
        CHECK(ps.theta_star >= 0.0);
        CHECK(ps.theta_star < std::numbers::pi);
    }
    const auto cat = sqz::cat_state(Complex(0.5, 0.6), CatParity::Even, 16);
    CHECK(std::abs(sqz::principal_squeezing(cat).zeta - sqz::min_variance_theta_scan(cat)) <=
          1e-10);
}

TEST_CASE("zeta is displacement invariant") {
    std::mt19937_64 gen(271);
    const auto basis = BasisDescriptor::fock(10);
    for (int rep = 0; rep < 6; ++rep) {
        const auto st = testutil::pad_fock(testutil::random_state(basis, gen), 16);
        const Complex alpha(testutil::gauss(gen) * 0.5, testutil::gauss(gen) * 0.5);
        const auto moved = sqz::apply(sqz::displacement(alpha, st.basis().n_max()), st);
        CHECK(std::abs(sqz::principal_squeezing(st).zeta -
                       sqz::principal_squeezing(moved).zeta) <= 1e-9);
    }
}

TEST_CASE("frame normalization for boson states") {
    const auto cat = sqz::cat_state(0.7995, CatParity::Even, 20);
    const auto moved = sqz::apply(sqz::displacement(Complex(0.3, -0.4), 20), cat);
    const auto back = sqz::normalize_frame_boson(moved);
    const auto ops = sqz::boson_ops(20);
    const Complex mean_a = (back.amps().adjoint() * ops.a.mat() * back.amps())(0, 0);
    CHECK(std::abs(mean_a) <= 1e-9);
    CHECK(std::abs(sqz::principal_squeezing(back).zeta - sqz::principal_squeezing(moved).zeta) <=
          1e-9);
}

TEST_CASE("kitagawa parameter") {
    SUBCASE("spin-1/2 pure states are never squeezed") {
        std::mt19937_64 gen(5);
        for (int rep = 0; rep < 5; ++rep) {
            const auto st = testutil::random_state(BasisDescriptor::dicke(0.5), gen);
            const auto kr = sqz::spin_squeezing_kitagawa(st);
            CHECK(kr.xi == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    SUBCASE("spin coherent states sit at the standard quantum limit") {
        const auto st = sqz::spin_coherent_state({3.0, Complex(0.35, 0.2)});
        const auto kr = sqz::spin_squeezing_kitagawa(st);
        CHECK(kr.xi == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(kr.mean_spin.norm() == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(std::abs(kr.n_perp_star.dot(kr.mean_spin)) <= 1e-9);
        CHECK(kr.n_perp_star.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("matches the brute-force perpendicular minimum") {
        std::mt19937_64 gen(17);
        for (const double j : {1.0, 2.5, 4.0}) {
            const auto st = testutil::random_state(BasisDescriptor::dicke(j), gen);
            const auto kr = sqz::spin_squeezing_kitagawa(st);
            const double brute = 2.0 * min_perp_variance(st, kr.mean_spin) / j;
            CHECK(std::abs(kr.xi - brute) <= 1e-9);
        }
    }

    SUBCASE("degenerate mean spin is rejected") {
        // |0> + |2j> at j=1 has <S> = 0
        Vector amps = Vector::Zero(3);
        amps[0] = amps[2] = 1.0;
        const StateVector st(BasisDescriptor::dicke(1.0), amps);
        CHECK_THROWS_AS(sqz::spin_squeezing_kitagawa(st), sqz::DegenerateMeanSpin);
    }

    SUBCASE("density-matrix overload agrees on pure states") {
        std::mt19937_64 gen(23);
        const auto st = testutil::random_state(BasisDescriptor::dicke(2.0), gen);
        const sqz::Matrix proj = st.amps() * st.amps().adjoint();
        const auto rho = sqz::OperatorMatrix::hermitian(st.basis(), proj);
        CHECK(std::abs(sqz::spin_squeezing_kitagawa(st).xi -
                       sqz::spin_squeezing_kitagawa(rho).xi) <= 1e-12);
    }
}

TEST_CASE("xi is rotation invariant") {
    std::mt19937_64 gen(1234);
    const double j = 4.0;
    for (int rep = 0; rep < 6; ++rep) {
        const auto st = testutil::random_state(BasisDescriptor::dicke(j), gen);
        const double theta = testutil::uniform(gen) * std::numbers::pi;
        const double phi = testutil::uniform(gen) * 2.0 * std::numbers::pi;
        const auto rotated = sqz::apply(sqz::rotation(theta, phi, j), st);
        CHECK(std::abs(sqz::spin_squeezing_kitagawa(st).xi -
                       sqz::spin_squeezing_kitagawa(rotated).xi) <= 1e-9);
    }
}

TEST_CASE("even/odd shortcut") {
    SUBCASE("even spin cat j=1 eta=0.5 by hand") {
        const auto st = sqz::spin_cat_state({1.0, 0.5}, CatParity::Even);
        const auto eo = sqz::spin_squeezing_evenodd(st);
        CHECK(eo.xi == doctest::Approx(9.0 / 17.0).epsilon(1e-12));
        CHECK(eo.xi_tilde == doctest::Approx(-8.0 / 17.0).epsilon(1e-12));
        CHECK(eo.xi == doctest::Approx(1.0 + eo.xi_tilde / 1.0).epsilon(1e-14));
    }

    SUBCASE("requires an axial mean spin") {
        const auto scs = sqz::spin_coherent_state({2.0, 0.4});
        CHECK_THROWS_AS(sqz::spin_squeezing_evenodd(scs), sqz::MeanSpinNotAxial);
    }

    SUBCASE("agrees with kitagawa on random parity eigenstates") {
        std::mt19937_64 gen(777);
        for (const double j : {2.0, 3.5, 6.0}) {
            const long d = long(2 * j) + 1;
            Vector amps = Vector::Zero(d);
            for (long n = 0; n < d; n += 2)
                amps[n] = Complex(testutil::gauss(gen), testutil::gauss(gen));
            const StateVector st(BasisDescriptor::dicke(j), amps);
            const auto eo = sqz::spin_squeezing_evenodd(st);
            const auto kr = sqz::spin_squeezing_kitagawa(st);
            CHECK(std::abs(eo.xi - kr.xi) <= 1e-10);
        }
    }
}

TEST_CASE("wineland parameter") {
    SUBCASE("spin coherent states give exactly one") {
        const auto scs = sqz::spin_coherent_state({2.0, 0.3});
        CHECK(sqz::spin_squeezing_wineland(scs) == doctest::Approx(1.0).epsilon(1e-10));
    }

    SUBCASE("even spin cat j=1 eta=0.5: xi' = (9/17) (17/15)^2") {
        const auto st = sqz::spin_cat_state({1.0, 0.5}, CatParity::Even);
        CHECK(sqz::spin_squeezing_wineland(st) == doctest::Approx(0.68).epsilon(1e-12));
    }

    SUBCASE("never better than kitagawa") {
        std::mt19937_64 gen(31);
        for (int rep = 0; rep < 5; ++rep) {
            const auto st = testutil::random_state(BasisDescriptor::dicke(3.0), gen);
            CHECK(sqz::spin_squeezing_wineland(st) >=
                  sqz::spin_squeezing_kitagawa(st).xi - 1e-12);
        }
    }
}

TEST_CASE("frame normalization for spin states") {
    const auto cat = sqz::spin_cat_state({2.5, Complex(0.3, 0.0)}, CatParity::Even);
    const auto rotated = sqz::apply(sqz::rotation(0.8, 1.9, 2.5), cat);
    const auto back = sqz::normalize_frame_spin(rotated);
    const auto ops = sqz::spin_ops(2.5);
    CHECK(std::abs(sqz::expval(back, ops.s_x)) <= 1e-9);
    CHECK(std::abs(sqz::expval(back, ops.s_y)) <= 1e-9);
    CHECK(sqz::expval(back, ops.s_z).real() < 0.0);  // ground-dominated convention
    CHECK(std::abs(sqz::spin_squeezing_kitagawa(back).xi -
                   sqz::spin_squeezing_kitagawa(rotated).xi) <= 1e-9);
}
