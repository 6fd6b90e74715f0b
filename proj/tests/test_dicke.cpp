#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "sqz/analytic.hpp"
#include "sqz/dicke.hpp"
#include "sqz/squeezing.hpp"
#include "testutil.hpp"

using sqz::BasisDescriptor;
using sqz::CatParity;
using sqz::Complex;
using sqz::DickeConfig;
using sqz::Matrix;
using sqz::StateVector;
using sqz::Vector;

namespace {

constexpr double kPi = std::numbers::pi;

DickeConfig base_config(int n_atoms, std::vector<double> taus) {
    DickeConfig cfg;
    cfg.n_atoms = n_atoms;
    cfg.tau_grid = std::move(taus);
    return cfg;
}

// number and parity operators on the joint basis, for conservation checks
Matrix joint_diagonal(int n_atoms, int n_max, bool parity) {
    const long ad = n_atoms + 1, fd = n_max + 1;
    Matrix m = Matrix::Zero(ad * fd, ad * fd);
    for (long na = 0; na < ad; ++na)
        for (long nf = 0; nf < fd; ++nf) {
            const long i = na * fd + nf;
            m(i, i) = parity ? ((na + nf) % 2 == 0 ? 1.0 : -1.0) : double(na + nf);
        }
    return m;
}

}  // namespace

TEST_CASE("hamiltonian for one atom and one photon by hand") {
    DickeConfig cfg = base_config(1, {0.0});
    cfg.n_max = 1;
    cfg.lambda = 1.3;
    const auto h = sqz::build_hamiltonian(cfg);
    REQUIRE(h.basis().dim() == 4);
    // basis order |na, nf>: |0,0>, |0,1>, |1,0>, |1,1>; 2j = 1 so the
    // prefactor is lambda itself and the only coupling is |0,1> <-> |1,0>
    Matrix expect = Matrix::Zero(4, 4);
    expect(2, 1) = expect(1, 2) = 1.3;
    CHECK((h.mat() - expect).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(h.is_hermitian());
}

TEST_CASE("hamiltonian commutes with parity and total excitation") {
    DickeConfig cfg = base_config(3, {0.0});
    cfg.n_max = 5;
    const auto h = sqz::build_hamiltonian(cfg);
    const Matrix parity = joint_diagonal(3, 5, true);
    const Matrix excitation = joint_diagonal(3, 5, false);
    CHECK((h.mat() * parity - parity * h.mat()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((h.mat() * excitation - excitation * h.mat()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("cutoff resolution") {
    // negative n_max selects the coherent-tail rule plus one level per atom
    DickeConfig cfg = base_config(4, {0.0});
    const auto run = sqz::evolve(cfg);
    CHECK(run.config.n_max == sqz::fock_cutoff_for(0.7995) + 4);

    DickeConfig toosmall = base_config(4, {0.0});
    toosmall.n_max = 3;
    CHECK_THROWS_AS(sqz::evolve(toosmall), sqz::Error);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(sqz::evolve(base_config(0, {0.0})), sqz::Error);
    CHECK_THROWS_AS(sqz::evolve(base_config(2, {})), sqz::Error);
    CHECK_THROWS_AS(sqz::evolve(base_config(2, {0.0, 0.5, 0.5})), sqz::Error);
    CHECK_THROWS_AS(sqz::evolve(base_config(2, {0.5, 0.0})), sqz::Error);
    DickeConfig bad_lambda = base_config(2, {0.0});
    bad_lambda.lambda = 0.0;
    CHECK_THROWS_AS(sqz::evolve(bad_lambda), sqz::Error);
}

TEST_CASE("initial row reproduces the uncoupled product state") {
    const auto run = sqz::evolve(base_config(6, {0.0}));
    const auto& r0 = run.rows.front();
    const double s = 0.7995 * 0.7995;
    CHECK(r0.zeta_field ==
          doctest::Approx(sqz::zeta_cat_closed(s, CatParity::Even)).epsilon(1e-9));
    CHECK(r0.xi_atoms == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r0.xi_prime_atoms == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r0.parity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r0.total_excitation == doctest::Approx(s * std::tanh(s)).epsilon(1e-9));
    CHECK(r0.norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single atom never develops spin squeezing") {
    // for j = 1/2 both N^2 = N and S_-^2 = 0, so xi == 1 identically
    const auto run = sqz::evolve(base_config(1, testutil::linspace(0.0, kPi, 41)));
    for (const auto& r : run.rows) CHECK(r.xi_atoms == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("conserved quantities stay put along the evolution") {
    const auto run = sqz::evolve(base_config(10, testutil::linspace(0.0, kPi, 81)));
    const double e0 = run.rows.front().total_excitation;
    for (const auto& r : run.rows) {
        CHECK(std::abs(r.norm - 1.0) <= 1e-12);  // complete blocks: exactly unitary
        CHECK(std::abs(r.parity - 1.0) <= 1e-9);
        CHECK(std::abs(r.total_excitation - e0) <= 1e-9);
        CHECK(r.abs_a <= 1e-10);        // odd under the conserved parity
        CHECK(r.abs_s_minus <= 1e-10);
    }
}

TEST_CASE("lambda rescales time out of the picture") {
    const auto taus = testutil::linspace(0.0, kPi, 21);
    DickeConfig slow = base_config(4, taus);
    DickeConfig fast = base_config(4, taus);
    fast.lambda = 3.7;
    const auto a = sqz::evolve(slow), b = sqz::evolve(fast);
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(std::abs(a.rows[i].zeta_field - b.rows[i].zeta_field) <= 1e-10);
        CHECK(std::abs(a.rows[i].xi_atoms - b.rows[i].xi_atoms) <= 1e-10);
    }
}

TEST_CASE("block evolution matches the full-matrix path") {
    for (const int n_atoms : {2, 6}) {
        const auto taus = testutil::linspace(0.0, kPi, 17);
        DickeConfig blocks = base_config(n_atoms, taus);
        DickeConfig full = base_config(n_atoms, taus);
        full.use_blocks = false;
        full.lambda = 1.4;  // exercises the t = tau / lambda conversion
        const auto a = sqz::evolve(blocks), b = sqz::evolve(full);
        for (size_t i = 0; i < a.rows.size(); ++i) {
            CHECK(std::abs(a.rows[i].zeta_field - b.rows[i].zeta_field) <= 1e-9);
            CHECK(std::abs(a.rows[i].xi_atoms - b.rows[i].xi_atoms) <= 1e-9);
            CHECK(std::abs(a.rows[i].parity - b.rows[i].parity) <= 1e-9);
        }
    }
}

TEST_CASE("row xi matches kitagawa on the reduced atomic state") {
    sqz::DickeEvolver ev(base_config(4, {0.0, kPi}));
    const auto ops = sqz::spin_ops(2.0);
    for (const double tau : {0.4, 1.1, 2.9}) {
        const auto row = ev.row_at(tau);
        const auto rho = sqz::partial_trace(ev.state_at(tau), sqz::Side::Left);
        const double sz = sqz::expval(rho, ops.s_z).real();
        REQUIRE(std::abs(sz) > 1e-6);  // mean spin well defined at these taus
        const auto kr = sqz::spin_squeezing_kitagawa(rho);
        CHECK(std::abs(row.xi_atoms - kr.xi) <= 1e-9);
        const double expected_prime = kr.xi / ((sz / 2.0) * (sz / 2.0));
        CHECK(row.xi_prime_atoms == doctest::Approx(expected_prime).epsilon(1e-9));
    }
}

TEST_CASE("swap reference") {
    const auto taus = testutil::linspace(0.0, kPi, 201);
    const auto rows = sqz::swap_reference(0.7995, 16, taus);
    REQUIRE(rows.size() == taus.size());
    const double z0 = rows.front().zeta_a;
    CHECK(z0 == doctest::Approx(0.443070915371).epsilon(1e-9));
    CHECK(rows.front().zeta_b == doctest::Approx(1.0).epsilon(1e-10));

    // perfect transfer at tau = pi/2, revival at tau = pi
    CHECK(std::abs(rows[100].zeta_b - z0) <= 1e-8);
    CHECK(std::abs(rows[100].zeta_a - 1.0) <= 1e-8);
    CHECK(std::abs(rows[200].zeta_a - z0) <= 1e-8);
}

TEST_CASE("transfer metrics") {
    SUBCASE("single atom: flat xi picks the first grid point") {
        const auto run = sqz::evolve(base_config(1, testutil::linspace(0.0, kPi, 41)));
        const auto tm = sqz::transfer_metrics(run);
        CHECK(tm.xi_min == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(tm.tau_at_min == doctest::Approx(0.0));
    }

    SUBCASE("ten atoms: frozen regression values") {
        const auto run = sqz::evolve(base_config(10, testutil::linspace(0.0, kPi, 201)));
        const auto tm = sqz::transfer_metrics(run);
        CHECK(tm.xi_min == doctest::Approx(0.404755491977).epsilon(1e-6));
        CHECK(tm.tau_at_min == doctest::Approx(1.63362817987).epsilon(1e-6));
        // zeta rises above its endpoints mid-transfer and comes back: a
        // genuine interior dip of squeezing quality
        CHECK(tm.zeta_dip_depth == doctest::Approx(0.0957817973817).epsilon(1e-6));
    }

    SUBCASE("requires coverage of [0, pi]") {
        const auto partial = sqz::evolve(base_config(2, testutil::linspace(0.0, 2.0, 21)));
        CHECK_THROWS_AS(sqz::transfer_metrics(partial), sqz::Error);
        const auto late = sqz::evolve(base_config(2, testutil::linspace(0.5, kPi, 21)));
        CHECK_THROWS_AS(sqz::transfer_metrics(late), sqz::Error);
    }
}

TEST_CASE("atomic squeezing converges to the swap curve as N grows") {
    const auto taus = testutil::linspace(0.0, kPi, 101);
    const auto swap = sqz::swap_reference(0.7995, 16, taus);
    double prev_gap = 1e300;
    for (const int n_atoms : {10, 20, 40}) {
        const auto run = sqz::evolve(base_config(n_atoms, taus));
        double sup = 0.0;
        for (size_t i = 0; i < taus.size(); ++i)
            sup = std::max(sup, std::abs(run.rows[i].xi_atoms - swap[i].zeta_b));
        CHECK(sup < prev_gap);
        prev_gap = sup;
    }
    CHECK(prev_gap <= 0.02);  // measured 0.016 at N = 40
}
