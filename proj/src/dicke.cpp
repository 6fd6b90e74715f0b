#include "sqz/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "parallel.hpp"

namespace sqz {

namespace {

int resolve_n_max(const DickeConfig& config) {
    const int rule = fock_cutoff_for(std::abs(config.alpha0));
    if (config.n_max < 0) return rule + config.n_atoms;
    if (config.n_max < rule)
        throw Error("DickeConfig: n_max = " + std::to_string(config.n_max) +
                    " is below the cutoff rule " + std::to_string(rule) + " for alpha0");
    return config.n_max;
}

DickeConfig validated(DickeConfig c) {
    if (c.n_atoms < 1) throw Error("DickeConfig: n_atoms must be >= 1");
    if (!(c.lambda > 0.0)) throw Error("DickeConfig: lambda must be > 0");
    if (c.tau_grid.empty()) throw Error("DickeConfig: tau_grid must be nonempty");
    for (std::size_t i = 1; i < c.tau_grid.size(); ++i)
        if (!(c.tau_grid[i] > c.tau_grid[i - 1]))
            throw Error("DickeConfig: tau_grid must be strictly ascending");
    c.n_max = resolve_n_max(c);
    return c;
}

}  // namespace

OperatorMatrix build_hamiltonian(const DickeConfig& config) {
    DickeConfig c = config;
    if (c.n_atoms < 1) throw Error("DickeConfig: n_atoms must be >= 1");
    // The bare matrix carries no initial state, so an explicit cutoff only
    // needs to span a nonempty Fock space; the tail rule binds in validated().
    if (c.n_max < 0)
        c.n_max = resolve_n_max(c);
    else if (c.n_max < 1)
        throw Error("DickeConfig: n_max must be >= 1");
    const double j = 0.5 * c.n_atoms;
    const auto atoms = spin_ops(j);
    const auto field = boson_ops(c.n_max);
    const auto up = tensor(atoms.s_plus, field.a);
    const auto down = tensor(atoms.s_minus, field.a_dag);
    const Matrix h = (c.lambda / std::sqrt(2.0 * j)) * (up.mat() + down.mat());
    return OperatorMatrix::hermitian(up.basis(), h);
}

DickeEvolver::DickeEvolver(DickeConfig config)
    : config_(validated(std::move(config))),
      basis_(BasisDescriptor::tensor(BasisDescriptor::dicke(0.5 * config_.n_atoms),
                                     BasisDescriptor::fock(config_.n_max))),
      j_(0.5 * config_.n_atoms),
      fock_dim_(config_.n_max + 1) {
    const StateVector cat = cat_state(config_.alpha0, CatParity::Even, config_.n_max);
    Vector c0 = Vector::Zero(basis_.dim());
    c0.segment(0, fock_dim_) = cat.amps();  // atoms start in the ladder ground state

    if (!config_.use_blocks) {
        auto es = eigh(build_hamiltonian(config_));
        full_w0_ = es.eigenvectors.adjoint() * c0;
        full_ = std::make_shared<const EigenSystem>(std::move(es));
        return;
    }

    // The atoms start at the bottom of the ladder, so every populated block
    // has excitation E <= n_max and therefore na_lo = 0; the loop below keeps
    // the general bound anyway.
    const double twoj = 2.0 * j_;
    for (int e = 0; e <= config_.n_max; ++e) {
        const int na_lo = std::max(0, e - config_.n_max);
        const int na_hi = std::min(e, config_.n_atoms);
        const int m = na_hi - na_lo + 1;
        Vector b0(m);
        bool populated = false;
        for (int i = 0; i < m; ++i) {
            const int na = na_lo + i;
            b0[i] = c0[static_cast<long>(na) * fock_dim_ + (e - na)];
            if (b0[i] != Complex(0.0, 0.0)) populated = true;
        }
        if (!populated) continue;
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i + 1 < m; ++i) {
            const int na = na_lo + i;
            const double t = std::sqrt((na + 1.0) * (twoj - na) * (e - na)) / std::sqrt(twoj);
            h(i, i + 1) = t;
            h(i + 1, i) = t;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        if (es.info() != Eigen::Success)
            throw Error("excitation-block diagonalization failed at E = " + std::to_string(e));
        Block blk;
        blk.excitation = e;
        blk.na_lo = na_lo;
        blk.evals = es.eigenvalues();
        blk.evecs = es.eigenvectors();
        const Eigen::VectorXd br = b0.real(), bi = b0.imag();
        blk.w0.resize(m);
        blk.w0.real() = blk.evecs.transpose() * br;
        blk.w0.imag() = blk.evecs.transpose() * bi;
        blocks_.push_back(std::move(blk));
    }
}

Vector DickeEvolver::raw_state(double tau) const {
    Vector psi = Vector::Zero(basis_.dim());
    if (config_.use_blocks) {
        for (const auto& blk : blocks_) {
            const long m = blk.evals.size();
            Vector u(m);
            for (long k = 0; k < m; ++k)
                u[k] = std::polar(1.0, -blk.evals[k] * tau) * blk.w0[k];
            const Eigen::VectorXd ur = u.real(), ui = u.imag();
            const Eigen::VectorXd yr = blk.evecs * ur;
            const Eigen::VectorXd yi = blk.evecs * ui;
            for (long i = 0; i < m; ++i) {
                const long na = blk.na_lo + i;
                const long nf = blk.excitation - na;
                psi[na * fock_dim_ + nf] = Complex(yr[i], yi[i]);
            }
        }
        return psi;
    }
    const double t = tau / config_.lambda;
    const long d = full_w0_.size();
    Vector u(d);
    for (long k = 0; k < d; ++k)
        u[k] = std::polar(1.0, -full_->eigenvalues[k] * t) * full_w0_[k];
    psi = full_->eigenvectors * u;
    return psi;
}

StateVector DickeEvolver::state_at(double tau) const {
    return StateVector(basis_, raw_state(tau));
}

DickeRow DickeEvolver::row_at(double tau) const {
    const Vector psi = raw_state(tau);
    const double twoj = 2.0 * j_;
    const int F = fock_dim_;
    auto idx = [F](long na, long nf) { return na * F + nf; };
    auto r = [twoj](long n) { return std::sqrt(n * (twoj - n + 1.0)); };

    double norm2 = 0.0, nf_mean = 0.0, na_mean = 0.0, na2_mean = 0.0;
    double parity = 0.0, total = 0.0;
    Complex a{0.0, 0.0}, a2{0.0, 0.0}, sm{0.0, 0.0}, sm2{0.0, 0.0};
    for (long na = 0; na <= config_.n_atoms; ++na) {
        for (long nf = 0; nf < F; ++nf) {
            const Complex c = psi[idx(na, nf)];
            const double p = std::norm(c);
            if (p == 0.0) continue;
            norm2 += p;
            nf_mean += p * nf;
            na_mean += p * na;
            na2_mean += p * na * na;
            parity += ((na + nf) % 2 == 0) ? p : -p;
            total += p * (na + nf);
            const Complex cc = std::conj(c);
            if (nf + 1 < F) a += cc * psi[idx(na, nf + 1)] * std::sqrt(nf + 1.0);
            if (nf + 2 < F)
                a2 += cc * psi[idx(na, nf + 2)] * std::sqrt((nf + 1.0) * (nf + 2.0));
            if (na >= 1) sm += std::conj(psi[idx(na - 1, nf)]) * r(na) * c;
            if (na >= 2) sm2 += std::conj(psi[idx(na - 2, nf)]) * r(na) * r(na - 1) * c;
        }
    }
    const double norm = std::sqrt(norm2);
    if (std::abs(norm - 1.0) > 1e-9)
        throw TruncationTooSmall(
            "norm drifted to " + std::to_string(norm) + " at tau = " + std::to_string(tau),
            std::abs(norm - 1.0));
    const double inv = 1.0 / norm2;
    nf_mean *= inv;
    na_mean *= inv;
    na2_mean *= inv;
    parity *= inv;
    total *= inv;
    a *= inv;
    a2 *= inv;
    sm *= inv;
    sm2 *= inv;

    const Complex d = a2 - a * a;
    const double xi_tilde = twoj * na_mean - na2_mean - std::abs(sm2);
    const double xi = 1.0 + xi_tilde / j_;
    const double sz = na_mean - j_;
    double xi_prime = std::numeric_limits<double>::quiet_NaN();
    if (std::abs(sz) > 1e-8) xi_prime = xi * (j_ * j_) / (sz * sz);

    DickeRow row;
    row.tau = tau;
    row.zeta_field = 1.0 + 2.0 * (nf_mean - std::norm(a)) - 2.0 * std::abs(d);
    row.xi_atoms = xi;
    row.xi_prime_atoms = xi_prime;
    row.parity = parity;
    row.total_excitation = total;
    row.norm = norm;
    row.abs_a = std::abs(a);
    row.abs_s_minus = std::abs(sm);
    return row;
}

DickeRun evolve(const DickeConfig& config) {
    const DickeEvolver ev(config);
    DickeRun run;
    run.config = ev.config();
    const auto& grid = run.config.tau_grid;
    run.rows.resize(grid.size());
    detail::parallel_for(static_cast<long>(grid.size()),
                         [&](long i) { run.rows[i] = ev.row_at(grid[i]); });
    return run;
}

std::vector<SwapRow> swap_reference(Complex alpha0, int n_max,
                                    const std::vector<double>& tau_grid) {
    if (tau_grid.empty()) throw Error("swap_reference: tau_grid must be nonempty");
    const int rule = fock_cutoff_for(std::abs(alpha0));
    if (n_max < rule)
        throw Error("swap_reference: n_max = " + std::to_string(n_max) +
                    " is below the cutoff rule " + std::to_string(rule) + " for alpha0");
    const int F = n_max + 1;
    const auto mode = boson_ops(n_max);
    const auto ba = tensor(mode.a_dag, mode.a);   // b^dag a, mode b on the left
    const auto ab = tensor(mode.a, mode.a_dag);
    const auto h = OperatorMatrix::hermitian(ba.basis(), ba.mat() + ab.mat());
    const auto es = eigh(h);

    const StateVector cat = cat_state(alpha0, CatParity::Even, n_max);
    Vector c0 = Vector::Zero(static_cast<long>(F) * F);
    c0.segment(0, F) = cat.amps();  // mode b in vacuum
    const Vector w0 = es.eigenvectors.adjoint() * c0;

    auto idx = [F](long nb, long na) { return nb * F + na; };
    std::vector<SwapRow> rows(tau_grid.size());
    detail::parallel_for(static_cast<long>(tau_grid.size()), [&](long ti) {
        const double tau = tau_grid[ti];
        const long d = w0.size();
        Vector u(d);
        for (long k = 0; k < d; ++k)
            u[k] = std::polar(1.0, -es.eigenvalues[k] * tau) * w0[k];
        const Vector psi = es.eigenvectors * u;

        double norm2 = 0.0, na_mean = 0.0, nb_mean = 0.0;
        Complex am{0.0, 0.0}, a2m{0.0, 0.0}, bm{0.0, 0.0}, b2m{0.0, 0.0};
        for (long nb = 0; nb < F; ++nb) {
            for (long na = 0; na < F; ++na) {
                const Complex c = psi[idx(nb, na)];
                const double p = std::norm(c);
                if (p == 0.0) continue;
                norm2 += p;
                na_mean += p * na;
                nb_mean += p * nb;
                const Complex cc = std::conj(c);
                if (na + 1 < F) am += cc * psi[idx(nb, na + 1)] * std::sqrt(na + 1.0);
                if (na + 2 < F)
                    a2m += cc * psi[idx(nb, na + 2)] * std::sqrt((na + 1.0) * (na + 2.0));
                if (nb + 1 < F) bm += cc * psi[idx(nb + 1, na)] * std::sqrt(nb + 1.0);
                if (nb + 2 < F)
                    b2m += cc * psi[idx(nb + 2, na)] * std::sqrt((nb + 1.0) * (nb + 2.0));
            }
        }
        const double norm = std::sqrt(norm2);
        if (std::abs(norm - 1.0) > 1e-9)
            throw TruncationTooSmall("swap_reference: norm drifted to " + std::to_string(norm),
                                     std::abs(norm - 1.0));
        const double inv = 1.0 / norm2;
        na_mean *= inv;
        nb_mean *= inv;
        am *= inv;
        a2m *= inv;
        bm *= inv;
        b2m *= inv;
        auto zeta = [](double nbar, Complex mean, Complex sq) {
            const Complex dd = sq - mean * mean;
            return 1.0 + 2.0 * (nbar - std::norm(mean)) - 2.0 * std::abs(dd);
        };
        rows[ti] = {tau, zeta(na_mean, am, a2m), zeta(nb_mean, bm, b2m)};
    });
    return rows;
}

TransferMetrics transfer_metrics(const DickeRun& run) {
    const auto& rows = run.rows;
    if (rows.empty()) throw Error("transfer_metrics: run has no rows");
    if (rows.front().tau > 1e-9 || rows.back().tau < std::numbers::pi - 1e-3)
        throw Error("transfer_metrics: run must cover tau in [0, pi]");

    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].xi_atoms < rows[best].xi_atoms) best = i;

    // Deepest interior dip of zeta(tau): a local minimum measured against the
    // lower of the highest shoulders on each side.
    const std::size_t n = rows.size();
    std::vector<double> z(n), pref(n), suff(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = rows[i].zeta_field;
    pref[0] = z[0];
    for (std::size_t i = 1; i < n; ++i) pref[i] = std::max(pref[i - 1], z[i]);
    suff[n - 1] = z[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) suff[i] = std::max(suff[i + 1], z[i]);
    double depth = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (z[i] <= z[i - 1] && z[i] <= z[i + 1])
            depth = std::max(depth, std::min(pref[i], suff[i]) - z[i]);

    return {rows[best].xi_atoms, rows[best].tau, depth};
}

}  // namespace sqz
