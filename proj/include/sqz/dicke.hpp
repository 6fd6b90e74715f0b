#pragma once

#include <memory>
#include <vector>

#include "sqz/qstates.hpp"

namespace sqz {

struct DickeConfig {
    int n_atoms = 1;           // N; the collective spin is j = N/2
    Complex alpha0 = 0.7995;   // initial even-cat amplitude of the field
    double lambda = 1.0;       // coupling; all times are reported as tau = lambda * t
    std::vector<double> tau_grid;
    int n_max = -1;            // photon cutoff; negative selects fock_cutoff_for(|alpha0|) + N
    bool use_blocks = true;    // diagonalize per total-excitation block instead of the full matrix
};

struct DickeRow {
    double tau;
    double zeta_field;
    double xi_atoms;
    double xi_prime_atoms;  // NaN when |<S_z>| <= 1e-8
    double parity;          // <(-1)^{N + a^dag a}>
    double total_excitation;
    double norm;
    // Not part of the CSV schema; kept so the odd-operator-vanishing invariant
    // is checkable without re-deriving states.
    double abs_a;
    double abs_s_minus;
};

struct DickeRun {
    DickeConfig config;  // with the resolved n_max
    std::vector<DickeRow> rows;
};

// Resonant interaction-picture evolution of |0>_j (x) |alpha0>_+ under
// H_I = (lambda/sqrt(2j)) (S_+ a + S_- a^dag).
//
// Total excitation E = N + a^dag a is conserved even on the truncated space,
// so the propagator factorizes over E blocks; each block is a real symmetric
// tridiagonal matrix diagonalized once and reused for every tau. Since
// tau = lambda t, lambda cancels from every row.
class DickeEvolver {
public:
    explicit DickeEvolver(DickeConfig config);

    const DickeConfig& config() const { return config_; }
    const BasisDescriptor& basis() const { return basis_; }

    StateVector state_at(double tau) const;
    DickeRow row_at(double tau) const;  // TruncationTooSmall if |norm - 1| > 1e-9

private:
    Vector raw_state(double tau) const;

    DickeConfig config_;
    BasisDescriptor basis_;
    double j_;
    int fock_dim_;

    struct Block {
        int excitation;
        int na_lo;
        Eigen::VectorXd evals;
        Eigen::MatrixXd evecs;
        Vector w0;  // evecs^T * initial block amplitudes
    };
    std::vector<Block> blocks_;

    // full-matrix path (use_blocks = false)
    std::shared_ptr<const EigenSystem> full_;
    Vector full_w0_;
};

// H_I as an explicit matrix on Tensor(Dicke(N/2), Fock(n_max)).
OperatorMatrix build_hamiltonian(const DickeConfig& config);

DickeRun evolve(const DickeConfig& config);

struct SwapRow {
    double tau;
    double zeta_a;  // light mode (right factor)
    double zeta_b;  // contracted atomic mode (left factor)
};

// Two-mode reference H_eff = b^dag a + b a^dag (the N -> infinity contraction
// of H_I): mode b starts in vacuum, mode a in the even cat. At tau = pi/2 the
// modes are swapped up to local phases, so zeta_b(pi/2) = zeta_a(0).
std::vector<SwapRow> swap_reference(Complex alpha0, int n_max,
                                    const std::vector<double>& tau_grid);

struct TransferMetrics {
    double xi_min;
    double tau_at_min;       // smallest tau on ties
    double zeta_dip_depth;   // depth of the deepest interior dip of zeta(tau), 0 if none
};

// Requires the run to cover [0, pi].
TransferMetrics transfer_metrics(const DickeRun& run);

}  // namespace sqz
