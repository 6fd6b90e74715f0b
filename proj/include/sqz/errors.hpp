#pragma once

#include <stdexcept>
#include <string>

namespace sqz {

// Base class for everything this library throws. Messages name the violated
// precondition so the CLI can surface them verbatim.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Eigendecomposition input lacks the Hermitian flag or fails the symmetry check.
struct NotHermitian : Error {
    using Error::Error;
};

// Two objects live in different bases.
struct BasisMismatch : Error {
    using Error::Error;
};

// Operation needs a tensor-product basis.
struct NotTensorBasis : Error {
    using Error::Error;
};

// A Fock cutoff is too small for the requested state or the evolution leaked
// norm past the monitor threshold. Carries the measured leak.
struct TruncationTooSmall : Error {
    double leak;
    TruncationTooSmall(const std::string& msg, double leak_) : Error(msg), leak(leak_) {}
};

// The odd cat state at alpha = 0 is 0/0 and stays undefined.
struct OddCatAtZero : Error {
    using Error::Error;
};

// Spin coherent parameter outside 0 < |eta| < 1.
struct EtaOutOfRange : Error {
    using Error::Error;
};

// |<S>| is too small to define a mean-spin axis.
struct DegenerateMeanSpin : Error {
    using Error::Error;
};

// The even/odd shortcut needs <S_+> = 0.
struct MeanSpinNotAxial : Error {
    using Error::Error;
};

// Phase-space grids being compared do not share an axis.
struct AxisMismatch : Error {
    using Error::Error;
};

}  // namespace sqz
