#pragma once

#include <memory>
#include <string>

#include "sqz/errors.hpp"

namespace sqz {

// Describes the Hilbert space a vector or matrix lives in.
//
// Fock(n_max) is a truncated boson mode spanned by |0..n_max>. Dicke(j) holds
// the 2j+1 excitation states |n>_j of a spin-j system, n being the eigenvalue
// of N = S_z + j. Tensor(left, right) is a product space; the LEFT factor owns
// the slow (outer) index, so joint index = i_left * right.dim + i_right.
class BasisDescriptor {
public:
    enum class Kind { Fock, Dicke, Tensor };

    static BasisDescriptor fock(int n_max);
    static BasisDescriptor dicke(double j);
    static BasisDescriptor tensor(const BasisDescriptor& left, const BasisDescriptor& right);

    Kind kind() const { return kind_; }
    long dim() const { return dim_; }

    int n_max() const;                    // Fock only
    double j() const;                     // Dicke only
    const BasisDescriptor& left() const;  // Tensor only
    const BasisDescriptor& right() const; // Tensor only

    bool operator==(const BasisDescriptor& other) const;
    bool operator!=(const BasisDescriptor& other) const { return !(*this == other); }

    std::string str() const;

private:
    BasisDescriptor() = default;

    Kind kind_ = Kind::Fock;
    long dim_ = 0;
    int n_max_ = -1;
    double j_ = -1.0;
    std::shared_ptr<const BasisDescriptor> left_, right_;
};

}  // namespace sqz
