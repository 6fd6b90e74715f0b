#include "sqz/basis.hpp"

#include <cmath>
#include <sstream>

namespace sqz {

BasisDescriptor BasisDescriptor::fock(int n_max) {
    if (n_max < 1) throw Error("Fock basis needs n_max >= 1");
    BasisDescriptor b;
    b.kind_ = Kind::Fock;
    b.n_max_ = n_max;
    b.dim_ = static_cast<long>(n_max) + 1;
    return b;
}

BasisDescriptor BasisDescriptor::dicke(double j) {
    const double twoj = 2.0 * j;
    if (j < 0.0 || std::abs(twoj - std::round(twoj)) > 1e-9)
        throw Error("Dicke basis needs a non-negative half-integer j");
    BasisDescriptor b;
    b.kind_ = Kind::Dicke;
    b.j_ = j;
    b.dim_ = static_cast<long>(std::llround(twoj)) + 1;
    return b;
}

BasisDescriptor BasisDescriptor::tensor(const BasisDescriptor& left, const BasisDescriptor& right) {
    BasisDescriptor b;
    b.kind_ = Kind::Tensor;
    b.left_ = std::make_shared<BasisDescriptor>(left);
    b.right_ = std::make_shared<BasisDescriptor>(right);
    b.dim_ = left.dim() * right.dim();
    return b;
}

int BasisDescriptor::n_max() const {
    if (kind_ != Kind::Fock) throw Error("n_max is only defined for a Fock basis, got " + str());
    return n_max_;
}

double BasisDescriptor::j() const {
    if (kind_ != Kind::Dicke) throw Error("j is only defined for a Dicke basis, got " + str());
    return j_;
}

const BasisDescriptor& BasisDescriptor::left() const {
    if (kind_ != Kind::Tensor) throw NotTensorBasis("left factor requested from non-tensor basis " + str());
    return *left_;
}

const BasisDescriptor& BasisDescriptor::right() const {
    if (kind_ != Kind::Tensor) throw NotTensorBasis("right factor requested from non-tensor basis " + str());
    return *right_;
}

bool BasisDescriptor::operator==(const BasisDescriptor& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Fock: return n_max_ == other.n_max_;
        case Kind::Dicke: return j_ == other.j_;
        case Kind::Tensor: return *left_ == *other.left_ && *right_ == *other.right_;
    }
    return false;
}

std::string BasisDescriptor::str() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::Fock:
            out << "Fock(" << n_max_ << ")";
            break;
        case Kind::Dicke:
            out << "Dicke(j=" << j_ << ")";
            break;
        case Kind::Tensor:
            out << left_->str() << " (x) " << right_->str();
            break;
    }
    return out.str();
}

}  // namespace sqz
