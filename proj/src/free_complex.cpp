#include "detscheme/free_complex.hpp"

#include "detscheme/errors.hpp"

namespace detscheme {

std::string to_string(ComplexKind k) {
    switch (k) {
    case ComplexKind::EagonNorthcott: return "EN";
    case ComplexKind::BuchsbaumRim: return "BR";
    case ComplexKind::Koszul: return "Koszul";
    case ComplexKind::Custom: return "custom";
    }
    return "?";
}

FreeComplex::FreeComplex(std::vector<HomogeneousMatrix> differentials, ComplexKind kind)
    : differentials_(std::move(differentials)), kind_(kind) {
    if (differentials_.empty()) throw InputError("complex needs at least one differential");
    for (std::size_t i = 1; i < differentials_.size(); ++i)
        if (!(differentials_[i].target() == differentials_[i - 1].source()))
            throw InputError("differential " + std::to_string(i + 1) + " does not land in the source of differential " +
                             std::to_string(i));
}

const GradedFreeModule& FreeComplex::module(int i) const {
    if (i < 0 || i > length()) throw InputError("complex position out of range");
    return i == 0 ? differentials_.front().target() : differentials_[static_cast<std::size_t>(i - 1)].source();
}

std::vector<int> FreeComplex::ranks() const {
    std::vector<int> r;
    for (int i = 0; i <= length(); ++i) r.push_back(module(i).rank());
    return r;
}

FreeComplex FreeComplex::with_differential(int i, HomogeneousMatrix d) const {
    auto ds = differentials_;
    ds.at(static_cast<std::size_t>(i - 1)) = std::move(d);
    return FreeComplex(std::move(ds), kind_);
}

}  // namespace detscheme
