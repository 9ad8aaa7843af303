#pragma once

#include <string>
#include <vector>

#include "detscheme/graded.hpp"

namespace detscheme {

enum class ComplexKind { EagonNorthcott, BuchsbaumRim, Koszul, Custom };

std::string to_string(ComplexKind k);

/// F_0 <- F_1 <- ... <- F_len; differential(i) : F_i -> F_{i-1}, 1 <= i <= len.
class FreeComplex {
public:
    FreeComplex() = default;
    /// Checks module/differential shapes; throws InputError on mismatch.
    FreeComplex(std::vector<HomogeneousMatrix> differentials, ComplexKind kind);

    int length() const { return static_cast<int>(differentials_.size()); }
    const GradedFreeModule& module(int i) const;
    const HomogeneousMatrix& differential(int i) const { return differentials_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<HomogeneousMatrix>& differentials() const { return differentials_; }
    ComplexKind kind() const { return kind_; }
    std::vector<int> ranks() const;
    /// Copy with differential i replaced (mutation tests).
    FreeComplex with_differential(int i, HomogeneousMatrix d) const;

private:
    std::vector<HomogeneousMatrix> differentials_;
    ComplexKind kind_ = ComplexKind::Custom;
};

}  // namespace detscheme
