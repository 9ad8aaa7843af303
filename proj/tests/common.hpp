#pragma once

// Shared fixtures for the test binaries.

#include <string>
#include <vector>

#include "detscheme/determinantal.hpp"
#include "detscheme/sampler.hpp"

namespace fixtures {

using namespace detscheme;

inline RingPtr p3(Field f = Field::rationals()) { return PolyRing::create({"x0", "x1", "x2", "x3"}, f); }

inline HomogeneousMatrix mat(const RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Polynomial>> ps;
    for (const auto& row : rows) {
        ps.emplace_back();
        for (const auto& s : row) ps.back().push_back(parse_polynomial(s, r));
    }
    return HomogeneousMatrix::infer(r, ps);
}

inline IdealBasis ideal(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, r));
    return IdealBasis(r, ps);
}

inline DeterminantalPresentation pres(const RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
    return DeterminantalPresentation(mat(r, rows));
}

// [[x1,x2,x3,0],[0,x1,x2,x3]]: standard, not good
inline DeterminantalPresentation nongood(const RingPtr& r) {
    return pres(r, {{"x1", "x2", "x3", "0"}, {"0", "x1", "x2", "x3"}});
}
// codim-2 curve, good, non-reduced
inline DeterminantalPresentation curve(const RingPtr& r) { return pres(r, {{"x0", "x1", "x2"}, {"0", "x0", "x3"}}); }
// coordinate axes, good, needs a generalized row
inline DeterminantalPresentation axes(const RingPtr& r) { return pres(r, {{"-x3", "x2", "0"}, {"0", "-x2", "x1"}}); }
inline DeterminantalPresentation ci2(const RingPtr& r) { return pres(r, {{"x0", "x1"}}); }
inline DeterminantalPresentation ci3(const RingPtr& r) { return pres(r, {{"x0", "x1", "x2"}}); }

// Seeded 2x4 matrix of random linear forms.
inline DeterminantalPresentation random_2x4(const RingPtr& r, std::uint64_t seed = 2024) {
    Sampler s(r->field(), seed);
    std::vector<std::vector<Polynomial>> rows(2);
    for (auto& row : rows)
        for (int j = 0; j < 4; ++j) row.push_back(s.form(r, 1));
    return DeterminantalPresentation(HomogeneousMatrix(r, GradedFreeModule({0, 0}), GradedFreeModule({1, 1, 1, 1}), rows));
}

}  // namespace fixtures
