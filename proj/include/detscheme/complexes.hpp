#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detscheme/determinantal.hpp"
#include "detscheme/free_complex.hpp"

namespace detscheme {

/// Eagon-Northcott complex of a g x f matrix (g <= f):
/// R <- ∧^g F ⊗ ∧^g G* <- ... <- ∧^f F ⊗ D_{f-g}(G*) ⊗ ∧^g G*.
/// Generators e_J ⊗ y^α (J increasing, α a multiset of rows) in degree
/// Σ_J c - Σ b - Σ α_k b_k. Over F_p requires p > f - g.
FreeComplex eagon_northcott(const HomogeneousMatrix& phi);
FreeComplex eagon_northcott(const DeterminantalPresentation& p);

/// Buchsbaum-Rim complex: G <- F <- ∧^{g+1} F ⊗ ∧^g G* <- ... ending in
/// ∧^f F ⊗ D_{f-g-1}(G*) ⊗ ∧^g G*. g = 0 gives 0 <- F <- F.
FreeComplex buchsbaum_rim(const HomogeneousMatrix& phi);
FreeComplex buchsbaum_rim(const DeterminantalPresentation& p);

/// Koszul complex on homogeneous forms (EN of a 1 x k matrix).
FreeComplex koszul(const std::vector<Polynomial>& forms);

/// d_i ∘ d_{i+1} = 0 as polynomial matrices for every i.
bool verify_complex(const FreeComplex& c);

struct MapRank {
    int rank = 0;
    /// Rows/columns of a nonzero rank x rank minor (empty when rank 0).
    std::vector<int> rows, cols;
};

/// Largest s with I_s(phi) != 0. Seeded evaluations give a candidate
/// exhibited by a nonzero minor; all larger minors are then checked to vanish.
MapRank rank_of_map(const HomogeneousMatrix& phi, std::uint64_t seed = 1);

struct AcyclicityEntry {
    int position = 0;
    int expected_rank = 0;
    int computed_rank = 0;
    Height minor_height = Height::infinite();
    bool rank_ok = false;
    bool height_ok = false;
    bool pass() const { return rank_ok && height_ok; }
};

struct AcyclicityReport {
    std::vector<AcyclicityEntry> entries;
    bool pass = true;
    std::optional<int> first_failure;
};

/// Rank/grade criterion with grade = height (R is Cohen-Macaulay).
AcyclicityReport buchsbaum_eisenbud(const FreeComplex& c, std::uint64_t seed = 1);

/// (position, degree) -> number of generators of that degree.
using BettiTable = std::map<std::pair<int, int>, int>;

/// Throws InputError when a differential has a nonzero constant entry.
BettiTable betti_table(const FreeComplex& c);
/// Σ_i (-1)^i Σ_j β_ij dim R_{d-j}
long betti_hilbert(const BettiTable& b, int d, std::size_t nvars);
std::vector<int> betti_ranks(const BettiTable& b);

/// Last EN rank; throws InputError on non-standard input and
/// VerificationError when it differs from C(r+t-1, r).
int cm_type(const DeterminantalPresentation& p);

struct AnnihilatorReport {
    bool contains_minors = true;  // I·G ⊆ im Φ
    bool inside_minors = true;    // ann ⊆ I, degreewise
    std::optional<int> failed_degree;
    std::string failed_direction;
    /// per degree: dim {f : f G ⊆ im Φ}_d and dim I_d
    std::vector<std::pair<long, long>> dims;
    bool pass() const { return contains_minors && inside_minors; }
};

/// ann(coker Φ) = I_t(Φ) in degrees 0..d_max. Throws InputError on
/// non-standard input.
AnnihilatorReport verify_annihilator(const DeterminantalPresentation& p, int d_max);

struct CanonicalModule {
    /// ω = coker(presentation): dual of the last EN differential, twisted by -(n+1).
    HomogeneousMatrix presentation;
    /// ω ≅ M_X(e) with M_X = coker Φ, matched on HF over the checked window.
    std::optional<int> shift;
    /// All shifts in the search window that match.
    std::vector<int> matching_shifts;
    int checked_up_to = 0;
    int minimal_generators = 0;
    bool cyclic() const { return minimal_generators == 1; }
};

/// Codim-2 only (standard, r = 1); throws InputError otherwise.
CanonicalModule canonical_module(const DeterminantalPresentation& p, int d_max = 10);

/// Minimal number of generators of coker psi (target rank minus rank of the
/// constant part).
int cokernel_minimal_generators(const HomogeneousMatrix& psi);

}  // namespace detscheme
