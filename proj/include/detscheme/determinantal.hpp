#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "detscheme/graded.hpp"
#include "detscheme/groebner.hpp"

namespace detscheme {

/// Determinants of square submatrices, memoized on (row set, column set).
/// Up to 32 rows and 32 columns.
class MinorCache {
public:
    explicit MinorCache(HomogeneousMatrix m) : m_(std::move(m)) {}
    /// det of the submatrix on the given (increasing) rows and columns.
    Polynomial det(const std::vector<int>& rows, const std::vector<int>& cols);
    Polynomial det(std::uint32_t rowmask, std::uint32_t colmask);

private:
    HomogeneousMatrix m_;
    std::unordered_map<std::uint64_t, Polynomial> memo_;
};

/// Sorted s-subsets of {0..n-1} in lex order.
std::vector<std::vector<int>> subsets(int n, int s);

/// All nonzero s x s minors (rows and columns in lex order of subsets).
/// Throws InputError unless 1 <= s <= min(rows, cols).
IdealBasis minors(const HomogeneousMatrix& phi, int s);

/// t x (t+r) homogeneous matrix with t >= 1 and r >= 0.
class DeterminantalPresentation {
public:
    explicit DeterminantalPresentation(HomogeneousMatrix phi);
    const HomogeneousMatrix& matrix() const { return phi_; }
    const RingPtr& ring() const { return phi_.ring(); }
    int t() const { return phi_.rows(); }
    int r() const { return phi_.cols() - phi_.rows(); }
    int expected_codim() const { return r() + 1; }
    /// I_t, cached after the first call.
    const IdealBasis& maximal_minors() const;

private:
    HomogeneousMatrix phi_;
    mutable std::optional<IdealBasis> maximal_;
};

/// A generalized row: an invertible change of row basis whose last row is
/// `deleted`; `kept` are the other t-1 rows. Rows only mix equal twists.
struct RowDeletion {
    std::vector<FieldElement> deleted;
    std::vector<std::vector<FieldElement>> kept;
    /// Literal row index when the deletion is a plain row.
    std::optional<int> literal_row;

    static RowDeletion literal(int t, int row, const Field& field);
};

struct GeneralizedRowWitness {
    RowDeletion deletion;
    std::uint64_t seed = 0;
    int attempts = 0;
    /// Height of I_{t-1} of the kept rows.
    Height kept_height = Height::infinite();
    bool verified = false;
};

struct ClassificationReport {
    int t = 0, r = 0;
    int expected_codim = 0;
    Height actual_height = Height::infinite();
    /// Height of I_{t-1}; infinite for t = 1.
    Height submaximal_height = Height::infinite();
    bool is_standard = false;
    bool is_good = false;
    bool empty_scheme = false;
    std::optional<GeneralizedRowWitness> witness;
};

ClassificationReport classify(const DeterminantalPresentation& p);

/// Matrix obtained by applying a deletion (kept rows only).
HomogeneousMatrix apply_deletion(const HomogeneousMatrix& phi, const RowDeletion& del);

/// Twist of the generator removed by a deletion.
int deleted_twist(const HomogeneousMatrix& phi, const RowDeletion& del);

/// Randomized search for a generalized row whose deletion leaves maximal
/// minors of height >= r+2. Literal rows are tried first. Throws InputError
/// on non-good input; nullopt means no witness within `trials`.
std::optional<GeneralizedRowWitness> find_generalized_row(const DeterminantalPresentation& p, std::uint64_t seed,
                                                          int trials = 32);

inline constexpr int kAugmentRetries = 8;

/// Appends a row of seeded random forms (twist defaults to the minimal row
/// twist) and checks the result is good of codimension r. Throws InputError
/// on infeasible degrees, VerificationError after kAugmentRetries failures.
DeterminantalPresentation augment_general_row(const DeterminantalPresentation& p, std::optional<int> row_twist,
                                              std::uint64_t seed);

struct FlagStage {
    DeterminantalPresentation presentation;
    ClassificationReport report;
    /// I of this stage lies in I of the previous (higher codim) stage.
    bool contained_in_previous = true;
};

struct FlagResult {
    /// Codims r+1, r, ..., 1.
    std::vector<FlagStage> stages;
    std::uint64_t seed = 0;
    /// Number of augmentation steps (= r of the input).
    int steps() const { return static_cast<int>(stages.size()) - 1; }
    bool verified() const;
};

FlagResult build_flag(const DeterminantalPresentation& p, std::uint64_t seed);

struct SectionDegree {
    int degree;
    long hf_s;         // HF(M_S, d)
    long hf_quotient;  // HF(R/I_S, d - a)
    long hf_x;         // HF(M_X, d)
    bool holds() const { return hf_s == hf_quotient + hf_x; }
};

struct SectionSequence {
    HomogeneousMatrix psi;  // M_S = coker psi
    HomogeneousMatrix phi;  // M_X = coker phi
    IdealBasis ideal_s;
    IdealBasis ideal_x;
    int twist = 0;  // a: the deleted generator's degree
    std::vector<SectionDegree> degrees;
    bool verified = true;
    std::optional<int> first_failure;
};

/// 0 -> R/I_S(-a) -> coker psi -> coker phi -> 0, checked on degrees 0..d_max.
/// Throws InputError when psi is not standard or the deletion does not give
/// a standard presentation of codimension one more.
SectionSequence section_sequence(const DeterminantalPresentation& psi, const RowDeletion& del, int d_max);

}  // namespace detscheme
