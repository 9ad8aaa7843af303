#pragma once

#include <string>
#include <vector>

#include "detscheme/linalg.hpp"
#include "detscheme/polynomial.hpp"

namespace detscheme {

/// ⊕_j R(-twist_j): twist_j is the degree of the j-th free generator.
/// Rank zero is allowed.
class GradedFreeModule {
public:
    GradedFreeModule() = default;
    explicit GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}
    static GradedFreeModule uniform(int rank, int twist) { return GradedFreeModule(std::vector<int>(rank, twist)); }

    int rank() const { return static_cast<int>(twists_.size()); }
    int twist(int i) const { return twists_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& twists() const { return twists_; }

    /// Generator degrees shifted: M(s) has generators in degree twist - s.
    GradedFreeModule shifted(int s) const;
    /// Hom(M, R(-shift)): generator degrees shift - twist_j.
    GradedFreeModule dual(int shift = 0) const;

    /// "R^1 + R(-2)^6" style description.
    std::string to_string() const;

    friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

private:
    std::vector<int> twists_;
};

/// Degree-zero map source -> target; entry (i, j) is zero or homogeneous of
/// degree source.twist(j) - target.twist(i). Acts on column vectors.
class HomogeneousMatrix {
public:
    HomogeneousMatrix() = default;
    /// Throws InputError on an inhomogeneous or wrongly-graded entry.
    HomogeneousMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source,
                      std::vector<std::vector<Polynomial>> rows);
    /// Infers twists from entry degrees (first row twist 0; unconstrained
    /// rows and columns get 0). Throws InputError when no grading exists.
    static HomogeneousMatrix infer(RingPtr ring, std::vector<std::vector<Polynomial>> rows);
    static HomogeneousMatrix zero(RingPtr ring, GradedFreeModule target, GradedFreeModule source);

    const RingPtr& ring() const { return ring_; }
    const GradedFreeModule& target() const { return target_; }
    const GradedFreeModule& source() const { return source_; }
    int rows() const { return target_.rank(); }
    int cols() const { return source_.rank(); }
    const Polynomial& entry(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols() + j)]; }
    /// Degree an entry in position (i, j) must have.
    int entry_degree(int i, int j) const { return source_.twist(j) - target_.twist(i); }
    std::vector<Polynomial> row(int i) const;
    std::vector<Polynomial> column(int j) const;

    bool is_zero() const;
    /// this ∘ right; requires right.target() == source().
    HomogeneousMatrix compose(const HomogeneousMatrix& right) const;
    /// Transpose as the dual map Hom(target, R(-shift)) -> Hom(source, R(-shift)).
    HomogeneousMatrix dual(int shift = 0) const;
    HomogeneousMatrix select_rows(const std::vector<int>& rows) const;
    HomogeneousMatrix select_columns(const std::vector<int>& cols) const;
    /// Rows of `combo` (k x rows() over the field) applied to this matrix.
    /// Each combination row may only mix rows of equal twist.
    HomogeneousMatrix combine_rows(const std::vector<std::vector<FieldElement>>& combo) const;
    HomogeneousMatrix append_row(std::vector<Polynomial> entries, int twist) const;
    HomogeneousMatrix with_entry(int i, int j, Polynomial p) const;
    ScalarMatrix evaluate(std::span<const FieldElement> point) const;

    /// Entries as text, one bracketed row per line.
    std::string to_string() const;

    friend bool operator==(const HomogeneousMatrix& a, const HomogeneousMatrix& b) {
        return a.target_ == b.target_ && a.source_ == b.source_ && a.entries_ == b.entries_;
    }

private:
    RingPtr ring_;
    GradedFreeModule target_;
    GradedFreeModule source_;
    std::vector<Polynomial> entries_;  // row-major
};

}  // namespace detscheme
