#pragma once

#include <map>
#include <optional>
#include <vector>

#include "detscheme/field.hpp"

namespace detscheme {

/// Sparse vector: (index, value) pairs, indices strictly increasing, values
/// nonzero.
using SparseVector = std::vector<std::pair<int, FieldElement>>;

/// a + c * b
SparseVector axpy(const SparseVector& a, const FieldElement& c, const SparseVector& b);

/// Exact matrix over a field, stored by sparse columns. Degree pieces of
/// polynomial maps are very sparse, so columns stay short.
class ScalarMatrix {
public:
    ScalarMatrix(Field field, int rows, int cols);
    static ScalarMatrix from_dense(Field field, const std::vector<std::vector<FieldElement>>& rows);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_.size()); }

    const SparseVector& column(int j) const { return cols_[j]; }
    void set_column(int j, SparseVector v);
    FieldElement at(int i, int j) const;
    void set(int i, int j, const FieldElement& v);

    bool is_zero() const;
    ScalarMatrix transpose() const;
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    SparseVector apply(const SparseVector& x) const;
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

private:
    Field field_;
    int rows_;
    std::vector<SparseVector> cols_;
};

/// Incremental row-echelon basis of a subspace of k^dim. Inserted vectors
/// are reduced against pivot vectors (each normalized to leading entry 1);
/// optionally tracks how every stored vector combines the inserted ones.
class EchelonBasis {
public:
    explicit EchelonBasis(Field field, bool track_combinations = false)
        : field_(field), track_(track_combinations) {}

    struct Reduction {
        SparseVector remainder;
        /// v = remainder + sum combination[j] * inserted_j (tracking only).
        SparseVector combination;
    };

    /// Reduces v so no entry sits on a pivot index.
    Reduction reduce(SparseVector v) const;
    /// Returns true when v was independent of the current span. With
    /// tracking, a dependent v yields a kernel relation retrievable via
    /// relations().
    bool insert(SparseVector v);
    bool contains(const SparseVector& v) const { return reduce(v).remainder.empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    /// Stored basis vectors in increasing pivot order.
    std::vector<SparseVector> basis() const;
    int inserted() const { return inserted_; }
    /// Tracking only: coefficient vectors c with sum c_j inserted_j = 0, one
    /// per dependent insertion; a basis of the relation space.
    const std::vector<SparseVector>& relations() const { return relations_; }

private:
    struct Row {
        SparseVector vec;
        SparseVector combo;
    };

    Field field_;
    bool track_;
    int inserted_ = 0;
    std::map<int, Row> rows_;  // keyed by pivot index
    std::vector<SparseVector> relations_;
};

int rank(const ScalarMatrix& m);
/// Basis of {x : m x = 0}.
std::vector<SparseVector> kernel(const ScalarMatrix& m);
/// Some x with m x = b, or nullopt.
std::optional<SparseVector> solve(const ScalarMatrix& m, const SparseVector& b);

}  // namespace detscheme
