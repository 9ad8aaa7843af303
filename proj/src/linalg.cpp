#include "detscheme/linalg.hpp"

#include <algorithm>

#include "detscheme/errors.hpp"

namespace detscheme {

SparseVector axpy(const SparseVector& a, const FieldElement& c, const SparseVector& b) {
    if (c.is_zero() || b.empty()) return a;
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, c * j->second);
            ++j;
        } else {
            FieldElement s = i->second + c * j->second;
            if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

// ---- ScalarMatrix -----------------------------------------------------------

ScalarMatrix::ScalarMatrix(Field field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

ScalarMatrix ScalarMatrix::from_dense(Field field, const std::vector<std::vector<FieldElement>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    ScalarMatrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix");
        for (int j = 0; j < c; ++j)
            if (!rows[i][j].is_zero()) m.cols_[j].emplace_back(i, rows[i][j]);
    }
    return m;
}

void ScalarMatrix::set_column(int j, SparseVector v) {
    for (const auto& [i, x] : v)
        if (i < 0 || i >= rows_) throw InputError("column entry out of range");
    cols_[j] = std::move(v);
}

FieldElement ScalarMatrix::at(int i, int j) const {
    const auto& c = cols_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int k) { return e.first < k; });
    if (it != c.end() && it->first == i) return it->second;
    return FieldElement::zero(field_);
}

void ScalarMatrix::set(int i, int j, const FieldElement& v) {
    auto& c = cols_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int k) { return e.first < k; });
    if (it != c.end() && it->first == i) {
        if (v.is_zero())
            c.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        c.insert(it, {i, v});
    }
}

bool ScalarMatrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix t(field_, cols(), rows_);
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j]) t.cols_[i].emplace_back(j, v);
    return t;
}

SparseVector ScalarMatrix::apply(const SparseVector& x) const {
    SparseVector out;
    for (const auto& [j, v] : x) out = axpy(out, v, cols_[j]);
    return out;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
    ScalarMatrix p(a.field_, a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j) p.cols_[j] = a.apply(b.cols_[j]);
    return p;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

// ---- EchelonBasis -----------------------------------------------------------

EchelonBasis::Reduction EchelonBasis::reduce(SparseVector v) const {
    Reduction out;
    // Entries left of the cursor are settled (not pivots); subtracting a
    // pivot row only touches indices at or right of its pivot.
    std::size_t cursor = 0;
    while (cursor < v.size()) {
        const int idx = v[cursor].first;
        auto it = rows_.find(idx);
        if (it == rows_.end()) {
            ++cursor;
            continue;
        }
        const FieldElement c = v[cursor].second;
        SparseVector head(v.begin(), v.begin() + static_cast<long>(cursor));
        SparseVector tail(v.begin() + static_cast<long>(cursor), v.end());
        tail = axpy(tail, -c, it->second.vec);
        if (track_) out.combination = axpy(out.combination, c, it->second.combo);
        head.insert(head.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
        v = std::move(head);
    }
    out.remainder = std::move(v);
    return out;
}

bool EchelonBasis::insert(SparseVector v) {
    const int id = inserted_++;
    Reduction r = reduce(std::move(v));
    SparseVector self;
    if (track_) {
        self.emplace_back(id, FieldElement::one(field_));
        // remainder = v - combination
        self = axpy(self, -FieldElement::one(field_), r.combination);
        std::sort(self.begin(), self.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    if (r.remainder.empty()) {
        if (track_) relations_.push_back(std::move(self));
        return false;
    }
    const FieldElement inv = r.remainder.front().second.inverse();
    for (auto& [i, x] : r.remainder) x *= inv;
    if (track_)
        for (auto& [i, x] : self) x *= inv;
    const int pivot = r.remainder.front().first;
    rows_.emplace(pivot, Row{std::move(r.remainder), std::move(self)});
    return true;
}

std::vector<SparseVector> EchelonBasis::basis() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(row.vec);
    return out;
}

int rank(const ScalarMatrix& m) {
    EchelonBasis e(m.field());
    for (int j = 0; j < m.cols(); ++j)
        if (!m.column(j).empty()) e.insert(m.column(j));
    return e.rank();
}

std::vector<SparseVector> kernel(const ScalarMatrix& m) {
    EchelonBasis e(m.field(), true);
    for (int j = 0; j < m.cols(); ++j) e.insert(m.column(j));
    return e.relations();
}

std::optional<SparseVector> solve(const ScalarMatrix& m, const SparseVector& b) {
    EchelonBasis e(m.field(), true);
    for (int j = 0; j < m.cols(); ++j) e.insert(m.column(j));
    auto r = e.reduce(b);
    if (!r.remainder.empty()) return std::nullopt;
    return r.combination;
}

}  // namespace detscheme
