#include "detscheme/graded.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "detscheme/errors.hpp"

namespace detscheme {

GradedFreeModule GradedFreeModule::shifted(int s) const {
    auto t = twists_;
    for (auto& x : t) x -= s;
    return GradedFreeModule(std::move(t));
}

GradedFreeModule GradedFreeModule::dual(int shift) const {
    auto t = twists_;
    for (auto& x : t) x = shift - x;
    return GradedFreeModule(std::move(t));
}

std::string GradedFreeModule::to_string() const {
    if (twists_.empty()) return "0";
    std::map<int, int> counts;
    for (int t : twists_) ++counts[t];
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : counts) {
        if (!first) os << " + ";
        first = false;
        os << "R";
        if (t != 0) os << "(" << -t << ")";
        if (c != 1) os << "^" << c;
    }
    return os.str();
}

HomogeneousMatrix::HomogeneousMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source,
                                     std::vector<std::vector<Polynomial>> rows)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)) {
    if (static_cast<int>(rows.size()) != target_.rank()) throw InputError("row count does not match target rank");
    entries_.reserve(static_cast<std::size_t>(target_.rank() * source_.rank()));
    for (int i = 0; i < target_.rank(); ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != source_.rank()) throw InputError("matrix is not rectangular");
        for (int j = 0; j < source_.rank(); ++j) {
            auto& p = row[static_cast<std::size_t>(j)];
            if (!p.ring()) p = Polynomial(ring_);
            if (!(*p.ring() == *ring_)) throw InputError("matrix entry from a different ring");
            const auto hd = p.homogeneous_degree();
            if (hd.kind == HomogeneousDegree::Kind::NotHomogeneous)
                throw InputError("inhomogeneous entry at (" + std::to_string(i) + "," + std::to_string(j) + "): " + p.to_string());
            if (hd.is_degree() && hd.degree != entry_degree(i, j))
                throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                                 std::to_string(hd.degree) + ", twists require " + std::to_string(entry_degree(i, j)));
            entries_.push_back(std::move(p));
        }
    }
}

HomogeneousMatrix HomogeneousMatrix::infer(RingPtr ring, std::vector<std::vector<Polynomial>> rows) {
    const int nrows = static_cast<int>(rows.size());
    const int ncols = nrows ? static_cast<int>(rows[0].size()) : 0;
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ncols) throw InputError("matrix is not rectangular");
    std::vector<std::optional<int>> row_tw(static_cast<std::size_t>(nrows)), col_tw(static_cast<std::size_t>(ncols));
    auto degree_at = [&](int i, int j) -> std::optional<int> {
        const auto hd = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].homogeneous_degree();
        if (hd.kind == HomogeneousDegree::Kind::NotHomogeneous)
            throw InputError("inhomogeneous entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (hd.kind == HomogeneousDegree::Kind::Zero) return std::nullopt;
        return hd.degree;
    };
    // Bipartite propagation: col_twist - row_twist = entry degree.
    for (int start = 0; start < nrows; ++start) {
        if (row_tw[static_cast<std::size_t>(start)]) continue;
        row_tw[static_cast<std::size_t>(start)] = 0;
        std::deque<std::pair<bool, int>> queue{{true, start}};
        while (!queue.empty()) {
            auto [is_row, k] = queue.front();
            queue.pop_front();
            for (int o = 0; o < (is_row ? ncols : nrows); ++o) {
                const int i = is_row ? k : o, j = is_row ? o : k;
                const auto d = degree_at(i, j);
                if (!d) continue;
                auto& rt = row_tw[static_cast<std::size_t>(i)];
                auto& ct = col_tw[static_cast<std::size_t>(j)];
                if (is_row) {
                    if (!ct) {
                        ct = *rt + *d;
                        queue.emplace_back(false, j);
                    } else if (*ct != *rt + *d) {
                        throw InputError("entry degrees admit no consistent twists");
                    }
                } else {
                    if (!rt) {
                        rt = *ct - *d;
                        queue.emplace_back(true, i);
                    } else if (*ct != *rt + *d) {
                        throw InputError("entry degrees admit no consistent twists");
                    }
                }
            }
        }
    }
    std::vector<int> rt, ct;
    for (const auto& t : row_tw) rt.push_back(t.value_or(0));
    for (const auto& t : col_tw) ct.push_back(t.value_or(0));
    return HomogeneousMatrix(std::move(ring), GradedFreeModule(rt), GradedFreeModule(ct), std::move(rows));
}

HomogeneousMatrix HomogeneousMatrix::zero(RingPtr ring, GradedFreeModule target, GradedFreeModule source) {
    std::vector<std::vector<Polynomial>> rows(static_cast<std::size_t>(target.rank()),
                                              std::vector<Polynomial>(static_cast<std::size_t>(source.rank()), Polynomial(ring)));
    return HomogeneousMatrix(std::move(ring), std::move(target), std::move(source), std::move(rows));
}

std::vector<Polynomial> HomogeneousMatrix::row(int i) const {
    return {entries_.begin() + i * cols(), entries_.begin() + (i + 1) * cols()};
}

std::vector<Polynomial> HomogeneousMatrix::column(int j) const {
    std::vector<Polynomial> c;
    for (int i = 0; i < rows(); ++i) c.push_back(entry(i, j));
    return c;
}

bool HomogeneousMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

HomogeneousMatrix HomogeneousMatrix::compose(const HomogeneousMatrix& right) const {
    if (!(right.target_ == source_)) throw InputError("composition: modules do not match");
    std::vector<std::vector<Polynomial>> out(static_cast<std::size_t>(rows()));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < right.cols(); ++j) {
            Polynomial acc(ring_);
            for (int k = 0; k < cols(); ++k) {
                const auto& a = entry(i, k);
                const auto& b = right.entry(k, j);
                if (!a.is_zero() && !b.is_zero()) acc += a * b;
            }
            out[static_cast<std::size_t>(i)].push_back(std::move(acc));
        }
    return HomogeneousMatrix(ring_, target_, right.source_, std::move(out));
}

HomogeneousMatrix HomogeneousMatrix::dual(int shift) const {
    std::vector<std::vector<Polynomial>> out(static_cast<std::size_t>(cols()));
    for (int j = 0; j < cols(); ++j)
        for (int i = 0; i < rows(); ++i) out[static_cast<std::size_t>(j)].push_back(entry(i, j));
    return HomogeneousMatrix(ring_, source_.dual(shift), target_.dual(shift), std::move(out));
}

HomogeneousMatrix HomogeneousMatrix::select_rows(const std::vector<int>& sel) const {
    std::vector<int> tw;
    std::vector<std::vector<Polynomial>> out;
    for (int i : sel) {
        if (i < 0 || i >= rows()) throw InputError("row index out of range");
        tw.push_back(target_.twist(i));
        out.push_back(row(i));
    }
    return HomogeneousMatrix(ring_, GradedFreeModule(tw), source_, std::move(out));
}

HomogeneousMatrix HomogeneousMatrix::select_columns(const std::vector<int>& sel) const {
    std::vector<int> tw;
    for (int j : sel) {
        if (j < 0 || j >= cols()) throw InputError("column index out of range");
        tw.push_back(source_.twist(j));
    }
    std::vector<std::vector<Polynomial>> out(static_cast<std::size_t>(rows()));
    for (int i = 0; i < rows(); ++i)
        for (int j : sel) out[static_cast<std::size_t>(i)].push_back(entry(i, j));
    return HomogeneousMatrix(ring_, target_, GradedFreeModule(tw), std::move(out));
}

HomogeneousMatrix HomogeneousMatrix::combine_rows(const std::vector<std::vector<FieldElement>>& combo) const {
    std::vector<int> tw;
    std::vector<std::vector<Polynomial>> out;
    for (const auto& c : combo) {
        if (static_cast<int>(c.size()) != rows()) throw InputError("row combination has wrong length");
        std::optional<int> twist;
        std::vector<Polynomial> r(static_cast<std::size_t>(cols()), Polynomial(ring_));
        for (int i = 0; i < rows(); ++i) {
            if (c[static_cast<std::size_t>(i)].is_zero()) continue;
            if (twist && *twist != target_.twist(i)) throw InputError("row combination mixes different twists");
            twist = target_.twist(i);
            for (int j = 0; j < cols(); ++j)
                r[static_cast<std::size_t>(j)] += entry(i, j).scaled(c[static_cast<std::size_t>(i)]);
        }
        if (!twist) throw InputError("row combination is zero");
        tw.push_back(*twist);
        out.push_back(std::move(r));
    }
    return HomogeneousMatrix(ring_, GradedFreeModule(tw), source_, std::move(out));
}

HomogeneousMatrix HomogeneousMatrix::append_row(std::vector<Polynomial> entries, int twist) const {
    auto tw = target_.twists();
    tw.push_back(twist);
    std::vector<std::vector<Polynomial>> out;
    for (int i = 0; i < rows(); ++i) out.push_back(row(i));
    out.push_back(std::move(entries));
    return HomogeneousMatrix(ring_, GradedFreeModule(tw), source_, std::move(out));
}

HomogeneousMatrix HomogeneousMatrix::with_entry(int i, int j, Polynomial p) const {
    std::vector<std::vector<Polynomial>> out;
    for (int k = 0; k < rows(); ++k) out.push_back(row(k));
    out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(p);
    return HomogeneousMatrix(ring_, target_, source_, std::move(out));
}

ScalarMatrix HomogeneousMatrix::evaluate(std::span<const FieldElement> point) const {
    ScalarMatrix m(ring_->field(), rows(), cols());
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (!entry(i, j).is_zero()) m.set(i, j, entry(i, j).evaluate(point));
    return m;
}

std::string HomogeneousMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows(); ++i) {
        os << "[";
        for (int j = 0; j < cols(); ++j) os << (j ? ", " : "") << entry(i, j).to_string();
        os << "]";
        if (i + 1 < rows()) os << "\n";
    }
    return os.str();
}

}  // namespace detscheme
