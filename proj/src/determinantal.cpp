#include "detscheme/determinantal.hpp"

#include <bit>
#include <map>

#include "detscheme/degree_piece.hpp"
#include "detscheme/errors.hpp"
#include "detscheme/sampler.hpp"

namespace detscheme {

namespace {

std::uint32_t mask_of(const std::vector<int>& idx) {
    std::uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    return m;
}

std::vector<FieldElement> unit_vector(int n, int i, const Field& f) {
    std::vector<FieldElement> v(static_cast<std::size_t>(n), FieldElement::zero(f));
    v[static_cast<std::size_t>(i)] = FieldElement::one(f);
    return v;
}

}  // namespace

Polynomial MinorCache::det(const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw InputError("minor needs as many rows as columns");
    return det(mask_of(rows), mask_of(cols));
}

Polynomial MinorCache::det(std::uint32_t rowmask, std::uint32_t colmask) {
    if (rowmask == 0) return Polynomial::constant(m_.ring(), 1);
    const std::uint64_t key = (static_cast<std::uint64_t>(rowmask) << 32) | colmask;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int row = std::countr_zero(rowmask);
    const std::uint32_t rest = rowmask & (rowmask - 1);
    Polynomial acc(m_.ring());
    bool negative = false;
    for (std::uint32_t cm = colmask; cm; cm &= cm - 1) {
        const int col = std::countr_zero(cm);
        const auto& e = m_.entry(row, col);
        if (!e.is_zero()) {
            auto sub = det(rest, colmask & ~(1u << col));
            if (!sub.is_zero()) {
                auto term = e * sub;
                if (negative) acc -= term;
                else acc += term;
            }
        }
        negative = !negative;
    }
    memo_.emplace(key, acc);
    return acc;
}

std::vector<std::vector<int>> subsets(int n, int s) {
    std::vector<std::vector<int>> out;
    if (s < 0 || s > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - s + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

IdealBasis minors(const HomogeneousMatrix& phi, int s) {
    if (s < 1 || s > std::min(phi.rows(), phi.cols()))
        throw InputError("minor size " + std::to_string(s) + " out of range");
    if (phi.rows() > 32 || phi.cols() > 32) throw InputError("matrix too large for minor expansion");
    MinorCache cache(phi);
    std::vector<Polynomial> gens;
    const auto rs = subsets(phi.rows(), s), cs = subsets(phi.cols(), s);
    for (const auto& r : rs)
        for (const auto& c : cs) {
            auto d = cache.det(r, c);
            if (!d.is_zero()) gens.push_back(std::move(d));
        }
    return IdealBasis(phi.ring(), std::move(gens));
}

DeterminantalPresentation::DeterminantalPresentation(HomogeneousMatrix phi) : phi_(std::move(phi)) {
    if (phi_.rows() < 1) throw InputError("a determinantal presentation needs at least one row");
    if (phi_.cols() < phi_.rows()) throw InputError("a determinantal presentation needs at least as many columns as rows");
    if (phi_.cols() > 32) throw InputError("too many columns");
}

const IdealBasis& DeterminantalPresentation::maximal_minors() const {
    if (!maximal_) maximal_ = minors(phi_, t());
    return *maximal_;
}

RowDeletion RowDeletion::literal(int t, int row, const Field& field) {
    RowDeletion d;
    d.deleted = unit_vector(t, row, field);
    for (int i = 0; i < t; ++i)
        if (i != row) d.kept.push_back(unit_vector(t, i, field));
    d.literal_row = row;
    return d;
}

ClassificationReport classify(const DeterminantalPresentation& p) {
    ClassificationReport rep;
    rep.t = p.t();
    rep.r = p.r();
    rep.expected_codim = p.expected_codim();
    rep.actual_height = height(p.maximal_minors());
    rep.submaximal_height = p.t() == 1 ? Height::infinite() : height(minors(p.matrix(), p.t() - 1));
    rep.is_standard = rep.actual_height == Height::finite(rep.expected_codim);
    rep.is_good = rep.is_standard && (p.t() == 1 || rep.submaximal_height >= rep.r + 2);
    rep.empty_scheme = rep.actual_height >= static_cast<int>(p.ring()->nvars());
    return rep;
}

HomogeneousMatrix apply_deletion(const HomogeneousMatrix& phi, const RowDeletion& del) {
    if (static_cast<int>(del.kept.size()) != phi.rows() - 1) throw InputError("deletion does not match the row count");
    return phi.combine_rows(del.kept);
}

int deleted_twist(const HomogeneousMatrix& phi, const RowDeletion& del) {
    for (int i = 0; i < phi.rows(); ++i)
        if (!del.deleted.at(static_cast<std::size_t>(i)).is_zero()) return phi.target().twist(i);
    throw InputError("deleted row combination is zero");
}

namespace {

Height kept_height(const HomogeneousMatrix& phi, const RowDeletion& del) {
    auto kept = apply_deletion(phi, del);
    return height(minors(kept, kept.rows()));
}

}  // namespace

std::optional<GeneralizedRowWitness> find_generalized_row(const DeterminantalPresentation& p, std::uint64_t seed,
                                                          int trials) {
    const auto rep = classify(p);
    if (!rep.is_good) throw InputError("generalized-row search needs a good presentation");
    const Field field = p.ring()->field();
    const auto& phi = p.matrix();
    const int t = p.t();
    GeneralizedRowWitness w;
    w.seed = seed;
    if (t == 1) {
        w.deletion.deleted = {FieldElement::one(field)};
        w.deletion.literal_row = 0;
        w.verified = true;
        return w;
    }
    const int target = p.r() + 2;
    for (int row = t - 1; row >= 0; --row) {
        ++w.attempts;
        auto del = RowDeletion::literal(t, row, field);
        auto h = kept_height(phi, del);
        if (h >= target) {
            w.deletion = std::move(del);
            w.kept_height = h;
            w.verified = true;
            return w;
        }
    }
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < t; ++i) classes[phi.target().twist(i)].push_back(i);
    std::vector<std::vector<int>> cls;
    for (auto& [tw, rows] : classes)
        if (rows.size() > 1) cls.push_back(rows);
    if (cls.empty()) return std::nullopt;
    Sampler sampler(field, seed);
    for (int trial = 0; trial < trials; ++trial) {
        ++w.attempts;
        const auto& rows = cls[static_cast<std::size_t>(trial) % cls.size()];
        const int k = static_cast<int>(rows.size());
        std::vector<std::vector<FieldElement>> block(static_cast<std::size_t>(k));
        for (auto& b : block)
            for (int j = 0; j < k; ++j) b.push_back(sampler.coefficient());
        if (rank(ScalarMatrix::from_dense(field, block)) < k) continue;
        auto embed = [&](const std::vector<FieldElement>& b) {
            std::vector<FieldElement> v(static_cast<std::size_t>(t), FieldElement::zero(field));
            for (int j = 0; j < k; ++j) v[static_cast<std::size_t>(rows[static_cast<std::size_t>(j)])] = b[static_cast<std::size_t>(j)];
            return v;
        };
        RowDeletion del;
        del.deleted = embed(block.back());
        for (int i = 0; i < t; ++i)
            if (std::find(rows.begin(), rows.end(), i) == rows.end()) del.kept.push_back(unit_vector(t, i, field));
        for (int j = 0; j + 1 < k; ++j) del.kept.push_back(embed(block[static_cast<std::size_t>(j)]));
        auto h = kept_height(phi, del);
        if (h >= target) {
            w.deletion = std::move(del);
            w.kept_height = h;
            w.verified = true;
            return w;
        }
    }
    return std::nullopt;
}

DeterminantalPresentation augment_general_row(const DeterminantalPresentation& p, std::optional<int> row_twist,
                                              std::uint64_t seed) {
    if (p.r() < 1) throw InputError("augmentation needs r >= 1");
    const auto& phi = p.matrix();
    int a = row_twist.value_or(0);
    if (!row_twist) {
        a = phi.target().twist(0);
        for (int t : phi.target().twists()) a = std::min(a, t);
    }
    for (int j = 0; j < phi.cols(); ++j)
        if (phi.source().twist(j) - a < 0)
            throw InputError("row twist " + std::to_string(a) + " forces a negative entry degree in column " +
                             std::to_string(j));
    Sampler sampler(p.ring()->field(), seed);
    for (int attempt = 0; attempt < kAugmentRetries; ++attempt) {
        std::vector<Polynomial> row;
        for (int j = 0; j < phi.cols(); ++j) row.push_back(sampler.form(p.ring(), phi.source().twist(j) - a));
        DeterminantalPresentation psi(phi.append_row(std::move(row), a));
        const auto rep = classify(psi);
        if (rep.is_good && rep.expected_codim == p.r()) return psi;
    }
    throw VerificationError("augmented matrix was not good of codimension " + std::to_string(p.r()) + " after " +
                            std::to_string(kAugmentRetries) + " attempts");
}

bool FlagResult::verified() const {
    for (const auto& s : stages)
        if (!s.report.is_good || !s.contained_in_previous) return false;
    for (std::size_t i = 1; i < stages.size(); ++i)
        if (stages[i].report.expected_codim + 1 != stages[i - 1].report.expected_codim) return false;
    return true;
}

FlagResult build_flag(const DeterminantalPresentation& p, std::uint64_t seed) {
    FlagResult out;
    out.seed = seed;
    auto rep = classify(p);
    if (!rep.is_good) throw InputError("a flag needs a good presentation");
    out.stages.push_back({p, rep, true});
    for (int step = 1; step <= p.r(); ++step) {
        const auto& prev = out.stages.back().presentation;
        auto next = augment_general_row(prev, std::nullopt, seed + static_cast<std::uint64_t>(step));
        auto next_rep = classify(next);
        const bool contained = ideal_contains(groebner_basis(prev.maximal_minors()), next.maximal_minors());
        out.stages.push_back({std::move(next), next_rep, contained});
    }
    return out;
}

SectionSequence section_sequence(const DeterminantalPresentation& psi, const RowDeletion& del, int d_max) {
    if (psi.t() < 2) throw InputError("section sequence needs at least two rows");
    const auto rep_s = classify(psi);
    if (!rep_s.is_standard) throw InputError("augmented presentation is not standard");
    DeterminantalPresentation phi(apply_deletion(psi.matrix(), del));
    const auto rep_x = classify(phi);
    if (!rep_x.is_standard) throw InputError("row deletion does not give a standard presentation");
    SectionSequence out{psi.matrix(), phi.matrix(), psi.maximal_minors(), phi.maximal_minors(),
                        deleted_twist(psi.matrix(), del), {}, true, std::nullopt};
    const CokernelHilbert hs(out.psi), hq(ideal_matrix(out.ideal_s)), hx(out.phi);
    for (int d = 0; d <= d_max; ++d) {
        SectionDegree sd{d, hs(d), hq(d - out.twist), hx(d)};
        if (!sd.holds() && out.verified) {
            out.verified = false;
            out.first_failure = d;
        }
        out.degrees.push_back(sd);
    }
    return out;
}

}  // namespace detscheme
