#include "detscheme/complexes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detscheme/degree_piece.hpp"
#include "detscheme/errors.hpp"
#include "detscheme/sampler.hpp"

namespace detscheme {

namespace {

struct Generator {
    std::vector<int> cols;   // J, increasing
    std::vector<int> alpha;  // exponents over the rows of Φ
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// α in N^g with |α| = m, lex-descending.
std::vector<std::vector<int>> multisets(int g, int m) {
    std::vector<std::vector<int>> out;
    if (g == 0) {
        if (m == 0) out.emplace_back();
        return out;
    }
    std::vector<int> a(static_cast<std::size_t>(g), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i + 1 == g) {
            a[static_cast<std::size_t>(i)] = left;
            out.push_back(a);
            return;
        }
        for (int k = left; k >= 0; --k) {
            a[static_cast<std::size_t>(i)] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, m);
    return out;
}

struct Stage {
    std::vector<Generator> gens;
    std::map<Generator, int> index;
    std::vector<int> twists;
};

Stage make_stage(const HomogeneousMatrix& phi, int jsize, int asize) {
    Stage s;
    const int sum_b = std::accumulate(phi.target().twists().begin(), phi.target().twists().end(), 0);
    for (const auto& J : subsets(phi.cols(), jsize))
        for (const auto& a : multisets(phi.rows(), asize)) {
            int deg = -sum_b;
            for (int j : J) deg += phi.source().twist(j);
            for (int k = 0; k < phi.rows(); ++k) deg -= a[static_cast<std::size_t>(k)] * phi.target().twist(k);
            s.index.emplace(Generator{J, a}, static_cast<int>(s.gens.size()));
            s.gens.push_back({J, a});
            s.twists.push_back(deg);
        }
    return s;
}

std::vector<std::vector<Polynomial>> zero_grid(const RingPtr& ring, std::size_t rows, std::size_t cols) {
    return std::vector<std::vector<Polynomial>>(rows, std::vector<Polynomial>(cols, Polynomial(ring)));
}

/// e_J ⊗ y^α ↦ Σ_k Σ_p (-1)^p Φ_{k,J_p} e_{J∖J_p} ⊗ y^{α-ε_k}  (p 0-based)
HomogeneousMatrix contraction(const HomogeneousMatrix& phi, const Stage& src, const Stage& tgt) {
    auto grid = zero_grid(phi.ring(), tgt.gens.size(), src.gens.size());
    for (std::size_t s = 0; s < src.gens.size(); ++s) {
        const auto& [J, a] = src.gens[s];
        for (int k = 0; k < phi.rows(); ++k) {
            if (a[static_cast<std::size_t>(k)] == 0) continue;
            auto b = a;
            --b[static_cast<std::size_t>(k)];
            for (std::size_t p = 0; p < J.size(); ++p) {
                const auto& e = phi.entry(k, J[p]);
                if (e.is_zero()) continue;
                auto K = J;
                K.erase(K.begin() + static_cast<long>(p));
                const int row = tgt.index.at(Generator{K, b});
                auto& cell = grid[static_cast<std::size_t>(row)][s];
                if (p % 2) cell -= e;
                else cell += e;
            }
        }
    }
    return HomogeneousMatrix(phi.ring(), GradedFreeModule(tgt.twists), GradedFreeModule(src.twists), std::move(grid));
}

void check_characteristic(const HomogeneousMatrix& phi) {
    const Field f = phi.ring()->field();
    if (!f.is_rational() && static_cast<long>(f.modulus) <= phi.cols() - phi.rows())
        throw InputError("characteristic must exceed f - g for these complexes");
    if (phi.rows() > phi.cols()) throw InputError("complex needs at least as many columns as rows");
}

}  // namespace

FreeComplex eagon_northcott(const HomogeneousMatrix& phi) {
    check_characteristic(phi);
    const int g = phi.rows(), f = phi.cols();
    if (g < 1) throw InputError("Eagon-Northcott complex needs at least one row");
    std::vector<HomogeneousMatrix> ds;
    Stage first = make_stage(phi, g, 0);
    {
        MinorCache cache(phi);
        std::vector<int> all_rows(static_cast<std::size_t>(g));
        std::iota(all_rows.begin(), all_rows.end(), 0);
        auto grid = zero_grid(phi.ring(), 1, first.gens.size());
        for (std::size_t s = 0; s < first.gens.size(); ++s) grid[0][s] = cache.det(all_rows, first.gens[s].cols);
        ds.emplace_back(phi.ring(), GradedFreeModule({0}), GradedFreeModule(first.twists), std::move(grid));
    }
    Stage prev = std::move(first);
    for (int pos = 2; g + pos - 1 <= f; ++pos) {
        Stage cur = make_stage(phi, g + pos - 1, pos - 1);
        ds.push_back(contraction(phi, cur, prev));
        prev = std::move(cur);
    }
    return FreeComplex(std::move(ds), ComplexKind::EagonNorthcott);
}

FreeComplex eagon_northcott(const DeterminantalPresentation& p) { return eagon_northcott(p.matrix()); }

FreeComplex buchsbaum_rim(const HomogeneousMatrix& phi) {
    check_characteristic(phi);
    const int g = phi.rows(), f = phi.cols();
    std::vector<HomogeneousMatrix> ds{phi};
    if (g + 1 > f) return FreeComplex(std::move(ds), ComplexKind::BuchsbaumRim);
    Stage second = make_stage(phi, g + 1, 0);
    {
        MinorCache cache(phi);
        std::vector<int> all_rows(static_cast<std::size_t>(g));
        std::iota(all_rows.begin(), all_rows.end(), 0);
        auto grid = zero_grid(phi.ring(), static_cast<std::size_t>(f), second.gens.size());
        for (std::size_t s = 0; s < second.gens.size(); ++s) {
            const auto& J = second.gens[s].cols;
            for (std::size_t p = 0; p < J.size(); ++p) {
                auto K = J;
                K.erase(K.begin() + static_cast<long>(p));
                auto d = cache.det(all_rows, K);
                grid[static_cast<std::size_t>(J[p])][s] = p % 2 ? -d : d;
            }
        }
        ds.emplace_back(phi.ring(), phi.source(), GradedFreeModule(second.twists), std::move(grid));
    }
    Stage prev = std::move(second);
    for (int pos = 3; g + pos - 1 <= f && g > 0; ++pos) {
        Stage cur = make_stage(phi, g + pos - 1, pos - 2);
        ds.push_back(contraction(phi, cur, prev));
        prev = std::move(cur);
    }
    return FreeComplex(std::move(ds), ComplexKind::BuchsbaumRim);
}

FreeComplex buchsbaum_rim(const DeterminantalPresentation& p) { return buchsbaum_rim(p.matrix()); }

FreeComplex koszul(const std::vector<Polynomial>& forms) {
    if (forms.empty()) throw InputError("Koszul complex needs at least one form");
    std::vector<int> tw;
    for (const auto& f : forms) {
        const auto hd = f.homogeneous_degree();
        if (!hd.is_degree()) throw InputError("Koszul complex needs nonzero homogeneous forms");
        tw.push_back(hd.degree);
    }
    HomogeneousMatrix row(forms.front().ring(), GradedFreeModule({0}), GradedFreeModule(tw), {forms});
    auto en = eagon_northcott(row);
    return FreeComplex(en.differentials(), ComplexKind::Koszul);
}

bool verify_complex(const FreeComplex& c) {
    for (int i = 1; i < c.length(); ++i)
        if (!c.differential(i).compose(c.differential(i + 1)).is_zero()) return false;
    return true;
}

namespace {

/// Independent positions when inserting vectors one by one.
std::vector<int> independent(const std::vector<SparseVector>& vs, const Field& field) {
    EchelonBasis eb(field);
    std::vector<int> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (eb.insert(vs[i])) out.push_back(static_cast<int>(i));
    return out;
}

bool has_nonzero_minor(const HomogeneousMatrix& phi, MinorCache& cache, int s, MapRank& out) {
    for (const auto& rs : subsets(phi.rows(), s))
        for (const auto& cs : subsets(phi.cols(), s))
            if (!cache.det(rs, cs).is_zero()) {
                out.rank = s;
                out.rows = rs;
                out.cols = cs;
                return true;
            }
    return false;
}

}  // namespace

MapRank rank_of_map(const HomogeneousMatrix& phi, std::uint64_t seed) {
    MapRank out;
    if (phi.rows() == 0 || phi.cols() == 0 || phi.is_zero()) return out;
    const Field field = phi.ring()->field();
    Sampler sampler(field, seed);
    int best = -1;
    std::vector<FieldElement> best_point;
    for (int k = 0; k < 3; ++k) {
        std::vector<FieldElement> pt;
        for (std::size_t v = 0; v < phi.ring()->nvars(); ++v) pt.push_back(sampler.coefficient());
        const int rk = rank(phi.evaluate(pt));
        if (rk > best) {
            best = rk;
            best_point = pt;
        }
    }
    MinorCache cache(phi);
    if (best > 0) {
        // exhibit a minor nonvanishing at the best point
        const auto m = phi.evaluate(best_point);
        std::vector<SparseVector> columns;
        for (int j = 0; j < m.cols(); ++j) columns.push_back(m.column(j));
        const auto cols = independent(columns, field);
        std::vector<SparseVector> rows(static_cast<std::size_t>(m.rows()));
        for (int jj = 0; jj < static_cast<int>(cols.size()); ++jj)
            for (const auto& [i, v] : m.column(cols[static_cast<std::size_t>(jj)]))
                rows[static_cast<std::size_t>(i)].emplace_back(jj, v);
        const auto rws = independent(rows, field);
        if (cache.det(rws, cols).is_zero()) throw VerificationError("rank certificate minor vanished");
        out = {best, rws, cols};
    } else {
        has_nonzero_minor(phi, cache, 1, out);
    }
    // no larger minor survives
    for (int s = out.rank + 1; s <= std::min(phi.rows(), phi.cols()); ++s)
        if (!has_nonzero_minor(phi, cache, s, out)) break;
    return out;
}

AcyclicityReport buchsbaum_eisenbud(const FreeComplex& c, std::uint64_t seed) {
    AcyclicityReport rep;
    const int len = c.length();
    std::vector<int> expected(static_cast<std::size_t>(len + 2), 0);
    for (int i = len; i >= 1; --i)
        expected[static_cast<std::size_t>(i)] = c.module(i).rank() - expected[static_cast<std::size_t>(i + 1)];
    for (int i = 1; i <= len; ++i) {
        AcyclicityEntry e;
        e.position = i;
        e.expected_rank = expected[static_cast<std::size_t>(i)];
        e.computed_rank = rank_of_map(c.differential(i), seed).rank;
        e.rank_ok = e.expected_rank >= 0 && e.computed_rank == e.expected_rank;
        if (e.expected_rank <= 0) {
            e.minor_height = Height::infinite();
        } else if (e.rank_ok) {
            e.minor_height = height(minors(c.differential(i), e.expected_rank));
        } else {
            e.minor_height = Height::finite(0);
        }
        e.height_ok = e.minor_height >= i;
        if (!e.pass() && rep.pass) {
            rep.pass = false;
            rep.first_failure = i;
        }
        rep.entries.push_back(e);
    }
    return rep;
}

BettiTable betti_table(const FreeComplex& c) {
    for (int i = 1; i <= c.length(); ++i) {
        const auto& d = c.differential(i);
        for (int a = 0; a < d.rows(); ++a)
            for (int b = 0; b < d.cols(); ++b)
                if (!d.entry(a, b).is_zero() && d.entry(a, b).is_constant())
                    throw InputError("complex is not minimal: unit entry in differential " + std::to_string(i));
    }
    BettiTable t;
    for (int i = 0; i <= c.length(); ++i)
        for (int tw : c.module(i).twists()) ++t[{i, tw}];
    return t;
}

long betti_hilbert(const BettiTable& b, int d, std::size_t nvars) {
    long s = 0;
    for (const auto& [key, n] : b) s += (key.first % 2 ? -1L : 1L) * n * count_monomials(nvars, d - key.second);
    return s;
}

std::vector<int> betti_ranks(const BettiTable& b) {
    std::vector<int> r;
    for (const auto& [key, n] : b) {
        if (static_cast<int>(r.size()) <= key.first) r.resize(static_cast<std::size_t>(key.first + 1), 0);
        r[static_cast<std::size_t>(key.first)] += n;
    }
    return r;
}

int cm_type(const DeterminantalPresentation& p) {
    if (!classify(p).is_standard) throw InputError("Cohen-Macaulay type needs a standard presentation");
    const auto en = eagon_northcott(p);
    const int last = en.module(en.length()).rank();
    const long expect = binomial(p.r() + p.t() - 1, p.r());
    if (last != expect)
        throw VerificationError("last Eagon-Northcott rank " + std::to_string(last) + " differs from " +
                                std::to_string(expect));
    return last;
}

AnnihilatorReport verify_annihilator(const DeterminantalPresentation& p, int d_max) {
    if (!classify(p).is_standard) throw InputError("annihilator check needs a standard presentation");
    AnnihilatorReport rep;
    const auto& phi = p.matrix();
    const auto& ring = p.ring();
    const std::size_t n = ring->nvars();
    const Field field = ring->field();

    // I·G ⊆ im Φ, witnessed on generators
    for (const auto& m : p.maximal_minors().generators()) {
        for (int j = 0; j < phi.rows() && rep.contains_minors; ++j) {
            std::vector<Polynomial> v(static_cast<std::size_t>(phi.rows()), Polynomial(ring));
            v[static_cast<std::size_t>(j)] = m;
            const auto mem = image_membership(v, phi);
            bool ok = mem.member;
            if (ok) {
                std::vector<std::vector<Polynomial>> col;
                for (const auto& w : *mem.preimage) col.push_back({w});
                const int deg = *vector_degree(v, phi.target());
                ok = phi.compose(HomogeneousMatrix(ring, phi.source(), GradedFreeModule({deg}), col)).column(0) == v;
            }
            if (!ok) {
                rep.contains_minors = false;
                rep.failed_degree = m.homogeneous_degree().degree + phi.target().twist(j);
                rep.failed_direction = "minor times generator not in the image";
            }
        }
    }

    // {f : f·G ⊆ im Φ}_d has the dimension of I_d
    const CokernelHilbert coker(phi);
    const CokernelHilbert quotient(ideal_matrix(p.maximal_minors()));
    for (int d = 0; d <= d_max; ++d) {
        const auto mons = monomials_of_degree(n, d);
        const int nm = static_cast<int>(mons.size());
        std::vector<DegreeBasis> tb, sb;
        int rows = 0, cols = nm;
        long fixed_kernel = 0;
        for (int j = 0; j < phi.rows(); ++j) {
            const int e = d + phi.target().twist(j);
            tb.emplace_back(phi.target(), e, n);
            sb.emplace_back(phi.source(), e, n);
            rows += tb.back().size();
            cols += sb.back().size();
            fixed_kernel += sb.back().size() - coker.piece_rank(e);
        }
        ScalarMatrix big(field, rows, cols);
        int row_off = 0, col_off = nm;
        for (int j = 0; j < phi.rows(); ++j) {
            const auto& T = tb[static_cast<std::size_t>(j)];
            const auto& S = sb[static_cast<std::size_t>(j)];
            for (int k = 0; k < nm; ++k) big.set(row_off + T.index_of(j, mons[static_cast<std::size_t>(k)]), k, FieldElement::one(field));
            const auto piece = matrix_piece(phi, d + phi.target().twist(j));
            for (int c = 0; c < piece.cols(); ++c)
                for (const auto& [r, v] : piece.column(c)) big.set(row_off + r, col_off + c, FieldElement::zero(field) - v);
            row_off += T.size();
            col_off += S.size();
        }
        const long ann_dim = (cols - rank(big)) - fixed_kernel;
        const long ideal_dim = static_cast<long>(nm) - quotient(d);
        rep.dims.emplace_back(ann_dim, ideal_dim);
        if (ann_dim != ideal_dim && rep.inside_minors) {
            rep.inside_minors = false;
            if (!rep.failed_degree) {
                rep.failed_degree = d;
                rep.failed_direction = "annihilator larger than the ideal of minors";
            }
        }
    }
    return rep;
}

int cokernel_minimal_generators(const HomogeneousMatrix& psi) {
    ScalarMatrix constant(psi.ring()->field(), psi.rows(), psi.cols());
    for (int i = 0; i < psi.rows(); ++i)
        for (int j = 0; j < psi.cols(); ++j)
            if (!psi.entry(i, j).is_zero() && psi.entry(i, j).is_constant())
                constant.set(i, j, psi.entry(i, j).leading_coefficient());
    return psi.rows() - rank(constant);
}

CanonicalModule canonical_module(const DeterminantalPresentation& p, int d_max) {
    const auto rep = classify(p);
    if (!rep.is_standard) throw InputError("canonical module needs a standard presentation");
    if (p.r() != 1) throw InputError("canonical module is only built in codimension 2");
    const auto en = eagon_northcott(p);
    const int nv = static_cast<int>(p.ring()->nvars());
    CanonicalModule out{en.differential(en.length()).dual(nv), std::nullopt, {}, d_max, 0};
    out.minimal_generators = cokernel_minimal_generators(out.presentation);
    const CokernelHilbert omega(out.presentation), mx(p.matrix());
    int spread = nv + 2;
    for (int t : p.matrix().source().twists()) spread = std::max(spread, std::abs(t) + nv + 2);
    for (int t : out.presentation.target().twists()) spread = std::max(spread, std::abs(t) + nv + 2);
    for (int e = -spread; e <= spread; ++e) {
        bool ok = true;
        for (int d = 0; d <= d_max && ok; ++d) ok = omega(d) == mx(d + e);
        if (ok) out.matching_shifts.push_back(e);
    }
    if (out.matching_shifts.size() == 1) out.shift = out.matching_shifts.front();
    return out;
}

}  // namespace detscheme
