#include "detscheme/degree_piece.hpp"

#include <algorithm>
#include <map>

#include "detscheme/errors.hpp"

namespace detscheme {

DegreeBasis::DegreeBasis(const GradedFreeModule& f, int d, std::size_t nvars) : degree_(d) {
    lookup_.resize(static_cast<std::size_t>(f.rank()));
    for (int j = 0; j < f.rank(); ++j) {
        for (const auto& m : monomials_of_degree(nvars, d - f.twist(j))) {
            lookup_[static_cast<std::size_t>(j)].emplace(m, size());
            elements_.emplace_back(j, m);
        }
    }
}

int DegreeBasis::index_of(int generator, const Monomial& m) const {
    const auto& table = lookup_[static_cast<std::size_t>(generator)];
    auto it = table.find(m);
    return it == table.end() ? -1 : it->second;
}

DegreeBasis degree_basis(const GradedFreeModule& f, int d, std::size_t nvars) { return DegreeBasis(f, d, nvars); }

long free_dimension(const GradedFreeModule& f, int d, std::size_t nvars) {
    long n = 0;
    for (int t : f.twists()) n += count_monomials(nvars, d - t);
    return n;
}

namespace {

ScalarMatrix piece(const HomogeneousMatrix& phi, const DegreeBasis& src, const DegreeBasis& tgt) {
    const Field field = phi.ring()->field();
    ScalarMatrix m(field, tgt.size(), src.size());
    for (int k = 0; k < src.size(); ++k) {
        const auto& [j, mono] = src[k];
        SparseVector col;
        for (int i = 0; i < phi.rows(); ++i) {
            for (const auto& t : phi.entry(i, j).terms()) {
                const int idx = tgt.index_of(i, t.mono * mono);
                if (idx < 0) throw InputError("inhomogeneous entry detected while building a degree piece");
                col.emplace_back(idx, t.coeff);
            }
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        m.set_column(k, std::move(col));
    }
    return m;
}

}  // namespace

ScalarMatrix matrix_piece(const HomogeneousMatrix& phi, int d) {
    const auto n = phi.ring()->nvars();
    return piece(phi, DegreeBasis(phi.source(), d, n), DegreeBasis(phi.target(), d, n));
}

std::optional<int> vector_degree(const std::vector<Polynomial>& v, const GradedFreeModule& f) {
    if (static_cast<int>(v.size()) != f.rank()) throw InputError("vector length does not match module rank");
    std::optional<int> deg;
    for (int i = 0; i < f.rank(); ++i) {
        const auto hd = v[static_cast<std::size_t>(i)].homogeneous_degree();
        if (hd.kind == HomogeneousDegree::Kind::Zero) continue;
        if (hd.kind == HomogeneousDegree::Kind::NotHomogeneous) throw InputError("vector component is not homogeneous");
        const int total = hd.degree + f.twist(i);
        if (deg && *deg != total) throw InputError("vector components have mismatched degrees for the target twists");
        deg = total;
    }
    return deg;
}

SparseVector coordinates(const std::vector<Polynomial>& v, const GradedFreeModule& f, const DegreeBasis& basis) {
    SparseVector x;
    for (int i = 0; i < f.rank(); ++i)
        for (const auto& t : v[static_cast<std::size_t>(i)].terms()) {
            const int idx = basis.index_of(i, t.mono);
            if (idx < 0) throw InputError("vector component has the wrong degree");
            x.emplace_back(idx, t.coeff);
        }
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return x;
}

std::vector<Polynomial> from_coordinates(const SparseVector& x, const RingPtr& ring, const GradedFreeModule& f,
                                         const DegreeBasis& basis) {
    std::vector<std::vector<Term>> parts(static_cast<std::size_t>(f.rank()));
    for (const auto& [idx, c] : x) {
        const auto& [gen, mono] = basis[idx];
        parts[static_cast<std::size_t>(gen)].push_back({mono, c});
    }
    std::vector<Polynomial> out;
    for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
    return out;
}

HomogeneousMatrix ideal_matrix(const IdealBasis& ideal) {
    std::vector<int> tw;
    std::vector<Polynomial> row;
    for (const auto& g : ideal.generators()) {
        const auto hd = g.homogeneous_degree();
        if (!hd.is_degree()) throw InputError("ideal generator is not homogeneous");
        tw.push_back(hd.degree);
        row.push_back(g);
    }
    return HomogeneousMatrix(ideal.ring(), GradedFreeModule({0}), GradedFreeModule(tw), {row});
}

CokernelHilbert::CokernelHilbert(const HomogeneousMatrix& phi) : phi_(phi) {
    const auto& ring = phi.ring();
    const std::size_t n = ring->nvars();
    const auto t = static_cast<std::size_t>(phi.rows());
    leading_.resize(t);
    if (t == 0) return;
    if (n + t > kMaxVariables) {
        by_elimination_ = true;
        return;
    }
    const RingPtr ext = ring->with_elimination_variables(t);
    std::vector<Polynomial> gens;
    for (int j = 0; j < phi.cols(); ++j) {
        Polynomial col(ext);
        for (int i = 0; i < phi.rows(); ++i)
            if (!phi.entry(i, j).is_zero())
                col += phi.entry(i, j).in_ring(ext) * Polynomial::variable(ext, n + static_cast<std::size_t>(i));
        if (!col.is_zero()) gens.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t k = i; k < t; ++k)
            gens.push_back(Polynomial::variable(ext, n + i) * Polynomial::variable(ext, n + k));
    const auto gb = groebner_basis(IdealBasis(ext, std::move(gens)));
    for (const auto& g : gb.generators()) {
        const auto& lm = g.leading_monomial();
        int pos = -1, edeg = 0;
        for (std::size_t i = 0; i < t; ++i)
            if (lm[n + i]) {
                edeg += lm[n + i];
                pos = static_cast<int>(i);
            }
        if (edeg != 1) continue;
        Monomial x = lm;
        x.set(n + static_cast<std::size_t>(pos), 0);
        leading_[static_cast<std::size_t>(pos)].push_back(x);
    }
}

long CokernelHilbert::operator()(int d) const {
    const std::size_t n = phi_.ring()->nvars();
    if (by_elimination_) return hilbert_cokernel_by_elimination(phi_, d);
    long count = 0;
    for (int i = 0; i < phi_.rows(); ++i) {
        const auto& lead = leading_[static_cast<std::size_t>(i)];
        for (const auto& m : monomials_of_degree(n, d - phi_.target().twist(i)))
            if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
    }
    return count;
}

long CokernelHilbert::piece_rank(int d) const {
    return free_dimension(phi_.target(), d, phi_.ring()->nvars()) - (*this)(d);
}

long hilbert_quotient(const IdealBasis& ideal, int d) { return hilbert_cokernel(ideal_matrix(ideal), d); }

long hilbert_cokernel(const HomogeneousMatrix& phi, int d) { return CokernelHilbert(phi)(d); }

long hilbert_kernel(const HomogeneousMatrix& phi, int d) {
    const auto n = phi.ring()->nvars();
    return free_dimension(phi.source(), d, n) - CokernelHilbert(phi).piece_rank(d);
}

long hilbert_cokernel_by_elimination(const HomogeneousMatrix& phi, int d) {
    const long tgt = free_dimension(phi.target(), d, phi.ring()->nvars());
    if (tgt == 0) return 0;
    return tgt - rank(matrix_piece(phi, d));
}

Membership image_membership(const std::vector<Polynomial>& v, const HomogeneousMatrix& phi) {
    const auto deg = vector_degree(v, phi.target());
    Membership out;
    if (!deg) {
        out.member = true;
        out.preimage = std::vector<Polynomial>(static_cast<std::size_t>(phi.cols()), Polynomial(phi.ring()));
        return out;
    }
    const auto n = phi.ring()->nvars();
    DegreeBasis src(phi.source(), *deg, n), tgt(phi.target(), *deg, n);
    auto x = solve(piece(phi, src, tgt), coordinates(v, phi.target(), tgt));
    if (!x) return out;
    out.member = true;
    out.preimage = from_coordinates(*x, phi.ring(), phi.source(), src);
    return out;
}

ExactnessReport graded_exactness_check(const FreeComplex& c, int lo, int hi) {
    ExactnessReport rep;
    rep.lo = lo;
    rep.hi = hi;
    const auto n = c.differential(1).ring()->nvars();
    const int len = c.length();
    std::vector<CokernelHilbert> hf;
    for (int i = 1; i <= len; ++i) hf.emplace_back(c.differential(i));
    for (int d = lo; d <= hi; ++d) {
        // ranks[i] = rank of d_i in degree d, i = 1..len
        std::vector<long> ranks(static_cast<std::size_t>(len + 2), 0);
        for (int i = 1; i <= len; ++i) ranks[static_cast<std::size_t>(i)] = hf[static_cast<std::size_t>(i - 1)].piece_rank(d);
        rep.h0.push_back(free_dimension(c.module(0), d, n) - ranks[1]);
        for (int i = 1; i <= len; ++i) {
            ExactnessEntry e{i, d, free_dimension(c.module(i), d, n) - ranks[static_cast<std::size_t>(i)],
                             ranks[static_cast<std::size_t>(i + 1)]};
            if (!e.exact()) {
                rep.exact = false;
                if (!rep.first_failure) rep.first_failure = std::make_pair(i, d);
            }
            rep.entries.push_back(e);
        }
    }
    return rep;
}

int default_d_max(const HomogeneousMatrix& phi) {
    int m = 0;
    for (int t : phi.source().twists()) m = std::max(m, t);
    for (int t : phi.target().twists()) m = std::max(m, t);
    return m + static_cast<int>(phi.ring()->nvars()) + 2;
}

}  // namespace detscheme
