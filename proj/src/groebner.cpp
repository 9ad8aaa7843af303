#include "detscheme/groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "detscheme/errors.hpp"
#include "detscheme/linalg.hpp"

namespace detscheme {

// ---- IdealBasis -------------------------------------------------------------

IdealBasis::IdealBasis(RingPtr ring, std::vector<Polynomial> gens, bool reduced_gb)
    : ring_(std::move(ring)), reduced_gb_(reduced_gb) {
    for (auto& g : gens) {
        if (g.ring() && !(*g.ring() == *ring_)) throw InputError("generator from a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

IdealBasis IdealBasis::unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return IdealBasis(std::move(ring), {one}, true);
}

IdealBasis IdealBasis::irrelevant(RingPtr ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
    return IdealBasis(ring, std::move(vars));
}

bool IdealBasis::is_unit() const {
    if (!reduced_gb_) throw InputError("is_unit requires a reduced Gröbner basis");
    return gens_.size() == 1 && gens_[0].is_constant();
}

bool IdealBasis::is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.homogeneous_degree().is_degree(); });
}

// ---- linear preprocessing ---------------------------------------------------

std::vector<Polynomial> linear_span_basis(const std::vector<Polynomial>& polys) {
    std::vector<Polynomial> nonzero;
    for (const auto& p : polys)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.size() <= 1) return nonzero;
    const RingPtr ring = nonzero.front().ring();

    std::vector<Monomial> monos;
    for (const auto& p : nonzero)
        for (const auto& t : p.terms()) monos.push_back(t.mono);
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) > 0; });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    std::unordered_map<Monomial, int, MonomialHash> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], static_cast<int>(i));

    EchelonBasis echelon(ring->field());
    for (const auto& p : nonzero) {
        SparseVector v;
        for (const auto& t : p.terms()) v.emplace_back(index.at(t.mono), t.coeff);
        echelon.insert(std::move(v));
    }
    std::vector<Polynomial> out;
    for (const auto& v : echelon.basis()) {
        std::vector<Term> terms;
        for (const auto& [i, c] : v) terms.push_back({monos[static_cast<std::size_t>(i)], c});
        out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return out;
}

// ---- Buchberger -------------------------------------------------------------

namespace {

/// Full reduction of p by the polynomials in `basis` (all monic).
Polynomial reduce_fully(Polynomial p, const std::vector<Polynomial>& basis, const std::vector<char>* active = nullptr) {
    std::vector<Term> rest;
    const RingPtr ring = p.ring();
    while (!p.is_zero()) {
        const Term lt = p.leading_term();
        const Polynomial* divisor = nullptr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (active && !(*active)[k]) continue;
            if (basis[k].leading_monomial().divides(lt.mono)) {
                divisor = &basis[k];
                break;
            }
        }
        if (divisor) {
            p.sub_mul_term(lt.mono / divisor->leading_monomial(), lt.coeff, *divisor);
        } else {
            rest.push_back(lt);
            p.sub_mul_term(Monomial{}, lt.coeff, Polynomial(ring, lt.mono, ring->one()));
        }
    }
    return Polynomial::from_terms(ring, std::move(rest));
}

struct CriticalPair {
    int i;
    int j;
    Monomial lcm;
};

IdealBasis finalize(const RingPtr& ring, std::vector<Polynomial> g) {
    // Drop elements whose leading monomial is divisible by another's.
    std::vector<char> keep(g.size(), 1);
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            const auto& la = g[a].leading_monomial();
            const auto& lb = g[b].leading_monomial();
            if (lb.divides(la) && (!(la == lb) || b < a)) keep[a] = 0;
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < g.size(); ++a)
        if (keep[a]) minimal.push_back(g[a]);
    std::vector<Polynomial> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        const Term lt = minimal[a].leading_term();
        Polynomial tail = minimal[a];
        tail.sub_mul_term(Monomial{}, lt.coeff, Polynomial(ring, lt.mono, ring->one()));
        Polynomial r = reduce_fully(tail, others) + Polynomial(ring, lt.mono, lt.coeff);
        reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return IdealBasis(ring, std::move(reduced), true);
}

}  // namespace

IdealBasis groebner_basis(const IdealBasis& ideal) {
    const RingPtr& ring = ideal.ring();
    if (ideal.is_reduced_gb()) return ideal;
    std::vector<Polynomial> g;
    for (auto& p : linear_span_basis(ideal.generators())) {
        if (p.is_constant()) return IdealBasis::unit(ring);
        g.push_back(p.monic());
    }
    if (g.empty()) return IdealBasis(ring, {}, true);

    std::vector<CriticalPair> pairs;
    std::set<std::pair<int, int>> pending;
    auto add_pairs_for = [&](int m) {
        for (int k = 0; k < m; ++k) {
            pairs.push_back({k, m, lcm(g[k].leading_monomial(), g[m].leading_monomial())});
            pending.emplace(k, m);
        }
    };
    for (int m = 0; m < static_cast<int>(g.size()); ++m) add_pairs_for(m);

    auto pair_less = [&](const CriticalPair& a, const CriticalPair& b) {
        if (a.lcm.total_degree() != b.lcm.total_degree()) return a.lcm.total_degree() < b.lcm.total_degree();
        const auto c = ring->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    auto is_pending = [&](int a, int b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
        const CriticalPair cp = *best;
        *best = pairs.back();
        pairs.pop_back();
        pending.erase({cp.i, cp.j});

        const auto& li = g[cp.i].leading_monomial();
        const auto& lj = g[cp.j].leading_monomial();
        if (coprime(li, lj)) continue;
        bool chain = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !chain; ++k) {
            if (k == cp.i || k == cp.j) continue;
            if (g[k].leading_monomial().divides(cp.lcm) && !is_pending(cp.i, k) && !is_pending(cp.j, k)) chain = true;
        }
        if (chain) continue;

        Polynomial s = g[cp.i].mul_term(cp.lcm / li, ring->one());
        s.sub_mul_term(cp.lcm / lj, ring->one(), g[cp.j]);
        Polynomial r = reduce_fully(std::move(s), g);
        if (r.is_zero()) continue;
        if (r.is_constant()) return IdealBasis::unit(ring);
        g.push_back(r.monic());
        add_pairs_for(static_cast<int>(g.size()) - 1);
    }
    return finalize(ring, std::move(g));
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& gb) {
    if (!gb.is_reduced_gb()) throw InputError("normal_form requires a reduced Gröbner basis");
    if (p.ring() && gb.ring() && !(*p.ring() == *gb.ring())) throw InputError("ring mismatch in normal_form");
    return reduce_fully(p, gb.generators());
}

bool ideal_contains(const IdealBasis& gb, const Polynomial& p) {
    const IdealBasis& basis = gb.is_reduced_gb() ? gb : groebner_basis(gb);
    return normal_form(p, basis).is_zero();
}

bool ideal_contains(const IdealBasis& gb, const IdealBasis& sub) {
    const IdealBasis basis = groebner_basis(gb);
    return std::all_of(sub.generators().begin(), sub.generators().end(),
                       [&](const Polynomial& p) { return normal_form(p, basis).is_zero(); });
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
    return groebner_basis(a) == groebner_basis(b);
}

// ---- dimension --------------------------------------------------------------

DimensionReport dimension(const IdealBasis& ideal) {
    const IdealBasis gb = groebner_basis(ideal);
    const auto n = static_cast<int>(gb.ring()->nvars());
    if (gb.is_unit()) return {-1, Height::infinite()};
    std::vector<unsigned> supports;
    for (const auto& p : gb.generators()) {
        unsigned mask = 0;
        const auto& m = p.leading_monomial();
        for (int i = 0; i < n; ++i)
            if (m[static_cast<std::size_t>(i)]) mask |= 1u << i;
        supports.push_back(mask);
    }
    int best = 0;
    for (unsigned set = 0; set < (1u << n); ++set) {
        const int size = __builtin_popcount(set);
        if (size <= best) continue;
        const bool independent = std::none_of(supports.begin(), supports.end(),
                                              [&](unsigned s) { return (s & ~set) == 0; });
        if (independent) best = size;
    }
    return {best, Height::finite(n - best)};
}

Height height(const IdealBasis& ideal) { return dimension(ideal).height; }

long standard_monomial_count(const IdealBasis& gb, int d) {
    if (!gb.is_reduced_gb()) throw InputError("standard_monomial_count requires a reduced Gröbner basis");
    long count = 0;
    for (const auto& m : monomials_of_degree(gb.ring()->nvars(), d)) {
        const bool standard = std::none_of(gb.generators().begin(), gb.generators().end(),
                                           [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
        if (standard) ++count;
    }
    return count;
}

// ---- intersection, quotient, saturation ------------------------------------

IdealBasis intersect(const IdealBasis& a, const IdealBasis& b) {
    const RingPtr& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return IdealBasis(ring, {}, true);
    const IdealBasis ga = groebner_basis(a);
    const IdealBasis gbb = groebner_basis(b);
    if (ga.is_unit()) return gbb;
    if (gbb.is_unit()) return ga;

    const RingPtr ext = ring->with_elimination_variables(1);
    const std::size_t tvar = ring->nvars();
    const Polynomial t = Polynomial::variable(ext, tvar);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : ga.generators()) gens.push_back(t * f.in_ring(ext));
    for (const auto& f : gbb.generators()) gens.push_back(one_minus_t * f.in_ring(ext));
    const IdealBasis big = groebner_basis(IdealBasis(ext, std::move(gens)));
    std::vector<Polynomial> kept;
    for (const auto& f : big.generators())
        if (!f.uses_variables_from(tvar)) kept.push_back(f.in_ring(ring));
    return groebner_basis(IdealBasis(ring, std::move(kept)));
}

IdealBasis ideal_quotient(const IdealBasis& i, const IdealBasis& j) {
    const RingPtr& ring = i.ring();
    const IdealBasis gi = groebner_basis(i);
    std::optional<IdealBasis> result;
    for (const auto& g : j.generators()) {
        const IdealBasis meet = intersect(gi, IdealBasis(ring, {g}));
        std::vector<Polynomial> divided;
        for (const auto& h : meet.generators()) divided.push_back(h.exact_divide(g));
        IdealBasis q = groebner_basis(IdealBasis(ring, std::move(divided)));
        result = result ? intersect(*result, q) : q;
        if (result->is_zero()) break;
    }
    if (!result) return IdealBasis::unit(ring);  // I : 0 = R
    return *result;
}

IdealBasis saturate(const IdealBasis& i, const IdealBasis& j) {
    IdealBasis current = groebner_basis(i);
    for (int iter = 0; iter < 256; ++iter) {
        IdealBasis next = ideal_quotient(current, j);
        if (next == current) return current;
        current = std::move(next);
    }
    throw VerificationError("saturation did not stabilize");
}

IdealBasis ideal_product(const IdealBasis& a, const IdealBasis& b) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return IdealBasis(a.ring(), std::move(gens));
}

// ---- minimal generators -----------------------------------------------------

std::map<int, int> minimal_generator_count(const IdealBasis& ideal) {
    if (!ideal.is_homogeneous()) throw InputError("minimal_generator_count needs a homogeneous ideal");
    const RingPtr& ring = ideal.ring();
    std::map<int, std::vector<const Polynomial*>> by_degree;
    for (const auto& g : ideal.generators()) by_degree[g.homogeneous_degree().degree].push_back(&g);

    std::map<int, int> counts;
    for (const auto& [d, gens_d] : by_degree) {
        const auto monos = monomials_of_degree(ring->nvars(), d);
        std::unordered_map<Monomial, int, MonomialHash> index;
        for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], static_cast<int>(k));
        auto to_vector = [&](const Polynomial& p) {
            SparseVector v;
            for (const auto& t : p.terms()) v.emplace_back(index.at(t.mono), t.coeff);
            std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            return v;
        };
        EchelonBasis echelon(ring->field());
        for (const auto& [e, gens_e] : by_degree) {
            if (e >= d) break;
            for (const auto* g : gens_e)
                for (const auto& m : monomials_of_degree(ring->nvars(), d - e))
                    echelon.insert(to_vector(g->mul_term(m, ring->one())));
        }
        int fresh = 0;
        for (const auto* g : gens_d)
            if (echelon.insert(to_vector(*g))) ++fresh;
        if (fresh) counts[d] = fresh;
    }
    return counts;
}

IdealBasis change_order(const IdealBasis& ideal, const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ring));
    IdealBasis moved(ring, std::move(gens));
    return ideal.is_reduced_gb() ? groebner_basis(moved) : moved;
}

}  // namespace detscheme
