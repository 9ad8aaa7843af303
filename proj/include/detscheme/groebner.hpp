#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "detscheme/polynomial.hpp"

namespace detscheme {

/// Generators of an ideal; when `reduced_gb` is set they form the reduced
/// Gröbner basis for the ring's order (monic, pairwise reduced, sorted by
/// increasing leading monomial).
class IdealBasis {
public:
    IdealBasis() = default;
    IdealBasis(RingPtr ring, std::vector<Polynomial> gens, bool reduced_gb = false);

    static IdealBasis unit(RingPtr ring);
    /// (x_0, ..., x_n)
    static IdealBasis irrelevant(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_reduced_gb() const { return reduced_gb_; }
    std::size_t size() const { return gens_.size(); }

    /// Requires is_reduced_gb().
    bool is_unit() const;
    bool is_zero() const { return gens_.empty(); }
    bool is_homogeneous() const;

    friend bool operator==(const IdealBasis& a, const IdealBasis& b) {
        return a.reduced_gb_ == b.reduced_gb_ && a.gens_ == b.gens_;
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    bool reduced_gb_ = false;
};

/// Height of an ideal: a nonnegative integer or +infinity (unit ideal).
class Height {
public:
    static Height finite(int h) { return Height(h); }
    static Height infinite() { return Height(); }

    bool is_infinite() const { return infinite_; }
    /// Requires !is_infinite().
    int value() const { return value_; }
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend bool operator==(const Height&, const Height&) = default;
    friend std::strong_ordering operator<=>(const Height& a, const Height& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    friend bool operator>=(const Height& a, int b) { return a.infinite_ || a.value_ >= b; }

private:
    Height() : infinite_(true) {}
    explicit Height(int v) : value_(v) {}
    int value_ = 0;
    bool infinite_ = false;
};

struct DimensionReport {
    /// Krull dimension of R/I (affine cone); -1 for the unit ideal.
    int krull_dim = -1;
    Height height = Height::infinite();
};

/// Reduced Gröbner basis (Buchberger, normal selection, product and chain
/// criteria). Deterministic for a fixed order.
IdealBasis groebner_basis(const IdealBasis& ideal);

/// Remainder of p modulo a reduced Gröbner basis; no remainder term is
/// divisible by a leading monomial of gb.
Polynomial normal_form(const Polynomial& p, const IdealBasis& gb);
bool ideal_contains(const IdealBasis& gb, const Polynomial& p);
/// Every generator of `sub` lies in the ideal of `gb`.
bool ideal_contains(const IdealBasis& gb, const IdealBasis& sub);
/// Same ideal (both arguments may be arbitrary generator sets).
bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

/// Dimension via maximal independent variable sets of the leading-term
/// ideal.
DimensionReport dimension(const IdealBasis& ideal);
Height height(const IdealBasis& ideal);

/// Number of standard monomials of degree d (Hilbert function of R/I read
/// off the leading terms).
long standard_monomial_count(const IdealBasis& gb, int d);

/// I ∩ J via one auxiliary elimination variable.
IdealBasis intersect(const IdealBasis& a, const IdealBasis& b);
/// I : J = ∩_g (I ∩ (g)) / g over generators g of J.
IdealBasis ideal_quotient(const IdealBasis& i, const IdealBasis& j);
/// I : J^∞ by iterated quotients until the reduced basis stabilizes.
IdealBasis saturate(const IdealBasis& i, const IdealBasis& j);
/// Product ideal I·J.
IdealBasis ideal_product(const IdealBasis& a, const IdealBasis& b);

/// degree -> dim_k (I / m I)_degree for homogeneous I.
std::map<int, int> minimal_generator_count(const IdealBasis& ideal);

/// Moves the ideal to a ring differing only in its order.
IdealBasis change_order(const IdealBasis& ideal, const RingPtr& ring);

/// Basis of the k-span of the given polynomials (Gaussian elimination on
/// coefficient vectors); shrinks large redundant generator sets.
std::vector<Polynomial> linear_span_basis(const std::vector<Polynomial>& polys);

}  // namespace detscheme
