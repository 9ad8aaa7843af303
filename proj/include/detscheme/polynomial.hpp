#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "detscheme/field.hpp"
#include "detscheme/monomial.hpp"

namespace detscheme {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// k[x_0..x_n] with the standard grading and a fixed monomial order.
class PolyRing {
public:
    /// Public constructor for user rings: requires at least three variables
    /// (n >= 2) with distinct names.
    static RingPtr create(std::vector<std::string> vars, Field field = Field::rationals(),
                          MonomialOrder order = MonomialOrder::grevlex());
    /// Same, without the n >= 2 floor; used for auxiliary rings and for
    /// small examples.
    static RingPtr create_unchecked(std::vector<std::string> vars, Field field, MonomialOrder order);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const Field& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    /// Index of `name` or nullopt.
    std::optional<std::size_t> index_of(const std::string& name) const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        return order_.compare(a, b, vars_.size());
    }

    /// Same variables and field, different order.
    RingPtr with_order(MonomialOrder order) const;
    /// Appends `count` fresh variables and switches to the elimination order
    /// on them.
    RingPtr with_elimination_variables(std::size_t count) const;

    FieldElement zero() const { return FieldElement::zero(field_); }
    FieldElement one() const { return FieldElement::one(field_); }
    FieldElement scalar(long v) const { return FieldElement::from_integer(field_, v); }

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.vars_ == b.vars_ && a.field_ == b.field_ && a.order_ == b.order_;
    }

private:
    PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order)
        : vars_(std::move(vars)), field_(field), order_(order) {}

    std::vector<std::string> vars_;
    Field field_;
    MonomialOrder order_;
};

struct Term {
    Monomial mono;
    FieldElement coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Result of homogeneous_degree: a degree, or one of two sentinels.
struct HomogeneousDegree {
    enum class Kind { Degree, NotHomogeneous, Zero };
    Kind kind = Kind::Zero;
    int degree = 0;

    bool is_degree() const { return kind == Kind::Degree; }
    friend bool operator==(const HomogeneousDegree&, const HomogeneousDegree&) = default;
};

/// Sparse polynomial with nonzero coefficients and strictly decreasing
/// monomials in the ring order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const FieldElement& c);
    Polynomial(RingPtr ring, const Monomial& m, const FieldElement& c);
    /// Sorts and combines arbitrary terms.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial constant(RingPtr ring, long v);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Requires nonzero.
    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const FieldElement& leading_coefficient() const { return terms_.front().coeff; }

    HomogeneousDegree homogeneous_degree() const;
    /// Max total degree; -1 for zero.
    int degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const FieldElement& c) const;
    /// c * m * this
    Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
    /// this - c * m * g, in one merge pass.
    void sub_mul_term(const Monomial& m, const FieldElement& c, const Polynomial& g);
    Polynomial monic() const;
    Polynomial pow(int e) const;

    /// Exact quotient by `d`; throws InputError if `d` does not divide.
    Polynomial exact_divide(const Polynomial& d) const;

    FieldElement evaluate(std::span<const FieldElement> point) const;
    /// Same terms re-sorted for `ring`, which must have at least as many
    /// variables as the highest one used and the same field.
    Polynomial in_ring(const RingPtr& ring) const;
    /// Whether any term involves a variable with index >= first.
    bool uses_variables_from(std::size_t first) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    void check_ring(const Polynomial& o) const;
    void add_scaled(const Polynomial& o, const Monomial& m, const FieldElement& c);

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Grammar: expr := term (('+'|'-') term)*; term := coeff ('*' factor)* |
/// factor ('*' factor)*; factor := var ('^' nat)?; coeff := int | int '/' nat.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace detscheme
