#include "detscheme/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "detscheme/errors.hpp"

namespace detscheme {

// ---- PolyRing ---------------------------------------------------------------

RingPtr PolyRing::create(std::vector<std::string> vars, Field field, MonomialOrder order) {
    if (vars.size() < 3) throw InputError("ring needs at least three variables (n >= 2)");
    return create_unchecked(std::move(vars), field, order);
}

RingPtr PolyRing::create_unchecked(std::vector<std::string> vars, Field field, MonomialOrder order) {
    if (vars.empty()) throw InputError("ring needs at least one variable");
    if (vars.size() > kMaxVariables) throw InputError("too many variables");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw InputError("invalid variable name: '" + v + "'");
        for (char ch : v)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                throw InputError("invalid variable name: '" + v + "'");
        if (!seen.insert(v).second) throw InputError("duplicate variable name: " + v);
    }
    if (order.kind == OrderKind::Elimination &&
        (order.block <= 0 || static_cast<std::size_t>(order.block) >= vars.size()))
        throw InputError("elimination block out of range");
    return RingPtr(new PolyRing(std::move(vars), field, order));
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return create_unchecked(vars_, field_, order); }

RingPtr PolyRing::with_elimination_variables(std::size_t count) const {
    auto vars = vars_;
    std::size_t k = 0;
    for (std::size_t added = 0; added < count; ++k) {
        std::string name = "_e" + std::to_string(k);
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
            vars.push_back(name);
            ++added;
        }
    }
    return create_unchecked(std::move(vars), field_, MonomialOrder::elimination(static_cast<int>(count)));
}

// ---- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring, const FieldElement& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Polynomial::Polynomial(RingPtr ring, const Monomial& m, const FieldElement& c) : ring_(std::move(ring)) {
    if (m.support_end() >= static_cast<int>(ring_->nvars())) throw InputError("monomial outside ring");
    if (!c.is_zero()) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& R = *p.ring_;
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
        if (t.mono.support_end() >= static_cast<int>(R.nvars())) throw InputError("monomial outside ring");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw InputError("variable index out of range");
    auto one = ring->one();
    return Polynomial(std::move(ring), Monomial::variable(index), one);
}

Polynomial Polynomial::constant(RingPtr ring, long v) {
    auto c = ring->scalar(v);
    return Polynomial(std::move(ring), c);
}

HomogeneousDegree Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return {HomogeneousDegree::Kind::Zero, 0};
    const int d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return {HomogeneousDegree::Kind::NotHomogeneous, 0};
    return {HomogeneousDegree::Kind::Degree, d};
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (ring_ && o.ring_ && ring_ != o.ring_ && !(*ring_ == *o.ring_))
        throw InputError("ring mismatch in polynomial arithmetic");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

// this += c * m * o
void Polynomial::add_scaled(const Polynomial& o, const Monomial& m, const FieldElement& c) {
    check_ring(o);
    if (!ring_) ring_ = o.ring_;
    if (o.terms_.empty() || c.is_zero()) return;
    const auto& R = *ring_;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    const bool unit = m.is_one();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        Monomial bm = unit ? b->mono : b->mono * m;
        if (a == terms_.end()) {
            out.push_back({bm, b->coeff * c});
            ++b;
            continue;
        }
        const auto cmp = R.compare(a->mono, bm);
        if (cmp > 0) {
            out.push_back(std::move(*a++));
        } else if (cmp < 0) {
            out.push_back({bm, b->coeff * c});
            ++b;
        } else {
            FieldElement s = a->coeff + b->coeff * c;
            if (!s.is_zero()) out.push_back({bm, std::move(s)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.terms_.empty()) {
        check_ring(o);
        if (!ring_) ring_ = o.ring_;
        return *this;
    }
    add_scaled(o, Monomial{}, o.ring_->one());
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.terms_.empty()) {
        check_ring(o);
        if (!ring_) ring_ = o.ring_;
        return *this;
    }
    add_scaled(o, Monomial{}, -o.ring_->one());
    return *this;
}

void Polynomial::sub_mul_term(const Monomial& m, const FieldElement& c, const Polynomial& g) {
    add_scaled(g, m, -c);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
    if (a.terms_.empty() || b.terms_.empty()) return Polynomial(ring);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    if (small.size() == 1) return big.mul_term(small.terms_[0].mono, small.terms_[0].coeff);
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) terms.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    if (m.support_end() >= static_cast<int>(ring_->nvars())) throw InputError("monomial outside ring");
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw InputError("negative exponent");
    Polynomial r(ring_, ring_->one());
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::exact_divide(const Polynomial& d) const {
    check_ring(d);
    if (d.is_zero()) throw InputError("division by zero polynomial");
    Polynomial q(ring_);
    Polynomial rem = *this;
    const auto& lt = d.leading_term();
    const FieldElement inv = lt.coeff.inverse();
    std::vector<Term> qterms;
    while (!rem.is_zero()) {
        const auto& head = rem.leading_term();
        if (!lt.mono.divides(head.mono)) throw InputError("polynomial division is not exact");
        Monomial m = head.mono / lt.mono;
        FieldElement c = head.coeff * inv;
        qterms.push_back({m, c});
        rem.sub_mul_term(m, c, d);
    }
    // Quotient terms were produced in strictly decreasing order.
    Polynomial out(ring_);
    out.terms_ = std::move(qterms);
    return out;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != ring_->nvars()) throw InputError("evaluation point has wrong length");
    FieldElement acc = ring_->zero();
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
    if (!(ring->field() == ring_->field())) throw InputError("cannot move polynomial across fields");
    return from_terms(ring, terms_);
}

bool Polynomial::uses_variables_from(std::size_t first) const {
    for (const auto& t : terms_)
        if (t.mono.support_end() >= static_cast<int>(first)) return true;
    return false;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff.is_negative();
        FieldElement mag = neg ? -t.coeff : t.coeff;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (t.mono.is_one() || !mag.is_one()) {
            os << mag.to_string();
            need_star = true;
        }
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (!t.mono[i]) continue;
            if (need_star) os << "*";
            os << ring_->variables()[i];
            if (t.mono[i] > 1) os << "^" << t.mono[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---- parser -----------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip();
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = get() == '-';
            skip();
        }
        parse_term(terms, negate);
        for (;;) {
            skip();
            if (at_end()) break;
            const char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            skip();
            parse_term(terms, op == '-');
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("malformed polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string digits() {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
        if (out.empty()) fail("expected digits");
        return out;
    }

    void parse_term(std::vector<Term>& terms, bool negate) {
        FieldElement coeff = ring_->one();
        Monomial mono;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num(digits());
            mpz_class den(1);
            skip();
            if (peek() == '/') {
                get();
                skip();
                den = mpz_class(digits());
            }
            coeff = FieldElement::from_fraction(ring_->field(), num, den);
            need_factor = false;
            skip();
            if (peek() == '*') {
                get();
                skip();
                need_factor = true;
            } else {
                if (negate) coeff = -coeff;
                terms.push_back({mono, coeff});
                return;
            }
        }
        for (;;) {
            if (!need_factor) break;
            parse_factor(mono);
            skip();
            if (peek() == '*') {
                get();
                skip();
                need_factor = true;
            } else {
                need_factor = false;
            }
        }
        if (negate) coeff = -coeff;
        terms.push_back({mono, coeff});
    }

    void parse_factor(Monomial& mono) {
        const char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected variable");
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name.push_back(get());
        const auto idx = ring_->index_of(name);
        if (!idx) throw InputError("unknown variable '" + name + "' in '" + s_ + "'");
        int power = 1;
        skip();
        if (peek() == '^') {
            get();
            skip();
            const std::string d = digits();
            if (d.size() > 4) fail("exponent too large");
            power = std::stoi(d);
        }
        mono.set(*idx, mono[*idx] + power);
    }

    const std::string& s_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

}  // namespace detscheme
