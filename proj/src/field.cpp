#include "detscheme/field.hpp"

#include "detscheme/errors.hpp"

namespace detscheme {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

void check_same(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational() != b.is_rational() ||
        (!a.is_rational() && a.residue().modulus != b.residue().modulus))
        throw InputError("field mismatch in coefficient arithmetic");
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw InputError("Fp modulus is not prime: " + std::to_string(p));
    return {FieldKind::Prime, p};
}

Field Field::parse(const std::string& text) {
    if (text == "QQ") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
            throw InputError("malformed field descriptor: " + text);
        const unsigned long long p = std::stoull(digits);
        if (p > 0xFFFFFFFFull) throw InputError("Fp modulus too large: " + text);
        return prime(static_cast<std::uint32_t>(p));
    }
    throw InputError("unknown field: " + text);
}

std::string Field::to_string() const {
    return is_rational() ? "QQ" : "Fp:" + std::to_string(modulus);
}

FieldElement FieldElement::zero(const Field& f) { return from_integer(f, 0); }
FieldElement FieldElement::one(const Field& f) { return from_integer(f, 1); }

FieldElement FieldElement::from_integer(const Field& f, long v) {
    if (f.is_rational()) return FieldElement(mpq_class(v));
    long r = v % static_cast<long>(f.modulus);
    if (r < 0) r += f.modulus;
    return FieldElement(Residue{static_cast<std::uint32_t>(r), f.modulus});
}

FieldElement FieldElement::from_mpz(const Field& f, const mpz_class& v) {
    if (f.is_rational()) return FieldElement(mpq_class(v));
    return FieldElement(Residue{reduce_mpz(v, f.modulus), f.modulus});
}

FieldElement FieldElement::from_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (f.is_rational()) {
        if (den == 0) throw InputError("division by zero in coefficient");
        return FieldElement(mpq_class(num, den));
    }
    const std::uint32_t d = reduce_mpz(den, f.modulus);
    if (d == 0) throw InputError("denominator vanishes modulo " + std::to_string(f.modulus));
    return from_mpz(f, num) / FieldElement(Residue{d, f.modulus});
}

Field FieldElement::field() const {
    if (is_rational()) return Field::rationals();
    return {FieldKind::Prime, residue().modulus};
}

bool FieldElement::is_zero() const {
    if (is_rational()) return sgn(rational()) == 0;
    return residue().value == 0;
}

bool FieldElement::is_one() const {
    if (is_rational()) return rational() == 1;
    return residue().value == 1;
}

bool FieldElement::is_negative() const { return is_rational() && sgn(rational()) < 0; }

FieldElement FieldElement::operator-() const {
    if (is_rational()) return FieldElement(mpq_class(-rational()));
    const auto& r = residue();
    return FieldElement(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same(*this, o);
    if (is_rational()) {
        std::get<mpq_class>(value_) += o.rational();
    } else {
        auto& r = std::get<Residue>(value_);
        r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} + o.residue().value) % r.modulus);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same(*this, o);
    if (is_rational()) {
        std::get<mpq_class>(value_) -= o.rational();
    } else {
        auto& r = std::get<Residue>(value_);
        r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} + r.modulus - o.residue().value) % r.modulus);
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same(*this, o);
    if (is_rational()) {
        std::get<mpq_class>(value_) *= o.rational();
    } else {
        auto& r = std::get<Residue>(value_);
        r.value = static_cast<std::uint32_t>(std::uint64_t{r.value} * o.residue().value % r.modulus);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InputError("division by zero in field");
    if (is_rational()) return FieldElement(mpq_class(1 / rational()));
    const auto& r = residue();
    return FieldElement(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

std::string FieldElement::to_string() const {
    if (is_rational()) return rational().get_str();
    return std::to_string(residue().value);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

}  // namespace detscheme
