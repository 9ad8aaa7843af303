#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace detscheme {

enum class FieldKind { Rational, Prime };

/// Coefficient field descriptor: QQ or F_p.
struct Field {
    FieldKind kind = FieldKind::Rational;
    std::uint32_t modulus = 0;  // 0 for QQ

    static Field rationals() { return {}; }
    static Field prime(std::uint32_t p);
    /// "QQ" or "Fp:<prime>".
    static Field parse(const std::string& text);

    bool is_rational() const { return kind == FieldKind::Rational; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Element of QQ (normalized mpq) or of F_p (value in [0, p)).
class FieldElement {
public:
    FieldElement() : value_(mpq_class(0)) {}
    explicit FieldElement(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
    explicit FieldElement(Residue r) : value_(r) {}

    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    static FieldElement from_integer(const Field& f, long v);
    static FieldElement from_mpz(const Field& f, const mpz_class& v);
    /// num/den in f; throws InputError when den vanishes in f.
    static FieldElement from_fraction(const Field& f, const mpz_class& num, const mpz_class& den);

    bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    const Residue& residue() const { return std::get<Residue>(value_); }
    Field field() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement inverse() const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

    /// Integer, "a/b", or residue value.
    std::string to_string() const;
    /// Negative rationals only; residues are never negative.
    bool is_negative() const;

private:
    std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace detscheme
