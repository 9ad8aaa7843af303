#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace detscheme {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector over at most kMaxVariables variables. Unused trailing
/// slots stay zero, so a monomial is meaningful in any ring with at least as
/// many variables as its highest nonzero slot.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(const std::vector<int>& exponents);

    static Monomial variable(std::size_t index, int power = 1);

    int operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, int e);
    int total_degree() const { return static_cast<int>(degree_); }
    bool is_one() const { return degree_ == 0; }

    /// Largest variable index with a nonzero exponent, or -1.
    int support_end() const;
    bool divides(const Monomial& other) const;
    /// Requires divides(*this, num) i.e. `den` divides `num`.
    friend Monomial operator/(const Monomial& num, const Monomial& den);
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    std::size_t hash() const;

private:
    std::array<Exponent, kMaxVariables> exps_{};
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { GrevLex, Lex, Elimination };

/// Monomial order on a ring with `nvars` variables. Elimination compares the
/// total degree in the last `block` variables first, then breaks ties by
/// grevlex; every monomial involving a block variable is larger than every
/// monomial free of them.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int block = 0;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elimination(int block) { return {OrderKind::Elimination, block}; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;
    std::string name() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// All monomials of total degree d in nvars variables, descending in lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

/// C(d + nvars - 1, nvars - 1) for d >= 0, else 0.
long count_monomials(std::size_t nvars, int d);

long binomial(long n, long k);

}  // namespace detscheme
