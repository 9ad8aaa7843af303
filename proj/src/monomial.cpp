#include "detscheme/monomial.hpp"

#include <string>

#include "detscheme/errors.hpp"

namespace detscheme {

Monomial::Monomial(const std::vector<int>& exponents) {
    if (exponents.size() > kMaxVariables) throw InputError("too many variables for a monomial");
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, int power) {
    Monomial m;
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, int e) {
    if (i >= kMaxVariables) throw InputError("variable index out of range");
    if (e < 0 || e > 0xFFFF) throw InputError("exponent out of range");
    degree_ = degree_ - exps_[i] + static_cast<std::uint32_t>(e);
    exps_[i] = static_cast<Exponent>(e);
}

int Monomial::support_end() const {
    for (int i = static_cast<int>(kMaxVariables) - 1; i >= 0; --i)
        if (exps_[i]) return i;
    return -1;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial operator/(const Monomial& num, const Monomial& den) {
    Monomial q;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        q.exps_[i] = static_cast<Monomial::Exponent>(num.exps_[i] - den.exps_[i]);
    q.degree_ = num.degree_ - den.degree_;
    return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial p;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        p.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] + b.exps_[i]);
    p.degree_ = a.degree_ + b.degree_;
    return p;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial l;
    std::uint32_t deg = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        l.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        deg += l.exps_[i];
    }
    l.degree_ = deg;
    return l;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (a.exps_[i] && b.exps_[i]) return false;
    return true;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
}

namespace {

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b, std::size_t nvars) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
    for (std::size_t i = nvars; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
    switch (kind) {
    case OrderKind::GrevLex:
        return grevlex_compare(a, b, nvars);
    case OrderKind::Lex:
        for (std::size_t i = 0; i < nvars; ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    case OrderKind::Elimination: {
        int wa = 0, wb = 0;
        for (std::size_t i = nvars - static_cast<std::size_t>(block); i < nvars; ++i) {
            wa += a[i];
            wb += b[i];
        }
        if (wa != wb) return wa <=> wb;
        return grevlex_compare(a, b, nvars);
    }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
    switch (kind) {
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Elimination: return "elim" + std::to_string(block);
    }
    return "?";
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0 || nvars == 0) return out;
    std::vector<int> e(nvars, 0);
    // Lex-descending enumeration: distribute d greedily from x0.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == nvars) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long count_monomials(std::size_t nvars, int d) {
    if (d < 0) return 0;
    return binomial(d + static_cast<long>(nvars) - 1, static_cast<long>(nvars) - 1);
}

}  // namespace detscheme
