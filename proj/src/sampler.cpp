#include "detscheme/sampler.hpp"

namespace detscheme {

FieldElement Sampler::coefficient() {
    if (!field_.is_rational())
        return FieldElement::from_integer(field_, static_cast<long>(rng_() % field_.modulus));
    const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
    return FieldElement::from_integer(field_, static_cast<long>(rng_() % span) - bound_);
}

FieldElement Sampler::unit() {
    for (;;) {
        auto c = coefficient();
        if (!c.is_zero()) return c;
    }
}

Polynomial Sampler::form(const RingPtr& ring, int degree) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(ring->nvars(), degree)) terms.push_back({m, coefficient()});
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace detscheme
