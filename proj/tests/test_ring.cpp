#include <gtest/gtest.h>

#include <random>

#include "detscheme/errors.hpp"
#include "detscheme/polynomial.hpp"

using namespace detscheme;

namespace {

RingPtr p3() { return PolyRing::create({"x0", "x1", "x2", "x3"}); }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, int max_terms = 5, int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms), deg(0, max_deg), coef(-9, 9);
    std::vector<Term> terms;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m;
        for (std::size_t v = 0; v < r->nvars(); ++v) m.set(v, deg(rng) / 2);
        terms.push_back({m, r->scalar(coef(rng))});
    }
    return Polynomial::from_terms(r, terms);
}

}  // namespace

TEST(Field, RationalNormalization) {
    auto q = FieldElement::from_fraction(Field::rationals(), 4, -6);
    EXPECT_EQ(q.to_string(), "-2/3");
    EXPECT_TRUE((q * FieldElement::from_integer(Field::rationals(), -3) / FieldElement::from_integer(Field::rationals(), 2)).is_one());
}

TEST(Field, PrimeFieldArithmetic) {
    const Field f5 = Field::prime(5);
    auto a = FieldElement::from_integer(f5, -1);
    EXPECT_EQ(a.residue().value, 4u);
    EXPECT_TRUE((a * a).is_one());
    EXPECT_TRUE((a.inverse() * a).is_one());
    EXPECT_THROW(Field::prime(6), InputError);
    EXPECT_EQ(Field::parse("Fp:32003").modulus, 32003u);
    EXPECT_THROW(Field::parse("RR"), InputError);
}

TEST(Parse, TwoTermQuadric) {
    auto r = p3();
    auto p = P("x1*x3 - x0*x2", r);
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.homogeneous_degree(), (HomogeneousDegree{HomogeneousDegree::Kind::Degree, 2}));
}

TEST(Parse, ZeroIsEmpty) {
    auto p = P("0", p3());
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.to_string(), "0");
}

TEST(Parse, MinorOfNonGoodExample) {
    auto r = p3();
    // Laplace expansion of columns 2,3 of [[x1,x2,x3,0],[0,x1,x2,x3]]
    const auto x1 = P("x1", r), x2 = P("x2", r), x3 = P("x3", r);
    EXPECT_EQ(x2 * x2 - x3 * x1, P("x2^2 - x1*x3", r));
}

TEST(Parse, CoefficientsAndPowers) {
    auto r = p3();
    auto p = P(" -3/2*x0^2*x1 + 7 - x3 ", r);
    EXPECT_EQ(p.to_string(), "-3/2*x0^2*x1 - x3 + 7");
    EXPECT_EQ(P("2*x0*x0", r), P("2*x0^2", r));
}

TEST(Parse, Errors) {
    auto r = p3();
    EXPECT_THROW(P("x4 + x0", r), InputError);
    EXPECT_THROW(P("x0 +", r), InputError);
    EXPECT_THROW(P("x0 ** x1", r), InputError);
    EXPECT_THROW(P("1/0*x0", r), InputError);
    auto f7 = PolyRing::create({"x", "y", "z"}, Field::prime(7));
    EXPECT_THROW(P("1/14*x", f7), InputError);
    EXPECT_EQ(P("1/2*x", f7).to_string(), "4*x");
}

TEST(Arith, InverseAndDifferenceOfSquares) {
    auto r = p3();
    EXPECT_TRUE((P("x0", r) + P("-x0", r)).is_zero());
    EXPECT_EQ(P("x0 + x1", r) * P("x0 - x1", r), P("x0^2 - x1^2", r));
}

TEST(Arith, ScaleOverF5) {
    auto r = PolyRing::create({"x0", "x1", "x2"}, Field::prime(5));
    auto p = P("4*x0", r).scaled(r->scalar(3));
    EXPECT_EQ(p.to_string(), "2*x0");
}

TEST(Arith, RingMismatch) {
    auto a = p3();
    auto b = PolyRing::create({"y0", "y1", "y2"});
    EXPECT_THROW(P("x0", a) + P("y0", b), InputError);
}

TEST(Arith, ExactDivision) {
    auto r = p3();
    auto f = P("x0 + x1", r), g = P("x2^2 - x1*x3", r);
    EXPECT_EQ((f * g).exact_divide(g), f);
    EXPECT_THROW(P("x0^2 + x1", r).exact_divide(P("x0", r)), InputError);
}

TEST(HomogeneousDegree, Sentinels) {
    auto r = p3();
    EXPECT_EQ(P("x1*x3 - x0*x2", r).homogeneous_degree().degree, 2);
    EXPECT_EQ(P("x0 + x1^2", r).homogeneous_degree().kind, HomogeneousDegree::Kind::NotHomogeneous);
    EXPECT_EQ(P("0", r).homogeneous_degree().kind, HomogeneousDegree::Kind::Zero);
}

TEST(Evaluate, Examples) {
    auto r = p3();
    auto Q = [&](long v) { return r->scalar(v); };
    std::vector<FieldElement> ones{Q(1), Q(1), Q(1), Q(1)};
    EXPECT_TRUE(P("x1*x3 - x0*x2", r).evaluate(ones).is_zero());
    std::vector<FieldElement> pt{Q(3), Q(0), Q(0), Q(0)};
    EXPECT_EQ(P("x0^2", r).evaluate(pt), Q(9));
    std::vector<FieldElement> pt2{Q(0), Q(2), Q(1), Q(3)};
    EXPECT_EQ(P("x2^2 - x1*x3", r).evaluate(pt2), Q(-5));
    EXPECT_THROW(P("x0", r).evaluate(std::vector<FieldElement>{Q(1)}), InputError);
}

TEST(Order, GrevlexAndLex) {
    auto r = p3();
    // grevlex: x1^2 > x0*x2 (smaller power of last variable x2... compare last differing: x2)
    EXPECT_EQ(P("x0*x2 + x1^2", r).leading_monomial(), P("x1^2", r).leading_monomial());
    auto lex = r->with_order(MonomialOrder::lex());
    EXPECT_EQ(P("x0*x2 + x1^2", lex).leading_monomial(), P("x0*x2", lex).leading_monomial());
    EXPECT_EQ(P("x0 + x1^3", lex).leading_monomial(), P("x0", lex).leading_monomial());
}

TEST(Properties, RingAxiomsOnRandomSamples) {
    auto r = p3();
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_poly(rng, r), q = random_poly(rng, r), s = random_poly(rng, r);
        EXPECT_EQ((p + q) + s, p + (q + s));
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ(p * (q + s), p * q + p * s);
        EXPECT_TRUE((p - p).is_zero());
    }
}

TEST(Properties, ParsePrintRoundTrip) {
    std::mt19937_64 rng(99);
    for (auto field : {Field::rationals(), Field::prime(32003)}) {
        auto r = PolyRing::create({"x0", "x1", "x2", "x3"}, field);
        for (int trial = 0; trial < 200; ++trial) {
            auto p = random_poly(rng, r).scaled(FieldElement::from_fraction(field, 1, 1 + trial % 5));
            EXPECT_EQ(parse_polynomial(p.to_string(), r), p) << p.to_string();
        }
    }
}

TEST(Properties, EvaluateIsHomomorphismAndHomogeneous) {
    auto r = p3();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_poly(rng, r), q = random_poly(rng, r);
        std::vector<FieldElement> v;
        for (int i = 0; i < 4; ++i) v.push_back(r->scalar(c(rng)));
        EXPECT_EQ((p * q).evaluate(v), p.evaluate(v) * q.evaluate(v));
        EXPECT_EQ((p + q).evaluate(v), p.evaluate(v) + q.evaluate(v));

        // homogeneous part: lambda^d scaling
        auto h = P("x0^2*x1 - 3*x2*x3^2 + x1^3", r);
        const auto lambda = r->scalar(c(rng));
        std::vector<FieldElement> lv;
        for (const auto& x : v) lv.push_back(lambda * x);
        EXPECT_EQ(h.evaluate(lv), lambda * lambda * lambda * h.evaluate(v));
    }
}

TEST(Ring, Validation) {
    EXPECT_THROW(PolyRing::create({"x", "y"}), InputError);
    EXPECT_THROW(PolyRing::create({"x", "y", "x"}), InputError);
    EXPECT_THROW(PolyRing::create({"x", "1y", "z"}), InputError);
}
