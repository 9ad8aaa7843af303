#include <gtest/gtest.h>

#include <random>

#include "detscheme/degree_piece.hpp"
#include "detscheme/errors.hpp"

using namespace detscheme;

namespace {

RingPtr p3() { return PolyRing::create({"x0", "x1", "x2", "x3"}); }

HomogeneousMatrix mat(const RingPtr& r, std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<Polynomial>> ps;
    for (const auto& row : rows) {
        ps.emplace_back();
        for (const auto& s : row) ps.back().push_back(parse_polynomial(s, r));
    }
    return HomogeneousMatrix::infer(r, ps);
}

IdealBasis ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> ps;
    for (const char* g : gens) ps.push_back(parse_polynomial(g, r));
    return IdealBasis(r, ps);
}

HomogeneousMatrix nongood(const RingPtr& r) { return mat(r, {{"x1", "x2", "x3", "0"}, {"0", "x1", "x2", "x3"}}); }

// Koszul complex of two linear forms: R <- R(-1)^2 <- R(-2)
FreeComplex koszul2(const RingPtr& r, const char* a, const char* b) {
    auto d1 = mat(r, {{a, b}});
    auto pb = parse_polynomial(b, r), pa = parse_polynomial(a, r);
    HomogeneousMatrix d2(r, d1.source(), GradedFreeModule({2}), {{-pb}, {pa}});
    return FreeComplex({d1, d2}, ComplexKind::Koszul);
}

}  // namespace

TEST(DegreeBasis, Sizes) {
    auto r = p3();
    EXPECT_EQ(degree_basis(GradedFreeModule({0}), 1, 4).size(), 4);
    EXPECT_EQ(degree_basis(GradedFreeModule::uniform(2, 1), 1, 4).size(), 2);
    EXPECT_EQ(degree_basis(GradedFreeModule::uniform(6, 2), 3, 4).size(), 24);
    EXPECT_EQ(degree_basis(GradedFreeModule({3}), 2, 4).size(), 0);
    // invariant: size = sum of binomials
    GradedFreeModule f({0, 1, 1, 3});
    for (int d = 0; d < 7; ++d) EXPECT_EQ(degree_basis(f, d, 4).size(), free_dimension(f, d, 4));
    auto b = degree_basis(f, 4, 4);
    for (int k = 0; k < b.size(); ++k) EXPECT_EQ(b.index_of(b[k].first, b[k].second), k);
}

TEST(Matrix, TwistInferenceAndValidation) {
    auto r = p3();
    auto phi = nongood(r);
    EXPECT_EQ(phi.target().twists(), (std::vector<int>{0, 0}));
    EXPECT_EQ(phi.source().twists(), (std::vector<int>{1, 1, 1, 1}));
    auto mixed = mat(r, {{"x0", "x1^2"}, {"x2^2", "x3^3"}});
    EXPECT_EQ(mixed.target().twists(), (std::vector<int>{0, -1}));
    EXPECT_EQ(mixed.source().twists(), (std::vector<int>{1, 2}));
    EXPECT_THROW(mat(r, {{"x0", "x1"}, {"x2", "x3^2"}}), InputError);
    EXPECT_THROW(mat(r, {{"x0 + x1^2"}}), InputError);
    EXPECT_THROW(HomogeneousMatrix(r, GradedFreeModule({0}), GradedFreeModule({2}), {{parse_polynomial("x0", r)}}),
                 InputError);
}

TEST(MatrixPiece, Examples) {
    auto r = p3();
    auto z = HomogeneousMatrix::zero(r, GradedFreeModule({0, 0}), GradedFreeModule({1, 1, 1}));
    auto zp = matrix_piece(z, 2);
    EXPECT_EQ(zp.rows(), 20);
    EXPECT_EQ(zp.cols(), 12);
    EXPECT_TRUE(zp.is_zero());

    auto row = mat(r, {{"x0", "x1"}});
    auto p = matrix_piece(row, 1);
    EXPECT_EQ(p.rows(), 4);
    EXPECT_EQ(p.cols(), 2);
    EXPECT_EQ(rank(p), 2);

    // rank at degree 2 = dim of the span of the 16 vectors x_k * col_j
    auto phi = nongood(r);
    auto piece = matrix_piece(phi, 2);
    EchelonBasis eb(r->field());
    for (int j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
            std::vector<Polynomial> v;
            for (int i = 0; i < 2; ++i) v.push_back(phi.entry(i, j) * Polynomial::variable(r, k));
            eb.insert(coordinates(v, phi.target(), degree_basis(phi.target(), 2, 4)));
        }
    EXPECT_EQ(rank(piece), eb.rank());
}

TEST(Hilbert, Examples) {
    auto p2 = PolyRing::create({"x0", "x1", "x2"});
    EXPECT_EQ(hilbert_quotient(ideal(p2, {"x0", "x1"}), 5), 1);
    auto r = p3();
    auto sq = ideal(r, {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"});
    // x0^d and x0^(d-1)*x_i span every degree d >= 1
    std::vector<long> expect{1, 4, 4, 4, 4, 4};
    for (int d = 0; d < 6; ++d) EXPECT_EQ(hilbert_quotient(sq, d), expect[static_cast<std::size_t>(d)]);
    EXPECT_EQ(hilbert_quotient(sq, -1), 0);
    auto phi = nongood(r);
    EXPECT_EQ(hilbert_cokernel(phi, 0), 2);
    EXPECT_EQ(hilbert_cokernel(phi, 1), 8 - 4);
    EXPECT_EQ(hilbert_kernel(phi, 1), 0);
}

TEST(Hilbert, GroebnerCountMatchesElimination) {
    auto r = p3();
    std::vector<HomogeneousMatrix> corpus{nongood(r), mat(r, {{"x0", "x1", "x2"}, {"0", "x0", "x3"}}),
                                          mat(r, {{"x0", "x1^2"}, {"x2^2", "x3^3"}}),
                                          mat(r, {{"x0 + 2*x1", "x1 - x3", "x2"}, {"3*x2", "x0", "x1 + x3"}})};
    for (const auto& phi : corpus) {
        CokernelHilbert hf(phi);
        for (int d = -1; d <= 5; ++d) {
            EXPECT_EQ(hf(d), hilbert_cokernel_by_elimination(phi, d)) << phi.to_string() << " d=" << d;
            EXPECT_EQ(hilbert_kernel(phi, d), free_dimension(phi.source(), d, 4) - rank(matrix_piece(phi, d)));
        }
    }
}

TEST(Hilbert, AgreesWithStandardMonomials) {
    auto r = p3();
    std::vector<IdealBasis> corpus{ideal(r, {"x0^2", "x0*x3", "x1*x3 - x0*x2"}), ideal(r, {"x2*x3", "x1*x3", "x1*x2"}),
                                   ideal(r, {"x0^3 - x1*x2*x3", "x1^2 - x0*x2"}), ideal(r, {"x0*x1 - x2*x3"}),
                                   ideal(r, {"x1^2", "x1*x2", "x1*x3", "x2^2 - x1*x3", "x2*x3", "x3^2"})};
    for (const auto& I : corpus) {
        auto gb = groebner_basis(I);
        for (int d = 0; d <= 6; ++d) EXPECT_EQ(hilbert_quotient(I, d), standard_monomial_count(gb, d));
    }
}

TEST(ImageMembership, Examples) {
    auto r = p3();
    auto phi = nongood(r);
    auto v = phi.column(0);
    auto m = image_membership(v, phi);
    ASSERT_TRUE(m.member);
    // the witness maps to v
    std::vector<std::vector<Polynomial>> col;
    for (const auto& p : *m.preimage) col.push_back({p});
    auto img = phi.compose(HomogeneousMatrix(r, phi.source(), GradedFreeModule({1}), col));
    EXPECT_EQ(img.column(0), v);

    auto z = HomogeneousMatrix::zero(r, GradedFreeModule({0}), GradedFreeModule({1}));
    EXPECT_FALSE(image_membership({Polynomial::constant(r, 1)}, z).member);

    // minor times a target generator lies in the image
    auto minor = parse_polynomial("x2^2 - x1*x3", r);
    EXPECT_TRUE(image_membership({minor, Polynomial(r)}, phi).member);
    EXPECT_TRUE(image_membership({Polynomial(r), minor}, phi).member);
    EXPECT_FALSE(image_membership({parse_polynomial("x0^2", r), Polynomial(r)}, phi).member);
    // degree mismatch
    EXPECT_THROW(image_membership({parse_polynomial("x0", r), parse_polynomial("x0^2", r)}, phi), InputError);
}

TEST(ImageMembership, AgreesWithNormalFormForIdeals) {
    auto r = p3();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-3, 3);
    auto I = ideal(r, {"x0^2", "x0*x3", "x1*x3 - x0*x2"});
    auto gb = groebner_basis(I);
    auto phi = ideal_matrix(I);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + trial % 3;
        // mix an ideal element with a random perturbation (half the time)
        Polynomial p(r);
        for (const auto& g : I.generators())
            for (const auto& m : monomials_of_degree(4, d - 2))
                if (c(rng) > 1) p += g.mul_term(m, r->scalar(c(rng)));
        if (trial % 2)
            for (const auto& m : monomials_of_degree(4, d))
                if (c(rng) == 3) p += Polynomial(r, m, r->scalar(c(rng)));
        EXPECT_EQ(image_membership({p}, phi).member, ideal_contains(gb, p)) << p.to_string();
    }
}

TEST(Exactness, KoszulAndMutation) {
    auto p2 = PolyRing::create({"x0", "x1", "x2"});
    auto k = koszul2(p2, "x0", "x1");
    auto rep = graded_exactness_check(k, 0, 8);
    EXPECT_TRUE(rep.exact);
    for (int d = 0; d <= 8; ++d) EXPECT_EQ(rep.h0[static_cast<std::size_t>(d)], 1);
    auto broken = k.with_differential(2, HomogeneousMatrix::zero(p2, k.module(1), k.module(2)));
    auto bad = graded_exactness_check(broken, 0, 8);
    EXPECT_FALSE(bad.exact);
    ASSERT_TRUE(bad.first_failure);
    EXPECT_EQ(bad.first_failure->first, 1);
}

TEST(Properties, Functoriality) {
    auto r = p3();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    auto rand_linear = [&]() {
        Polynomial p(r);
        for (std::size_t k = 0; k < 4; ++k) p += Polynomial::variable(r, k).scaled(r->scalar(c(rng)));
        return p;
    };
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<Polynomial>> a(2), b(3);
        for (auto& row : a)
            for (int j = 0; j < 3; ++j) row.push_back(rand_linear());
        for (auto& row : b)
            for (int j = 0; j < 2; ++j) row.push_back(rand_linear());
        HomogeneousMatrix A(r, GradedFreeModule({0, 0}), GradedFreeModule({1, 1, 1}), a);
        HomogeneousMatrix B(r, GradedFreeModule({1, 1, 1}), GradedFreeModule({2, 2}), b);
        for (int d = 1; d <= 4; ++d) EXPECT_EQ(matrix_piece(A.compose(B), d), matrix_piece(A, d) * matrix_piece(B, d));
    }
}

TEST(Matrix, Operations) {
    auto r = p3();
    auto phi = mat(r, {{"x0", "x1", "x2"}, {"0", "x0", "x3"}});
    auto dual = phi.dual();
    EXPECT_EQ(dual.rows(), 3);
    EXPECT_EQ(dual.target().twists(), (std::vector<int>{-1, -1, -1}));
    EXPECT_EQ(dual.dual(), phi);
    auto sum = phi.combine_rows({{r->one(), r->one()}});
    EXPECT_EQ(sum.entry(0, 1), parse_polynomial("x0 + x1", r));
    auto mixed = mat(r, {{"x0", "x1^2"}, {"x2^2", "x3^3"}});
    EXPECT_THROW(mixed.combine_rows({{r->one(), r->one()}}), InputError);
    EXPECT_EQ(GradedFreeModule({0, 2, 2}).to_string(), "R + R(-2)^2");
}
