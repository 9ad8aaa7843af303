#include <gtest/gtest.h>

#include "common.hpp"
#include "detscheme/degree_piece.hpp"
#include "detscheme/errors.hpp"

using namespace detscheme;
using namespace fixtures;

TEST(Minors, NonGoodExample) {
    auto r = p3();
    auto m = minors(nongood(r).matrix(), 2);
    std::vector<Polynomial> expect;
    for (const char* s : {"x1^2", "x1*x2", "x1*x3", "x2^2 - x1*x3", "x2*x3", "x3^2"}) expect.push_back(parse_polynomial(s, r));
    EXPECT_EQ(m.generators(), expect);
    auto sq = ideal(r, {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"});
    EXPECT_TRUE(ideal_equal(m, sq));
}

TEST(Minors, AxesAndEntries) {
    auto r = p3();
    auto m = minors(axes(r).matrix(), 2);
    EXPECT_TRUE(ideal_equal(m, ideal(r, {"x2*x3", "x1*x3", "x1*x2"})));
    EXPECT_EQ(m.size(), 3u);
    auto e = minors(curve(r).matrix(), 1);
    EXPECT_TRUE(ideal_equal(e, IdealBasis::irrelevant(r)));
    EXPECT_THROW(minors(curve(r).matrix(), 3), InputError);
    EXPECT_THROW(minors(curve(r).matrix(), 0), InputError);
}

TEST(Minors, CacheMatchesCofactorFormula) {
    auto r = p3();
    auto phi = mat(r, {{"x0", "x1", "x2"}, {"x1", "x2", "x3"}, {"x2", "x3", "x0"}});
    MinorCache c(phi);
    auto det = c.det({0, 1, 2}, {0, 1, 2});
    auto E = [&](int i, int j) { return phi.entry(i, j); };
    auto expect = E(0, 0) * (E(1, 1) * E(2, 2) - E(1, 2) * E(2, 1)) - E(0, 1) * (E(1, 0) * E(2, 2) - E(1, 2) * E(2, 0)) +
                  E(0, 2) * (E(1, 0) * E(2, 1) - E(1, 1) * E(2, 0));
    EXPECT_EQ(det, expect);
}

TEST(Classify, Examples) {
    auto r = p3();
    auto a = classify(nongood(r));
    EXPECT_TRUE(a.is_standard);
    EXPECT_FALSE(a.is_good);
    EXPECT_EQ(a.actual_height, Height::finite(3));
    EXPECT_EQ(a.submaximal_height, Height::finite(3));
    EXPECT_EQ(a.expected_codim, 3);

    auto b = classify(curve(r));
    EXPECT_TRUE(b.is_good);
    EXPECT_EQ(b.actual_height, Height::finite(2));
    EXPECT_EQ(b.submaximal_height, Height::finite(4));

    auto c = classify(ci2(r));
    EXPECT_TRUE(c.is_standard);
    EXPECT_TRUE(c.is_good);
    EXPECT_TRUE(c.submaximal_height.is_infinite());

    EXPECT_TRUE(classify(axes(r)).is_good);
    EXPECT_FALSE(classify(axes(r)).empty_scheme);

    // 1x4 of the variables: height 4 = n+1, empty scheme
    auto e = classify(pres(r, {{"x0", "x1", "x2", "x3"}}));
    EXPECT_TRUE(e.empty_scheme);
    EXPECT_TRUE(e.is_standard);

    // height deficit
    auto d = classify(pres(r, {{"x0", "x1", "0", "0"}, {"0", "x0", "x1", "0"}}));
    EXPECT_FALSE(d.is_standard);
    EXPECT_FALSE(d.is_good);
}

TEST(Classify, InvariantUnderPermutationsAndOrder) {
    auto r = p3();
    auto lex = r->with_order(MonomialOrder::lex());
    for (auto make : {nongood, curve, axes}) {
        auto p = make(r);
        auto base = classify(p);
        std::vector<int> cols;
        for (int j = p.matrix().cols() - 1; j >= 0; --j) cols.push_back(j);
        auto perm = DeterminantalPresentation(p.matrix().select_columns(cols).select_rows({1, 0}));
        auto q = classify(perm);
        EXPECT_EQ(q.is_good, base.is_good);
        EXPECT_EQ(q.actual_height, base.actual_height);
        auto pl = make(lex);
        auto ql = classify(pl);
        EXPECT_EQ(ql.is_good, base.is_good);
        EXPECT_EQ(ql.submaximal_height, base.submaximal_height);
    }
}

TEST(Classify, GeneratorCountIsBinomial) {
    auto r = p3();
    for (const auto& p : {nongood(r), curve(r), axes(r), ci2(r), ci3(r), random_2x4(r)}) {
        ASSERT_TRUE(classify(p).is_standard);
        int total = 0;
        for (auto [d, c] : minimal_generator_count(p.maximal_minors())) total += c;
        EXPECT_EQ(total, binomial(p.t() + p.r(), p.r()));
    }
}

TEST(Minors, Containment) {
    auto r = p3();
    for (const auto& p : {nongood(r), curve(r), axes(r), random_2x4(r)}) {
        for (int s = 2; s <= p.t(); ++s) {
            auto lower = groebner_basis(minors(p.matrix(), s - 1));
            EXPECT_TRUE(ideal_contains(lower, minors(p.matrix(), s)));
        }
    }
}

TEST(GeneralizedRow, Examples) {
    auto r = p3();
    auto axes_w = find_generalized_row(axes(r), 7);
    ASSERT_TRUE(axes_w);
    EXPECT_TRUE(axes_w->verified);
    EXPECT_FALSE(axes_w->deletion.literal_row);
    EXPECT_EQ(axes_w->kept_height, Height::finite(3));
    // literal rows fail for the axes
    for (int row = 0; row < 2; ++row) {
        auto kept = apply_deletion(axes(r).matrix(), RowDeletion::literal(2, row, r->field()));
        EXPECT_LT(height(minors(kept, 1)), Height::finite(3));
    }

    auto cw = find_generalized_row(curve(r), 7);
    ASSERT_TRUE(cw);
    EXPECT_EQ(cw->deletion.literal_row, std::optional<int>(1));
    EXPECT_EQ(cw->kept_height, Height::finite(3));

    auto tw = find_generalized_row(ci2(r), 7);
    ASSERT_TRUE(tw);
    EXPECT_TRUE(tw->verified);
    EXPECT_TRUE(tw->deletion.kept.empty());

    EXPECT_THROW(find_generalized_row(nongood(r), 7), InputError);
}

TEST(GeneralizedRow, WitnessImpliesGood) {
    auto r = p3();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto p = random_2x4(r, seed);
        if (!classify(p).is_good) continue;
        auto w = find_generalized_row(p, seed);
        if (w) {
            EXPECT_TRUE(w->verified);
            auto kept = apply_deletion(p.matrix(), w->deletion);
            EXPECT_GE(height(minors(kept, kept.rows())), p.r() + 2);
        }
    }
}

TEST(Augment, Examples) {
    auto r = p3();
    auto psi = augment_general_row(ci3(r), std::nullopt, 1);
    EXPECT_EQ(psi.t(), 2);
    auto rep = classify(psi);
    EXPECT_TRUE(rep.is_good);
    EXPECT_EQ(rep.expected_codim, 2);

    auto ng = nongood(r);
    auto big = augment_general_row(ng, std::nullopt, 3);
    EXPECT_EQ(big.t(), 3);
    EXPECT_TRUE(classify(big).is_good);
    EXPECT_TRUE(ideal_contains(groebner_basis(ng.maximal_minors()), big.maximal_minors()));

    EXPECT_THROW(augment_general_row(ci3(r), 2, 1), InputError);
    EXPECT_THROW(augment_general_row(pres(r, {{"x0"}}), std::nullopt, 1), InputError);
}

TEST(Augment, Deterministic) {
    auto r = p3();
    EXPECT_EQ(augment_general_row(curve(r), std::nullopt, 9).matrix(), augment_general_row(curve(r), std::nullopt, 9).matrix());
}

TEST(Flag, Examples) {
    auto r = p3();
    auto f = build_flag(curve(r), 5);
    ASSERT_EQ(f.stages.size(), 2u);
    EXPECT_EQ(f.steps(), 1);
    EXPECT_TRUE(f.verified());
    EXPECT_EQ(f.stages[1].report.expected_codim, 1);

    auto g = build_flag(ci3(r), 5);
    ASSERT_EQ(g.stages.size(), 3u);
    EXPECT_TRUE(g.verified());
    std::vector<int> codims;
    for (const auto& s : g.stages) codims.push_back(s.report.expected_codim);
    EXPECT_EQ(codims, (std::vector<int>{3, 2, 1}));

    auto h = build_flag(pres(r, {{"x0"}}), 5);
    EXPECT_EQ(h.steps(), 0);
    EXPECT_THROW(build_flag(nongood(r), 5), InputError);
}

TEST(Section, AugmentedFixtures) {
    auto r = p3();
    for (const auto& p : {nongood(r), curve(r), axes(r), ci2(r), ci3(r)}) {
        auto psi = augment_general_row(p, std::nullopt, 11);
        auto seq = section_sequence(psi, RowDeletion::literal(psi.t(), psi.t() - 1, r->field()), 10);
        EXPECT_TRUE(seq.verified) << psi.matrix().to_string();
        EXPECT_EQ(seq.phi, p.matrix());
        EXPECT_EQ(seq.degrees.size(), 11u);
    }
}

TEST(Section, GeneralizedRowOfCurve) {
    auto r = p3();
    auto w = find_generalized_row(curve(r), 3);
    ASSERT_TRUE(w);
    auto seq = section_sequence(curve(r), w->deletion, 10);
    EXPECT_TRUE(seq.verified);
    EXPECT_EQ(seq.twist, 0);
}

TEST(Section, ZeroDimensionalEventualAgreement) {
    auto r = p3();
    auto p = random_2x4(r);
    ASSERT_TRUE(classify(p).is_good);
    auto w = find_generalized_row(p, 1);
    ASSERT_TRUE(w);
    auto seq = section_sequence(p, w->deletion, 10);
    EXPECT_TRUE(seq.verified);
    // deleting leaves an empty scheme: coker has finite length
    EXPECT_EQ(seq.degrees.back().hf_x, 0);
    EXPECT_EQ(seq.degrees.back().hf_s, seq.degrees.back().hf_quotient);
}

TEST(Section, Errors) {
    auto r = p3();
    EXPECT_THROW(section_sequence(ci3(r), RowDeletion::literal(1, 0, r->field()), 5), InputError);
    // deleting a literal row of the axes leaves a height-2 ideal: not standard of codim 3
    EXPECT_THROW(section_sequence(axes(r), RowDeletion::literal(2, 0, r->field()), 5), InputError);
}
