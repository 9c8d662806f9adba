#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "untwist/catalog.hpp"
#include "untwist/obstruction.hpp"

using namespace untwist;

namespace {

IntMatrix im(std::size_t n, std::vector<int> entries) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Int(entries[i * n + j]);
    return m;
}

const SeifertMatrix kUnknot{IntMatrix(0, 0)};
const SeifertMatrix kTrefoil{im(2, {-1, 1, 0, -1})};
const SeifertMatrix kSix1{im(2, {1, 0, 1, -2})};
const SeifertMatrix kGranny{im(4, {-1, 1, 0, 0, 0, -1, 0, 0,
                                   0, 0, -1, 1, 0, 0, 0, -1})};

TEST(AlexanderObstruction, PinnedExamples) {
    AlexanderResult r = alexander_obstruction(LaurentPoly(1), Int(5));
    ASSERT_TRUE(r.passed());
    EXPECT_EQ(*r.alpha, LaurentPoly());

    r = alexander_obstruction(parse_laurent("t^-1 - 1 + t"), Int(2));
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.failing->exponent, -1);
    EXPECT_EQ(r.failing->value, Int(1));

    r = alexander_obstruction(parse_laurent("-2*t^-1 + 5 - 2*t"), Int(2));
    ASSERT_TRUE(r.passed());
    EXPECT_EQ(*r.alpha, parse_laurent("-t^-1 + 2 - t"));

    r = alexander_obstruction(parse_laurent("t^-1 - 1 + t"), Int(1));
    ASSERT_TRUE(r.passed());
    EXPECT_EQ(*r.alpha, parse_laurent("t^-1 - 2 + t"));
}

TEST(AlexanderObstruction, ContractErrors) {
    EXPECT_THROW(alexander_obstruction(LaurentPoly(1), Int(0)), Error);
    EXPECT_THROW(alexander_obstruction(parse_laurent("t"), Int(2)), Error);
    EXPECT_THROW(alexander_obstruction(parse_laurent("t^-1 + 1 + t"), Int(2)),
                 Error);
}

TEST(CandidateMatrix, PinnedExamples) {
    CandidateMatrix c = candidate_matrix(LaurentPoly(), Int(3));
    EXPECT_EQ(det(c.matrix()), LaurentPoly(-1));
    EXPECT_TRUE(is_hermitian(c.matrix()));

    // -(1 + 2*alpha), i.e. the negated Alexander polynomial of 6_1
    c = candidate_matrix(parse_laurent("-t^-1 + 2 - t"), Int(2));
    EXPECT_EQ(det(c.matrix()), parse_laurent("2*t^-1 - 5 + 2*t"));

    c = candidate_matrix(parse_laurent("t^-1 - 2 + t"), Int(1));
    EXPECT_EQ(det(c.matrix()), parse_laurent("-t^-1 + 1 - t"));

    EXPECT_THROW(candidate_matrix(parse_laurent("t"), Int(1)), Error);
    EXPECT_THROW(candidate_matrix(parse_laurent("t^-1 + 1 + t"), Int(1)), Error);
    EXPECT_THROW(candidate_matrix(LaurentPoly(), Int(0)), Error);
}

TEST(CandidateMatrix, DeterminantIdentityOnRandomInputs) {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly alpha = testsupport::random_alpha(rng);
        Int k = testsupport::random_nonzero_k(rng);
        CandidateMatrix c = candidate_matrix(alpha, k);
        LaurentPoly expected = -(LaurentPoly(1) + LaurentPoly(k) * alpha);
        EXPECT_EQ(det(c.matrix()), expected);
    }
}

TEST(EvenForm, PinnedExamples) {
    EXPECT_TRUE(is_even_form(im(2, {0, 1, 1, -2})));
    EXPECT_FALSE(is_even_form(im(2, {0, 1, 1, -3})));
    EXPECT_TRUE(is_even_form(im(2, {0, 1, 1, 0})));
    EXPECT_THROW(is_even_form(im(2, {0, 1, 2, 0})), Error);
}

TEST(UaBound, ParityRule) {
    EXPECT_EQ(ua_bound(Int(1)), 2);
    EXPECT_EQ(ua_bound(Int(2)), 3);
    EXPECT_EQ(ua_bound(Int(-3)), 2);
    EXPECT_THROW(ua_bound(Int(0)), Error);
    for (int k = -8; k <= 8; ++k) {
        if (k == 0) continue;
        IntMatrix at_one(2, 2);
        at_one(0, 0) = 0;
        at_one(0, 1) = 1;
        at_one(1, 0) = 1;
        at_one(1, 1) = Int(-k);
        EXPECT_EQ(ua_bound(Int(k)) == 3, is_even_form(at_one));
        EXPECT_EQ(ua_bound(Int(k)) == 3, k % 2 == 0);
    }
}

TEST(Cyclicity, PinnedExamples) {
    CyclicityResult r = cyclicity_obstruction(kUnknot);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.invariant_factors.empty());

    r = cyclicity_obstruction(kSix1);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.invariant_factors, (std::vector<Int>{Int(9)}));

    r = cyclicity_obstruction(kGranny);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.invariant_factors, (std::vector<Int>{Int(3), Int(3)}));
}

TEST(LinkingObstruction, UnknotPassesTrivially) {
    for (int k : {1, -1, 2, 5}) {
        LinkingResult r = linking_obstruction(kUnknot, LaurentPoly(), Int(k));
        EXPECT_EQ(r.status, LinkingStatus::Pass);
        EXPECT_EQ(*r.d, Int(0));
        EXPECT_TRUE(r.knot_form->is_trivial());
        EXPECT_TRUE(r.candidate_form->is_trivial());
    }
}

TEST(LinkingObstruction, Six1AtTwoMatchesBruteforce) {
    LaurentPoly alpha = parse_laurent("-t^-1 + 2 - t");
    LinkingResult r = linking_obstruction(kSix1, alpha, Int(2));
    EXPECT_EQ(*r.d, Int(4));
    EXPECT_EQ(r.knot_form->n, Int(9));
    EXPECT_EQ(r.candidate_form->n, Int(9));

    LinkingForm doubled = scale_form(linking_form_of(symmetrized_form(kSix1)), 2);
    IntMatrix b = im(2, {4, 1, 1, -2});
    bool oracle = isometric_bruteforce(doubled, linking_form_of(b));
    EXPECT_EQ(r.status == LinkingStatus::Pass, oracle);
    EXPECT_EQ(r.status, LinkingStatus::Pass) << "twist knots pass the linking test";
}

TEST(LinkingObstruction, TrefoilEvaluatesDNotItsAbsoluteValue) {
    // alpha(-1) = -4 here; using |determinant| in its place would give +4 and
    // a contract failure, since d*k + 1 must equal the determinant at -1 (-3)
    LaurentPoly alpha = parse_laurent("t^-1 - 2 + t");
    LinkingResult r = linking_obstruction(kTrefoil, alpha, Int(1));
    EXPECT_EQ(*r.d, Int(-4));
    EXPECT_EQ(r.knot_form->n, Int(3));
    EXPECT_EQ(r.candidate_form->n, Int(3));
    EXPECT_EQ(r.status, LinkingStatus::Pass);
}

TEST(LinkingObstruction, TrefoilFailsForNegativeOne) {
    // alexander and cyclicity pass for k = -1, but the doubled linking form
    // of the trefoil is 2/3 while the candidate form is 1/3
    AlexanderResult a =
        alexander_obstruction(alexander_polynomial(kTrefoil), Int(-1));
    ASSERT_TRUE(a.passed());
    LinkingResult r = linking_obstruction(kTrefoil, *a.alpha, Int(-1));
    EXPECT_EQ(r.status, LinkingStatus::Fail);

    ObstructionReport report = evaluate(kTrefoil, Int(-1), "3_1");
    EXPECT_EQ(report.verdict, Verdict::Obstructed);
    EXPECT_TRUE(report.alexander.passed());
    EXPECT_TRUE(report.cyclicity.passed);
}

TEST(Evaluate, PinnedExamples) {
    ObstructionReport r = evaluate(kUnknot, Int(5), "unknot");
    EXPECT_EQ(r.verdict, Verdict::NotObstructed);
    EXPECT_EQ(*r.ua, 2);
    EXPECT_EQ(*r.n_rk, 1);
    EXPECT_FALSE(r.notes.empty());

    r = evaluate(kTrefoil, Int(2), "3_1");
    EXPECT_EQ(r.verdict, Verdict::Obstructed);
    EXPECT_FALSE(r.alexander.passed());
    EXPECT_EQ(r.linking.status, LinkingStatus::Skipped);
    EXPECT_FALSE(r.ua.has_value());
    EXPECT_FALSE(r.n_rk.has_value());

    r = evaluate(kGranny, Int(1), "3_1#3_1");
    EXPECT_EQ(r.verdict, Verdict::Obstructed);
    EXPECT_TRUE(r.alexander.passed());
    EXPECT_FALSE(r.cyclicity.passed);
    EXPECT_EQ(r.linking.status, LinkingStatus::Skipped);

    EXPECT_THROW(evaluate(kUnknot, Int(0)), Error);
}

TEST(Scan, PinnedExamples) {
    auto reports = scan(kUnknot, Int(-2), Int(2), "unknot");
    ASSERT_EQ(reports.size(), 4u);
    for (const auto& r : reports)
        EXPECT_EQ(r.verdict, Verdict::NotObstructed);
    EXPECT_EQ(reports[0].k, Int(-2));
    EXPECT_EQ(reports[1].k, Int(-1));
    EXPECT_EQ(reports[2].k, Int(1));
    EXPECT_EQ(reports[3].k, Int(2));

    reports = scan(kTrefoil, Int(1), Int(3), "3_1");
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_EQ(reports[0].verdict, Verdict::NotObstructed);
    EXPECT_EQ(reports[1].verdict, Verdict::Obstructed);
    EXPECT_EQ(reports[2].verdict, Verdict::Obstructed);
    EXPECT_EQ(reports[2].alexander.failing->exponent, -1);

    EXPECT_TRUE(scan(kUnknot, Int(0), Int(0)).empty());
    EXPECT_THROW(scan(kUnknot, Int(2), Int(1)), Error);
}

TEST(RkReduction, PinnedExamples) {
    RkReduction r = rk_reduction(LaurentPoly(), Int(1));
    EXPECT_EQ(r.diag_first, RationalLaurentPoly(Rational(1)));
    EXPECT_EQ(r.diag_second, RationalLaurentPoly(Rational(-1)));
    EXPECT_EQ(r.p(1, 0), Rational(1));

    r = rk_reduction(LaurentPoly(), Int(2));
    EXPECT_EQ(r.diag_first, RationalLaurentPoly(Rational(1, 2)));
    EXPECT_EQ(r.diag_second, RationalLaurentPoly(Rational(-2)));

    EXPECT_THROW(rk_reduction(LaurentPoly(), Int(0)), Error);
    EXPECT_THROW(rk_reduction(parse_laurent("t"), Int(1)), Error);
}

TEST(RkReduction, CongruenceIdentityOnRandomInputs) {
    std::mt19937 rng(950);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly alpha = testsupport::random_alpha(rng);
        Int k = testsupport::random_nonzero_k(rng);
        RkReduction r = rk_reduction(alpha, k);

        RationalLaurentPoly expected_first =
            to_rational(alpha) + RationalLaurentPoly(Rational(1) / Rational(k));
        EXPECT_EQ(r.diag_first, expected_first);
        EXPECT_EQ(r.diag_second, RationalLaurentPoly(Rational(-k)));
        EXPECT_EQ(det(r.p), Rational(1));

        // determinant preserved: diag product equals -(1 + k alpha)
        RationalLaurentPoly detval = r.diag_first * r.diag_second;
        RationalLaurentPoly minus_delta =
            -(RationalLaurentPoly(Rational(1)) +
              RationalLaurentPoly(Rational(k)) * to_rational(alpha));
        EXPECT_EQ(detval, minus_delta);
    }
}

TEST(AlexanderObstruction, RoundTripOnRandomInputs) {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly alpha = testsupport::random_alpha(rng);
        Int k = testsupport::random_nonzero_k(rng);
        LaurentPoly delta = LaurentPoly(1) + LaurentPoly(k) * alpha;
        AlexanderResult r = alexander_obstruction(delta, k);
        ASSERT_TRUE(r.passed());
        EXPECT_EQ(*r.alpha, alpha);
        // derived identities
        EXPECT_EQ(LaurentPoly(1) + LaurentPoly(k) * *r.alpha, delta);
        Int d = eval_at_unit(*r.alpha, -1);
        EXPECT_EQ(d * k + 1, eval_at_unit(delta, -1));
    }
}

TEST(Evaluate, PresentationInvarianceSpotCheck) {
    std::mt19937 rng(2025);
    const int ks[] = {1, -1, 2, -2, 3};
    for (const KnotRecord& rec : bundled_catalog()) {
        for (int k : ks) {
            ObstructionReport base = evaluate(rec.seifert, Int(k), rec.name);
            for (int trial = 0; trial < 5; ++trial) {
                IntMatrix e = testsupport::random_unimodular(
                    rng, rec.seifert.matrix().rows());
                SeifertMatrix moved(
                    testsupport::congruent(rec.seifert.matrix(), e));
                ObstructionReport other = evaluate(moved, Int(k), rec.name);
                EXPECT_EQ(other.verdict, base.verdict)
                    << rec.name << " k=" << k;
                ASSERT_EQ(other.alexander.passed(), base.alexander.passed());
                if (base.alexander.passed()) {
                    EXPECT_EQ(*other.alexander.alpha, *base.alexander.alpha);
                }
                if (base.linking.knot_form && other.linking.knot_form) {
                    EXPECT_TRUE(isometric_cyclic(*other.linking.knot_form,
                                                 *base.linking.knot_form));
                }
            }
        }
    }
}

}  // namespace
