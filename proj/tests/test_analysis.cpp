#include <gtest/gtest.h>

#include <mpfr.h>

#include "gammaq/analysis.hpp"

using namespace gammaq;

namespace {

BigRational R(long p, long q = 1) { return BigRational(p, q); }

const PrecisionContext ctx30{};

BigFloat F(const char* s, const PrecisionContext& c = ctx30) { return BigFloat::from_string(s, c.bits()); }

double rel(const BigFloat& got, const BigFloat& want) { return deviation_from(got, want).to_double(); }

/// 1/(sqrt(pi) (4e)^{3/8})
BigFloat euler_c2(const PrecisionContext& c) {
    BigFloat four_e = BigFloat::from(4, c.bits()) * exp(BigFloat::from(1, c.bits()), c);
    return BigFloat::from(1, c.bits()) / (sqrt(pi(c), c) * pow(four_e, F("0.375", c), c));
}

BigFloat two_pi(const PrecisionContext& c) { return BigFloat::from(2, c.bits()) * pi(c); }

}  // namespace

TEST(Constants, EulerCaseMatchesClosedForm) {
    PrecisionContext c{40, 10};
    AsymptoticConstants k = constants(R(0), R(0), R(1), c);
    EXPECT_LT(rel(k.c2, euler_c2(c)), 1e-35);
    EXPECT_TRUE(k.c1.is_zero());
    EXPECT_LT(rel(k.c2, F("0.230564338807962")), 1e-14);
}

TEST(Constants, SpecialFamilyRatios) {
    PrecisionContext c{40, 10};
    AsymptoticConstants k1 = constants(R(-2, 3), R(-1, 2), R(1), c);
    EXPECT_LT(rel(k1.ratio, sqrt(pi(c), c) / gamma(R(1, 3), c)), 1e-35);
    AsymptoticConstants k2 = constants(R(-3, 4), R(-1, 2), R(1), c);
    EXPECT_LT(rel(k2.ratio, sqrt(two_pi(c), c) / gamma(R(1, 4), c)), 1e-35);
    EXPECT_LT(rel(k1.ratio, F("0.661625426616545")), 1e-14);
    EXPECT_LT(rel(k2.ratio, F("0.691367339036293")), 1e-14);
}

TEST(Constants, C1VanishesAsParametersMerge) {
    BigFloat prev = abs(constants(R(0), R(1, 2), R(1), ctx30).c1);
    for (long d = 4; d <= 4096; d *= 4) {
        BigFloat cur = abs(constants(R(0), R(1, d), R(1), ctx30).c1);
        EXPECT_LT(cur, prev);
        prev = cur;
    }
    EXPECT_LT(prev.to_double(), 1e-2);
}

TEST(Constants, Cor3RatioIsTwoPiAOverGamma) {
    BigRational a(1, 5);
    AsymptoticConstants k = constants(R(0), a, R(1), ctx30);
    BigFloat expected = two_pi(ctx30) * to_float(a, ctx30) / gamma(R(1) - a, ctx30);
    EXPECT_LT(rel(k.ratio, expected), 1e-28);
}

TEST(GammaQuotientTable, RejectsIntegerDifference) {
    EXPECT_THROW(gamma_quotient_table(R(1, 2), R(3, 2), R(1), {1}), domain_error);
    EXPECT_THROW(gamma_quotient_table(R(0), R(0), R(1), {1}), domain_error);
}

TEST(GammaQuotientTable, ZeroRowAndTarget) {
    auto rows = gamma_quotient_table(R(-2, 3), R(-1, 2), R(1), {0, 1, 2});
    EXPECT_EQ(rows[0].value_pq, BigFloat::from(1, 64));
    EXPECT_FALSE(rows[0].q_growth_ratio.has_value());
    // target = Gamma(1/2)/Gamma(1/3)
    EXPECT_LT(rel(rows[0].target, sqrt(pi(ctx30), ctx30) / gamma(R(1, 3), ctx30)), 1e-29);
    // p1/q1 = (43/54)/(29/24)
    EXPECT_LT(rel(rows[1].value_pq, to_float(R(43, 54) / R(29, 24), ctx30)), 1e-29);
}

TEST(GammaQuotientTable, Cor1ConvergesToRatio) {
    TableOptions opt;
    opt.threads = 4;
    auto rows = gamma_quotient_table(R(-2, 3), R(-1, 2), R(1), {64, 100, 128, 256, 512}, opt);
    BigFloat ratio = constants(R(-2, 3), R(-1, 2), R(1), ctx30).ratio;
    // The O(n^{-1/2}) correction is still about 16% at n = 100.
    EXPECT_LT(rel(rows[1].normalized_error, ratio), 0.20);
    EXPECT_LT(rel(rows[3].normalized_error, ratio), 0.15);
    double prev = 1.0;
    for (std::size_t i : {0, 2, 3, 4}) {
        double d = rel(rows[i].normalized_error, ratio);
        EXPECT_LT(d, prev) << rows[i].n;
        prev = d;
    }
    // Oracle values of normalized/ratio.
    EXPECT_NEAR((rows[0].normalized_error / ratio).to_double(), 0.796, 0.002);
    EXPECT_NEAR((rows[4].normalized_error / ratio).to_double(), 0.923, 0.002);
}

TEST(GammaQuotientTable, Cor3ApproachesTwoPiA) {
    BigRational a(1, 5);
    auto rows = gamma_quotient_table(R(0), a, R(1), {64, 128, 256});
    BigFloat limit = two_pi(ctx30) * to_float(a, ctx30) / gamma(R(1) - a, ctx30);
    EXPECT_NEAR(rows[0].normalized_error.to_double(), 0.914137544673, 1e-10);
    EXPECT_NEAR(rows[1].normalized_error.to_double(), 0.95969390788, 1e-10);
    EXPECT_NEAR(rows[2].normalized_error.to_double(), 0.993291394269, 1e-10);
    EXPECT_LT(rel(rows[2].normalized_error, limit), rel(rows[1].normalized_error, limit));
}

TEST(PsiTable, EulerCaseTarget) {
    auto rows = psi_table(R(0), R(1), {1});
    EXPECT_LT(rel(rows[0].target, euler_gamma(ctx30)), 1e-29);
    EXPECT_THROW(psi_table(R(-1), R(1), {1}), domain_error);
    EXPECT_THROW(psi_table(R(0), R(0), {1}), domain_error);
}

TEST(PsiTable, NormalizedErrorApproachesTwoPi) {
    TableOptions opt;
    opt.threads = 3;
    auto rows = psi_table(R(0), R(1), {256}, opt);
    EXPECT_LT(rel(rows[0].normalized_error, two_pi(ctx30)), 0.15);

    auto half = psi_table(R(1, 2), R(2), {64, 128, 256, 512}, opt);
    std::vector<double> oracle{0.812, 0.863, 0.901, 0.929};
    double prev = 1.0;
    for (std::size_t i = 0; i < half.size(); ++i) {
        double ratio = (half[i].normalized_error / two_pi(ctx30)).to_double();
        EXPECT_NEAR(ratio, oracle[i], 0.002) << half[i].n;
        double d = std::abs(1 - ratio);
        EXPECT_LT(d, prev);
        prev = d;
    }
}

TEST(EulerTable, ConstantsAtNTwoHundred) {
    auto rows = euler_table({200});
    const ConvergenceRow& r = rows[0];
    BigFloat c2 = euler_c2(ctx30);
    EXPECT_LT(rel(*r.q_growth_ratio, c2), 0.10);
    BigFloat lf = BigFloat::from(2, ctx30.bits()) * pi(ctx30) * c2;  // 2 sqrt(pi)/(4e)^{3/8}
    EXPECT_LT(rel(*r.linear_form_ratio, lf), 0.10);
}

TEST(EulerTable, TrendsAndOracleValues) {
    TableOptions opt;
    opt.threads = 4;
    auto rows = euler_table({64, 128, 256, 512}, opt);
    BigFloat c2 = euler_c2(ctx30);
    BigFloat lf = BigFloat::from(2, ctx30.bits()) * pi(ctx30) * c2;
    std::vector<double> norm{0.836, 0.881, 0.915, 0.939};
    std::vector<double> lf_dev{-0.089, -0.063, -0.045, -0.0316};
    std::vector<double> growth_dev{0.0887, 0.0629, 0.0445, 0.0315};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_NEAR((rows[i].normalized_error / two_pi(ctx30)).to_double(), norm[i], 0.002);
        EXPECT_NEAR(((*rows[i].linear_form_ratio - lf) / lf).to_double(), lf_dev[i], 0.002);
        EXPECT_NEAR(((*rows[i].q_growth_ratio - c2) / c2).to_double(), growth_dev[i], 0.002);
        EXPECT_EQ(rows[i].error_sign, rows[0].error_sign);
    }
}

TEST(EulerTable, SameObjectsAsPsiAtZeroOne) {
    auto e = euler_table({1, 10, 40});
    auto p = psi_table(R(0), R(1), {1, 10, 40});
    for (std::size_t i = 0; i < e.size(); ++i) {
        EXPECT_EQ(e[i].value_pq, p[i].value_pq);
        EXPECT_EQ(e[i].normalized_error, p[i].normalized_error);
    }
}

TEST(EulerTable, RejectsUnorderedList) { EXPECT_THROW(euler_table({4, 2}), domain_error); }

TEST(EulerTable, ThreadCountDoesNotChangeOutput) {
    TableOptions one, many;
    many.threads = 8;
    auto a = euler_table({5, 50, 150, 300}, one);
    auto b = euler_table({5, 50, 150, 300}, many);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].abs_error.str(60), b[i].abs_error.str(60));
        EXPECT_EQ(a[i].digits, b[i].digits);
    }
}

TEST(GrowthTable, WithinTenPercentAtTwoHundred) {
    auto e = qn_growth_table(R(0), R(0), R(1), {200});
    EXPECT_LT(e[0].relative_deviation.to_double(), 0.10);
    auto c = qn_growth_table(R(-2, 3), R(-1, 2), R(1), {200});
    EXPECT_LT(c[0].relative_deviation.to_double(), 0.10);
    EXPECT_THROW(qn_growth_table(R(0), R(0), R(1), {0}), domain_error);
}

TEST(GrowthTable, DeviationHalvesPerFourfoldN) {
    TableOptions opt;
    opt.threads = 4;
    for (auto [a1, a2] : {std::pair{R(0), R(0)}, std::pair{R(-2, 3), R(-1, 2)}}) {
        auto rows = qn_growth_table(a1, a2, R(1), {50, 200, 800}, opt);
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            double factor = (rows[i].relative_deviation / rows[i + 1].relative_deviation).to_double();
            EXPECT_GE(factor, 1.5) << rows[i].n;
            EXPECT_LE(factor, 3.0) << rows[i].n;
        }
    }
}

TEST(Precision, AutoDigitsGrowWithN) {
    auto rows = euler_table({1, 512});
    EXPECT_GT(rows[1].digits, rows[0].digits);
    EXPECT_GE(rows[0].digits, ctx30.working_digits);
}
