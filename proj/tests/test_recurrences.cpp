#include <gtest/gtest.h>

#include <random>

#include "gammaq/recurrences.hpp"

using namespace gammaq;

namespace {

BigRational q(long p, long d = 1) { return BigRational(BigInt(p), BigInt(d)); }

RationalPolynomial expanded(std::initializer_list<long> ascending) {
    std::vector<BigRational> c;
    for (long v : ascending) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

struct ExpandedTerm {
    long coef;
    unsigned n_pow, a_pow;
};

BigRational eval_na(const std::vector<ExpandedTerm>& terms, const BigRational& n, const BigRational& a) {
    BigRational s(0);
    for (const auto& t : terms) s += BigRational(t.coef) * pow(n, t.n_pow) * pow(a, t.a_pow);
    return s;
}

// Fully expanded homogeneous coefficients (lowest term first), produced by
// sympy from the printed relations; see tests/oracles/recurrence_oracle.py.
const std::vector<RationalPolynomial>& expanded_aptekarev() {
    static const std::vector<RationalPolynomial> c = {
        expanded({0, 0, -1, -14, 31, -16}),
        expanded({0, 0, -7, 64, -240, 256}),
        expanded({45, 82, -40, -128}),
        expanded({-15, 16}),
    };
    return c;
}

const std::vector<RationalPolynomial>& expanded_cor1() {
    static const std::vector<RationalPolynomial> c = {
        expanded({-107322215, -1096221453, -4694169754, -11192580630, -16600908456, -16127788824, -10459598688,
                  -4494489120, -1229572224, -193995648, -13436928}),
        expanded({8506739670, 63936474864, 211248194004, 405119537016, 500432997312, 416778022080, 237338952768,
                  91355589504, 22766635008, 3318921216, 214990848}),
        expanded({-2187165240, -13700398140, -36243057600, -52832537496, -46224385344, -24835743072, -8017740288,
                  -1426553856, -107495424}),
        expanded({44929728, 249166368, 556520544, 636356736, 384865344, 115613568, 13436928}),
    };
    return c;
}

const std::vector<RationalPolynomial>& expanded_cor2() {
    static const std::vector<RationalPolynomial> c = {
        expanded({45855, 166734, -753640, -3477664, -726656, 13244928, 18253824, -3465216, -24018944, -17825792,
                  -4194304}),
        expanded({-16110, -116928, -3784672, -29199872, -67416576, 30392320, 401367040, 783155200, 739770368,
                  352321536, 67108864}),
        expanded({5156640, -2883168, -20518784, 43855360, 50075648, -169312256, -301465600, -171966464, -33554432}),
        expanded({-479232, 985088, 1071104, -5210112, 1474560, 10485760, 4194304}),
    };
    return c;
}

const std::vector<std::vector<ExpandedTerm>>& expanded_cor3() {
    static const std::vector<std::vector<ExpandedTerm>> c = {
        {{-16, 8, 0},  {-36, 7, 1}, {-97, 7, 0}, {2, 6, 2},   {-191, 6, 1}, {-229, 6, 0}, {60, 5, 3},  {35, 5, 2},
         {-390, 5, 1}, {-265, 5, 0}, {42, 4, 4}, {273, 4, 3}, {115, 4, 2},  {-385, 4, 1}, {-151, 4, 0}, {-12, 3, 5},
         {125, 3, 4},  {468, 3, 3}, {166, 3, 2}, {-184, 3, 1}, {-34, 3, 0}, {-26, 2, 6},  {-69, 2, 5}, {145, 2, 4},
         {406, 2, 3},  {118, 2, 2}, {-34, 2, 1}, {-12, 1, 7}, {-63, 1, 6},  {-78, 1, 5},  {99, 1, 4},  {184, 1, 3},
         {34, 1, 2},   {-2, 0, 8},  {-13, 0, 7}, {-31, 0, 6}, {-21, 0, 5},  {33, 0, 4},   {34, 0, 3}},
        {{256, 8, 0},   {576, 7, 1},   {1808, 7, 0}, {288, 6, 2},   {3536, 6, 1}, {5296, 6, 0},  {-304, 5, 3},
         {1516, 5, 2},  {8862, 5, 1},  {8377, 5, 0}, {-472, 4, 4},  {-1244, 4, 3}, {3384, 4, 2}, {11753, 4, 1},
         {7741, 4, 0},  {-264, 3, 5},  {-1488, 3, 4}, {-1650, 3, 3}, {4036, 3, 2}, {8852, 3, 1},  {4177, 3, 0},
         {-72, 2, 6},   {-576, 2, 5},  {-1554, 2, 4}, {-836, 2, 3},  {2676, 2, 2}, {3727, 2, 1},  {1215, 2, 0},
         {-8, 1, 7},    {-92, 1, 6},   {-388, 1, 5}, {-665, 1, 4},  {-78, 1, 3},  {921, 1, 2},   {784, 1, 1},
         {146, 1, 0},   {-4, 0, 7},    {-30, 0, 6},  {-89, 0, 5},   {-95, 0, 4},  {35, 0, 3},    {125, 0, 2},
         {58, 0, 1}},
        {{-128, 6, 0},  {-224, 5, 1}, {-808, 5, 0},  {-112, 4, 2}, {-1228, 4, 1}, {-1910, 4, 0}, {20, 3, 3},
         {-601, 3, 2},  {-2446, 3, 1}, {-2035, 3, 0}, {42, 2, 4},  {-45, 2, 3},   {-1085, 2, 2}, {-2063, 2, 1},
         {-887, 2, 0},  {16, 1, 5},   {47, 1, 4},    {-176, 1, 3}, {-715, 1, 2},  {-592, 1, 1},  {-82, 1, 0},
         {2, 0, 6},     {11, 0, 5},   {-3, 0, 4},    {-91, 0, 3},  {-113, 0, 2},  {14, 0, 1}},
        {{16, 4, 0}, {20, 3, 1}, {49, 3, 0}, {10, 2, 2}, {54, 2, 1}, {35, 2, 0}, {2, 1, 3}, {23, 1, 2}, {27, 1, 1},
         {2, 1, 0},  {4, 0, 3},  {6, 0, 2},  {-2, 0, 1}},
    };
    return c;
}

void expect_transcribed(const RecurrenceSpec& spec, const std::vector<RationalPolynomial>& reference) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(-1000, 1000);
    ASSERT_EQ(spec.coefficients.size(), reference.size());
    for (std::size_t j = 0; j < reference.size(); ++j) {
        for (int trial = 0; trial < 3; ++trial) {
            BigRational n(pick(rng));
            EXPECT_EQ(spec.coefficients[j].evaluate(n), reference[j].evaluate(n)) << spec.name << " c" << j << " n=" << n;
        }
    }
}

}  // namespace

TEST(Transcription, Aptekarev) { expect_transcribed(builtin(RecurrenceName::aptekarev), expanded_aptekarev()); }
TEST(Transcription, Cor1) { expect_transcribed(builtin(RecurrenceName::cor1), expanded_cor1()); }
TEST(Transcription, Cor2) { expect_transcribed(builtin(RecurrenceName::cor2), expanded_cor2()); }

TEST(Transcription, Cor3) {
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> pick(-500, 500);
    for (const auto& a : {q(1, 5), q(-1, 3), q(1, 2), q(-7, 11)}) {
        auto spec = builtin(RecurrenceName::cor3, a);
        for (std::size_t j = 0; j < 4; ++j)
            for (int trial = 0; trial < 3; ++trial) {
                BigRational n(pick(rng));
                EXPECT_EQ(spec.coefficients[j].evaluate(n), eval_na(expanded_cor3()[j], n, a)) << "c" << j;
            }
    }
}

TEST(Builtin, Cor3AtZero) {
    auto spec = builtin(RecurrenceName::cor3, q(0));
    // lambda_2(n, 0) = (n+2)(16n^3+17n^2+n)
    auto expected = RationalPolynomial{q(2), q(1)} * RationalPolynomial{q(0), q(1), q(17), q(16)};
    EXPECT_EQ(spec.coefficients[3], expected);
}

TEST(Builtin, Errors) {
    EXPECT_THROW(builtin(RecurrenceName::cor3), domain_error);
    EXPECT_THROW(parse_recurrence_name("cor4"), domain_error);
    EXPECT_EQ(parse_recurrence_name("cor2"), RecurrenceName::cor2);
}

TEST(Run, AptekarevDenominators) {
    auto spec = builtin(RecurrenceName::aptekarev);
    auto w = run(spec, SequenceWindow{0, {q(1), q(3), q(50)}}, 5);
    EXPECT_EQ(w.at(3), q(2022));
    for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(w.at(n), BigRational(euler_q(n)));
}

TEST(Run, AptekarevNumerators) {
    auto w = run(builtin(RecurrenceName::aptekarev), SequenceWindow{0, {q(0), q(2), q(31)}}, 5);
    for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(w.at(n), euler_p(n));
}

TEST(Run, Cor2Denominators) {
    auto w = run(builtin(RecurrenceName::cor2), SequenceWindow{0, {q(1), q(19, 16), q(6525, 512)}}, 4);
    EXPECT_EQ(w.at(3), q(3256245, 8192));
    EXPECT_EQ(w.at(4), q(12755617875, 524288));
    EXPECT_EQ(w.at(4), family_sequences(SpecialFamily::cor2, std::nullopt, 4).q);
}

TEST(Run, RejectsBadWindows) {
    auto spec = builtin(RecurrenceName::aptekarev);
    EXPECT_THROW(run(spec, SequenceWindow{0, {q(1), q(3)}}, 5), recurrence_error);
    // Starting at -1 would step the relation at n = 1, below its offset.
    EXPECT_THROW(run(spec, SequenceWindow{-1, {q(0), q(1), q(3)}}, 5), recurrence_error);
}

TEST(Run, VanishingLeadingCoefficientIsReported) {
    RecurrenceSpec spec;
    spec.name = "toy";
    spec.order = 1;
    spec.shift = 0;
    spec.offset = 0;
    spec.coefficients = {RationalPolynomial{q(1)}, RationalPolynomial{q(-3), q(1)}};  // (n-3) f_{n+1} + f_n = 0
    try {
        run(spec, SequenceWindow{0, {q(1)}}, 10);
        FAIL() << "expected recurrence_error";
    } catch (const recurrence_error& e) {
        EXPECT_EQ(e.index(), 3);
    }
}

TEST(Residual, ClosedFormsSatisfyBuiltins) {
    auto [p, qq] = closed_form_windows(RecurrenceName::aptekarev, std::nullopt, 33);
    auto apt = builtin(RecurrenceName::aptekarev);
    for (long n = 2; n <= 30; ++n) {
        EXPECT_TRUE(residual(apt, qq, n).is_zero()) << n;
        EXPECT_TRUE(residual(apt, p, n).is_zero()) << n;
    }
    auto [p1, q1] = closed_form_windows(RecurrenceName::cor1, std::nullopt, 23);
    auto cor1 = builtin(RecurrenceName::cor1);
    for (long n = 0; n <= 20; ++n) {
        EXPECT_TRUE(residual(cor1, q1, n).is_zero()) << n;
        EXPECT_TRUE(residual(cor1, p1, n).is_zero()) << n;
    }
}

TEST(Residual, DetectsCorruption) {
    auto [p, qq] = closed_form_windows(RecurrenceName::aptekarev, std::nullopt, 8);
    qq.values[4] += q(1);
    auto apt = builtin(RecurrenceName::aptekarev);
    EXPECT_FALSE(residual(apt, qq, 3).is_zero());
    EXPECT_THROW(residual(apt, qq, 8), recurrence_error);
}

TEST(Residual, RunOutputHasZeroResidual) {
    auto spec = builtin(RecurrenceName::cor3, q(2, 7));
    auto w = run(spec, SequenceWindow{0, {q(1), q(5, 3), q(-2, 9)}}, 20);
    for (long n = 1; n <= 18; ++n) EXPECT_TRUE(residual(spec, w, n).is_zero());
}

TEST(Growth, EulerDenominatorsOutgrowFactorial) {
    // Ratios of consecutive denominators grow without bound, and
    // log q_n - log (2n)! increases once n >= 5.
    double prev_ratio = 0, prev_gap = -1e9;
    for (unsigned n = 5; n <= 60; ++n) {
        BigInt qn = euler_q(n), qn1 = euler_q(n + 1);
        double ratio = mpq_class(qn1, qn).get_d();
        EXPECT_GT(ratio, prev_ratio);
        prev_ratio = ratio;
        double gap = std::log(mpq_class(qn, factorial(2 * n)).get_d());
        EXPECT_GT(gap, 0.0);
        EXPECT_GT(gap, prev_gap);
        prev_gap = gap;
    }
}
