#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "gammaq/errors.hpp"
#include "gammaq/rational.hpp"

namespace gammaq {

/// Owning wrapper around an mpfr_t. Arithmetic rounds to nearest at the
/// larger of the operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(const BigRational& r, mpfr_prec_t bits) {
        BigFloat out(bits);
        mpfr_set_q(out.v_, r.gmp().get_mpq_t(), MPFR_RNDN);
        return out;
    }

    static BigFloat from(long v, mpfr_prec_t bits) {
        BigFloat out(bits);
        mpfr_set_si(out.v_, v, MPFR_RNDN);
        return out;
    }

    /// Decimal literal such as "0.5772156649".
    static BigFloat from_string(const std::string& s, mpfr_prec_t bits) {
        BigFloat out(bits);
        mpfr_set_str(out.v_, s.c_str(), 10, MPFR_RNDN);
        return out;
    }

    mpfr_ptr raw() noexcept { return v_; }
    mpfr_srcptr raw() const noexcept { return v_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

    /// Copy rounded (or padded) to a new precision.
    BigFloat with_precision(mpfr_prec_t bits) const {
        BigFloat out(bits);
        mpfr_set(out.v_, v_, MPFR_RNDN);
        return out;
    }

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// log10 |x|, or -inf at zero. Double precision; for magnitude estimates.
    double log10_abs() const {
        if (is_zero()) return -INFINITY;
        long e = 0;
        double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
        return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
    }

    /// Scientific notation with `digits` significant digits, e.g. "-1.2345e-7".
    std::string str(int digits) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
        if (is_zero()) return "0";
        mpfr_exp_t exp = 0;
        char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(std::max(digits, 2)), v_, MPFR_RNDN);
        std::string mant(raw);
        mpfr_free_str(raw);
        std::string out;
        if (mant.front() == '-') {
            out = "-";
            mant.erase(0, 1);
        }
        out += mant.substr(0, 1);
        out += ".";
        out += mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(exp) - 1);
        return out;
    }

    BigFloat operator-() const {
        BigFloat out(precision());
        mpfr_neg(out.v_, v_, MPFR_RNDN);
        return out;
    }

#define GAMMAQ_BIGFLOAT_BINOP(op, fn)                                                    \
    friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {                 \
        BigFloat out(std::max(a.precision(), b.precision()));                           \
        fn(out.v_, a.v_, b.v_, MPFR_RNDN);                                              \
        return out;                                                                     \
    }                                                                                   \
    BigFloat& operator op##=(const BigFloat& b) {                                       \
        if (b.precision() > precision()) mpfr_prec_round(v_, b.precision(), MPFR_RNDN); \
        fn(v_, v_, b.v_, MPFR_RNDN);                                                    \
        return *this;                                                                   \
    }

    GAMMAQ_BIGFLOAT_BINOP(+, mpfr_add)
    GAMMAQ_BIGFLOAT_BINOP(-, mpfr_sub)
    GAMMAQ_BIGFLOAT_BINOP(*, mpfr_mul)
    GAMMAQ_BIGFLOAT_BINOP(/, mpfr_div)
#undef GAMMAQ_BIGFLOAT_BINOP

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
        if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
        int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(30); }

private:
    mpfr_t v_;
};

inline BigFloat abs(const BigFloat& x) { return x.sign() < 0 ? -x : x; }

/// |a - b| / max(|a|, |b|), or 0 when both vanish.
inline BigFloat relative_difference(const BigFloat& a, const BigFloat& b) {
    BigFloat scale = std::max(abs(a), abs(b), [](const BigFloat& x, const BigFloat& y) { return x < y; });
    if (scale.is_zero()) return BigFloat(a.precision());
    return abs(a - b) / scale;
}

/// |x - reference| / |reference|.
inline BigFloat deviation_from(const BigFloat& x, const BigFloat& reference) {
    if (reference.is_zero()) throw domain_error("deviation from a zero reference");
    return abs(x - reference) / abs(reference);
}

}  // namespace gammaq
