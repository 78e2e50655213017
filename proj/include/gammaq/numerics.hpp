#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>

#include "gammaq/bigfloat.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/rational.hpp"

namespace gammaq {

/// Decimal precision request. Every routine evaluates with
/// working_digits + guard_digits digits and promises a relative error below
/// 10^-working_digits.
struct PrecisionContext {
    unsigned working_digits = 30;
    unsigned guard_digits = 10;

    static constexpr double kBitsPerDigit = 3.3219280948873623;

    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(std::ceil((working_digits + guard_digits) * kBitsPerDigit)) + 8;
    }

    PrecisionContext with_working_digits(unsigned d) const { return {d, guard_digits}; }

    /// 10^-working_digits at the context's precision.
    BigFloat tolerance() const {
        BigFloat out = BigFloat::from(10, bits());
        mpfr_pow_si(out.raw(), out.raw(), -static_cast<long>(working_digits), MPFR_RNDN);
        return out;
    }

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;
};

// Elementary functions and constants are MPFR's correctly rounded versions.

inline BigFloat to_float(const BigRational& r, const PrecisionContext& ctx) { return BigFloat::from(r, ctx.bits()); }

inline BigFloat pi(const PrecisionContext& ctx) {
    BigFloat out(ctx.bits());
    mpfr_const_pi(out.raw(), MPFR_RNDN);
    return out;
}

/// Euler-Mascheroni constant by MPFR's Brent-McMillan evaluation, independent
/// of any rational approximants built in this library.
inline BigFloat euler_gamma(const PrecisionContext& ctx) {
    BigFloat out(ctx.bits());
    mpfr_const_euler(out.raw(), MPFR_RNDN);
    return out;
}

namespace detail {

template <class F>
BigFloat unary(const BigFloat& x, const PrecisionContext& ctx, F f) {
    BigFloat out(ctx.bits());
    f(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

inline void require_not_pole(const BigRational& x, const char* fn) {
    if (x.is_integer() && x.sign() <= 0) throw domain_error(std::string(fn) + " has a pole at " + x.str());
}

}  // namespace detail

inline BigFloat ln(const BigFloat& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0) throw domain_error("ln of a non-positive number");
    return detail::unary(x, ctx, mpfr_log);
}

inline BigFloat exp(const BigFloat& x, const PrecisionContext& ctx) { return detail::unary(x, ctx, mpfr_exp); }

inline BigFloat sqrt(const BigFloat& x, const PrecisionContext& ctx) {
    if (x.sign() < 0) throw domain_error("sqrt of a negative number");
    return detail::unary(x, ctx, mpfr_sqrt);
}

inline BigFloat sin(const BigFloat& x, const PrecisionContext& ctx) { return detail::unary(x, ctx, mpfr_sin); }

/// x^y for x > 0.
inline BigFloat pow(const BigFloat& x, const BigFloat& y, const PrecisionContext& ctx) {
    if (x.sign() <= 0) throw domain_error("real power of a non-positive base");
    BigFloat out(ctx.bits());
    mpfr_pow(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return out;
}

/// b^e for rational b > 0 and rational e.
inline BigFloat pow(const BigRational& b, const BigRational& e, const PrecisionContext& ctx) {
    return pow(to_float(b, ctx), to_float(e, ctx), ctx);
}

/// sin(pi * x) for rational x, exact at multiples of 1/2.
inline BigFloat sin_pi(const BigRational& x, const PrecisionContext& ctx) {
    if ((x * 2).is_integer()) {
        BigInt twice = (x * 2).numerator();
        BigInt m = twice % 4;
        if (m < 0) m += 4;
        long v = m == 1 ? 1 : (m == 3 ? -1 : 0);
        return BigFloat::from(v, ctx.bits());
    }
    return sin(pi(ctx) * to_float(x, ctx), ctx);
}

/// ln(n!) for natural n.
inline BigFloat log_factorial(unsigned long n, const PrecisionContext& ctx) {
    BigFloat out(ctx.bits());
    mpfr_set_ui(out.raw(), n + 1, MPFR_RNDN);
    mpfr_lngamma(out.raw(), out.raw(), MPFR_RNDN);
    return out;
}

/// Gamma(x) for rational x away from the poles 0, -1, -2, ...
inline BigFloat gamma(const BigRational& x, const PrecisionContext& ctx) {
    detail::require_not_pole(x, "gamma");
    return detail::unary(to_float(x, ctx), ctx, mpfr_gamma);
}

/// psi(x) = Gamma'(x)/Gamma(x) for rational x away from the poles.
inline BigFloat digamma(const BigRational& x, const PrecisionContext& ctx) {
    detail::require_not_pole(x, "digamma");
    return detail::unary(to_float(x, ctx), ctx, mpfr_digamma);
}

/// Crossover for the incomplete gamma pair: the power series is used for
/// x < s + kIncompleteGammaSwitch, the continued fraction above it.
inline constexpr long kIncompleteGammaSwitch = 1;

namespace detail {

inline constexpr long kMaxSeriesTerms = 2'000'000;

inline void require_incomplete_domain(const BigRational& s, const BigRational& x) {
    if (s.sign() <= 0) throw domain_error("incomplete gamma requires s > 0 (got " + s.str() + ")");
    if (x.sign() <= 0) throw domain_error("incomplete gamma requires x > 0 (got " + x.str() + ")");
}

/// gamma(s, x) = x^s e^-x sum_k x^k / (s)_{k+1}. Positive terms; once the
/// term ratio x/(s+k+1) is <= 1/2 the tail is bounded by the current term.
inline BigFloat lower_gamma_series(const BigFloat& s, const BigFloat& x, mpfr_prec_t bits) {
    BigFloat one = BigFloat::from(1, bits);
    BigFloat term = one / s;
    BigFloat sum = term;
    BigFloat eps(bits);
    mpfr_set_ui_2exp(eps.raw(), 1, -static_cast<mpfr_exp_t>(bits), MPFR_RNDN);
    BigFloat half(bits);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    BigFloat denom = s;
    for (long k = 0; k < kMaxSeriesTerms; ++k) {
        denom += one;
        BigFloat ratio = x / denom;
        term *= ratio;
        sum += term;
        if (ratio <= half && term <= sum * eps) {
            BigFloat prefactor(bits);
            mpfr_pow(prefactor.raw(), x.raw(), s.raw(), MPFR_RNDN);
            BigFloat e(bits);
            mpfr_neg(e.raw(), x.raw(), MPFR_RNDN);
            mpfr_exp(e.raw(), e.raw(), MPFR_RNDN);
            return prefactor * e * sum;
        }
    }
    throw precision_error("lower incomplete gamma series did not converge");
}

/// Gamma(s, x) by the Legendre continued fraction, modified Lentz.
inline BigFloat upper_gamma_fraction(const BigFloat& s, const BigFloat& x, mpfr_prec_t bits) {
    BigFloat one = BigFloat::from(1, bits);
    BigFloat two = BigFloat::from(2, bits);
    BigFloat tiny(bits);
    mpfr_set_ui_2exp(tiny.raw(), 1, -static_cast<mpfr_exp_t>(4 * bits), MPFR_RNDN);
    BigFloat eps(bits);
    mpfr_set_ui_2exp(eps.raw(), 1, -static_cast<mpfr_exp_t>(bits - 4), MPFR_RNDN);

    BigFloat b = x + one - s;
    BigFloat c = one / tiny;
    BigFloat d = one / b;
    BigFloat h = d;
    for (long i = 1; i < kMaxSeriesTerms; ++i) {
        BigFloat fi = BigFloat::from(i, bits);
        BigFloat an = -(fi * (fi - s));
        b += two;
        d = an * d + b;
        if (abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (abs(c) < tiny) c = tiny;
        d = one / d;
        BigFloat delta = d * c;
        h *= delta;
        if (abs(delta - one) <= eps) {
            BigFloat prefactor(bits);
            mpfr_pow(prefactor.raw(), x.raw(), s.raw(), MPFR_RNDN);
            BigFloat e(bits);
            mpfr_neg(e.raw(), x.raw(), MPFR_RNDN);
            mpfr_exp(e.raw(), e.raw(), MPFR_RNDN);
            return prefactor * e * h;
        }
    }
    throw precision_error("upper incomplete gamma continued fraction did not converge");
}

/// Extra bits for the complement step Gamma(s) - (other half).
inline mpfr_prec_t incomplete_bits(const PrecisionContext& ctx) { return ctx.bits() + 64; }

}  // namespace detail

/// Lower incomplete gamma gamma(s, x) = int_0^x t^{s-1} e^{-t} dt.
inline BigFloat lower_incomplete_gamma(const BigRational& s, const BigRational& x, const PrecisionContext& ctx) {
    detail::require_incomplete_domain(s, x);
    const mpfr_prec_t bits = detail::incomplete_bits(ctx);
    const BigFloat sf = BigFloat::from(s, bits), xf = BigFloat::from(x, bits);
    if (x < s + BigRational(kIncompleteGammaSwitch))
        return detail::lower_gamma_series(sf, xf, bits).with_precision(ctx.bits());
    BigFloat full(bits);
    mpfr_gamma(full.raw(), sf.raw(), MPFR_RNDN);
    return (full - detail::upper_gamma_fraction(sf, xf, bits)).with_precision(ctx.bits());
}

/// Upper incomplete gamma Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt.
inline BigFloat upper_incomplete_gamma(const BigRational& s, const BigRational& x, const PrecisionContext& ctx) {
    detail::require_incomplete_domain(s, x);
    const mpfr_prec_t bits = detail::incomplete_bits(ctx);
    const BigFloat sf = BigFloat::from(s, bits), xf = BigFloat::from(x, bits);
    if (x >= s + BigRational(kIncompleteGammaSwitch))
        return detail::upper_gamma_fraction(sf, xf, bits).with_precision(ctx.bits());
    BigFloat full(bits);
    mpfr_gamma(full.raw(), sf.raw(), MPFR_RNDN);
    return (full - detail::lower_gamma_series(sf, xf, bits)).with_precision(ctx.bits());
}

/// int_0^x t^{s-1} ln(t) e^{-t} dt, from termwise integration of the
/// exponential series:
///     sum_k (-1)^k / k! * x^{s+k} (ln x / (s+k) - 1 / (s+k)^2).
/// The series alternates, so about x*log2(e) extra bits absorb cancellation.
inline BigFloat lower_log_incomplete_gamma(const BigRational& s, const BigRational& x, const PrecisionContext& ctx) {
    detail::require_incomplete_domain(s, x);
    const double xd = mpq_class(x.gmp()).get_d();
    const mpfr_prec_t bits = ctx.bits() + 64 + static_cast<mpfr_prec_t>(std::ceil(2.0 * xd));
    const BigFloat sf = BigFloat::from(s, bits), xf = BigFloat::from(x, bits);
    BigFloat lnx(bits);
    mpfr_log(lnx.raw(), xf.raw(), MPFR_RNDN);
    BigFloat xpow(bits);
    mpfr_pow(xpow.raw(), xf.raw(), sf.raw(), MPFR_RNDN);  // x^{s+k} / k! with sign
    BigFloat one = BigFloat::from(1, bits);
    BigFloat eps(bits);
    mpfr_set_ui_2exp(eps.raw(), 1, -static_cast<mpfr_exp_t>(bits), MPFR_RNDN);
    BigFloat sum(bits);
    BigFloat sk = sf;
    for (long k = 0; k < detail::kMaxSeriesTerms; ++k) {
        BigFloat inv = one / sk;
        BigFloat term = xpow * (lnx * inv - inv * inv);
        sum += term;
        // Past the peak the terms decrease monotonically; stop on a negligible one.
        if (BigFloat::from(k, bits) > xf && abs(term) <= abs(sum) * eps) return sum.with_precision(ctx.bits());
        xpow = -(xpow * xf / BigFloat::from(k + 1, bits));
        sk += one;
    }
    throw precision_error("log-weighted incomplete gamma series did not converge");
}

/// int_x^inf t^{s-1} ln(t) e^{-t} dt = Gamma(s) psi(s) - lower part.
inline BigFloat upper_log_incomplete_gamma(const BigRational& s, const BigRational& x, const PrecisionContext& ctx) {
    const PrecisionContext wide{ctx.working_digits + 20, ctx.guard_digits};
    BigFloat full = gamma(s, wide) * digamma(s, wide);
    return (full - lower_log_incomplete_gamma(s, x, wide)).with_precision(ctx.bits());
}

}  // namespace gammaq
