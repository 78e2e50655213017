#pragma once

#include <cmath>
#include <map>
#include <ostream>
#include <string>

#include "gammaq/errors.hpp"
#include "gammaq/exact_core.hpp"
#include "gammaq/numerics.hpp"
#include "gammaq/polynomial.hpp"
#include "gammaq/rational.hpp"
#include "gammaq/sequences.hpp"

namespace gammaq {

/// Formal finite sum  sum_i c_i x^(offset + i) e^(-b x).
class ExpMonomialSum {
public:
    ExpMonomialSum(BigRational offset, BigRational b) : offset_(std::move(offset)), b_(std::move(b)) {}

    /// x^offset * p(x) * e^(-b x)
    static ExpMonomialSum from_polynomial(const RationalPolynomial& p, BigRational offset, BigRational b) {
        ExpMonomialSum out(std::move(offset), std::move(b));
        const auto& c = p.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) out.add(static_cast<long>(i), c[i]);
        return out;
    }

    const BigRational& offset() const noexcept { return offset_; }
    const BigRational& b() const noexcept { return b_; }
    const std::map<long, BigRational>& coeffs() const noexcept { return coeffs_; }

    BigRational coefficient(long i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? BigRational(0) : it->second;
    }

    void add(long i, const BigRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(i, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    ExpMonomialSum derivative() const {
        ExpMonomialSum out(offset_, b_);
        for (const auto& [i, c] : coeffs_) {
            out.add(i - 1, c * (offset_ + BigRational(i)));
            out.add(i, -(c * b_));
        }
        return out;
    }

    ExpMonomialSum derivative(unsigned n) const {
        ExpMonomialSum out = *this;
        for (unsigned k = 0; k < n; ++k) out = out.derivative();
        return out;
    }

    /// Divides by x^offset e^(-b x) and returns the polynomial that remains.
    /// Throws algebra_error if a negative power of x survives.
    RationalPolynomial strip_weight() const {
        if (coeffs_.empty()) return {};
        if (coeffs_.begin()->first < 0)
            throw algebra_error("negative power x^" + std::to_string(coeffs_.begin()->first) + " survives weight division");
        std::vector<BigRational> v(static_cast<std::size_t>(coeffs_.rbegin()->first) + 1);
        for (const auto& [i, c] : coeffs_) v[static_cast<std::size_t>(i)] = c;
        return RationalPolynomial(std::move(v));
    }

    friend bool operator==(const ExpMonomialSum&, const ExpMonomialSum&) = default;

private:
    BigRational offset_, b_;
    std::map<long, BigRational> coeffs_;
};

/// p(x) / (1 - x) by synthetic division; throws algebra_error on a nonzero remainder.
inline RationalPolynomial divide_one_minus_x(const RationalPolynomial& p) {
    if (p.is_zero()) return {};
    // p = (1 - x) s  <=>  s_k = p_0 + ... + p_k, with remainder s_deg = 0.
    const auto& c = p.coefficients();
    std::vector<BigRational> s(c.size());
    BigRational acc(0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        acc += c[k];
        s[k] = acc;
    }
    if (!s.back().is_zero()) throw algebra_error("polynomial is not divisible by (1 - x): remainder " + s.back().str());
    s.pop_back();
    return RationalPolynomial(std::move(s));
}

namespace detail {

/// f -> w^{-1} (d/dx)^n [w x^n f] with w = x^a (1 - x) e^{-b x}.
inline RationalPolynomial rodrigues_step(const RationalPolynomial& f, const BigRational& a, const BigRational& b,
                                         unsigned n) {
    RationalPolynomial inner = RationalPolynomial::monomial(BigRational(1), n) * RationalPolynomial{1, -1} * f;
    ExpMonomialSum d = ExpMonomialSum::from_polynomial(inner, a, b).derivative(n);
    return divide_one_minus_x(d.strip_weight());
}

}  // namespace detail

/// Q_n^{(a1,a2,b)}: the operator with weight x^{a2} acts first, then x^{a1},
/// and the result is scaled by 1/n!^2.
inline RationalPolynomial rodrigues_polynomial(const BigRational& a1, const BigRational& a2, const BigRational& b,
                                               unsigned n) {
    ApproxParams params(a1, a2, b);
    RationalPolynomial f = RationalPolynomial::linear_power(BigRational(1), BigRational(-1), 2 * n);
    f = detail::rodrigues_step(f, params.a2(), params.b(), n);
    f = detail::rodrigues_step(f, params.a1(), params.b(), n);
    BigInt nf = factorial(n);
    f *= BigRational(BigInt(1), BigInt(nf * nf));
    if (f.degree() != static_cast<long>(4 * n))
        throw algebra_error("Rodrigues polynomial has degree " + std::to_string(f.degree()) + ", expected " +
                            std::to_string(4 * n));
    return f;
}

enum class GammaSlot { plain, gamma1, gamma2 };

/// c_plain + c_gamma1 Gamma(a1+1)/b^a1 + c_gamma2 Gamma(a2+1)/b^a2 + c_euler * gamma,
/// with the Gamma symbols kept formal.
struct GammaCombo {
    BigRational c_plain, c_gamma1, c_gamma2, c_euler;

    GammaCombo& operator+=(const GammaCombo& o) {
        c_plain += o.c_plain;
        c_gamma1 += o.c_gamma1;
        c_gamma2 += o.c_gamma2;
        c_euler += o.c_euler;
        return *this;
    }
    GammaCombo& operator-=(const GammaCombo& o) { return *this += o * BigRational(-1); }
    friend GammaCombo operator+(GammaCombo a, const GammaCombo& b) { return a += b; }
    friend GammaCombo operator-(GammaCombo a, const GammaCombo& b) { return a -= b; }
    friend GammaCombo operator*(const GammaCombo& a, const BigRational& s) {
        return {a.c_plain * s, a.c_gamma1 * s, a.c_gamma2 * s, a.c_euler * s};
    }
    GammaCombo operator-() const { return *this * BigRational(-1); }

    /// Exchanges the two Gamma symbols (the relabelling a1 <-> a2).
    GammaCombo swapped_gammas() const { return {c_plain, c_gamma2, c_gamma1, c_euler}; }

    BigRational& slot(GammaSlot s) {
        switch (s) {
            case GammaSlot::gamma1: return c_gamma1;
            case GammaSlot::gamma2: return c_gamma2;
            default: return c_plain;
        }
    }

    friend bool operator==(const GammaCombo&, const GammaCombo&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GammaCombo& g) {
        return os << "{plain " << g.c_plain << ", G1 " << g.c_gamma1 << ", G2 " << g.c_gamma2 << ", euler " << g.c_euler
                  << "}";
    }
};

/// int_0^inf x^{a+k} e^{-b x} dx = (a+1)_k / b^{k+1} * Gamma(a+1)/b^a, stored in
/// the requested Gamma slot. The plain slot needs a natural a, where
/// Gamma(a+1)/b^a = a!/b^a is rational.
inline GammaCombo laguerre_moment(unsigned k, const BigRational& a, const BigRational& b,
                                  GammaSlot slot = GammaSlot::plain) {
    if (a <= BigRational(-1)) throw domain_error("moment exponent a must exceed -1 (got " + a.str() + ")");
    if (b.sign() <= 0) throw domain_error("b must be positive (got " + b.str() + ")");
    BigRational value = pochhammer(a + BigRational(1), k) / pow(b, static_cast<long>(k) + 1);
    if (slot == GammaSlot::plain) {
        if (!a.is_integer()) throw domain_error("plain moment slot needs an integer exponent (got " + a.str() + ")");
        long ai = a.numerator().get_si();
        value *= BigRational(factorial(static_cast<unsigned long>(ai))) / pow(b, ai);
    }
    GammaCombo out;
    out.slot(slot) = value;
    return out;
}

/// int_0^inf x^k e^{-x} ln x dx = k! (H_k - gamma).
inline GammaCombo log_moment(unsigned k) {
    BigRational kf(factorial(k));
    return {kf * harmonic(k), BigRational(0), BigRational(0), -kf};
}

/// Default ceiling on n for the symbolic identity checks.
inline constexpr unsigned kSymbolicDegreeCap = 6;

namespace detail {

inline void require_symbolic_cap(unsigned n, unsigned cap) {
    if (n > cap)
        throw domain_error("n = " + std::to_string(n) + " exceeds the symbolic verification cap " + std::to_string(cap));
}

/// b^{2n+1} int_0^inf x^a Q(x) e^{-b x} dx as a combo in the given slot.
inline GammaCombo weighted_integral(const RationalPolynomial& Q, const BigRational& a, const BigRational& b, unsigned n,
                                    GammaSlot slot) {
    GammaCombo out;
    const auto& c = Q.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m)
        if (!c[m].is_zero()) out += laguerre_moment(static_cast<unsigned>(m), a, b, slot) * c[m];
    return out * pow(b, 2 * static_cast<long>(n) + 1);
}

}  // namespace detail

/// R_n = b^{2n+1} int_0^inf (x^{a2} - x^{a1}) Q_n e^{-b x} dx, expanded over the Gamma symbols.
inline GammaCombo remainder_combo(const BigRational& a1, const BigRational& a2, const BigRational& b, unsigned n,
                                  unsigned cap = kSymbolicDegreeCap) {
    if (a1 == a2) throw domain_error("remainder needs a1 != a2");
    detail::require_symbolic_cap(n, cap);
    RationalPolynomial Q = rodrigues_polynomial(a1, a2, b, n);
    return detail::weighted_integral(Q, a2, b, n, GammaSlot::gamma2) -
           detail::weighted_integral(Q, a1, b, n, GammaSlot::gamma1);
}

/// q_n(a1,a2,b) Gamma(a2+1)/b^a2 - q_n(a2,a1,b) Gamma(a1+1)/b^a1.
inline GammaCombo remainder_expected(const BigRational& a1, const BigRational& a2, const BigRational& b, unsigned n) {
    ApproxParams params(a1, a2, b);
    GammaCombo out;
    out.c_gamma2 = q_gamma(params, n);
    out.c_gamma1 = -q_gamma(params.swapped(), n);
    return out;
}

inline bool verify_remainder_expansion(const BigRational& a1, const BigRational& a2, const BigRational& b, unsigned n,
                          unsigned cap = kSymbolicDegreeCap) {
    return remainder_combo(a1, a2, b, n, cap) == remainder_expected(a1, a2, b, n);
}

/// b^{2n+a2+1} / Gamma(a2+1) * int_0^inf x^{a2} Q_n e^{-b x} dx, which is rational.
inline BigRational moment_integral(const BigRational& a1, const BigRational& a2, const BigRational& b, unsigned n,
                                 unsigned cap = kSymbolicDegreeCap) {
    detail::require_symbolic_cap(n, cap);
    RationalPolynomial Q = rodrigues_polynomial(a1, a2, b, n);
    return detail::weighted_integral(Q, a2, b, n, GammaSlot::gamma2).c_gamma2;
}

inline bool verify_moment_identity(const BigRational& a1, const BigRational& a2, const BigRational& b, unsigned n,
                        unsigned cap = kSymbolicDegreeCap) {
    return moment_integral(a1, a2, b, n, cap) == q_gamma(ApproxParams(a1, a2, b), n);
}

/// int_0^inf Q_n^{(0,0,1)} e^{-x} ln x dx as plain + euler components.
inline GammaCombo euler_remainder_combo(unsigned n, unsigned cap = kSymbolicDegreeCap) {
    detail::require_symbolic_cap(n, cap);
    RationalPolynomial Q = rodrigues_polynomial(BigRational(0), BigRational(0), BigRational(1), n);
    GammaCombo out;
    const auto& c = Q.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m)
        if (!c[m].is_zero()) out += log_moment(static_cast<unsigned>(m)) * c[m];
    return out;
}

inline bool verify_euler_remainder(unsigned n, unsigned cap = kSymbolicDegreeCap) {
    GammaCombo g = euler_remainder_combo(n, cap);
    return g.c_plain == euler_p(n) && g.c_euler == -BigRational(euler_q(n)) && g.c_gamma1.is_zero() &&
           g.c_gamma2.is_zero();
}

namespace detail {

inline constexpr unsigned kMaxDigits = 100000;

inline void require_digits(unsigned digits) {
    if (digits == 0 || digits > kMaxDigits)
        throw precision_error("cannot satisfy a request for " + std::to_string(digits) + " digits");
}

inline void require_interval_and_weight(int j, int k) {
    if (j != 1 && j != 2) throw domain_error("interval index j must be 1 or 2");
    if (k != 1 && k != 2) throw domain_error("weight index k must be 1 or 2");
}

/// Decimal digits lost to cancellation: log10 of sum |c_m| * |integral of the m-th term|,
/// bounding each term by Gamma(s)/b^s or 1/s.
inline unsigned cancellation_digits(const RationalPolynomial& P, double a, double b) {
    double worst = 0.0;
    const auto& c = P.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m].is_zero()) continue;
        double s = a + static_cast<double>(m) + 1.0;
        double mag = abs(c[m]).gmp().get_d();
        double lg = std::lgamma(s) - s * std::log(b);
        double bound = std::log10(mag) + std::max(lg, 0.0) / std::log(10.0);
        worst = std::max(worst, bound);
    }
    return static_cast<unsigned>(std::ceil(worst)) + 5;
}

}  // namespace detail

/// int over [0,1] (j = 1) or [1, inf) (j = 2) of x^nu Q_n(x) w_k(x) dx, where
/// w_k = x^{a_k} (1 - x) e^{-b x}. Vanishes for nu < n.
inline BigFloat orthogonality_residual(const BigRational& a1, const BigRational& a2, const BigRational& b, unsigned n,
                                       int j, int k, unsigned nu, unsigned digits) {
    detail::require_interval_and_weight(j, k);
    detail::require_digits(digits);
    ApproxParams params(a1, a2, b);
    const BigRational& a = k == 1 ? params.a1() : params.a2();
    RationalPolynomial P = RationalPolynomial::monomial(BigRational(1), nu) * RationalPolynomial{1, -1} *
                           rodrigues_polynomial(a1, a2, b, n);
    PrecisionContext ctx{digits + detail::cancellation_digits(P, a.gmp().get_d(), b.gmp().get_d()), 10};
    BigFloat sum(ctx.bits());
    const auto& c = P.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m].is_zero()) continue;
        BigRational s = a + BigRational(static_cast<long>(m) + 1);
        // int x^{s-1} e^{-bx} over [0,1] is gamma(s, b) / b^s.
        BigFloat part = j == 1 ? lower_incomplete_gamma(s, b, ctx) : upper_incomplete_gamma(s, b, ctx);
        sum += to_float(c[m], ctx) * part / pow(b, s, ctx);
    }
    return sum.with_precision(PrecisionContext{digits, 10}.bits());
}

/// The a1 = a2 = 0, b = 1 limit, where the second weight is (1 - x) ln(x) e^{-x}:
/// int over the interval j of x^nu Q_n^{(0,0,1)} (1 - x) ln(x) e^{-x} dx.
inline BigFloat log_orthogonality_residual(unsigned n, int j, unsigned nu, unsigned digits) {
    detail::require_interval_and_weight(j, 1);
    detail::require_digits(digits);
    RationalPolynomial P = RationalPolynomial::monomial(BigRational(1), nu) * RationalPolynomial{1, -1} *
                           rodrigues_polynomial(BigRational(0), BigRational(0), BigRational(1), n);
    PrecisionContext ctx{digits + detail::cancellation_digits(P, 0.0, 1.0), 10};
    BigFloat sum(ctx.bits());
    const auto& c = P.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m].is_zero()) continue;
        BigRational s(static_cast<long>(m) + 1);
        BigFloat part = j == 1 ? lower_log_incomplete_gamma(s, BigRational(1), ctx)
                               : upper_log_incomplete_gamma(s, BigRational(1), ctx);
        sum += to_float(c[m], ctx) * part;
    }
    return sum.with_precision(PrecisionContext{digits, 10}.bits());
}

}  // namespace gammaq
