#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/exact_core.hpp"
#include "gammaq/polynomial.hpp"
#include "gammaq/rational.hpp"

namespace gammaq {

/// Validated parameter triple for the gamma-quotient approximants:
/// a1, a2 > -1 and b > 0. An integer a1 - a2 is accepted but flagged,
/// since the sums still make sense there while the asymptotics do not.
class ApproxParams {
public:
    ApproxParams(BigRational a1, BigRational a2, BigRational b)
        : a1_(std::move(a1)), a2_(std::move(a2)), b_(std::move(b)) {
        if (a1_ <= BigRational(-1)) throw domain_error("a1 must exceed -1 (got " + a1_.str() + ")");
        if (a2_ <= BigRational(-1)) throw domain_error("a2 must exceed -1 (got " + a2_.str() + ")");
        if (b_.sign() <= 0) throw domain_error("b must be positive (got " + b_.str() + ")");
        integer_difference_ = (a1_ - a2_).is_integer();
    }

    const BigRational& a1() const noexcept { return a1_; }
    const BigRational& a2() const noexcept { return a2_; }
    const BigRational& b() const noexcept { return b_; }
    bool integer_difference() const noexcept { return integer_difference_; }

    /// The same triple with a1 and a2 exchanged.
    ApproxParams swapped() const { return ApproxParams(a2_, a1_, b_); }

private:
    BigRational a1_, a2_, b_;
    bool integer_difference_ = false;
};

namespace detail {

/// [C(r, 0), C(r, 1), ..., C(r, n)] by the ratio C(r, j+1) = C(r, j) (r - j) / (j + 1).
inline std::vector<BigRational> binomial_row(const BigRational& r, unsigned n) {
    std::vector<BigRational> out;
    out.reserve(n + 1);
    out.emplace_back(1);
    for (unsigned j = 0; j < n; ++j) out.push_back(out.back() * (r - BigRational(j)) / BigRational(j + 1));
    return out;
}

inline void require_psi_domain(const BigRational& a, const BigRational& b) {
    if (a <= BigRational(-1)) throw domain_error("a must exceed -1 (got " + a.str() + ")");
    if (b.sign() <= 0) throw domain_error("b must be positive (got " + b.str() + ")");
}

/// Coefficients t_k = C(n+a1-a2, k) C(n+a2-a1, n-k) (a2+1)_{n+k}, k = 0..n.
inline std::vector<BigRational> gamma_quotient_terms(const BigRational& a1, const BigRational& a2, unsigned n) {
    const BigRational d = a1 - a2;
    const auto up = binomial_row(BigRational(n) + d, n);
    const auto lo = binomial_row(BigRational(n) - d, n);
    BigRational poch = pochhammer(a2 + 1, n);
    std::vector<BigRational> out;
    out.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        out.push_back(up[k] * lo[n - k] * poch);
        poch *= a2 + BigRational(n + k + 1);
    }
    return out;
}

}  // namespace detail

/// q_n(a1, a2, b) = sum_k C(n+a1-a2, k) C(n+a2-a1, n-k) (a2+1)_{n+k} b^{n-k}.
inline BigRational q_gamma(const ApproxParams& params, unsigned n) {
    const auto terms = detail::gamma_quotient_terms(params.a1(), params.a2(), n);
    BigRational total(0);
    BigRational bpow = pow(params.b(), n);
    for (unsigned k = 0; k <= n; ++k) {
        total += terms[k] * bpow;
        if (k < n) bpow /= params.b();
    }
    return total;
}

/// q_n(a1, a2, b) as a polynomial in b of degree n; the coefficient of
/// b^{n-k} is the k-th summand without its power of b.
inline RationalPolynomial q_gamma_poly(const BigRational& a1, const BigRational& a2, unsigned n) {
    const auto terms = detail::gamma_quotient_terms(a1, a2, n);
    std::vector<BigRational> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k) coeffs[n - k] = terms[k];
    return RationalPolynomial(std::move(coeffs));
}

struct IntegralityReport {
    unsigned n = 0;
    BigInt scale;                        ///< mu_{a2-a1}^n * mu_{a2}^{2n}
    std::vector<BigRational> quotients;  ///< scale * coeff(b^i) / n!, i = 0..n
    bool verdict = false;
};

/// Checks that mu_{a2-a1}^n mu_{a2}^{2n} q_n(a1, a2, b) lies in n! Z[b].
inline IntegralityReport check_integrality(const BigRational& a1, const BigRational& a2, unsigned n) {
    IntegralityReport r;
    r.n = n;
    r.scale = mu(a2 - a1, n) * mu(a2, 2 * n);
    const auto poly = q_gamma_poly(a1, a2, n);
    const BigRational factor = BigRational(r.scale) / BigRational(factorial(n));
    r.verdict = true;
    r.quotients.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        r.quotients.push_back(poly.coefficient(i) * factor);
        r.verdict = r.verdict && r.quotients.back().is_integer();
    }
    return r;
}

/// q_n(a, b) = sum_k C(n,k)^2 (a+1)_{n+k} b^{n-k}.
inline BigRational q_psi(const BigRational& a, const BigRational& b, unsigned n) {
    detail::require_psi_domain(a, b);
    BigRational total(0);
    BigRational poch = pochhammer(a + 1, n);
    BigRational bpow = pow(b, n);
    BigInt c;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_bin_uiui(c.get_mpz_t(), n, k);
        total += BigRational(c * c) * poch * bpow;
        poch *= a + BigRational(n + k + 1);
        if (k < n) bpow /= b;
    }
    return total;
}

/// Compact numerator:
/// p_n(a, b) = sum_k C(n,k)^2 (a+1)_{n+k} b^{n-k} (H_{n+k}(a) + 2 H_{n-k} - 2 H_k).
inline BigRational p_psi_compact(const BigRational& a, const BigRational& b, unsigned n) {
    detail::require_psi_domain(a, b);
    const auto ha = harmonic_table(2 * n, a);
    const auto h = harmonic_table(n);
    BigRational total(0);
    BigRational poch = pochhammer(a + 1, n);
    BigRational bpow = pow(b, n);
    BigInt c;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_bin_uiui(c.get_mpz_t(), n, k);
        BigRational hsum = ha[n + k] + BigRational(2) * (h[n - k] - h[k]);
        total += BigRational(c * c) * poch * bpow * hsum;
        poch *= a + BigRational(n + k + 1);
        if (k < n) bpow /= b;
    }
    return total;
}

/// Numerator as a single harmonic sum minus a triple binomial sum. Kept as
/// the independent route to the same value as p_psi_compact.
inline BigRational p_psi_triple(const BigRational& a, const BigRational& b, unsigned n) {
    detail::require_psi_domain(a, b);
    std::vector<BigRational> poch(2 * n + 1);
    poch[0] = BigRational(1);
    for (unsigned j = 1; j <= 2 * n; ++j) poch[j] = poch[j - 1] * (a + BigRational(j));
    std::vector<BigRational> bpow(n + 1);
    bpow[0] = BigRational(1);
    for (unsigned j = 1; j <= n; ++j) bpow[j] = bpow[j - 1] * b;
    auto binom = [](unsigned top, unsigned k) {
        BigInt c;
        mpz_bin_uiui(c.get_mpz_t(), top, k);
        return BigRational(c);
    };

    BigRational single(0);
    for (unsigned k = 0; k <= n; ++k) {
        BigRational c = binom(n, k);
        single += c * c * poch[n + k] * bpow[n - k] * harmonic(n + k, a);
    }

    BigRational triple(0);
    for (unsigned k = 1; k <= n; ++k) {
        for (unsigned m = 0; m <= k; ++m) {
            for (unsigned l = 0; l <= n - k; ++l) {
                BigRational t = binom(n, k + l) * binom(k, m) * binom(n - k, l) * poch[m + n + l] *
                                bpow[n - m - l] / BigRational(k);
                if ((m + k) % 2 == 1) t = -t;
                triple += t;
            }
        }
    }
    return single - BigRational(2) * triple;
}

/// q_n = sum_k C(n,k)^2 (n+k)!, in integer arithmetic.
inline BigInt euler_q(unsigned n) {
    BigInt total(0), c;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_bin_uiui(c.get_mpz_t(), n, k);
        total += c * c * factorial(n + k);
    }
    return total;
}

/// p_n = sum_k C(n,k)^2 (n+k)! (H_{n+k} + 2 H_{n-k} - 2 H_k).
///
/// Summands are rational; only the total is integral, which is checked.
inline BigRational euler_p(unsigned n) {
    const auto h = harmonic_table(2 * n);
    BigRational total(0);
    BigInt c;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_bin_uiui(c.get_mpz_t(), n, k);
        total += BigRational(c * c * factorial(n + k)) * (h[n + k] + BigRational(2) * (h[n - k] - h[k]));
    }
    if (!total.is_integer()) throw algebra_error("euler_p(" + std::to_string(n) + ") is not an integer: " + total.str());
    return total;
}

struct EulerDivisibilityReport {
    unsigned n = 0;
    BigInt q, p, lcm;
    bool lcm_divides_factorial = false;  ///< D_n | n!
    bool q_divisible = false;            ///< n! | q_n
    bool p_divisible = false;            ///< (n!/D_n) | p_n

    bool verdict() const { return lcm_divides_factorial && q_divisible && p_divisible; }
};

inline EulerDivisibilityReport check_euler_divisibility(unsigned n) {
    if (n < 1) throw domain_error("euler divisibility check requires n >= 1");
    EulerDivisibilityReport r;
    r.n = n;
    r.q = euler_q(n);
    r.p = euler_p(n).numerator();
    r.lcm = lcm_upto(n);
    const BigInt fact = factorial(n);
    r.lcm_divides_factorial = divides(r.lcm, fact);
    r.q_divisible = divides(fact, r.q);
    r.p_divisible = r.lcm_divides_factorial && divides(BigInt(fact / r.lcm), r.p);
    return r;
}

enum class SpecialFamily { cor1, cor2, cor3 };

inline std::string_view to_string(SpecialFamily c) {
    switch (c) {
        case SpecialFamily::cor1: return "cor1";
        case SpecialFamily::cor2: return "cor2";
        case SpecialFamily::cor3: return "cor3";
    }
    return "?";
}

/// Parameter triple (a1, a2, b) whose q_gamma is the denominator q_n of the
/// special family; the numerator p_n is q_gamma of the swapped triple.
inline ApproxParams family_params(SpecialFamily which, const std::optional<BigRational>& a = std::nullopt) {
    switch (which) {
        case SpecialFamily::cor1: return ApproxParams(BigRational(-2, 3), BigRational(-1, 2), BigRational(1));
        case SpecialFamily::cor2: return ApproxParams(BigRational(-3, 4), BigRational(-1, 2), BigRational(1));
        case SpecialFamily::cor3:
            if (!a) throw domain_error("cor3 requires the parameter a");
            if (a->is_integer()) throw domain_error("cor3 requires a non-integer a (got " + a->str() + ")");
            if (*a <= BigRational(-1)) throw domain_error("cor3 requires a > -1 (got " + a->str() + ")");
            return ApproxParams(BigRational(0), *a, BigRational(1));
    }
    throw domain_error("unknown special family");
}

struct ApproximantPair {
    BigRational p, q;

    friend bool operator==(const ApproximantPair&, const ApproximantPair&) = default;
};

inline ApproximantPair family_sequences(SpecialFamily which, const std::optional<BigRational>& a, unsigned n) {
    const ApproxParams params = family_params(which, a);
    return {q_gamma(params.swapped(), n), q_gamma(params, n)};
}

}  // namespace gammaq
