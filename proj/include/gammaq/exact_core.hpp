#pragma once

#include <gmpxx.h>

#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/rational.hpp"

namespace gammaq {

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
inline BigRational pochhammer(const BigRational& a, unsigned n) {
    BigRational out(1);
    BigRational term = a;
    for (unsigned i = 0; i < n; ++i) {
        out *= term;
        term += 1;
    }
    return out;
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

/// Binomial coefficient with rational upper index: (r-k+1)_k / k!.
inline BigRational gen_binomial(const BigRational& r, unsigned k) {
    return pochhammer(r - BigRational(k) + 1, k) / BigRational(factorial(k));
}

/// H_n(a) = sum_{k=1}^n 1/(k+a). Throws at a pole k + a = 0.
inline BigRational harmonic(unsigned n, const BigRational& a = BigRational(0)) {
    BigRational out(0);
    for (unsigned k = 1; k <= n; ++k) {
        BigRational d = a + BigRational(k);
        if (d.is_zero()) throw domain_error("harmonic number has a pole: k + a = 0 at k = " + std::to_string(k));
        out += BigRational(1) / d;
    }
    return out;
}

/// Prefix table [H_0(a), H_1(a), ..., H_n(a)].
inline std::vector<BigRational> harmonic_table(unsigned n, const BigRational& a = BigRational(0)) {
    std::vector<BigRational> out;
    out.reserve(n + 1);
    out.emplace_back(0);
    for (unsigned k = 1; k <= n; ++k) {
        BigRational d = a + BigRational(k);
        if (d.is_zero()) throw domain_error("harmonic number has a pole: k + a = 0 at k = " + std::to_string(k));
        out.push_back(out.back() + BigRational(1) / d);
    }
    return out;
}

/// D_n = lcm(1, ..., n); D_0 = 1 by the empty-product convention.
inline BigInt lcm_upto(unsigned n) {
    BigInt out(1);
    for (unsigned k = 2; k <= n; ++k) {
        BigInt kk(k);
        mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), kk.get_mpz_t());
    }
    return out;
}

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using PrimeFactorization = std::vector<PrimePower>;

/// Trial-division factorization. Inputs here are small denominators.
inline PrimeFactorization factorize(const BigInt& m) {
    if (m < 1) throw domain_error("factorize requires a positive integer");
    PrimeFactorization out;
    BigInt rest = m;
    auto take = [&](const BigInt& p) {
        unsigned e = 0;
        while (divides(p, rest)) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    take(BigInt(2));
    for (BigInt p(3); p * p <= rest; p += 2) take(p);
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

/// mu_a^n = (den a)^n * prod_{p | den a} p^floor(n/(p-1)).
///
/// Clears denominators: mu_a^k (a)_k / k! is an integer for every k <= n.
inline BigInt mu(const BigRational& a, unsigned n) {
    const BigInt den = a.denominator();
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), den.get_mpz_t(), n);
    for (const auto& [p, e] : factorize(den)) {
        BigInt pm1 = p - 1;
        BigInt q = BigInt(n) / pm1;
        BigInt pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), q.get_ui());
        out *= pk;
    }
    return out;
}

}  // namespace gammaq
