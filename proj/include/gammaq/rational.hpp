#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "gammaq/errors.hpp"

namespace gammaq {

using BigInt = mpz_class;

/// Exact rational number over GMP.
///
/// Always held in canonical form: gcd(|num|, den) = 1 and den >= 1, so
/// equality is structural.
class BigRational {
public:
    BigRational() = default;

    template <std::signed_integral T>
    BigRational(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    BigRational(T v) : value_(static_cast<unsigned long>(v)) {}

    BigRational(const BigInt& v) : value_(v) {}

    /// Integer-valued GMP expression, e.g. `BigRational(c * c)`.
    template <class Expr>
    BigRational(const __gmp_expr<mpz_t, Expr>& e) : value_(BigInt(e)) {}

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit BigRational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Accepts "p", "p/q" with optional sign on p; whitespace is rejected.
    static BigRational parse(std::string_view text) {
        auto bad = [&] { return domain_error("not a rational number: '" + std::string(text) + "'"); };
        auto valid_int = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') throw bad();
        std::string n(num);
        if (n.front() == '+') n.erase(0, 1);
        return BigRational(BigInt(n), BigInt(std::string(den)));
    }

    const mpq_class& gmp() const noexcept { return value_; }
    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return value_.get_str(); }

    /// Largest integer <= this.
    BigInt floor() const {
        BigInt out;
        mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return out;
    }

    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw domain_error("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

inline BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

/// r^e for any integer exponent; 0^e with e < 0 is a domain error.
inline BigRational pow(const BigRational& r, long e) {
    if (e < 0) {
        if (r.is_zero()) throw domain_error("zero raised to a negative power");
        return BigRational(1) / pow(r, -e);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), r.gmp().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.gmp().get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(num, den);
}

inline bool divides(const BigInt& d, const BigInt& m) {
    return d != 0 && mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace gammaq
