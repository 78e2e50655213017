#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gammaq/rational.hpp"

namespace gammaq {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// powers. The highest stored coefficient is nonzero; the zero polynomial
/// stores nothing.
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    explicit RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    RationalPolynomial(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

    static RationalPolynomial constant(const BigRational& c) { return RationalPolynomial({c}); }

    /// c * x^k
    static RationalPolynomial monomial(const BigRational& c, std::size_t k) {
        std::vector<BigRational> v(k + 1);
        v[k] = c;
        return RationalPolynomial(std::move(v));
    }

    /// (c0 + c1 x)^e
    static RationalPolynomial linear_power(const BigRational& c0, const BigRational& c1, unsigned e) {
        RationalPolynomial base{c0, c1};
        RationalPolynomial out = constant(1);
        for (unsigned i = 0; i < e; ++i) out *= base;
        return out;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    BigRational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }

    BigRational leading() const { return is_zero() ? BigRational(0) : coeffs_.back(); }

    BigRational evaluate(const BigRational& x) const {
        BigRational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    RationalPolynomial& operator+=(const RationalPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this += -o; }

    RationalPolynomial& operator*=(const RationalPolynomial& o) {
        if (is_zero() || o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        coeffs_ = std::move(out);
        trim();
        return *this;
    }

    RationalPolynomial& operator*=(const BigRational& c) {
        for (auto& x : coeffs_) x *= c;
        trim();
        return *this;
    }

    RationalPolynomial operator-() const {
        RationalPolynomial out = *this;
        for (auto& x : out.coeffs_) x = -x;
        return out;
    }

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& c) { return a *= c; }
    friend RationalPolynomial operator*(const BigRational& c, RationalPolynomial a) { return a *= c; }

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// Human-readable form in the given variable, highest power first,
    /// e.g. "x^4 - 11*x^3 + 29*x^2 - 14*x + 1".
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigRational& c = coeffs_[i];
            if (c.is_zero()) continue;
            BigRational mag = abs(c);
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            bool unit = mag == BigRational(1);
            if (i == 0 || !unit) out += mag.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

}  // namespace gammaq
