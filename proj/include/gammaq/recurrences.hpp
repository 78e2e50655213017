#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/polynomial.hpp"
#include "gammaq/rational.hpp"
#include "gammaq/sequences.hpp"

namespace gammaq {

/// Linear recurrence with polynomial coefficients in n:
///
///     sum_{j=0}^{order} coefficients[j](n) * f_{n + shift + j} = 0,   n >= offset.
///
/// `shift` keeps each relation in its native index convention (the Euler
/// recurrence relates f_{n-2}..f_{n+1}, so shift = -2).
struct RecurrenceSpec {
    std::string name;
    unsigned order = 0;
    long shift = 0;
    long offset = 0;
    std::vector<RationalPolynomial> coefficients;
    std::optional<BigRational> parameter;

    const RationalPolynomial& leading() const { return coefficients.back(); }
};

/// Contiguous exact values f_{start}, f_{start+1}, ...
struct SequenceWindow {
    long start_index = 0;
    std::vector<BigRational> values;

    long end_index() const { return start_index + static_cast<long>(values.size()); }  ///< one past the last
    bool covers(long index) const { return index >= start_index && index < end_index(); }

    const BigRational& at(long index) const {
        if (!covers(index)) throw recurrence_error("sequence window does not cover index", index);
        return values[static_cast<std::size_t>(index - start_index)];
    }
};

enum class RecurrenceName { aptekarev, cor1, cor2, cor3 };

inline std::string_view to_string(RecurrenceName r) {
    switch (r) {
        case RecurrenceName::aptekarev: return "aptekarev";
        case RecurrenceName::cor1: return "cor1";
        case RecurrenceName::cor2: return "cor2";
        case RecurrenceName::cor3: return "cor3";
    }
    return "?";
}

inline RecurrenceName parse_recurrence_name(std::string_view s) {
    for (auto r : {RecurrenceName::aptekarev, RecurrenceName::cor1, RecurrenceName::cor2, RecurrenceName::cor3})
        if (to_string(r) == s) return r;
    throw domain_error("unknown recurrence '" + std::string(s) + "'");
}

namespace detail {

/// Integer polynomial in n from ascending coefficients.
inline RationalPolynomial ipoly(std::initializer_list<long> ascending) {
    std::vector<BigRational> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

inline RationalPolynomial product(std::initializer_list<RationalPolynomial> factors) {
    RationalPolynomial out = RationalPolynomial::constant(1);
    for (const auto& f : factors) out *= f;
    return out;
}

/// Monomial c * n^i * a^j of a polynomial in (n, a).
struct NATerm {
    long coef;
    unsigned n_pow;
    unsigned a_pow;
};

/// Substitutes a value for a, leaving a polynomial in n.
inline RationalPolynomial in_n(std::initializer_list<NATerm> terms, const BigRational& a) {
    RationalPolynomial out;
    for (const auto& t : terms) out += RationalPolynomial::monomial(BigRational(t.coef) * pow(a, t.a_pow), t.n_pow);
    return out;
}

inline RecurrenceSpec aptekarev_spec() {
    const auto n = ipoly({0, 1});
    RecurrenceSpec s;
    s.name = "aptekarev";
    s.order = 3;
    s.shift = -2;
    s.offset = 2;
    // (16n-15) f_{n+1} = (128n^3+40n^2-82n-45) f_n - n^2(256n^3-240n^2+64n-7) f_{n-1}
    //                    + n^2(n-1)^2(16n+1) f_{n-2}
    s.coefficients = {
        -product({n, n, ipoly({-1, 1}), ipoly({-1, 1}), ipoly({1, 16})}),
        product({n, n, ipoly({-7, 64, -240, 256})}),
        -ipoly({-45, -82, 40, 128}),
        ipoly({-15, 16}),
    };
    return s;
}

inline RecurrenceSpec cor1_spec() {
    RecurrenceSpec s;
    s.name = "cor1";
    s.order = 3;
    s.shift = 0;
    s.offset = 0;
    s.coefficients = {
        -product({ipoly({11, 6}), ipoly({5, 6}), ipoly({1, 2}), ipoly({1, 3}), ipoly({13, 6}), ipoly({7, 6}),
                  ipoly({21443, 46106, 37038, 13140, 1728})}),
        product({ipoly({6}), ipoly({11, 6}), ipoly({13, 6}),
                 ipoly({9914615, 64534088, 178728654, 275942444, 260388504, 154077840, 55911168, 11384064,
                        995328})}),
        -product({ipoly({36}),
                  ipoly({30377295, 175094660, 415828470, 525871008, 379069848, 155405952, 33654528, 2985984}),
                  ipoly({2, 1})}),
        product({ipoly({7776}), ipoly({3, 1}), ipoly({2, 1}), ipoly({963, 4538, 7986, 6228, 1728})}),
    };
    return s;
}

inline RecurrenceSpec cor2_spec() {
    RecurrenceSpec s;
    s.name = "cor2";
    s.order = 3;
    s.shift = -1;
    s.offset = 1;
    s.coefficients = {
        -product({ipoly({3, 4}), ipoly({-1, 4}), ipoly({-1, 2}), ipoly({5, 4}), ipoly({1, 4}), ipoly({-3, 4}),
                  ipoly({1019, 4928, 8912, 7168, 2048})}),
        product({ipoly({2}), ipoly({3, 4}), ipoly({5, 4}), ipoly({1, 4}),
                 ipoly({-537, -604, -117296, -245824, 389120, 1486848, 1572864, 524288})}),
        -product({ipoly({32}), ipoly({5, 4}), ipoly({1, 1}),
                  ipoly({-32229, 76032, 17168, -365824, 331776, 753664, 262144})}),
        product({ipoly({2048}), ipoly({2, 1}), ipoly({1, 1}), ipoly({-117, 416, -304, -1024, 2048})}),
    };
    return s;
}

inline RecurrenceSpec cor3_spec(const BigRational& a) {
    RecurrenceSpec s;
    s.name = "cor3";
    s.order = 3;
    s.shift = -1;
    s.offset = 1;
    s.parameter = a;
    const auto n_plus = [&](long c0, long ca) { return in_n({{c0, 0, 0}, {ca, 0, 1}, {1, 1, 0}}, a); };  // n + c0 + ca*a

    const auto lambda2 =
        product({ipoly({2, 1}), in_n({{16, 3, 0}, {20, 2, 1}, {10, 1, 2}, {2, 0, 3}, {17, 2, 0}, {14, 1, 1},
                                      {3, 0, 2}, {1, 1, 0}, {-1, 0, 1}},
                                     a)});
    const auto lambda1 = in_n({{-128, 6, 0}, {-224, 5, 1}, {-112, 4, 2}, {20, 3, 3},   {42, 2, 4},   {16, 1, 5},
                               {2, 0, 6},    {-808, 5, 0}, {-1228, 4, 1}, {-601, 3, 2}, {-45, 2, 3},  {47, 1, 4},
                               {11, 0, 5},   {-1910, 4, 0}, {-2446, 3, 1}, {-1085, 2, 2}, {-176, 1, 3}, {-3, 0, 4},
                               {-2035, 3, 0}, {-2063, 2, 1}, {-715, 1, 2}, {-91, 0, 3},   {-887, 2, 0}, {-592, 1, 1},
                               {-113, 0, 2}, {-82, 1, 0},  {14, 0, 1}},
                              a);
    const auto lambda0 = product(
        {n_plus(1, -1), n_plus(1, 1),
         in_n({{256, 6, 0},  {576, 5, 1},  {544, 4, 2},  {272, 3, 3}, {72, 2, 4},   {8, 1, 5},    {1296, 5, 0},
               {2384, 4, 1}, {1724, 3, 2}, {596, 2, 3},  {92, 1, 4},  {4, 0, 5},    {2448, 4, 0}, {3518, 3, 1},
               {1840, 2, 2}, {404, 1, 3},  {30, 0, 4},   {2185, 3, 0}, {2333, 2, 1}, {817, 1, 2},  {93, 0, 3},
               {923, 2, 0},  {668, 1, 1},  {125, 0, 2},  {146, 1, 0}, {58, 0, 1}},
              a)});
    const auto lambda_m1 =
        -product({n_plus(0, -1), n_plus(1, -1), n_plus(1, 1),
                  in_n({{16, 3, 0}, {20, 2, 1}, {10, 1, 2}, {2, 0, 3}, {65, 2, 0}, {54, 1, 1}, {13, 0, 2},
                        {83, 1, 0}, {33, 0, 1}, {34, 0, 0}},
                       a),
                  n_plus(0, 1), n_plus(0, 1)});
    s.coefficients = {lambda_m1, lambda0, lambda1, lambda2};
    return s;
}

}  // namespace detail

/// The four built-in third-order recurrences. `a` is required for cor3 only.
inline RecurrenceSpec builtin(RecurrenceName name, const std::optional<BigRational>& a = std::nullopt) {
    switch (name) {
        case RecurrenceName::aptekarev: return detail::aptekarev_spec();
        case RecurrenceName::cor1: return detail::cor1_spec();
        case RecurrenceName::cor2: return detail::cor2_spec();
        case RecurrenceName::cor3:
            if (!a) throw domain_error("recurrence cor3 requires the parameter a");
            return detail::cor3_spec(*a);
    }
    throw domain_error("unknown recurrence");
}

/// sum_j c_j(n) f_{n+shift+j}; zero iff the relation holds at n.
inline BigRational residual(const RecurrenceSpec& spec, const SequenceWindow& values, long n) {
    BigRational total(0);
    const BigRational nn(n);
    for (unsigned j = 0; j <= spec.order; ++j) {
        total += spec.coefficients[j].evaluate(nn) * values.at(n + spec.shift + static_cast<long>(j));
    }
    return total;
}

/// Extends `initial` (exactly `order` values) forward to index `upto`.
inline SequenceWindow run(const RecurrenceSpec& spec, const SequenceWindow& initial, long upto) {
    if (initial.values.size() != spec.order)
        throw recurrence_error("initial window must hold exactly `order` values for " + spec.name,
                               static_cast<long>(initial.values.size()));
    SequenceWindow out = initial;
    for (long m = out.end_index(); m <= upto; ++m) {
        const long n = m - spec.shift - static_cast<long>(spec.order);
        if (n < spec.offset) throw recurrence_error(spec.name + " is not asserted below its offset", n);
        const BigRational nn(n);
        const BigRational lead = spec.leading().evaluate(nn);
        if (lead.is_zero()) throw recurrence_error(spec.name + ": leading coefficient vanishes", n);
        BigRational acc(0);
        for (unsigned j = 0; j < spec.order; ++j)
            acc += spec.coefficients[j].evaluate(nn) * out.at(n + spec.shift + static_cast<long>(j));
        out.values.push_back(-acc / lead);
    }
    return out;
}

/// The two closed-form solutions (numerators p, denominators q) attached to a
/// built-in recurrence, as windows over [0, upto].
inline std::pair<SequenceWindow, SequenceWindow> closed_form_windows(RecurrenceName name,
                                                                     const std::optional<BigRational>& a,
                                                                     long upto) {
    SequenceWindow p{0, {}}, q{0, {}};
    for (long k = 0; k <= upto; ++k) {
        const auto n = static_cast<unsigned>(k);
        if (name == RecurrenceName::aptekarev) {
            p.values.push_back(euler_p(n));
            q.values.emplace_back(euler_q(n));
        } else {
            const SpecialFamily c = name == RecurrenceName::cor1   ? SpecialFamily::cor1
                                : name == RecurrenceName::cor2 ? SpecialFamily::cor2
                                                               : SpecialFamily::cor3;
            auto pq = family_sequences(c, a, n);
            p.values.push_back(std::move(pq.p));
            q.values.push_back(std::move(pq.q));
        }
    }
    return {std::move(p), std::move(q)};
}

}  // namespace gammaq
