#pragma once

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gammaq/errors.hpp"
#include "gammaq/numerics.hpp"
#include "gammaq/sequences.hpp"

namespace gammaq {

struct AsymptoticConstants {
    BigFloat c1, c2, ratio;
};

/// c2 = 2^{(a1+a2)/2 - 3/4} / (b^{1/4 + (a1-a2)/2} e^{3b/8} sqrt(pi) Gamma(a2+1)),
/// c1 = 2 sin(pi (a2-a1)) Gamma(a2+1) c2 / (b^{a2-a1} Gamma(a1+1)).
inline AsymptoticConstants constants(const BigRational& a1, const BigRational& a2, const BigRational& b,
                                     const PrecisionContext& ctx) {
    ApproxParams params(a1, a2, b);
    const BigRational one(1), half(1, 2);
    BigFloat two_pow = pow(BigRational(2), (a1 + a2) * half - BigRational(3, 4), ctx);
    BigFloat b_pow = pow(b, BigRational(1, 4) + (a1 - a2) * half, ctx);
    BigFloat e_pow = exp(to_float(BigRational(3, 8) * b, ctx), ctx);
    BigFloat g2 = gamma(a2 + one, ctx);
    BigFloat c2 = two_pow / (b_pow * e_pow * sqrt(pi(ctx), ctx) * g2);
    BigFloat c1 = BigFloat::from(2, ctx.bits()) * sin_pi(a2 - a1, ctx) * g2 * c2 /
                  (pow(b, a2 - a1, ctx) * gamma(a1 + one, ctx));
    BigFloat ratio = c1 / c2;
    return {std::move(c1), std::move(c2), std::move(ratio)};
}

/// One row of a convergence table. Growth fields are empty at n = 0.
struct ConvergenceRow {
    unsigned n = 0;
    BigFloat value_pq, target, abs_error;
    int error_sign = 0;  // sign of value_pq - target
    BigFloat normalized_error;
    std::optional<BigFloat> q_growth_ratio;
    std::optional<BigFloat> linear_form_ratio;
    unsigned digits = 0;  // decimal digits the row was evaluated with
};

struct GrowthRow {
    unsigned n = 0;
    BigFloat q_growth_ratio, reference, relative_deviation;
};

/// Options shared by the table builders.
struct TableOptions {
    PrecisionContext ctx{};
    unsigned threads = 1;
};

namespace detail {

/// Everything a row needs: the exact approximants and the exponent data of
/// the family's asymptotics.
struct RowInput {
    BigRational p, q;
    BigRational b;              // scale in e^{sqrt(2bn)}
    BigRational growth_power;   // q_n ~ (2n)! e^{sqrt(2bn)} n^{growth_power}
};

/// ln((2n)! e^{sqrt(2bn)} n^{power}).
inline BigFloat log_growth_scale(unsigned n, const BigRational& b, const BigRational& power,
                                 const PrecisionContext& ctx) {
    BigFloat s = log_factorial(2ul * n, ctx);
    s += sqrt(to_float(BigRational(2 * static_cast<long>(n)) * b, ctx), ctx);
    s += to_float(power, ctx) * ln(BigFloat::from(static_cast<long>(n), ctx.bits()), ctx);
    return s;
}

inline BigFloat log_abs_rational(const BigRational& r, const PrecisionContext& ctx) {
    return ln(to_float(abs(r), ctx), ctx);
}

/// Decimal digits needed so that abs_error carries the requested significant digits.
inline unsigned auto_digits(unsigned n, const BigRational& b, const PrecisionContext& ctx) {
    const double decay = 2.0 * std::sqrt(2.0 * b.gmp().get_d() * n) / std::log(10.0);
    return static_cast<unsigned>(std::ceil(decay)) + ctx.working_digits + ctx.guard_digits + 5;
}

inline ConvergenceRow evaluate_row(unsigned n, const RowInput& in, const std::function<BigFloat(const PrecisionContext&)>& target,
                                   unsigned digits) {
    const PrecisionContext ctx{digits, 10};
    ConvergenceRow row;
    row.n = n;
    row.digits = digits;
    row.value_pq = to_float(in.p / in.q, ctx);
    row.target = target(ctx);
    BigFloat diff = row.value_pq - row.target;
    row.error_sign = diff.sign();
    row.abs_error = abs(diff);
    BigFloat root = sqrt(to_float(BigRational(2 * static_cast<long>(n)) * in.b, ctx), ctx);
    row.normalized_error = row.abs_error * exp(BigFloat::from(2, ctx.bits()) * root, ctx);
    if (n > 0) {
        BigFloat scale = log_growth_scale(n, in.b, in.growth_power, ctx);
        BigFloat log_q = log_abs_rational(in.q, ctx);
        row.q_growth_ratio = exp(log_q - scale, ctx);
        // |q target - p| = q |target - p/q|; the linear form decays like
        // (2n)! e^{-sqrt(2bn)} n^{growth_power}.
        if (!row.abs_error.is_zero()) {
            BigFloat two_root = BigFloat::from(2, ctx.bits()) * root;
            row.linear_form_ratio = exp(log_q + ln(row.abs_error, ctx) - scale + two_root, ctx);
        }
    }
    return row;
}

/// Evaluates at the automatic precision and again with extra digits; the two
/// abs_error values must agree to 10 significant digits.
inline ConvergenceRow checked_row(unsigned n, const RowInput& in,
                                  const std::function<BigFloat(const PrecisionContext&)>& target,
                                  const PrecisionContext& ctx) {
    const unsigned digits = auto_digits(n, in.b, ctx);
    ConvergenceRow row = evaluate_row(n, in, target, digits);
    ConvergenceRow wide = evaluate_row(n, in, target, digits + ctx.guard_digits + 20);
    if (!(row.abs_error.is_zero() && wide.abs_error.is_zero())) {
        BigFloat agreement = relative_difference(row.abs_error, wide.abs_error);
        if (!(agreement < BigFloat::from_string("1e-10", 64)))
            throw precision_error("error at n = " + std::to_string(n) + " is unstable at " + std::to_string(digits) +
                                  " digits");
    }
    return row;
}

/// Runs f over the indices with up to `threads` workers; results keep input order.
template <class Row, class F>
std::vector<Row> parallel_rows(const std::vector<unsigned>& ns, unsigned threads, F f) {
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1]) throw domain_error("n list must be strictly increasing");
    std::vector<std::optional<Row>> out(ns.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < ns.size(); i = next++) {
            try {
                out[i] = f(ns[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ns.size())));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<Row> rows;
    rows.reserve(out.size());
    for (auto& r : out) rows.push_back(std::move(*r));
    return rows;
}

}  // namespace detail

/// Rows for q_n(a2,a1,b)/q_n(a1,a2,b) -> [Gamma(a2+1)/b^a2] / [Gamma(a1+1)/b^a1].
inline std::vector<ConvergenceRow> gamma_quotient_table(const BigRational& a1, const BigRational& a2,
                                                        const BigRational& b, const std::vector<unsigned>& ns,
                                                        const TableOptions& opt = {}) {
    ApproxParams params(a1, a2, b);
    if (params.integer_difference())
        throw domain_error("a1 - a2 is an integer; the Gamma quotient asymptotics do not apply");
    auto target = [&](const PrecisionContext& c) {
        const BigRational one(1);
        return gamma(a2 + one, c) / gamma(a1 + one, c) * pow(b, a1 - a2, c);
    };
    const BigRational power = (a1 + a2) / BigRational(2) - BigRational(1, 4);
    return detail::parallel_rows<ConvergenceRow>(ns, opt.threads, [&](unsigned n) {
        detail::RowInput in{q_gamma(params.swapped(), n), q_gamma(params, n), b, power};
        return detail::checked_row(n, in, target, opt.ctx);
    });
}

/// Rows for p_n(a,b)/q_n(a,b) -> ln b - psi(a+1).
inline std::vector<ConvergenceRow> psi_table(const BigRational& a, const BigRational& b,
                                             const std::vector<unsigned>& ns, const TableOptions& opt = {}) {
    detail::require_psi_domain(a, b);
    auto target = [&](const PrecisionContext& c) {
        BigFloat lb = b == BigRational(1) ? BigFloat(c.bits()) : ln(to_float(b, c), c);
        return lb - digamma(a + BigRational(1), c);
    };
    const BigRational power = a - BigRational(1, 4);
    return detail::parallel_rows<ConvergenceRow>(ns, opt.threads, [&](unsigned n) {
        detail::RowInput in{p_psi_compact(a, b, n), q_psi(a, b, n), b, power};
        return detail::checked_row(n, in, target, opt.ctx);
    });
}

/// Rows for the Euler approximants p_n/q_n -> gamma.
inline std::vector<ConvergenceRow> euler_table(const std::vector<unsigned>& ns, const TableOptions& opt = {}) {
    auto target = [](const PrecisionContext& c) { return euler_gamma(c); };
    const BigRational power(-1, 4);
    return detail::parallel_rows<ConvergenceRow>(ns, opt.threads, [&](unsigned n) {
        detail::RowInput in{euler_p(n), BigRational(euler_q(n)), BigRational(1), power};
        return detail::checked_row(n, in, target, opt.ctx);
    });
}

/// q_n(a1,a2,b) / [(2n)! e^{sqrt(2bn)} n^{(a1+a2)/2 - 1/4}] against c2, for n >= 1.
inline std::vector<GrowthRow> qn_growth_table(const BigRational& a1, const BigRational& a2, const BigRational& b,
                                              const std::vector<unsigned>& ns, const TableOptions& opt = {}) {
    ApproxParams params(a1, a2, b);
    const PrecisionContext& ctx = opt.ctx;
    const BigFloat c2 = constants(a1, a2, b, ctx).c2;
    const BigRational power = (a1 + a2) / BigRational(2) - BigRational(1, 4);
    return detail::parallel_rows<GrowthRow>(ns, opt.threads, [&](unsigned n) {
        if (n == 0) throw domain_error("growth ratio needs n >= 1");
        BigFloat log_q = detail::log_abs_rational(q_gamma(params, n), ctx);
        BigFloat ratio = exp(log_q - detail::log_growth_scale(n, b, power, ctx), ctx);
        BigFloat dev = abs(ratio - c2) / c2;
        return GrowthRow{n, std::move(ratio), c2, std::move(dev)};
    });
}

}  // namespace gammaq
