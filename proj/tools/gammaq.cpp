#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gammaq/analysis.hpp"
#include "gammaq/io.hpp"
#include "gammaq/recurrences.hpp"
#include "gammaq/rodrigues.hpp"
#include "gammaq/sequences.hpp"

using namespace gammaq;
using io::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

/// Everything that determines an output, in a fixed key order.
struct RunManifest {
    std::string command;
    json params = json::object();
    std::optional<unsigned> precision;

    json to_json(const std::string& checksum) const {
        json j;
        j["command"] = command;
        j["params"] = params;
        j["precision"] = precision ? json(*precision) : json(nullptr);
        j["version"] = GAMMAQ_VERSION;
        j["checksum"] = "sha256:" + checksum;
        return j;
    }
};

/// CSV: a "# " manifest line, then the body. JSON: the payload with a
/// leading "manifest" key. The checksum covers the body / compact payload.
std::string render_csv(const RunManifest& m, const std::string& body) {
    return "# " + m.to_json(sha256_hex(body)).dump() + "\r\n" + body;
}

std::string render_json(const RunManifest& m, const json& payload) {
    json out;
    out["manifest"] = m.to_json(sha256_hex(payload.dump()));
    for (const auto& [k, v] : payload.items()) out[k] = v;
    return out.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + path);
    f << text;
}

BigRational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return BigRational::parse(text);
    } catch (const domain_error& e) {
        throw UsageError("--" + flag + ": " + e.what());
    }
}

BigRational required_rational(const std::string& flag, const std::optional<std::string>& text,
                              const std::string& family) {
    if (!text) throw UsageError(family + " requires --" + flag);
    return parse_rational(flag, *text);
}

struct CommonOptions {
    std::optional<std::string> a1, a2, b, a;
    std::string format = "csv";
    std::string output;
    unsigned threads = 1;
};

void add_parameter_flags(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--a1", o.a1, "first exponent, as p or p/q");
    cmd->add_option("--a2", o.a2, "second exponent, as p or p/q");
    cmd->add_option("--b", o.b, "scale b > 0, as p or p/q (default 1)");
    cmd->add_option("--a", o.a, "single exponent for psi and cor3");
    cmd->add_option("--output,-o", o.output, "output file (default stdout)");
    cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
}

BigRational scale_b(const CommonOptions& o) { return o.b ? parse_rational("b", *o.b) : BigRational(1); }

// ----------------------------------------------------------------------------- gen

struct GenRow {
    unsigned n;
    BigRational p, q;
};

int cmd_gen(const std::string& family, const CommonOptions& o, unsigned n_max) {
    RunManifest m{"gen " + family, json::object(), std::nullopt};
    m.params["n_max"] = n_max;
    std::function<GenRow(unsigned)> row;

    if (family == "gamma-quotient") {
        BigRational a1 = required_rational("a1", o.a1, family), a2 = required_rational("a2", o.a2, family);
        BigRational b = scale_b(o);
        ApproxParams params(a1, a2, b);
        if (params.integer_difference())
            throw UsageError("a1 - a2 is an integer; the Gamma quotient asymptotics do not apply");
        m.params["a1"] = a1.str();
        m.params["a2"] = a2.str();
        m.params["b"] = b.str();
        row = [params](unsigned n) { return GenRow{n, q_gamma(params.swapped(), n), q_gamma(params, n)}; };
    } else if (family == "psi") {
        BigRational a = required_rational("a", o.a, family), b = scale_b(o);
        detail::require_psi_domain(a, b);
        m.params["a"] = a.str();
        m.params["b"] = b.str();
        row = [a, b](unsigned n) { return GenRow{n, p_psi_compact(a, b, n), q_psi(a, b, n)}; };
    } else if (family == "euler") {
        row = [](unsigned n) { return GenRow{n, euler_p(n), BigRational(euler_q(n))}; };
    } else {
        SpecialFamily c = family == "cor1" ? SpecialFamily::cor1 : family == "cor2" ? SpecialFamily::cor2 : SpecialFamily::cor3;
        std::optional<BigRational> a;
        if (c == SpecialFamily::cor3) {
            a = required_rational("a", o.a, family);
            m.params["a"] = a->str();
        }
        (void)family_params(c, a);
        row = [c, a](unsigned n) {
            auto pq = family_sequences(c, a, n);
            return GenRow{n, std::move(pq.p), std::move(pq.q)};
        };
    }

    std::vector<unsigned> ns(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) ns[n] = n;
    auto rows = detail::parallel_rows<GenRow>(ns, o.threads, row);

    if (o.format == "csv") {
        std::string body = io::csv_line({"n", "p", "q"});
        for (const auto& r : rows) body += io::csv_line({std::to_string(r.n), r.p.str(), r.q.str()});
        emit(render_csv(m, body), o.output);
    } else {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"n", r.n}, {"p", r.p.str()}, {"q", r.q.str()}});
        emit(render_json(m, json{{"family", family}, {"rows", arr}}), o.output);
    }
    return kExitPass;
}

// -------------------------------------------------------------------------- verify

using ParamPair = std::pair<BigRational, BigRational>;

std::vector<ParamPair> default_pairs() {
    return {{BigRational(1, 2), BigRational(-1, 3)}, {BigRational(1, 4), BigRational(-1, 4)},
            {BigRational(-2, 3), BigRational(-1, 2)}};
}

std::vector<ParamPair> pairs_from(const CommonOptions& o) {
    if (!o.a1 && !o.a2) return default_pairs();
    if (!o.a1 || !o.a2) throw UsageError("give both --a1 and --a2, or neither");
    return {{parse_rational("a1", *o.a1), parse_rational("a2", *o.a2)}};
}

std::vector<BigRational> scales_from(const CommonOptions& o, std::vector<BigRational> fallback) {
    if (o.b) return {parse_rational("b", *o.b)};
    return fallback;
}

json rational_list(const std::vector<BigRational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

json combo_json(const GammaCombo& g) {
    return {{"plain", g.c_plain.str()},
            {"gamma1", g.c_gamma1.str()},
            {"gamma2", g.c_gamma2.str()},
            {"euler", g.c_euler.str()}};
}

struct Report {
    json checks = json::array();
    std::size_t failed = 0;

    void add(json check, bool verdict) {
        check["verdict"] = verdict;
        if (!verdict) {
            if (failed == 0) std::cerr << "counterexample: " << check.dump() << "\n";
            ++failed;
        }
        checks.push_back(std::move(check));
    }
};

void verify_recurrences(Report& r, RunManifest& m, json& specs, const CommonOptions& o, const std::string& which,
                        const std::string& spec_path, unsigned n_max) {
    std::optional<RecurrenceSpec> custom;
    if (!spec_path.empty()) {
        if (which == "all") throw UsageError("--spec needs --which to name the closed forms it is checked against");
        std::ifstream f(spec_path);
        if (!f) throw UsageError("cannot read recurrence spec " + spec_path);
        try {
            custom = io::recurrence_spec_from_json(json::parse(f));
        } catch (const json::exception& e) {
            throw UsageError("malformed recurrence spec: " + std::string(e.what()));
        }
        if (custom->parameter && !o.a) m.params["a"] = custom->parameter->str();
        m.params["spec_file"] = io::to_json(*custom);
    }
    std::vector<std::pair<RecurrenceName, std::optional<BigRational>>> cases;
    const auto cor3_params = [&]() -> std::vector<BigRational> {
        if (o.a) return {parse_rational("a", *o.a)};
        return {BigRational(1, 5), BigRational(-1, 3), BigRational(1, 2)};
    };
    for (auto name : {RecurrenceName::aptekarev, RecurrenceName::cor1, RecurrenceName::cor2, RecurrenceName::cor3}) {
        if (which != "all" && which != to_string(name)) continue;
        if (name == RecurrenceName::cor3 && custom && custom->parameter && !o.a)
            cases.emplace_back(name, custom->parameter);
        else if (name == RecurrenceName::cor3)
            for (const auto& a : cor3_params()) cases.emplace_back(name, a);
        else
            cases.emplace_back(name, std::nullopt);
    }
    m.params["which"] = which;
    if (o.a) m.params["a"] = parse_rational("a", *o.a).str();

    for (const auto& [name, a] : cases) {
        RecurrenceSpec spec = custom ? *custom : builtin(name, a);
        if (custom && name == RecurrenceName::cor3 && custom->parameter && *custom->parameter != *a)
            throw UsageError("spec parameter " + custom->parameter->str() + " differs from --a " + a->str());
        specs.push_back(io::to_json(spec));
        const long last = static_cast<long>(n_max);
        const long upto = std::max<long>(last + spec.shift + static_cast<long>(spec.order), spec.order);
        auto [p, q] = closed_form_windows(name, a, upto);
        for (const auto* seq : {&p, &q}) {
            const char* label = seq == &p ? "p" : "q";
            for (long n = spec.offset; n <= last; ++n) {
                BigRational res = residual(spec, *seq, n);
                json check{{"identity", "recurrence residual"}, {"recurrence", spec.name}, {"sequence", label},
                           {"n", n},  {"residual", res.str()}};
                if (a) check["a"] = a->str();
                if (!res.is_zero()) {
                    json window = json::array();
                    for (long j = 0; j <= static_cast<long>(spec.order); ++j)
                        window.push_back(seq->at(n + spec.shift + j).str());
                    check["values"] = window;
                    check["spec"] = io::to_json(spec);
                }
                r.add(std::move(check), res.is_zero());
            }
            SequenceWindow initial{0, std::vector<BigRational>(seq->values.begin(), seq->values.begin() + spec.order)};
            SequenceWindow ran = initial;
            bool same = false;
            try {
                ran = run(spec, initial, upto);
                same = ran.values == seq->values;
            } catch (const recurrence_error& e) {
                r.add({{"identity", "recurrence run reproduces closed form"}, {"recurrence", spec.name},
                       {"sequence", label}, {"error", e.what()}}, false);
                continue;
            }
            json check{{"identity", "recurrence run reproduces closed form"}, {"recurrence", spec.name},
                       {"sequence", label}, {"upto", upto}};
            if (a) check["a"] = a->str();
            if (!same) {
                for (std::size_t i = 0; i < ran.values.size(); ++i)
                    if (ran.values[i] != seq->values[i]) {
                        check["first_mismatch"] = {{"index", i}, {"run", ran.values[i].str()}, {"closed_form", seq->values[i].str()}};
                        break;
                    }
            }
            r.add(std::move(check), same);
        }
    }
}

void verify_integrality(Report& r, RunManifest& m, const CommonOptions& o, unsigned n_max) {
    json pairs = json::array();
    for (const auto& [a1, a2] : pairs_from(o)) {
        pairs.push_back({a1.str(), a2.str()});
        for (unsigned n = 0; n <= n_max; ++n) {
            IntegralityReport rep = check_integrality(a1, a2, n);
            json check{{"identity", "mu-scaled q_n lies in n! Z[b]"}, {"a1", a1.str()}, {"a2", a2.str()}, {"n", n}};
            if (!rep.verdict) {
                check["scale"] = rep.scale.get_str();
                check["quotients"] = rational_list(rep.quotients);
            }
            r.add(std::move(check), rep.verdict);
        }
    }
    m.params["pairs"] = pairs;
}

void verify_symbolic(Report& r, RunManifest& m, const CommonOptions& o, const std::string& suite, unsigned n_max,
                     unsigned cap) {
    auto scales = scales_from(o, {BigRational(1), BigRational(2)});
    json pairs = json::array();
    for (const auto& [a1, a2] : pairs_from(o)) {
        pairs.push_back({a1.str(), a2.str()});
        for (const auto& b : scales) {
            for (unsigned n = 0; n <= n_max; ++n) {
                json check{{"a1", a1.str()}, {"a2", a2.str()}, {"b", b.str()}, {"n", n}};
                bool ok = false;
                if (suite == "lemma1") {
                    GammaCombo got = remainder_combo(a1, a2, b, n, cap);
                    GammaCombo want = remainder_expected(a1, a2, b, n);
                    ok = got == want;
                    check["identity"] = "remainder expands over the two Gamma symbols with q_n coefficients";
                    if (!ok) {
                        check["integral"] = combo_json(got);
                        check["expected"] = combo_json(want);
                    }
                } else {
                    BigRational got = moment_integral(a1, a2, b, n, cap);
                    BigRational want = q_gamma(ApproxParams(a1, a2, b), n);
                    ok = got == want;
                    check["identity"] = "weighted integral of Q_n equals q_n";
                    if (!ok) {
                        check["integral"] = got.str();
                        check["expected"] = want.str();
                    }
                }
                r.add(std::move(check), ok);
            }
        }
    }
    m.params["pairs"] = pairs;
    m.params["b"] = rational_list(scales);
    m.params["symbolic_cap"] = cap;
}

void verify_euler_remainder_suite(Report& r, unsigned n_max, unsigned cap) {
    for (unsigned n = 0; n <= n_max; ++n) {
        GammaCombo got = euler_remainder_combo(n, cap);
        BigRational p = euler_p(n);
        BigInt q = euler_q(n);
        bool ok = got.c_plain == p && got.c_euler == -BigRational(q) && got.c_gamma1.is_zero() && got.c_gamma2.is_zero();
        json check{{"identity", "log-weighted integral of Q_n equals p_n - gamma q_n"}, {"n", n}};
        if (!ok) {
            check["integral"] = combo_json(got);
            check["p"] = p.str();
            check["q"] = q.get_str();
        }
        r.add(std::move(check), ok);
    }
}

void verify_orthogonality(Report& r, RunManifest& m, const CommonOptions& o, unsigned n, unsigned digits) {
    BigRational a1 = o.a1 ? parse_rational("a1", *o.a1) : BigRational(0);
    BigRational a2 = o.a2 ? parse_rational("a2", *o.a2) : BigRational(0);
    BigRational b = scale_b(o);
    m.params["a1"] = a1.str();
    m.params["a2"] = a2.str();
    m.params["b"] = b.str();
    m.params["n"] = n;
    // Residuals must fall below 10^(5 - digits).
    BigFloat bound = BigFloat::from(10, 64);
    mpfr_pow_si(bound.raw(), bound.raw(), 5 - static_cast<long>(digits), MPFR_RNDN);
    auto record = [&](json check, const BigFloat& res) {
        check["residual"] = res.str(8);
        r.add(std::move(check), abs(res) < bound);
    };
    for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k)
            for (unsigned nu = 0; nu < n; ++nu)
                record({{"identity", "orthogonality"}, {"interval", j}, {"weight", k}, {"nu", nu}},
                       orthogonality_residual(a1, a2, b, n, j, k, nu, digits));
    if (a1.is_zero() && a2.is_zero() && b == BigRational(1)) {
        for (int j = 1; j <= 2; ++j)
            for (unsigned nu = 0; nu < n; ++nu)
                record({{"identity", "orthogonality against the log weight"}, {"interval", j}, {"nu", nu}},
                       log_orthogonality_residual(n, j, nu, digits));
    }
}

void verify_divisibility(Report& r, unsigned n_max) {
    for (unsigned n = 1; n <= n_max; ++n) {
        EulerDivisibilityReport rep = check_euler_divisibility(n);
        json check{{"identity", "n! | q_n and (n!/D_n) | p_n"}, {"n", n}};
        if (!rep.verdict()) {
            check["q"] = rep.q.get_str();
            check["p"] = rep.p.get_str();
            check["lcm"] = rep.lcm.get_str();
            check["lcm_divides_factorial"] = rep.lcm_divides_factorial;
            check["q_divisible"] = rep.q_divisible;
            check["p_divisible"] = rep.p_divisible;
        }
        r.add(std::move(check), rep.verdict());
    }
}

void verify_compact_psi(Report& r, RunManifest& m, const CommonOptions& o, unsigned n_max) {
    std::vector<BigRational> as;
    if (o.a)
        as = {parse_rational("a", *o.a)};
    else
        as = {BigRational(0), BigRational(1, 2), BigRational(-1, 2), BigRational(1, 3), BigRational(-3, 4)};
    auto scales = scales_from(o, {BigRational(1), BigRational(2), BigRational(1, 2)});
    m.params["a"] = rational_list(as);
    m.params["b"] = rational_list(scales);
    for (const auto& a : as)
        for (const auto& b : scales)
            for (unsigned n = 0; n <= n_max; ++n) {
                BigRational compact = p_psi_compact(a, b, n), triple = p_psi_triple(a, b, n);
                json check{{"identity", "compact p_n equals the triple sum"}, {"a", a.str()}, {"b", b.str()}, {"n", n}};
                if (compact != triple) {
                    check["compact"] = compact.str();
                    check["triple"] = triple.str();
                }
                r.add(std::move(check), compact == triple);
            }
}

int cmd_verify(const std::string& suite, const CommonOptions& o, std::optional<unsigned> n_max_opt,
               std::optional<unsigned> n_opt, unsigned digits, const std::string& which, const std::string& spec_path,
               unsigned cap) {
    RunManifest m{"verify " + suite, json::object(), std::nullopt};
    Report r;
    json specs = json::array();
    auto n_max = [&](unsigned fallback) {
        unsigned v = n_max_opt.value_or(fallback);
        m.params["n_max"] = v;
        return v;
    };
    if (suite == "recurrences") {
        verify_recurrences(r, m, specs, o, which, spec_path, n_max(30));
    } else if (suite == "integrality") {
        verify_integrality(r, m, o, n_max(10));
    } else if (suite == "lemma1" || suite == "eq13") {
        verify_symbolic(r, m, o, suite, n_max(4), cap);
    } else if (suite == "euler-remainder") {
        m.params["symbolic_cap"] = cap;
        verify_euler_remainder_suite(r, n_max(6), cap);
    } else if (suite == "orthogonality") {
        m.precision = digits;
        verify_orthogonality(r, m, o, n_opt.value_or(2), digits);
    } else if (suite == "divisibility") {
        verify_divisibility(r, n_max(40));
    } else {
        verify_compact_psi(r, m, o, n_max(20));
    }
    json payload;
    payload["suite"] = suite;
    if (!specs.empty()) payload["recurrences"] = specs;
    payload["checks"] = r.checks;
    payload["total"] = r.checks.size();
    payload["failed"] = r.failed;
    payload["verdict"] = r.failed == 0 ? "pass" : "fail";
    emit(render_json(m, payload), o.output);
    return r.failed == 0 ? kExitPass : kExitViolation;
}

// ------------------------------------------------------------------------ converge

int cmd_converge(const std::string& family, const CommonOptions& o, const std::vector<unsigned>& ns, unsigned digits) {
    if (ns.empty()) throw UsageError("--n needs at least one value");
    RunManifest m{"converge " + family, json::object(), digits};
    TableOptions opt;
    opt.ctx.working_digits = digits;
    opt.threads = o.threads;
    const PrecisionContext& ctx = opt.ctx;
    m.params["n"] = ns;

    std::optional<AsymptoticConstants> k;
    BigFloat reference(ctx.bits());
    std::vector<ConvergenceRow> rows;
    std::vector<GrowthRow> growth;

    auto quotient = [&](const BigRational& a1, const BigRational& a2, const BigRational& b) {
        m.params["a1"] = a1.str();
        m.params["a2"] = a2.str();
        m.params["b"] = b.str();
        ApproxParams params(a1, a2, b);
        if (params.integer_difference())
            throw UsageError("a1 - a2 is an integer; the Gamma quotient asymptotics do not apply");
        k = constants(a1, a2, b, ctx);
        reference = abs(k->ratio);
        rows = gamma_quotient_table(a1, a2, b, ns, opt);
    };

    if (family == "gamma-quotient") {
        quotient(required_rational("a1", o.a1, family), required_rational("a2", o.a2, family), scale_b(o));
    } else if (family == "cor1" || family == "cor2" || family == "cor3") {
        SpecialFamily c = family == "cor1" ? SpecialFamily::cor1 : family == "cor2" ? SpecialFamily::cor2 : SpecialFamily::cor3;
        std::optional<BigRational> a;
        if (c == SpecialFamily::cor3) a = required_rational("a", o.a, family);
        ApproxParams p = family_params(c, a);
        quotient(p.a1(), p.a2(), p.b());
    } else if (family == "psi" || family == "euler") {
        BigRational a(0), b(1);
        if (family == "psi") {
            a = required_rational("a", o.a, family);
            b = scale_b(o);
            detail::require_psi_domain(a, b);
            m.params["a"] = a.str();
            m.params["b"] = b.str();
        }
        k = constants(a, a, b, ctx);
        reference = BigFloat::from(2, ctx.bits()) * pi(ctx);
        rows = family == "psi" ? psi_table(a, b, ns, opt) : euler_table(ns, opt);
    } else {
        BigRational a1 = required_rational("a1", o.a1, family), a2 = required_rational("a2", o.a2, family);
        BigRational b = scale_b(o);
        m.params["a1"] = a1.str();
        m.params["a2"] = a2.str();
        m.params["b"] = b.str();
        k = constants(a1, a2, b, ctx);
        reference = k->c2;
        growth = qn_growth_table(a1, a2, b, ns, opt);
    }

    json consts = io::to_json(*k, digits);
    consts["reference"] = io::decimal(reference, digits);
    if (o.format == "csv") {
        std::string body = "# constants " + consts.dump() + "\r\n";
        body += family == "growth" ? io::to_csv(growth, digits) : io::to_csv(rows);
        emit(render_csv(m, body), o.output);
    } else {
        json payload;
        payload["family"] = family;
        payload["constants"] = consts;
        payload["rows"] = family == "growth" ? io::to_json(growth, digits) : io::to_json(rows);
        emit(render_json(m, payload), o.output);
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational approximations to Gamma quotients, psi values and Euler's constant"};
    app.set_version_flag("--version", GAMMAQ_VERSION);
    app.require_subcommand(1);

    CommonOptions gen_opts, verify_opts, conv_opts;

    std::string gen_family;
    unsigned gen_n_max = 10;
    auto* gen = app.add_subcommand("gen", "emit exact p_n, q_n for 0 <= n <= n-max");
    gen->add_option("family", gen_family)->required()->check(
        CLI::IsMember({"gamma-quotient", "psi", "euler", "cor1", "cor2", "cor3"}));
    gen->add_option("--n-max", gen_n_max, "largest index");
    gen->add_option("--format", gen_opts.format)->check(CLI::IsMember({"csv", "json"}));
    add_parameter_flags(gen, gen_opts);

    std::string suite, which = "all", spec_path;
    std::optional<unsigned> verify_n_max, verify_n;
    unsigned verify_digits = 30, cap = kSymbolicDegreeCap;
    auto* verify = app.add_subcommand("verify", "check identities exactly (numerically for orthogonality)");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(
        {"recurrences", "integrality", "lemma1", "eq13", "euler-remainder", "orthogonality", "divisibility", "theorem2"}));
    verify->add_option("--n-max", verify_n_max, "largest index checked");
    verify->add_option("--n", verify_n, "degree index for orthogonality (default 2)");
    verify->add_option("--precision", verify_digits, "decimal digits for numeric suites")->check(CLI::Range(1u, 100000u));
    verify->add_option("--which", which, "recurrence to check")
        ->check(CLI::IsMember({"all", "aptekarev", "cor1", "cor2", "cor3"}));
    verify->add_option("--spec", spec_path, "recurrence JSON to check in place of the built-in one");
    verify->add_option("--symbolic-cap", cap, "largest n accepted by the symbolic suites");
    add_parameter_flags(verify, verify_opts);

    std::string conv_family;
    std::vector<unsigned> conv_ns;
    unsigned conv_digits = 30;
    auto* converge = app.add_subcommand("converge", "tabulate errors and growth against the asymptotic constants");
    converge->add_option("family", conv_family)->required()->check(
        CLI::IsMember({"gamma-quotient", "psi", "euler", "cor1", "cor2", "cor3", "growth"}));
    converge->add_option("--n", conv_ns, "comma-separated strictly increasing indices")->required()->delimiter(',');
    converge->add_option("--precision", conv_digits, "significant digits of the error columns")
        ->check(CLI::Range(10u, 100000u));
    converge->add_option("--format", conv_opts.format)->check(CLI::IsMember({"csv", "json"}));
    add_parameter_flags(converge, conv_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_opts, gen_n_max);
        if (verify->parsed()) return cmd_verify(suite, verify_opts, verify_n_max, verify_n, verify_digits, which, spec_path,
                                                cap);
        return cmd_converge(conv_family, conv_opts, conv_ns, conv_digits);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const precision_error& e) {
        std::cerr << "error: precision request cannot be met: " << e.what() << "\n";
        return kExitUsage;
    } catch (const algebra_error& e) {
        std::cerr << "identity violated: " << e.what() << "\n";
        return kExitViolation;
    } catch (const recurrence_error& e) {
        std::cerr << "identity violated: " << e.what() << "\n";
        return kExitViolation;
    }
}
