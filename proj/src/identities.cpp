#include <qhyper/identities.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <qhyper/errors.hpp>
#include <qhyper/hyper.hpp>
#include <qhyper/real.hpp>
#include <qhyper/series.hpp>

namespace qhyper
{

std::string_view to_string(IdentityId id) noexcept
{
    switch (id) {
        case IdentityId::thm1:
            return "thm1";
        case IdentityId::thm2:
            return "thm2";
        case IdentityId::thm2_variant:
            return "thm2_variant";
        case IdentityId::thm3:
            return "thm3";
        case IdentityId::thm4:
            return "thm4";
        case IdentityId::srivastava:
            return "srivastava";
        case IdentityId::jackson:
            return "jackson";
        case IdentityId::gasper:
            return "gasper";
        case IdentityId::clausen:
            return "clausen";
        case IdentityId::bailey_2_11:
            return "bailey_2_11";
        case IdentityId::bailey_2_08:
            return "bailey_2_08";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) noexcept
{
    for (auto id : all_identities) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

bool is_terminating(IdentityId id) noexcept
{
    return id == IdentityId::thm1 || id == IdentityId::thm2 || id == IdentityId::thm2_variant || id == IdentityId::gasper;
}

bool is_classical(IdentityId id) noexcept
{
    return id == IdentityId::clausen || id == IdentityId::bailey_2_11 || id == IdentityId::bailey_2_08;
}

bool is_gating(IdentityId id) noexcept
{
    return id != IdentityId::thm2_variant;
}

std::vector<Symbol> required_symbols(IdentityId id)
{
    switch (id) {
        case IdentityId::thm1:
            return {Symbol::a, Symbol::c, Symbol::q};
        case IdentityId::thm2:
            return {Symbol::c, Symbol::e, Symbol::q};
        case IdentityId::thm2_variant:
            return {Symbol::a, Symbol::e, Symbol::q};
        case IdentityId::thm3:
        case IdentityId::thm4:
        case IdentityId::srivastava:
        case IdentityId::jackson:
            return {Symbol::a, Symbol::b, Symbol::q};
        case IdentityId::gasper:
            return {Symbol::b, Symbol::y, Symbol::q};
        case IdentityId::clausen:
        case IdentityId::bailey_2_11:
        case IdentityId::bailey_2_08:
            return {Symbol::a, Symbol::b};
    }
    return {};
}

std::string_view to_string(Status status) noexcept
{
    switch (status) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::error:
            return "error";
    }
    return "?";
}

namespace
{

using namespace sym;

VerificationReport make_report(IdentityId id, ParamPoint::assignment_map point, std::optional<unsigned> n,
                               std::size_t order)
{
    VerificationReport report;
    report.identity = id;
    report.point = std::move(point);
    report.n = n;
    report.order = order;
    return report;
}

// Runs body(report); exceptions become status error.
template <typename Body>
VerificationReport guarded(VerificationReport report, Body &&body)
{
    auto fail_with = [&](ErrorKind kind, const std::string &what) {
        report.status = Status::error;
        report.error_kind = kind;
        report.first_discrepancy.reset();
        report.detail = what;
    };
    try {
        body(report);
    } catch (const PoleError &err) {
        fail_with(ErrorKind::pole, std::string("pole: ") + err.what());
    } catch (const IrreducibleError &err) {
        fail_with(ErrorKind::irreducible, std::string("irreducible: ") + err.what());
    } catch (const ConfigError &err) {
        fail_with(ErrorKind::config, std::string("configuration: ") + err.what());
    } catch (const std::exception &err) {
        fail_with(ErrorKind::other, err.what());
    }
    return report;
}

void compare_values(VerificationReport &report, const Rational &lhs, const Rational &rhs)
{
    report.checked_orders = 1;
    if (lhs == rhs) {
        report.status = Status::pass;
    } else {
        report.status = Status::fail;
        report.first_discrepancy = Discrepancy{0, lhs, rhs};
    }
}

// Returns false (and fills the report) on the first mismatching coefficient.
bool compare_series(VerificationReport &report, const TruncatedSeries &lhs, const TruncatedSeries &rhs, std::size_t N,
                    std::string_view label = {})
{
    if (lhs.order() < N || rhs.order() < N) {
        throw std::logic_error("series shorter than requested comparison order");
    }
    report.checked_orders = N + 1;
    if (const auto idx = first_difference(lhs, rhs, N)) {
        report.status = Status::fail;
        report.first_discrepancy = Discrepancy{*idx, lhs[*idx], rhs[*idx]};
        if (!label.empty()) {
            report.detail = std::string(label);
        }
        return false;
    }
    report.status = Status::pass;
    return true;
}

// Exact integer k with q^k == value, searched over |k| <= 64.
std::optional<int> as_q_power(const Rational &value, const Rational &q)
{
    for (int k = -64; k <= 64; ++k) {
        if (q.pow(k) == value) {
            return k;
        }
    }
    return std::nullopt;
}

// Infinite product prod_{k>=0} (1 - x base^k), truncated once |x base^k| < 10^-digits.
Real numeric_infinite_product(const Rational &x, const Rational &base, unsigned digits)
{
    const auto bits = Real::bits_for_digits(digits + 20);
    const Real threshold = Real(1, bits) / Real(10, bits).pow(static_cast<long>(digits));
    Real product(1, bits);
    Real term(x, bits);
    const Real multiplier(base, bits);
    for (int k = 0; k < 1'000'000 && term.abs() >= threshold; ++k) {
        product *= Real(1, bits) - term;
        term *= multiplier;
    }
    return product;
}

Rational half_power_prefactor(unsigned n, const ParamPoint &p)
{
    // a^(n/2)
    if (p.has(Symbol::r)) {
        return p.value(Symbol::r).pow(n);
    }
    if (n % 2 == 0) {
        return p.value(Symbol::a).pow(n / 2);
    }
    throw ConfigError("odd n needs the root r of a = r^2");
}

} // namespace

TerminatingSides thm1_sides(unsigned n, const ParamPoint &p)
{
    const int ni = static_cast<int>(n);
    // b = q^-n; (abq)^(1/2) and c^(1/2) pairs contracted into base q^2.
    PhiSpec lhs_spec = PhiSpec::make({a(), q(-ni)}, {c()}, 1, q());
    lhs_spec.add_numerator(c(), 2).add_denominator(a() * q(1 - ni), 2);
    const auto lhs = phi_terminating_value(lhs_spec, p, n);

    auto reduced = reduce_poch_quotient(
        {PochFactor::infinite(a() * q(), 2), PochFactor::infinite(q(1 - ni), 2), PochFactor::infinite(c() * q() / a(), 2),
         PochFactor::infinite(c() * q(1 + ni), 2)},
        {PochFactor::infinite(q(), 2), PochFactor::infinite(a() * q(1 - ni), 2), PochFactor::infinite(c() * q(), 2),
         PochFactor::infinite(c() * q(1 + ni) / a(), 2)});
    Rational rhs(0);
    if (!reduced.zero) {
        rhs = half_power_prefactor(n, p) * eval_reduced(reduced, p);
    }
    return {lhs, rhs, std::move(reduced)};
}

TerminatingSides thm2_sides(unsigned n, const ParamPoint &p)
{
    const int ni = static_cast<int>(n);
    // a = q^-n; c^(1/2) pair contracted.
    PhiSpec lhs_spec = PhiSpec::make({q(-ni), q(1 + ni)}, {-q(), e(), c() * q() / e()}, 1, q());
    lhs_spec.add_numerator(c(), 2);
    const auto lhs = phi_terminating_value(lhs_spec, p, n);

    auto reduced = reduce_poch_quotient({PochFactor::infinite(e() * q(-ni), 2), PochFactor::infinite(e() * q(1 + ni), 2),
                                         PochFactor::infinite(c() * q(1 - ni) / e(), 2),
                                         PochFactor::infinite(c() * q(2 + ni) / e(), 2)},
                                        {PochFactor::infinite(e(), 1), PochFactor::infinite(c() * q() / e(), 1)});
    const auto prefactor = p.q().pow(static_cast<std::int64_t>(n) * (n + 1) / 2);
    const auto rhs = prefactor * eval_reduced(reduced, p);
    return {lhs, rhs, std::move(reduced)};
}

namespace
{

struct variant_parts {
    PhiSpec lhs_spec;
    std::vector<PochFactor> numer;
    std::vector<PochFactor> denom;
};

// c = q^-2n, c^(1/2) = q^-n; a_mono is either the symbol a or an exact q-power.
variant_parts thm2_variant_parts(unsigned n, const Monomial &a_mono)
{
    const int ni = static_cast<int>(n);
    const auto cc = q(-2 * ni);
    variant_parts parts{PhiSpec::make({a_mono, q() / a_mono}, {-q(), e(), cc * q() / e()}, 1, q()), {}, {}};
    parts.lhs_spec.add_numerator(cc, 2);
    parts.numer = {PochFactor::infinite(e() * a_mono, 2), PochFactor::infinite(e() * q() / a_mono, 2),
                   PochFactor::infinite(cc * a_mono * q() / e(), 2),
                   PochFactor::infinite(cc * q(2) / (a_mono * e()), 2)};
    parts.denom = {PochFactor::infinite(e(), 1), PochFactor::infinite(cc * q() / e(), 1)};
    return parts;
}

Monomial variant_a_monomial(const ParamPoint &p)
{
    if (const auto k = as_q_power(p.value(Symbol::a), p.q())) {
        return q(*k);
    }
    return a();
}

} // namespace

TerminatingSides thm2_variant_sides(unsigned n, const ParamPoint &p)
{
    const auto parts = thm2_variant_parts(n, variant_a_monomial(p));
    const auto lhs = phi_terminating_value(parts.lhs_spec, p, n);
    auto reduced = reduce_poch_quotient(parts.numer, parts.denom);
    const auto prefactor = p.q().pow(static_cast<std::int64_t>(n) * (n + 1) / 2);
    const auto rhs = prefactor * eval_reduced(reduced, p);
    return {lhs, rhs, std::move(reduced)};
}

TerminatingSides gasper_sides(unsigned n, const ParamPoint &p)
{
    const int ni = static_cast<int>(n);
    const auto aa = q(-ni); // a = q^-n
    // (ab q^(1/2), -ab q^(1/2); q)_k = (a^2 b^2 q; q^2)_k
    PhiSpec four = PhiSpec::make({aa, b(), aa * b() * y(), aa * b() / y()}, {-aa * b()}, 1, q());
    four.add_denominator(aa.pow(2) * b(2) * q(), 2);
    PhiSpec five = PhiSpec::make({aa.pow(2), b(2), aa * b(), aa * b() * y(), aa * b() / y()},
                                 {aa.pow(2) * b(2), -aa * b()}, 1, q());
    five.add_denominator(aa.pow(2) * b(2) * q(), 2);

    const auto root = phi_terminating_value(four, p, n);
    const auto rhs = phi_terminating_value(five, p, 2 * n);
    return {root * root, rhs, std::nullopt};
}

VerificationReport check_thm1(unsigned n, const ParamPoint &p)
{
    return guarded(make_report(IdentityId::thm1, p.values(), n, 0), [&](VerificationReport &r) {
        const auto sides = thm1_sides(n, p);
        compare_values(r, sides.lhs, sides.rhs);
    });
}

VerificationReport check_thm2(unsigned n, const ParamPoint &p)
{
    return guarded(make_report(IdentityId::thm2, p.values(), n, 0), [&](VerificationReport &r) {
        const auto sides = thm2_sides(n, p);
        compare_values(r, sides.lhs, sides.rhs);
    });
}

VerificationReport check_thm2_variant(unsigned n, const ParamPoint &p)
{
    return guarded(make_report(IdentityId::thm2_variant, p.values(), n, 0), [&](VerificationReport &r) {
        const auto a_mono = variant_a_monomial(p);
        const auto parts = thm2_variant_parts(n, a_mono);
        const auto lhs = phi_terminating_value(parts.lhs_spec, p, n);
        const auto prefactor = p.q().pow(static_cast<std::int64_t>(n) * (n + 1) / 2);
        try {
            const auto rhs = prefactor * eval_reduced(reduce_poch_quotient(parts.numer, parts.denom), p);
            compare_values(r, lhs, rhs);
            if (r.status == Status::fail) {
                r.detail = "variant reducible at this point but sides differ";
            }
        } catch (const IrreducibleError &err) {
            // Record the literal right side numerically for inspection.
            constexpr unsigned digits = 40;
            const auto bits = Real::bits_for_digits(digits);
            Real rhs(prefactor, bits);
            for (const auto &f : parts.numer) {
                rhs *= numeric_infinite_product(eval_monomial(f.argument, p), p.q().pow(f.step), digits);
            }
            for (const auto &f : parts.denom) {
                rhs /= numeric_infinite_product(eval_monomial(f.argument, p), p.q().pow(f.step), digits);
            }
            const auto gap = (Real(lhs, bits) - rhs).abs();
            r.status = Status::error;
            r.error_kind = ErrorKind::irreducible;
            r.checked_orders = 1;
            r.detail = std::string("irreducible: ") + err.what() + "; lhs=" + lhs.to_string()
                       + " rhs~" + rhs.to_string(25) + " |lhs-rhs|~" + gap.to_string(5);
        }
    });
}

VerificationReport check_thm3(const ParamPoint &p, std::size_t N)
{
    return guarded(make_report(IdentityId::thm3, p.values(), std::nullopt, N), [&](VerificationReport &r) {
        // (x;q)_k(-x;q)_k = (x^2;q^2)_k
        auto factor = [&](const Monomial &x) {
            PhiSpec spec = PhiSpec::make({}, {x.pow(2)}, 1);
            spec.add_numerator_pair(x);
            return phi_series(spec, p, N);
        };
        const auto lhs = mul(factor(a()), scale_arg(factor(b()), Rational(-1)));
        const auto ab = a() * b();
        const auto rhs_spec = PhiSpec::make({ab, -ab, ab * q(), -ab * q()}, {a(2) * q(), b(2) * q(), ab.pow(2)}, 2);
        const auto rhs = embed_in_square(phi_series(rhs_spec, p, N / 2));
        compare_series(r, lhs, rhs, N);
    });
}

VerificationReport check_thm4(const ParamPoint &p, std::size_t N)
{
    return guarded(make_report(IdentityId::thm4, p.values(), std::nullopt, N), [&](VerificationReport &r) {
        auto factor = [&](const Monomial &x) { return phi_series(PhiSpec::make({x, q() / x}, {-q()}, 1), p, N); };
        const auto lhs = mul(factor(a()), scale_arg(factor(b()), Rational(-1)));
        const auto middle = thm4_middle_series(p, N);

        const auto ab = a() * b();
        const auto even_spec =
            PhiSpec::make({ab, q(2) / ab, a() * q() / b(), b() * q() / a()}, {-q(2), q(), -q()}, 2);
        const auto odd_spec = PhiSpec::make({ab * q(), q(3) / ab, a() * q(2) / b(), b() * q(2) / a()},
                                            {-q(2), q(3), -q(3)}, 2);
        const auto &av = p.value(Symbol::a);
        const auto &bv = p.value(Symbol::b);
        const auto &qv = p.q();
        const auto prefactor = -(av - bv) * (Rational(1) - qv / (av * bv)) / (Rational(1) - qv * qv);
        const auto even_rhs = embed_in_square(phi_series(even_spec, p, N / 2));
        const auto odd_rhs =
            mul(TruncatedSeries::monomial(1, N, prefactor), embed_in_square(phi_series(odd_spec, p, N / 2)));

        if (!compare_series(r, lhs, middle, N, "product vs middle sum")) {
            return;
        }
        if (!compare_series(r, even_part(middle), even_rhs, N, "even part vs first 4phi3")) {
            return;
        }
        compare_series(r, odd_part(middle), odd_rhs, N, "odd part vs prefactor * z * second 4phi3");
    });
}

VerificationReport check_srivastava(const ParamPoint &p, std::size_t N)
{
    return guarded(make_report(IdentityId::srivastava, p.values(), std::nullopt, N), [&](VerificationReport &r) {
        const auto ab = a() * b();
        const auto factor = phi_series(PhiSpec::make({a(), b()}, {-ab}, 1), p, N);
        const auto lhs = mul(factor, scale_arg(factor, Rational(-1)));
        const auto rhs_spec = PhiSpec::make({a(2), b(2), ab, ab * q()}, {ab.pow(2), -ab, -ab * q()}, 2);
        const auto rhs = embed_in_square(phi_series(rhs_spec, p, N / 2));
        compare_series(r, lhs, rhs, N);
    });
}

VerificationReport check_jackson(const ParamPoint &p, std::size_t N)
{
    return guarded(make_report(IdentityId::jackson, p.values(), std::nullopt, N), [&](VerificationReport &r) {
        const auto ab = a() * b();
        const auto left = phi_series(PhiSpec::make({a(2), b(2)}, {ab.pow(2) * q()}, 2), p, N);
        const auto right = phi_series(PhiSpec::make({a(2), b(2)}, {ab.pow(2) * q()}, 2, q()), p, N);
        // (ab;q)(-ab;q) = (a^2b^2;q^2), (abq^(1/2);q)(-abq^(1/2);q) = (a^2b^2q;q^2)
        PhiSpec rhs_spec = PhiSpec::make({a(2), b(2)}, {ab.pow(2)}, 1);
        rhs_spec.add_numerator(ab.pow(2), 2).add_denominator(ab.pow(2) * q(), 2);
        compare_series(r, mul(left, right), phi_series(rhs_spec, p, N), N);
    });
}

VerificationReport check_gasper(unsigned n, const ParamPoint &p)
{
    return guarded(make_report(IdentityId::gasper, p.values(), n, 0), [&](VerificationReport &r) {
        const auto sides = gasper_sides(n, p);
        compare_values(r, sides.lhs, sides.rhs);
    });
}

namespace
{

ParamPoint::assignment_map classical_point(const Rational &a, const Rational &b)
{
    return {{Symbol::a, a}, {Symbol::b, b}};
}

} // namespace

VerificationReport check_clausen(const Rational &a, const Rational &b, std::size_t N)
{
    return guarded(make_report(IdentityId::clausen, classical_point(a, b), std::nullopt, N), [&](VerificationReport &r) {
        const Rational half(1, 2);
        const auto f = f_series({{a, b}, {a + b + half}}, N);
        const auto rhs = f_series({{2 * a, 2 * b, a + b}, {2 * a + 2 * b, a + b + half}}, N);
        compare_series(r, mul(f, f), rhs, N);
    });
}

TruncatedSeries bailey_2_11_rhs(const Rational &a, const Rational &b, std::size_t N)
{
    const Rational half(1, 2);
    return f_series({{(a + b) * half, (a + b + 1) * half}, {a + half, b + half, a + b}, Rational(1, 4), 2}, N);
}

TruncatedSeries bailey_2_08_rhs(const Rational &a, const Rational &b, std::size_t N)
{
    const Rational half(1, 2);
    const auto even = f_series(
        {{(1 + a - b) * half, (1 - a + b) * half, (a + b) * half, (2 - a - b) * half}, {half}, Rational(4), 2}, N);
    const auto odd = f_series(
        {{(2 + a - b) * half, (2 - a + b) * half, (1 + a + b) * half, (3 - a - b) * half}, {Rational(3, 2)}, Rational(4), 2},
        N);
    const auto prefactor = -(a - b) * (a + b - 1);
    return add(even, mul(TruncatedSeries::monomial(1, N, prefactor), odd));
}

VerificationReport check_bailey_2_11(const Rational &a, const Rational &b, std::size_t N)
{
    return guarded(make_report(IdentityId::bailey_2_11, classical_point(a, b), std::nullopt, N),
                   [&](VerificationReport &r) {
                       const auto lhs = mul(f_series({{a}, {2 * a}}, N), f_series({{b}, {2 * b}, Rational(-1)}, N));
                       compare_series(r, lhs, bailey_2_11_rhs(a, b, N), N);
                   });
}

VerificationReport check_bailey_2_08(const Rational &a, const Rational &b, std::size_t N)
{
    return guarded(make_report(IdentityId::bailey_2_08, classical_point(a, b), std::nullopt, N),
                   [&](VerificationReport &r) {
                       const Rational one(1);
                       const auto lhs =
                           mul(f_series({{a, one - a}, {}}, N), f_series({{b, one - b}, {}, Rational(-1)}, N));
                       compare_series(r, lhs, bailey_2_08_rhs(a, b, N), N);
                   });
}

VerificationReport run_case(const IdentityCase &c)
{
    const auto n = c.n.value_or(0);
    if (is_terminating(c.identity) && !c.n) {
        auto report = make_report(c.identity, c.point, c.n, c.order);
        report.error_kind = ErrorKind::config;
        report.detail = "terminating identity needs n";
        return report;
    }
    if (is_classical(c.identity)) {
        const auto get = [&](Symbol s) -> std::optional<Rational> {
            const auto it = c.point.find(s);
            return it == c.point.end() ? std::nullopt : std::optional<Rational>(it->second);
        };
        const auto a = get(Symbol::a);
        const auto b = get(Symbol::b);
        if (!a || !b) {
            auto report = make_report(c.identity, c.point, std::nullopt, c.order);
            report.error_kind = ErrorKind::config;
            report.detail = "classical identity needs a and b";
            return report;
        }
        switch (c.identity) {
            case IdentityId::clausen:
                return check_clausen(*a, *b, c.order);
            case IdentityId::bailey_2_11:
                return check_bailey_2_11(*a, *b, c.order);
            default:
                return check_bailey_2_08(*a, *b, c.order);
        }
    }
    std::optional<ParamPoint> point;
    try {
        point.emplace(c.point);
    } catch (const std::exception &err) {
        auto report = make_report(c.identity, c.point, c.n, c.order);
        report.error_kind = ErrorKind::config;
        report.detail = std::string("configuration: ") + err.what();
        return report;
    }
    switch (c.identity) {
        case IdentityId::thm1:
            return check_thm1(n, *point);
        case IdentityId::thm2:
            return check_thm2(n, *point);
        case IdentityId::thm2_variant:
            return check_thm2_variant(n, *point);
        case IdentityId::thm3:
            return check_thm3(*point, c.order);
        case IdentityId::thm4:
            return check_thm4(*point, c.order);
        case IdentityId::srivastava:
            return check_srivastava(*point, c.order);
        case IdentityId::jackson:
            return check_jackson(*point, c.order);
        case IdentityId::gasper:
            return check_gasper(n, *point);
        default:
            break;
    }
    return make_report(c.identity, c.point, c.n, c.order);
}

std::vector<VerificationReport> run_suite(const std::vector<IdentityCase> &cases, unsigned threads)
{
    std::vector<VerificationReport> reports(cases.size());
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            reports[i] = run_case(cases[i]);
        }
    };
    if (threads <= 1) {
        worker();
        return reports;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();
    return reports;
}

} // namespace qhyper
