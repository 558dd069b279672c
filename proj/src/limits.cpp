#include <qhyper/limits.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <qhyper/errors.hpp>
#include <qhyper/hyper.hpp>

namespace qhyper
{

std::string_view to_string(LimitTarget target) noexcept
{
    switch (target) {
        case LimitTarget::watson_2_11:
            return "watson_2_11";
        case LimitTarget::whipple_2_08:
            return "whipple_2_08";
    }
    return "?";
}

LimitSpec default_limit_spec(LimitTarget target, const Rational &alpha, const Rational &beta)
{
    LimitSpec spec;
    spec.target = target;
    spec.alpha = alpha;
    spec.beta = beta;
    for (long k = 4; k <= 12; ++k) {
        spec.q_sequence.push_back(Rational(1) - Rational(1, 1L << k));
    }
    return spec;
}

namespace
{

// One 2phi1 factor of the q-side product, coefficients 0..N.
std::vector<Real> q_factor(LimitTarget target, const Real &x, const Real &q, std::size_t N)
{
    const auto bits = q.precision();
    const Real one(1, bits);
    std::vector<Real> coeffs;
    coeffs.reserve(N + 1);
    Real term = one;
    Real qk = one; // q^k
    coeffs.push_back(term);
    for (std::size_t k = 0; k < N; ++k) {
        const Real xqk = x * qk;
        const Real qk1 = qk * q;
        if (target == LimitTarget::watson_2_11) {
            // [x, -x; x^2; q]
            term *= (one - xqk) * (one + xqk) / ((one - x * xqk) * (one - qk1));
        } else {
            // [x, q/x; -q; q]
            term *= (one - xqk) * (one - qk1 / x) / ((one + qk1) * (one - qk1));
        }
        coeffs.push_back(term);
        qk = qk1;
    }
    return coeffs;
}

void validate(const LimitSpec &spec)
{
    if (spec.q_sequence.empty()) {
        throw ConfigError("limit check needs at least one q value");
    }
    for (std::size_t i = 0; i < spec.q_sequence.size(); ++i) {
        const auto &q = spec.q_sequence[i];
        if (q.sign() <= 0 || q >= Rational(1)) {
            throw ConfigError("q values must lie in (0,1), got " + q.to_string());
        }
        if (i > 0 && !(spec.q_sequence[i - 1] < q)) {
            throw ConfigError("q sequence must be strictly increasing");
        }
    }
    if (!(spec.tolerance > 0)) {
        throw ConfigError("tolerance must be positive");
    }
    if (spec.precision_digits < 50) {
        throw ConfigError("working precision must be at least 50 digits");
    }
}

} // namespace

std::vector<Real> q_side_coefficients(LimitTarget target, const Rational &alpha, const Rational &beta,
                                      const Rational &q, std::size_t max_coeff, unsigned precision_digits)
{
    const auto bits = Real::bits_for_digits(precision_digits);
    const Real qr(q, bits);
    const Real one(1, bits);
    const auto first = q_factor(target, qr.pow(Real(alpha, bits)), qr, max_coeff);
    const auto second = q_factor(target, qr.pow(Real(beta, bits)), qr, max_coeff);
    const Real z_scale = target == LimitTarget::watson_2_11 ? (one - qr) / Real(2, bits) : Real(2, bits) / (one - qr);

    std::vector<Real> out;
    out.reserve(max_coeff + 1);
    Real scale = one;
    for (std::size_t n = 0; n <= max_coeff; ++n) {
        Real sum(bits);
        for (std::size_t i = 0; i <= n; ++i) {
            // second factor has argument -z
            const auto term = first[i] * second[n - i];
            if ((n - i) % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        out.push_back(sum * scale);
        scale *= z_scale;
    }
    return out;
}

TruncatedSeries classical_coefficients(LimitTarget target, const Rational &alpha, const Rational &beta,
                                       std::size_t max_coeff)
{
    return target == LimitTarget::watson_2_11 ? bailey_2_11_rhs(alpha, beta, max_coeff)
                                              : bailey_2_08_rhs(alpha, beta, max_coeff);
}

LimitReport limit_check(const LimitSpec &spec)
{
    validate(spec);
    const auto digits = spec.precision_digits;
    const auto bits = Real::bits_for_digits(digits);
    const auto classical = classical_coefficients(spec.target, spec.alpha, spec.beta, spec.max_coeff);
    const double noise_floor = std::pow(10.0, -static_cast<double>(digits) + 10.0);

    LimitReport report;
    report.target = spec.target;
    report.alpha = spec.alpha;
    report.beta = spec.beta;
    report.q_sequence = spec.q_sequence;
    report.tolerance = spec.tolerance;
    report.errors.assign(spec.max_coeff + 1, std::vector<double>(spec.q_sequence.size(), 0.0));

    for (std::size_t i = 0; i < spec.q_sequence.size(); ++i) {
        const auto &q = spec.q_sequence[i];
        const auto coeffs = q_side_coefficients(spec.target, spec.alpha, spec.beta, q, spec.max_coeff, digits);
        const auto refined = q_side_coefficients(spec.target, spec.alpha, spec.beta, q, spec.max_coeff, 2 * digits);
        for (std::size_t n = 0; n <= spec.max_coeff; ++n) {
            const double drift = (coeffs[n] - refined[n]).abs().to_double();
            report.precision_drift = std::max(report.precision_drift, drift);
            const double err = (coeffs[n] - Real(classical[n], bits)).abs().to_double();
            report.errors[n][i] = err < noise_floor ? 0.0 : err;
        }
    }
    if (report.precision_drift > spec.tolerance * 1e-6) {
        throw PrecisionError("doubling precision moved a q-side coefficient by "
                             + std::to_string(report.precision_drift) + "; raise precision_digits");
    }

    report.status = Status::pass;
    const auto last = spec.q_sequence.size() - 1;
    for (std::size_t n = 0; n <= spec.max_coeff && report.status == Status::pass; ++n) {
        const auto &e = report.errors[n];
        for (std::size_t i = (last >= 2 ? last - 2 : 0); i < last; ++i) {
            if (e[i + 1] > e[i]) {
                report.status = Status::fail;
                report.detail = "coefficient " + std::to_string(n) + " error grows over the last q values";
                break;
            }
        }
        if (report.status == Status::pass && e[last] > spec.tolerance) {
            report.status = Status::fail;
            char buf[160];
            std::snprintf(buf, sizeof buf, "coefficient %zu final error %.3e exceeds tolerance %.1e", n, e[last],
                          spec.tolerance);
            report.detail = buf;
        }
    }
    return report;
}

} // namespace qhyper
