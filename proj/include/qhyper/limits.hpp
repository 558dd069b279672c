#ifndef QHYPER_LIMITS_HPP
#define QHYPER_LIMITS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qhyper/identities.hpp>
#include <qhyper/rational.hpp>
#include <qhyper/real.hpp>

namespace qhyper
{

/// Which product formula is followed to q = 1.
/**
 * watson_2_11: the a,-a;a^2 product with (a,b,z) -> (q^alpha, q^beta, (1-q)z/2),
 * compared with 1F1[a;2a;z] 1F1[b;2b;-z] = 2F3[...; z^2/4].
 * whipple_2_08: the a,q/a;-q product with (a,b,z) -> (q^alpha, q^beta, 2z/(1-q)),
 * compared with the formal 2F0 product = 4F1 pieces.
 */
enum class LimitTarget { watson_2_11, whipple_2_08 };

std::string_view to_string(LimitTarget target) noexcept;

struct LimitSpec {
    LimitTarget target = LimitTarget::watson_2_11;
    Rational alpha{1};
    Rational beta{1};
    std::size_t max_coeff = 6;
    /// Strictly increasing, inside (0, 1).
    std::vector<Rational> q_sequence;
    double tolerance = 1e-4;
    /// Working precision in significant decimal digits, at least 50.
    unsigned precision_digits = 50;
};

/// q = 1 - 2^-k for k = 4..12, coefficients 0..6, tolerance 1e-4, 50 digits.
LimitSpec default_limit_spec(LimitTarget target, const Rational &alpha, const Rational &beta);

struct LimitReport {
    LimitTarget target = LimitTarget::watson_2_11;
    Rational alpha;
    Rational beta;
    std::vector<Rational> q_sequence;
    double tolerance = 0;
    /// errors[n][i] = |c_n(q_i) - c_n classical|; values under the noise floor are reported as 0.
    std::vector<std::vector<double>> errors;
    /// Largest change in any q-side coefficient when the precision is doubled.
    double precision_drift = 0;
    Status status = Status::error;
    std::optional<std::string> detail;

    bool passed() const noexcept
    {
        return status == Status::pass;
    }
};

/// Coefficients c_0..c_max of the rescaled q-side product at one q, in working precision.
std::vector<Real> q_side_coefficients(LimitTarget target, const Rational &alpha, const Rational &beta,
                                      const Rational &q, std::size_t max_coeff, unsigned precision_digits);

/// Exact classical-side coefficients c_0..c_max.
TruncatedSeries classical_coefficients(LimitTarget target, const Rational &alpha, const Rational &beta,
                                       std::size_t max_coeff);

/// Pass iff every coefficient's error is non-increasing over the last three q
/// values and the error at the last q is within tolerance.
/// Throws ConfigError on a malformed spec, PrecisionError if doubling the
/// precision moves a q-side coefficient by more than tolerance * 1e-6.
LimitReport limit_check(const LimitSpec &spec);

} // namespace qhyper

#endif
