#ifndef QHYPER_HYPER_HPP
#define QHYPER_HYPER_HPP

#include <cstddef>
#include <vector>

#include <qhyper/monomial.hpp>
#include <qhyper/param_point.hpp>
#include <qhyper/rational.hpp>
#include <qhyper/series.hpp>

namespace qhyper
{

/// One q-shifted factorial (argument; q^step)_k inside a series term.
/**
 * A parameter whose step is twice the series base stands for a contracted
 * pair: (x;p)_k (-x;p)_k = (x^2;p^2)_k. It counts as two parameters when
 * deciding whether the series is balanced (r = s + 1).
 */
struct PochParam {
    Monomial argument;
    int step = 1;

    friend bool operator==(const PochParam &, const PochParam &) = default;
};

/// Basic hypergeometric series r phi s in base q^base_step with argument argument_scalar * z^argument_power.
/**
 * Term k is
 *   prod (num; q^step)_k / [prod (den; q^step)_k (q^b; q^b)_k]
 *     * [(-1)^k q^(b k(k-1)/2)]^(1+s-r) * argument_scalar^k
 * and sits at z^(argument_power k).
 */
struct PhiSpec {
    std::vector<PochParam> numerator;
    std::vector<PochParam> denominator;
    int base_step = 1;
    Monomial argument_scalar;
    int argument_power = 1;

    /// Plain spec: every parameter in the series base.
    static PhiSpec make(const std::vector<Monomial> &numer, const std::vector<Monomial> &denom, int base_step = 1,
                        Monomial argument_scalar = Monomial(), int argument_power = 1);

    PhiSpec &add_numerator(Monomial argument, int step);
    PhiSpec &add_denominator(Monomial argument, int step);
    /// Adds (x; q^b)_k (-x; q^b)_k contracted to (x^2; q^{2b})_k.
    PhiSpec &add_numerator_pair(const Monomial &x);
    PhiSpec &add_denominator_pair(const Monomial &x);

    /// 1 + s - r counted in original (uncontracted) parameters.
    int balance_exponent() const;
};

/// Coefficients up to z^N, built by the term-ratio recurrence. PoleError names the offending k.
TruncatedSeries phi_series(const PhiSpec &spec, const ParamPoint &p, std::size_t N);

/// Sum of terms k = 0..termination_index with the argument evaluated (z = 1).
Rational phi_terminating_value(const PhiSpec &spec, const ParamPoint &p, std::size_t termination_index);

/// Classical p F q with rising factorials; argument argument_scalar * z^argument_power.
struct FSpec {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator;
    Rational argument_scalar{1};
    int argument_power = 1;
};

/// Formal coefficients up to z^N. PoleError if a denominator rising factorial vanishes.
TruncatedSeries f_series(const FSpec &spec, std::size_t N);

/// sum_j (q^{2-j}/ab, a q^{1-j}/b; q^2)_j / (q^2;q^2)_j q^{j(j-1)/2} b^j z^j up to z^N.
TruncatedSeries thm4_middle_series(const ParamPoint &p, std::size_t N);

} // namespace qhyper

#endif
