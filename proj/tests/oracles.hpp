// Test-only reference computations. Nothing here calls the term-ratio
// recurrence, the reducer, or the series arithmetic under test.
#ifndef QHYPER_TESTS_ORACLES_HPP
#define QHYPER_TESTS_ORACLES_HPP

#include <cstddef>
#include <random>
#include <vector>

#include <qhyper/rational.hpp>
#include <qhyper/real.hpp>

namespace oracle
{

using qhyper::Rational;
using qhyper::Real;

/// prod_{k<n} (1 - x p^k), one factor at a time.
inline Rational poch(const Rational &x, const Rational &p, std::size_t n)
{
    Rational r(1);
    for (std::size_t k = 0; k < n; ++k) {
        r *= Rational(1) - x * p.pow(static_cast<std::int64_t>(k));
    }
    return r;
}

/// Balanced (r = s+1) basic hypergeometric term k in base p, no argument factor.
inline Rational phi_term(const std::vector<Rational> &num, const std::vector<Rational> &den, const Rational &p,
                         std::size_t k)
{
    Rational t(1);
    for (const auto &x : num) {
        t *= poch(x, p, k);
    }
    for (const auto &y : den) {
        t /= poch(y, p, k);
    }
    return t / poch(p, p, k);
}

inline std::vector<Rational> phi_coeffs(const std::vector<Rational> &num, const std::vector<Rational> &den,
                                        const Rational &p, const Rational &arg, std::size_t N)
{
    std::vector<Rational> out;
    for (std::size_t k = 0; k <= N; ++k) {
        out.push_back(phi_term(num, den, p, k) * arg.pow(static_cast<std::int64_t>(k)));
    }
    return out;
}

inline Rational rising(const Rational &x, std::size_t k)
{
    Rational r(1);
    for (std::size_t i = 0; i < k; ++i) {
        r *= x + Rational(static_cast<long>(i));
    }
    return r;
}

/// Classical coefficients; term k sits at z^(power k).
inline std::vector<Rational> f_coeffs(const std::vector<Rational> &num, const std::vector<Rational> &den,
                                      const Rational &scalar, std::size_t power, std::size_t N)
{
    std::vector<Rational> out(N + 1, Rational(0));
    for (std::size_t k = 0; power * k <= N; ++k) {
        Rational t = scalar.pow(static_cast<std::int64_t>(k)) / rising(Rational(1), k);
        for (const auto &x : num) {
            t *= rising(x, k);
        }
        for (const auto &y : den) {
            t /= rising(y, k);
        }
        out[power * k] = t;
    }
    return out;
}

/// Brute-force double sum over i + j = n.
inline std::vector<Rational> convolve(const std::vector<Rational> &a, const std::vector<Rational> &b)
{
    const auto n_max = std::min(a.size(), b.size());
    std::vector<Rational> out(n_max, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i + j < n_max) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

/// First K factors of (x; p)_inf in floating point.
inline Real truncated_product(const Rational &x, const Rational &p, std::size_t K, mpfr_prec_t bits)
{
    Real out(1, bits);
    const Real one(1, bits);
    Real term(x, bits);
    const Real step(p, bits);
    for (std::size_t k = 0; k < K; ++k) {
        out *= one - term;
        term *= step;
    }
    return out;
}

/// Nonzero p/d with |p|, d <= bound.
inline Rational small_rational(std::mt19937_64 &rng, long bound)
{
    std::uniform_int_distribution<long> num(1, bound), den(1, bound), sign(0, 1);
    return Rational(sign(rng) ? num(rng) : -num(rng), den(rng));
}

} // namespace oracle

#endif
