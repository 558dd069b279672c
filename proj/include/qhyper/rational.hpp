#ifndef QHYPER_RATIONAL_HPP
#define QHYPER_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qhyper
{

/// Exact arbitrary-precision rational number.
/**
 * Thin value wrapper around GMP's mpq_class. Every constructor and every
 * arithmetic operation leaves the value canonical: lowest terms, positive
 * denominator. Division by zero throws std::domain_error.
 */
class Rational
{
public:
    Rational() = default;
    Rational(long value) : m_value(value) {}
    Rational(int value) : m_value(value) {}
    Rational(long num, long den);
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(const mpq_class &value);

    /// Parses "p/q" or "p" (optional leading sign, decimal digits only).
    static Rational parse(std::string_view text);

    mpz_class numerator() const
    {
        return m_value.get_num();
    }
    mpz_class denominator() const
    {
        return m_value.get_den();
    }
    const mpq_class &get_mpq() const noexcept
    {
        return m_value;
    }

    bool is_zero() const noexcept
    {
        return sgn(m_value) == 0;
    }
    int sign() const noexcept
    {
        return sgn(m_value);
    }

    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational lhs, const Rational &rhs)
    {
        return lhs += rhs;
    }
    friend Rational operator-(Rational lhs, const Rational &rhs)
    {
        return lhs -= rhs;
    }
    friend Rational operator*(Rational lhs, const Rational &rhs)
    {
        return lhs *= rhs;
    }
    friend Rational operator/(Rational lhs, const Rational &rhs)
    {
        return lhs /= rhs;
    }
    Rational operator-() const;

    friend bool operator==(const Rational &lhs, const Rational &rhs)
    {
        return lhs.m_value == rhs.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs)
    {
        const int c = cmp(lhs.m_value, rhs.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(std::int64_t exponent) const;
    Rational abs() const;

    double to_double() const;
    /// Always "num/den", including integers ("3/1").
    std::string to_string() const;

private:
    mpq_class m_value;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// Exact square root when the value is the square of a rational, with nonnegative result.
std::optional<Rational> exact_sqrt(const Rational &value);

} // namespace qhyper

#endif
