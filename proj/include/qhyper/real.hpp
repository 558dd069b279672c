#ifndef QHYPER_REAL_HPP
#define QHYPER_REAL_HPP

#include <compare>
#include <string>

#include <mpfr.h>

#include <qhyper/rational.hpp>

namespace qhyper
{

/// Multiprecision binary float with a per-value precision (MPFR, round to nearest).
/**
 * Results of binary operations carry the larger of the two operand
 * precisions. No global precision state is consulted.
 */
class Real
{
public:
    explicit Real(mpfr_prec_t bits = 256);
    Real(long value, mpfr_prec_t bits);
    Real(const Rational &value, mpfr_prec_t bits);
    Real(const Real &other);
    Real(Real &&other) noexcept;
    Real &operator=(const Real &other);
    Real &operator=(Real &&other) noexcept;
    ~Real();

    static mpfr_prec_t bits_for_digits(unsigned decimal_digits);

    mpfr_prec_t precision() const noexcept
    {
        return mpfr_get_prec(m_value);
    }

    Real &operator+=(const Real &other);
    Real &operator-=(const Real &other);
    Real &operator*=(const Real &other);
    Real &operator/=(const Real &other);
    friend Real operator+(Real lhs, const Real &rhs)
    {
        return lhs += rhs;
    }
    friend Real operator-(Real lhs, const Real &rhs)
    {
        return lhs -= rhs;
    }
    friend Real operator*(Real lhs, const Real &rhs)
    {
        return lhs *= rhs;
    }
    friend Real operator/(Real lhs, const Real &rhs)
    {
        return lhs /= rhs;
    }
    Real operator-() const;

    friend bool operator==(const Real &lhs, const Real &rhs)
    {
        return mpfr_equal_p(lhs.m_value, rhs.m_value) != 0;
    }
    friend std::partial_ordering operator<=>(const Real &lhs, const Real &rhs);

    Real abs() const;
    /// this^exponent for a positive base.
    Real pow(const Real &exponent) const;
    Real pow(long exponent) const;

    double to_double() const;
    /// Scientific notation with the given number of significant digits.
    std::string to_string(int digits = 20) const;

private:
    void widen_to(const Real &other);

    mpfr_t m_value;
};

} // namespace qhyper

#endif
