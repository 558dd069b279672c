#include <qhyper/real.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace qhyper
{

Real::Real(mpfr_prec_t bits)
{
    mpfr_init2(m_value, bits);
    mpfr_set_zero(m_value, 1);
}

Real::Real(long value, mpfr_prec_t bits)
{
    mpfr_init2(m_value, bits);
    mpfr_set_si(m_value, value, MPFR_RNDN);
}

Real::Real(const Rational &value, mpfr_prec_t bits)
{
    mpfr_init2(m_value, bits);
    mpfr_set_q(m_value, value.get_mpq().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real &other)
{
    mpfr_init2(m_value, other.precision());
    mpfr_set(m_value, other.m_value, MPFR_RNDN);
}

Real::Real(Real &&other) noexcept
{
    // Leave the source as a valid minimal-precision zero.
    mpfr_init2(m_value, MPFR_PREC_MIN);
    mpfr_swap(m_value, other.m_value);
}

Real &Real::operator=(const Real &other)
{
    if (this != &other) {
        mpfr_set_prec(m_value, other.precision());
        mpfr_set(m_value, other.m_value, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&other) noexcept
{
    mpfr_swap(m_value, other.m_value);
    return *this;
}

Real::~Real()
{
    mpfr_clear(m_value);
}

mpfr_prec_t Real::bits_for_digits(unsigned decimal_digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.321928094887362)) + 8;
}

void Real::widen_to(const Real &other)
{
    if (other.precision() > precision()) {
        mpfr_prec_round(m_value, other.precision(), MPFR_RNDN);
    }
}

Real &Real::operator+=(const Real &other)
{
    widen_to(other);
    mpfr_add(m_value, m_value, other.m_value, MPFR_RNDN);
    return *this;
}

Real &Real::operator-=(const Real &other)
{
    widen_to(other);
    mpfr_sub(m_value, m_value, other.m_value, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(const Real &other)
{
    widen_to(other);
    mpfr_mul(m_value, m_value, other.m_value, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(const Real &other)
{
    if (mpfr_zero_p(other.m_value)) {
        throw std::domain_error("real division by zero");
    }
    widen_to(other);
    mpfr_div(m_value, m_value, other.m_value, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real out(*this);
    mpfr_neg(out.m_value, out.m_value, MPFR_RNDN);
    return out;
}

std::partial_ordering operator<=>(const Real &lhs, const Real &rhs)
{
    if (mpfr_unordered_p(lhs.m_value, rhs.m_value)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(lhs.m_value, rhs.m_value);
    return c < 0 ? std::partial_ordering::less : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real Real::abs() const
{
    Real out(*this);
    mpfr_abs(out.m_value, out.m_value, MPFR_RNDN);
    return out;
}

Real Real::pow(const Real &exponent) const
{
    if (mpfr_sgn(m_value) <= 0) {
        throw std::domain_error("real power needs a positive base");
    }
    Real out(std::max(precision(), exponent.precision()));
    mpfr_pow(out.m_value, m_value, exponent.m_value, MPFR_RNDN);
    return out;
}

Real Real::pow(long exponent) const
{
    Real out(precision());
    mpfr_pow_si(out.m_value, m_value, exponent, MPFR_RNDN);
    return out;
}

double Real::to_double() const
{
    return mpfr_get_d(m_value, MPFR_RNDN);
}

std::string Real::to_string(int digits) const
{
    char *raw = nullptr;
    if (mpfr_asprintf(&raw, "%.*Re", std::max(digits - 1, 0), m_value) < 0) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
    return std::string(raw);
}

} // namespace qhyper
