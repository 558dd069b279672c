#ifndef QHYPER_SERIES_HPP
#define QHYPER_SERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <qhyper/rational.hpp>

namespace qhyper
{

/// Power series c_0 + c_1 z + ... + c_N z^N over the rationals, truncated at order N.
/**
 * Binary operations truncate to the smaller of the two orders. Equality is
 * coefficientwise up to that common order.
 */
class TruncatedSeries
{
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order = 0);
    /// Coefficients c_0..c_N; must be nonempty.
    explicit TruncatedSeries(std::vector<Rational> coefficients);

    /// k * z^power truncated at order.
    static TruncatedSeries monomial(std::size_t power, std::size_t order, const Rational &k = Rational(1));

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }
    const Rational &operator[](std::size_t i) const
    {
        return m_coeffs.at(i);
    }
    Rational &operator[](std::size_t i)
    {
        return m_coeffs.at(i);
    }
    const std::vector<Rational> &coefficients() const noexcept
    {
        return m_coeffs;
    }

    TruncatedSeries truncated(std::size_t order) const;
    bool is_zero() const;

    /// Coefficientwise equality up to min order.
    friend bool operator==(const TruncatedSeries &lhs, const TruncatedSeries &rhs);

    std::string to_string() const;

private:
    std::vector<Rational> m_coeffs;
};

TruncatedSeries add(const TruncatedSeries &s1, const TruncatedSeries &s2);
TruncatedSeries sub(const TruncatedSeries &s1, const TruncatedSeries &s2);
/// Cauchy product truncated to min order.
TruncatedSeries mul(const TruncatedSeries &s1, const TruncatedSeries &s2);
TruncatedSeries scale(const TruncatedSeries &s, const Rational &k);
/// z -> k z: c_n becomes c_n k^n.
TruncatedSeries scale_arg(const TruncatedSeries &s, const Rational &k);
TruncatedSeries even_part(const TruncatedSeries &s);
TruncatedSeries odd_part(const TruncatedSeries &s);
/// z -> z^2: t_{2n} = s_n, odd coefficients zero, order 2N+1.
TruncatedSeries embed_in_square(const TruncatedSeries &s);

inline TruncatedSeries operator+(const TruncatedSeries &s1, const TruncatedSeries &s2)
{
    return add(s1, s2);
}
inline TruncatedSeries operator-(const TruncatedSeries &s1, const TruncatedSeries &s2)
{
    return sub(s1, s2);
}
inline TruncatedSeries operator*(const TruncatedSeries &s1, const TruncatedSeries &s2)
{
    return mul(s1, s2);
}

/// Index of the first coefficient (up to `upto`, clamped to the common order) where the series differ.
std::optional<std::size_t> first_difference(const TruncatedSeries &s1, const TruncatedSeries &s2, std::size_t upto);

} // namespace qhyper

#endif
