#include <qhyper/series.hpp>

#include <algorithm>
#include <stdexcept>

namespace qhyper
{

TruncatedSeries::TruncatedSeries(std::size_t order) : m_coeffs(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : m_coeffs(std::move(coefficients))
{
    if (m_coeffs.empty()) {
        throw std::invalid_argument("truncated series needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::monomial(std::size_t power, std::size_t order, const Rational &k)
{
    TruncatedSeries out(order);
    if (power <= order) {
        out.m_coeffs[power] = k;
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    std::vector<Rational> coeffs(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return TruncatedSeries(std::move(coeffs));
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Rational &c) { return c.is_zero(); });
}

bool operator==(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    return !first_difference(lhs, rhs, std::min(lhs.order(), rhs.order())).has_value();
}

std::string TruncatedSeries::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (m_coeffs[i].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + m_coeffs[i].to_string() + ")";
        if (i > 0) {
            out += "*z^" + std::to_string(i);
        }
    }
    return (out.empty() ? "0" : out) + " + O(z^" + std::to_string(order() + 1) + ")";
}

TruncatedSeries add(const TruncatedSeries &s1, const TruncatedSeries &s2)
{
    TruncatedSeries out(std::min(s1.order(), s2.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out[i] = s1[i] + s2[i];
    }
    return out;
}

TruncatedSeries sub(const TruncatedSeries &s1, const TruncatedSeries &s2)
{
    TruncatedSeries out(std::min(s1.order(), s2.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        out[i] = s1[i] - s2[i];
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries &s1, const TruncatedSeries &s2)
{
    TruncatedSeries out(std::min(s1.order(), s2.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        if (s1[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= out.order(); ++j) {
            if (!s2[j].is_zero()) {
                out[i + j] += s1[i] * s2[j];
            }
        }
    }
    return out;
}

TruncatedSeries scale(const TruncatedSeries &s, const Rational &k)
{
    TruncatedSeries out(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out[i] = s[i] * k;
    }
    return out;
}

TruncatedSeries scale_arg(const TruncatedSeries &s, const Rational &k)
{
    TruncatedSeries out(s.order());
    Rational power(1);
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out[i] = s[i] * power;
        power *= k;
    }
    return out;
}

TruncatedSeries even_part(const TruncatedSeries &s)
{
    TruncatedSeries out(s.order());
    for (std::size_t i = 0; i <= s.order(); i += 2) {
        out[i] = s[i];
    }
    return out;
}

TruncatedSeries odd_part(const TruncatedSeries &s)
{
    TruncatedSeries out(s.order());
    for (std::size_t i = 1; i <= s.order(); i += 2) {
        out[i] = s[i];
    }
    return out;
}

TruncatedSeries embed_in_square(const TruncatedSeries &s)
{
    TruncatedSeries out(2 * s.order() + 1);
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out[2 * i] = s[i];
    }
    return out;
}

std::optional<std::size_t> first_difference(const TruncatedSeries &s1, const TruncatedSeries &s2, std::size_t upto)
{
    const auto limit = std::min({upto, s1.order(), s2.order()});
    for (std::size_t i = 0; i <= limit; ++i) {
        if (s1[i] != s2[i]) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace qhyper
