#include <qhyper/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace qhyper
{

Rational::Rational(long num, long den) : m_value(num, den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    m_value.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : m_value(num, den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    m_value.canonicalize();
}

Rational::Rational(const mpq_class &value) : m_value(value)
{
    if (m_value.get_den() == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    m_value.canonicalize();
}

namespace
{

bool is_integer_literal(std::string_view text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        return false;
    }
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text)
{
    if (!is_integer_literal(text)) {
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return mpz_class(std::string(text), 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text), mpz_class(1));
    }
    const auto num = parse_integer(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw std::invalid_argument("negative denominator in rational literal: '" + std::string(text) + "'");
    }
    const auto den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Rational &Rational::operator+=(const Rational &other)
{
    m_value += other.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    m_value -= other.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
    m_value *= other.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    m_value /= other.m_value;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-m_value));
}

Rational Rational::pow(std::int64_t exponent) const
{
    if (exponent < 0) {
        if (is_zero()) {
            throw std::domain_error("zero raised to a negative power");
        }
        return (Rational(1) / *this).pow(-exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), m_value.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), m_value.get_den_mpz_t(), e);
    // Powers of coprime integers stay coprime.
    mpq_class result;
    result.get_num() = num;
    result.get_den() = den;
    Rational out;
    out.m_value = std::move(result);
    return out;
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(m_value)));
}

double Rational::to_double() const
{
    return m_value.get_d();
}

std::string Rational::to_string() const
{
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

std::optional<Rational> exact_sqrt(const Rational &value)
{
    if (value.sign() < 0) {
        return std::nullopt;
    }
    const auto num = value.numerator();
    const auto den = value.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Rational(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
}

} // namespace qhyper
