#ifndef QHYPER_MONOMIAL_HPP
#define QHYPER_MONOMIAL_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace qhyper
{

/// Parameter symbols. r, s, t are square roots: a = r^2, c = s^2, q = t^2.
enum class Symbol { a, b, c, e, y, q, r, s, t };

inline constexpr std::array all_symbols{Symbol::a, Symbol::b, Symbol::c, Symbol::e, Symbol::y,
                                        Symbol::q, Symbol::r, Symbol::s, Symbol::t};

std::string_view to_string(Symbol sym) noexcept;
std::optional<Symbol> parse_symbol(std::string_view name) noexcept;

/// Signed Laurent monomial in the parameter symbols, e.g. -c q^2 / a.
class Monomial
{
public:
    using exponent_map = std::map<Symbol, int>;

    /// The constant +1.
    Monomial() = default;
    Monomial(int sign, exponent_map exponents);

    static Monomial symbol(Symbol sym, int exponent = 1);
    static Monomial q_power(int exponent);

    int sign() const noexcept
    {
        return m_sign;
    }
    const exponent_map &exponents() const noexcept
    {
        return m_exponents;
    }
    int exponent(Symbol sym) const noexcept;
    int q_exponent() const noexcept
    {
        return exponent(Symbol::q);
    }

    /// Same monomial with the q exponent dropped and sign +1.
    Monomial non_q_part() const;
    bool is_pure_q_power() const noexcept;

    Monomial operator-() const;
    Monomial &operator*=(const Monomial &other);
    Monomial &operator/=(const Monomial &other);
    friend Monomial operator*(Monomial lhs, const Monomial &rhs)
    {
        return lhs *= rhs;
    }
    friend Monomial operator/(Monomial lhs, const Monomial &rhs)
    {
        return lhs /= rhs;
    }
    Monomial pow(int exponent) const;

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend std::strong_ordering operator<=>(const Monomial &lhs, const Monomial &rhs);

    std::string to_string() const;

private:
    void normalize();

    int m_sign = 1;
    exponent_map m_exponents;
};

std::ostream &operator<<(std::ostream &os, const Monomial &m);

// Shorthands used by the identity builders.
namespace sym
{
inline const Monomial one{};
inline Monomial a(int k = 1)
{
    return Monomial::symbol(Symbol::a, k);
}
inline Monomial b(int k = 1)
{
    return Monomial::symbol(Symbol::b, k);
}
inline Monomial c(int k = 1)
{
    return Monomial::symbol(Symbol::c, k);
}
inline Monomial e(int k = 1)
{
    return Monomial::symbol(Symbol::e, k);
}
inline Monomial y(int k = 1)
{
    return Monomial::symbol(Symbol::y, k);
}
inline Monomial q(int k = 1)
{
    return Monomial::q_power(k);
}
} // namespace sym

} // namespace qhyper

#endif
