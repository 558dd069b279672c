#include <qhyper/monomial.hpp>

#include <sstream>
#include <stdexcept>

namespace qhyper
{

std::string_view to_string(Symbol sym) noexcept
{
    switch (sym) {
        case Symbol::a:
            return "a";
        case Symbol::b:
            return "b";
        case Symbol::c:
            return "c";
        case Symbol::e:
            return "e";
        case Symbol::y:
            return "y";
        case Symbol::q:
            return "q";
        case Symbol::r:
            return "r";
        case Symbol::s:
            return "s";
        case Symbol::t:
            return "t";
    }
    return "?";
}

std::optional<Symbol> parse_symbol(std::string_view name) noexcept
{
    for (auto sym : all_symbols) {
        if (to_string(sym) == name) {
            return sym;
        }
    }
    return std::nullopt;
}

Monomial::Monomial(int sign, exponent_map exponents) : m_sign(sign), m_exponents(std::move(exponents))
{
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("monomial sign must be +1 or -1");
    }
    normalize();
}

Monomial Monomial::symbol(Symbol sym, int exponent)
{
    return Monomial(1, {{sym, exponent}});
}

Monomial Monomial::q_power(int exponent)
{
    return symbol(Symbol::q, exponent);
}

int Monomial::exponent(Symbol sym) const noexcept
{
    const auto it = m_exponents.find(sym);
    return it == m_exponents.end() ? 0 : it->second;
}

Monomial Monomial::non_q_part() const
{
    auto exps = m_exponents;
    exps.erase(Symbol::q);
    return Monomial(1, std::move(exps));
}

bool Monomial::is_pure_q_power() const noexcept
{
    for (const auto &[sym, exp] : m_exponents) {
        if (sym != Symbol::q) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::operator-() const
{
    Monomial out(*this);
    out.m_sign = -m_sign;
    return out;
}

Monomial &Monomial::operator*=(const Monomial &other)
{
    m_sign *= other.m_sign;
    for (const auto &[sym, exp] : other.m_exponents) {
        m_exponents[sym] += exp;
    }
    normalize();
    return *this;
}

Monomial &Monomial::operator/=(const Monomial &other)
{
    m_sign *= other.m_sign;
    for (const auto &[sym, exp] : other.m_exponents) {
        m_exponents[sym] -= exp;
    }
    normalize();
    return *this;
}

Monomial Monomial::pow(int exponent) const
{
    exponent_map exps;
    for (const auto &[sym, exp] : m_exponents) {
        exps[sym] = exp * exponent;
    }
    const int sign = (m_sign < 0 && exponent % 2 != 0) ? -1 : 1;
    return Monomial(sign, std::move(exps));
}

std::strong_ordering operator<=>(const Monomial &lhs, const Monomial &rhs)
{
    if (auto c = lhs.m_exponents <=> rhs.m_exponents; c != 0) {
        return c;
    }
    return lhs.m_sign <=> rhs.m_sign;
}

void Monomial::normalize()
{
    std::erase_if(m_exponents, [](const auto &kv) { return kv.second == 0; });
}

std::string Monomial::to_string() const
{
    std::ostringstream os;
    if (m_sign < 0) {
        os << '-';
    }
    if (m_exponents.empty()) {
        os << '1';
        return os.str();
    }
    bool first = true;
    for (const auto &[sym, exp] : m_exponents) {
        if (!first) {
            os << '*';
        }
        first = false;
        os << qhyper::to_string(sym);
        if (exp != 1) {
            os << '^' << exp;
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Monomial &m)
{
    return os << m.to_string();
}

} // namespace qhyper
