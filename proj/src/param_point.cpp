#include <qhyper/param_point.hpp>

#include <array>
#include <sstream>
#include <utility>

#include <qhyper/errors.hpp>

namespace qhyper
{

namespace
{

constexpr std::array<std::pair<Symbol, Symbol>, 3> square_root_pairs{
    {{Symbol::a, Symbol::r}, {Symbol::c, Symbol::s}, {Symbol::q, Symbol::t}}};

} // namespace

ParamPoint::ParamPoint(assignment_map values) : m_values(std::move(values))
{
    for (const auto &[sym, value] : m_values) {
        if (value.is_zero()) {
            throw ConfigError("parameter " + std::string(qhyper::to_string(sym)) + " must be nonzero");
        }
    }
    const auto qit = m_values.find(Symbol::q);
    if (qit == m_values.end()) {
        throw ConfigError("parameter point must assign q");
    }
    if (qit->second.sign() <= 0 || qit->second >= Rational(1)) {
        throw ConfigError("q must satisfy 0 < q < 1, got " + qit->second.to_string());
    }
    for (const auto &[square, root] : square_root_pairs) {
        const auto sq = m_values.find(square);
        const auto rt = m_values.find(root);
        if (sq != m_values.end() && rt != m_values.end() && sq->second != rt->second * rt->second) {
            throw ConfigError(std::string(qhyper::to_string(square)) + " != " + std::string(qhyper::to_string(root))
                              + "^2 at this point");
        }
    }
}

ParamPoint ParamPoint::with_roots(assignment_map values)
{
    for (const auto &[square, root] : square_root_pairs) {
        const bool has_square = values.count(square) != 0;
        const bool has_root = values.count(root) != 0;
        if (has_root && !has_square) {
            values[square] = values.at(root) * values.at(root);
        } else if (has_square && !has_root) {
            if (auto r = exact_sqrt(values.at(square))) {
                values[root] = *r;
            }
        }
    }
    return ParamPoint(std::move(values));
}

ParamPoint::assignment_map parse_assignments(const std::string &text)
{
    ParamPoint::assignment_map values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected symbol=value in point, got '" + item + "'");
        }
        const auto sym = parse_symbol(item.substr(0, eq));
        if (!sym) {
            throw ConfigError("unknown symbol '" + item.substr(0, eq) + "' in point");
        }
        try {
            values[*sym] = Rational::parse(item.substr(eq + 1));
        } catch (const std::invalid_argument &err) {
            throw ConfigError(err.what());
        }
    }
    return values;
}

ParamPoint ParamPoint::parse(const std::string &text)
{
    return with_roots(parse_assignments(text));
}

const Rational &ParamPoint::value(Symbol sym) const
{
    const auto it = m_values.find(sym);
    if (it == m_values.end()) {
        throw ConfigError("symbol " + std::string(qhyper::to_string(sym)) + " is not assigned at this point");
    }
    return it->second;
}

ParamPoint ParamPoint::with(Symbol sym, const Rational &value) const
{
    auto values = m_values;
    values[sym] = value;
    return ParamPoint(std::move(values));
}

std::string ParamPoint::to_string() const
{
    std::string out;
    for (const auto &[sym, value] : m_values) {
        if (!out.empty()) {
            out += ',';
        }
        out += qhyper::to_string(sym);
        out += '=';
        out += value.to_string();
    }
    return out;
}

Rational eval_monomial(const Monomial &m, const ParamPoint &p)
{
    Rational result(m.sign());
    for (const auto &[sym, exp] : m.exponents()) {
        result *= p.value(sym).pow(exp);
    }
    return result;
}

} // namespace qhyper
