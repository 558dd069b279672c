#ifndef QHYPER_PARAM_POINT_HPP
#define QHYPER_PARAM_POINT_HPP

#include <map>
#include <string>

#include <qhyper/monomial.hpp>
#include <qhyper/rational.hpp>

namespace qhyper
{

/// Exact rational assignment of parameter symbols.
/**
 * Invariants: q is assigned with 0 < q < 1, every value is nonzero, and
 * whenever both a square and its root symbol are assigned the relations
 * a = r^2, c = s^2, q = t^2 hold exactly. Violations throw ConfigError.
 */
class ParamPoint
{
public:
    using assignment_map = std::map<Symbol, Rational>;

    explicit ParamPoint(assignment_map values);

    /// Fills in whichever side of a = r^2, c = s^2, q = t^2 is missing
    /// (roots only when the square is a perfect rational square), then validates.
    static ParamPoint with_roots(assignment_map values);

    /// Parses "a=1/4,c=1/9,q=1/4" and completes roots as in with_roots.
    static ParamPoint parse(const std::string &text);

    bool has(Symbol sym) const noexcept
    {
        return m_values.count(sym) != 0;
    }
    /// Throws ConfigError if unassigned.
    const Rational &value(Symbol sym) const;
    const Rational &q() const
    {
        return value(Symbol::q);
    }
    const assignment_map &values() const noexcept
    {
        return m_values;
    }

    /// Copy with one symbol (re)assigned; revalidated.
    ParamPoint with(Symbol sym, const Rational &value) const;

    std::string to_string() const;

    friend bool operator==(const ParamPoint &, const ParamPoint &) = default;

private:
    assignment_map m_values;
};

/// Parses "a=1/4,c=1/9" into raw assignments without validating them as a point.
ParamPoint::assignment_map parse_assignments(const std::string &text);

/// sign * prod value(sym)^exp, exact.
Rational eval_monomial(const Monomial &m, const ParamPoint &p);

} // namespace qhyper

#endif
