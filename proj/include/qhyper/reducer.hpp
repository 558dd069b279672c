#ifndef QHYPER_REDUCER_HPP
#define QHYPER_REDUCER_HPP

#include <optional>
#include <string>
#include <vector>

#include <qhyper/monomial.hpp>
#include <qhyper/param_point.hpp>
#include <qhyper/rational.hpp>

namespace qhyper
{

/// Symbolic (argument; q^step)_length with length absent meaning infinite.
struct PochFactor {
    Monomial argument;
    int step = 1;
    std::optional<unsigned> length;

    static PochFactor infinite(Monomial argument, int step)
    {
        return PochFactor{std::move(argument), step, std::nullopt};
    }
    static PochFactor finite(Monomial argument, int step, unsigned length)
    {
        return PochFactor{std::move(argument), step, length};
    }
    bool is_infinite() const noexcept
    {
        return !length.has_value();
    }

    friend bool operator==(const PochFactor &, const PochFactor &) = default;
};

enum class Placement { numerator, denominator };

struct FiniteFactor {
    Monomial argument;
    int step = 1;
    unsigned length = 0;
    Placement placement = Placement::numerator;

    friend bool operator==(const FiniteFactor &, const FiniteFactor &) = default;
    friend auto operator<=>(const FiniteFactor &, const FiniteFactor &) = default;
};

/// A quotient of infinite products with every infinite factor cancelled.
/**
 * Either a list of finite factors, or a zero certificate (a numerator
 * factor contains 1 - q^0), in which case the list is empty.
 */
struct ReducedProduct {
    std::vector<FiniteFactor> factors;
    bool zero = false;

    friend bool operator==(const ReducedProduct &, const ReducedProduct &) = default;
    std::string to_string() const;
};

/// Cancels prod numer / prod denom of infinite q-Pochhammer products down to finite ones.
/**
 * All inputs must be infinite with step 1 or 2. If steps are mixed, every
 * step-1 factor is split as (x;q)_inf = (x;q^2)_inf (xq;q^2)_inf first.
 * Arguments are grouped by sign and non-q part, then by q-exponent residue
 * modulo the step; within each class the sorted numerator and denominator
 * exponents are paired off. A pair (X q^i, X q^j) becomes (X q^i; q^s)_{(j-i)/s}
 * upstairs when j >= i and (X q^j; q^s)_{(i-j)/s} downstairs otherwise.
 *
 * Throws PoleError if a denominator factor contains 1 - q^0, and
 * IrreducibleError if some class cannot be paired off completely.
 * The output is sorted, so it does not depend on input order.
 */
ReducedProduct reduce_poch_quotient(std::vector<PochFactor> numer, std::vector<PochFactor> denom);

/// Exact value of a reduced product at p; PoleError on a vanishing denominator.
Rational eval_reduced(const ReducedProduct &rp, const ParamPoint &p);

} // namespace qhyper

#endif
