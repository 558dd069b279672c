#ifndef QHYPER_QPOCH_HPP
#define QHYPER_QPOCH_HPP

#include <qhyper/rational.hpp>

namespace qhyper
{

/// Finite q-shifted factorial (x; base)_n = prod_{k=0}^{n-1} (1 - x base^k).
Rational qpoch(const Rational &x, const Rational &base, unsigned n);

} // namespace qhyper

#endif
