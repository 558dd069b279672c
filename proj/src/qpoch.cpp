#include <qhyper/qpoch.hpp>

namespace qhyper
{

Rational qpoch(const Rational &x, const Rational &base, unsigned n)
{
    Rational result(1);
    Rational term = x;
    for (unsigned k = 0; k < n; ++k) {
        result *= Rational(1) - term;
        if (result.is_zero()) {
            break;
        }
        term *= base;
    }
    return result;
}

} // namespace qhyper
