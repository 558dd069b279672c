#ifndef QHYPER_ERRORS_HPP
#define QHYPER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhyper
{

/// Bad input: unassigned symbol, malformed point, unknown identity name.
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A denominator factor vanished. The sample point should be redrawn.
class PoleError : public std::domain_error
{
public:
    explicit PoleError(const std::string &what, std::size_t index = 0)
        : std::domain_error(what), m_index(index)
    {
    }
    /// Term or factor index at which the zero appeared.
    std::size_t index() const noexcept
    {
        return m_index;
    }

private:
    std::size_t m_index;
};

/// An infinite q-Pochhammer factor could not be cancelled against its partner.
class IrreducibleError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Working precision too low to certify a requested tolerance.
class PrecisionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace qhyper

#endif
