#include <qhyper/hyper.hpp>

#include <qhyper/errors.hpp>
#include <qhyper/qpoch.hpp>

namespace qhyper
{

PhiSpec PhiSpec::make(const std::vector<Monomial> &numer, const std::vector<Monomial> &denom, int base_step,
                      Monomial argument_scalar, int argument_power)
{
    PhiSpec spec;
    spec.base_step = base_step;
    spec.argument_scalar = std::move(argument_scalar);
    spec.argument_power = argument_power;
    for (const auto &m : numer) {
        spec.numerator.push_back({m, base_step});
    }
    for (const auto &m : denom) {
        spec.denominator.push_back({m, base_step});
    }
    return spec;
}

PhiSpec &PhiSpec::add_numerator(Monomial argument, int step)
{
    numerator.push_back({std::move(argument), step});
    return *this;
}

PhiSpec &PhiSpec::add_denominator(Monomial argument, int step)
{
    denominator.push_back({std::move(argument), step});
    return *this;
}

PhiSpec &PhiSpec::add_numerator_pair(const Monomial &x)
{
    return add_numerator(x.pow(2), 2 * base_step);
}

PhiSpec &PhiSpec::add_denominator_pair(const Monomial &x)
{
    return add_denominator(x.pow(2), 2 * base_step);
}

int PhiSpec::balance_exponent() const
{
    int r = 0, s = 0;
    for (const auto &p : numerator) {
        r += p.step / base_step;
    }
    for (const auto &p : denominator) {
        s += p.step / base_step;
    }
    return 1 + s - r;
}

namespace
{

struct running_factor {
    Rational current; // argument * q^(step k)
    Rational multiplier; // q^step
};

// Calls visit(k, term_k) for k = 0..max_k via the term ratio.
template <typename Visit>
void for_each_term(const PhiSpec &spec, const ParamPoint &p, std::size_t max_k, Visit &&visit)
{
    if (spec.base_step < 1 || spec.argument_power < 1) {
        throw std::invalid_argument("series base step and argument power must be positive");
    }
    const Rational q = p.q();
    std::vector<running_factor> numer, denom;
    for (const auto &param : spec.numerator) {
        numer.push_back({eval_monomial(param.argument, p), q.pow(param.step)});
    }
    for (const auto &param : spec.denominator) {
        denom.push_back({eval_monomial(param.argument, p), q.pow(param.step)});
    }
    const Rational base = q.pow(spec.base_step);
    const Rational scalar = eval_monomial(spec.argument_scalar, p);
    const int balance = spec.balance_exponent();

    Rational term(1);
    Rational base_power(1); // base^k
    visit(std::size_t{0}, term);
    for (std::size_t k = 0; k < max_k; ++k) {
        Rational up(1), down(1);
        for (auto &f : numer) {
            up *= Rational(1) - f.current;
            f.current *= f.multiplier;
        }
        for (auto &f : denom) {
            const auto factor = Rational(1) - f.current;
            if (factor.is_zero()) {
                throw PoleError("denominator parameter " + f.current.to_string() + " hits 1 at term " + std::to_string(k + 1),
                                k + 1);
            }
            down *= factor;
            f.current *= f.multiplier;
        }
        if (balance != 0) {
            up *= (-base_power).pow(balance);
        }
        base_power *= base;
        down *= Rational(1) - base_power;
        term *= up * scalar / down;
        visit(k + 1, term);
    }
}

} // namespace

TruncatedSeries phi_series(const PhiSpec &spec, const ParamPoint &p, std::size_t N)
{
    TruncatedSeries out(N);
    const auto power = static_cast<std::size_t>(spec.argument_power);
    for_each_term(spec, p, N / power, [&](std::size_t k, const Rational &term) { out[power * k] = term; });
    return out;
}

Rational phi_terminating_value(const PhiSpec &spec, const ParamPoint &p, std::size_t termination_index)
{
    Rational sum(0);
    for_each_term(spec, p, termination_index, [&](std::size_t, const Rational &term) { sum += term; });
    return sum;
}

TruncatedSeries f_series(const FSpec &spec, std::size_t N)
{
    if (spec.argument_power < 1) {
        throw std::invalid_argument("argument power must be positive");
    }
    const auto power = static_cast<std::size_t>(spec.argument_power);
    TruncatedSeries out(N);
    Rational term(1);
    out[0] = term;
    for (std::size_t k = 0; power * (k + 1) <= N; ++k) {
        const Rational kk(static_cast<long>(k));
        Rational up(1), down(static_cast<long>(k + 1));
        for (const auto &a : spec.numerator) {
            up *= a + kk;
        }
        for (const auto &b : spec.denominator) {
            const auto factor = b + kk;
            if (factor.is_zero()) {
                throw PoleError("denominator parameter " + b.to_string() + " gives a zero rising factorial at term "
                                    + std::to_string(k + 1),
                                k + 1);
            }
            down *= factor;
        }
        term *= up * spec.argument_scalar / down;
        out[power * (k + 1)] = term;
    }
    return out;
}

TruncatedSeries thm4_middle_series(const ParamPoint &p, std::size_t N)
{
    const auto &a = p.value(Symbol::a);
    const auto &b = p.value(Symbol::b);
    const auto &q = p.q();
    const auto q2 = q * q;
    TruncatedSeries out(N);
    for (std::size_t j = 0; j <= N; ++j) {
        const auto jj = static_cast<std::int64_t>(j);
        const auto first = qpoch(q.pow(2 - jj) / (a * b), q2, static_cast<unsigned>(j));
        const auto second = qpoch(a * q.pow(1 - jj) / b, q2, static_cast<unsigned>(j));
        out[j] = first * second / qpoch(q2, q2, static_cast<unsigned>(j)) * q.pow(jj * (jj - 1) / 2) * b.pow(jj);
    }
    return out;
}

} // namespace qhyper
