#include <qhyper/reducer.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include <qhyper/errors.hpp>
#include <qhyper/qpoch.hpp>

namespace qhyper
{

namespace
{

int residue(int exponent, int step)
{
    return ((exponent % step) + step) % step;
}

// Contains the factor 1 - q^0 somewhere along the product.
bool hits_unity(const PochFactor &f)
{
    return f.argument.sign() == 1 && f.argument.is_pure_q_power() && f.argument.q_exponent() <= 0
           && residue(f.argument.q_exponent(), f.step) == 0;
}

void validate(const std::vector<PochFactor> &factors)
{
    for (const auto &f : factors) {
        if (!f.is_infinite()) {
            throw std::invalid_argument("reduce_poch_quotient expects infinite factors only");
        }
        if (f.step != 1 && f.step != 2) {
            throw std::invalid_argument("q-Pochhammer step must be 1 or 2");
        }
    }
}

std::vector<PochFactor> split_to_step_two(const std::vector<PochFactor> &factors)
{
    std::vector<PochFactor> out;
    out.reserve(2 * factors.size());
    for (const auto &f : factors) {
        if (f.step == 2) {
            out.push_back(f);
        } else {
            out.push_back(PochFactor::infinite(f.argument, 2));
            out.push_back(PochFactor::infinite(f.argument * Monomial::q_power(1), 2));
        }
    }
    return out;
}

// Sign plus non-q part, then residue class of the q exponent.
using class_key = std::pair<Monomial, int>;

struct exponent_lists {
    std::vector<int> numer;
    std::vector<int> denom;
};

} // namespace

ReducedProduct reduce_poch_quotient(std::vector<PochFactor> numer, std::vector<PochFactor> denom)
{
    validate(numer);
    validate(denom);

    bool has_step_one = false, has_step_two = false;
    for (const auto *list : {&numer, &denom}) {
        for (const auto &f : *list) {
            (f.step == 1 ? has_step_one : has_step_two) = true;
        }
    }
    if (has_step_one && has_step_two) {
        numer = split_to_step_two(numer);
        denom = split_to_step_two(denom);
    }
    const int step = has_step_two ? 2 : 1;

    for (const auto &f : denom) {
        if (hits_unity(f)) {
            throw PoleError("denominator product (" + f.argument.to_string() + ";q^" + std::to_string(f.step)
                            + ")_inf contains the factor 1-q^0");
        }
    }
    ReducedProduct result;
    for (const auto &f : numer) {
        if (hits_unity(f)) {
            result.zero = true;
            return result;
        }
    }

    std::map<class_key, exponent_lists> classes;
    for (const auto &f : numer) {
        const auto base = f.argument.sign() < 0 ? -f.argument.non_q_part() : f.argument.non_q_part();
        classes[{base, residue(f.argument.q_exponent(), step)}].numer.push_back(f.argument.q_exponent());
    }
    for (const auto &f : denom) {
        const auto base = f.argument.sign() < 0 ? -f.argument.non_q_part() : f.argument.non_q_part();
        classes[{base, residue(f.argument.q_exponent(), step)}].denom.push_back(f.argument.q_exponent());
    }

    for (auto &[key, lists] : classes) {
        const auto &base = key.first;
        if (lists.numer.size() != lists.denom.size()) {
            std::ostringstream msg;
            msg << "cannot cancel infinite products with argument class " << base << "*q^(" << key.second << " mod "
                << step << "): " << lists.numer.size() << " upstairs vs " << lists.denom.size() << " downstairs";
            throw IrreducibleError(msg.str());
        }
        std::sort(lists.numer.begin(), lists.numer.end());
        std::sort(lists.denom.begin(), lists.denom.end());
        for (std::size_t i = 0; i < lists.numer.size(); ++i) {
            const int up = lists.numer[i];
            const int down = lists.denom[i];
            if (up == down) {
                continue;
            }
            if (down > up) {
                result.factors.push_back({base * Monomial::q_power(up), step,
                                          static_cast<unsigned>((down - up) / step), Placement::numerator});
            } else {
                result.factors.push_back({base * Monomial::q_power(down), step,
                                          static_cast<unsigned>((up - down) / step), Placement::denominator});
            }
        }
    }
    std::sort(result.factors.begin(), result.factors.end());
    return result;
}

Rational eval_reduced(const ReducedProduct &rp, const ParamPoint &p)
{
    if (rp.zero) {
        return Rational(0);
    }
    Rational numer(1), denom(1);
    for (const auto &f : rp.factors) {
        const auto value = qpoch(eval_monomial(f.argument, p), p.q().pow(f.step), f.length);
        if (f.placement == Placement::numerator) {
            numer *= value;
        } else {
            if (value.is_zero()) {
                throw PoleError("finite denominator factor (" + f.argument.to_string() + ";q^" + std::to_string(f.step)
                                + ")_" + std::to_string(f.length) + " vanishes at " + p.to_string());
            }
            denom *= value;
        }
    }
    return numer / denom;
}

std::string ReducedProduct::to_string() const
{
    if (zero) {
        return "0";
    }
    std::string up, down;
    for (const auto &f : factors) {
        auto &dst = f.placement == Placement::numerator ? up : down;
        dst += "(" + f.argument.to_string() + ";q^" + std::to_string(f.step) + ")_" + std::to_string(f.length);
    }
    return (up.empty() ? "1" : up) + (down.empty() ? "" : " / " + down);
}

} // namespace qhyper
