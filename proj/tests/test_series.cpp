#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <qhyper/hyper.hpp>
#include <qhyper/series.hpp>

#include "oracles.hpp"

using namespace qhyper;

namespace
{

TruncatedSeries poly(std::vector<long> coeffs)
{
    std::vector<Rational> out;
    for (auto c : coeffs) {
        out.emplace_back(c);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries random_series(std::mt19937_64 &rng, std::size_t order)
{
    std::vector<Rational> out;
    for (std::size_t i = 0; i <= order; ++i) {
        out.push_back(oracle::small_rational(rng, 9));
    }
    return TruncatedSeries(std::move(out));
}

} // namespace

TEST_CASE("basic arithmetic")
{
    const auto s = mul(poly({1, 1, 0, 0}), poly({1, -1, 0, 0}));
    CHECK(s == poly({1, 0, -1, 0}));
    CHECK(add(s, scale(s, Rational(-1))).is_zero());
    CHECK(sub(s, s).is_zero());
    CHECK(TruncatedSeries::monomial(2, 3, Rational(5)) == poly({0, 0, 5, 0}));
    CHECK(TruncatedSeries::monomial(4, 3).is_zero());
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("mixed orders truncate to the minimum")
{
    const auto s = add(poly({1, 2, 3}), poly({1, 1}));
    CHECK(s.order() == 1);
    CHECK(mul(poly({1, 2, 3, 4}), poly({1, 1})).order() == 1);
    // equality only looks at the shared prefix
    CHECK(poly({1, 2, 3}) == poly({1, 2}));
    CHECK_FALSE(poly({1, 2, 3}) == poly({1, 3}));
    CHECK(first_difference(poly({1, 2, 3}), poly({1, 2, 4}), 5) == std::optional<std::size_t>(2));
    CHECK_FALSE(first_difference(poly({1, 2, 3}), poly({1, 2, 4}), 1).has_value());
}

TEST_CASE("scale_arg")
{
    const auto s = poly({1, 1, 1});
    CHECK(scale_arg(s, Rational(1)) == s);
    CHECK(scale_arg(s, Rational(-1)) == poly({1, -1, 1}));
    CHECK(scale_arg(poly({0, 0, 4}), Rational(1, 2))[2] == Rational(1));
}

TEST_CASE("parity parts and squaring the variable")
{
    const auto s = poly({1, 1, 1});
    CHECK(even_part(s) == poly({1, 0, 1}));
    CHECK(odd_part(s) == poly({0, 1, 0}));
    CHECK(embed_in_square(poly({1, 1})) == poly({1, 0, 1, 0}));
    CHECK(embed_in_square(poly({1, 1})).order() == 3);
    CHECK(embed_in_square(TruncatedSeries(4)).is_zero());
    const auto e = embed_in_square(poly({7, 8, 9}));
    CHECK(e[4] == Rational(9));
    CHECK(e[3] == Rational(0));
}

TEST_CASE("ring properties on random series")
{
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> ord(0, 16);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_series(rng, ord(rng));
        const auto b = random_series(rng, ord(rng));
        const auto c = random_series(rng, ord(rng));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        const auto k = oracle::small_rational(rng, 9);
        CHECK(scale_arg(scale_arg(a, k), Rational(1) / k) == a);
        CHECK(even_part(a) == scale(add(a, scale_arg(a, Rational(-1))), Rational(1, 2)));
        CHECK(odd_part(a) == scale(sub(a, scale_arg(a, Rational(-1))), Rational(1, 2)));
        CHECK(add(even_part(a), odd_part(a)) == a);
    }
}

TEST_CASE("product of the two thm3 factors matches a direct double sum")
{
    const Rational a(1, 2), b(1, 3), q(1, 4);
    const std::size_t N = 8;
    const auto f1 = oracle::phi_coeffs({a, -a}, {a * a}, q, Rational(1), N);
    const auto f2 = oracle::phi_coeffs({b, -b}, {b * b}, q, Rational(-1), N);
    const auto expected = oracle::convolve(f1, f2);
    const auto got = mul(TruncatedSeries(f1), TruncatedSeries(f2));
    for (std::size_t n = 0; n <= N; ++n) {
        CHECK(got[n] == expected[n]);
    }
    // frozen from an independent Fraction computation
    CHECK(got[2] == Rational(368, 315));
    CHECK(got[1] == Rational(0));
}
