#ifndef QHYPER_SAMPLING_HPP
#define QHYPER_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <qhyper/identities.hpp>
#include <qhyper/param_point.hpp>
#include <qhyper/rational.hpp>

namespace qhyper
{

/// Settings for a sampled run over one or more identities.
struct SuiteConfig {
    std::vector<IdentityId> identities;
    std::size_t order = 40;
    unsigned n_max = 30;
    unsigned trials = 20;
    std::uint64_t seed = 0;
    unsigned max_denominator = 9;
    /// thm2_variant is only exercised up to this n.
    unsigned variant_n_max = 5;
    unsigned max_attempts = 100;
};

/// Nonzero p/d with |p| <= bound, 1 <= d <= bound.
Rational draw_rational(std::mt19937_64 &rng, unsigned bound);

/// Random point for an identity: roots t, r, s and free parameters drawn
/// with draw_rational, squares derived, q = t^2 kept inside (0, 1).
ParamPoint::assignment_map sample_point(IdentityId id, std::mt19937_64 &rng, unsigned bound);

/// Generator seeded from the run seed and the case coordinates only.
std::mt19937_64 case_rng(std::uint64_t seed, IdentityId id, unsigned n, unsigned trial);

/// Draws points until the check runs without a pole (at most max_attempts).
VerificationReport sample_and_check(IdentityId id, std::optional<unsigned> n, std::size_t order, std::mt19937_64 &rng,
                                    unsigned bound, unsigned max_attempts);

/// Runs every (identity, n, trial) combination the config asks for, in a fixed order.
std::vector<VerificationReport> run_sampled_suite(const SuiteConfig &config, unsigned threads = 0);

} // namespace qhyper

#endif
