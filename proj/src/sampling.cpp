#include <qhyper/sampling.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

#include <qhyper/errors.hpp>

namespace qhyper
{

Rational draw_rational(std::mt19937_64 &rng, unsigned bound)
{
    if (bound == 0) {
        throw ConfigError("max denominator must be positive");
    }
    const auto b = static_cast<long>(bound);
    std::uniform_int_distribution<long> num_dist(-b, b - 1);
    std::uniform_int_distribution<long> den_dist(1, b);
    long num = num_dist(rng);
    if (num >= 0) {
        ++num; // skip zero
    }
    return Rational(num, den_dist(rng));
}

namespace
{

Rational draw_q_root(std::mt19937_64 &rng, unsigned bound)
{
    for (;;) {
        auto t = draw_rational(rng, bound);
        if (t.abs() < Rational(1)) {
            return t;
        }
    }
}

} // namespace

ParamPoint::assignment_map sample_point(IdentityId id, std::mt19937_64 &rng, unsigned bound)
{
    if (bound < 2) {
        throw ConfigError("max denominator must be at least 2 to sample q in (0,1)");
    }
    ParamPoint::assignment_map values;
    auto draw = [&] { return draw_rational(rng, bound); };
    if (!is_classical(id)) {
        const auto t = draw_q_root(rng, bound);
        values[Symbol::t] = t;
        values[Symbol::q] = t * t;
    }
    switch (id) {
        case IdentityId::thm1: {
            const auto r = draw();
            const auto s = draw();
            values[Symbol::r] = r;
            values[Symbol::a] = r * r;
            values[Symbol::s] = s;
            values[Symbol::c] = s * s;
            break;
        }
        case IdentityId::thm2: {
            const auto s = draw();
            values[Symbol::s] = s;
            values[Symbol::c] = s * s;
            values[Symbol::e] = draw();
            break;
        }
        case IdentityId::thm2_variant:
            values[Symbol::a] = draw();
            values[Symbol::e] = draw();
            break;
        case IdentityId::gasper:
            values[Symbol::b] = draw();
            values[Symbol::y] = draw();
            break;
        default:
            values[Symbol::a] = draw();
            values[Symbol::b] = draw();
            break;
    }
    return values;
}

std::mt19937_64 case_rng(std::uint64_t seed, IdentityId id, unsigned n, unsigned trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(id), n, trial};
    return std::mt19937_64(seq);
}

VerificationReport sample_and_check(IdentityId id, std::optional<unsigned> n, std::size_t order, std::mt19937_64 &rng,
                                    unsigned bound, unsigned max_attempts)
{
    VerificationReport report;
    for (unsigned attempt = 0; attempt < std::max(max_attempts, 1u); ++attempt) {
        report = run_case({id, sample_point(id, rng, bound), n, order});
        if (report.error_kind != ErrorKind::pole) {
            return report;
        }
    }
    report.detail = report.detail.value_or("") + " (gave up after " + std::to_string(max_attempts) + " draws)";
    return report;
}

namespace
{

struct planned_case {
    IdentityId id;
    std::optional<unsigned> n;
    unsigned trial;
};

std::vector<planned_case> plan(const SuiteConfig &config)
{
    std::vector<planned_case> out;
    for (auto id : config.identities) {
        if (is_terminating(id)) {
            const auto n_max = id == IdentityId::thm2_variant ? std::min(config.n_max, config.variant_n_max) : config.n_max;
            for (unsigned n = 0; n <= n_max; ++n) {
                for (unsigned trial = 0; trial < config.trials; ++trial) {
                    out.push_back({id, n, trial});
                }
            }
        } else {
            for (unsigned trial = 0; trial < config.trials; ++trial) {
                out.push_back({id, std::nullopt, trial});
            }
        }
    }
    return out;
}

} // namespace

std::vector<VerificationReport> run_sampled_suite(const SuiteConfig &config, unsigned threads)
{
    const auto cases = plan(config);
    std::vector<VerificationReport> reports(cases.size());
    auto run_one = [&](std::size_t i) {
        const auto &c = cases[i];
        auto rng = case_rng(config.seed, c.id, c.n.value_or(0), c.trial);
        const auto order = is_terminating(c.id) ? std::size_t{0} : config.order;
        reports[i] = sample_and_check(c.id, c.n, order, rng, config.max_denominator, config.max_attempts);
    };
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    if (threads <= 1 || cases.size() <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) {
            run_one(i);
        }
        return reports;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cases.size(); i = next++) {
                    run_one(i);
                }
            });
        }
    }
    return reports;
}

} // namespace qhyper
