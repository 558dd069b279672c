#ifndef QHYPER_CLI_HPP
#define QHYPER_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <qhyper/identities.hpp>

namespace qhyper
{

enum class OutputFormat { text, json };

struct RunConfig {
    /// Empty means every identity.
    std::optional<IdentityId> identity;
    std::size_t order = 40;
    unsigned n_max = 30;
    unsigned trials = 20;
    std::uint64_t seed = 0;
    unsigned max_denominator = 9;
    OutputFormat output_format = OutputFormat::text;
    unsigned precision_digits = 50;
    /// Explicit point overriding sampling, e.g. "a=1/4,c=1/9,q=1/4".
    std::optional<std::string> point;
    /// Single termination index for --point runs.
    std::optional<unsigned> n;
    bool run_limits = false;
    unsigned threads = 0;
};

/// Environment variable holding the default limit-check precision (decimal digits).
inline constexpr const char *precision_env_var = "QHYPER_PRECISION_DIGITS";

/// Exit codes: 0 all gating checks pass, 1 some gating check failed, 2 bad configuration.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Runs a parsed configuration; returns the exit code.
int execute(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace qhyper

#endif
