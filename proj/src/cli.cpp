#include <qhyper/cli.hpp>

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include <qhyper/errors.hpp>
#include <qhyper/limits.hpp>
#include <qhyper/report_json.hpp>
#include <qhyper/sampling.hpp>

namespace qhyper
{

namespace
{

std::vector<IdentityCase> cases_for_point(const RunConfig &config)
{
    const auto id = *config.identity;
    auto values = parse_assignments(*config.point);
    if (!is_classical(id)) {
        values = ParamPoint::with_roots(std::move(values)).values();
    }
    for (auto sym : required_symbols(id)) {
        if (values.count(sym) == 0) {
            throw ConfigError(std::string(to_string(id)) + " needs symbol " + std::string(to_string(sym)) + " in --point");
        }
    }
    std::vector<IdentityCase> cases;
    if (is_terminating(id)) {
        if (config.n) {
            cases.push_back({id, values, config.n, 0});
        } else {
            for (unsigned n = 0; n <= config.n_max; ++n) {
                cases.push_back({id, values, n, 0});
            }
        }
    } else {
        cases.push_back({id, values, std::nullopt, config.order});
    }
    return cases;
}

std::vector<LimitReport> run_limits(unsigned precision_digits, std::ostream &err)
{
    std::vector<LimitReport> reports;
    const std::vector<std::pair<Rational, Rational>> pairs{
        {Rational(1), Rational(1, 2)}, {Rational(1, 3), Rational(1, 5)}, {Rational(1), Rational(1)}};
    for (auto target : {LimitTarget::watson_2_11, LimitTarget::whipple_2_08}) {
        for (const auto &[alpha, beta] : pairs) {
            auto spec = default_limit_spec(target, alpha, beta);
            spec.precision_digits = precision_digits;
            try {
                reports.push_back(limit_check(spec));
            } catch (const PrecisionError &e) {
                LimitReport failed;
                failed.target = target;
                failed.alpha = alpha;
                failed.beta = beta;
                failed.q_sequence = spec.q_sequence;
                failed.tolerance = spec.tolerance;
                failed.status = Status::error;
                failed.detail = e.what();
                err << "limit check: " << e.what() << '\n';
                reports.push_back(std::move(failed));
            }
        }
    }
    return reports;
}

} // namespace

int execute(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    std::vector<VerificationReport> reports;
    if (config.point) {
        if (!config.identity) {
            throw ConfigError("--point needs a single --identity");
        }
        reports = run_suite(cases_for_point(config), config.threads);
    } else {
        SuiteConfig suite;
        if (config.identity) {
            suite.identities = {*config.identity};
        } else {
            suite.identities.assign(all_identities.begin(), all_identities.end());
        }
        suite.order = config.order;
        suite.n_max = config.n_max;
        suite.trials = config.trials;
        suite.seed = config.seed;
        suite.max_denominator = config.max_denominator;
        reports = run_sampled_suite(suite, config.threads);
    }
    std::vector<LimitReport> limits;
    if (config.run_limits) {
        limits = run_limits(config.precision_digits, err);
    }

    bool ok = true;
    std::size_t passed = 0, informational = 0;
    for (const auto &r : reports) {
        if (!is_gating(r.identity)) {
            ++informational;
            continue;
        }
        if (r.passed()) {
            ++passed;
        } else {
            ok = false;
        }
    }
    for (const auto &l : limits) {
        ok = ok && l.passed();
    }

    if (config.output_format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["reports"] = nlohmann::ordered_json::array();
        for (const auto &r : reports) {
            doc["reports"].push_back(to_json(r));
        }
        if (config.run_limits) {
            doc["limits"] = nlohmann::ordered_json::array();
            for (const auto &l : limits) {
                doc["limits"].push_back(to_json(l));
            }
        }
        out << doc.dump(2) << '\n';
    } else {
        for (const auto &r : reports) {
            out << format_text(r) << '\n';
        }
        for (const auto &l : limits) {
            out << format_text(l) << '\n';
        }
        out << passed << '/' << (reports.size() - informational) << " gating checks passed";
        if (informational > 0) {
            out << ", " << informational << " informational";
        }
        if (!limits.empty()) {
            std::size_t lp = 0;
            for (const auto &l : limits) {
                lp += l.passed() ? 1 : 0;
            }
            out << ", " << lp << '/' << limits.size() << " limit checks passed";
        }
        out << '\n';
    }
    return ok ? 0 : 1;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of q-series product and summation identities"};
    app.name(args.empty() ? "verify" : args.front());

    RunConfig config;
    if (const char *env = std::getenv(precision_env_var)) {
        try {
            config.precision_digits = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception &) {
            err << precision_env_var << " must be an unsigned integer\n";
            return 2;
        }
    }
    std::string identity = "all";
    std::string format = "text";
    bool json = false;
    bool list = false;
    std::optional<std::string> point;
    std::optional<unsigned> n;

    app.add_option("-i,--identity", identity, "Identity id, or 'all'")->capture_default_str();
    app.add_option("--order", config.order, "Series truncation order")->capture_default_str();
    app.add_option("--n-max", config.n_max, "Largest termination index n")->capture_default_str();
    app.add_option("--trials", config.trials, "Sampled points per identity (and per n)")->capture_default_str();
    app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
    app.add_option("--max-denominator", config.max_denominator, "Bound on sampled numerators and denominators")
        ->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_flag("--json", json, "Same as --format json");
    app.add_option("--precision", config.precision_digits, "Limit-check working precision in decimal digits")
        ->capture_default_str();
    app.add_option("--point", point, "Explicit point, e.g. a=1/4,c=1/9,q=1/4");
    app.add_option("-n,--n", n, "Termination index for --point runs");
    app.add_flag("--limits", config.run_limits, "Also run the q -> 1 limit checks");
    app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_flag("--list", list, "Print identity ids and exit");

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end()); // CLI11 consumes vectors back to front
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n' << app.help();
        return 2;
    }

    if (list) {
        for (auto id : all_identities) {
            out << to_string(id) << '\n';
        }
        return 0;
    }
    if (identity != "all") {
        const auto id = parse_identity(identity);
        if (!id) {
            err << "unknown identity '" << identity << "'\n" << app.help();
            return 2;
        }
        config.identity = *id;
    }
    config.output_format = (json || format == "json") ? OutputFormat::json : OutputFormat::text;
    config.point = point;
    config.n = n;

    try {
        return execute(config, out, err);
    } catch (const ConfigError &e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace qhyper
