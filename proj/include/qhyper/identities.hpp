#ifndef QHYPER_IDENTITIES_HPP
#define QHYPER_IDENTITIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qhyper/param_point.hpp>
#include <qhyper/rational.hpp>
#include <qhyper/reducer.hpp>
#include <qhyper/series.hpp>

namespace qhyper
{

enum class IdentityId {
    thm1,
    thm2,
    thm2_variant,
    thm3,
    thm4,
    srivastava,
    jackson,
    gasper,
    clausen,
    bailey_2_11,
    bailey_2_08
};

inline constexpr std::array all_identities{IdentityId::thm1,       IdentityId::thm2,        IdentityId::thm2_variant,
                                           IdentityId::thm3,       IdentityId::thm4,        IdentityId::srivastava,
                                           IdentityId::jackson,    IdentityId::gasper,      IdentityId::clausen,
                                           IdentityId::bailey_2_11, IdentityId::bailey_2_08};

std::string_view to_string(IdentityId id) noexcept;
std::optional<IdentityId> parse_identity(std::string_view name) noexcept;
/// Terminating-sum identities carry a termination index n.
bool is_terminating(IdentityId id) noexcept;
/// Classical (q-free) identities take a pair (a, b) only.
bool is_classical(IdentityId id) noexcept;
/// Only thm2_variant is report-only.
bool is_gating(IdentityId id) noexcept;
/// Symbols a point must assign for this identity.
std::vector<Symbol> required_symbols(IdentityId id);

enum class Status { pass, fail, error };
std::string_view to_string(Status status) noexcept;

/// Why a report has status error. Not serialized; used to drive resampling.
enum class ErrorKind { none, pole, irreducible, config, other };

struct Discrepancy {
    std::size_t index = 0;
    Rational lhs;
    Rational rhs;
};

struct VerificationReport {
    IdentityId identity = IdentityId::thm1;
    ParamPoint::assignment_map point;
    std::optional<unsigned> n;
    std::size_t order = 0;
    Status status = Status::error;
    /// Number of coefficients (or values) compared.
    std::size_t checked_orders = 0;
    std::optional<Discrepancy> first_discrepancy;
    std::optional<std::string> detail;
    ErrorKind error_kind = ErrorKind::none;

    bool passed() const noexcept
    {
        return status == Status::pass;
    }
};

/// One check to run. Terminating identities use n and ignore order; the rest ignore n.
struct IdentityCase {
    IdentityId identity = IdentityId::thm1;
    ParamPoint::assignment_map point;
    std::optional<unsigned> n;
    std::size_t order = 0;
};

/// Both sides of a terminating identity, for tests that look past pass/fail.
struct TerminatingSides {
    Rational lhs;
    Rational rhs;
    /// Reduced infinite-product quotient on the right, when there is one.
    std::optional<ReducedProduct> reduced;
};

TerminatingSides thm1_sides(unsigned n, const ParamPoint &p);
TerminatingSides thm2_sides(unsigned n, const ParamPoint &p);
/// Throws IrreducibleError when a is not an exact power of q.
TerminatingSides thm2_variant_sides(unsigned n, const ParamPoint &p);
TerminatingSides gasper_sides(unsigned n, const ParamPoint &p);

VerificationReport check_thm1(unsigned n, const ParamPoint &p);
VerificationReport check_thm2(unsigned n, const ParamPoint &p);
/// Informational: generic a usually leaves an irreducible quotient, reported as error with a numeric right side.
VerificationReport check_thm2_variant(unsigned n, const ParamPoint &p);
VerificationReport check_thm3(const ParamPoint &p, std::size_t N);
/// Product = middle sum, even part = first 4phi3, odd part = prefactor * z * second 4phi3.
VerificationReport check_thm4(const ParamPoint &p, std::size_t N);
VerificationReport check_srivastava(const ParamPoint &p, std::size_t N);
VerificationReport check_jackson(const ParamPoint &p, std::size_t N);
VerificationReport check_gasper(unsigned n, const ParamPoint &p);
VerificationReport check_clausen(const Rational &a, const Rational &b, std::size_t N);
VerificationReport check_bailey_2_11(const Rational &a, const Rational &b, std::size_t N);
VerificationReport check_bailey_2_08(const Rational &a, const Rational &b, std::size_t N);

/// Right side of the bailey_2_11 product formula: 2F3[(a+b)/2,(a+b+1)/2; a+1/2,b+1/2,a+b; z^2/4].
TruncatedSeries bailey_2_11_rhs(const Rational &a, const Rational &b, std::size_t N);
/// Right side of the bailey_2_08 product formula: the two 4F1 pieces in 4z^2 combined.
TruncatedSeries bailey_2_08_rhs(const Rational &a, const Rational &b, std::size_t N);

/// Dispatches one case. Never throws; failures land in the report.
VerificationReport run_case(const IdentityCase &c);

/// Runs cases on up to `threads` workers (0 = hardware concurrency); output follows input order.
std::vector<VerificationReport> run_suite(const std::vector<IdentityCase> &cases, unsigned threads = 0);

} // namespace qhyper

#endif
