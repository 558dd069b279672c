#ifndef QHYPER_REPORT_JSON_HPP
#define QHYPER_REPORT_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <qhyper/identities.hpp>
#include <qhyper/limits.hpp>

namespace qhyper
{

/// {"identity", "point", "n", "order", "status", "first_discrepancy", "detail"}; rationals as "num/den".
nlohmann::ordered_json to_json(const VerificationReport &report);
nlohmann::ordered_json to_json(const LimitReport &report);

/// One human-readable line per report.
std::string format_text(const VerificationReport &report);
std::string format_text(const LimitReport &report);

} // namespace qhyper

#endif
