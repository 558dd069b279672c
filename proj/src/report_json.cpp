#include <qhyper/report_json.hpp>

#include <cstdio>
#include <sstream>

namespace qhyper
{

namespace
{

std::string point_text(const ParamPoint::assignment_map &point)
{
    std::string out;
    for (const auto &[sym, value] : point) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::string(to_string(sym)) + "=" + value.to_string();
    }
    return out;
}

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto &ch : out) {
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    return out;
}

} // namespace

nlohmann::ordered_json to_json(const VerificationReport &report)
{
    nlohmann::ordered_json j;
    j["identity"] = std::string(to_string(report.identity));
    auto point = nlohmann::ordered_json::object();
    for (const auto &[sym, value] : report.point) {
        point[std::string(to_string(sym))] = value.to_string();
    }
    j["point"] = std::move(point);
    j["n"] = report.n ? nlohmann::ordered_json(*report.n) : nlohmann::ordered_json(nullptr);
    j["order"] = report.order;
    j["status"] = std::string(to_string(report.status));
    if (report.first_discrepancy) {
        j["first_discrepancy"] = {{"index", report.first_discrepancy->index},
                                  {"lhs", report.first_discrepancy->lhs.to_string()},
                                  {"rhs", report.first_discrepancy->rhs.to_string()}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    j["detail"] = report.detail ? nlohmann::ordered_json(*report.detail) : nlohmann::ordered_json(nullptr);
    return j;
}

nlohmann::ordered_json to_json(const LimitReport &report)
{
    nlohmann::ordered_json j;
    j["target"] = std::string(to_string(report.target));
    j["alpha"] = report.alpha.to_string();
    j["beta"] = report.beta.to_string();
    auto qs = nlohmann::ordered_json::array();
    for (const auto &q : report.q_sequence) {
        qs.push_back(q.to_string());
    }
    j["q_sequence"] = std::move(qs);
    j["tolerance"] = report.tolerance;
    j["errors"] = report.errors;
    j["precision_drift"] = report.precision_drift;
    j["status"] = std::string(to_string(report.status));
    j["detail"] = report.detail ? nlohmann::ordered_json(*report.detail) : nlohmann::ordered_json(nullptr);
    return j;
}

std::string format_text(const VerificationReport &report)
{
    std::ostringstream os;
    os << upper(to_string(report.status)) << ' ' << to_string(report.identity);
    if (report.n) {
        os << " n=" << *report.n;
    }
    if (report.order > 0) {
        os << " order=" << report.order;
    }
    os << " [" << point_text(report.point) << ']';
    if (!is_gating(report.identity)) {
        os << " (informational)";
    }
    if (report.first_discrepancy) {
        os << " first mismatch at " << report.first_discrepancy->index << ": lhs=" << report.first_discrepancy->lhs
           << " rhs=" << report.first_discrepancy->rhs;
    }
    if (report.detail) {
        os << " -- " << *report.detail;
    }
    return os.str();
}

std::string format_text(const LimitReport &report)
{
    std::ostringstream os;
    os << upper(to_string(report.status)) << " limit " << to_string(report.target) << " alpha=" << report.alpha
       << " beta=" << report.beta;
    double worst = 0;
    for (const auto &row : report.errors) {
        if (!row.empty()) {
            worst = std::max(worst, row.back());
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, " worst final error %.3e", worst);
    os << buf;
    if (report.detail) {
        os << " -- " << *report.detail;
    }
    return os.str();
}

} // namespace qhyper
