#ifndef RTLINK_REPORT_HPP
#define RTLINK_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtlink/cells.hpp"
#include "rtlink/classifier.hpp"
#include "rtlink/trace_field.hpp"
#include "rtlink/vinberg.hpp"

namespace rtlink {

using nlohmann::json;

/// Readable form: rationals as "p/q", square roots of rationals as
/// "-2*sqrt(3)", anything else as a polynomial in g = 2cos(pi/L).
std::string pretty(const AlgebraicNumber& x);

json to_json(const AlgebraicNumber& x);
json to_json(const CoxeterPresentation& p);
json to_json(const ArithmeticityCertificate& c);
json to_json(const TraceFieldWorksheet& w);
json to_json(const TraceFieldResult& r);
json to_json(const CanonicalCheckReport& r);

struct ReportOptions {
    int bound = 12;
    int samples = 10000;
    std::uint64_t seed = 1;
};

constexpr int kMaxReportBound = 50;

/// Classification rows for all valid types up to the bound, commensurability
/// classes, and the geometry checks.
json build_report(const ReportOptions& opt);
std::string report_csv(const json& report);

struct CommandRequest {
    std::string command;
    std::vector<int> args;
    bool spherical = false;
    std::optional<int> genus;
    int bound = 12;
    int samples = 10000;
    std::uint64_t seed = 1;
    std::string format = "text";   // text | json | csv (report only)
};

/// Runs one command. Returns the process exit code: 0 success, 2 domain
/// error, 3 verification failure; errors print one "error: <kind>: <reason>"
/// line to err.
int run(const CommandRequest& req, std::ostream& out, std::ostream& err);

/// The command result as JSON; throws on errors.
json execute(const CommandRequest& req);
std::string render_text(const CommandRequest& req, const json& result);

}   // namespace rtlink

#endif
