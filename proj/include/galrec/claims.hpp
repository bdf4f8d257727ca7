#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galrec/config.hpp"
#include "galrec/emit.hpp"
#include "galrec/kernels.hpp"

namespace galrec::claims {

enum class Verdict { CONFIRMED, REFUTED, INCONCLUSIVE };
const char* verdict_name(Verdict v);

struct HistoricalAssertion {
    std::string source;
    std::optional<double> value;
    std::string units;
    std::string statement;
};

struct ComputedResult {
    std::optional<double> value;
    std::string units;
    std::string method;
};

/// One historical assertion plus its computed verdict: the registry's atom.
struct ClaimRecord {
    std::string id;
    std::string title;
    std::string section_ref;
    HistoricalAssertion historical;
    ComputedResult computed;
    std::optional<kernels::Tolerance> tolerance;
    std::optional<Verdict> verdict;  // empty on unevaluated metadata listings
    std::vector<std::string> citations;
    std::string detail;
    std::string blocked_by;  // open-question text when evaluation is blocked
};

/// Stable ordering by id.
std::vector<std::string> claim_ids();

/// Metadata only, unevaluated; deterministic ordering by id.
std::vector<ClaimRecord> list_claims();

/// Evaluates one claim; throws NotFoundError with near matches for an
/// unknown id. Blocked claims come back INCONCLUSIVE with the blocking text.
ClaimRecord run_claim(const std::string& id, const config::RunConfig& cfg);

/// Series data for claims that produce any; NoDataError otherwise.
emit::Series claim_series(const std::string& id, const config::RunConfig& cfg);

/// Writes claim series to path in the requested format ("csv" or "json").
void emit_claim(const std::string& id, const std::string& format, const std::string& path,
                const config::RunConfig& cfg);

struct ReportRow {
    ClaimRecord record;
    Verdict expected;
    bool verdict_match;
    bool value_match;  // computed value against the registered expectation
    std::string mismatch_note;
};

struct Report {
    std::vector<ReportRow> rows;
    bool all_match;
    int exit_code;  // 0 when every verdict and registered value matches
};

/// Runs every claim (claims are independent; parallelism from the config),
/// order-normalized before assembly.
Report report(const config::RunConfig& cfg);

std::string render_report_markdown(const Report& rep);
std::string render_report_json(const Report& rep);
std::string render_record_markdown(const ClaimRecord& rec);
std::string render_record_json(const ClaimRecord& rec);

}  // namespace galrec::claims
