#pragma once

#include <hyperturan/combinatorics.hpp>
#include <hyperturan/json_io.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperturan::cli {

/// "3..8", "0,1,2", "4", or a mix such as "1,3..5". An empty string or a
/// descending range gives an empty list.
auto parse_range(std::string_view text) -> std::vector<Count>;

enum class Agreement { match, gap_recorded, not_covered };

auto to_string(Agreement a) -> std::string_view;

/// Grid families:
///   small-s  (n, r, l, s): small_s_value and large_s_value against ex_r(n, {K_{l+1}^+, M_{s+1}})
///   emc      (n, r, s):    emc_value against ex_r(n, M_{s+1})
///   rainbow  (n, r, l, k): rainbow_value against the rainbow oracle
struct ReportGrid {
    std::string family;
    std::vector<Count> n, r, l, s, k;
    bool oracle = false;
    std::optional<std::uint64_t> budget;
    unsigned jobs = 1;
};

struct Report {
    Json document;
    /// a construction failed a freeness check
    bool checks_failed = false;
};

/// Throws ParameterError for an unknown family. A dimension left empty gives
/// an empty report.
auto run_report(const ReportGrid & grid) -> Report;

/// Human one-liner for the diagnostic stream.
auto summary_line(const Json & report) -> std::string;

} // namespace hyperturan::cli
