#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arcstar {

struct VerifyOptions {
    int order = 48;      // series truncation order
    int grid_n = 101;    // surrogate grid points per axis
    std::uint64_t seed = 0;
    int starts = 200;    // multistart count for functional searches
    bool timings = false;  // emit measured runtimes (breaks byte-for-byte reproducibility)
    std::map<std::string, double> tol_overrides;  // item name -> tolerance
};

/// One verified claim.  status is "pass" iff |reference - computed| <=
/// tolerance ("skip" when the configured series order is too low for the
/// item).  Boolean claims are encoded as reference 1, computed 0/1,
/// tolerance 0.5.
struct VerificationItem {
    std::string name;
    std::string group;
    double reference = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    std::string status;
    double runtime_ms = 0.0;
    std::string note;
};

struct VerificationMeta {
    int series_order = 0;
    int grid_n = 0;
    std::uint64_t seed = 0;
    std::string version;
};

struct VerificationReport {
    VerificationMeta meta;
    std::vector<VerificationItem> items;  // sorted by name

    bool all_pass() const;  // no "fail" items ("skip" does not fail)
    std::string to_json() const;
    std::string to_markdown() const;
    std::string to_csv() const;
};

/// Runs the whole verification suite.  Deterministic for fixed options
/// (runtimes are zeroed unless options.timings is set).
VerificationReport run_verification(const VerifyOptions& options = {});

/// Roll-up of the eleven acceptance groups (prefixes a01..a11).
struct GroupSummary {
    std::string prefix;
    std::string title;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};
std::vector<GroupSummary> summarize_groups(const VerificationReport& report);

}  // namespace arcstar
