#ifndef EHALL_REPORT_HPP
#define EHALL_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ehall {

inline constexpr const char* kToolVersion = "0.1.0";

/// One check result row. All fields except elapsed_ms are deterministic in
/// the run configuration; elapsed_ms is kept at zero in record payloads so
/// that reruns compare byte-identical (wall time lives in Report::wall_ms).
struct Record {
    std::string check_id;
    std::string family;
    std::string params;
    std::string bidegree;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::string status; // PASS / FAIL / INCONCLUSIVE
    std::string data;
    double elapsed_ms = 0.0;
};

struct Report {
    std::string command;
    std::map<std::string, std::string> config; // echoed, sorted by key
    std::vector<Record> records;
    double wall_ms = 0.0; // the single timing field, excluded from payload

    /// Canonical JSON document (sorted record order is the caller's duty).
    std::string to_json() const;
    /// Flat table with '#' config header lines.
    std::string to_csv() const;

    bool any_fail() const;
    bool any_inconclusive() const;
    /// 0 all PASS, 1 any FAIL, 3 inconclusive-but-no-fail
    int exit_code() const;
};

} // namespace ehall

#endif
