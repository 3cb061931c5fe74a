#pragma once

// Scan records (one JSON object per line) and the parallel range scan.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fltk/criterion.hpp"

namespace fltk {

inline constexpr const char* kToolVersion = "1.0.0";

struct ScanRecord {
    std::uint64_t p = 0;
    std::int64_t d = 0;
    bool regular = false;
    std::optional<std::uint64_t> first_case_n;
    std::optional<std::uint64_t> q;
    std::string second_case = "none";     // inert | split | none
    std::string verdict = "inconclusive";  // proven | first-case | second-case | inconclusive
    std::vector<std::string> reasons;
    std::string tool_version = kToolVersion;
    std::string criterion_variant = kCriterionVariant;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// "proven", "first-case", "second-case" or "inconclusive".
std::string verdict_label(const Verdict& v);

ScanRecord make_record(const Verdict& v);

/// Throws DomainError when a record breaks its own invariants.
void validate(const ScanRecord& r);

/// One line of JSON, no trailing newline; absent optionals are omitted.
std::string to_json_line(const ScanRecord& r);
/// Inverse of to_json_line; DomainError on malformed input.
ScanRecord parse_record(const std::string& line);

struct ScanOptions {
    std::int64_t d = -1;
    std::uint64_t p_max = 100;
    std::uint64_t n_max = kDefaultNMax;
    unsigned jobs = 1;
};

/// Evaluates every prime 5 <= p <= p_max on a pool of `jobs` workers and
/// hands the records to `sink` strictly in ascending p, from a single thread.
void scan_range(const ScanOptions& opts, const std::function<void(const ScanRecord&)>& sink);

std::vector<ScanRecord> scan_range(const ScanOptions& opts);

}  // namespace fltk
