#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcheck/catalog.hpp"

namespace hypcheck {

struct SuiteConfig {
    std::vector<std::string> ids;
    int samples = 200;
    long n_max = 8;
    std::uint64_t seed = 0;
    long numerator_bound = 12;
    std::vector<long> denominators = {1, 2, 3, 5, 7};
    int retry_cap = 1000;
};

struct Sample {
    long n = 0;
    std::vector<Rational> params;
};

// Draws from the per-(seed, id, position) stream, rejection-resampling
// until the entry's guards pass. Rejected draws do not consume positions.
// Throws GuardExhaustionError after retry_cap rejections.
Sample sample_params(const SuiteConfig& config, const IdentityEntry& entry,
                     std::uint64_t position);

struct Counterexample {
    std::uint64_t position = 0;
    Sample sample;
    std::string lhs;
    std::string rhs;
};

struct IdentityStats {
    std::string id;
    int holds = 0;
    int fails = 0;
    int skipped = 0;
    std::optional<Counterexample> first_fail;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<IdentityStats> per_identity;
    double wall_seconds = 0.0;

    int total_holds() const;
    int total_fails() const;
    int total_skipped() const;
};

// Expands an id selector: "all", a comma-separated list of catalog ids, and
// numeric-suffix ranges like "TI1..TI6". Throws UnknownIdError.
std::vector<std::string> resolve_ids(const std::string& selector);

// Runs the configured suite. Samples within a suite may be checked on up to
// `jobs` threads; the report is assembled by stream position, so thread
// count never changes the result.
SuiteReport run_suite(const SuiteConfig& config, int jobs = 1);

// Deterministic report serialization: identical config gives byte-identical
// JSON. Wall time is deliberately text-only.
nlohmann::ordered_json report_to_json(const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

} // namespace hypcheck
