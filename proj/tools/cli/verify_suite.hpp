#pragma once

// Runs every contracted invariant of the library at a set of (p,q) contexts
// and collects the audits of the printed recurrence / difference-equation
// theorems as findings. Invariants decide the exit status; findings never do.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "io.hpp"
#include "pqappell/rational.hpp"

namespace pqa::cli {

struct ContextSpec {
    Rational p;
    Rational q;
};

struct SuiteConfig {
    std::size_t order = 16;
    std::size_t samples = 5;
    std::uint64_t seed = 42;
    /// When set, replaces sampling and the distinguished points entirely.
    std::optional<std::vector<ContextSpec>> contexts;
};

/// Throws std::invalid_argument for order < 4 or samples < 1.
void validate(const SuiteConfig& config);

/// `samples` seeded points with q in (0,1) and p in (1,2), followed by (1,1)
/// and (1,1/2); or the explicit list.
std::vector<ContextSpec> suite_contexts(const SuiteConfig& config);

struct InvariantResult {
    std::string module;
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;
    std::string note;
    /// Audits of printed formulas are reported but never fail the run.
    bool gating = true;

    [[nodiscard]] bool passed() const { return failures == 0; }
};

struct ContextReport {
    ContextSpec context;
    std::vector<InvariantResult> invariants;
    std::vector<io::ErrataEntry> findings;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<ContextReport> contexts;

    [[nodiscard]] std::size_t invariant_count() const;
    [[nodiscard]] std::size_t failed_count() const;
    [[nodiscard]] bool all_passed() const { return failed_count() == 0; }
};

/// Contexts are evaluated concurrently; the report is ordered as suite_contexts().
SuiteReport run_verify_suite(const SuiteConfig& config);

/// Single context, exposed for tests.
ContextReport run_context_suite(const ContextSpec& spec, std::size_t order, std::uint64_t seed);

std::string report_text(const SuiteReport& report);
nlohmann::json report_json(const SuiteReport& report);
/// Flat array of errata entries across all contexts.
nlohmann::json errata_json(const SuiteReport& report);

}  // namespace pqa::cli
