#ifndef RENEX_ACCEPTANCE_HPP
#define RENEX_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace renex {

/// Outcome of one verification experiment. `stats_json` carries only
/// deterministic statistics (no wall-clock data), so two runs of the same
/// build compare byte-identical.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::string stats_json;
    double seconds = 0.0;
};

struct SuiteResult {
    std::vector<CriterionResult> rows;
    bool all_pass = true;

    /// Deterministic serialization (excludes timings).
    std::string to_json() const;
};

/// Runs the built-in verification suite with fixed seeds. `quick` shrinks
/// replication counts for a fast smoke run; every statistical gate stays
/// the same where it is scale-free.
SuiteResult run_acceptance_suite(bool quick, std::uint64_t master_seed = 7);

}  // namespace renex

#endif
