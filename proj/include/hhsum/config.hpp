#pragma once

// Process-wide engine settings. configure() must not race with evaluation;
// set it up once before starting work.

#include <cstdint>
#include <string>

namespace hhsum {

struct EngineConfig {
    int precision_digits = 30;
    std::int64_t oracle_max_terms = 1000000;
    std::int64_t euler_truncation = 100000;
    double default_tolerance = 1e-8;

    // Oracle: terms below this index are formed from exact rationals.
    std::int64_t exact_terms = 64;
    // Oracle: direct head length before the tail model takes over.
    std::int64_t oracle_head = 256;
    // Extra decimal digits carried beyond precision_digits.
    int guard_digits = 20;

    /// Throws DomainError when a field is out of range.
    void validate() const;
};

const EngineConfig& config();

/// Installs `cfg`, sets the working precision and drops all numeric caches.
void configure(const EngineConfig& cfg);

/// Bumped by every configure(); numeric caches compare against it.
std::uint64_t config_generation();

/// Applies HHSUM_PRECISION (if set) on top of `base`.
EngineConfig apply_environment(EngineConfig base);

/// Reads key=value lines or a JSON object from `path` on top of `base`.
/// Recognized keys are the EngineConfig field names.
EngineConfig load_config_file(const std::string& path, EngineConfig base);

}  // namespace hhsum
