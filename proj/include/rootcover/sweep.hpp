#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootcover/invariants.hpp"
#include "rootcover/logchern.hpp"
#include "rootcover/toric.hpp"

namespace rootcover {

enum class PartitionPolicy { Explicit, Asymptotic };
enum class OutputFormat { Csv, Json };

struct SweepConfig {
    PresetKind preset = PresetKind::PlanesP3;
    std::string basepair_path;  // overrides preset when set
    int d_min = 1;
    int d_max = 1;
    int r = 3;
    std::int64_t n_min = 7;
    std::int64_t n_max = 7;
    PartitionPolicy policy = PartitionPolicy::Explicit;
    std::vector<std::int64_t> nu;
    std::uint64_t seed = 1;
    std::int64_t trials = 10000;
    Strategy strategy = Strategy::Minimal;
    OutputFormat format = OutputFormat::Csv;
    std::string output;  // empty: stdout
    int digits = 6;
    int workers = 0;     // 0: ROOTCOVER_WORKERS or 1
};

// Flat "key = value" document, '#' starts a comment. Throws ConfigError.
SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi);

std::uint64_t cell_seed(std::uint64_t seed, std::int64_t n);

struct SweepRow {
    std::int64_t n = 0;
    std::optional<int> d;
    int r = 0;
    std::vector<std::int64_t> nu;
    std::string status;  // "ok" or the error code name
    std::string message;
    std::optional<InvariantReport> report;
};

std::vector<SweepRow> run_sweep(const SweepConfig& config);

int resolve_workers(int requested);

std::string rows_to_csv(const std::vector<SweepRow>& rows, int digits);
std::string rows_to_json(const std::vector<SweepRow>& rows);

} // namespace rootcover
