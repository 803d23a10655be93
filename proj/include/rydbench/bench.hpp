#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rydbench/device.hpp"
#include "rydbench/instance.hpp"
#include "rydbench/json_io.hpp"
#include "rydbench/metrics.hpp"
#include "rydbench/schedule.hpp"

namespace rydbench {

enum class Protocol { qaa, qaoa };

const char* protocol_name(Protocol p);

// One benchmark campaign: a schedule, an experimental design (shots and
// repeats), and the readout model, applied to a list of instances.
struct BenchmarkConfig {
    DeviceSpec device;
    Protocol protocol = Protocol::qaa;
    QaaParams qaa;
    QaoaParams qaoa;
    double dt_us = 1e-3;
    int n_shots = 500;
    int n_repeats = 3;
    std::uint64_t base_seed = 1;
    SpamParams spam;
    int oracle_cap = kDefaultOracleCap;

    double t_tot_us() const;
};

struct RepeatResult {
    int repeat = 0;
    std::uint64_t seed = 0;
    std::uint64_t sample_digest = 0;    // FNV-1a over the post-selected shots
    MetricsReport metrics;
};

struct Aggregate {
    double mean = 0.0;
    double stddev = 0.0;    // sample standard deviation over repeats
};

struct RunRecord {
    std::string instance_id;
    int n_qubits = 0;
    json config_snapshot;
    Waveform waveform;
    double c_opt = 0.0;
    bool c_opt_exact = false;
    std::vector<RepeatResult> repeats;
    Aggregate r;
    Aggregate valid_fraction;
    Aggregate success_probability;
    Aggregate best_cost;
};

// Seed for repeat k of a campaign, per the documented derivation
// splitmix64(base_seed + k); campaigns stay extensible without reshuffling
// earlier repeats.
std::uint64_t repeat_seed(std::uint64_t base_seed, int repeat);

// Builds the campaign waveform, validates it against the device, evolves,
// samples, applies SPAM, post-selects, and scores each repeat. Throws on
// schedule violations or instances beyond the simulator/oracle caps.
RunRecord run_benchmark(const BenchmarkConfig& config, const DuggInstance& inst);

json run_record_to_json(const RunRecord& record);
RunRecord run_record_from_json(const json& j);

// Per-repeat CSV rows plus mean/std aggregate rows for one record.
std::string run_record_csv_rows(const RunRecord& record);
extern const char* kRunCsvHeader;

// Per-size summary used by the report command, optionally joined with the
// bundled hardware reference table.
struct SizeSummary {
    int n_qubits = 0;
    int n_runs = 0;
    Aggregate r;
    Aggregate valid_fraction;
    Aggregate success_probability;
    Aggregate best_cost;
    double c_opt_mean = 0.0;
};

std::vector<SizeSummary> summarize_records(const std::vector<RunRecord>& records);

std::string report_csv(const std::vector<SizeSummary>& summaries,
                       const json* reference_table);

std::string report_text_table(const std::vector<SizeSummary>& summaries,
                              const json* reference_table);

} // namespace rydbench
