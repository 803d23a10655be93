#pragma once

#include <string>

#include <json.hpp>

#include "rydbench/device.hpp"
#include "rydbench/instance.hpp"
#include "rydbench/metrics.hpp"
#include "rydbench/train.hpp"
#include "rydbench/waveform.hpp"

namespace rydbench {

using json = nlohmann::json;

// Instance files: {id, rows, cols, spacing_um, occupation_prob, seed,
// sites: [[r,c],...], edges: [[i,j],...], optimal_cost?}.
json instance_to_json(const DuggInstance& inst);
DuggInstance instance_from_json(const json& j);
void save_instance(const DuggInstance& inst, const std::string& path);
DuggInstance load_instance(const std::string& path);

// Device files carry explicit unit tags per frequency field:
//   "rad_per_us" / "rad_per_us_um6"  - stored value is already angular
//   "mhz" / "mhz_um6"                - ordinary frequency, scaled by 2*pi
DeviceSpec device_from_json(const json& j);
json device_to_json(const DeviceSpec& device);
DeviceSpec load_device(const std::string& path);

// Resolves a --device argument: an existing file path is loaded, otherwise
// the name must match a bundled spec.
DeviceSpec resolve_device(const std::string& name_or_path);

json waveform_to_json(const Waveform& waveform);
Waveform waveform_from_json(const json& j);

json trained_params_to_json(const TrainedParams& trained);
TrainedParams trained_params_from_json(const json& j);
void save_trained_params(const TrainedParams& trained, const std::string& path);
TrainedParams load_trained_params(const std::string& path);

json metrics_to_json(const MetricsReport& report);
MetricsReport metrics_from_json(const json& j);

// Writes content to path via a temp file + rename, so readers never observe
// partial files.
void atomic_write_file(const std::string& path, const std::string& content);

} // namespace rydbench
