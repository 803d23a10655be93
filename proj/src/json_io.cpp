#include "rydbench/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace rydbench {

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
    return j;
}

// Frequency-like fields are either bare numbers (already angular) or tagged
// objects {"value", "unit"}; "mhz" variants are ordinary frequencies and get
// scaled by 2*pi on ingestion.
double angular_value(const json& j, const std::string& field) {
    if (j.is_number())
        return j.get<double>();
    if (!j.is_object() || !j.contains("value") || !j.contains("unit"))
        throw std::runtime_error(field + ": expected number or {value, unit}");
    const double value = j.at("value").get<double>();
    const std::string unit = j.at("unit").get<std::string>();
    if (unit == "rad_per_us" || unit == "rad_per_us_um6")
        return value;
    if (unit == "mhz" || unit == "mhz_um6")
        return value * 2.0 * std::numbers::pi;
    throw std::runtime_error(field + ": unknown unit tag '" + unit + "'");
}

json tagged(double value, const char* unit) {
    return json{{"value", value}, {"unit", unit}};
}

} // namespace

json instance_to_json(const DuggInstance& inst) {
    json sites = json::array();
    for (const auto& site : inst.sites)
        sites.push_back({site.row, site.col});
    json edges = json::array();
    for (const auto& [i, j] : inst.edges)
        edges.push_back({i, j});

    json j{
        {"id", inst.id},
        {"rows", inst.rows},
        {"cols", inst.cols},
        {"spacing_um", inst.spacing_um},
        {"occupation_prob", inst.occupation_prob},
        {"seed", inst.seed},
        {"sites", std::move(sites)},
        {"edges", std::move(edges)},
    };
    if (inst.optimal_cost)
        j["optimal_cost"] = *inst.optimal_cost;
    return j;
}

DuggInstance instance_from_json(const json& j) {
    DuggInstance inst;
    inst.id = j.at("id").get<std::string>();
    inst.rows = j.at("rows").get<int>();
    inst.cols = j.at("cols").get<int>();
    inst.spacing_um = j.at("spacing_um").get<double>();
    inst.occupation_prob = j.value("occupation_prob", 1.0);
    inst.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& site : j.at("sites"))
        inst.sites.push_back({site.at(0).get<int>(), site.at(1).get<int>()});
    for (const auto& edge : j.at("edges"))
        inst.edges.emplace_back(edge.at(0).get<int>(), edge.at(1).get<int>());
    if (j.contains("optimal_cost") && !j.at("optimal_cost").is_null())
        inst.optimal_cost = j.at("optimal_cost").get<int>();
    return inst;
}

void save_instance(const DuggInstance& inst, const std::string& path) {
    atomic_write_file(path, instance_to_json(inst).dump(2) + "\n");
}

DuggInstance load_instance(const std::string& path) {
    return instance_from_json(read_json_file(path));
}

DeviceSpec device_from_json(const json& j) {
    DeviceSpec spec;
    spec.name = j.at("name").get<std::string>();
    spec.c6 = angular_value(j.at("c6"), "c6");
    spec.max_atoms = j.at("max_atoms").get<int>();
    spec.a_min_um = j.at("a_min_um").get<double>();
    spec.t_max_us = j.at("t_max_us").get<double>();
    spec.omega_max = angular_value(j.at("omega_max"), "omega_max");
    spec.delta_abs_max = angular_value(j.at("delta_abs_max"), "delta_abs_max");
    if (spec.c6 <= 0.0 || spec.max_atoms <= 0 || spec.a_min_um <= 0.0 ||
        spec.t_max_us <= 0.0 || spec.omega_max <= 0.0 || spec.delta_abs_max <= 0.0)
        throw std::runtime_error("device spec: all magnitudes must be positive");
    return spec;
}

json device_to_json(const DeviceSpec& spec) {
    return json{
        {"name", spec.name},
        {"c6", tagged(spec.c6, "rad_per_us_um6")},
        {"max_atoms", spec.max_atoms},
        {"a_min_um", spec.a_min_um},
        {"t_max_us", spec.t_max_us},
        {"omega_max", tagged(spec.omega_max, "rad_per_us")},
        {"delta_abs_max", tagged(spec.delta_abs_max, "rad_per_us")},
    };
}

DeviceSpec load_device(const std::string& path) {
    return device_from_json(read_json_file(path));
}

DeviceSpec resolve_device(const std::string& name_or_path) {
    if (std::filesystem::exists(name_or_path))
        return load_device(name_or_path);
    return builtin_device(name_or_path);
}

json waveform_to_json(const Waveform& waveform) {
    json points = json::array();
    for (const auto& pt : waveform.points)
        points.push_back({{"t_us", pt.t_us}, {"omega", pt.omega}, {"delta", pt.delta}});
    return json{
        {"unit_time", "us"},
        {"unit_omega", "rad_per_us"},
        {"unit_delta", "rad_per_us"},
        {"piecewise_constant", waveform.piecewise_constant},
        {"breakpoints", std::move(points)},
    };
}

Waveform waveform_from_json(const json& j) {
    Waveform wf;
    wf.piecewise_constant = j.value("piecewise_constant", false);
    for (const auto& pt : j.at("breakpoints"))
        wf.points.push_back({pt.at("t_us").get<double>(),
                             angular_value(pt.at("omega"), "omega"),
                             angular_value(pt.at("delta"), "delta")});
    wf.check();
    return wf;
}

namespace {

json optimizer_to_json(const OptimizerConfig& opt) {
    return json{
        {"max_evals", opt.max_evals},
        {"simplex_spread_tol", opt.simplex_spread_tol},
        {"reflection", opt.reflection},
        {"expansion", opt.expansion},
        {"contraction", opt.contraction},
        {"shrink", opt.shrink},
    };
}

OptimizerConfig optimizer_from_json(const json& j) {
    OptimizerConfig opt;
    opt.max_evals = j.value("max_evals", opt.max_evals);
    opt.simplex_spread_tol = j.value("simplex_spread_tol", opt.simplex_spread_tol);
    opt.reflection = j.value("reflection", opt.reflection);
    opt.expansion = j.value("expansion", opt.expansion);
    opt.contraction = j.value("contraction", opt.contraction);
    opt.shrink = j.value("shrink", opt.shrink);
    return opt;
}

} // namespace

json trained_params_to_json(const TrainedParams& trained) {
    return json{
        {"p", trained.params.p()},
        {"t_tot_us", trained.params.t_tot_us},
        {"omegas", trained.params.omegas},
        {"deltas", trained.params.deltas},
        {"provenance",
         {
             {"instance_ids", trained.instance_ids},
             {"seed", trained.seed},
             {"initial_objective", trained.initial_objective},
             {"final_objective", trained.final_objective},
             {"n_evals", trained.n_evals},
             {"config",
              {
                  {"dt_us", trained.config.dt_us},
                  {"delta_objective", trained.config.delta_objective},
                  {"penalty_weight", trained.config.penalty_weight},
                  {"sampled_objective", trained.config.sampled_objective},
                  {"objective_shots", trained.config.objective_shots},
                  {"optimizer", optimizer_to_json(trained.config.optimizer)},
              }},
         }},
    };
}

TrainedParams trained_params_from_json(const json& j) {
    TrainedParams trained;
    trained.params.t_tot_us = j.at("t_tot_us").get<double>();
    trained.params.omegas = j.at("omegas").get<std::vector<double>>();
    trained.params.deltas = j.at("deltas").get<std::vector<double>>();
    if (trained.params.p() != j.at("p").get<int>())
        throw std::runtime_error("trained params: p does not match array length");

    if (j.contains("provenance")) {
        const auto& prov = j.at("provenance");
        trained.instance_ids =
            prov.value("instance_ids", std::vector<std::string>{});
        trained.seed = prov.value("seed", std::uint64_t{0});
        trained.initial_objective = prov.value("initial_objective", 0.0);
        trained.final_objective = prov.value("final_objective", 0.0);
        trained.n_evals = prov.value("n_evals", 0);
        if (prov.contains("config")) {
            const auto& cfg = prov.at("config");
            trained.config.p = trained.params.p();
            trained.config.t_tot_us = trained.params.t_tot_us;
            trained.config.annealing_start = default_qaa(trained.params.t_tot_us);
            trained.config.dt_us = cfg.value("dt_us", trained.config.dt_us);
            trained.config.delta_objective =
                cfg.value("delta_objective", trained.config.delta_objective);
            trained.config.penalty_weight =
                cfg.value("penalty_weight", trained.config.penalty_weight);
            trained.config.sampled_objective =
                cfg.value("sampled_objective", trained.config.sampled_objective);
            trained.config.objective_shots =
                cfg.value("objective_shots", trained.config.objective_shots);
            if (cfg.contains("optimizer"))
                trained.config.optimizer = optimizer_from_json(cfg.at("optimizer"));
        }
    }
    return trained;
}

void save_trained_params(const TrainedParams& trained, const std::string& path) {
    atomic_write_file(path, trained_params_to_json(trained).dump(2) + "\n");
}

TrainedParams load_trained_params(const std::string& path) {
    return trained_params_from_json(read_json_file(path));
}

json metrics_to_json(const MetricsReport& report) {
    json j{
        {"n_shots", report.n_shots},
        {"n_valid", report.n_valid},
        {"has_valid", report.has_valid},
        {"valid_fraction", report.valid_fraction},
        {"best_cost", report.best_cost},
        {"c_opt", report.c_opt},
        {"c_worst", report.c_worst},
    };
    // JSON has no NaN; missing value states are encoded as null.
    if (report.has_valid)
        j["approximation_ratio"] = report.approximation_ratio;
    else
        j["approximation_ratio"] = nullptr;
    if (std::isnan(report.success_probability))
        j["success_probability"] = nullptr;
    else
        j["success_probability"] = report.success_probability;
    return j;
}

MetricsReport metrics_from_json(const json& j) {
    MetricsReport report;
    report.n_shots = j.at("n_shots").get<int>();
    report.n_valid = j.at("n_valid").get<int>();
    report.has_valid = j.at("has_valid").get<bool>();
    report.valid_fraction = j.at("valid_fraction").get<double>();
    report.best_cost = j.at("best_cost").get<double>();
    report.c_opt = j.at("c_opt").get<double>();
    report.c_worst = j.at("c_worst").get<double>();
    const auto& ratio = j.at("approximation_ratio");
    report.approximation_ratio = ratio.is_null() ? 0.0 : ratio.get<double>();
    const auto& succ = j.at("success_probability");
    report.success_probability = succ.is_null()
                                     ? std::numeric_limits<double>::quiet_NaN()
                                     : succ.get<double>();
    return report;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp);
        out << content;
        if (!out.good())
            throw std::runtime_error("short write to " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

} // namespace rydbench
