#include "rydbench/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rydbench/evolve.hpp"
#include "rydbench/rng.hpp"

namespace rydbench {

const char* kRunCsvHeader =
    "instance,n_qubits,protocol,t_tot_us,repeat,r,valid_fraction,"
    "success_probability,best_cost\n";

const char* protocol_name(Protocol p) {
    return p == Protocol::qaa ? "qaa" : "qaoa";
}

double BenchmarkConfig::t_tot_us() const {
    return protocol == Protocol::qaa ? qaa.t_tot_us() : qaoa.t_tot_us;
}

std::uint64_t repeat_seed(std::uint64_t base_seed, int repeat) {
    return splitmix64(base_seed + static_cast<std::uint64_t>(repeat));
}

namespace {

constexpr std::uint64_t kSampleSalt = 0x73616d706c65ull;    // "sample"
constexpr std::uint64_t kSpamSalt = 0x7370616dull;          // "spam"

// Shortest round-trip formatting; identical runs must emit identical bytes.
std::string fmt_double(double v) {
    if (std::isnan(v))
        return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a_update(std::uint64_t hash, std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
        hash ^= (value >> (8 * byte)) & 0xFFull;
        hash *= 0x100000001B3ull;
    }
    return hash;
}

std::uint64_t digest_samples(const SampleSet& samples) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    hash = fnv1a_update(hash, static_cast<std::uint64_t>(samples.n_shots));
    for (const auto& group : samples.shots) {
        hash = fnv1a_update(hash, group.bits);
        hash = fnv1a_update(hash, static_cast<std::uint64_t>(group.count));
        hash = fnv1a_update(hash, group.flagged ? 1 : 0);
    }
    return hash;
}

Aggregate aggregate_of(const std::vector<double>& values) {
    Aggregate agg;
    std::vector<double> finite;
    for (double v : values)
        if (!std::isnan(v))
            finite.push_back(v);
    if (finite.empty()) {
        agg.mean = std::numeric_limits<double>::quiet_NaN();
        agg.stddev = std::numeric_limits<double>::quiet_NaN();
        return agg;
    }
    double sum = 0.0;
    for (double v : finite)
        sum += v;
    agg.mean = sum / static_cast<double>(finite.size());
    if (finite.size() > 1) {
        double sq = 0.0;
        for (double v : finite)
            sq += (v - agg.mean) * (v - agg.mean);
        agg.stddev = std::sqrt(sq / static_cast<double>(finite.size() - 1));
    }
    return agg;
}

json spam_to_json(const SpamParams& spam) {
    return json{{"eta", spam.eta},
                {"eps", spam.eps},
                {"eps_prime", spam.eps_prime},
                {"flag_prob", spam.flag_prob}};
}

} // namespace

RunRecord run_benchmark(const BenchmarkConfig& config, const DuggInstance& inst) {
    if (inst.n_qubits() > kMaxSimQubits)
        throw std::runtime_error("instance " + inst.id + " exceeds the simulator cap (" +
                                 std::to_string(inst.n_qubits()) + " qubits)");

    const Waveform waveform = config.protocol == Protocol::qaa
                                  ? build_qaa_schedule(config.qaa)
                                  : build_qaoa_schedule(config.qaoa);
    const auto violations = validate_schedule(waveform, config.device);
    if (!violations.empty()) {
        std::string msg = "schedule violates " + config.device.name + ":";
        for (const auto& v : violations)
            msg += "\n  " + v.describe();
        throw std::runtime_error(msg);
    }

    const RydbergTerms terms = build_rydberg_terms(inst, config.device);

    RunRecord record;
    record.instance_id = inst.id;
    record.n_qubits = inst.n_qubits();
    record.waveform = waveform;

    if (inst.optimal_cost) {
        record.c_opt = *inst.optimal_cost;
        record.c_opt_exact = true;
    } else if (inst.n_qubits() <= config.oracle_cap) {
        record.c_opt = solve_mis_exact(inst, config.oracle_cap).cost;
        record.c_opt_exact = true;
    } else {
        record.c_opt = solve_mis_greedy(inst).cost;
        record.c_opt_exact = false;
    }

    std::vector<std::uint64_t> optimal_set;
    if (record.c_opt_exact && inst.n_qubits() <= config.oracle_cap)
        optimal_set = enumerate_optimal_sets(inst, config.oracle_cap);

    record.config_snapshot = json{
        {"device", config.device.name},
        {"protocol", protocol_name(config.protocol)},
        {"t_tot_us", config.t_tot_us()},
        {"dt_us", config.dt_us},
        {"n_shots", config.n_shots},
        {"n_repeats", config.n_repeats},
        {"base_seed", config.base_seed},
        {"spam", spam_to_json(config.spam)},
    };

    EvolveOptions options;
    options.dt_us = config.dt_us;
    const StateVector state = evolve_ground(terms, waveform, options);

    const CostModel cost;
    std::vector<double> rs, valids, succs, bests;
    for (int rep = 0; rep < config.n_repeats; ++rep) {
        const std::uint64_t rep_seed = repeat_seed(config.base_seed, rep);
        SampleSet samples =
            sample(state, config.n_shots, splitmix64(rep_seed ^ kSampleSalt));
        samples = apply_spam(samples, config.spam, splitmix64(rep_seed ^ kSpamSalt));
        const SampleSet kept = post_select(samples);

        RepeatResult result;
        result.repeat = rep;
        result.seed = rep_seed;
        result.sample_digest = digest_samples(kept);
        result.metrics = score_samples(kept, inst, cost, record.c_opt,
                                       optimal_set.empty() ? nullptr : &optimal_set);
        record.repeats.push_back(result);

        rs.push_back(result.metrics.has_valid ? result.metrics.approximation_ratio
                                              : std::numeric_limits<double>::quiet_NaN());
        valids.push_back(result.metrics.valid_fraction);
        succs.push_back(result.metrics.success_probability);
        bests.push_back(result.metrics.best_cost);
    }

    record.r = aggregate_of(rs);
    record.valid_fraction = aggregate_of(valids);
    record.success_probability = aggregate_of(succs);
    record.best_cost = aggregate_of(bests);
    return record;
}

json run_record_to_json(const RunRecord& record) {
    json repeats = json::array();
    for (const auto& rep : record.repeats)
        repeats.push_back({
            {"repeat", rep.repeat},
            {"seed", rep.seed},
            {"sample_digest", rep.sample_digest},
            {"metrics", metrics_to_json(rep.metrics)},
        });

    auto agg = [](const Aggregate& a) {
        json j;
        j["mean"] = std::isnan(a.mean) ? json(nullptr) : json(a.mean);
        j["std"] = std::isnan(a.stddev) ? json(nullptr) : json(a.stddev);
        return j;
    };

    return json{
        {"instance_id", record.instance_id},
        {"n_qubits", record.n_qubits},
        {"config", record.config_snapshot},
        {"waveform", waveform_to_json(record.waveform)},
        {"c_opt", record.c_opt},
        {"c_opt_exact", record.c_opt_exact},
        {"repeats", std::move(repeats)},
        {"aggregate",
         {
             {"r", agg(record.r)},
             {"valid_fraction", agg(record.valid_fraction)},
             {"success_probability", agg(record.success_probability)},
             {"best_cost", agg(record.best_cost)},
         }},
    };
}

namespace {

Aggregate aggregate_from_json(const json& j) {
    Aggregate agg;
    agg.mean = j.at("mean").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                      : j.at("mean").get<double>();
    agg.stddev = j.at("std").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                       : j.at("std").get<double>();
    return agg;
}

} // namespace

RunRecord run_record_from_json(const json& j) {
    RunRecord record;
    record.instance_id = j.at("instance_id").get<std::string>();
    record.n_qubits = j.at("n_qubits").get<int>();
    record.config_snapshot = j.at("config");
    record.waveform = waveform_from_json(j.at("waveform"));
    record.c_opt = j.at("c_opt").get<double>();
    record.c_opt_exact = j.at("c_opt_exact").get<bool>();
    for (const auto& rep : j.at("repeats")) {
        RepeatResult result;
        result.repeat = rep.at("repeat").get<int>();
        result.seed = rep.at("seed").get<std::uint64_t>();
        result.sample_digest = rep.at("sample_digest").get<std::uint64_t>();
        result.metrics = metrics_from_json(rep.at("metrics"));
        record.repeats.push_back(result);
    }
    const auto& agg = j.at("aggregate");
    record.r = aggregate_from_json(agg.at("r"));
    record.valid_fraction = aggregate_from_json(agg.at("valid_fraction"));
    record.success_probability = aggregate_from_json(agg.at("success_probability"));
    record.best_cost = aggregate_from_json(agg.at("best_cost"));
    return record;
}

std::string run_record_csv_rows(const RunRecord& record) {
    const std::string protocol =
        record.config_snapshot.at("protocol").get<std::string>();
    const double t_tot = record.config_snapshot.at("t_tot_us").get<double>();

    std::string out;
    auto prefix = [&](const std::string& repeat_label) {
        out += record.instance_id;
        out += ',';
        out += std::to_string(record.n_qubits);
        out += ',';
        out += protocol;
        out += ',';
        out += fmt_double(t_tot);
        out += ',';
        out += repeat_label;
        out += ',';
    };

    for (const auto& rep : record.repeats) {
        prefix(std::to_string(rep.repeat));
        out += rep.metrics.has_valid ? fmt_double(rep.metrics.approximation_ratio)
                                     : "nan";
        out += ',';
        out += fmt_double(rep.metrics.valid_fraction);
        out += ',';
        out += fmt_double(rep.metrics.success_probability);
        out += ',';
        out += fmt_double(rep.metrics.best_cost);
        out += '\n';
    }
    prefix("mean");
    out += fmt_double(record.r.mean) + ',' + fmt_double(record.valid_fraction.mean) +
           ',' + fmt_double(record.success_probability.mean) + ',' +
           fmt_double(record.best_cost.mean) + '\n';
    prefix("std");
    out += fmt_double(record.r.stddev) + ',' +
           fmt_double(record.valid_fraction.stddev) + ',' +
           fmt_double(record.success_probability.stddev) + ',' +
           fmt_double(record.best_cost.stddev) + '\n';
    return out;
}

std::vector<SizeSummary> summarize_records(const std::vector<RunRecord>& records) {
    std::map<int, std::vector<const RunRecord*>> by_size;
    for (const auto& record : records)
        by_size[record.n_qubits].push_back(&record);

    std::vector<SizeSummary> summaries;
    for (const auto& [n_qubits, group] : by_size) {
        SizeSummary summary;
        summary.n_qubits = n_qubits;
        std::vector<double> rs, valids, succs, bests;
        double c_opt_sum = 0.0;
        for (const auto* record : group) {
            c_opt_sum += record->c_opt;
            for (const auto& rep : record->repeats) {
                ++summary.n_runs;
                rs.push_back(rep.metrics.has_valid
                                 ? rep.metrics.approximation_ratio
                                 : std::numeric_limits<double>::quiet_NaN());
                valids.push_back(rep.metrics.valid_fraction);
                succs.push_back(rep.metrics.success_probability);
                bests.push_back(rep.metrics.best_cost);
            }
        }
        summary.r = aggregate_of(rs);
        summary.valid_fraction = aggregate_of(valids);
        summary.success_probability = aggregate_of(succs);
        summary.best_cost = aggregate_of(bests);
        summary.c_opt_mean = c_opt_sum / static_cast<double>(group.size());
        summaries.push_back(summary);
    }
    return summaries;
}

namespace {

// Reference rows are keyed by qubit count; returns NaN when a column is
// missing so CSV cells stay well-defined.
double reference_lookup(const json& table, int n_qubits, const char* metric,
                        const char* device) {
    for (const auto& row : table.at("rows")) {
        if (row.at("n_q").get<int>() != n_qubits)
            continue;
        if (row.contains(metric) && row.at(metric).contains(device))
            return row.at(metric).at(device).get<double>();
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace

std::string report_csv(const std::vector<SizeSummary>& summaries,
                       const json* reference_table) {
    std::string out =
        "n_qubits,n_runs,r_mean,r_std,valid_mean,valid_std,success_mean,"
        "success_std,best_cost_mean,best_cost_std,c_opt_mean";
    if (reference_table)
        out += ",r_ref_fresnel,r_ref_aquila,valid_ref_fresnel,valid_ref_aquila";
    out += '\n';

    for (const auto& s : summaries) {
        out += std::to_string(s.n_qubits) + ',' + std::to_string(s.n_runs) + ',' +
               fmt_double(s.r.mean) + ',' + fmt_double(s.r.stddev) + ',' +
               fmt_double(s.valid_fraction.mean) + ',' +
               fmt_double(s.valid_fraction.stddev) + ',' +
               fmt_double(s.success_probability.mean) + ',' +
               fmt_double(s.success_probability.stddev) + ',' +
               fmt_double(s.best_cost.mean) + ',' + fmt_double(s.best_cost.stddev) +
               ',' + fmt_double(s.c_opt_mean);
        if (reference_table) {
            out += ',' +
                   fmt_double(reference_lookup(*reference_table, s.n_qubits, "r",
                                               "pasqal_fresnel")) +
                   ',' +
                   fmt_double(reference_lookup(*reference_table, s.n_qubits, "r",
                                               "quera_aquila")) +
                   ',' +
                   fmt_double(reference_lookup(*reference_table, s.n_qubits,
                                               "valid", "pasqal_fresnel")) +
                   ',' +
                   fmt_double(reference_lookup(*reference_table, s.n_qubits,
                                               "valid", "quera_aquila"));
        }
        out += '\n';
    }
    return out;
}

std::string report_text_table(const std::vector<SizeSummary>& summaries,
                              const json* reference_table) {
    std::ostringstream out;
    char line[256];
    if (reference_table) {
        out << "  N_q   runs   r (sim)          valid (sim)      r fres/aqui     "
               "valid fres/aqui\n";
        for (const auto& s : summaries) {
            std::snprintf(line, sizeof(line),
                          "%5d %6d   %.4f +- %.4f  %.4f +- %.4f  %.4f / %.4f  "
                          "%.3f / %.3f\n",
                          s.n_qubits, s.n_runs, s.r.mean, s.r.stddev,
                          s.valid_fraction.mean, s.valid_fraction.stddev,
                          reference_lookup(*reference_table, s.n_qubits, "r",
                                           "pasqal_fresnel"),
                          reference_lookup(*reference_table, s.n_qubits, "r",
                                           "quera_aquila"),
                          reference_lookup(*reference_table, s.n_qubits, "valid",
                                           "pasqal_fresnel"),
                          reference_lookup(*reference_table, s.n_qubits, "valid",
                                           "quera_aquila"));
            out << line;
        }
    } else {
        out << "  N_q   runs   r                valid            p_success       "
               "best/opt\n";
        for (const auto& s : summaries) {
            std::snprintf(line, sizeof(line),
                          "%5d %6d   %.4f +- %.4f  %.4f +- %.4f  %.4f +- %.4f  "
                          "%.2f / %.2f\n",
                          s.n_qubits, s.n_runs, s.r.mean, s.r.stddev,
                          s.valid_fraction.mean, s.valid_fraction.stddev,
                          s.success_probability.mean, s.success_probability.stddev,
                          s.best_cost.mean, s.c_opt_mean);
            out << line;
        }
    }
    return out.str();
}

} // namespace rydbench
