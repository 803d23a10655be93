// Command-line front end: instance generation, exact/greedy solving,
// schedule training, benchmark campaigns, and report aggregation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rydbench/bench.hpp"
#include "rydbench/evolve.hpp"
#include "rydbench/json_io.hpp"
#include "rydbench/rng.hpp"
#include "rydbench/simd.hpp"
#include "rydbench/train.hpp"

namespace fs = std::filesystem;
using namespace rydbench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRunFailure = 1;
constexpr int kExitConfigError = 2;

SpamParams parse_spam(const std::string& text) {
    SpamParams spam;
    if (text.empty())
        return spam;
    double vals[4] = {0, 0, 0, 0};
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &vals[0], &vals[1], &vals[2],
                    &vals[3]) != 4)
        throw CLI::ValidationError("--spam expects eta,eps,eps_prime,flag_prob");
    spam.eta = vals[0];
    spam.eps = vals[1];
    spam.eps_prime = vals[2];
    spam.flag_prob = vals[3];
    for (double v : {spam.eta, spam.eps, spam.eps_prime, spam.flag_prob})
        if (v < 0.0 || v > 1.0)
            throw CLI::ValidationError("--spam rates must lie in [0,1]");
    return spam;
}

// Bare "mhz" schedule amplitudes are ordinary frequencies; the default reads
// them as already-angular rad/us.
double schedule_scale(const std::string& unit) {
    if (unit == "rad_per_us")
        return 1.0;
    if (unit == "mhz")
        return 2.0 * 3.14159265358979323846;
    throw CLI::ValidationError("--schedule-unit must be rad_per_us or mhz");
}

int cmd_gen(int rows, int cols, double p_occ, double spacing, int count,
            std::uint64_t seed, const std::string& out_dir, int oracle_cap,
            int max_retries) {
    fs::create_directories(out_dir);
    int written = 0;
    std::uint64_t next_seed = seed;
    for (int k = 0; k < count; ++k) {
        std::optional<DuggInstance> inst;
        for (int attempt = 0; attempt <= max_retries && !inst; ++attempt) {
            try {
                inst = generate_dugg(rows, cols, p_occ, spacing, next_seed);
            } catch (const std::runtime_error&) {
                next_seed = splitmix64(next_seed);    // empty draw; reseed
            }
        }
        if (!inst) {
            std::cerr << "gen: failed to draw a non-empty instance after "
                      << max_retries << " retries\n";
            return kExitRunFailure;
        }

        json j = instance_to_json(*inst);
        if (inst->n_qubits() <= oracle_cap) {
            j["optimal_cost"] = solve_mis_exact(*inst, oracle_cap).cost;
            j["bound_method"] = "exact";
        } else {
            j["greedy_cost"] = solve_mis_greedy(*inst).cost;
            j["bound_method"] = "greedy";
        }

        const fs::path path = fs::path(out_dir) / (inst->id + ".json");
        atomic_write_file(path.string(), j.dump(2) + "\n");
        std::cout << path.string() << "  n_qubits=" << inst->n_qubits()
                  << "  edges=" << inst->edges.size() << "\n";
        ++written;
        next_seed = splitmix64(next_seed);
    }
    std::cout << "wrote " << written << " instance files to " << out_dir << "\n";
    return kExitOk;
}

int cmd_solve(const std::vector<std::string>& files, int cap, bool greedy,
              bool write_back) {
    int failures = 0;
    for (const auto& file : files) {
        try {
            DuggInstance inst = load_instance(file);
            MisSolution sol;
            const char* method = "";
            if (!greedy && inst.n_qubits() <= cap) {
                sol = solve_mis_exact(inst, cap);
                method = "exact";
            } else {
                sol = solve_mis_greedy(inst);
                method = "greedy";
            }
            std::string bits;
            for (auto b : sol.selected)
                bits += b ? '1' : '0';
            std::cout << file << "  " << method << " cost=" << sol.cost
                      << "  set=" << bits << "\n";
            if (write_back && std::string(method) == "exact") {
                inst.optimal_cost = sol.cost;
                save_instance(inst, file);
            }
        } catch (const std::exception& err) {
            std::cerr << file << ": " << err.what() << "\n";
            ++failures;
        }
    }
    return failures ? kExitRunFailure : kExitOk;
}

int cmd_train(const std::vector<std::string>& files, int p, double t_tot,
              const std::string& device_arg, std::uint64_t seed,
              const std::string& out, double dt, int max_evals,
              double spread_tol, bool sampled, int shots, double scale) {
    if (files.empty()) {
        std::cerr << "train: no instance files given\n";
        return kExitConfigError;
    }
    std::vector<DuggInstance> instances;
    for (const auto& file : files)
        instances.push_back(load_instance(file));
    const DeviceSpec device = resolve_device(device_arg);

    TrainConfig config;
    config.p = p;
    config.t_tot_us = t_tot;
    config.dt_us = dt;
    config.sampled_objective = sampled;
    config.objective_shots = shots;
    config.optimizer.max_evals = max_evals;
    config.optimizer.simplex_spread_tol = spread_tol;
    config.annealing_start = default_qaa(t_tot);
    config.annealing_start.omega_max *= scale;
    config.annealing_start.delta_in *= scale;
    config.annealing_start.delta_fin *= scale;
    config.delta_objective = config.annealing_start.delta_fin;

    const TrainedParams trained = train_transfer_params(instances, device, config, seed);
    save_trained_params(trained, out);
    std::cout << "trained " << 2 * p << " parameters over " << instances.size()
              << " instances in " << trained.n_evals << " evaluations\n"
              << "objective " << trained.initial_objective << " -> "
              << trained.final_objective << "\n"
              << "wrote " << out << "\n";
    return kExitOk;
}

int cmd_run(const std::vector<std::string>& files, const std::string& device_arg,
            const std::string& protocol, double t_tot, double dt, int shots,
            int repeats, std::uint64_t seed, const std::string& spam_text,
            const std::string& params_file, const std::string& out_dir,
            double scale) {
    if (files.empty()) {
        std::cerr << "run: no instance files given\n";
        return kExitConfigError;
    }

    BenchmarkConfig config;
    config.device = resolve_device(device_arg);
    config.dt_us = dt;
    config.n_shots = shots;
    config.n_repeats = repeats;
    config.base_seed = seed;
    config.spam = parse_spam(spam_text);

    if (protocol == "qaa") {
        config.protocol = Protocol::qaa;
        config.qaa = default_qaa(t_tot);
        config.qaa.omega_max *= scale;
        config.qaa.delta_in *= scale;
        config.qaa.delta_fin *= scale;
    } else if (protocol == "qaoa") {
        config.protocol = Protocol::qaoa;
        if (params_file.empty()) {
            std::cerr << "run: --protocol qaoa requires --params\n";
            return kExitConfigError;
        }
        config.qaoa = load_trained_params(params_file).params;
    } else {
        std::cerr << "run: unknown protocol '" << protocol << "'\n";
        return kExitConfigError;
    }

    fs::create_directories(out_dir);
    std::string csv = kRunCsvHeader;
    int failures = 0;
    for (const auto& file : files) {
        try {
            const DuggInstance inst = load_instance(file);
            const RunRecord record = run_benchmark(config, inst);
            const fs::path record_path =
                fs::path(out_dir) / (record.instance_id + ".run.json");
            atomic_write_file(record_path.string(),
                              run_record_to_json(record).dump(2) + "\n");
            csv += run_record_csv_rows(record);
            std::cout << record.instance_id << "  r=" << record.r.mean
                      << "  valid=" << record.valid_fraction.mean << "\n";
        } catch (const std::exception& err) {
            std::cerr << file << ": " << err.what() << "\n";
            ++failures;
        }
    }
    const fs::path csv_path = fs::path(out_dir) / "results.csv";
    atomic_write_file(csv_path.string(), csv);
    std::cout << "wrote " << csv_path.string() << "\n";
    return failures ? kExitRunFailure : kExitOk;
}

int cmd_report(std::vector<std::string> record_files, const std::string& records_dir,
               const std::string& reference_file, const std::string& out_csv) {
    if (!records_dir.empty())
        for (const auto& entry : fs::directory_iterator(records_dir))
            if (entry.path().extension() == ".json" &&
                entry.path().string().ends_with(".run.json"))
                record_files.push_back(entry.path().string());
    if (record_files.empty()) {
        std::cerr << "report: no run records\n";
        return kExitConfigError;
    }
    std::sort(record_files.begin(), record_files.end());

    std::vector<RunRecord> records;
    int failures = 0;
    for (const auto& file : record_files) {
        try {
            std::ifstream in(file);
            if (!in)
                throw std::runtime_error("cannot open");
            json j;
            in >> j;
            records.push_back(run_record_from_json(j));
        } catch (const std::exception& err) {
            std::cerr << file << ": " << err.what() << "\n";
            ++failures;
        }
    }
    if (records.empty())
        return kExitRunFailure;

    std::optional<json> reference;
    if (!reference_file.empty()) {
        std::ifstream in(reference_file);
        if (!in) {
            std::cerr << "report: cannot open reference " << reference_file << "\n";
            return kExitConfigError;
        }
        reference.emplace();
        in >> *reference;
    }

    const auto summaries = summarize_records(records);
    const json* ref = reference ? &*reference : nullptr;
    std::cout << report_text_table(summaries, ref);
    if (!out_csv.empty()) {
        atomic_write_file(out_csv, report_csv(summaries, ref));
        std::cout << "wrote " << out_csv << "\n";
    }
    return failures ? kExitRunFailure : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MIS benchmarks for analog neutral-atom devices"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate DUGG instance files");
    int rows = 4, cols = 4, count = 1, oracle_cap = kDefaultOracleCap, retries = 64;
    double p_occ = 0.8, spacing = 5.0;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    gen->add_option("--rows", rows)->check(CLI::PositiveNumber);
    gen->add_option("--cols", cols)->check(CLI::PositiveNumber);
    gen->add_option("--p-occ", p_occ)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--spacing", spacing)->check(CLI::PositiveNumber);
    gen->add_option("--count", count)->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_dir);
    gen->add_option("--oracle-cap", oracle_cap);
    gen->add_option("--retries", retries);

    // solve
    auto* solve = app.add_subcommand("solve", "solve MIS on instance files");
    std::vector<std::string> solve_files;
    bool solve_greedy = false, solve_write = false;
    int solve_cap = kDefaultOracleCap;
    solve->add_option("files", solve_files)->required();
    solve->add_flag("--greedy", solve_greedy, "force the greedy heuristic");
    solve->add_flag("--write", solve_write, "store exact optima back into the files");
    solve->add_option("--cap", solve_cap);

    // train
    auto* train = app.add_subcommand("train", "train transfer schedule parameters");
    std::vector<std::string> train_files;
    int train_p = 10, train_max_evals = 2000, train_shots = 500;
    double train_t = 2.0, train_dt = 1e-3, train_tol = 1e-4;
    std::uint64_t train_seed = 1;
    std::string train_device = "pasqal_fresnel", train_out = "trained_params.json";
    std::string train_unit = "rad_per_us";
    bool train_sampled = false;
    train->add_option("files", train_files)->required();
    train->add_option("--p", train_p)->check(CLI::PositiveNumber);
    train->add_option("--t-tot", train_t)->check(CLI::PositiveNumber);
    train->add_option("--device", train_device);
    train->add_option("--seed", train_seed);
    train->add_option("--out", train_out);
    train->add_option("--dt", train_dt)->check(CLI::PositiveNumber);
    train->add_option("--max-evals", train_max_evals)->check(CLI::PositiveNumber);
    train->add_option("--spread-tol", train_tol)->check(CLI::PositiveNumber);
    train->add_flag("--sampled", train_sampled, "shot-based objective");
    train->add_option("--shots", train_shots)->check(CLI::PositiveNumber);
    train->add_option("--schedule-unit", train_unit,
                      "unit of the built-in 5.5 schedule amplitudes");

    // run
    auto* run = app.add_subcommand("run", "run a benchmark campaign");
    std::vector<std::string> run_files;
    std::string run_device = "pasqal_fresnel", run_protocol = "qaa";
    std::string run_spam, run_params, run_out = "runs", run_unit = "rad_per_us";
    double run_t = 4.0, run_dt = 1e-3;
    int run_shots = 500, run_repeats = 3;
    std::uint64_t run_seed = 1;
    run->add_option("files", run_files)->required();
    run->add_option("--device", run_device);
    run->add_option("--protocol", run_protocol)
        ->check(CLI::IsMember({"qaa", "qaoa"}));
    run->add_option("--t-tot", run_t)->check(CLI::PositiveNumber);
    run->add_option("--dt", run_dt)->check(CLI::PositiveNumber);
    run->add_option("--shots", run_shots)->check(CLI::PositiveNumber);
    run->add_option("--repeats", run_repeats)->check(CLI::PositiveNumber);
    run->add_option("--seed", run_seed);
    run->add_option("--spam", run_spam, "eta,eps,eps_prime,flag_prob");
    run->add_option("--params", run_params, "trained parameter file for qaoa");
    run->add_option("--out", run_out);
    run->add_option("--schedule-unit", run_unit,
                    "unit of the built-in 5.5 schedule amplitudes");

    // report
    auto* report = app.add_subcommand("report", "aggregate run records");
    std::vector<std::string> report_files;
    std::string report_dir, report_reference, report_out;
    report->add_option("files", report_files);
    report->add_option("--records", report_dir, "directory of .run.json files");
    report->add_option("--reference", report_reference, "hardware reference table");
    report->add_option("--out", report_out, "summary CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitConfigError;
    }

    try {
        if (gen->parsed())
            return cmd_gen(rows, cols, p_occ, spacing, count, seed, out_dir,
                           oracle_cap, retries);
        if (solve->parsed())
            return cmd_solve(solve_files, solve_cap, solve_greedy, solve_write);
        if (train->parsed())
            return cmd_train(train_files, train_p, train_t, train_device,
                             train_seed, train_out, train_dt, train_max_evals,
                             train_tol, train_sampled, train_shots,
                             schedule_scale(train_unit));
        if (run->parsed())
            return cmd_run(run_files, run_device, run_protocol, run_t, run_dt,
                           run_shots, run_repeats, run_seed, run_spam, run_params,
                           run_out, schedule_scale(run_unit));
        if (report->parsed())
            return cmd_report(report_files, report_dir, report_reference,
                              report_out);
    } catch (const CLI::ValidationError& err) {
        std::cerr << err.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRunFailure;
    }
    return kExitConfigError;
}
