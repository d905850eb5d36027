// Copyright 2026 The bosonrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bosonrace/distributions.h"
#include "bosonrace/error.h"
#include "bosonrace/formats.h"
#include "bosonrace/interferometer.h"
#include "bosonrace/race.h"
#include "bosonrace/rng.h"
#include "bosonrace/validation.h"

namespace bosonrace::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kUnitarityTolerance = 1e-12;
// Loaded matrices and distribution sums are held to the normalization tolerance.
constexpr double kNormalizationTolerance = 1e-10;

// Substream indices under the master --seed.
constexpr uint64_t kMatrixStream = 0;
constexpr uint64_t kSampleStream = 1;

struct Options {
    uint64_t seed = 0;
    std::string out = ".";
    bool error_json = false;

    bool haar = false;
    std::string mesh;
    std::string matrix;
    size_t modes = 9;
    size_t photons = 3;
    std::string input;
    std::string restriction = "no-collision";
    std::string model = "boson";
    size_t count = 1000;

    std::string events;
    std::string hypothesis = "boson";
    std::string bayes_against = "uniform";
    std::string counter_against = "distinguishable";
    double a1 = CounterThresholds{}.a1;
    double a2 = CounterThresholds{}.a2;

    bool defaults = false;
    std::string machines;

    std::string config;
};

std::string read_text(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) {
        throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
    }
}

fs::path prepare_out_dir(const std::string &out) {
    fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw Error(ErrorKind::Io, "cannot create output directory '" + out + "'");
    }
    return dir;
}

std::vector<size_t> parse_mode_list(const std::string &text) {
    std::vector<size_t> modes;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != token.size()) {
            throw Error(ErrorKind::Config, "bad mode index '" + token + "' in --input");
        }
        modes.push_back(value);
    }
    if (modes.empty()) {
        throw Error(ErrorKind::Config, "--input lists no modes");
    }
    return modes;
}

std::string join_modes(const std::vector<size_t> &modes) {
    std::string out;
    for (size_t m : modes) {
        out += (out.empty() ? "" : ",") + std::to_string(m);
    }
    return out;
}

/// Shared matrix, input and restriction handling for dist, sample and validate.
struct Setup {
    ComplexMatrix u;
    ModeConfig input;
    Restriction restriction;
};

Setup resolve_setup(Options &o, bool modes_given, bool photons_given, json &config) {
    ComplexMatrix u = [&] {
        if (!o.matrix.empty()) {
            ComplexMatrix loaded = matrix_from_json(read_text(o.matrix));
            if (modes_given && loaded.rows() != o.modes) {
                throw Error(ErrorKind::Dimension, "--matrix has " + std::to_string(loaded.rows()) + " modes, -m says " +
                                                      std::to_string(o.modes));
            }
            auto report = check_unitary(loaded, kNormalizationTolerance);
            if (!report.pass) {
                throw Error(ErrorKind::Domain, "matrix is not unitary (deviation " + format_real(report.max_deviation) + ")");
            }
            config["matrix"] = o.matrix;
            return loaded;
        }
        config["modes"] = o.modes;
        return haar_unitary(o.modes, derive_seed(o.seed, kMatrixStream));
    }();
    size_t m = u.rows();

    std::vector<size_t> occupied;
    if (!o.input.empty()) {
        occupied = parse_mode_list(o.input);
        if (photons_given && occupied.size() != o.photons) {
            throw Error(ErrorKind::Config, "--input places " + std::to_string(occupied.size()) + " photons but -n is " +
                                               std::to_string(o.photons));
        }
    } else {
        if (o.photons > m) {
            throw Error(ErrorKind::Config, "-n exceeds the number of modes");
        }
        occupied.resize(o.photons);
        std::iota(occupied.begin(), occupied.end(), 0);
    }
    ModeConfig input = ModeConfig::from_modes(m, occupied);
    config["input"] = join_modes(occupied);
    config["photons"] = occupied.size();

    Restriction restriction = parse_restriction(o.restriction);
    config["restriction"] = std::string(to_string(restriction));
    return Setup{std::move(u), std::move(input), restriction};
}

void check_normalized(const OutcomeDistribution &dist) {
    double sum = std::accumulate(dist.probabilities.begin(), dist.probabilities.end(), 0.0);
    if (std::abs(sum - 1) > kNormalizationTolerance) {
        throw Error(ErrorKind::Domain, "distribution sums to " + format_real(sum) + ", not 1");
    }
}

void write_config(const fs::path &dir, const std::string &command, json config) {
    config["command"] = command;
    write_text(dir / (command + ".config.json"), config.dump(2) + "\n");
}

json base_config(const Options &o) {
    return json{{"seed", o.seed}, {"out", o.out}};
}

int cmd_matrix(Options &o, bool modes_given, std::ostream &out) {
    if (o.haar == !o.mesh.empty()) {
        throw Error(ErrorKind::Config, "matrix needs exactly one of --haar or --mesh");
    }
    json config = base_config(o);
    ComplexMatrix u(1, 1);
    if (o.haar) {
        u = haar_unitary(o.modes, derive_seed(o.seed, kMatrixStream));
        config["haar"] = true;
        config["modes"] = o.modes;
    } else {
        MeshSpec spec = mesh_from_json(read_text(o.mesh));
        if (modes_given && spec.modes != o.modes) {
            throw Error(ErrorKind::Dimension, "mesh has " + std::to_string(spec.modes) + " modes, -m says " +
                                                  std::to_string(o.modes));
        }
        u = mesh_unitary(spec);
        config["mesh"] = o.mesh;
    }
    auto report = check_unitary(u, kUnitarityTolerance);
    fs::path dir = prepare_out_dir(o.out);
    write_text(dir / "matrix.json", matrix_to_json(u));
    write_config(dir, "matrix", config);
    out << "wrote " << (dir / "matrix.json").string() << " (" << u.rows() << "x" << u.cols() << ")\n";
    out << "unitarity deviation " << format_real(report.max_deviation) << "\n";
    if (!report.pass) {
        throw Error(ErrorKind::Domain, "matrix fails the unitarity check at " + format_real(kUnitarityTolerance));
    }
    return 0;
}

int cmd_dist(Options &o, bool modes_given, bool photons_given, std::ostream &out) {
    json config = base_config(o);
    Setup s = resolve_setup(o, modes_given, photons_given, config);
    Model model = parse_model(o.model);
    config["model"] = std::string(to_string(model));

    OutcomeDistribution dist = model_distribution(model, s.u, s.input, s.restriction);
    check_normalized(dist);

    fs::path dir = prepare_out_dir(o.out);
    std::ostringstream csv;
    write_distribution_csv(csv, dist);
    write_text(dir / "distribution.csv", csv.str());
    write_text(dir / "distribution.json", distribution_metadata(dist, model).dump(2) + "\n");
    write_config(dir, "dist", config);
    out << "wrote " << (dir / "distribution.csv").string() << " (" << dist.size() << " outcomes, mass "
        << format_real(dist.mass) << ")\n";
    return 0;
}

int cmd_sample(Options &o, bool modes_given, bool photons_given, std::ostream &out) {
    json config = base_config(o);
    Setup s = resolve_setup(o, modes_given, photons_given, config);
    Model model = parse_model(o.model);
    config["model"] = std::string(to_string(model));
    config["count"] = o.count;

    OutcomeDistribution dist = model_distribution(model, s.u, s.input, s.restriction);
    check_normalized(dist);
    EventStream events =
        draw_samples(dist, o.count, derive_seed(o.seed, kSampleStream), std::string(to_string(model)));

    fs::path dir = prepare_out_dir(o.out);
    std::ostringstream csv;
    write_events_csv(csv, events, s.restriction);
    write_text(dir / "events.csv", csv.str());
    write_text(
        dir / "events.json",
        events_sidecar(events, s.restriction, s.u.rows(), s.input.num_photons()).dump(2) + "\n");
    write_config(dir, "sample", config);
    out << "wrote " << (dir / "events.csv").string() << " (" << events.events.size() << " events)\n";
    return 0;
}

int cmd_validate(Options &o, bool modes_given, bool photons_given, std::ostream &out) {
    json config = base_config(o);
    Setup s = resolve_setup(o, modes_given, photons_given, config);
    Model hypothesis = parse_model(o.hypothesis);
    Model bayes_against = parse_model(o.bayes_against);
    Model counter_against = parse_model(o.counter_against);
    CounterThresholds thresholds{.a1 = o.a1, .a2 = o.a2};
    config["events"] = o.events;
    config["hypothesis"] = std::string(to_string(hypothesis));
    config["bayes-against"] = std::string(to_string(bayes_against));
    config["counter-against"] = std::string(to_string(counter_against));
    config["a1"] = o.a1;
    config["a2"] = o.a2;

    std::istringstream events_text(read_text(o.events));
    EventStream events = read_events_csv(events_text, s.u.rows());
    if (events.events.empty()) {
        throw Error(ErrorKind::Domain, "'" + o.events + "' holds no events");
    }

    auto dist_q = model_distribution(hypothesis, s.u, s.input, s.restriction);
    auto dist_bayes = model_distribution(bayes_against, s.u, s.input, s.restriction);
    auto dist_counter = model_distribution(counter_against, s.u, s.input, s.restriction);

    BayesianTrace bayes = bayesian_trace(events, dist_q, dist_bayes);
    CounterTrace counter = counter_trace(events, dist_q, dist_counter, thresholds);
    Verdict verdict = make_verdict(bayes, counter);
    verdict.metrics = metrics(empirical_frequencies(events, dist_q.outcomes), dist_q);

    fs::path dir = prepare_out_dir(o.out);
    std::ostringstream bayes_csv, counter_csv;
    write_bayesian_csv(bayes_csv, bayes);
    write_counter_csv(counter_csv, counter);
    write_text(dir / "bayes_trace.csv", bayes_csv.str());
    write_text(dir / "counter_trace.csv", counter_csv.str());
    write_text(dir / "verdict.json", verdict_to_json(verdict).dump(2) + "\n");
    write_config(dir, "validate", config);
    out << "events " << events.events.size() << "\n";
    out << "final posterior " << format_real(verdict.final_posterior) << "\n";
    out << "final counter " << verdict.final_counter << "\n";
    out << "similarity " << format_real(verdict.metrics->similarity) << ", distance "
        << format_real(verdict.metrics->distance) << "\n";
    return 0;
}

int cmd_race(Options &o, std::ostream &out) {
    json config = base_config(o);
    std::vector<MachineSpec> machines = default_machines();
    if (!o.machines.empty()) {
        machines = machines_from_json(read_text(o.machines));
        config["machines"] = o.machines;
    }
    if (o.defaults) {
        config["defaults"] = true;
    }
    RaceTable table = race_table(machines, default_quantum_runs(), default_photon_numbers(), default_epsilons());

    fs::path dir = prepare_out_dir(o.out);
    std::ostringstream csv;
    write_race_csv(csv, table);
    write_text(dir / "race_table.csv", csv.str());
    write_text(dir / "race_table.json", race_to_json(table).dump(2) + "\n");
    write_config(dir, "race", config);
    out << csv.str();
    return 0;
}

/// Turns a serialized effective config back into a command line.
std::vector<std::string> args_from_config(const json &config, const std::string &out_override) {
    if (!config.is_object() || !config.contains("command") || !config["command"].is_string()) {
        throw Error(ErrorKind::Config, "config has no 'command'");
    }
    std::string command = config["command"].get<std::string>();
    if (command == "replay") {
        throw Error(ErrorKind::Config, "a replay config cannot be replayed");
    }
    std::vector<std::string> args;
    for (const auto &[key, value] : config.items()) {
        if (key == "command" || (key == "out" && !out_override.empty())) {
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                args.push_back("--" + key);
            }
        } else if (value.is_string()) {
            args.push_back("--" + key);
            args.push_back(value.get<std::string>());
        } else if (value.is_number()) {
            args.push_back("--" + key);
            args.push_back(value.dump());
        } else {
            throw Error(ErrorKind::Config, "config field '" + key + "' has an unsupported type");
        }
    }
    if (!out_override.empty()) {
        args.push_back("--out");
        args.push_back(out_override);
    }
    args.insert(args.begin(), command);
    return args;
}

void report_error(const std::string &kind, const std::string &message, bool as_json, std::ostream &out, std::ostream &err) {
    err << "bosonrace: " << kind << " error: " << message << "\n";
    if (as_json) {
        out << json{{"error", kind}, {"message", message}}.dump() << "\n";
    }
}

void add_setup_options(CLI::App *cmd, Options &o) {
    cmd->add_option("--matrix", o.matrix, "Matrix JSON file; default is a Haar matrix from --seed");
    cmd->add_option("-m,--modes", o.modes, "Number of modes for a generated matrix")->capture_default_str();
    cmd->add_option("-n,--photons", o.photons, "Photons placed in the first modes")->capture_default_str();
    cmd->add_option("--input", o.input, "Comma-separated occupied input modes");
    cmd->add_option("--restriction", o.restriction, "full or no-collision")->capture_default_str();
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, int depth);

int run_parsed(CLI::App &app, Options &o, std::ostream &out, std::ostream &err, int depth) {
    auto given = [&](CLI::App *cmd, const char *name) {
        return cmd->count(name) > 0;
    };
    CLI::App *sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    if (name == "matrix") {
        return cmd_matrix(o, given(sub, "--modes"), out);
    }
    if (name == "dist") {
        return cmd_dist(o, given(sub, "--modes"), given(sub, "--photons"), out);
    }
    if (name == "sample") {
        return cmd_sample(o, given(sub, "--modes"), given(sub, "--photons"), out);
    }
    if (name == "validate") {
        return cmd_validate(o, given(sub, "--modes"), given(sub, "--photons"), out);
    }
    if (name == "race") {
        return cmd_race(o, out);
    }
    // replay
    if (depth > 0) {
        throw Error(ErrorKind::Config, "nested replay");
    }
    json config;
    try {
        config = json::parse(read_text(o.config));
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Config, "config '" + o.config + "': " + e.what());
    }
    std::string out_override = app.count("--out") ? o.out : "";
    std::vector<std::string> replay_args = args_from_config(config, out_override);
    if (o.error_json) {
        replay_args.push_back("--error-json");
    }
    return dispatch(replay_args, out, err, depth + 1);
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, int depth) {
    Options o;
    o.error_json = std::find(args.begin(), args.end(), "--error-json") != args.end();

    CLI::App app{"Boson-sampling simulation, validation and classical race toolkit", "bosonrace"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Master seed for every random stream")->capture_default_str();
    app.add_option("--out", o.out, "Output directory")->capture_default_str();
    app.add_flag("--error-json", o.error_json, "Also print errors as JSON on stdout");

    CLI::App *matrix = app.add_subcommand("matrix", "Write a Haar or mesh unitary to matrix.json");
    matrix->add_flag("--haar", o.haar, "Draw a Haar-random unitary");
    matrix->add_option("--mesh", o.mesh, "Triangular mesh spec JSON");
    matrix->add_option("-m,--modes", o.modes, "Number of modes")->capture_default_str();

    CLI::App *dist = app.add_subcommand("dist", "Write an outcome distribution to distribution.csv");
    add_setup_options(dist, o);
    dist->add_option("--model", o.model, "boson, distinguishable or uniform")->capture_default_str();

    CLI::App *sample = app.add_subcommand("sample", "Draw seeded events into events.csv");
    add_setup_options(sample, o);
    sample->add_option("--model", o.model, "boson, distinguishable or uniform")->capture_default_str();
    sample->add_option("--count", o.count, "Number of events")->capture_default_str();

    CLI::App *validate = app.add_subcommand("validate", "Run the Bayesian and counter tests on events.csv");
    add_setup_options(validate, o);
    validate->add_option("--events", o.events, "Event CSV file")->required();
    validate->add_option("--hypothesis", o.hypothesis, "Model under test")->capture_default_str();
    validate->add_option("--bayes-against", o.bayes_against, "Alternative for the Bayesian test")
        ->capture_default_str();
    validate->add_option("--counter-against", o.counter_against, "Alternative for the counter test")
        ->capture_default_str();
    validate->add_option("--a1", o.a1, "Inner counter threshold")->capture_default_str();
    validate->add_option("--a2", o.a2, "Outer counter threshold")->capture_default_str();

    CLI::App *race = app.add_subcommand("race", "Write the classical-versus-quantum run-time table");
    race->add_flag("--defaults", o.defaults, "Use the built-in machines and runs");
    race->add_option("--machines", o.machines, "Machine registry JSON");

    CLI::App *replay = app.add_subcommand("replay", "Re-run a command from its <command>.config.json");
    replay->add_option("config", o.config, "Effective config file")->required();

    try {
        // CLI11 consumes a reversed argument vector.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        report_error(std::string(to_string(ErrorKind::Config)), e.what(), o.error_json, out, err);
        return 2;
    }
    try {
        return run_parsed(app, o, out, err, depth);
    } catch (const Error &e) {
        report_error(std::string(to_string(e.kind())), e.what(), o.error_json, out, err);
        return 1;
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    try {
        return dispatch(args, out, err, 0);
    } catch (const std::exception &e) {
        report_error("internal", e.what(), std::find(args.begin(), args.end(), "--error-json") != args.end(), out, err);
        return 1;
    }
}

}  // namespace bosonrace::cli
