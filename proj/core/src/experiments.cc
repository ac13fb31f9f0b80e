// Copyright 2026 The eqgan Authors
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

#include "eqgan/experiments.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "eqgan/parallel.h"
#include "eqgan/pauli_sum.h"
#include "eqgan/rng.h"
#include "eqgan/simulator.h"
#include "eqgan/state_source.h"
#include "json.hpp"

namespace eqgan {

using nlohmann::json;

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

class Progress {
   public:
    Progress(std::ostream *out, std::string label, std::size_t total)
        : out_(out), label_(std::move(label)), total_(total) {}

    void tick() {
        if (!out_) {
            return;
        }
        std::lock_guard lock(mu_);
        ++done_;
        const std::size_t step = std::max<std::size_t>(1, total_ / 20);
        if (done_ % step == 0 || done_ == total_) {
            *out_ << label_ << ": " << done_ << "/" << total_ << "\n" << std::flush;
        }
    }

   private:
    std::ostream *out_;
    std::string label_;
    std::size_t total_;
    std::size_t done_ = 0;
    std::mutex mu_;
};

TrainConfig train_config_for(const ExperimentSpec &spec, DiscriminatorMode mode, std::uint64_t seed) {
    TrainConfig cfg = spec.train;
    cfg.discriminator_mode = mode;
    cfg.seed = seed;
    cfg.initial_theta_g.clear();
    return cfg;
}

json ansatz_json(const AnsatzConfig &a) {
    return {{"num_qubits", a.num_qubits},
            {"num_layers", a.num_layers},
            {"entangler", entangler_name(a.entangler)},
            {"parametrized_entangler", a.parametrized_entangler}};
}

json summary_json(const SummaryStats &s) {
    return {{"count", s.count}, {"mean", s.mean},         {"mode", s.mode}, {"mode_bin", s.mode_bin},
            {"min", s.min},     {"max", s.max},           {"bin_width", kHistogramBinWidth},
            {"bin_edges", s.bin_edges}, {"counts", s.counts}};
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace

// rand2q ------------------------------------------------------------------

Rand2qResult run_rand2q(const ExperimentSpec &spec, std::ostream *log) {
    validate_spec(spec);
    const Circuit target = build_generator(spec.ansatz);
    const std::size_t n = static_cast<std::size_t>(spec.samples);
    const std::size_t m = spec.modes.size();

    Rand2qResult result;
    result.runs.resize(n * m);
    Progress progress(log, "rand2q", n * m);
    parallel_for(n * m, spec.threads, [&](std::size_t task) {
        const std::size_t i = task / m;
        const DiscriminatorMode mode = spec.modes[task % m];
        Rand2qRun run;
        run.run_id = i;
        run.mode = mode;
        run.seed = derive_seed(spec.seed, "rand2q", i);
        Rng target_rng(derive_seed(run.seed, "theta_star"));
        run.theta_star = random_circuit_params(spec.ansatz, target_rng);

        const RealSource source = RealSource::fixed_circuit(target, run.theta_star);
        const TrainConfig cfg = train_config_for(spec, mode, derive_seed(run.seed, "train"));
        const TrainRecord rec = train_eqgan(source, spec.ansatz, cfg, spec.noise);
        run.final_fidelity = rec.final_fidelity;
        run.best_fidelity = rec.best_fidelity;
        run.episodes = spec.train.episodes;
        run.final_theta_g = rec.final_theta_g;
        result.runs[task] = std::move(run);
        progress.tick();
    });

    for (std::size_t k = 0; k < m; ++k) {
        std::vector<double> finals;
        for (std::size_t i = 0; i < n; ++i) {
            finals.push_back(result.runs[i * m + k].final_fidelity);
        }
        result.summaries.emplace_back(spec.modes[k], summarize(finals));
    }
    return result;
}

std::string train_record_to_json(const TrainRecord &r) {
    const json j{{"cost_history", r.cost_history},
                 {"fidelity_history", r.fidelity_history},
                 {"final_theta_g", r.final_theta_g},
                 {"final_theta_d", r.final_theta_d},
                 {"final_fidelity", r.final_fidelity},
                 {"best_fidelity", r.best_fidelity},
                 {"best_episode", r.best_episode},
                 {"best_theta_g", r.best_theta_g}};
    return j.dump(2) + "\n";
}

std::string rand2q_csv(const Rand2qResult &result) {
    std::string out = "run_id,seed,mode,final_fidelity,best_fidelity,episodes\n";
    for (const auto &r : result.runs) {
        out += std::to_string(r.run_id) + "," + std::to_string(r.seed) + "," +
               std::string(discriminator_mode_name(r.mode)) + "," + format_double(r.final_fidelity) + "," +
               format_double(r.best_fidelity) + "," + std::to_string(r.episodes) + "\n";
    }
    return out;
}

std::string rand2q_summary_json(const Rand2qResult &result) {
    json modes = json::object();
    for (const auto &[mode, stats] : result.summaries) {
        json entry = summary_json(stats);
        const Rand2qRun *best = nullptr;
        for (const auto &r : result.runs) {
            if (r.mode == mode && (!best || r.final_fidelity > best->final_fidelity)) {
                best = &r;
            }
        }
        if (best) {
            entry["best_run"] = {{"run_id", best->run_id},
                                 {"seed", best->seed},
                                 {"final_fidelity", best->final_fidelity},
                                 {"theta_star", best->theta_star},
                                 {"theta_g", best->final_theta_g}};
        }
        modes[std::string(discriminator_mode_name(mode))] = entry;
    }
    return json{{"modes", modes}}.dump(2) + "\n";
}

// ssvqe -------------------------------------------------------------------

SsvqeSolution solve_ssvqe(const PauliSum &h, const AnsatzConfig &ansatz, const SsvqeConfig &config, std::uint64_t seed) {
    SsvqeSolution sol;
    sol.hamiltonian = h.name;
    sol.bond_length_angstrom = h.bond_length_angstrom;
    sol.ansatz = ansatz;
    sol.result = ssvqe_train(h, ansatz, config, seed);
    const auto spectrum = exact_spectrum(h, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        sol.exact[k] = spectrum[k];
        sol.gap[k] = sol.result.energies[k] - spectrum[k];
    }
    return sol;
}

namespace {

PauliSum load_for_ansatz(const std::filesystem::path &path, const AnsatzConfig &ansatz) {
    PauliSum h = [&] {
        try {
            return load_hamiltonian(path);
        } catch (const std::runtime_error &e) {
            throw SpecError(e.what());
        }
    }();
    if (h.num_qubits() != ansatz.num_qubits) {
        throw SpecError("Hamiltonian " + path.string() + " acts on " + std::to_string(h.num_qubits()) +
                        " qubits but the ansatz has " + std::to_string(ansatz.num_qubits));
    }
    return h;
}

}  // namespace

SsvqeSolution run_ssvqe_solve(const ExperimentSpec &spec, std::ostream *log) {
    validate_spec(spec);
    const PauliSum h = load_for_ansatz(spec.hamiltonians.at(0), spec.ansatz);
    SsvqeSolution sol = solve_ssvqe(h, spec.ansatz, spec.ssvqe, derive_seed(spec.seed, "ssvqe", 0));
    if (log) {
        *log << "ssvqe: E0=" << format_double(sol.result.energies[0]) << " E1=" << format_double(sol.result.energies[1])
             << " exact " << format_double(sol.exact[0]) << ", " << format_double(sol.exact[1]) << "\n";
    }
    return sol;
}

std::string ssvqe_solution_to_json(const SsvqeSolution &s) {
    json j;
    j["hamiltonian"] = s.hamiltonian;
    j["bond_length_angstrom"] = s.bond_length_angstrom ? json(*s.bond_length_angstrom) : json(nullptr);
    j["ansatz"] = ansatz_json(s.ansatz);
    j["theta"] = s.result.theta;
    j["energies"] = s.result.energies;
    j["inputs"] = s.result.inputs;
    j["objective"] = s.result.objective;
    j["exact_eigenvalues"] = s.exact;
    j["gap"] = s.gap;
    return j.dump(2) + "\n";
}

SsvqeSolution parse_ssvqe_solution(std::string_view json_text) {
    try {
        const json j = json::parse(json_text);
        SsvqeSolution s;
        s.hamiltonian = j.at("hamiltonian").get<std::string>();
        if (!j.at("bond_length_angstrom").is_null()) {
            s.bond_length_angstrom = j["bond_length_angstrom"].get<double>();
        }
        const json &a = j.at("ansatz");
        s.ansatz.num_qubits = a.at("num_qubits").get<int>();
        s.ansatz.num_layers = a.at("num_layers").get<int>();
        const auto e = parse_entangler(a.at("entangler").get<std::string>());
        if (!e) {
            throw std::runtime_error("unknown entangler in SSVQE solution");
        }
        s.ansatz.entangler = *e;
        s.ansatz.parametrized_entangler = a.at("parametrized_entangler").get<bool>();
        s.ansatz.validate();
        s.result.theta = j.at("theta").get<std::vector<double>>();
        if (s.result.theta.size() != param_count(s.ansatz)) {
            throw std::runtime_error("SSVQE solution theta does not match its ansatz");
        }
        s.result.energies = j.at("energies").get<std::array<double, 2>>();
        s.result.inputs = j.at("inputs").get<std::array<std::size_t, 2>>();
        if (s.result.inputs[0] > 1 || s.result.inputs[1] > 1 || s.result.inputs[0] == s.result.inputs[1]) {
            throw std::runtime_error("SSVQE solution inputs must be a permutation of {0, 1}");
        }
        s.result.objective = j.at("objective").get<double>();
        s.exact = j.at("exact_eigenvalues").get<std::array<double, 2>>();
        s.gap = j.at("gap").get<std::array<double, 2>>();
        return s;
    } catch (const json::exception &e) {
        throw std::runtime_error(std::string("malformed SSVQE solution: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(std::string("malformed SSVQE solution: ") + e.what());
    }
}

SsvqeSolution load_ssvqe_solution(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_ssvqe_solution(buf.str());
}

// vqe-learn ---------------------------------------------------------------

VqeLearnResult run_vqe_learn(const ExperimentSpec &spec, std::ostream *log) {
    validate_spec(spec);
    const std::size_t nh = spec.hamiltonians.size();
    std::vector<PauliSum> hs;
    for (const auto &p : spec.hamiltonians) {
        hs.push_back(load_for_ansatz(p, spec.ansatz));
        if (!hs.back().bond_length_angstrom) {
            throw SpecError("Hamiltonian " + p.string() + " has no bond_length_angstrom");
        }
    }

    VqeLearnResult result;
    result.solutions.resize(nh);
    Progress ssvqe_progress(log, "ssvqe", nh);
    parallel_for(nh, spec.threads, [&](std::size_t i) {
        if (!spec.ssvqe_solutions.empty()) {
            SsvqeSolution s = [&] {
                try {
                    return load_ssvqe_solution(spec.ssvqe_solutions[i]);
                } catch (const std::runtime_error &e) {
                    throw SpecError(e.what());
                }
            }();
            if (!(s.ansatz == spec.ansatz)) {
                throw SpecError("SSVQE solution " + spec.ssvqe_solutions[i].string() + " uses a different ansatz");
            }
            result.solutions[i] = std::move(s);
        } else {
            result.solutions[i] = solve_ssvqe(hs[i], spec.ansatz, spec.ssvqe, derive_seed(spec.seed, "ssvqe", i));
        }
        ssvqe_progress.tick();
    });

    const std::size_t ns = spec.eigenstates.size();
    const std::size_t nm = spec.modes.size();
    result.rows.resize(nh * ns * nm);
    Progress progress(log, "vqe-learn", result.rows.size());
    parallel_for(result.rows.size(), spec.threads, [&](std::size_t task) {
        const std::size_t i = task / (ns * nm);
        const std::size_t s = (task / nm) % ns;
        const std::size_t k = spec.eigenstates[s];
        const DiscriminatorMode mode = spec.modes[task % nm];
        const SsvqeSolution &sol = result.solutions[i];

        const Circuit real_circuit = ssvqe_state_circuit(spec.ansatz, sol.result.inputs[k]);
        const RealSource source =
            RealSource::param_family(real_circuit, sol.result.theta, spec.perturbation_sigma, spec.pool_size,
                                     derive_seed(spec.seed, "vqe-pool", i * 2 + k));
        const std::uint64_t seed = derive_seed(spec.seed, "vqe-learn-train", i * 2 + k);
        const TrainRecord rec = train_eqgan(source, spec.ansatz, train_config_for(spec, mode, seed), spec.noise);
        const StateVector generated = run_circuit(build_generator(spec.ansatz), rec.final_theta_g);

        VqeLearnRow row;
        row.bond_length = *hs[i].bond_length_angstrom;
        row.state_index = k;
        row.mode = mode;
        row.ssvqe_energy = sol.result.energies[k];
        row.gan_energy = expectation(generated, hs[i]);
        row.infidelity = 1.0 - fidelity(generated, source.reference_state());
        row.exact_energy = sol.exact[k];
        row.seed = seed;
        row.final_theta_g = rec.final_theta_g;
        result.rows[task] = std::move(row);
        progress.tick();
    });
    return result;
}

std::string vqe_learn_csv(const VqeLearnResult &result) {
    std::string out = "bond_length,state_index,disc_mode,ssvqe_energy,gan_energy,infidelity\n";
    for (const auto &r : result.rows) {
        out += format_double(r.bond_length) + "," + std::to_string(r.state_index) + "," +
               std::string(discriminator_mode_name(r.mode)) + "," + format_double(r.ssvqe_energy) + "," +
               format_double(r.gan_energy) + "," + format_double(r.infidelity) + "\n";
    }
    return out;
}

std::string vqe_learn_runs_json(const VqeLearnResult &result) {
    json solutions = json::array();
    for (const auto &s : result.solutions) {
        solutions.push_back(json::parse(ssvqe_solution_to_json(s)));
    }
    json runs = json::array();
    for (const auto &r : result.rows) {
        runs.push_back({{"bond_length", r.bond_length},
                        {"state_index", r.state_index},
                        {"disc_mode", discriminator_mode_name(r.mode)},
                        {"seed", r.seed},
                        {"ssvqe_energy", r.ssvqe_energy},
                        {"gan_energy", r.gan_energy},
                        {"exact_energy", r.exact_energy},
                        {"fidelity", 1.0 - r.infidelity},
                        {"infidelity", r.infidelity},
                        {"theta_g", r.final_theta_g}});
    }
    return json{{"ssvqe", solutions}, {"runs", runs}}.dump(2) + "\n";
}

// rand-state --------------------------------------------------------------

RandStateResult run_rand_state(const ExperimentSpec &spec, std::ostream *log) {
    validate_spec(spec);
    const auto &g = spec.grid;
    const DiscriminatorMode mode = spec.modes.front();
    const std::size_t per_cell = static_cast<std::size_t>(spec.states_per_cell);

    RandStateResult result;
    for (int q : g.qubits) {
        for (Entangler gate : g.gates) {
            for (bool p : g.parametrized) {
                for (int l : g.layers) {
                    RandStateCell cell;
                    cell.qubits = q;
                    cell.gate = gate;
                    cell.parametrized = p;
                    cell.layers = l;
                    cell.mode = mode;
                    cell.n_states = per_cell;
                    result.cells.push_back(cell);
                }
            }
        }
    }

    result.runs.resize(result.cells.size() * per_cell);
    Progress progress(log, "rand-state", result.runs.size());
    parallel_for(result.runs.size(), spec.threads, [&](std::size_t task) {
        const RandStateCell &cell = result.cells[task / per_cell];
        const std::size_t s = task % per_cell;
        // Target states depend only on (qubits, index) so every cell of a given
        // width sees the same states.
        const std::uint64_t key = static_cast<std::uint64_t>(cell.qubits) << 32 | s;
        Rng haar_rng(derive_seed(spec.seed, "haar", key));
        const StateVector base = sample_haar_state(cell.qubits, haar_rng);
        const RealSource source =
            RealSource::state_family(base, spec.perturbation_sigma, spec.pool_size, derive_seed(spec.seed, "pool", key));

        const AnsatzConfig ansatz{cell.qubits, cell.layers, cell.gate, cell.parametrized};
        const std::string stream = "rand-state:" + std::to_string(cell.qubits) + ":" +
                                   std::string(entangler_name(cell.gate)) + ":" + (cell.parametrized ? "p" : "f") +
                                   ":" + std::to_string(cell.layers);
        RandStateRun run;
        run.qubits = cell.qubits;
        run.gate = cell.gate;
        run.parametrized = cell.parametrized;
        run.layers = cell.layers;
        run.state_index = s;
        run.seed = derive_seed(spec.seed, stream, s);
        const TrainRecord rec = train_eqgan(source, ansatz, train_config_for(spec, mode, run.seed), spec.noise);
        run.final_fidelity = rec.final_fidelity;
        run.best_fidelity = rec.best_fidelity;
        result.runs[task] = run;
        progress.tick();
    });

    for (std::size_t c = 0; c < result.cells.size(); ++c) {
        std::vector<double> infid;
        for (std::size_t s = 0; s < per_cell; ++s) {
            infid.push_back(1.0 - result.runs[c * per_cell + s].final_fidelity);
        }
        double sum = 0;
        for (double v : infid) {
            sum += v;
        }
        result.cells[c].mean_infidelity = sum / static_cast<double>(infid.size());
        result.cells[c].std_error = standard_error(infid);
    }
    return result;
}

std::string rand_state_csv(const RandStateResult &result) {
    std::string out = "qubits,gate,parametrized,layers,mean_infidelity,stderr,n_states\n";
    for (const auto &c : result.cells) {
        out += std::to_string(c.qubits) + "," + std::string(entangler_name(c.gate)) + "," +
               (c.parametrized ? "1" : "0") + "," + std::to_string(c.layers) + "," +
               format_double(c.mean_infidelity) + "," + format_double(c.std_error) + "," +
               std::to_string(c.n_states) + "\n";
    }
    return out;
}

std::string rand_state_runs_csv(const RandStateResult &result) {
    std::string out = "qubits,gate,parametrized,layers,state_index,seed,final_fidelity,final_infidelity,best_fidelity\n";
    for (const auto &r : result.runs) {
        out += std::to_string(r.qubits) + "," + std::string(entangler_name(r.gate)) + "," +
               (r.parametrized ? "1" : "0") + "," + std::to_string(r.layers) + "," + std::to_string(r.state_index) +
               "," + std::to_string(r.seed) + "," + format_double(r.final_fidelity) + "," +
               format_double(1.0 - r.final_fidelity) + "," + format_double(r.best_fidelity) + "\n";
    }
    return out;
}

// driver ------------------------------------------------------------------

std::vector<std::string> run_experiment(const ExperimentSpec &spec, const std::filesystem::path &out_dir, std::ostream *log) {
    validate_spec(spec);
    std::vector<std::pair<std::string, std::string>> files;
    switch (spec.experiment) {
        case ExperimentKind::Rand2q: {
            const auto r = run_rand2q(spec, log);
            files.emplace_back("rand2q.csv", rand2q_csv(r));
            files.emplace_back("rand2q_summary.json", rand2q_summary_json(r));
            break;
        }
        case ExperimentKind::VqeLearn: {
            const auto r = run_vqe_learn(spec, log);
            files.emplace_back("vqe_learn.csv", vqe_learn_csv(r));
            files.emplace_back("vqe_learn_runs.json", vqe_learn_runs_json(r));
            break;
        }
        case ExperimentKind::RandState: {
            const auto r = run_rand_state(spec, log);
            files.emplace_back("rand_state.csv", rand_state_csv(r));
            files.emplace_back("rand_state_runs.csv", rand_state_runs_csv(r));
            break;
        }
        case ExperimentKind::SsvqeSolve: {
            const auto r = run_ssvqe_solve(spec, log);
            files.emplace_back("ssvqe_solution.json", ssvqe_solution_to_json(r));
            break;
        }
    }

    std::filesystem::create_directories(out_dir);
    std::vector<std::string> names;
    json outputs = json::array();
    for (const auto &[name, text] : files) {
        write_file(out_dir / name, text);
        names.push_back(name);
        outputs.push_back(name);
    }
    const json manifest{{"experiment", experiment_name(spec.experiment)},
                        {"spec", json::parse(spec_to_json(spec))},
                        {"outputs", outputs}};
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
    names.push_back("manifest.json");
    return names;
}

}  // namespace eqgan
