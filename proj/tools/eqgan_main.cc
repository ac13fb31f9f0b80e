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

#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "eqgan/experiment_spec.h"
#include "eqgan/experiments.h"

namespace {

int run(eqgan::ExperimentKind kind, const std::string &spec_path, const std::string &out_dir,
        std::optional<std::uint64_t> seed, bool paper_scale, std::optional<int> threads, bool quiet) {
    eqgan::ExperimentSpec spec;
    try {
        spec = eqgan::load_experiment_spec(spec_path);
        if (spec.experiment != kind) {
            throw eqgan::SpecError("spec file describes '" + std::string(eqgan::experiment_name(spec.experiment)) +
                                   "', not '" + std::string(eqgan::experiment_name(kind)) + "'");
        }
        if (seed) {
            spec.seed = *seed;
        }
        if (threads) {
            spec.threads = *threads;
        }
        if (paper_scale) {
            eqgan::apply_full_scale(spec);
        }
        eqgan::validate_spec(spec);
    } catch (const eqgan::SpecError &e) {
        std::cerr << "eqgan: invalid spec: " << e.what() << "\n";
        return 2;
    }

    try {
        const auto files = eqgan::run_experiment(spec, out_dir, quiet ? nullptr : &std::cerr);
        for (const auto &f : files) {
            std::cout << (std::filesystem::path(out_dir) / f).string() << "\n";
        }
    } catch (const eqgan::SpecError &e) {
        std::cerr << "eqgan: invalid spec: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "eqgan: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entangling quantum GAN simulator and experiment harness"};
    app.require_subcommand(1);

    struct Options {
        std::string spec;
        std::string out;
        std::optional<std::uint64_t> seed;
        bool paper_scale = false;
        std::optional<int> threads;
        bool quiet = false;
    };
    Options opts;

    const std::pair<const char *, eqgan::ExperimentKind> commands[] = {
        {"rand2q", eqgan::ExperimentKind::Rand2q},
        {"vqe-learn", eqgan::ExperimentKind::VqeLearn},
        {"rand-state", eqgan::ExperimentKind::RandState},
        {"ssvqe-solve", eqgan::ExperimentKind::SsvqeSolve},
    };
    const std::pair<const char *, const char *> help[] = {
        {"rand2q", "learn random two-qubit circuits, perfect vs adversarial discriminator"},
        {"vqe-learn", "learn SSVQE eigenstates of a set of Hamiltonians"},
        {"rand-state", "learn Haar-random states over an ansatz grid"},
        {"ssvqe-solve", "solve one Hamiltonian with SSVQE and write the parameters"},
    };
    for (std::size_t i = 0; i < 4; ++i) {
        auto *sub = app.add_subcommand(commands[i].first, help[i].second);
        sub->add_option("--spec", opts.spec, "JSON experiment spec")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", opts.out, "output directory")->required();
        sub->add_option("--seed", opts.seed, "override the master seed");
        sub->add_flag("--paper-scale", opts.paper_scale, "full-size sample counts (10^4 circuits, 200 states per cell)");
        sub->add_option("--threads", opts.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
        sub->add_flag("-q,--quiet", opts.quiet, "no progress output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (const auto &[name, kind] : commands) {
        if (app.got_subcommand(name)) {
            return run(kind, opts.spec, opts.out, opts.seed, opts.paper_scale, opts.threads, opts.quiet);
        }
    }
    return 2;
}
