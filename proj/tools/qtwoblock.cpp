// Copyright 2026 The qtwoblock Authors
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

#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qtwoblock/qtwoblock.hpp"

using namespace qtwoblock;

namespace {

void add_run_flags(CLI::App *cmd, RunOptions &opts) {
    cmd->add_option("--budget", opts.budget, "Max vectors examined by exhaustive search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--iterations", opts.iterations, "Randomized upper-bound iterations")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "Seed for all randomized steps");
    cmd->add_flag("--witness", opts.witness, "Print the achieving vector as an index list");
    cmd->add_flag("--no-fallback", opts.no_fallback, "Fail with exit 3 instead of falling back to an upper bound");
    cmd->add_flag("--csv", opts.csv, "Machine-readable CSV output");
    cmd->add_option("--dump-matrices", opts.dump_matrices, "Write A, B, HX, HZ to this directory");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-block group-algebra quantum codes: parameters, distances, classification"};
    app.require_subcommand(1);

    RunOptions opts;
    std::string spec_path;
    std::map<std::string, int (*)(const CodeSpec &, const RunOptions &, std::ostream &)> spec_commands = {
        {"params", run_params},
        {"distance", run_distance},
        {"classify", run_classify},
        {"bound", run_bound},
        {"hpcheck", run_hpcheck},
    };
    std::map<std::string, CLI::App *> subs;
    subs["params"] = app.add_subcommand("params", "Print [[n,k,?]]_q and rank detail");
    subs["distance"] = app.add_subcommand("distance", "Compute d_Z and d_X");
    subs["classify"] = app.add_subcommand("classify", "Classify a 2BGA code");
    subs["bound"] = app.add_subcommand("bound", "Central-intersection and CSS lower bounds");
    subs["hpcheck"] = app.add_subcommand("hpcheck", "Compare with the hypergraph product when c = 1");
    for (auto &[name, cmd] : subs) {
        cmd->add_option("spec", spec_path, "Code specification file")->required();
        add_run_flags(cmd, opts);
    }

    std::int64_t ell = 0;
    std::string poly_a, poly_b;
    std::uint32_t p = 2;
    auto *gb = app.add_subcommand("gb", "Generalized bicycle code from two polynomials");
    gb->add_option("--l", ell, "Circulant size")->required();
    gb->add_option("--a", poly_a, "Polynomial a(x), e.g. 1+x")->required();
    gb->add_option("--b", poly_b, "Polynomial b(x)")->required();
    gb->add_option("--p", p, "Field characteristic");
    add_run_flags(gb, opts);

    ScanOptions scan;
    std::string groups_file, csv_out, k_filter = "all";
    auto *sc = app.add_subcommand("scan", "Enumerate 2BGA codes over a list of groups");
    sc->add_option("--groups", groups_file, "File with one group spec per line")->required();
    sc->add_option("--p", scan.p, "Field characteristic");
    sc->add_option("--wa", scan.wa, "Max weight of a")->required();
    sc->add_option("--wb", scan.wb, "Max weight of b")->required();
    sc->add_option("--min-weight", scan.min_weight, "Min weight of a and b");
    sc->add_option("--k-filter", k_filter, "Keep rows by k parity")
        ->check(CLI::IsMember({"all", "odd", "even", "nonzero"}));
    sc->add_flag("--params-only", scan.params_only, "Skip distance computation");
    sc->add_option("--threads", scan.threads, "Worker threads")->check(CLI::PositiveNumber);
    sc->add_option("--csv", csv_out, "Write CSV here instead of stdout");
    sc->add_option("--budget", scan.run.budget, "Max vectors examined by exhaustive search")
        ->check(CLI::PositiveNumber);
    sc->add_option("--iterations", scan.run.iterations, "Randomized upper-bound iterations")
        ->check(CLI::PositiveNumber);
    sc->add_option("--seed", scan.run.seed, "Seed for all randomized steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        for (auto &[name, cmd] : subs) {
            if (cmd->parsed()) {
                auto spec = read_code_spec(spec_path);
                return spec_commands.at(name)(spec, opts, std::cout);
            }
        }
        if (gb->parsed()) {
            return run_gb(ell, poly_a, poly_b, p, opts, std::cout);
        }
        scan.groups = read_group_list(groups_file);
        scan.base_dir = std::filesystem::path(groups_file).parent_path();
        scan.filter = k_filter == "odd"    ? KFilter::Odd
                      : k_filter == "even" ? KFilter::Even
                      : k_filter == "nonzero" ? KFilter::Nonzero
                                              : KFilter::All;
        if (csv_out.empty()) {
            return run_scan(scan, std::cout);
        }
        std::ofstream out(csv_out);
        if (!out) {
            throw InputError("cannot write '" + csv_out + "'");
        }
        return run_scan(scan, out);
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
