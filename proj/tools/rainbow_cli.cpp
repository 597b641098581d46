#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "rainbow/absorption.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/ham_path.hpp"
#include "rainbow/instance_io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/pancyclic.hpp"
#include "rainbow/rotation.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

rainbow::GraphSystem load_system(const std::string& path) {
    try {
        return rainbow::parse_system(read_file(path));
    } catch (const std::runtime_error& err) {
        throw CLI::RuntimeError(std::string(err.what()) + " while reading " + path, kExitUsage);
    }
}

rainbow::OracleOptions oracle_options(int cap) {
    rainbow::OracleOptions opts;
    if (cap > 0) {
        opts.cap = cap;
        if (cap > rainbow::kOraclePathCap)
            std::cerr << "warning: cap " << cap
                      << " exceeds the default; exhaustive search may take long\n";
    }
    return opts;
}

struct GenOptions {
    int n = 0;
    int min_deg = 0;
    std::uint64_t seed = 1;
    double extra_density = 0.1;
    std::string out;
};

int run_gen(const std::string& kind, const GenOptions& opt) {
    rainbow::GraphSystem sys = [&] {
        if (kind == "complete") return rainbow::gen_complete(opt.n);
        if (kind == "balanced") return rainbow::gen_balanced_bipartite(opt.n);
        if (kind == "unbalanced") return rainbow::gen_unbalanced_bipartite(opt.n);
        return rainbow::gen_random_min_degree(opt.n, opt.min_deg, opt.seed, opt.extra_density);
    }();
    write_output(opt.out, rainbow::serialize_system(sys));
    return kExitFound;
}

struct SolveOptions {
    std::string in;
    std::string out;
    std::string method;
    std::uint64_t seed = 1;
    int ell = 0;
    int retries = 0;
    int cap = 0;
};

rainbow::AbsorptionParams absorption_params_from(const SolveOptions& opt, int n) {
    rainbow::AbsorptionParams params = rainbow::default_absorption_params(n);
    if (opt.ell > 0) params.ell = opt.ell;
    if (opt.retries > 0) params.build_retries = opt.retries;
    return params;
}

int emit_verified_path(const rainbow::GraphSystem& sys, const rainbow::RainbowPath& path,
                       const std::string& out) {
    const rainbow::Verdict verdict = rainbow::verify_rainbow_path(sys, path);
    if (!verdict.ok) {
        std::cerr << "internal error: solver emitted a bad path: " << verdict.violation << "\n";
        return kExitInternal;
    }
    write_output(out, rainbow::serialize_certificate(path));
    return kExitFound;
}

int emit_verified_cycle(const rainbow::GraphSystem& sys, const rainbow::RainbowCycle& cycle,
                        const std::string& out) {
    const rainbow::Verdict verdict = rainbow::verify_rainbow_cycle(sys, cycle);
    if (!verdict.ok) {
        std::cerr << "internal error: solver emitted a bad cycle: " << verdict.violation << "\n";
        return kExitInternal;
    }
    write_output(out, rainbow::serialize_certificate(cycle));
    return kExitFound;
}

int run_solve_hampath(const SolveOptions& opt) {
    const rainbow::GraphSystem sys = load_system(opt.in);
    if (opt.method == "absorb")
        throw CLI::RuntimeError("hampath has no absorb method; use construct or oracle",
                                kExitUsage);
    std::optional<rainbow::RainbowPath> path;
    if (opt.method == "oracle")
        path = rainbow::oracle_hamiltonian_path(sys, oracle_options(opt.cap));
    else
        path = rainbow::find_rainbow_hamiltonian_path(sys);
    if (!path) {
        std::cerr << (opt.method == "oracle" ? "infeasible\n"
                                             : "no rainbow Hamiltonian path found\n");
        return kExitNotFound;
    }
    return emit_verified_path(sys, *path, opt.out);
}

int run_solve_hamcycle(const SolveOptions& opt) {
    const rainbow::GraphSystem sys = load_system(opt.in);
    std::optional<rainbow::RainbowCycle> cycle;
    if (opt.method == "oracle") {
        cycle = rainbow::oracle_hamiltonian_cycle(sys, oracle_options(opt.cap));
    } else {
        // construct is an alias for absorb: the constructive method is the
        // absorption pipeline.
        std::mt19937_64 rng(opt.seed);
        cycle = rainbow::find_rainbow_hamiltonian_cycle(
            sys, absorption_params_from(opt, sys.vertex_count()), rng);
    }
    if (!cycle) {
        std::cerr << (opt.method == "oracle" ? "infeasible\n"
                                             : "no rainbow Hamiltonian cycle found\n");
        return kExitNotFound;
    }
    return emit_verified_cycle(sys, *cycle, opt.out);
}

int run_solve_pancyclic(const SolveOptions& opt) {
    const rainbow::GraphSystem sys = load_system(opt.in);
    if (opt.method == "absorb")
        throw CLI::RuntimeError("pancyclic has no absorb method; use construct or oracle",
                                kExitUsage);
    const int n = sys.vertex_count();
    std::vector<std::pair<int, rainbow::RainbowCycle>> found;
    std::vector<int> missing;
    if (opt.method == "oracle") {
        for (int length = 3; length <= n - 1; ++length) {
            if (std::optional<rainbow::RainbowCycle> cycle =
                    rainbow::oracle_cycle_of_length(sys, length, oracle_options(opt.cap)))
                found.emplace_back(length, std::move(*cycle));
            else
                missing.push_back(length);
        }
    } else {
        rainbow::PancyclicResult result = rainbow::rainbow_pancyclic(sys);
        for (auto& [length, cycle] : result.cycles) found.emplace_back(length, cycle);
        missing = result.missing_lengths;
    }

    std::ostringstream bundle;
    for (const auto& [length, cycle] : found) {
        const rainbow::Verdict verdict = rainbow::verify_rainbow_cycle(sys, cycle);
        if (!verdict.ok) {
            std::cerr << "internal error: bad cycle of length " << length << ": "
                      << verdict.violation << "\n";
            return kExitInternal;
        }
        bundle << rainbow::serialize_certificate(cycle);
    }
    write_output(opt.out, bundle.str());
    if (!missing.empty()) {
        std::cerr << "missing lengths:";
        for (int length : missing) std::cerr << " " << length;
        std::cerr << "\n";
        return kExitNotFound;
    }
    return kExitFound;
}

struct OracleOptionsCli {
    std::string in;
    std::string out;
    int len = 0;
    int cap = 0;
    bool no_prune = false;
};

int run_oracle(const std::string& kind, const OracleOptionsCli& opt) {
    const rainbow::GraphSystem sys = load_system(opt.in);
    rainbow::OracleOptions opts = oracle_options(opt.cap);
    opts.prune_symmetry = !opt.no_prune;
    if (kind == "hampath") {
        const std::optional<rainbow::RainbowPath> path = rainbow::oracle_hamiltonian_path(sys, opts);
        if (!path) {
            std::cerr << "infeasible\n";
            return kExitNotFound;
        }
        return emit_verified_path(sys, *path, opt.out);
    }
    const std::optional<rainbow::RainbowCycle> cycle =
        kind == "hamcycle" ? rainbow::oracle_hamiltonian_cycle(sys, opts)
                           : rainbow::oracle_cycle_of_length(sys, opt.len, opts);
    if (!cycle) {
        std::cerr << "infeasible\n";
        return kExitNotFound;
    }
    return emit_verified_cycle(sys, *cycle, opt.out);
}

struct VerifyOptions {
    std::string in;
    std::string cert;
};

int run_verify(const VerifyOptions& opt) {
    const rainbow::GraphSystem sys = load_system(opt.in);
    std::vector<rainbow::Certificate> certs;
    try {
        certs = rainbow::parse_certificate_stream(read_file(opt.cert));
    } catch (const std::runtime_error& err) {
        throw CLI::RuntimeError(std::string(err.what()) + " while reading " + opt.cert,
                                kExitUsage);
    }
    if (certs.empty())
        throw CLI::RuntimeError("no certificates in " + opt.cert, kExitUsage);

    bool all_ok = true;
    for (const rainbow::Certificate& cert : certs) {
        const rainbow::Verdict verdict = std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, rainbow::RainbowPath>)
                    return rainbow::verify_rainbow_path(sys, c);
                else
                    return rainbow::verify_rainbow_cycle(sys, c);
            },
            cert);
        const bool is_path = std::holds_alternative<rainbow::RainbowPath>(cert);
        const std::size_t size = is_path
                                     ? std::get<rainbow::RainbowPath>(cert).vertices.size()
                                     : std::get<rainbow::RainbowCycle>(cert).vertices.size();
        if (verdict.ok)
            std::cout << "ok: " << (is_path ? "path" : "cycle") << " of " << size
                      << " vertices\n";
        else
            std::cout << "violation: " << verdict.violation << "\n";
        all_ok = all_ok && verdict.ok;
    }
    return all_ok ? kExitFound : kExitNotFound;
}

struct SweepOptions {
    std::string task;
    std::string method = "construct";
    int n = 0;
    int min_deg = 0;
    int seeds = 0;
    std::uint64_t seed0 = 1;
    int threads = 1;
    int ell = 0;
    int retries = 0;
    int cap = 0;
    double extra_density = 0.1;
    std::string out;
};

int run_sweep(const SweepOptions& opt) {
    std::vector<std::string> rows(opt.seeds);
    std::atomic<int> next{0};
    std::atomic<bool> internal_error{false};

    const auto worker = [&] {
        for (;;) {
            const int index = next.fetch_add(1);
            if (index >= opt.seeds) return;
            const std::uint64_t seed = opt.seed0 + static_cast<std::uint64_t>(index);
            const auto start = std::chrono::steady_clock::now();
            std::string outcome;
            try {
                const rainbow::GraphSystem sys = rainbow::gen_random_min_degree(
                    opt.n, opt.min_deg, seed, opt.extra_density);
                bool found = false;
                if (opt.task == "hampath") {
                    found = opt.method == "oracle"
                                ? rainbow::oracle_hamiltonian_path(sys, oracle_options(opt.cap))
                                      .has_value()
                                : rainbow::find_rainbow_hamiltonian_path(sys).has_value();
                } else if (opt.task == "hamcycle") {
                    if (opt.method == "oracle") {
                        found = rainbow::oracle_hamiltonian_cycle(sys, oracle_options(opt.cap))
                                    .has_value();
                    } else {
                        rainbow::AbsorptionParams params =
                            rainbow::default_absorption_params(opt.n);
                        if (opt.ell > 0) params.ell = opt.ell;
                        if (opt.retries > 0) params.build_retries = opt.retries;
                        std::mt19937_64 rng(seed);
                        found = rainbow::find_rainbow_hamiltonian_cycle(sys, params, rng)
                                    .has_value();
                    }
                } else {
                    const rainbow::PancyclicResult result = rainbow::rainbow_pancyclic(sys);
                    found = result.missing_lengths.empty();
                }
                outcome = found ? "found" : "notfound";
            } catch (const std::invalid_argument&) {
                outcome = "rejected";
            } catch (const std::exception&) {
                outcome = "error";
                internal_error = true;
            }
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            std::ostringstream row;
            row << seed << "\t" << opt.n << "\t" << opt.min_deg << "\t" << opt.task << "/"
                << opt.method << "\t" << outcome << "\t" << elapsed.count();
            rows[index] = row.str();
        }
    };

    std::vector<std::thread> pool;
    const int thread_count = std::max(1, std::min(opt.threads, opt.seeds));
    for (int i = 1; i < thread_count; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::ostringstream table;
    table << "seed\tn\tmindeg\tcommand\toutcome\tmillis\n";
    for (const std::string& row : rows) table << row << "\n";
    write_output(opt.out, table.str());
    return internal_error ? kExitInternal : kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow Hamiltonian path, cycle, and pancyclicity toolkit"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->require_subcommand(1);
    const auto add_gen_common = [&](CLI::App* cmd, bool random) {
        cmd->add_option("--n", gen_opt.n, "number of vertices and colors")->required();
        cmd->add_option("--out", gen_opt.out, "output file (default stdout)");
        if (random) {
            cmd->add_option("--min-deg", gen_opt.min_deg, "minimum degree per color")
                ->required();
            cmd->add_option("--seed", gen_opt.seed, "random seed");
            cmd->add_option("--extra-density", gen_opt.extra_density,
                            "probability for extra edges");
        }
    };
    add_gen_common(gen->add_subcommand("complete", "complete system"), false);
    add_gen_common(gen->add_subcommand("balanced", "balanced complete bipartite system"), false);
    add_gen_common(gen->add_subcommand("unbalanced", "slightly unbalanced bipartite system"),
                   false);
    add_gen_common(gen->add_subcommand("random", "random system with a degree floor"), true);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "run a constructive solver");
    solve->require_subcommand(1);
    const auto add_solve_common = [&](CLI::App* cmd, const char* default_method) {
        solve_opt.method = default_method;
        cmd->add_option("--in", solve_opt.in, "instance file")->required();
        cmd->add_option("--out", solve_opt.out, "certificate output (default stdout)");
        cmd->add_option("--method", solve_opt.method, "construct, absorb, or oracle")
            ->check(CLI::IsMember({"construct", "absorb", "oracle"}));
        cmd->add_option("--cap", solve_opt.cap, "size cap for oracle method");
    };
    CLI::App* solve_hampath = solve->add_subcommand("hampath", "rainbow Hamiltonian path");
    add_solve_common(solve_hampath, "construct");
    CLI::App* solve_hamcycle = solve->add_subcommand("hamcycle", "rainbow Hamiltonian cycle");
    add_solve_common(solve_hamcycle, "absorb");
    solve_hamcycle->add_option("--seed", solve_opt.seed, "random seed for absorption");
    solve_hamcycle->add_option("--ell", solve_opt.ell, "colors reserved for pattern groups");
    solve_hamcycle->add_option("--retries", solve_opt.retries, "pipeline retry budget");
    CLI::App* solve_pancyclic = solve->add_subcommand("pancyclic", "one cycle per length");
    add_solve_common(solve_pancyclic, "construct");

    OracleOptionsCli oracle_opt;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search on small instances");
    oracle->require_subcommand(1);
    const auto add_oracle_common = [&](CLI::App* cmd, bool with_len) {
        cmd->add_option("--in", oracle_opt.in, "instance file")->required();
        cmd->add_option("--out", oracle_opt.out, "certificate output (default stdout)");
        cmd->add_option("--cap", oracle_opt.cap, "override the size cap");
        cmd->add_flag("--no-prune", oracle_opt.no_prune, "disable symmetry pruning");
        if (with_len)
            cmd->add_option("--len", oracle_opt.len, "cycle length to search for")->required();
    };
    add_oracle_common(oracle->add_subcommand("hampath", "Hamiltonian path"), false);
    add_oracle_common(oracle->add_subcommand("hamcycle", "Hamiltonian cycle"), false);
    add_oracle_common(oracle->add_subcommand("cycle", "cycle of a given length"), true);

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "check certificates against an instance");
    verify->add_option("--in", verify_opt.in, "instance file")->required();
    verify->add_option("--cert", verify_opt.cert, "certificate file, possibly several")
        ->required();

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "run one task over many seeded instances");
    sweep->add_option("--task", sweep_opt.task, "hampath, hamcycle, or pancyclic")
        ->required()
        ->check(CLI::IsMember({"hampath", "hamcycle", "pancyclic"}));
    sweep->add_option("--method", sweep_opt.method, "construct or oracle")
        ->check(CLI::IsMember({"construct", "oracle"}));
    sweep->add_option("--n", sweep_opt.n, "instance order")->required();
    sweep->add_option("--min-deg", sweep_opt.min_deg, "minimum degree per color")->required();
    sweep->add_option("--seeds", sweep_opt.seeds, "number of seeds")->required();
    sweep->add_option("--seed0", sweep_opt.seed0, "first seed");
    sweep->add_option("--threads", sweep_opt.threads, "worker threads");
    sweep->add_option("--ell", sweep_opt.ell, "absorption group colors");
    sweep->add_option("--retries", sweep_opt.retries, "absorption retry budget");
    sweep->add_option("--cap", sweep_opt.cap, "oracle size cap");
    sweep->add_option("--extra-density", sweep_opt.extra_density,
                      "probability for extra edges");
    sweep->add_option("--out", sweep_opt.out, "table output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed())
            return run_gen(gen->get_subcommands().front()->get_name(), gen_opt);
        if (solve->parsed()) {
            if (solve_hampath->parsed()) return run_solve_hampath(solve_opt);
            if (solve_hamcycle->parsed()) return run_solve_hamcycle(solve_opt);
            return run_solve_pancyclic(solve_opt);
        }
        if (oracle->parsed())
            return run_oracle(oracle->get_subcommands().front()->get_name(), oracle_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (sweep->parsed()) return run_sweep(sweep_opt);
    } catch (const CLI::RuntimeError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return err.get_exit_code();
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInternal;
    } catch (const std::runtime_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
