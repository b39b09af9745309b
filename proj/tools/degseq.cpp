// Command-line surface for the degseq toolkit: graphicality checks, MLE
// fitting, beta-model sampling, graph-limit fits and the consistency
// experiment.
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/beta_model.hpp"
#include "degseq/degree_function.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/graphon.hpp"
#include "degseq/io.hpp"
#include "degseq/mle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitDiverged = 3;
constexpr int kExitInfeasible = 4;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot write to " + out_path);
        out << j.dump(2) << "\n";
    }
}

int thread_budget() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0)
        n = 1;
    if (const char* env = std::getenv("DEGSEQ_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n)
            n = static_cast<unsigned>(cap);
    }
    return static_cast<int>(n);
}

int fit_exit_code(degseq::FitStatus status) {
    switch (status) {
    case degseq::FitStatus::Converged: return kExitOk;
    case degseq::FitStatus::Diverged: return kExitDiverged;
    case degseq::FitStatus::MaxIterReached: return kExitDiverged;
    case degseq::FitStatus::InfeasibleDegrees: return kExitInfeasible;
    }
    return kExitInput;
}

struct CommonFitFlags {
    double tol = degseq::FitConfig{}.tol;
    int max_iter = degseq::FitConfig{}.max_iter;
    std::string x0_file;
    bool json = false;
    std::string out_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "L-inf residual threshold");
        cmd->add_option("--max-iter", max_iter, "iteration cap");
        cmd->add_option("--x0", x0_file, "file with the starting vector, one value per line");
        cmd->add_flag("--json", json, "emit a JSON report");
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
    }

    degseq::FitConfig config() const {
        degseq::FitConfig cfg;
        cfg.tol = tol;
        cfg.max_iter = max_iter;
        if (!x0_file.empty())
            cfg.x0 = degseq::read_beta_file(x0_file);
        return cfg;
    }
};

int report_fit(const degseq::FitReport& report, const degseq::FitConfig& cfg,
               const CommonFitFlags& flags) {
    if (flags.json) {
        emit(degseq::to_json(report, cfg), flags.out_path);
    } else {
        std::cout << "status: " << degseq::to_string(report.status) << "\n"
                  << "iterations: " << report.iterations << "\n"
                  << "residual_linf: " << report.residual_linf << "\n";
        if (report.beta_hat) {
            std::cout << "theta_hat: " << report.theta_hat << "\n"
                      << "error_bound: " << report.error_bound << "\n"
                      << "beta_hat:";
            for (double b : report.beta_hat->values())
                std::cout << " " << b;
            std::cout << "\n";
        }
    }
    return fit_exit_code(report.status);
}

int cmd_check(const std::string& degree_file, bool json, const std::string& out_path) {
    const degseq::DegreeSequence d(degseq::read_degree_file(degree_file));
    const auto report = degseq::erdos_gallai_check(d);
    if (json) {
        emit(degseq::to_json(report), out_path);
    } else {
        std::cout << (report.graphical ? "graphical" : "not graphical") << "\n";
        if (report.first_violation_k)
            std::cout << "first violated inequality: k = " << *report.first_violation_k << "\n";
    }
    return report.graphical ? kExitOk : kExitNegative;
}

int cmd_fit(const std::string& degree_file, const CommonFitFlags& flags) {
    const auto degrees = degseq::read_degree_file(degree_file);
    const std::vector<double> d(degrees.begin(), degrees.end());
    const auto cfg = flags.config();
    return report_fit(degseq::fit_mle(d, cfg), cfg, flags);
}

int cmd_sample(const std::string& beta_file, std::uint64_t seed, const std::string& out_path) {
    const degseq::BetaVector beta(degseq::read_beta_file(beta_file));
    const degseq::SimpleGraph g = degseq::sample_graph(beta, seed);
    if (out_path.empty()) {
        degseq::write_graph_file(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot write to " + out_path);
        degseq::write_graph_file(out, g);
    }
    return kExitOk;
}

int cmd_limit(const std::string& f_file, int grid, const std::vector<std::string>& motif_files,
              bool canonicalize, const std::string& w_csv, bool json,
              const std::string& out_path) {
    const degseq::DegreeFunction f = degseq::read_degree_function_file(f_file);
    const auto diag = degseq::interior_diagnosis(f);
    if (!diag.interior()) {
        std::cerr << "error: degree function is not interior: "
                  << (!diag.bounds_ok
                          ? "condition (i) fails: f is not bounded strictly inside (0,1)"
                          : "condition (ii) fails: the continuum Erdos-Gallai functional "
                            "is not strictly positive")
                  << "\n";
        return kExitInfeasible;
    }
    degseq::GraphonFit fit = degseq::fit_graphon(f, grid);
    if (canonicalize) {
        // exact identity f(x) = int W(x,.) needs matching grids
        if (f.grid_size() == grid)
            fit = degseq::canonicalize_g(fit, f);
        else
            throw CLI::ValidationError("--canonicalize",
                                       "requires --grid equal to the f-file grid size");
    }

    nlohmann::json j = degseq::to_json(fit);
    j["canonicalized"] = canonicalize;
    j["motifs"] = nlohmann::json::array();
    for (const auto& path : motif_files) {
        const degseq::MotifGraph H = degseq::read_motif_file(path);
        j["motifs"].push_back({{"file", path},
                               {"vertices", H.vertex_count()},
                               {"edges", H.edge_count()},
                               {"t", degseq::hom_density_graphon(H, fit)}});
    }

    if (!w_csv.empty()) {
        std::ofstream out(w_csv);
        if (!out)
            throw std::runtime_error("cannot write to " + w_csv);
        for (int a = 1; a <= fit.M; ++a) {
            for (int b = 1; b <= fit.M; ++b)
                out << (b > 1 ? "," : "")
                    << fit.w(static_cast<double>(a) / fit.M, static_cast<double>(b) / fit.M);
            out << "\n";
        }
    }

    if (json) {
        emit(j, out_path);
    } else {
        std::cout << "grid: " << fit.M << "\nresidual: " << fit.residual << "\n";
        for (const auto& m : j["motifs"])
            std::cout << "t(" << m["file"].get<std::string>() << ") = " << m["t"].get<double>()
                      << "\n";
    }
    return kExitOk;
}

struct TrialResult {
    degseq::FitStatus status = degseq::FitStatus::InfeasibleDegrees;
    int iterations = 0;
    double max_error = 0;
    std::vector<double> beta;
    std::vector<double> beta_hat;
};

TrialResult run_trial(int n, double L, std::uint64_t trial_seed, const degseq::FitConfig& cfg) {
    std::mt19937_64 gen(trial_seed);
    std::uniform_real_distribution<double> dist(-L, L);
    std::vector<double> beta(n);
    for (double& b : beta)
        b = dist(gen);

    const degseq::BetaVector bv(beta);
    const degseq::SimpleGraph g = degseq::sample_graph(bv, splitmix64(trial_seed));
    const std::vector<double> d(g.degrees().begin(), g.degrees().end());

    TrialResult result;
    result.beta = beta;
    const auto report = degseq::fit_mle(d, cfg);
    result.status = report.status;
    result.iterations = report.iterations;
    if (report.beta_hat) {
        result.beta_hat = report.beta_hat->values();
        for (int i = 0; i < n; ++i)
            result.max_error = std::max(result.max_error, std::abs(result.beta_hat[i] - beta[i]));
    }
    return result;
}

int cmd_consistency(const std::vector<int>& n_list, double L, int trials, std::uint64_t seed,
                    const std::string& csv_path, const CommonFitFlags& flags) {
    if (L <= 0.0)
        throw CLI::ValidationError("--L", "must be positive");
    if (trials < 1)
        throw CLI::ValidationError("--trials", "must be at least 1");
    for (int n : n_list)
        if (n < 3)
            throw CLI::ValidationError("--n-list", "all n must be >= 3");

    const auto cfg = flags.config();

    // flat task list; per-trial seeds depend only on (seed, n, trial) so
    // the parallelism degree cannot change any output
    struct Task {
        int n;
        int trial;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int n : n_list)
        for (int t = 0; t < trials; ++t)
            tasks.push_back({n, t, splitmix64(seed ^ (static_cast<std::uint64_t>(n) << 24) ^
                                              static_cast<std::uint64_t>(t))});

    std::vector<TrialResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            results[i] = run_trial(tasks[i].n, L, tasks[i].seed, cfg);
    };
    const int threads = std::min<int>(thread_budget(), static_cast<int>(tasks.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    std::ofstream csv(csv_path);
    if (!csv)
        throw std::runtime_error("cannot write to " + csv_path);
    csv.precision(17);
    csv << "n,trial,i,beta,beta_hat\n";
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        if (results[k].beta_hat.empty())
            continue; // non-converged trials have no scatter points
        for (int i = 0; i < tasks[k].n; ++i)
            csv << tasks[k].n << "," << tasks[k].trial << "," << i << "," << results[k].beta[i]
                << "," << results[k].beta_hat[i] << "\n";
    }

    nlohmann::json j;
    j["schema"] = degseq::kJsonSchema;
    j["config"] = {{"n_list", n_list}, {"L", L},   {"trials", trials},
                   {"seed", seed},     {"tol", cfg.tol}, {"max_iter", cfg.max_iter}};
    j["scatter_csv"] = csv_path;
    j["per_n"] = nlohmann::json::array();
    std::size_t k = 0;
    for (int n : n_list) {
        nlohmann::json block;
        block["n"] = n;
        block["trials"] = nlohmann::json::array();
        std::vector<double> errors;
        for (int t = 0; t < trials; ++t, ++k) {
            const auto& r = results[k];
            nlohmann::json tj = {{"trial", t},
                                 {"status", degseq::to_string(r.status)},
                                 {"iterations", r.iterations}};
            if (!r.beta_hat.empty()) {
                tj["max_error"] = r.max_error;
                errors.push_back(r.max_error);
            } else {
                tj["max_error"] = nullptr;
            }
            block["trials"].push_back(tj);
        }
        block["converged_trials"] = errors.size();
        if (!errors.empty()) {
            std::sort(errors.begin(), errors.end());
            const std::size_t mid = errors.size() / 2;
            block["median_max_error"] = (errors.size() % 2 == 1)
                                            ? errors[mid]
                                            : 0.5 * (errors[mid - 1] + errors[mid]);
            block["max_max_error"] = errors.back();
        } else {
            block["median_max_error"] = nullptr;
            block["max_max_error"] = nullptr;
        }
        j["per_n"].push_back(block);
    }

    if (flags.json)
        emit(j, flags.out_path.empty() ? std::string() : flags.out_path);
    else
        for (const auto& block : j["per_n"])
            std::cout << "n=" << block["n"] << " converged=" << block["converged_trials"]
                      << " median_max_error=" << block["median_max_error"].dump() << "\n";
    return kExitOk;
}

int cmd_posterior_mode(const std::string& degree_file, double n0, const std::string& d0_file,
                       const CommonFitFlags& flags) {
    const auto degrees = degseq::read_degree_file(degree_file);
    const std::vector<double> d_obs(degrees.begin(), degrees.end());
    const auto d0 = degseq::read_beta_file(d0_file);
    const auto cfg = flags.config();
    return report_fit(degseq::posterior_mode(d_obs, n0, d0, cfg), cfg, flags);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree sequence toolkit"};
    app.require_subcommand(1);

    // check
    std::string check_file, check_out;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "Erdos-Gallai graphicality check");
    check->add_option("degree_file", check_file)->required();
    check->add_flag("--json", check_json);
    check->add_option("--out", check_out);

    // fit
    std::string fit_file;
    CommonFitFlags fit_flags;
    auto* fit = app.add_subcommand("fit", "maximum likelihood fit of the beta model");
    fit->add_option("degree_file", fit_file)->required();
    fit_flags.attach(fit);

    // sample
    std::string sample_file, sample_out;
    std::uint64_t sample_seed = 0;
    auto* sample = app.add_subcommand("sample", "sample a graph from the beta model");
    sample->add_option("beta_file", sample_file)->required();
    sample->add_option("--seed", sample_seed);
    sample->add_option("--out", sample_out, "graph file path (default stdout)");

    // limit
    std::string limit_file, limit_out, limit_wcsv;
    std::vector<std::string> limit_motifs;
    int limit_grid = 256;
    bool limit_json = false, limit_canon = false;
    auto* limit = app.add_subcommand("limit", "fit the graphon of a degree function");
    limit->add_option("f_file", limit_file)->required();
    limit->add_option("--grid", limit_grid, "fit grid size (default 256)");
    limit->add_option("--motif", limit_motifs, "motif file(s) for homomorphism densities");
    limit->add_flag("--canonicalize", limit_canon, "enforce f(x) = int W(x,.) exactly");
    limit->add_option("--w-csv", limit_wcsv, "write the dense W grid as CSV here");
    limit->add_flag("--json", limit_json);
    limit->add_option("--out", limit_out);

    // consistency
    std::vector<int> cons_n;
    double cons_L = 1.0;
    int cons_trials = 20;
    std::uint64_t cons_seed = 0;
    std::string cons_csv;
    CommonFitFlags cons_flags;
    auto* cons = app.add_subcommand("consistency", "MLE consistency experiment");
    cons->add_option("--n-list", cons_n, "graph sizes")->required()->delimiter(',');
    cons->add_option("--L", cons_L, "beta ~ Uniform[-L, L]");
    cons->add_option("--trials", cons_trials);
    cons->add_option("--seed", cons_seed);
    cons->add_option("--out", cons_csv, "scatter CSV path")->required();
    cons->add_option("--tol", cons_flags.tol);
    cons->add_option("--max-iter", cons_flags.max_iter);
    cons->add_flag("--json", cons_flags.json);

    // posterior-mode
    std::string post_file, post_d0;
    double post_n0 = 1.0;
    CommonFitFlags post_flags;
    auto* post = app.add_subcommand("posterior-mode", "mode of the conjugate posterior");
    post->add_option("degree_file", post_file)->required();
    post->add_option("--n0", post_n0, "prior weight")->required();
    post->add_option("--d0-file", post_d0, "prior mean degrees")->required();
    post_flags.attach(post);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check)
            return cmd_check(check_file, check_json, check_out);
        if (*fit)
            return cmd_fit(fit_file, fit_flags);
        if (*sample)
            return cmd_sample(sample_file, sample_seed, sample_out);
        if (*limit)
            return cmd_limit(limit_file, limit_grid, limit_motifs, limit_canon, limit_wcsv,
                             limit_json, limit_out);
        if (*cons)
            return cmd_consistency(cons_n, cons_L, cons_trials, cons_seed, cons_csv, cons_flags);
        if (*post)
            return cmd_posterior_mode(post_file, post_n0, post_d0, post_flags);
    } catch (const degseq::infeasible_degrees_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const degseq::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
