#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "degseq/errors.hpp"
#include "degseq/io.hpp"

using namespace degseq;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static const fs::path dir = [] {
        auto p = fs::temp_directory_path() / "degseq-cli-tests";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

#ifdef DEGSEQ_CLI_PATH
// Runs the CLI, returns its exit code; stdout is captured into out.
int run_cli(const std::string& args, std::string* out = nullptr) {
    const fs::path stdout_file = scratch_dir() / "stdout.txt";
    const std::string cmd =
        std::string(DEGSEQ_CLI_PATH) + " " + args + " > " + stdout_file.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (out)
        *out = slurp(stdout_file);
    return WEXITSTATUS(status);
}
#endif

} // namespace

TEST_CASE("degree file round trip and errors") {
    std::istringstream good("3 1\n1 1\n");
    CHECK(read_degree_file(good) == std::vector<int>{3, 1, 1, 1});

    std::istringstream bad("1 x 2\n");
    CHECK_THROWS_AS(read_degree_file(bad), parse_error);
    std::istringstream neg("1 -2\n");
    CHECK_THROWS_AS(read_degree_file(neg), parse_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_degree_file(empty), parse_error);

    try {
        std::istringstream late("1 1\n1 1\noops\n");
        read_degree_file(late);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("degree function file") {
    std::istringstream good("4\n0.7\n0.7 0.7 0.4 0.4\n");
    const auto f = read_degree_function_file(good);
    CHECK(f.grid_size() == 4);
    CHECK(f.f0() == 0.7);
    CHECK(f(1.0) == 0.4);

    std::istringstream short_file("4\n0.7 0.7 0.4\n");
    CHECK_THROWS_AS(read_degree_function_file(short_file), parse_error);
    std::istringstream bad_m("0\n0.5\n");
    CHECK_THROWS_AS(read_degree_function_file(bad_m), parse_error);
}

TEST_CASE("beta file") {
    std::istringstream good("0.25\n-1.5\n0\n");
    CHECK(read_beta_file(good) == std::vector<double>{0.25, -1.5, 0.0});
    std::istringstream empty("\n\n");
    CHECK_THROWS_AS(read_beta_file(empty), parse_error);
}

TEST_CASE("graph file round trip") {
    std::istringstream good("4\n0 1\n1 3\n");
    const auto g = read_graph_file(good);
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 3));

    std::ostringstream out;
    write_graph_file(out, g);
    std::istringstream back(out.str());
    CHECK(read_graph_file(back).edges() == g.edges());

    std::istringstream self_loop("3\n1 1\n");
    CHECK_THROWS_AS(read_graph_file(self_loop), parse_error);
    std::istringstream reversed("3\n2 1\n");
    CHECK_THROWS_AS(read_graph_file(reversed), parse_error);
    std::istringstream oob("3\n0 3\n");
    CHECK_THROWS_AS(read_graph_file(oob), parse_error);
}

TEST_CASE("motif file") {
    std::istringstream good("3\n1 2\n2 3\n1 3\n");
    const auto m = read_motif_file(good);
    CHECK(m.vertex_count() == 3);
    CHECK(m.edge_count() == 3);

    std::istringstream dangling("3\n1\n");
    CHECK_THROWS_AS(read_motif_file(dangling), parse_error);
}

TEST_CASE("json reports carry the schema tag") {
    EgReport eg;
    eg.graphical = true;
    eg.slack = {0, 1};
    const auto j = to_json(eg);
    CHECK(j["schema"] == "degseq-kit/1");
    CHECK(j["graphical"] == true);
    CHECK(j["first_violation_k"].is_null());

    FitReport fr;
    fr.status = FitStatus::Diverged;
    const auto jf = to_json(fr, FitConfig{});
    CHECK(jf["schema"] == "degseq-kit/1");
    CHECK(jf["status"] == "Diverged");
    CHECK(jf["beta_hat"].is_null());
    CHECK(jf["config"]["tol"] == 1e-10);
}

#ifdef DEGSEQ_CLI_PATH

TEST_CASE("cli check") {
    const auto graphical = write_file("d_ok.txt", "1 1\n");
    const auto not_graphical = write_file("d_bad.txt", "2 0\n");
    const auto malformed = write_file("d_malformed.txt", "1 potato\n");

    std::string out;
    CHECK(run_cli("check " + graphical.string() + " --json", &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["graphical"] == true);
    CHECK(j["schema"] == "degseq-kit/1");

    CHECK(run_cli("check " + not_graphical.string() + " --json", &out) == 1);
    j = nlohmann::json::parse(out);
    CHECK(j["graphical"] == false);
    CHECK(j["first_violation_k"] == 1);

    CHECK(run_cli("check " + malformed.string(), &out) == 2);
    CHECK(run_cli("check " + (scratch_dir() / "no-such-file.txt").string(), &out) == 2);
}

TEST_CASE("cli fit") {
    std::ostringstream regular;
    for (int i = 0; i < 50; ++i)
        regular << "20\n";
    const auto reg_file = write_file("d_regular.txt", regular.str());
    std::string out;
    CHECK(run_cli("fit " + reg_file.string() + " --json", &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["status"] == "Converged");
    const double expected = 0.5 * std::log(20.0 / 29.0);
    for (double b : j["beta_hat"])
        CHECK(b == doctest::Approx(expected).epsilon(1e-8));

    const auto star = write_file("d_star.txt", "5 1 1 1 1 1\n");
    CHECK(run_cli("fit " + star.string(), &out) == 3);

    const auto zero = write_file("d_zero.txt", "0 1 1\n");
    CHECK(run_cli("fit " + zero.string(), &out) == 4);

    // flags reach the solver
    CHECK(run_cli("fit " + reg_file.string() + " --tol 1e-4 --max-iter 10 --json", &out) == 0);
    CHECK(nlohmann::json::parse(out)["config"]["tol"] == 1e-4);
}

TEST_CASE("cli sample") {
    std::ostringstream betas;
    for (int i = 0; i < 20; ++i)
        betas << "-10\n";
    const auto beta_file = write_file("beta_cold.txt", betas.str());
    const auto out1 = scratch_dir() / "g1.txt";
    const auto out2 = scratch_dir() / "g2.txt";

    CHECK(run_cli("sample " + beta_file.string() + " --seed 5 --out " + out1.string()) == 0);
    CHECK(run_cli("sample " + beta_file.string() + " --seed 5 --out " + out2.string()) == 0);
    CHECK(slurp(out1) == slurp(out2)); // deterministic

    const auto g = read_graph_file(out1.string());
    CHECK(g.size() == 20);
    CHECK(g.edge_count() <= 1); // beta = -10: edge prob ~2e-9 per pair
}

TEST_CASE("cli limit") {
    std::ostringstream ff;
    ff << "8\n0.5\n";
    for (int i = 0; i < 8; ++i)
        ff << "0.5 ";
    ff << "\n";
    const auto f_file = write_file("f_half.txt", ff.str());
    const auto motif = write_file("triangle.txt", "3\n1 2\n2 3\n1 3\n");

    // canonicalized fit on the file's own grid is exact for f == 0.5
    std::string out;
    CHECK(run_cli("limit " + f_file.string() + " --grid 8 --canonicalize --motif " +
                      motif.string() + " --json",
                  &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["M"] == 8);
    for (double g : j["g"])
        CHECK(std::abs(g) <= 1e-8);
    REQUIRE(j["motifs"].size() == 1);
    CHECK(j["motifs"][0]["t"] == doctest::Approx(0.125).epsilon(1e-9));

    // refined grid carries the O(1/M) diagonal bias
    CHECK(run_cli("limit " + f_file.string() + " --grid 64 --json", &out) == 0);
    const auto j64 = nlohmann::json::parse(out);
    CHECK(j64["M"] == 64);
    for (double g : j64["g"])
        CHECK(std::abs(g) <= 2.0 / 64);

    const auto f_one = write_file("f_one.txt", "4\n1\n1 1 1 1\n");
    CHECK(run_cli("limit " + f_one.string() + " --grid 16", &out) == 4);
}

TEST_CASE("cli consistency is deterministic and seed-sensitive") {
    const auto csv1 = scratch_dir() / "c1.csv";
    const auto csv2 = scratch_dir() / "c2.csv";
    const auto csv3 = scratch_dir() / "c3.csv";
    const std::string base = "consistency --n-list 20,30 --trials 2 --L 1 ";
    std::string out;
    CHECK(run_cli(base + "--seed 9 --out " + csv1.string() + " --json", &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["schema"] == "degseq-kit/1");
    CHECK(j["per_n"].size() == 2);

    CHECK(run_cli(base + "--seed 9 --out " + csv2.string(), &out) == 0);
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(run_cli(base + "--seed 10 --out " + csv3.string(), &out) == 0);
    CHECK(slurp(csv1) != slurp(csv3));

    // header plus n * trials rows per n
    std::istringstream csv(slurp(csv1));
    std::string line;
    int rows = 0;
    while (std::getline(csv, line))
        ++rows;
    CHECK(rows == 1 + 2 * 20 + 2 * 30);

    CHECK(run_cli("consistency --n-list 20 --trials 2 --L 0 --seed 1 --out " +
                  (scratch_dir() / "c4.csv").string()) == 2);
    CHECK(run_cli("consistency --n-list 2 --trials 2 --L 1 --seed 1 --out " +
                  (scratch_dir() / "c5.csv").string()) == 2);
}

TEST_CASE("cli consistency is independent of thread count") {
    const auto csv1 = scratch_dir() / "t1.csv";
    const auto csv2 = scratch_dir() / "t2.csv";
    const std::string base = "consistency --n-list 25 --trials 4 --L 1 --seed 3 --out ";
    const fs::path stdout_file = scratch_dir() / "stdout.txt";
    std::string cmd1 = "DEGSEQ_THREADS=1 " + std::string(DEGSEQ_CLI_PATH) + " " + base +
                       csv1.string() + " > " + stdout_file.string();
    std::string cmd2 = "DEGSEQ_THREADS=4 " + std::string(DEGSEQ_CLI_PATH) + " " + base +
                       csv2.string() + " > " + stdout_file.string();
    CHECK(WEXITSTATUS(std::system(cmd1.c_str())) == 0);
    CHECK(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
    CHECK(slurp(csv1) == slurp(csv2));
}

TEST_CASE("cli posterior-mode") {
    const auto obs = write_file("d_obs.txt", "1 1\n");
    const auto prior = write_file("d_prior.txt", "0.5\n0.5\n");
    std::string out;
    CHECK(run_cli("posterior-mode " + obs.string() + " --n0 1 --d0-file " + prior.string() +
                      " --json",
                  &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["status"] == "Converged");
    const double expected = 0.5 * std::log(3.0);
    CHECK(j["beta_hat"][0] == doctest::Approx(expected).epsilon(1e-8));
    CHECK(j["beta_hat"][1] == doctest::Approx(expected).epsilon(1e-8));

    CHECK(run_cli("posterior-mode " + obs.string() + " --n0 0 --d0-file " + prior.string()) ==
          2);
}

#endif // DEGSEQ_CLI_PATH
