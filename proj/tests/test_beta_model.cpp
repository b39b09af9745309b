#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "degseq/beta_model.hpp"

#include "oracles.hpp"

using namespace degseq;

TEST_CASE("edge_prob values and stability") {
    CHECK(edge_prob(0.0, 0.0) == doctest::Approx(0.5));
    const double e2 = std::exp(2.0);
    CHECK(edge_prob(1.0, 1.0) == doctest::Approx(e2 / (1.0 + e2)).epsilon(1e-15));
    CHECK(edge_prob(1.5, -1.5) == doctest::Approx(0.5));
    // symmetry
    CHECK(edge_prob(0.3, -1.1) == edge_prob(-1.1, 0.3));
    // no overflow at extreme arguments
    CHECK(edge_prob(400.0, 350.0) == doctest::Approx(1.0));
    CHECK(edge_prob(-400.0, -350.0) == doctest::Approx(0.0));
    CHECK(std::isfinite(edge_prob(700.0, 700.0)));
    CHECK(std::isfinite(edge_prob(-700.0, -700.0)));
    // complement identity
    CHECK(edge_prob(0.7, 0.4) + edge_prob(-0.7, -0.4) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("BetaVector validation") {
    CHECK_THROWS_AS(BetaVector({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(BetaVector({0.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(BetaVector({0.0, INFINITY}), std::invalid_argument);
    BetaVector b({-2.0, 1.0, 0.5});
    CHECK(b.linf() == doctest::Approx(2.0));
}

TEST_CASE("expected_degrees") {
    // constant beta: each expected degree is (n-1) sigmoid(2b)
    BetaVector b(std::vector<double>(5, 0.3));
    const double p = edge_prob(0.3, 0.3);
    for (double v : expected_degrees(b))
        CHECK(v == doctest::Approx(4.0 * p));

    // matches direct pair sum on random input
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> bd(-2, 2);
    std::vector<double> beta(12);
    for (double& x : beta)
        x = bd(gen);
    const auto dbar = expected_degrees(BetaVector(beta));
    for (int i = 0; i < 12; ++i) {
        double s = 0;
        for (int j = 0; j < 12; ++j)
            if (j != i)
                s += edge_prob(beta[i], beta[j]);
        CHECK(dbar[i] == doctest::Approx(s).epsilon(1e-14));
    }
}

TEST_CASE("sample_graph determinism and edge frequencies") {
    BetaVector b(std::vector<double>(30, 0.0));
    const SimpleGraph g1 = sample_graph(b, 42);
    const SimpleGraph g2 = sample_graph(b, 42);
    CHECK(g1.edges() == g2.edges());
    const SimpleGraph g3 = sample_graph(b, 43);
    CHECK(g1.edges() != g3.edges());

    // empirical edge frequency near 0.5 for beta = 0
    long long total = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t)
        total += sample_graph(b, 1000 + t).edge_count();
    const double freq = static_cast<double>(total) / (trials * 30 * 29 / 2);
    CHECK(freq == doctest::Approx(0.5).epsilon(0.03));

    // extreme betas pin the graph
    CHECK(sample_graph(BetaVector(std::vector<double>(10, 40.0)), 7).edge_count() == 45);
    CHECK(sample_graph(BetaVector(std::vector<double>(10, -40.0)), 7).edge_count() == 0);
}

TEST_CASE("log_likelihood and log_partition") {
    // n=2, beta=(0,0): ll(d=(1,1)) = -log 2
    BetaVector zero2({0.0, 0.0});
    CHECK(log_partition(zero2) == doctest::Approx(std::log(2.0)));
    CHECK(log_likelihood(zero2, {1.0, 1.0}) == doctest::Approx(-std::log(2.0)));

    // partition matches direct softplus sum and stays finite at extremes
    std::vector<double> beta = {3.0, -1.0, 0.5, 2.0};
    double direct = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            direct += std::log1p(std::exp(beta[i] + beta[j]));
    CHECK(log_partition(BetaVector(beta)) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(std::isfinite(log_partition(BetaVector(std::vector<double>(5, 400.0)))));

    // gradient of the log-likelihood in beta is d - expected_degrees
    const std::vector<double> d = {2.0, 1.0, 2.0, 1.0};
    const auto grad = oracles::finite_difference_gradient(
        [&](const std::vector<double>& x) { return log_likelihood(BetaVector(x), d); }, beta);
    const auto dbar = expected_degrees(BetaVector(beta));
    for (int i = 0; i < 4; ++i)
        CHECK(grad[i] == doctest::Approx(d[i] - dbar[i]).epsilon(1e-6));
}
