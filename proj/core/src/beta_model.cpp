#include "degseq/beta_model.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace degseq {

namespace {

double softplus(double t) {
    // log(1 + e^t) without overflow.
    return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

} // namespace

BetaVector::BetaVector(std::vector<double> beta) : beta_(std::move(beta)) {
    if (beta_.size() < 2)
        throw std::invalid_argument("beta vector needs at least two entries");
    linf_ = 0.0;
    for (double b : beta_) {
        if (!std::isfinite(b))
            throw std::invalid_argument("beta entries must be finite");
        linf_ = std::max(linf_, std::abs(b));
    }
}

double edge_prob(double bi, double bj) {
    const double t = bi + bj;
    if (t >= 0.0)
        return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

std::vector<double> expected_degrees(const BetaVector& beta) {
    const int n = beta.size();
    std::vector<double> d(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double p = edge_prob(beta[i], beta[j]);
            d[i] += p;
            d[j] += p;
        }
    }
    return d;
}

SimpleGraph sample_graph(const BetaVector& beta, std::uint64_t seed) {
    const int n = beta.size();
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // One draw per pair regardless of outcome keeps the stream aligned.
            const double u = unif(gen);
            if (u < edge_prob(beta[i], beta[j]))
                edges.emplace_back(i, j);
        }
    }
    return SimpleGraph(n, std::move(edges));
}

double log_likelihood(const BetaVector& beta, const std::vector<double>& d) {
    const int n = beta.size();
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("degree vector length mismatch");
    double value = 0.0;
    for (int i = 0; i < n; ++i)
        value += beta[i] * d[i];
    return value - log_partition(beta);
}

double log_partition(const BetaVector& beta) {
    const int n = beta.size();
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m += softplus(beta[i] + beta[j]);
    return m;
}

} // namespace degseq
