#pragma once

#include <cstdint>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// Parameter vector of the exponential model with the degree sequence as
/// sufficient statistic. Entries must be finite; the sup norm is recorded
/// at construction.
class BetaVector {
public:
    explicit BetaVector(std::vector<double> beta);

    int size() const { return static_cast<int>(beta_.size()); }
    const std::vector<double>& values() const { return beta_; }
    double operator[](int i) const { return beta_[i]; }
    double linf() const { return linf_; }

private:
    std::vector<double> beta_;
    double linf_;
};

/// P(edge ij) = sigmoid(b_i + b_j), computed with the two-branch stable
/// form (no overflow for |b_i + b_j| up to ~700).
double edge_prob(double bi, double bj);

/// Component i is sum_{j != i} edge_prob(beta_i, beta_j); streams pairs
/// without materializing the probability matrix.
std::vector<double> expected_degrees(const BetaVector& beta);

/// Each pair {i,j} becomes an edge independently with probability
/// edge_prob(beta_i, beta_j). Deterministic for a fixed seed.
SimpleGraph sample_graph(const BetaVector& beta, std::uint64_t seed);

/// sum_i beta_i d_i - sum_{i<j} log(1 + e^{beta_i+beta_j}). Real-valued d
/// is accepted so the same code serves posterior pseudo-degrees.
double log_likelihood(const BetaVector& beta, const std::vector<double>& d);

/// Log partition function m(beta) = sum_{i<j} log(1 + e^{beta_i+beta_j}),
/// via stable softplus.
double log_partition(const BetaVector& beta);

} // namespace degseq
