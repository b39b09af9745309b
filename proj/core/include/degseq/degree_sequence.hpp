#pragma once

#include <optional>
#include <vector>

namespace degseq {

class SimpleGraph;

/// A degree sequence stored sorted nonincreasing. Entries must lie in
/// [0, n-1]; the permutation applied by the constructor is recorded so
/// callers can map results back to input order.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> degrees);

    int size() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    /// sort_permutation()[k] is the original index of the k-th largest degree.
    const std::vector<int>& sort_permutation() const { return perm_; }
    long long sum() const { return sum_; }
    bool even_sum() const { return sum_ % 2 == 0; }

private:
    std::vector<int> degrees_;
    std::vector<int> perm_;
    long long sum_ = 0;
};

struct EgReport {
    bool graphical = false;
    std::optional<int> first_violation_k;
    /// slack[k-1] = k(k-1) + sum_{i>k} min{d_i,k} - sum_{i<=k} d_i
    std::vector<long long> slack;
};

/// Erdos-Gallai criterion: graphical iff the degree sum is even and every
/// per-k slack is nonnegative.
EgReport erdos_gallai_check(const DegreeSequence& d);

/// Builds a simple graph realizing d by the Havel-Hakimi reduction, or
/// returns nullopt iff d is not graphical. Vertex i of the result carries
/// the i-th degree of the sorted sequence.
std::optional<SimpleGraph> realize_havel_hakimi(const DegreeSequence& d);

/// (1/n^2) * min over k >= b*n of the Erdos-Gallai functional
/// sum_{j>k} min{d_j,k} + k(k-1) - sum_{i<=k} d_i, scanning prefixes only.
double min_eg_functional(const DegreeSequence& d, double b);

} // namespace degseq
