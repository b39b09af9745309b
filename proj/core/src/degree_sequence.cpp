#include "degseq/degree_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "degseq/graph.hpp"

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> degrees) {
    const int n = static_cast<int>(degrees.size());
    if (n == 0)
        throw std::invalid_argument("degree sequence must be nonempty");
    // entries above n-1 are accepted here so checkers can report them as
    // Erdos-Gallai violations instead of refusing the input outright
    for (int d : degrees) {
        if (d < 0)
            throw std::invalid_argument("degree must be nonnegative, got " + std::to_string(d));
    }
    perm_.resize(degrees.size());
    std::iota(perm_.begin(), perm_.end(), 0);
    std::stable_sort(perm_.begin(), perm_.end(),
                     [&](int a, int b) { return degrees[a] > degrees[b]; });
    degrees_.reserve(degrees.size());
    for (int idx : perm_)
        degrees_.push_back(degrees[idx]);
    sum_ = std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

EgReport erdos_gallai_check(const DegreeSequence& d) {
    const int n = d.size();
    const auto& deg = d.degrees();

    EgReport report;
    report.slack.resize(n);

    // prefix[k] = sum of the k largest degrees
    std::vector<long long> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + deg[i];

    for (int k = 1; k <= n; ++k) {
        // First index i > k (0-based >= k) with deg[i] < k; deg is nonincreasing.
        auto it = std::lower_bound(deg.begin() + k, deg.end(), k,
                                   [](int value, int bound) { return value >= bound; });
        const long long cnt_ge = it - (deg.begin() + k);
        const long long tail_small = prefix[n] - prefix[k + cnt_ge];
        const long long rhs = static_cast<long long>(k) * (k - 1) + cnt_ge * k + tail_small;
        const long long lhs = prefix[k];
        report.slack[k - 1] = rhs - lhs;
        if (rhs < lhs && !report.first_violation_k)
            report.first_violation_k = k;
    }

    report.graphical = d.even_sum() && !report.first_violation_k;
    return report;
}

std::optional<SimpleGraph> realize_havel_hakimi(const DegreeSequence& d) {
    const int n = d.size();
    if (!d.even_sum())
        return std::nullopt;

    // (remaining degree, vertex id), kept sorted nonincreasing each round.
    std::vector<std::pair<int, int>> rem(n);
    for (int i = 0; i < n; ++i)
        rem[i] = {d.degrees()[i], i};

    std::vector<std::pair<int, int>> edges;
    for (;;) {
        std::stable_sort(rem.begin(), rem.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        const int k = rem[0].first;
        if (k == 0)
            break;
        if (k > n - 1 || k >= static_cast<int>(rem.size()))
            return std::nullopt;
        const int u = rem[0].second;
        rem[0].first = 0;
        for (int j = 1; j <= k; ++j) {
            if (rem[j].first <= 0)
                return std::nullopt;
            --rem[j].first;
            const int v = rem[j].second;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return SimpleGraph(n, std::move(edges));
}

double min_eg_functional(const DegreeSequence& d, double b) {
    if (b <= 0.0 || b > 1.0)
        throw std::invalid_argument("b must lie in (0, 1]");
    const int n = d.size();
    const auto& deg = d.degrees();

    std::vector<long long> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + deg[i];

    int k_min = static_cast<int>(std::ceil(b * n - 1e-12));
    k_min = std::max(k_min, 1);

    long long best = 0;
    bool first = true;
    for (int k = k_min; k <= n; ++k) {
        long long tail_min = 0;
        for (int i = k; i < n; ++i)
            tail_min += std::min<long long>(deg[i], k);
        const long long value = tail_min + static_cast<long long>(k) * (k - 1) - prefix[k];
        if (first || value < best) {
            best = value;
            first = false;
        }
    }
    return static_cast<double>(best) / (static_cast<double>(n) * n);
}

} // namespace degseq
