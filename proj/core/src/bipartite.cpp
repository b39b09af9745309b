#include "degseq/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace degseq {

BipartiteMargins::BipartiteMargins(std::vector<int> rows, std::vector<int> cols)
    : row_sums(std::move(rows)), col_sums(std::move(cols)) {
    if (row_sums.empty() || col_sums.empty())
        throw std::invalid_argument("margins must be nonempty");
    for (int r : row_sums)
        if (r < 0 || r > n())
            throw std::invalid_argument("row sum out of range [0, n]");
    for (int c : col_sums)
        if (c < 0 || c > m())
            throw std::invalid_argument("column sum out of range [0, m]");
}

namespace {

// Prefix condition against the conjugate of the other margin:
// sum_{i<=k} a_[i] <= sum_{i<=k} b*_i for all k <= len(a).
bool prefix_condition(std::vector<int> a, const std::vector<int>& b) {
    std::sort(a.begin(), a.end(), std::greater<int>());
    long long lhs = 0, rhs = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        lhs += a[k];
        long long conj = 0; // b*_{k+1} = #{j : b_j >= k+1}
        for (int bj : b)
            if (bj >= static_cast<int>(k) + 1)
                ++conj;
        rhs += conj;
        if (lhs > rhs)
            return false;
    }
    return true;
}

} // namespace

bool gale_ryser_check(const BipartiteMargins& margins) {
    const long long total_r =
        std::accumulate(margins.row_sums.begin(), margins.row_sums.end(), 0LL);
    const long long total_c =
        std::accumulate(margins.col_sums.begin(), margins.col_sums.end(), 0LL);
    if (total_r != total_c)
        return false;
    return prefix_condition(margins.row_sums, margins.col_sums) &&
           prefix_condition(margins.col_sums, margins.row_sums);
}

bool claim_margins_feasible(const std::vector<std::vector<double>>& p,
                            const std::vector<int>& row_sums,
                            const std::vector<int>& col_sums, double delta) {
    if (delta <= 0.0 || delta >= 0.5)
        throw std::invalid_argument("delta must lie in (0, 1/2)");
    const int m = static_cast<int>(p.size());
    if (m == 0 || static_cast<int>(row_sums.size()) != m)
        throw std::invalid_argument("row count mismatch");
    const int n = static_cast<int>(p[0].size());
    if (static_cast<int>(col_sums.size()) != n)
        throw std::invalid_argument("column count mismatch");
    for (const auto& row : p) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("ragged probability matrix");
        for (double v : row)
            if (v < delta || v > 1.0 - delta)
                throw std::invalid_argument("probability entry outside [delta, 1-delta]");
    }

    const long long total_r = std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
    const long long total_c = std::accumulate(col_sums.begin(), col_sums.end(), 0LL);
    if (total_r != total_c)
        return false;

    const double row_tol = 0.25 * delta * delta * n;
    const double col_tol = 0.25 * delta * delta * m;
    for (int i = 0; i < m; ++i) {
        const double s = std::accumulate(p[i].begin(), p[i].end(), 0.0);
        if (std::abs(row_sums[i] - s) > row_tol)
            return false;
    }
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < m; ++i)
            s += p[i][j];
        if (std::abs(col_sums[j] - s) > col_tol)
            return false;
    }
    return true;
}

} // namespace degseq
