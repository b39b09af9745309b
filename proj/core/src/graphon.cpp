#include "degseq/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "degseq/beta_model.hpp"
#include "degseq/errors.hpp"

namespace degseq {

namespace {

double sigmoid(double t) {
    if (t >= 0.0)
        return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

MotifGraph::MotifGraph(int k, std::vector<std::pair<int, int>> edges) : k_(k) {
    if (k < 1 || k > 8)
        throw std::invalid_argument("motif must have between 1 and 8 vertices");
    for (auto& [a, b] : edges) {
        if (a < 1 || a > k || b < 1 || b > k)
            throw std::invalid_argument("motif edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("motif may not contain loops");
        --a;
        --b;
        if (a > b)
            std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("motif may not contain multi-edges");
    edges_ = std::move(edges);
}

double GraphonFit::g_at(double x) const {
    if (x <= 0.0)
        return g0;
    int cell = static_cast<int>(std::ceil(x * M - 1e-12));
    cell = std::clamp(cell, 1, M);
    return g[cell - 1];
}

double GraphonFit::w(double x, double y) const {
    return sigmoid(g_at(x) + g_at(y));
}

double hom_density_graph(const MotifGraph& H, const SimpleGraph& G) {
    const int k = H.vertex_count();
    const int n = G.size();

    // earlier[t] = neighbours of t in H among vertices < t
    std::vector<std::vector<int>> earlier(k);
    for (const auto& [a, b] : H.edges())
        earlier[b].push_back(a);

    std::vector<int> assign(k, 0);
    long double count = 0;
    // Iterative DFS over the k map slots with edge pruning.
    int depth = 0;
    assign[0] = -1;
    while (depth >= 0) {
        ++assign[depth];
        if (assign[depth] >= n) {
            --depth;
            continue;
        }
        bool ok = true;
        for (int a : earlier[depth]) {
            if (!G.adjacent(assign[a], assign[depth])) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        if (depth == k - 1) {
            count += 1;
        } else {
            ++depth;
            assign[depth] = -1;
        }
    }
    return static_cast<double>(count / std::pow(static_cast<long double>(n), k));
}

double hom_density_graphon(const MotifGraph& H, const GraphonFit& fit) {
    const int k = H.vertex_count();
    int m = (k >= 4) ? std::min(fit.M, 64) : fit.M;
    if (std::pow(static_cast<double>(m), k) > 2147483648.0)
        throw std::invalid_argument("motif grid budget exceeded: lower the fit grid size M");

    // Subsample g by step lookup at the coarse cell right endpoints.
    std::vector<double> g(m);
    for (int j = 1; j <= m; ++j)
        g[j - 1] = fit.g_at(static_cast<double>(j) / m);

    std::vector<double> w(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            w[static_cast<std::size_t>(a) * m + b] = sigmoid(g[a] + g[b]);

    std::vector<std::vector<int>> earlier(k);
    for (const auto& [a, b] : H.edges())
        earlier[b].push_back(a);

    // DFS over grid cells with running partial products; Kahan-compensated
    // accumulation keeps the sum exact enough for tight tolerances.
    std::vector<int> cell(k, 0);
    std::vector<double> partial(k + 1, 1.0);
    double sum = 0.0, comp = 0.0;
    int depth = 0;
    cell[0] = -1;
    while (depth >= 0) {
        ++cell[depth];
        if (cell[depth] >= m) {
            --depth;
            continue;
        }
        double prod = partial[depth];
        for (int a : earlier[depth])
            prod *= w[static_cast<std::size_t>(cell[a]) * m + cell[depth]];
        if (depth == k - 1) {
            const double y = prod - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        } else {
            partial[depth + 1] = prod;
            ++depth;
            cell[depth] = -1;
        }
    }
    return sum / std::pow(static_cast<double>(m), k);
}

GraphonFit fit_graphon(const DegreeFunction& f, int n_grid, const FitConfig& cfg) {
    if (n_grid < 2)
        throw std::invalid_argument("grid size must be at least 2");
    const auto diag = interior_diagnosis(f);
    if (!diag.interior()) {
        std::string why;
        if (!diag.bounds_ok)
            why = "condition (i) fails: f is not bounded strictly inside (0,1)";
        else
            why = "condition (ii) fails: continuum Erdos-Gallai functional G_f is not strictly positive";
        throw std::invalid_argument("degree function is not interior: " + why);
    }

    std::vector<double> targets(n_grid);
    for (int i = 1; i <= n_grid; ++i)
        targets[i - 1] = n_grid * f(static_cast<double>(i) / n_grid);

    const FitReport report = fit_mle(targets, cfg);
    if (report.status == FitStatus::InfeasibleDegrees)
        throw infeasible_degrees_error("graphon fit targets infeasible for this grid size");
    if (report.status != FitStatus::Converged)
        throw std::runtime_error("graphon fit did not converge: " + to_string(report.status));

    GraphonFit fit;
    fit.M = n_grid;
    fit.g = report.beta_hat->values();
    fit.g0 = fit.g.front();

    double residual = 0.0;
    for (int i = 1; i <= n_grid; ++i) {
        double integral = 0.0;
        for (int j = 1; j <= n_grid; ++j)
            integral += sigmoid(fit.g[i - 1] + fit.g[j - 1]);
        integral /= n_grid;
        residual = std::max(residual, std::abs(f(static_cast<double>(i) / n_grid) - integral));
    }
    fit.residual = residual;
    return fit;
}

double psi(double z, const GraphonFit& fit) {
    double s = 0.0;
    for (double gy : fit.g)
        s += sigmoid(z + gy);
    return s / fit.M;
}

double psi_inverse(double y, const GraphonFit& fit) {
    if (!(y > 0.0 && y < 1.0))
        throw std::invalid_argument("psi_inverse requires y strictly inside (0,1)");
    double lo = -1.0, hi = 1.0;
    while (psi(lo, fit) >= y && lo > -800.0)
        lo *= 2.0;
    while (psi(hi, fit) <= y && hi < 800.0)
        hi *= 2.0;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double value = psi(mid, fit);
        if (std::abs(value - y) <= 1e-12)
            break;
        if (value < y)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

GraphonFit canonicalize_g(const GraphonFit& fit, const DegreeFunction& f) {
    if (f.grid_size() != fit.M)
        throw std::invalid_argument("degree function grid does not match the fit");
    GraphonFit out = fit;

    // The everywhere-identity f(x) = int W(x,.) couples all grid values, so a
    // single substitution g <- psi^{-1}(f) is not enough; iterate the damped
    // map to its fixed point.
    for (int sweep = 0; sweep < 500; ++sweep) {
        double change = 0.0;
        std::vector<double> target(out.M);
        for (int i = 1; i <= out.M; ++i) {
            target[i - 1] = psi_inverse(f(static_cast<double>(i) / out.M), out);
            change = std::max(change, std::abs(target[i - 1] - out.g[i - 1]));
        }
        for (int i = 0; i < out.M; ++i)
            out.g[i] = 0.5 * (out.g[i] + target[i]);
        if (change <= 5e-13)
            break;
    }
    out.g0 = psi_inverse(f.f0(), out);

    double residual = 0.0;
    for (int i = 1; i <= out.M; ++i) {
        double integral = 0.0;
        for (int j = 1; j <= out.M; ++j)
            integral += sigmoid(out.g[i - 1] + out.g[j - 1]);
        integral /= out.M;
        residual = std::max(residual, std::abs(f(static_cast<double>(i) / out.M) - integral));
    }
    out.residual = residual;
    return out;
}

MotifComparison predicted_vs_empirical(const MotifGraph& H, const DegreeFunction& f,
                                       int n, int trials, std::uint64_t seed) {
    if (n < 2 || trials < 0)
        throw std::invalid_argument("need n >= 2 and trials >= 0");
    const GraphonFit fit = fit_graphon(f, 256, {});

    MotifComparison cmp;
    cmp.t_graphon = hom_density_graphon(H, fit);
    cmp.t_samples.reserve(trials);

    std::vector<double> beta(n);
    for (int i = 1; i <= n; ++i)
        beta[i - 1] = fit.g_at(static_cast<double>(i) / n);
    const BetaVector bv(beta);

    for (int t = 0; t < trials; ++t) {
        const SimpleGraph g = sample_graph(bv, splitmix64(seed + static_cast<std::uint64_t>(t)));
        cmp.t_samples.push_back(hom_density_graph(H, g));
    }
    return cmp;
}

} // namespace degseq
