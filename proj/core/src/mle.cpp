#include "degseq/mle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "degseq/errors.hpp"

namespace degseq {

std::string to_string(FitStatus status) {
    switch (status) {
    case FitStatus::Converged: return "Converged";
    case FitStatus::Diverged: return "Diverged";
    case FitStatus::MaxIterReached: return "MaxIterReached";
    case FitStatus::InfeasibleDegrees: return "InfeasibleDegrees";
    }
    return "Unknown";
}

namespace {

double sigmoid(double t) {
    if (t >= 0.0)
        return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

// log r_ij = -log(e^{-x_j} + e^{x_i}), shifted by the max exponent.
double log_r(double xi, double xj) {
    const double m = std::max(xi, -xj);
    return -m - std::log(std::exp(-xj - m) + std::exp(xi - m));
}

double linf_norm(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::abs(v));
    return m;
}

double linf_dist(const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

void check_lengths(const std::vector<double>& x, const std::vector<double>& d) {
    if (x.size() != d.size())
        throw std::invalid_argument("x and d length mismatch");
    if (x.size() < 2)
        throw std::invalid_argument("need at least two vertices");
}

} // namespace

std::vector<double> phi(const std::vector<double>& x, const std::vector<double>& d) {
    check_lengths(x, d);
    const int n = static_cast<int>(x.size());
    for (double di : d)
        if (di <= 0.0)
            throw infeasible_degrees_error("phi undefined: degree target <= 0");

    std::vector<double> out(n);
    std::vector<double> a(n);
    for (int i = 0; i < n; ++i) {
        double amax = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            a[j] = log_r(x[i], x[j]);
            amax = std::max(amax, a[j]);
        }
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i)
                s += std::exp(a[j] - amax);
        out[i] = std::log(d[i]) - (amax + std::log(s));
    }
    return out;
}

FitReport fit_mle(const std::vector<double>& d, const FitConfig& cfg) {
    if (cfg.tol <= 0.0 || cfg.max_iter < 1 || cfg.divergence_bound <= 0.0)
        throw std::invalid_argument("invalid fit configuration");
    const int n = static_cast<int>(d.size());
    if (n < 2)
        throw std::invalid_argument("need at least two vertices");

    FitReport report;
    for (double di : d) {
        // d_i = n-1 exactly is allowed in: the MLE does not exist there but
        // the iteration is well defined and diverges, which is the verdict
        // callers expect for boundary degree sequences like stars.
        if (di <= 0.0 || di > n - 1) {
            report.status = FitStatus::InfeasibleDegrees;
            return report;
        }
    }

    std::vector<double> x = cfg.x0 ? *cfg.x0 : std::vector<double>(n, 0.0);
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("x0 length mismatch");

    std::vector<double> residuals;
    residuals.reserve(cfg.max_iter);
    std::vector<double> norms;
    norms.reserve(cfg.max_iter);

    for (int k = 0; k < cfg.max_iter; ++k) {
        std::vector<double> next = phi(x, d);
        const double res = linf_dist(x, next);
        residuals.push_back(res);
        x = std::move(next);
        norms.push_back(linf_norm(x));
        report.iterations = k + 1;
        report.residual_linf = res;

        if (linf_norm(x) > cfg.divergence_bound) {
            report.status = FitStatus::Diverged;
            return report;
        }
        if (res <= cfg.tol) {
            report.status = FitStatus::Converged;
            break;
        }
        if (k + 1 == cfg.max_iter) {
            // When the MLE does not exist the iterates escape to infinity
            // only logarithmically, far too slowly to hit the escape
            // radius. Detect that regime by sup-norm drift: a converging
            // run has a stationary norm by now, a diverging one is still
            // climbing.
            const std::size_t kk = norms.size();
            if (kk > 100 && norms[kk - 1] > norms[kk - 101] + 1000.0 * cfg.tol)
                report.status = FitStatus::Diverged;
            else
                report.status = FitStatus::MaxIterReached;
            return report;
        }
    }

    // Empirical two-step contraction ratio over the trailing window.
    const int k = static_cast<int>(residuals.size());
    const int window = std::min(50, k / 2);
    double theta = 0.0;
    for (int t = std::max(0, k - 2 - window); t + 2 < k; ++t) {
        if (residuals[t] > std::max(cfg.tol, 1e-15))
            theta = std::max(theta, residuals[t + 2] / residuals[t]);
    }
    report.theta_hat = std::min(theta, 1.0 - 1e-9);
    report.error_bound = 2.0 * report.residual_linf / (1.0 - report.theta_hat);

    BetaVector beta(x);
    const auto expected = expected_degrees(beta);
    if (linf_dist(expected, d) > 10.0 * cfg.tol * n)
        throw std::logic_error("converged iterate does not satisfy the ML equations");
    report.beta_hat = std::move(beta);
    return report;
}

std::vector<std::vector<double>> jacobian_phi(const std::vector<double>& x,
                                              const std::vector<double>& d) {
    check_lengths(x, d);
    const int n = static_cast<int>(x.size());
    for (double di : d)
        if (di <= 0.0)
            throw infeasible_degrees_error("jacobian undefined: degree target <= 0");

    std::vector<std::vector<double>> J(n, std::vector<double>(n, 0.0));
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            r[j] = std::exp(log_r(x[i], x[j]));
            s += r[j];
        }
        double diag = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            const double q = r[j] / s;
            const double sig = sigmoid(x[i] + x[j]); // e^{x_i}/(e^{-x_j}+e^{x_i})
            diag += sig * q;
            J[i][j] = -(1.0 - sig) * q;
        }
        J[i][i] = diag;
    }
    return J;
}

double contraction_theta(double K, int n) {
    if (n < 3)
        throw std::invalid_argument("contraction factor requires n >= 3");
    if (K < 0.0)
        throw std::invalid_argument("K must be nonnegative");
    const double delta = 0.5 * std::exp(-4.0 * K);
    return 1.0 - 2.0 * (n - 2) * delta * delta / (n - 1);
}

namespace {

void check_in_class(const std::vector<std::vector<double>>& A, int n, double delta) {
    constexpr double tol = 1e-12;
    if (static_cast<int>(A.size()) != n)
        throw std::invalid_argument("matrix size mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(A[i].size()) != n)
            throw std::invalid_argument("matrix not square");
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += std::abs(A[i][j]);
        if (row > 1.0 + tol)
            throw std::invalid_argument("row norm exceeds 1");
        if (A[i][i] < delta - tol)
            throw std::invalid_argument("diagonal below delta");
        for (int j = 0; j < n; ++j)
            if (j != i && A[i][j] > -delta / (n - 1) + tol)
                throw std::invalid_argument("off-diagonal above -delta/(n-1)");
    }
}

} // namespace

bool matrix_class_product_bound_check(const std::vector<std::vector<double>>& A,
                                      const std::vector<std::vector<double>>& B,
                                      double delta) {
    if (delta <= 0.0)
        throw std::invalid_argument("delta must be positive");
    const int n = static_cast<int>(A.size());
    if (n < 3)
        throw std::invalid_argument("need n >= 3");
    check_in_class(A, n, delta);
    check_in_class(B, n, delta);

    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int k = 0; k < n; ++k) {
            double entry = 0.0;
            for (int j = 0; j < n; ++j)
                entry += A[i][j] * B[j][k];
            row += std::abs(entry);
        }
        norm = std::max(norm, row);
    }
    return norm <= 1.0 - 2.0 * (n - 2) * delta * delta / (n - 1) + 1e-12;
}

bool l1_lipschitz_check(const std::vector<double>& x, const std::vector<double>& y,
                        const std::vector<double>& d) {
    check_lengths(x, d);
    check_lengths(y, d);
    const double K = std::max(linf_norm(x), linf_norm(y));
    const auto px = phi(x, d);
    const auto py = phi(y, d);
    double lhs = 0.0, l1 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        lhs += std::abs(px[i] - py[i]);
        l1 += std::abs(x[i] - y[i]);
    }
    return lhs <= 2.0 * std::exp(2.0 * K) * l1 + 1e-12;
}

FitReport posterior_mode(const std::vector<double>& d_obs, double n0,
                         const std::vector<double>& d0, const FitConfig& cfg) {
    if (n0 <= 0.0)
        throw std::invalid_argument("prior weight n0 must be positive");
    if (d_obs.size() != d0.size())
        throw std::invalid_argument("d_obs and d0 length mismatch");
    const int n = static_cast<int>(d_obs.size());
    for (double v : d0)
        if (v <= 0.0 || v >= n - 1)
            throw std::invalid_argument("prior mean d0 must lie strictly inside (0, n-1)");

    std::vector<double> pseudo(n);
    for (int i = 0; i < n; ++i)
        pseudo[i] = (d_obs[i] + n0 * d0[i]) / (n0 + 1.0);
    return fit_mle(pseudo, cfg);
}

} // namespace degseq
