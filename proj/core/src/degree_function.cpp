#include "degseq/degree_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "degseq/degree_sequence.hpp"

namespace degseq {

DegreeFunction::DegreeFunction(double f0, std::vector<double> values)
    : f0_(f0), values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("degree function needs at least one grid cell");
    if (f0_ < 0.0 || f0_ > 1.0)
        throw std::invalid_argument("f(0) outside [0,1]");
    double prev = f0_;
    for (double v : values_) {
        if (v < 0.0 || v > 1.0)
            throw std::invalid_argument("degree function value outside [0,1]");
        if (v > prev + 1e-12)
            throw std::invalid_argument("degree function must be nonincreasing");
        prev = v;
    }
}

double DegreeFunction::operator()(double x) const {
    if (x <= 0.0)
        return f0_;
    const int M = grid_size();
    int cell = static_cast<int>(std::ceil(x * M - 1e-12));
    cell = std::clamp(cell, 1, M);
    return values_[cell - 1];
}

double DegreeFunction::min_value() const {
    return std::min(f0_, *std::min_element(values_.begin(), values_.end()));
}

double DegreeFunction::max_value() const {
    return std::max(f0_, *std::max_element(values_.begin(), values_.end()));
}

std::vector<double> continuum_eg(const DegreeFunction& f) {
    const int M = f.grid_size();
    const auto& v = f.values();
    const double h = 1.0 / M;

    // prefix[i] = int_0^{i/M} f, exact over whole cells.
    std::vector<double> prefix(M + 1, 0.0);
    for (int i = 0; i < M; ++i)
        prefix[i + 1] = prefix[i] + h * v[i];

    std::vector<double> g(M);
    for (int i = 1; i <= M; ++i) {
        const double x = static_cast<double>(i) / M;
        double tail = 0.0; // int_x^1 min{f(y), x} dy; f is constant per cell
        for (int j = i; j < M; ++j)
            tail += h * std::min(v[j], x);
        g[i - 1] = tail + x * x - prefix[i];
    }
    return g;
}

InteriorDiagnosis interior_diagnosis(const DegreeFunction& f, double eps) {
    if (eps <= 0.0)
        throw std::invalid_argument("eps must be positive");
    InteriorDiagnosis diag;
    diag.min_value = f.min_value();
    diag.max_value = f.max_value();
    diag.bounds_ok = diag.min_value > 0.0 && diag.max_value < 1.0;
    const auto g = continuum_eg(f);
    diag.min_gf = *std::min_element(g.begin(), g.end());
    diag.gf_ok = diag.min_gf > eps;
    return diag;
}

bool is_interior(const DegreeFunction& f, double eps) {
    return interior_diagnosis(f, eps).interior();
}

DegreeSequence discretize_limit(const DegreeFunction& f, int n) {
    if (n < 2)
        throw std::invalid_argument("n must be at least 2");
    std::vector<int> d(n);
    d[0] = std::min(static_cast<int>(std::floor(n * f.f0())), n - 1);
    for (int i = 2; i <= n; ++i)
        d[i - 1] = std::min(static_cast<int>(std::floor(n * f(static_cast<double>(i) / n))), n - 1);

    long long sum = 0;
    for (int x : d)
        sum += x;
    if (sum % 2 != 0) {
        if (d[0] < n - 1) {
            ++d[0];
        } else {
            // d[0] saturated: bump the first later entry where +1 keeps the
            // sequence monotone and within n-1.
            for (int i = 1; i < n; ++i) {
                if (d[i] + 1 <= d[i - 1] && d[i] + 1 <= n - 1) {
                    ++d[i];
                    break;
                }
            }
        }
    }
    return DegreeSequence(std::move(d));
}

bool degree_variate_check(const DegreeFunction& D) {
    const auto g = continuum_eg(D);
    return std::all_of(g.begin(), g.end(), [](double x) { return x >= -1e-12; });
}

} // namespace degseq
