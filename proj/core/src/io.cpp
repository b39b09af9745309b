#include "degseq/io.hpp"

#include <fstream>
#include <sstream>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    return in;
}

long long parse_int(const std::string& token, int line) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &pos);
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + token + "'", line);
    }
    if (pos != token.size())
        throw parse_error("trailing characters after integer '" + token + "'", line);
    return value;
}

double parse_real(const std::string& token, int line) {
    std::size_t pos = 0;
    double value = 0;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw parse_error("expected a real number, got '" + token + "'", line);
    }
    if (pos != token.size())
        throw parse_error("trailing characters after number '" + token + "'", line);
    return value;
}

} // namespace

std::vector<int> read_degree_file(std::istream& in) {
    std::vector<int> degrees;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            const long long v = parse_int(token, lineno);
            if (v < 0)
                throw parse_error("degrees must be nonnegative", lineno);
            degrees.push_back(static_cast<int>(v));
        }
    }
    if (degrees.empty())
        throw parse_error("no degrees found", lineno == 0 ? 1 : lineno);
    return degrees;
}

DegreeFunction read_degree_function_file(std::istream& in) {
    std::vector<double> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string token;
        while (ss >> token)
            tokens.push_back(parse_real(token, lineno));
    }
    if (tokens.empty())
        throw parse_error("empty degree function file", 1);
    const int M = static_cast<int>(tokens[0]);
    if (M < 1 || tokens[0] != M)
        throw parse_error("first value must be the positive integer grid size M", 1);
    if (static_cast<int>(tokens.size()) != M + 2)
        throw parse_error("expected M+1 function values after the grid size", lineno);
    const double f0 = tokens[1];
    std::vector<double> values(tokens.begin() + 2, tokens.end());
    return DegreeFunction(f0, std::move(values));
}

std::vector<double> read_beta_file(std::istream& in) {
    std::vector<double> beta;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string token;
        while (ss >> token)
            beta.push_back(parse_real(token, lineno));
    }
    if (beta.empty())
        throw parse_error("no beta values found", 1);
    return beta;
}

SimpleGraph read_graph_file(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a))
            continue;
        if (n < 0) {
            n = parse_int(a, lineno);
            if (n < 1)
                throw parse_error("vertex count must be positive", lineno);
            if (ss >> b)
                throw parse_error("first line must contain only the vertex count", lineno);
            continue;
        }
        if (!(ss >> b))
            throw parse_error("edge line needs two endpoints", lineno);
        const long long u = parse_int(a, lineno);
        const long long v = parse_int(b, lineno);
        if (u < 0 || v >= n || u >= v)
            throw parse_error("edge must satisfy 0 <= u < v < n", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw parse_error("missing vertex count", 1);
    return SimpleGraph(static_cast<int>(n), std::move(edges));
}

void write_graph_file(std::ostream& out, const SimpleGraph& g) {
    out << g.size() << "\n";
    for (const auto& [u, v] : g.edges())
        out << u << " " << v << "\n";
}

MotifGraph read_motif_file(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long k = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a))
            continue;
        if (k < 0) {
            k = parse_int(a, lineno);
            continue;
        }
        if (!(ss >> b))
            throw parse_error("motif edge line needs two endpoints", lineno);
        edges.emplace_back(static_cast<int>(parse_int(a, lineno)),
                           static_cast<int>(parse_int(b, lineno)));
    }
    if (k < 0)
        throw parse_error("missing motif vertex count", 1);
    return MotifGraph(static_cast<int>(k), std::move(edges));
}

std::vector<int> read_degree_file(const std::string& path) {
    auto in = open_file(path);
    return read_degree_file(in);
}

DegreeFunction read_degree_function_file(const std::string& path) {
    auto in = open_file(path);
    return read_degree_function_file(in);
}

std::vector<double> read_beta_file(const std::string& path) {
    auto in = open_file(path);
    return read_beta_file(in);
}

SimpleGraph read_graph_file(const std::string& path) {
    auto in = open_file(path);
    return read_graph_file(in);
}

MotifGraph read_motif_file(const std::string& path) {
    auto in = open_file(path);
    return read_motif_file(in);
}

nlohmann::json to_json(const EgReport& report) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["graphical"] = report.graphical;
    if (report.first_violation_k)
        j["first_violation_k"] = *report.first_violation_k;
    else
        j["first_violation_k"] = nullptr;
    j["slack"] = report.slack;
    return j;
}

nlohmann::json to_json(const FitReport& report, const FitConfig& cfg) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["status"] = to_string(report.status);
    if (report.beta_hat)
        j["beta_hat"] = report.beta_hat->values();
    else
        j["beta_hat"] = nullptr;
    j["iterations"] = report.iterations;
    j["residual_linf"] = report.residual_linf;
    j["theta_hat"] = report.theta_hat;
    j["error_bound"] = report.error_bound;
    j["config"] = {{"tol", cfg.tol},
                   {"max_iter", cfg.max_iter},
                   {"divergence_bound", cfg.divergence_bound}};
    return j;
}

nlohmann::json to_json(const GraphonFit& fit) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["M"] = fit.M;
    j["g0"] = fit.g0;
    j["g"] = fit.g;
    j["residual"] = fit.residual;
    return j;
}

} // namespace degseq
