#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "degseq/bipartite.hpp"
#include "degseq/degree_function.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/graph.hpp"
#include "degseq/graphon.hpp"
#include "degseq/mle.hpp"

namespace degseq {

inline constexpr const char* kJsonSchema = "degseq-kit/1";

/// Whitespace/newline-separated nonnegative integers, any order.
std::vector<int> read_degree_file(std::istream& in);
/// First line M, then M+1 reals: f(0) followed by the M grid values.
DegreeFunction read_degree_function_file(std::istream& in);
/// One real per line.
std::vector<double> read_beta_file(std::istream& in);
/// First line n, then edge lines "u v" with 0-based u < v.
SimpleGraph read_graph_file(std::istream& in);
void write_graph_file(std::ostream& out, const SimpleGraph& g);
/// First line k, then edge lines "a b" with 1-based endpoints.
MotifGraph read_motif_file(std::istream& in);

std::vector<int> read_degree_file(const std::string& path);
DegreeFunction read_degree_function_file(const std::string& path);
std::vector<double> read_beta_file(const std::string& path);
SimpleGraph read_graph_file(const std::string& path);
MotifGraph read_motif_file(const std::string& path);

nlohmann::json to_json(const EgReport& report);
nlohmann::json to_json(const FitReport& report, const FitConfig& cfg);
nlohmann::json to_json(const GraphonFit& fit);

} // namespace degseq
