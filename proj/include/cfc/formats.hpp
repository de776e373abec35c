#pragma once

#include <map>
#include <string>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/decomposition.hpp"
#include "cfc/graph.hpp"
#include "cfc/polynomial.hpp"

namespace cfc {

// All text formats are 1-indexed; parse errors throw InputError naming the line.

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

TreeDecomposition parse_td(const std::string& text);
std::string serialize_td(const TreeDecomposition& t, int n);

Coloring parse_coloring(const std::string& text, int n, int q);
std::string serialize_coloring(const Coloring& c);

VertexSet parse_vertex_set(const std::string& text, int n);
std::string serialize_vertex_set(const VertexSet& s);

using Labels = std::map<std::string, int>;
std::string serialize_labels(const Labels& l);
Labels parse_labels(const std::string& text);

CspInstance parse_csp(const std::string& text);
std::string serialize_csp(const CspInstance& csp);

// literals are ±(variable index + 1), DIMACS style
using Clause = std::vector<int>;
struct Cnf {
    int vars = 0;
    std::vector<Clause> clauses;
};
Cnf parse_dimacs(const std::string& text);
std::string serialize_dimacs(const Cnf& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace cfc
