#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcstar/integer_matrix.hpp"

namespace qcstar {

/// Raised by the graph DSL parser; carries the 1-based offending line (0 when
/// the error is not tied to a line).
class GraphParseError : public std::runtime_error {
public:
    GraphParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct Edge {
    std::string name;
    std::size_t source;
    std::size_t range;

    bool operator==(const Edge&) const = default;
};

/// Finite directed multigraph. Vertex order is declaration order and fixes
/// the row/column convention of the Cuntz matrix.
class Graph {
public:
    Graph() = default;

    std::size_t add_vertex(std::string name);
    std::size_t add_edge(std::string name, std::string_view source, std::string_view range);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Index of a vertex name, or npos.
    std::size_t find_vertex(std::string_view name) const;
    std::size_t out_degree(std::size_t v) const;

    bool operator==(const Graph&) const = default;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

/// Subset of a graph's vertices, stored as sorted vertex indices.
using VertexSet = std::vector<std::size_t>;

Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);

/// Built-in graphs "G1", "G2", "G3".
Graph builtin_graph(std::string_view name);

/// Vertices emitting at least one edge, in vertex order.
VertexSet emitters(const Graph& g);

/// Matrix of A_G(v) = sum_{s(e)=v} r(e) - v; rows indexed by all vertices,
/// columns by emitters.
IntegerMatrix build_AG(const Graph& g);

bool is_hereditary(const Graph& g, const VertexSet& h);
bool is_saturated(const Graph& g, const VertexSet& h);

/// Smallest hereditary saturated set containing `seed`.
VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& seed);

/// All hereditary saturated vertex sets, sorted by size and then
/// lexicographically by vertex index.
std::vector<VertexSet> hereditary_saturated_sets(const Graph& g);

/// True iff the two families, ordered by inclusion, are isomorphic posets.
bool inclusion_posets_isomorphic(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b);

std::vector<std::string> vertex_names(const Graph& g, const VertexSet& s);

}  // namespace qcstar
