#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace latenergy {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph. Edges are kept sorted and unique; construction
/// rejects self-loops, duplicates and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_edge(Edge e) const;
    std::vector<std::size_t> degrees() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// Symmetric difference of two edge sets over a shared vertex labeling.
struct EdgeDelta {
    std::vector<Edge> only_in_g;
    std::vector<Edge> only_in_h;
    std::size_t delta = 0;
};

EdgeDelta edge_delta(const Graph& g, const Graph& h);

/// g with the listed edges deleted; every listed edge must be present.
Graph remove_edges(const Graph& g, std::span<const Edge> edges);

/// Spanning subgraph of g keeping exactly the listed edges.
Graph spanning_subgraph(const Graph& g, std::span<const Edge> edges);

std::vector<Edge> common_edges(const Graph& g, const Graph& h);

/// Degree -> number of vertices with that degree.
std::map<std::size_t, std::size_t> degree_histogram(const Graph& g);

/// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabel vertices: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Edge-list text format:
//   p <vertex_count> <edge_count>
//   e <i> <j>        (0-indexed, i < j, lexicographic order)
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

} // namespace latenergy
