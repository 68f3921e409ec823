#include "latenergy/graph.hpp"

#include "latenergy/error.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace latenergy {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        if (e.u == e.v) {
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.v >= vertex_count_) {
            throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") out of range for " + std::to_string(vertex_count_) + " vertices");
        }
        if (k > 0 && edges_[k - 1] == e) {
            throw GraphError("duplicate edge (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ")");
        }
    }
}

bool Graph::has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> deg(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

namespace {

void require_same_vertex_count(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) {
        throw GraphError("vertex count mismatch: " + std::to_string(g.vertex_count()) + " vs " +
                         std::to_string(h.vertex_count()));
    }
}

std::vector<Edge> sorted_unique(std::span<const Edge> edges) {
    std::vector<Edge> out(edges.begin(), edges.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

EdgeDelta edge_delta(const Graph& g, const Graph& h) {
    require_same_vertex_count(g, h);
    EdgeDelta d;
    std::set_difference(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end(),
                        std::back_inserter(d.only_in_g));
    std::set_difference(h.edges().begin(), h.edges().end(), g.edges().begin(), g.edges().end(),
                        std::back_inserter(d.only_in_h));
    d.delta = d.only_in_g.size() + d.only_in_h.size();
    return d;
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
    const auto drop = sorted_unique(edges);
    for (const Edge& e : drop) {
        if (!g.has_edge(e)) {
            throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") not present");
        }
    }
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - drop.size());
    std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(),
                        std::back_inserter(kept));
    return Graph(g.vertex_count(), std::move(kept));
}

Graph spanning_subgraph(const Graph& g, std::span<const Edge> edges) {
    auto keep = sorted_unique(edges);
    for (const Edge& e : keep) {
        if (!g.has_edge(e)) {
            throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") not present");
        }
    }
    return Graph(g.vertex_count(), std::move(keep));
}

std::vector<Edge> common_edges(const Graph& g, const Graph& h) {
    require_same_vertex_count(g, h);
    std::vector<Edge> out;
    std::set_intersection(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end(),
                          std::back_inserter(out));
    return out;
}

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
    std::map<std::size_t, std::size_t> hist;
    for (std::size_t d : g.degrees()) {
        ++hist[d];
    }
    return hist;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const auto shift = static_cast<Vertex>(a.vertex_count());
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    edges.reserve(a.edge_count() + b.edge_count());
    for (const Edge& e : b.edges()) {
        edges.emplace_back(e.u + shift, e.v + shift);
    }
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.vertex_count()) {
        throw GraphError("permutation length does not match vertex count");
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        edges.emplace_back(perm[e.u], perm[e.v]);
    }
    return Graph(g.vertex_count(), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.u << ' ' << e.v << '\n';
    }
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

Graph read_edge_list(std::istream& in) {
    std::string tag;
    std::size_t n = 0;
    std::size_t m = 0;
    if (!(in >> tag >> n >> m) || tag != "p") {
        throw GraphError("edge list: expected header 'p <vertices> <edges>'");
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::uint64_t i = 0;
        std::uint64_t j = 0;
        if (!(in >> tag >> i >> j) || tag != "e") {
            throw GraphError("edge list: malformed edge line " + std::to_string(k + 1));
        }
        if (i >= n || j >= n) {
            throw GraphError("edge list: vertex index out of range on line " +
                             std::to_string(k + 2));
        }
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return Graph(n, std::move(edges));
}

} // namespace latenergy
