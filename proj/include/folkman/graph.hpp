#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace folkman {

// Vertex subsets are bitmasks; vertex v is bit (1 << v).
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

int popcount(VertexSet s);
int lowest_vertex(VertexSet s);  // -1 on empty

/// Undirected simple graph on at most 64 vertices, adjacency kept as one
/// bit row per vertex. Immutable value type: all operations below return
/// new graphs.
class Graph {
public:
    Graph() = default;
    static Graph empty(int n);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return rows_[v]; }
    int degree(int v) const;
    int min_degree() const;
    int edge_count() const;
    VertexSet vertices() const { return full_set(n_); }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;

    friend Graph add_vertex(const Graph&, VertexSet);
    friend Graph from_rows(int, std::vector<VertexSet>);
};

// Internal fast path: rows must already be symmetric and irreflexive.
Graph from_rows(int n, std::vector<VertexSet> rows);

struct GraphHash {
    std::size_t operator()(const Graph& g) const;
};

struct CirculantSpec {
    int n = 0;
    std::vector<int> connection;  // residues in 1..n/2
};

Graph complete(int n);
Graph cycle(int n);
Graph circulant(const CirculantSpec& spec);
Graph complement(const Graph& g);
Graph join(const Graph& a, const Graph& b);
Graph induced(const Graph& g, VertexSet keep);  // relabels 0..|keep|-1 in order
Graph remove(const Graph& g, VertexSet drop);
Graph add_vertex(const Graph& g, VertexSet nbrs);  // new vertex gets index n

// graph6 text form, one graph per line; the ">>graph6<<" header is tolerated.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
std::vector<Graph> parse_graph6_lines(std::istream& in);

}  // namespace folkman
