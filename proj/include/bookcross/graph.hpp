#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "bookcross/errors.hpp"

namespace bookcross {

/// Undirected multigraph with vertices 0..n-1 and stable edge ids 0..m-1.
///
/// Parallel edges are allowed and keep distinct ids; self-loops are rejected
/// (the parser strips them before construction). Original input labels are
/// kept per vertex so reports can be written in the caller's vocabulary.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adjacency_(n), labels_(n) {
        for (int v = 0; v < n; ++v) labels_[v] = v;
    }

    int add_vertex(long long label) {
        adjacency_.emplace_back();
        labels_.push_back(label);
        return static_cast<int>(adjacency_.size()) - 1;
    }

    /// Adds edge {u, v}; returns its id. Self-loops are invalid.
    int add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw std::invalid_argument("edge endpoint out of range");
        int id = static_cast<int>(edges_.size());
        edges_.emplace_back(u, v);
        adjacency_[u].push_back(id);
        adjacency_[v].push_back(id);
        return id;
    }

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> edge(int e) const { return edges_[e]; }

    int other_end(int e, int v) const {
        auto [a, b] = edges_[e];
        return a == v ? b : a;
    }

    const std::vector<int>& incident(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    long long label(int v) const { return labels_[v]; }
    void set_label(int v, long long label) { labels_[v] = label; }
    const std::vector<long long>& labels() const { return labels_; }

    /// Vertex id for an original label, or -1.
    int vertex_of_label(long long label) const;

private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<long long> labels_;
};

/// The Table-1 style summary of a graph.
struct GraphStats {
    int n = 0;          ///< vertices
    int m = 0;          ///< edges
    int a = 0;          ///< cyclomatic number m - n + components
    int k = 0;          ///< almost-tree parameter (max block cyclomatic number)
    int n2 = 0;         ///< 2-core vertices
    int m2 = 0;         ///< 2-core edges
    int components = 0; ///< connected components
};

struct ParsedGraph {
    Graph graph;
    int self_loops_dropped = 0;
};

/// Parses whitespace-separated "u v" lines. '#' comments and blank lines are
/// ignored; self-loops are dropped and counted; arbitrary integer labels are
/// normalized to 0..n-1 (originals retained in the graph's label table).
/// Throws ParseError naming the offending line.
ParsedGraph parse_edge_list(std::string_view text);

/// Component id per vertex plus the component count.
struct Components {
    std::vector<int> of_vertex;
    int count = 0;
};
Components connected_components(const Graph& g);

/// m - n + (number of connected components).
int cyclomatic_number(const Graph& g);

/// A subgraph together with maps back to the parent graph.
struct Subgraph {
    Graph graph;
    std::vector<int> orig_vertex; ///< subgraph vertex -> parent vertex
    std::vector<int> orig_edge;   ///< subgraph edge -> parent edge
};

/// Result of peeling to the 2-core. The peeled part forms a forest recorded
/// with parent pointers: parent[v] is the vertex v hung from when removed
/// (a core vertex, another peeled vertex, or -1 for a root of a tree
/// component that peeled away entirely). Core vertices have parent -2.
struct TwoCore {
    Subgraph core;
    std::vector<int> core_vertex_of; ///< parent vertex -> core vertex or -1
    std::vector<int> parent;
    std::vector<int> parent_edge;

    bool in_core(int v) const { return parent[v] == -2; }
};
TwoCore two_core(const Graph& g);

/// Biconnected components as edge sets; bridges are single-edge blocks.
struct BlockCutForest {
    std::vector<std::vector<int>> blocks; ///< edge ids per block
    std::vector<char> is_cut;             ///< per vertex
    std::vector<int> block_of_edge;

    std::vector<int> cut_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(is_cut.size()); ++v)
            if (is_cut[v]) out.push_back(v);
        return out;
    }
    /// Blocks meeting at a vertex (every vertex version; cut vertices have >= 2).
    std::vector<std::vector<int>> blocks_at_vertex(const Graph& g) const;
};
BlockCutForest biconnected_components(const Graph& g);

/// Sorted distinct vertices spanned by a set of edges.
std::vector<int> edge_set_vertices(const Graph& g, const std::vector<int>& edges);

/// Induced subgraph on an edge set (vertices are those spanned by the edges).
Subgraph subgraph_of_edges(const Graph& g, const std::vector<int>& edges);

/// Max over blocks of the block's cyclomatic number; 0 for forests.
int almost_tree_parameter(const Graph& g);

GraphStats stats(const Graph& g);

} // namespace bookcross
