#pragma once

#include <vector>

#include "bookcross/embedding.hpp"
#include "bookcross/graph.hpp"

namespace bookcross {

/// A maximal path of degree-2 vertices between two branch vertices of a
/// 2-core. `closed` marks paths whose endpoints coincide (a bare cycle, or a
/// cycle attached to the rest at a single branch vertex).
struct DegreeTwoPath {
    int a = -1;                ///< first endpoint
    int b = -1;                ///< second endpoint (== a when closed)
    std::vector<int> interior; ///< degree-2 vertices in walk order
    std::vector<int> edges;    ///< edges in walk order; length() == edges.size()
    bool closed = false;

    int length() const { return static_cast<int>(edges.size()); }
};

/// Carves the edges of a min-degree-2 graph into maximal degree-2 paths.
/// With at least one degree->=3 vertex there are at most 3k-3 of them for
/// cyclomatic number k; a bare cycle component is a single closed path.
std::vector<DegreeTwoPath> maximal_degree_two_paths(const Graph& core);

/// Provenance of one shortened path: the surviving representative vertex and
/// the removed tail, re-expandable beside the representative.
struct PathRecord {
    int kernel_edge = -1;       ///< replacement edge in the kernel graph
    int rep_kernel_vertex = -1; ///< kernel vertex the removed chain expands beside
    int far_vertex = -1;        ///< other endpoint of the replacement (source graph id)
    std::vector<int> removed_vertices; ///< source ids, chain order rep -> far
    std::vector<int> removed_edges;    ///< source ids, (rep,r1),(r1,r2),...,(r_last,far)
};

/// A shrunken copy of one component plus everything needed to lift a layout
/// of it back to the component: shortened-path records and the pruned pendant
/// forest (parent pointers; -2 marks vertices that survived into the core).
struct Kernel {
    Graph graph;
    int ell = 0;      ///< path-length bound used
    int source_k = 0; ///< cyclomatic number the bound was computed from
    int source_n = 0; ///< component vertex count
    int source_m = 0; ///< component edge count

    std::vector<int> orig_vertex; ///< kernel vertex -> source vertex
    std::vector<int> orig_edge;   ///< kernel edge -> source edge, -1 for replacements
    std::vector<PathRecord> path_records;
    std::vector<int> tree_parent;      ///< per source vertex; -2 in core, -1 root
    std::vector<int> tree_parent_edge; ///< per source vertex
};

/// Shortens every maximal degree-2 path longer than `ell` to length exactly
/// `ell` (closed paths to max(ell, 3) so no parallel pair or loop appears).
/// Requires min degree >= 2 and ell >= 2. Records maps into `core` itself.
Kernel shorten_paths(const Graph& core, int ell);

/// ell = 2 kernel of a connected component; for cyclomatic number k >= 2 the
/// result is guaranteed to have at most 5k vertices and 6k edges.
Kernel kernel_1page(const Graph& component);

/// ell = 2k^2 kernel (2-page crossing minimization); at most 6k^3 vertices
/// and edges for k >= 1.
Kernel kernel_2page_crossings(const Graph& component);

/// ell = 2k kernel (2-page crossed-edge minimization); at most 6k^2 vertices
/// and edges for k >= 1.
Kernel kernel_2page_crossed(const Graph& component);

/// Kernel for a style/objective pair (the dispatch the solver uses).
enum class Style { OnePage, TwoPage };
enum class Objective { Crossings, CrossedEdges };
Kernel make_kernel(const Graph& component, Style style, Objective objective);

/// Expands a layout of kernel.graph into a layout of the source component
/// with identical crossings and crossed-edge count: removed path interiors
/// are reinserted beside their representative, pruned trees beside their
/// attachment vertex with tree edges on page 0.
BookEmbedding lift_layout(const Kernel& kernel, const BookEmbedding& emb);

} // namespace bookcross
