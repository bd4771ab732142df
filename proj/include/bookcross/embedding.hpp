#pragma once

#include <cstdint>
#include <vector>

#include "bookcross/graph.hpp"

namespace bookcross {

/// Circular vertex order plus an edge -> page assignment. Pages are 0 or 1;
/// a 1-page layout is simply a layout with every edge on page 0.
struct BookEmbedding {
    std::vector<int> order;    ///< vertex ids in spine position order (circular)
    std::vector<uint8_t> page; ///< indexed by edge id

    /// position of each vertex; inverse of `order`
    std::vector<int> positions(int n) const {
        std::vector<int> pos(n, -1);
        for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
        return pos;
    }
};

/// Exact crossing tally for one layout.
struct CrossingReport {
    long long crossings = 0;
    std::vector<int> per_edge; ///< crossing count per edge id
    int crossed_count = 0;     ///< number of edges with per_edge > 0

    std::vector<int> crossed_edges() const {
        std::vector<int> out;
        for (int e = 0; e < static_cast<int>(per_edge.size()); ++e)
            if (per_edge[e] > 0) out.push_back(e);
        return out;
    }
};

/// Identity layout (order 0..n-1, all edges on page 0).
BookEmbedding spine_identity(const Graph& g);

/// True iff edges e and f cross: same page, no shared endpoint, endpoints
/// strictly alternating around the circle. Parallel edges never cross.
bool edges_cross(const Graph& g, const BookEmbedding& emb, int e, int f);

/// Reference O(m^2) pairwise count.
CrossingReport count(const Graph& g, const BookEmbedding& emb);

/// Sweep-based count, O(m log n); identical result to count().
CrossingReport count_fast(const Graph& g, const BookEmbedding& emb);

/// Transposes spine positions p and p+1 and patches `report` in place.
/// Only pairs (edge at order[p], edge at order[p+1]) can change status, so the
/// work is O(deg(u) * deg(v)). `report` must belong to `emb` (cheap structural
/// checks only; a full recount is the caller's oracle).
void swap_adjacent_update(const Graph& g, BookEmbedding& emb, CrossingReport& report, int p);

/// Same, reusing (and maintaining) a caller-owned position table.
void swap_adjacent_update(const Graph& g, BookEmbedding& emb, CrossingReport& report, int p,
                          std::vector<int>& pos);

/// Spanning forest in DFS discovery order on page 0 (crossing-free there),
/// remaining edges on page 1. At most a = cyclomatic number crossed edges and
/// at most a(a-1)/2 crossings.
BookEmbedding baseline_2page(const Graph& g);

/// Deterministic representative of the layout's symmetry class: rotate the
/// smallest vertex id to the front, then pick the direction and page
/// complementation giving the lexicographically least (order, page) pair.
BookEmbedding canonicalize(const BookEmbedding& emb);

/// Lexicographic comparison of (order, page) pairs; canonical tie-breaking.
bool embedding_less(const BookEmbedding& a, const BookEmbedding& b);

} // namespace bookcross
