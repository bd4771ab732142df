#pragma once

#include <string>
#include <vector>

#include "bookcross/embedding.hpp"
#include "bookcross/graph.hpp"

namespace bookcross {

/// The four shapes of two consecutive degree-2-path edges sharing vertex b,
/// classified on the line obtained by cutting the circle before order[0]:
/// same page + b between a and c = M; same page + b outside = Rainbow;
/// different pages + b between = S; different pages + b outside = Spiral.
enum class PairType { M, S, Rainbow, Spiral };

PairType classify_pair(const Graph& g, const BookEmbedding& emb, int ab, int bc);

/// A reduced copy of the layout with id remaps back to the input.
struct ReductionResult {
    Graph graph;
    BookEmbedding emb;
    std::vector<int> vertex_map; ///< old vertex -> new vertex, -1 removed
    std::vector<int> edge_map;   ///< old edge -> new edge, -1 removed
};

/// True (empty reason) when the reduction preconditions hold. The probes are
/// what reduce_exhaustively scans with; the reduce ops throw the reason.
bool m_rainbow_applicable(const Graph& g, const BookEmbedding& emb, int ab, int bc,
                          std::string* reason = nullptr);
bool s_spiral_applicable(const Graph& g, const BookEmbedding& emb, int ab, int bc,
                         std::string* reason = nullptr);

/// M/Rainbow rearrange-and-contract: b slides beside c and bc contracts.
/// Needs bc uncrossed, deg(b) = deg(c) = 2, and the surviving pair (ab and
/// c's other edge) non-crossing, since those two merge at a shared endpoint.
/// Preserves crossings and crossed-edge count exactly.
ReductionResult reduce_m_rainbow(const Graph& g, const BookEmbedding& emb, int ab, int bc);

/// S/Spiral rearrange-and-contract: the vertex block between the shared
/// vertex's far neighbors relocates, after which bc is contractible. Needs
/// both edges uncrossed, deg(a) = deg(b) = deg(c) = 2, and the outer edges on
/// the opposite pages (otherwise an M/Rainbow reduction applies instead).
/// Preserves crossings and crossed-edge count exactly.
ReductionResult reduce_s_spiral(const Graph& g, const BookEmbedding& emb, int ab, int bc);

struct ExhaustiveReduction {
    Graph graph;
    BookEmbedding emb;
    int steps = 0;
};

/// Applies reductions until none is applicable; counts are preserved at every
/// step.
ExhaustiveReduction reduce_exhaustively(const Graph& g, const BookEmbedding& emb);

} // namespace bookcross
