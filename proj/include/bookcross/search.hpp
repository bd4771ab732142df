#pragma once

#include <vector>

#include "bookcross/embedding.hpp"
#include "bookcross/graph.hpp"
#include "bookcross/kernel.hpp"

namespace bookcross {

enum class Engine { Auto, Sjt, Enumeration, MatMult };

struct SolveOptions {
    Engine engine = Engine::Auto;
    int sjt_vertex_cap = 13;          ///< 1-page factorial search cap
    int enum_vertex_cap = 12;         ///< 2-page order x assignment caps
    int enum_edge_cap = 20;
    int matmult_vertex_cap = 9;       ///< 1-page min-plus engine cap
    int matmult_2page_vertex_cap = 6; ///< before padding
    int matmult_2page_edge_cap = 12;
    long long budget = -1; ///< max configurations explored; -1 = unlimited
    int threads = 1;
    bool prune = true; ///< branch-and-bound pruning (never changes results)
};

struct BlockKernelInfo {
    int block = -1;
    int k = 0;
    int ell = 0;
    int kernel_vertices = 0;
    int kernel_edges = 0;
};

struct SearchResult {
    Style style = Style::OnePage;
    Objective objective = Objective::Crossings;
    long long value = 0;
    BookEmbedding layout; ///< canonical, recounts to `value`
    long long explored = 0;
    double wall_seconds = 0;
    std::vector<BlockKernelInfo> kernels; ///< pipeline solves only
};

/// Steinhaus-Johnson-Trotter walk over K items: every permutation is reached
/// by a sequence of adjacent transpositions. next() yields the left index of
/// the next swap, or -1 once all K! permutations have been visited.
class SjtWalk {
public:
    explicit SjtWalk(int k);
    int next();

private:
    std::vector<int> rank_; ///< rank_[i] in 1..K at position i
    std::vector<int> dir_;  ///< per rank: -1 left, +1 right
};

/// Exact 1-page optimum over all circular orders (vertex 0 pinned, reflection
/// halved), incremental counts along an SJT walk. Deterministic canonical
/// layout tie-breaking.
SearchResult solve_1page_sjt(const Graph& g, Objective objective, const SolveOptions& opts = {});

/// Exact 2-page optimum over order x page assignment. Orders via SJT with
/// vertex 0 pinned and reflection halved; assignments as a binary
/// branch-and-bound with edge 0 pinned to page 0, seeded by the spanning
/// forest baseline. Pruning uses lower bounds only and is exactness-neutral.
SearchResult solve_2page(const Graph& g, Objective objective, const SolveOptions& opts = {});

/// Stitches per-block layouts into one circular order: block-cut forest DFS,
/// each block a contiguous interval, blocks meeting at a cut vertex nested
/// beside it. Never introduces inter-block crossings.
/// block_layouts[b].order holds parent-graph vertex ids; block_layouts[b]
/// .page[i] is the page of forest.blocks[b][i].
BookEmbedding compose_components(const Graph& g, const BlockCutForest& forest,
                                 const std::vector<BookEmbedding>& block_layouts);

/// Full pipeline: biconnected decomposition, per-block objective-specific
/// kernel, per-kernel engine search, lift, compose. The value is the sum of
/// block optima and the layout achieves it.
SearchResult solve(const Graph& g, Style style, Objective objective,
                   const SolveOptions& opts = {});

} // namespace bookcross
