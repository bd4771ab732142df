#pragma once

#include <cstdint>
#include <vector>

#include "bookcross/graph.hpp"
#include "bookcross/search.hpp"

namespace bookcross {

/// Circular arc slot of an ordered vertex block. A layout is the
/// concatenation P1 P2 P3 around the circle; the anchor vertex (kernel
/// vertex 0) always opens P1, which kills rotational symmetry.
enum class Slot { P1, P2, P3 };

/// An ordered block of N/3 vertex ids. Ids >= the kernel's vertex count are
/// padding dummies (isolated, kept as an increasing suffix).
struct OrderedBlock {
    Slot slot = Slot::P1;
    std::vector<int> members;
    uint32_t mask = 0; ///< membership bitset over padded ids
};

/// Padded size: the least multiple of 3 that is >= n.
int padded_size(int n);

/// All ordered blocks of size N/3 for a slot. P1 blocks start with vertex 0;
/// dummy ids appear only as an increasing tail.
std::vector<OrderedBlock> enumerate_blocks(const Graph& kernel, Slot slot);

constexpr long long kInfWeight = (1LL << 60);

/// Doubled crossing charge of the triangle edge (A, B) for consecutive slots
/// (P1,P2), (P2,P3) or (P3,P1), under the given page assignment (empty means
/// all page 0). Charges follow the four crossing shapes: within-block pairs
/// split between the block's two neighbors, block-spanning pairs charge their
/// pair, three-one splits charge their pair, and shared-block splits give
/// half to each far pair. kInfWeight when the blocks overlap.
long long pair_weight(const Graph& kernel, const OrderedBlock& a, const OrderedBlock& b,
                      const std::vector<uint8_t>& page);

struct WeightMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> entries; ///< row-major; kInfWeight marks no edge

    long long at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
    long long& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
};

/// Exact (min, +) matrix product; infinities absorb.
WeightMatrix min_plus_product(const WeightMatrix& x, const WeightMatrix& y);

/// 1-page crossing minimization by minimum-weight triangle search over the
/// three weight matrices; equals solve_1page_sjt on the same graph.
SearchResult solve_1page_matmult(const Graph& kernel, const SolveOptions& opts = {});

/// 2-page crossing minimization: one triangle search per page assignment
/// (first edge pinned to page 0); equals solve_2page with the crossings
/// objective.
SearchResult solve_2page_matmult(const Graph& kernel, const SolveOptions& opts = {});

} // namespace bookcross
