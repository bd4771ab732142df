#pragma once

#include <string>

#include "bookcross/embedding.hpp"
#include "bookcross/graph.hpp"

namespace bookcross {

/// Sunburst drawing: 2-core vertices on the inner circle in layout order,
/// page-0 core edges as chords inside, page-1 edges as arcs outside in a
/// distinct stroke, pruned trees on concentric rings radiating from their
/// attachment vertex. Tree-only components anchor at their root. The crossing
/// totals are embedded as an SVG comment. Deterministic for a given layout.
std::string render_sunburst(const Graph& g, const BookEmbedding& emb,
                            const CrossingReport& report);

} // namespace bookcross
