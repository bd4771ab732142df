#pragma once

#include <string>

#include "bookcross/embedding.hpp"
#include "bookcross/graph.hpp"
#include "bookcross/kernel.hpp"

namespace bookcross {

/// Layout JSON, vertex entries in original labels:
/// { "order": [..], "page": {"<edge id>": 0|1, ..},
///   "crossings": n, "crossed_edges": [..] }
std::string write_layout_json(const Graph& g, const BookEmbedding& emb,
                              const CrossingReport& report);

/// Parses a layout written by write_layout_json back against the same graph.
/// Unknown labels, missing edges or a non-permutation order are input errors.
BookEmbedding read_layout_json(const Graph& g, const std::string& text);

/// Per-block kernel dump: each block's kernel edge list (original labels)
/// followed by '#' provenance comments (bound used, shortened paths, pruned
/// trees).
std::string kernel_dump(const Graph& g, Style style, Objective objective);

} // namespace bookcross
