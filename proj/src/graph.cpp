#include "bookcross/graph.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

namespace bookcross {

int Graph::vertex_of_label(long long label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (labels_[v] == label) return v;
    return -1;
}

ParsedGraph parse_edge_list(std::string_view text) {
    ParsedGraph out;
    std::unordered_map<long long, int> id_of;
    std::vector<std::pair<long long, long long>> raw_edges;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            if (pos > text.size()) break;
            continue;
        }

        long long vals[2];
        size_t cursor = first;
        for (int i = 0; i < 2; ++i) {
            size_t start = line.find_first_not_of(" \t\r", cursor);
            if (start == std::string_view::npos)
                throw ParseError(line_no, "expected two integer tokens");
            size_t end = line.find_first_of(" \t\r", start);
            if (end == std::string_view::npos) end = line.size();
            auto res = std::from_chars(line.data() + start, line.data() + end, vals[i]);
            if (res.ec != std::errc() || res.ptr != line.data() + end)
                throw ParseError(line_no, "not an integer: '" +
                                              std::string(line.substr(start, end - start)) + "'");
            cursor = end;
        }
        if (line.find_first_not_of(" \t\r", cursor) != std::string_view::npos)
            throw ParseError(line_no, "expected exactly two tokens");

        if (vals[0] == vals[1]) {
            ++out.self_loops_dropped;
            // the vertex itself is still recorded
            if (!id_of.count(vals[0])) id_of.emplace(vals[0], 0);
            continue;
        }
        for (long long v : {vals[0], vals[1]})
            if (!id_of.count(v)) id_of.emplace(v, 0);
        raw_edges.emplace_back(vals[0], vals[1]);
        if (pos > text.size()) break;
    }

    // Normalize labels in ascending order so ids are deterministic.
    std::vector<long long> labels;
    labels.reserve(id_of.size());
    for (auto& [label, _] : id_of) labels.push_back(label);
    std::sort(labels.begin(), labels.end());
    Graph g;
    for (long long label : labels) id_of[label] = g.add_vertex(label);
    for (auto& [u, v] : raw_edges) g.add_edge(id_of[u], id_of[v]);
    out.graph = std::move(g);
    return out;
}

Components connected_components(const Graph& g) {
    Components comps;
    comps.of_vertex.assign(g.vertex_count(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comps.of_vertex[s] != -1) continue;
        int id = comps.count++;
        comps.of_vertex[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (comps.of_vertex[w] == -1) {
                    comps.of_vertex[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

int cyclomatic_number(const Graph& g) {
    return g.edge_count() - g.vertex_count() + connected_components(g).count;
}

TwoCore two_core(const Graph& g) {
    int n = g.vertex_count();
    TwoCore out;
    out.parent.assign(n, -2);
    out.parent_edge.assign(n, -1);
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0), queued(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) {
            queue.push_back(v);
            queued[v] = 1;
        }
    }
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        removed[v] = 1;
        out.parent[v] = -1;
        for (int e : g.incident(v)) {
            int u = g.other_end(e, v);
            if (removed[u]) continue;
            out.parent[v] = u;
            out.parent_edge[v] = e;
            if (--deg[u] == 1 && !queued[u]) {
                queue.push_back(u);
                queued[u] = 1;
            }
        }
    }

    out.core_vertex_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            out.core_vertex_of[v] = out.core.graph.add_vertex(g.label(v));
            out.core.orig_vertex.push_back(v);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!removed[u] && !removed[v]) {
            out.core.graph.add_edge(out.core_vertex_of[u], out.core_vertex_of[v]);
            out.core.orig_edge.push_back(e);
        }
    }
    return out;
}

BlockCutForest biconnected_components(const Graph& g) {
    int n = g.vertex_count();
    BlockCutForest out;
    out.is_cut.assign(n, 0);
    out.block_of_edge.assign(g.edge_count(), -1);

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;

    struct Frame {
        int v;
        int enter_edge;
        size_t it;
    };
    std::vector<Frame> frames;
    int timer = 0;

    auto pop_block = [&](int until_edge) {
        std::vector<int> block;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until_edge) break;
        }
        int id = static_cast<int>(out.blocks.size());
        for (int e : block) out.block_of_edge[e] = id;
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        int root_children = 0;
        disc[root] = low[root] = timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.it < g.incident(v).size()) {
                int e = g.incident(v)[f.it++];
                if (e == f.enter_edge) continue;
                int w = g.other_end(e, v);
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, e, 0});
                } else if (disc[w] < disc[v]) {
                    // back edge (parallel edges enter here too, by edge id)
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                frames.pop_back();
                if (frames.empty()) break;
                Frame& pf = frames.back();
                int p = pf.v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    pop_block(f.enter_edge);
                    if (p == root)
                        ++root_children;
                    else
                        out.is_cut[p] = 1;
                }
            }
        }
        if (root_children >= 2) out.is_cut[root] = 1;
    }
    return out;
}

std::vector<std::vector<int>> BlockCutForest::blocks_at_vertex(const Graph& g) const {
    std::vector<std::vector<int>> at(g.vertex_count());
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int v : edge_set_vertices(g, blocks[b])) at[v].push_back(b);
    return at;
}

std::vector<int> edge_set_vertices(const Graph& g, const std::vector<int>& edges) {
    std::vector<int> verts;
    verts.reserve(edges.size() * 2);
    for (int e : edges) {
        auto [u, v] = g.edge(e);
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

Subgraph subgraph_of_edges(const Graph& g, const std::vector<int>& edges) {
    Subgraph sub;
    sub.orig_vertex = edge_set_vertices(g, edges);
    std::vector<int> local(g.vertex_count(), -1);
    for (int v : sub.orig_vertex) local[v] = sub.graph.add_vertex(g.label(v));
    for (int e : edges) {
        auto [u, v] = g.edge(e);
        sub.graph.add_edge(local[u], local[v]);
        sub.orig_edge.push_back(e);
    }
    return sub;
}

int almost_tree_parameter(const Graph& g) {
    auto forest = biconnected_components(g);
    int k = 0;
    for (const auto& block : forest.blocks) {
        int nb = static_cast<int>(edge_set_vertices(g, block).size());
        int mb = static_cast<int>(block.size());
        k = std::max(k, mb - nb + 1);
    }
    return k;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.components = connected_components(g).count;
    s.a = s.m - s.n + s.components;
    s.k = almost_tree_parameter(g);
    auto core = two_core(g);
    s.n2 = core.core.graph.vertex_count();
    s.m2 = core.core.graph.edge_count();
    return s;
}

} // namespace bookcross
