#include "bookcross/kernel.hpp"

#include <algorithm>
#include <string>

namespace bookcross {

namespace {

void require_min_degree_two(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            throw std::invalid_argument("graph has a vertex of degree < 2 (not a 2-core)");
}

// Follow the unique continuation through a degree-2 vertex.
int next_edge_through(const Graph& g, int v, int arrived_by) {
    const auto& inc = g.incident(v);
    return inc[0] == arrived_by ? inc[1] : inc[0];
}

} // namespace

std::vector<DegreeTwoPath> maximal_degree_two_paths(const Graph& core) {
    require_min_degree_two(core);
    std::vector<DegreeTwoPath> paths;
    std::vector<char> used(core.edge_count(), 0);

    for (int h = 0; h < core.vertex_count(); ++h) {
        if (core.degree(h) < 3) continue;
        for (int e0 : core.incident(h)) {
            if (used[e0]) continue;
            DegreeTwoPath p;
            p.a = h;
            int cur = h;
            int e = e0;
            while (true) {
                used[e] = 1;
                p.edges.push_back(e);
                int next = core.other_end(e, cur);
                if (core.degree(next) != 2) {
                    p.b = next;
                    break;
                }
                p.interior.push_back(next);
                e = next_edge_through(core, next, e);
                cur = next;
            }
            p.closed = (p.b == p.a);
            paths.push_back(std::move(p));
        }
    }

    // Leftover edges belong to components that are bare cycles.
    for (int e0 = 0; e0 < core.edge_count(); ++e0) {
        if (used[e0]) continue;
        // collect the cycle
        std::vector<int> verts, edges;
        int start = core.edge(e0).first;
        int cur = start;
        int e = e0;
        while (true) {
            used[e] = 1;
            edges.push_back(e);
            int next = core.other_end(e, cur);
            if (next == start) break;
            verts.push_back(next);
            e = next_edge_through(core, next, e);
            cur = next;
        }
        // anchor the closed path at the smallest vertex, smaller neighbor first
        verts.insert(verts.begin(), start);
        int L = static_cast<int>(edges.size());
        int anchor_idx = static_cast<int>(
            std::min_element(verts.begin(), verts.end()) - verts.begin());
        DegreeTwoPath p;
        p.closed = true;
        auto build = [&](int dir) {
            DegreeTwoPath q;
            q.closed = true;
            q.a = q.b = verts[anchor_idx];
            for (int i = 1; i < L; ++i)
                q.interior.push_back(verts[((anchor_idx + dir * i) % L + L) % L]);
            for (int i = 0; i < L; ++i) {
                // edge between verts[j] and verts[j+1] is edges[j] in forward walk
                int j = dir == 1 ? (anchor_idx + i) % L : ((anchor_idx - 1 - i) % L + L) % L;
                q.edges.push_back(edges[j]);
            }
            return q;
        };
        DegreeTwoPath fwd = build(1), bwd = build(-1);
        p = (L >= 2 && bwd.interior < fwd.interior) ? bwd : fwd;
        paths.push_back(std::move(p));
    }
    return paths;
}

Kernel shorten_paths(const Graph& core, int ell) {
    if (ell < 2) throw std::invalid_argument("ell must be at least 2");
    auto paths = maximal_degree_two_paths(core);

    Kernel k;
    k.ell = ell;
    k.source_n = core.vertex_count();
    k.source_m = core.edge_count();
    k.tree_parent.assign(core.vertex_count(), -2);
    k.tree_parent_edge.assign(core.vertex_count(), -1);

    std::vector<char> keep(core.vertex_count(), 0);
    for (int v = 0; v < core.vertex_count(); ++v)
        if (core.degree(v) >= 3) keep[v] = 1;

    struct Plan {
        const DegreeTwoPath* path;
        int target; // length after shortening (== length() when untouched)
    };
    std::vector<Plan> plans;
    plans.reserve(paths.size());
    for (const auto& p : paths) {
        int target = p.closed ? std::max(ell, 3) : ell;
        if (p.length() <= target) target = p.length();
        plans.push_back({&p, target});
        keep[p.a] = 1;
        keep[p.b] = 1;
        for (int i = 0; i < target - 1; ++i) keep[p.interior[i]] = 1;
    }

    std::vector<int> kernel_id(core.vertex_count(), -1);
    for (int v = 0; v < core.vertex_count(); ++v) {
        if (!keep[v]) continue;
        kernel_id[v] = k.graph.add_vertex(core.label(v));
        k.orig_vertex.push_back(v);
    }

    for (const auto& plan : plans) {
        const DegreeTwoPath& p = *plan.path;
        int L = p.length();
        int target = plan.target;
        // kept prefix runs a, i0, ..., i_{target-2}; edges[0..target-2] survive
        int prev = p.a;
        for (int i = 0; i + 1 < target; ++i) {
            k.graph.add_edge(kernel_id[prev], kernel_id[p.interior[i]]);
            k.orig_edge.push_back(p.edges[i]);
            prev = p.interior[i];
        }
        if (target == L) {
            k.graph.add_edge(kernel_id[prev], kernel_id[p.b]);
            k.orig_edge.push_back(p.edges[L - 1]);
            continue;
        }
        int rep = prev; // core id of the representative (i_{target-2}, or a)
        int ke = k.graph.add_edge(kernel_id[rep], kernel_id[p.b]);
        k.orig_edge.push_back(-1);
        PathRecord rec;
        rec.kernel_edge = ke;
        rec.rep_kernel_vertex = kernel_id[rep];
        rec.far_vertex = p.b;
        for (int i = target - 1; i < L - 1; ++i) rec.removed_vertices.push_back(p.interior[i]);
        for (int i = target - 1; i < L; ++i) rec.removed_edges.push_back(p.edges[i]);
        k.path_records.push_back(std::move(rec));
    }
    return k;
}

namespace {

Kernel kernel_for_component(const Graph& component, int ell, int k_value) {
    auto comps = connected_components(component);
    if (comps.count > 1) throw std::invalid_argument("kernelization expects a connected component");

    TwoCore core = two_core(component);
    Kernel kc = shorten_paths(core.core.graph, ell);

    // remap everything from core-local ids to component ids
    Kernel k;
    k.graph = std::move(kc.graph);
    k.ell = ell;
    k.source_k = k_value;
    k.source_n = component.vertex_count();
    k.source_m = component.edge_count();
    for (int v : kc.orig_vertex) k.orig_vertex.push_back(core.core.orig_vertex[v]);
    for (int e : kc.orig_edge) k.orig_edge.push_back(e < 0 ? -1 : core.core.orig_edge[e]);
    for (auto rec : kc.path_records) {
        rec.far_vertex = core.core.orig_vertex[rec.far_vertex];
        for (int& v : rec.removed_vertices) v = core.core.orig_vertex[v];
        for (int& e : rec.removed_edges) e = core.core.orig_edge[e];
        k.path_records.push_back(std::move(rec));
    }
    k.tree_parent = core.parent;
    k.tree_parent_edge = core.parent_edge;
    return k;
}

void check_bound(const Kernel& k, long long vertex_bound, long long edge_bound,
                 const char* which) {
    if (k.graph.vertex_count() > vertex_bound || k.graph.edge_count() > edge_bound)
        throw std::logic_error(std::string("kernel exceeds the ") + which + " size bound: " +
                               std::to_string(k.graph.vertex_count()) + " vertices / " +
                               std::to_string(k.graph.edge_count()) + " edges vs " +
                               std::to_string(vertex_bound) + "/" + std::to_string(edge_bound));
}

} // namespace

Kernel kernel_1page(const Graph& component) {
    int k = cyclomatic_number(component);
    Kernel out = kernel_for_component(component, 2, k);
    if (k >= 2) check_bound(out, 5LL * k, 6LL * k, "1-page");
    return out;
}

Kernel kernel_2page_crossings(const Graph& component) {
    int k = cyclomatic_number(component);
    int ell = std::max(2, 2 * k * k);
    Kernel out = kernel_for_component(component, ell, k);
    if (k >= 1) check_bound(out, 6LL * k * k * k, 6LL * k * k * k, "2-page crossing");
    return out;
}

Kernel kernel_2page_crossed(const Graph& component) {
    int k = cyclomatic_number(component);
    int ell = std::max(2, 2 * k);
    Kernel out = kernel_for_component(component, ell, k);
    if (k >= 1) check_bound(out, 6LL * k * k, 6LL * k * k, "2-page crossed-edge");
    return out;
}

Kernel make_kernel(const Graph& component, Style style, Objective objective) {
    if (style == Style::OnePage) return kernel_1page(component);
    return objective == Objective::Crossings ? kernel_2page_crossings(component)
                                             : kernel_2page_crossed(component);
}

BookEmbedding lift_layout(const Kernel& kernel, const BookEmbedding& emb) {
    if (static_cast<int>(emb.order.size()) != kernel.graph.vertex_count() ||
        static_cast<int>(emb.page.size()) != kernel.graph.edge_count())
        throw std::invalid_argument("layout does not cover the kernel");
    {
        std::vector<char> seen(kernel.graph.vertex_count(), 0);
        for (int v : emb.order) {
            if (v < 0 || v >= kernel.graph.vertex_count() || seen[v])
                throw std::invalid_argument("layout references unknown kernel vertices");
            seen[v] = 1;
        }
    }

    BookEmbedding out;
    out.page.assign(kernel.source_m, 0);

    // pages of surviving edges
    for (int ke = 0; ke < kernel.graph.edge_count(); ++ke)
        if (kernel.orig_edge[ke] >= 0) out.page[kernel.orig_edge[ke]] = emb.page[ke];

    // removed path chains expand beside their representative; every edge of
    // the chain inherits the replacement edge's page, so the far edge takes
    // over the replacement chord and the rest hug the spine
    std::vector<std::vector<int>> insert_after(kernel.source_n);
    for (const auto& rec : kernel.path_records) {
        int rep = kernel.orig_vertex[rec.rep_kernel_vertex];
        insert_after[rep] = rec.removed_vertices;
        for (int e : rec.removed_edges) out.page[e] = emb.page[rec.kernel_edge];
    }

    std::vector<int> expanded;
    expanded.reserve(kernel.source_n);
    for (int kv : emb.order) {
        int v = kernel.orig_vertex[kv];
        expanded.push_back(v);
        for (int w : insert_after[v]) expanded.push_back(w);
    }

    // pruned pendant trees: preorder beside the attachment, tree edges page 0
    std::vector<std::vector<int>> children(kernel.source_n);
    std::vector<int> free_roots;
    for (int v = 0; v < kernel.source_n; ++v) {
        int p = kernel.tree_parent[v];
        if (p >= 0)
            children[p].push_back(v);
        else if (p == -1)
            free_roots.push_back(v);
        if (p != -2 && kernel.tree_parent_edge[v] >= 0)
            out.page[kernel.tree_parent_edge[v]] = 0;
    }
    auto emit_subtree = [&](int root, std::vector<int>& sink) {
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            sink.push_back(v);
            for (auto it = children[v].rbegin(); it != children[v].rend(); ++it)
                stack.push_back(*it);
        }
    };

    out.order.reserve(kernel.source_n);
    for (int v : expanded) {
        out.order.push_back(v);
        for (int c : children[v]) emit_subtree(c, out.order);
    }
    for (int r : free_roots) emit_subtree(r, out.order);

    if (static_cast<int>(out.order.size()) != kernel.source_n)
        throw std::logic_error("lifted layout does not cover the component");
    return out;
}

} // namespace bookcross
