#include "bookcross/reductions.hpp"

#include <algorithm>

namespace bookcross {

namespace {

// The single shared endpoint of a consecutive pair; -1 when the edges share
// none or both endpoints (parallel pair).
int shared_vertex(const Graph& g, int e1, int e2) {
    auto [a, b] = g.edge(e1);
    auto [c, d] = g.edge(e2);
    int count = 0, hit = -1;
    for (int v : {a, b}) {
        if (v == c || v == d) {
            ++count;
            hit = v;
        }
    }
    return count == 1 ? hit : -1;
}

bool edge_uncrossed(const Graph& g, const BookEmbedding& emb, int e) {
    for (int f = 0; f < g.edge_count(); ++f)
        if (f != e && edges_cross(g, emb, e, f)) return false;
    return true;
}

int other_edge_at(const Graph& g, int v, int not_edge) {
    const auto& inc = g.incident(v);
    return inc[0] == not_edge ? inc[1] : inc[0];
}

struct PairView {
    int ab, bc;
    int a, b, c;
    PairType type;
};

PairView view_pair(const Graph& g, const BookEmbedding& emb, int ab, int bc) {
    if (ab < 0 || bc < 0 || ab >= g.edge_count() || bc >= g.edge_count() || ab == bc)
        throw std::invalid_argument("need two distinct edges");
    int b = shared_vertex(g, ab, bc);
    if (b < 0) throw std::invalid_argument("edges must share exactly one vertex");
    PairView v;
    v.ab = ab;
    v.bc = bc;
    v.b = b;
    v.a = g.other_end(ab, b);
    v.c = g.other_end(bc, b);
    auto pos = emb.positions(g.vertex_count());
    bool same = emb.page[ab] == emb.page[bc];
    bool between = (pos[v.a] < pos[b] && pos[b] < pos[v.c]) ||
                   (pos[v.c] < pos[b] && pos[b] < pos[v.a]);
    v.type = same ? (between ? PairType::M : PairType::Rainbow)
                  : (between ? PairType::S : PairType::Spiral);
    return v;
}

bool fail(std::string* reason, const char* why) {
    if (reason) *reason = why;
    return false;
}

// Removes `gone` by merging it into the surviving endpoint of `contracted`,
// compacting ids; the spine order must already hold them adjacent (or the
// caller removed the vertex beforehand, M/Rainbow style).
ReductionResult contract(const Graph& g, const std::vector<int>& order,
                         const std::vector<uint8_t>& pages, int contracted, int gone,
                         int survivor) {
    ReductionResult out;
    out.vertex_map.assign(g.vertex_count(), -1);
    out.edge_map.assign(g.edge_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == gone) continue;
        out.vertex_map[v] = out.graph.add_vertex(g.label(v));
    }
    out.vertex_map[gone] = out.vertex_map[survivor];
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == contracted) continue;
        auto [u, v] = g.edge(e);
        out.edge_map[e] = out.graph.add_edge(out.vertex_map[u], out.vertex_map[v]);
        out.emb.page.push_back(pages[e]);
    }
    out.emb.order.reserve(order.size() - 1);
    for (int v : order)
        if (v != gone) out.emb.order.push_back(out.vertex_map[v]);
    return out;
}

} // namespace

PairType classify_pair(const Graph& g, const BookEmbedding& emb, int ab, int bc) {
    return view_pair(g, emb, ab, bc).type;
}

bool m_rainbow_applicable(const Graph& g, const BookEmbedding& emb, int ab, int bc,
                          std::string* reason) {
    if (ab == bc || shared_vertex(g, ab, bc) < 0)
        return fail(reason, "edges do not share exactly one vertex");
    PairView v = view_pair(g, emb, ab, bc);
    if (v.type != PairType::M && v.type != PairType::Rainbow)
        return fail(reason, "pair is not of m or rainbow type");
    if (g.degree(v.b) != 2 || g.degree(v.c) != 2)
        return fail(reason, "b and c must both have degree two");
    if (!edge_uncrossed(g, emb, bc)) return fail(reason, "edge bc must be uncrossed");
    int cy = other_edge_at(g, v.c, bc);
    if (edges_cross(g, emb, ab, cy))
        return fail(reason, "the surviving edges ab and cy cross, so contracting bc would "
                            "erase their crossing");
    return true;
}

ReductionResult reduce_m_rainbow(const Graph& g, const BookEmbedding& emb, int ab, int bc) {
    std::string reason;
    if (!m_rainbow_applicable(g, emb, ab, bc, &reason)) throw std::invalid_argument(reason);
    PairView v = view_pair(g, emb, ab, bc);
    // Sliding b beside c (away from c's other neighbor) and contracting bc
    // nets out to deleting b from the spine and re-ending ab at c. bc being
    // uncrossed means no same-page edge enters the swept region, and the
    // applicability guard covers the one pair that merges endpoints.
    return contract(g, emb.order, emb.page, bc, v.b, v.c);
}

bool s_spiral_applicable(const Graph& g, const BookEmbedding& emb, int ab, int bc,
                         std::string* reason) {
    if (ab == bc || shared_vertex(g, ab, bc) < 0)
        return fail(reason, "edges do not share exactly one vertex");
    PairView v = view_pair(g, emb, ab, bc);
    if (v.type != PairType::S && v.type != PairType::Spiral)
        return fail(reason, "pair is not of s or spiral type");
    if (g.degree(v.a) != 2 || g.degree(v.b) != 2 || g.degree(v.c) != 2)
        return fail(reason, "a, b and c must all have degree two");
    if (!edge_uncrossed(g, emb, ab)) return fail(reason, "edge ab must be uncrossed");
    if (!edge_uncrossed(g, emb, bc)) return fail(reason, "edge bc must be uncrossed");
    int xa = other_edge_at(g, v.a, ab);
    int cy = other_edge_at(g, v.c, bc);
    if (emb.page[xa] == emb.page[ab])
        return fail(reason, "xa shares ab's page, so an m/rainbow reduction applies instead");
    if (emb.page[cy] == emb.page[bc])
        return fail(reason, "cy shares bc's page, so an m/rainbow reduction applies instead");
    return true;
}

namespace {

// Canonical s: positions a < b < c. Move the block strictly between b and c
// in front of a, making b and c adjacent, then contract bc.
// Canonical spiral: positions a < c < b. Move the block strictly between c
// and b directly behind a (keeping its orientation), making c and b adjacent,
// then contract bc.
ReductionResult reduce_s_spiral_canonical(const Graph& g, const std::vector<int>& order,
                                          const std::vector<uint8_t>& pages, const PairView& v,
                                          bool spiral) {
    int n = static_cast<int>(order.size());
    std::vector<int> pos(g.vertex_count());
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    int left = spiral ? pos[v.c] : pos[v.b];
    int right = spiral ? pos[v.b] : pos[v.c];
    int insert_at = pos[v.a] + (spiral ? 1 : 0); // before a (s) / after a (spiral)

    // the lemma's invariant: nothing may reach into the moved block on bc's page
    for (int i = left + 1; i < right; ++i) {
        int w = order[i];
        for (int e : g.incident(w)) {
            int z = g.other_end(e, w);
            if (pos[z] > left && pos[z] < right) continue;
            if (pages[e] == pages[v.bc] && z != v.b && z != v.c)
                throw std::logic_error("block between the pair has an incoming edge on bc's "
                                       "page; impossible when the preconditions hold");
        }
    }

    std::vector<int> moved;
    moved.reserve(n);
    for (int i = 0; i < insert_at; ++i) moved.push_back(order[i]);
    for (int i = left + 1; i < right; ++i) moved.push_back(order[i]);
    for (int i = insert_at; i < n; ++i)
        if (i <= left || i >= right) moved.push_back(order[i]);

    return contract(g, moved, pages, v.bc, v.c, v.b);
}

} // namespace

ReductionResult reduce_s_spiral(const Graph& g, const BookEmbedding& emb, int ab, int bc) {
    std::string reason;
    if (!s_spiral_applicable(g, emb, ab, bc, &reason)) throw std::invalid_argument(reason);
    PairView v = view_pair(g, emb, ab, bc);
    auto pos = emb.positions(g.vertex_count());

    bool spiral = v.type == PairType::Spiral;
    if (spiral) {
        // normalize so c sits between a and b (read the pair from the other
        // end when a is the middle vertex)
        bool c_between = (pos[v.a] < pos[v.c] && pos[v.c] < pos[v.b]) ||
                         (pos[v.b] < pos[v.c] && pos[v.c] < pos[v.a]);
        if (!c_between) {
            std::swap(v.ab, v.bc);
            std::swap(v.a, v.c);
        }
    }
    bool mirrored = pos[v.a] > pos[v.c];

    if (!mirrored) return reduce_s_spiral_canonical(g, emb.order, emb.page, v, spiral);

    std::vector<int> reversed(emb.order.rbegin(), emb.order.rend());
    ReductionResult res = reduce_s_spiral_canonical(g, reversed, emb.page, v, spiral);
    std::reverse(res.emb.order.begin(), res.emb.order.end());
    return res;
}

ExhaustiveReduction reduce_exhaustively(const Graph& g, const BookEmbedding& emb) {
    ExhaustiveReduction cur{g, emb, 0};
    while (true) {
        bool fired = false;
        for (int b = 0; b < cur.graph.vertex_count() && !fired; ++b) {
            if (cur.graph.degree(b) != 2) continue;
            int e1 = cur.graph.incident(b)[0];
            int e2 = cur.graph.incident(b)[1];
            if (cur.graph.other_end(e1, b) == cur.graph.other_end(e2, b)) continue;
            for (auto [ab, bc] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
                // leave triangles alone: merging one into a parallel pair is
                // sound but gains nothing, and triangles are the path floor
                int a = cur.graph.other_end(ab, b);
                int c = cur.graph.other_end(bc, b);
                if (cur.graph.degree(c) == 2 &&
                    cur.graph.other_end(other_edge_at(cur.graph, c, bc), c) == a)
                    continue;
                if (m_rainbow_applicable(cur.graph, cur.emb, ab, bc)) {
                    ReductionResult r = reduce_m_rainbow(cur.graph, cur.emb, ab, bc);
                    cur.graph = std::move(r.graph);
                    cur.emb = std::move(r.emb);
                    fired = true;
                    break;
                }
                if (s_spiral_applicable(cur.graph, cur.emb, ab, bc)) {
                    ReductionResult r = reduce_s_spiral(cur.graph, cur.emb, ab, bc);
                    cur.graph = std::move(r.graph);
                    cur.emb = std::move(r.emb);
                    fired = true;
                    break;
                }
            }
        }
        if (!fired) break;
        ++cur.steps;
    }
    return cur;
}

} // namespace bookcross
