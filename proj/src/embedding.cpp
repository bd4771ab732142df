#include "bookcross/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace bookcross {

BookEmbedding spine_identity(const Graph& g) {
    BookEmbedding emb;
    emb.order.resize(g.vertex_count());
    std::iota(emb.order.begin(), emb.order.end(), 0);
    emb.page.assign(g.edge_count(), 0);
    return emb;
}

namespace {

// Alternation of two chords given spine positions; callers exclude shared
// endpoints beforehand.
inline bool chords_interleave(int a1, int a2, int b1, int b2) {
    int lo = std::min(a1, a2), hi = std::max(a1, a2);
    bool in1 = b1 > lo && b1 < hi;
    bool in2 = b2 > lo && b2 < hi;
    return in1 != in2;
}

void check_coverage(const Graph& g, const BookEmbedding& emb) {
    if (static_cast<int>(emb.order.size()) != g.vertex_count() ||
        static_cast<int>(emb.page.size()) != g.edge_count())
        throw std::invalid_argument("embedding does not cover the graph");
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : emb.order) {
        if (v < 0 || v >= g.vertex_count() || seen[v])
            throw std::invalid_argument("embedding order is not a permutation of the vertices");
        seen[v] = 1;
    }
}

} // namespace

bool edges_cross(const Graph& g, const BookEmbedding& emb, int e, int f) {
    if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count())
        throw std::invalid_argument("unknown edge id");
    if (e == f) return false;
    if (emb.page[e] != emb.page[f]) return false;
    auto [a, b] = g.edge(e);
    auto [c, d] = g.edge(f);
    if (a == c || a == d || b == c || b == d) return false;
    auto pos = emb.positions(g.vertex_count());
    return chords_interleave(pos[a], pos[b], pos[c], pos[d]);
}

CrossingReport count(const Graph& g, const BookEmbedding& emb) {
    check_coverage(g, emb);
    auto pos = emb.positions(g.vertex_count());
    int m = g.edge_count();
    CrossingReport rep;
    rep.per_edge.assign(m, 0);
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edge(e);
        for (int f = e + 1; f < m; ++f) {
            if (emb.page[e] != emb.page[f]) continue;
            auto [c, d] = g.edge(f);
            if (a == c || a == d || b == c || b == d) continue;
            if (chords_interleave(pos[a], pos[b], pos[c], pos[d])) {
                ++rep.per_edge[e];
                ++rep.per_edge[f];
                ++rep.crossings;
            }
        }
    }
    for (int c : rep.per_edge)
        if (c > 0) ++rep.crossed_count;
    return rep;
}

namespace {

class Fenwick {
public:
    explicit Fenwick(int n) : tree_(n + 1, 0) {}
    void add(int i) {
        for (++i; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[i];
    }
    int prefix(int i) const { // count of items with index <= i
        int s = 0;
        for (++i; i > 0; i -= i & -i) s += tree_[i];
        return s;
    }
    int range(int lo, int hi) const { return lo > hi ? 0 : prefix(hi) - (lo ? prefix(lo - 1) : 0); }

private:
    std::vector<int> tree_;
};

} // namespace

CrossingReport count_fast(const Graph& g, const BookEmbedding& emb) {
    check_coverage(g, emb);
    auto pos = emb.positions(g.vertex_count());
    int n = g.vertex_count();
    int m = g.edge_count();
    CrossingReport rep;
    rep.per_edge.assign(m, 0);

    struct Chord {
        int lo, hi, id;
    };
    for (int page = 0; page < 2; ++page) {
        std::vector<Chord> chords;
        for (int e = 0; e < m; ++e) {
            if (emb.page[e] != page) continue;
            auto [a, b] = g.edge(e);
            chords.push_back({std::min(pos[a], pos[b]), std::max(pos[a], pos[b]), e});
        }
        if (chords.size() < 2) continue;

        // f starts strictly before e and ends strictly inside e
        std::sort(chords.begin(), chords.end(),
                  [](const Chord& x, const Chord& y) { return x.lo < y.lo; });
        {
            Fenwick bit(n);
            size_t i = 0;
            while (i < chords.size()) {
                size_t j = i;
                while (j < chords.size() && chords[j].lo == chords[i].lo) ++j;
                for (size_t t = i; t < j; ++t)
                    rep.per_edge[chords[t].id] += bit.range(chords[t].lo + 1, chords[t].hi - 1);
                for (size_t t = i; t < j; ++t) bit.add(chords[t].hi);
                i = j;
            }
        }
        // f starts strictly inside e and ends strictly after e
        std::sort(chords.begin(), chords.end(),
                  [](const Chord& x, const Chord& y) { return x.hi > y.hi; });
        {
            Fenwick bit(n);
            size_t i = 0;
            while (i < chords.size()) {
                size_t j = i;
                while (j < chords.size() && chords[j].hi == chords[i].hi) ++j;
                for (size_t t = i; t < j; ++t)
                    rep.per_edge[chords[t].id] += bit.range(chords[t].lo + 1, chords[t].hi - 1);
                for (size_t t = i; t < j; ++t) bit.add(chords[t].lo);
                i = j;
            }
        }
    }

    long long total = 0;
    for (int e = 0; e < m; ++e) {
        total += rep.per_edge[e];
        if (rep.per_edge[e] > 0) ++rep.crossed_count;
    }
    rep.crossings = total / 2;
    return rep;
}

void swap_adjacent_update(const Graph& g, BookEmbedding& emb, CrossingReport& report, int p,
                          std::vector<int>& pos) {
    int n = static_cast<int>(emb.order.size());
    if (p < 0 || p + 1 >= n) throw std::invalid_argument("swap position out of range");
    if (static_cast<int>(report.per_edge.size()) != g.edge_count())
        throw std::logic_error("stale crossing state: per-edge table does not match the graph");

    int u = emb.order[p];
    int v = emb.order[p + 1];

    // Only u-edge x v-edge pairs can change: all other relative positions are
    // untouched by an adjacent transposition.
    auto eval = [&](int e, int f, int pu, int pv) {
        if (emb.page[e] != emb.page[f]) return false;
        auto [a, b] = g.edge(e);
        auto [c, d] = g.edge(f);
        if (a == c || a == d || b == c || b == d) return false;
        auto at = [&](int vert) {
            if (vert == u) return pu;
            if (vert == v) return pv;
            return pos[vert];
        };
        return chords_interleave(at(a), at(b), at(c), at(d));
    };

    for (int e : g.incident(u)) {
        for (int f : g.incident(v)) {
            if (e == f) continue;
            bool before = eval(e, f, p, p + 1);
            bool after = eval(e, f, p + 1, p);
            if (before == after) continue;
            int delta = after ? 1 : -1;
            report.crossings += delta;
            for (int x : {e, f}) {
                int& c = report.per_edge[x];
                if (c == 0 && delta > 0) ++report.crossed_count;
                c += delta;
                if (c == 0 && delta < 0) --report.crossed_count;
            }
        }
    }
    if (report.crossings < 0)
        throw std::logic_error("stale crossing state: negative crossing count");
    std::swap(emb.order[p], emb.order[p + 1]);
    pos[emb.order[p]] = p;
    pos[emb.order[p + 1]] = p + 1;
}

void swap_adjacent_update(const Graph& g, BookEmbedding& emb, CrossingReport& report, int p) {
    auto pos = emb.positions(g.vertex_count());
    swap_adjacent_update(g, emb, report, p, pos);
}

BookEmbedding baseline_2page(const Graph& g) {
    BookEmbedding emb;
    emb.page.assign(g.edge_count(), 1);
    emb.order.reserve(g.vertex_count());
    std::vector<char> visited(g.vertex_count(), 0);
    struct Item {
        int v;
        int via_edge;
    };
    std::vector<Item> stack;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (visited[root]) continue;
        stack.push_back({root, -1});
        while (!stack.empty()) {
            auto [v, via] = stack.back();
            stack.pop_back();
            if (visited[v]) continue;
            visited[v] = 1;
            if (via >= 0) emb.page[via] = 0;
            emb.order.push_back(v);
            const auto& inc = g.incident(v);
            for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
                int w = g.other_end(*it, v);
                if (!visited[w]) stack.push_back({w, *it});
            }
        }
    }
    return emb;
}

bool embedding_less(const BookEmbedding& a, const BookEmbedding& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.page < b.page;
}

BookEmbedding canonicalize(const BookEmbedding& emb) {
    int n = static_cast<int>(emb.order.size());
    if (n == 0) return emb;
    int min_pos = static_cast<int>(
        std::min_element(emb.order.begin(), emb.order.end()) - emb.order.begin());

    BookEmbedding best;
    bool have = false;
    for (int dir : {1, -1}) {
        BookEmbedding cand;
        cand.order.resize(n);
        for (int i = 0; i < n; ++i)
            cand.order[i] = emb.order[((min_pos + dir * i) % n + n) % n];
        for (int flip = 0; flip < 2; ++flip) {
            cand.page.resize(emb.page.size());
            for (size_t e = 0; e < emb.page.size(); ++e)
                cand.page[e] = flip ? static_cast<uint8_t>(1 - emb.page[e]) : emb.page[e];
            if (!have || embedding_less(cand, best)) {
                best = cand;
                have = true;
            }
        }
    }
    return best;
}

} // namespace bookcross
