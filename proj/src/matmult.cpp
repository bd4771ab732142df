#include "bookcross/matmult.hpp"

#include <algorithm>
#include <chrono>
#include <climits>

namespace bookcross {

int padded_size(int n) { return n + (3 - n % 3) % 3; }

std::vector<OrderedBlock> enumerate_blocks(const Graph& kernel, Slot slot) {
    int n0 = kernel.vertex_count();
    int n = padded_size(std::max(n0, 1));
    int q = n / 3;
    if (n > 30) throw SizeError("block enumeration needs a padded size of at most 30 vertices");

    std::vector<OrderedBlock> out;
    std::vector<int> members;
    uint32_t mask = 0;

    // Reals may appear in any order; dummies only as an increasing tail, so
    // every split of the real vertices over the three arcs is still reachable.
    auto emit = [&]() { out.push_back({slot, members, mask}); };
    auto rec = [&](auto&& self, bool dummies_only, int min_dummy) -> void {
        if (static_cast<int>(members.size()) == q) {
            emit();
            return;
        }
        if (!dummies_only) {
            for (int v = 0; v < n0; ++v) {
                if (mask & (1u << v)) continue;
                members.push_back(v);
                mask |= 1u << v;
                self(self, false, n0);
                mask &= ~(1u << v);
                members.pop_back();
            }
        }
        for (int v = std::max(min_dummy, n0); v < n; ++v) {
            members.push_back(v);
            mask |= 1u << v;
            self(self, true, v + 1);
            mask &= ~(1u << v);
            members.pop_back();
        }
    };

    if (slot == Slot::P1) {
        if (n0 == 0) throw std::invalid_argument("anchored slot needs at least one real vertex");
        members.push_back(0);
        mask |= 1u;
        rec(rec, false, n0);
    } else {
        rec(rec, false, n0);
    }
    return out;
}

namespace {

// Region/position tables for one (S, T) block pair; C is everything else.
struct PairContext {
    const Graph& g;
    std::vector<int8_t> region; // 0 = S, 1 = T, 2 = C
    std::vector<int> pos;       // position within S or T

    PairContext(const Graph& kernel, const OrderedBlock& s, const OrderedBlock& t)
        : g(kernel), region(kernel.vertex_count(), 2), pos(kernel.vertex_count(), -1) {
        for (size_t i = 0; i < s.members.size(); ++i) {
            int v = s.members[i];
            if (v < kernel.vertex_count()) {
                region[v] = 0;
                pos[v] = static_cast<int>(i);
            }
        }
        for (size_t i = 0; i < t.members.size(); ++i) {
            int v = t.members[i];
            if (v < kernel.vertex_count()) {
                region[v] = 1;
                pos[v] = static_cast<int>(i);
            }
        }
    }
};

// Doubled charge of one same-page crossing-candidate pair of edges (e, f)
// against the triangle edge (S, T), S immediately preceding T on the circle.
long long pair_charge(const PairContext& ctx, int e, int f) {
    auto [u1, u2] = ctx.g.edge(e);
    auto [v1, v2] = ctx.g.edge(f);
    int ru1 = ctx.region[u1], ru2 = ctx.region[u2];
    int rv1 = ctx.region[v1], rv2 = ctx.region[v2];

    auto both_in = [](int a, int b, int r) { return a == r && b == r; };
    auto spans = [](int a, int b, int r1, int r2) {
        return (a == r1 && b == r2) || (a == r2 && b == r1);
    };

    // all four endpoints in S or all four in T: charge 1 to each neighbor pair
    for (int r = 0; r < 2; ++r) {
        if (both_in(ru1, ru2, r) && both_in(rv1, rv2, r)) {
            int lo = std::min(ctx.pos[u1], ctx.pos[u2]);
            int hi = std::max(ctx.pos[u1], ctx.pos[u2]);
            bool in1 = ctx.pos[v1] > lo && ctx.pos[v1] < hi;
            bool in2 = ctx.pos[v2] > lo && ctx.pos[v2] < hi;
            return in1 != in2 ? 1 : 0;
        }
    }

    // both edges span S-T: crossing iff both endpoint orders run the same way
    if (spans(ru1, ru2, 0, 1) && spans(rv1, rv2, 0, 1)) {
        int es = ru1 == 0 ? u1 : u2, et = ru1 == 0 ? u2 : u1;
        int fs = rv1 == 0 ? v1 : v2, ft = rv1 == 0 ? v2 : v1;
        bool same = (ctx.pos[es] < ctx.pos[fs]) == (ctx.pos[et] < ctx.pos[ft]);
        return same ? 2 : 0;
    }

    // three endpoints in one of S/T, the fourth in the other: crossing iff the
    // mixed edge leaves from strictly inside the inner edge
    for (int r = 0; r < 2; ++r) {
        int other = 1 - r;
        const int in_e = both_in(ru1, ru2, r) ? e : (both_in(rv1, rv2, r) ? f : -1);
        if (in_e < 0) continue;
        const int mix = in_e == e ? f : e;
        auto [m1, m2] = ctx.g.edge(mix);
        int rm1 = ctx.region[m1], rm2 = ctx.region[m2];
        if (!spans(rm1, rm2, r, other)) continue;
        int inner_from = rm1 == r ? m1 : m2;
        auto [i1, i2] = ctx.g.edge(in_e);
        int lo = std::min(ctx.pos[i1], ctx.pos[i2]);
        int hi = std::max(ctx.pos[i1], ctx.pos[i2]);
        return (ctx.pos[inner_from] > lo && ctx.pos[inner_from] < hi) ? 2 : 0;
    }

    // shared region S: one edge to T (next arc), one to C (previous arc);
    // they cross iff the T-bound endpoint comes first within S
    if ((spans(ru1, ru2, 0, 1) && spans(rv1, rv2, 0, 2)) ||
        (spans(ru1, ru2, 0, 2) && spans(rv1, rv2, 0, 1))) {
        int to_t = spans(ru1, ru2, 0, 1) ? e : f;
        int to_c = to_t == e ? f : e;
        auto [t1, t2] = ctx.g.edge(to_t);
        auto [c1, c2] = ctx.g.edge(to_c);
        int st = ctx.region[t1] == 0 ? t1 : t2;
        int sc = ctx.region[c1] == 0 ? c1 : c2;
        return ctx.pos[st] < ctx.pos[sc] ? 1 : 0;
    }

    // shared region T: one edge to S (previous arc), one to C (next arc);
    // they cross iff the C-bound endpoint comes first within T
    if ((spans(ru1, ru2, 1, 0) && spans(rv1, rv2, 1, 2)) ||
        (spans(ru1, ru2, 1, 2) && spans(rv1, rv2, 1, 0))) {
        int to_s = spans(ru1, ru2, 1, 0) ? e : f;
        int to_c = to_s == e ? f : e;
        auto [s1, s2] = ctx.g.edge(to_s);
        auto [c1, c2] = ctx.g.edge(to_c);
        int ts = ctx.region[s1] == 1 ? s1 : s2;
        int tc = ctx.region[c1] == 1 ? c1 : c2;
        return ctx.pos[tc] < ctx.pos[ts] ? 1 : 0;
    }

    return 0;
}

} // namespace

long long pair_weight(const Graph& kernel, const OrderedBlock& a, const OrderedBlock& b,
                      const std::vector<uint8_t>& page) {
    bool consecutive = (a.slot == Slot::P1 && b.slot == Slot::P2) ||
                       (a.slot == Slot::P2 && b.slot == Slot::P3) ||
                       (a.slot == Slot::P3 && b.slot == Slot::P1);
    if (!consecutive)
        throw std::invalid_argument("pair_weight expects circularly consecutive slots");
    if (a.mask & b.mask) return kInfWeight;
    if (!page.empty() && static_cast<int>(page.size()) != kernel.edge_count())
        throw std::invalid_argument("page vector does not match the kernel");

    PairContext ctx(kernel, a, b);
    int m = kernel.edge_count();
    long long w = 0;
    for (int e = 0; e < m; ++e) {
        auto [u1, u2] = kernel.edge(e);
        for (int f = e + 1; f < m; ++f) {
            if (!page.empty() && page[e] != page[f]) continue;
            auto [v1, v2] = kernel.edge(f);
            if (u1 == v1 || u1 == v2 || u2 == v1 || u2 == v2) continue;
            w += pair_charge(ctx, e, f);
        }
    }
    return w;
}

WeightMatrix min_plus_product(const WeightMatrix& x, const WeightMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("min-plus dimension mismatch");
    WeightMatrix out;
    out.rows = x.rows;
    out.cols = y.cols;
    out.entries.assign(static_cast<size_t>(x.rows) * y.cols, kInfWeight);
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            long long xv = x.at(i, k);
            if (xv >= kInfWeight) continue;
            const long long* yrow = &y.entries[static_cast<size_t>(k) * y.cols];
            long long* orow = &out.entries[static_cast<size_t>(i) * y.cols];
            for (int j = 0; j < y.cols; ++j) {
                long long v = yrow[j];
                if (v >= kInfWeight) continue;
                if (xv + v < orow[j]) orow[j] = xv + v;
            }
        }
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

WeightMatrix build_weights(const Graph& kernel, const std::vector<OrderedBlock>& rows,
                           const std::vector<OrderedBlock>& cols,
                           const std::vector<uint8_t>& page) {
    WeightMatrix w;
    w.rows = static_cast<int>(rows.size());
    w.cols = static_cast<int>(cols.size());
    w.entries.assign(static_cast<size_t>(w.rows) * w.cols, kInfWeight);
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < w.cols; ++j)
            if (!(rows[i].mask & cols[j].mask)) w.at(i, j) = pair_weight(kernel, rows[i], cols[j], page);
    return w;
}

struct TriangleResult {
    long long doubled = kInfWeight;
    std::vector<int> order; // real vertices only
};

// Minimum-weight triangle via one min-plus product plus a scan; deterministic
// argmin by (row, column, middle) index order.
TriangleResult min_triangle(const Graph& kernel, const std::vector<OrderedBlock>& p1,
                            const std::vector<OrderedBlock>& p2,
                            const std::vector<OrderedBlock>& p3,
                            const std::vector<uint8_t>& page) {
    WeightMatrix w12 = build_weights(kernel, p1, p2, page);
    WeightMatrix w23 = build_weights(kernel, p2, p3, page);
    WeightMatrix w31 = build_weights(kernel, p3, p1, page);
    WeightMatrix prod = min_plus_product(w12, w23);

    TriangleResult best;
    int best_i = -1, best_k = -1;
    for (int i = 0; i < prod.rows; ++i) {
        for (int k = 0; k < prod.cols; ++k) {
            long long pv = prod.at(i, k);
            long long back = w31.at(k, i);
            if (pv >= kInfWeight || back >= kInfWeight) continue;
            if (pv + back < best.doubled) {
                best.doubled = pv + back;
                best_i = i;
                best_k = k;
            }
        }
    }
    if (best_i < 0) throw std::logic_error("no feasible block triangle found");

    int best_j = -1;
    for (int j = 0; j < w12.cols; ++j) {
        long long a = w12.at(best_i, j), b = w23.at(j, best_k);
        if (a >= kInfWeight || b >= kInfWeight) continue;
        if (a + b == prod.at(best_i, best_k)) {
            best_j = j;
            break;
        }
    }
    if (best_j < 0) throw std::logic_error("min-plus witness row vanished");

    int n0 = kernel.vertex_count();
    for (const auto* blk : {&p1[best_i], &p2[best_j], &p3[best_k]})
        for (int v : blk->members)
            if (v < n0) best.order.push_back(v);
    return best;
}

} // namespace

SearchResult solve_1page_matmult(const Graph& kernel, const SolveOptions& opts) {
    auto t0 = Clock::now();
    int n0 = kernel.vertex_count();
    if (n0 > opts.matmult_vertex_cap)
        throw SizeError("matmult 1-page engine needs n <= " +
                        std::to_string(opts.matmult_vertex_cap) + ", got n = " +
                        std::to_string(n0));

    SearchResult res;
    res.style = Style::OnePage;
    res.objective = Objective::Crossings;

    if (n0 == 0) {
        res.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return res;
    }

    auto p1 = enumerate_blocks(kernel, Slot::P1);
    auto p2 = enumerate_blocks(kernel, Slot::P2);
    auto p3 = enumerate_blocks(kernel, Slot::P3);
    res.explored = static_cast<long long>(p1.size()) * p2.size() +
                   static_cast<long long>(p2.size()) * p3.size() +
                   static_cast<long long>(p3.size()) * p1.size();
    if (opts.budget >= 0 && res.explored > opts.budget)
        throw SizeError("matmult weight budget exceeded");

    TriangleResult tri = min_triangle(kernel, p1, p2, p3, {});
    if (tri.doubled % 2 != 0) throw std::logic_error("triangle charges did not pair up");
    res.value = tri.doubled / 2;

    BookEmbedding emb;
    emb.order = tri.order;
    emb.page.assign(kernel.edge_count(), 0);
    CrossingReport check = count(kernel, emb);
    if (check.crossings != res.value)
        throw std::logic_error("triangle weight " + std::to_string(res.value) +
                               " disagrees with recount " + std::to_string(check.crossings));
    res.layout = canonicalize(emb);
    res.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

SearchResult solve_2page_matmult(const Graph& kernel, const SolveOptions& opts) {
    auto t0 = Clock::now();
    int n0 = kernel.vertex_count();
    int m = kernel.edge_count();
    if (n0 > opts.matmult_2page_vertex_cap || m > opts.matmult_2page_edge_cap)
        throw SizeError("matmult 2-page engine needs n <= " +
                        std::to_string(opts.matmult_2page_vertex_cap) + " and m <= " +
                        std::to_string(opts.matmult_2page_edge_cap) + ", got n = " +
                        std::to_string(n0) + ", m = " + std::to_string(m));

    SearchResult res;
    res.style = Style::TwoPage;
    res.objective = Objective::Crossings;

    if (n0 == 0) {
        res.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return res;
    }

    auto p1 = enumerate_blocks(kernel, Slot::P1);
    auto p2 = enumerate_blocks(kernel, Slot::P2);
    auto p3 = enumerate_blocks(kernel, Slot::P3);

    long long assignments = m == 0 ? 1 : (1LL << (m - 1)); // first edge pinned to page 0
    long long best_value = LLONG_MAX;
    BookEmbedding best_layout;
    bool have = false;

    for (long long massk = 0; massk < assignments; ++massk) {
        std::vector<uint8_t> page(m, 0);
        for (int e = 1; e < m; ++e) page[e] = (massk >> (e - 1)) & 1;
        ++res.explored;
        if (opts.budget >= 0 && res.explored > opts.budget)
            throw SizeError("matmult assignment budget exceeded");

        TriangleResult tri = min_triangle(kernel, p1, p2, p3, page);
        if (tri.doubled % 2 != 0) throw std::logic_error("triangle charges did not pair up");
        long long value = tri.doubled / 2;
        if (value > best_value) continue;

        BookEmbedding emb;
        emb.order = tri.order;
        emb.page = page;
        BookEmbedding canon = canonicalize(emb);
        if (!have || value < best_value || embedding_less(canon, best_layout)) {
            best_value = value;
            best_layout = std::move(canon);
            have = true;
        }
    }

    res.value = best_value;
    res.layout = std::move(best_layout);
    CrossingReport check = count(kernel, res.layout);
    if (check.crossings != res.value)
        throw std::logic_error("2-page triangle weight disagrees with recount");
    res.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

} // namespace bookcross
