#include "bookcross/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <future>
#include <numeric>
#include <string>

#include "bookcross/matmult.hpp"

namespace bookcross {

SjtWalk::SjtWalk(int k) : rank_(k), dir_(k + 1, -1) {
    std::iota(rank_.begin(), rank_.end(), 1);
}

int SjtWalk::next() {
    int k = static_cast<int>(rank_.size());
    int best = 0, best_pos = -1;
    for (int i = 0; i < k; ++i) {
        int r = rank_[i];
        int j = i + dir_[r];
        if (j < 0 || j >= k) continue;
        if (rank_[j] < r && r > best) {
            best = r;
            best_pos = i;
        }
    }
    if (best == 0) return -1;
    int i = best_pos;
    int j = i + dir_[best];
    std::swap(rank_[i], rank_[j]);
    for (int r = best + 1; r <= k; ++r) dir_[r] = -dir_[r];
    return std::min(i, j);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

long long pick_value(const CrossingReport& rep, Objective objective) {
    return objective == Objective::Crossings ? rep.crossings : rep.crossed_count;
}

struct Candidate {
    long long value = LLONG_MAX; ///< may act as a bare threshold while !has
    bool has = false;
    BookEmbedding layout;

    void consider(long long v, const BookEmbedding& emb) {
        if (v > value) return;
        BookEmbedding canon = canonicalize(emb);
        if (v < value || !has || embedding_less(canon, layout)) {
            value = v;
            layout = std::move(canon);
            has = true;
        }
    }
    void merge(const Candidate& other) {
        if (!other.has || other.value > value) return;
        if (other.value < value || !has || embedding_less(other.layout, layout)) *this = other;
    }
};

class ExploreCounter {
public:
    explicit ExploreCounter(long long budget) : budget_(budget) {}
    void tick() {
        long long seen = ++count_;
        if (budget_ >= 0 && seen > budget_)
            throw SizeError("search budget of " + std::to_string(budget_) +
                            " configurations exceeded");
    }
    long long total() const { return count_.load(); }

private:
    std::atomic<long long> count_{0};
    long long budget_;
};

// Initial order [0, second, remaining ascending] for one search chunk.
std::vector<int> chunk_order(int n, int second) {
    std::vector<int> order{0, second};
    for (int v = 1; v < n; ++v)
        if (v != second) order.push_back(v);
    return order;
}

// Runs chunks either inline or on a small async pool, merging in index order
// so the outcome never depends on scheduling.
template <typename Fn>
Candidate run_chunks(int n, int threads, Fn&& chunk_fn) {
    std::vector<int> seconds;
    for (int v = 1; v < n; ++v) seconds.push_back(v);
    Candidate best;
    if (threads <= 1) {
        for (int s : seconds) best.merge(chunk_fn(s));
        return best;
    }
    std::vector<std::future<Candidate>> futures;
    futures.reserve(seconds.size());
    for (int s : seconds)
        futures.push_back(std::async(std::launch::async, [&chunk_fn, s] { return chunk_fn(s); }));
    for (auto& f : futures) best.merge(f.get());
    return best;
}

} // namespace

SearchResult solve_1page_sjt(const Graph& g, Objective objective, const SolveOptions& opts) {
    auto t0 = Clock::now();
    int n = g.vertex_count();
    if (n > opts.sjt_vertex_cap)
        throw SizeError("1-page search needs n <= " + std::to_string(opts.sjt_vertex_cap) +
                        ", got n = " + std::to_string(n));

    SearchResult res;
    res.style = Style::OnePage;
    res.objective = objective;
    ExploreCounter explored(opts.budget);

    if (n <= 2) {
        BookEmbedding emb = spine_identity(g);
        explored.tick();
        res.value = pick_value(count(g, emb), objective);
        res.layout = canonicalize(emb);
        res.explored = explored.total();
        res.wall_seconds = seconds_since(t0);
        return res;
    }

    auto chunk_fn = [&](int second) {
        BookEmbedding emb;
        emb.order = chunk_order(n, second);
        emb.page.assign(g.edge_count(), 0);
        CrossingReport rep = count(g, emb);
        auto pos = emb.positions(n);
        Candidate cand;
        auto eval = [&]() {
            if (emb.order[1] > emb.order[n - 1]) return; // reflection representative only
            explored.tick();
            cand.consider(pick_value(rep, objective), emb);
        };
        eval();
        SjtWalk walk(n - 2);
        for (int i; (i = walk.next()) >= 0;) {
            swap_adjacent_update(g, emb, rep, 2 + i, pos);
            eval();
        }
        return cand;
    };

    Candidate best = run_chunks(n, opts.threads, chunk_fn);
    if (!best.has) throw std::logic_error("1-page search visited no configuration");
    res.value = best.value;
    res.layout = std::move(best.layout);
    res.explored = explored.total();
    res.wall_seconds = seconds_since(t0);
    return res;
}

namespace {

// Per-order branch-and-bound over page assignments. Pruning only on strict
// lower-bound excess, so the set of optimal leaves visited is independent of
// pruning and of the shared bound's staleness.
class PageSearch {
public:
    PageSearch(const Graph& g, Objective objective, bool prune, ExploreCounter& explored,
               std::atomic<long long>& shared_best)
        : g_(g),
          objective_(objective),
          prune_(prune),
          explored_(explored),
          shared_best_(shared_best),
          m_(g.edge_count()),
          interleave_(m_, 0),
          cnt_(m_, 0),
          pages_(m_, 0) {}

    void run(const BookEmbedding& order_emb, Candidate& cand) {
        order_ = &order_emb;
        auto pos = order_emb.positions(g_.vertex_count());
        for (int e = 0; e < m_; ++e) {
            interleave_[e] = 0;
            auto [a, b] = g_.edge(e);
            int lo = std::min(pos[a], pos[b]), hi = std::max(pos[a], pos[b]);
            for (int f = 0; f < m_; ++f) {
                if (f == e) continue;
                auto [c, d] = g_.edge(f);
                if (a == c || a == d || b == c || b == d) continue;
                bool in1 = pos[c] > lo && pos[c] < hi;
                bool in2 = pos[d] > lo && pos[d] < hi;
                if (in1 != in2) interleave_[e] |= 1ULL << f;
            }
        }
        page_mask_[0] = page_mask_[1] = 0;
        crossings_ = 0;
        crossed_ = 0;
        std::fill(cnt_.begin(), cnt_.end(), 0);
        descend(0, cand);
    }

private:
    void assign(int e, int p) {
        uint64_t hits = interleave_[e] & page_mask_[p];
        int add = std::popcount(hits);
        while (hits) {
            int f = std::countr_zero(hits);
            hits &= hits - 1;
            if (cnt_[f]++ == 0) ++crossed_;
        }
        cnt_[e] = add;
        if (add > 0) ++crossed_;
        crossings_ += add;
        page_mask_[p] |= 1ULL << e;
        pages_[e] = static_cast<uint8_t>(p);
    }

    void unassign(int e, int p) {
        page_mask_[p] &= ~(1ULL << e);
        uint64_t hits = interleave_[e] & page_mask_[p];
        crossings_ -= std::popcount(hits);
        while (hits) {
            int f = std::countr_zero(hits);
            hits &= hits - 1;
            if (--cnt_[f] == 0) --crossed_;
        }
        if (cnt_[e] > 0) --crossed_;
        cnt_[e] = 0;
    }

    long long lower_bound(int next_edge) const {
        long long base = objective_ == Objective::Crossings ? crossings_ : crossed_;
        // an unassigned edge interleaving assigned edges on both pages is
        // crossed whichever page it picks
        for (int f = next_edge; f < m_; ++f)
            if ((interleave_[f] & page_mask_[0]) && (interleave_[f] & page_mask_[1])) ++base;
        return base;
    }

    void descend(int e, Candidate& cand) {
        if (e == m_) {
            explored_.tick();
            long long v = objective_ == Objective::Crossings ? crossings_ : crossed_;
            if (v <= cand.value) {
                BookEmbedding emb;
                emb.order = order_->order;
                emb.page = pages_;
                cand.consider(v, emb);
            }
            long long seen = shared_best_.load(std::memory_order_relaxed);
            while (v < seen &&
                   !shared_best_.compare_exchange_weak(seen, v, std::memory_order_relaxed)) {
            }
            return;
        }
        int page_limit = e == 0 ? 1 : 2; // page-swap symmetry: first edge stays on page 0
        for (int p = 0; p < page_limit; ++p) {
            assign(e, p);
            bool cut = false;
            if (prune_) {
                long long bound = shared_best_.load(std::memory_order_relaxed);
                cut = lower_bound(e + 1) > bound;
            }
            if (!cut) descend(e + 1, cand);
            unassign(e, p);
        }
    }

    const Graph& g_;
    Objective objective_;
    bool prune_;
    ExploreCounter& explored_;
    std::atomic<long long>& shared_best_;
    int m_;
    const BookEmbedding* order_ = nullptr;
    std::vector<uint64_t> interleave_;
    uint64_t page_mask_[2] = {0, 0};
    std::vector<int> cnt_;
    std::vector<uint8_t> pages_;
    long long crossings_ = 0;
    long long crossed_ = 0;
};

} // namespace

SearchResult solve_2page(const Graph& g, Objective objective, const SolveOptions& opts) {
    auto t0 = Clock::now();
    int n = g.vertex_count();
    int m = g.edge_count();
    if (n > opts.enum_vertex_cap || m > opts.enum_edge_cap || m > 62)
        throw SizeError("2-page search needs n <= " + std::to_string(opts.enum_vertex_cap) +
                        " and m <= " + std::to_string(std::min(opts.enum_edge_cap, 62)) +
                        ", got n = " + std::to_string(n) + ", m = " + std::to_string(m));

    SearchResult res;
    res.style = Style::TwoPage;
    res.objective = objective;
    ExploreCounter explored(opts.budget);

    // spanning-forest baseline seeds both the bound and the tie-break pool
    BookEmbedding base = baseline_2page(g);
    Candidate seed;
    seed.consider(pick_value(count(g, base), objective), base);
    std::atomic<long long> shared_best{seed.value};

    if (n <= 2) {
        explored.tick();
        res.value = seed.value;
        res.layout = std::move(seed.layout);
        res.explored = explored.total();
        res.wall_seconds = seconds_since(t0);
        return res;
    }

    auto chunk_fn = [&](int second) {
        BookEmbedding emb;
        emb.order = chunk_order(n, second);
        emb.page.assign(m, 0);
        auto pos = emb.positions(n);
        PageSearch search(g, objective, opts.prune, explored, shared_best);
        Candidate cand;
        // leaves worse than the incumbent can never win a tie-break, so skip
        // materializing them (the +1 keeps exact ties eligible)
        long long incumbent = shared_best.load(std::memory_order_relaxed);
        if (incumbent < LLONG_MAX - 1) cand.value = incumbent + 1;
        auto eval = [&]() {
            if (emb.order[1] > emb.order[n - 1]) return;
            search.run(emb, cand);
        };
        eval();
        SjtWalk walk(n - 2);
        for (int i; (i = walk.next()) >= 0;) {
            int p = 2 + i;
            std::swap(emb.order[p], emb.order[p + 1]);
            pos[emb.order[p]] = p;
            pos[emb.order[p + 1]] = p + 1;
            eval();
        }
        return cand;
    };

    Candidate best = run_chunks(n, opts.threads, chunk_fn);
    best.merge(seed);
    res.value = best.value;
    res.layout = std::move(best.layout);
    res.explored = explored.total();
    res.wall_seconds = seconds_since(t0);
    return res;
}

BookEmbedding compose_components(const Graph& g, const BlockCutForest& forest,
                                 const std::vector<BookEmbedding>& block_layouts) {
    if (block_layouts.size() != forest.blocks.size())
        throw std::invalid_argument("expected one layout per block");
    int n = g.vertex_count();
    auto blocks_at = forest.blocks_at_vertex(g);
    std::vector<char> placed(n, 0);
    std::vector<char> block_done(forest.blocks.size(), 0);

    BookEmbedding out;
    out.order.reserve(n);
    out.page.assign(g.edge_count(), 0);

    struct Task {
        std::vector<int> seq;
        size_t idx = 0;
    };
    std::vector<Task> stack;

    auto expand = [&](int v) {
        const auto& bl = blocks_at[v];
        for (auto it = bl.rbegin(); it != bl.rend(); ++it) {
            int b = *it;
            if (block_done[b]) continue;
            block_done[b] = 1;
            const auto& lay = block_layouts[b].order;
            auto at = std::find(lay.begin(), lay.end(), v);
            if (at == lay.end())
                throw std::invalid_argument("block layout does not contain its entry vertex");
            Task t;
            t.seq.reserve(lay.size() - 1);
            for (auto i = at + 1; i != lay.end(); ++i) t.seq.push_back(*i);
            for (auto i = lay.begin(); i != at; ++i) t.seq.push_back(*i);
            stack.push_back(std::move(t));
        }
    };

    for (int root = 0; root < n; ++root) {
        if (placed[root]) continue;
        placed[root] = 1;
        out.order.push_back(root);
        expand(root);
        while (!stack.empty()) {
            Task& t = stack.back();
            if (t.idx >= t.seq.size()) {
                stack.pop_back();
                continue;
            }
            int u = t.seq[t.idx++];
            if (placed[u]) throw std::logic_error("block-cut traversal revisited a vertex");
            placed[u] = 1;
            out.order.push_back(u);
            expand(u); // may reallocate the stack; t is not touched afterwards
        }
    }

    for (size_t b = 0; b < forest.blocks.size(); ++b) {
        const auto& edges = forest.blocks[b];
        const auto& pages = block_layouts[b].page;
        if (pages.size() != edges.size())
            throw std::invalid_argument("block layout page vector does not match the block");
        for (size_t i = 0; i < edges.size(); ++i) out.page[edges[i]] = pages[i];
    }
    return out;
}

namespace {

SearchResult solve_kernel_graph(const Graph& kernel_graph, Style style, Objective objective,
                                const SolveOptions& opts) {
    Engine engine = opts.engine;
    if (engine == Engine::Auto)
        engine = style == Style::OnePage ? Engine::Sjt : Engine::Enumeration;
    switch (engine) {
    case Engine::Sjt:
        if (style != Style::OnePage)
            throw std::invalid_argument("the sjt engine only handles 1-page objectives");
        return solve_1page_sjt(kernel_graph, objective, opts);
    case Engine::Enumeration:
        if (style != Style::TwoPage)
            throw std::invalid_argument("the enumeration engine only handles 2-page objectives");
        return solve_2page(kernel_graph, objective, opts);
    case Engine::MatMult:
        if (objective != Objective::Crossings)
            throw std::invalid_argument(
                "the matmult engine does not support the crossed-edges objective");
        return style == Style::OnePage ? solve_1page_matmult(kernel_graph, opts)
                                       : solve_2page_matmult(kernel_graph, opts);
    default:
        throw std::invalid_argument("unknown engine");
    }
}

} // namespace

SearchResult solve(const Graph& g, Style style, Objective objective, const SolveOptions& opts) {
    auto t0 = Clock::now();
    SearchResult res;
    res.style = style;
    res.objective = objective;

    BlockCutForest forest = biconnected_components(g);
    std::vector<BookEmbedding> block_layouts(forest.blocks.size());

    for (size_t b = 0; b < forest.blocks.size(); ++b) {
        Subgraph sub = subgraph_of_edges(g, forest.blocks[b]);
        if (forest.blocks[b].size() == 1) {
            BookEmbedding triv;
            triv.order = {sub.orig_vertex[0], sub.orig_vertex[1]};
            triv.page = {0};
            block_layouts[b] = std::move(triv);
            continue;
        }

        Kernel kernel = make_kernel(sub.graph, style, objective);
        res.kernels.push_back({static_cast<int>(b), kernel.source_k, kernel.ell,
                               kernel.graph.vertex_count(), kernel.graph.edge_count()});

        SolveOptions kopts = opts;
        if (opts.budget >= 0) {
            kopts.budget = opts.budget - res.explored;
            if (kopts.budget < 0) kopts.budget = 0;
        }
        SearchResult kres;
        try {
            kres = solve_kernel_graph(kernel.graph, style, objective, kopts);
        } catch (const SizeError& err) {
            throw SizeError("block " + std::to_string(b) + " with kernel size " +
                            std::to_string(kernel.graph.vertex_count()) + " vertices / " +
                            std::to_string(kernel.graph.edge_count()) + " edges: " + err.what());
        }

        BookEmbedding lifted = lift_layout(kernel, kres.layout);
        BookEmbedding global;
        global.order.reserve(lifted.order.size());
        for (int v : lifted.order) global.order.push_back(sub.orig_vertex[v]);
        global.page = lifted.page; // sub edge i is forest.blocks[b][i]
        block_layouts[b] = std::move(global);

        res.value += kres.value;
        res.explored += kres.explored;
    }

    BookEmbedding composed = compose_components(g, forest, block_layouts);
    res.layout = canonicalize(composed);

    CrossingReport check = count_fast(g, res.layout);
    if (pick_value(check, objective) != res.value)
        throw std::logic_error("composed layout does not reproduce the summed block optimum: " +
                               std::to_string(pick_value(check, objective)) + " vs " +
                               std::to_string(res.value));

    res.wall_seconds = seconds_since(t0);
    return res;
}

} // namespace bookcross
