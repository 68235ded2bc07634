#include "cdc/search.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace cdc {

Clique make_clique(const SkeletonGraph& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    Clique c;
    c.weight = g.clique_weight(members);  // validates pairwise adjacency
    c.members = std::move(members);
    return c;
}

BigInt ub_extension(const SkeletonGraph& g, const Clique& s, int ub) {
    if (ub < static_cast<int>(s.size()))
        throw std::invalid_argument("ub_extension: cap below clique size");
    g.clique_weight(s.members);  // contract: s is a clique
    BigInt omega = s.weight;
    int taken = static_cast<int>(s.size());
    const int first = s.empty() ? 0 : s.members.back() + 1;
    for (int v = first; v < g.vertex_count() && taken < ub; ++v) {
        bool common = true;
        for (int x : s.members)
            if (!g.adjacent(x, v)) {
                common = false;
                break;
            }
        if (common) {
            omega += g.weight(v);
            ++taken;
        }
    }
    return omega;
}

namespace {

// Depth-first search of Algorithm-3 shape: candidates are kept as ascending
// index lists (all above max(S) and adjacent to every member), and the greedy
// cap for S+{v} is the child list's weight prefix.
class DiveEngine {
  public:
    DiveEngine(const SkeletonGraph& g, int ub, DiveHook hook, const std::atomic<bool>* stop)
        : g_(g), ub_(ub), hook_(std::move(hook)), stop_(stop) {}

    void run(const Clique& seed) {
        std::vector<int> cand;
        const int first = seed.empty() ? 0 : seed.members.back() + 1;
        for (int v = first; v < g_.vertex_count(); ++v) {
            bool common = true;
            for (int x : seed.members)
                if (!g_.adjacent(x, v)) {
                    common = false;
                    break;
                }
            if (common) cand.push_back(v);
        }
        std::vector<int> s = seed.members;
        dive(s, seed.weight, cand);
    }

    // Explores the single subtree rooted at the top-level branch vertex v.
    void run_branch(int v, const std::vector<int>& cand_after_v) {
        std::vector<int> s{v};
        dive(s, g_.weight(v), cand_after_v);
    }

    Clique& best() { return best_; }
    void set_prune_floor(const BigInt& w) { prune_floor_ = w; }
    void set_improvement_callback(std::function<void(DiveEngine&)> cb) {
        on_improve_ = std::move(cb);
    }

  private:
    void dive(std::vector<int>& s, const BigInt& w, const std::vector<int>& cand) {
        if (stop_ && stop_->load(std::memory_order_relaxed)) return;
        if (hook_) hook_(s, w);
        if (w > best_.weight) {  // strict improvement; ties keep the first clique found
            best_.members = s;
            best_.weight = w;
            if (w > prune_floor_) prune_floor_ = w;
            if (on_improve_) on_improve_(*this);
        }
        if (static_cast<int>(s.size()) >= ub_) return;
        const int slots = ub_ - static_cast<int>(s.size()) - 1;
        std::vector<int> child;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const int v = cand[i];
            child.clear();
            BigInt bound = w + g_.weight(v);
            int taken = 0;
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (g_.adjacent(v, cand[j])) {
                    child.push_back(cand[j]);
                    if (taken < slots) {
                        bound += g_.weight(cand[j]);
                        ++taken;
                    }
                }
            }
            if (bound > prune_floor_) {
                s.push_back(v);
                dive(s, w + g_.weight(v), child);
                s.pop_back();
            }
        }
    }

    const SkeletonGraph& g_;
    int ub_;
    DiveHook hook_;
    const std::atomic<bool>* stop_;
    Clique best_;
    BigInt prune_floor_ = 0;  // weight of the empty incumbent
    std::function<void(DiveEngine&)> on_improve_;
};

Clique exact_parallel(const SkeletonGraph& g, int ub, int threads, const std::atomic<bool>* stop) {
    struct Shared {
        std::mutex mutex;
        Clique best;
        BigInt floor = 0;
    } shared;
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int v = next.fetch_add(1);
            if (v >= g.vertex_count()) return;
            if (stop && stop->load(std::memory_order_relaxed)) return;
            std::vector<int> child;
            for (int u = v + 1; u < g.vertex_count(); ++u)
                if (g.adjacent(v, u)) child.push_back(u);
            DiveEngine engine(g, ub, nullptr, stop);
            {
                std::lock_guard lock(shared.mutex);
                engine.set_prune_floor(shared.floor);
            }
            engine.set_improvement_callback([&shared](DiveEngine& e) {
                std::lock_guard lock(shared.mutex);
                if (e.best().weight > shared.best.weight) {
                    shared.best = e.best();
                    shared.floor = shared.best.weight;
                }
                e.set_prune_floor(shared.floor);
            });
            // cheap pre-check mirroring the sequential gate
            BigInt bound = g.weight(v);
            for (std::size_t j = 0; j < child.size() && j + 1 < static_cast<std::size_t>(ub); ++j)
                bound += g.weight(child[j]);
            bool descend;
            {
                std::lock_guard lock(shared.mutex);
                descend = bound > shared.floor;
            }
            if (descend) engine.run_branch(v, child);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return shared.best;
}

}  // namespace

Clique exact_max_weight_clique(const SkeletonGraph& g, const SearchOptions& opts) {
    int ub = opts.ub;
    if (ub <= 0) {
        const long cap = johnson_ub(g.n(), g.d(), g.k());
        ub = cap > g.vertex_count() ? g.vertex_count() : static_cast<int>(cap);
    }
    ub = std::min(ub, g.vertex_count());
    if (g.vertex_count() == 0) return {};
    if (opts.threads > 1) {
        if (opts.hook) throw std::invalid_argument("dive hooks require the sequential search");
        return exact_parallel(g, ub, opts.threads, opts.stop);
    }
    DiveEngine engine(g, ub, opts.hook, opts.stop);
    engine.run(Clique{});
    return engine.best();
}

Clique exact_max_weight_clique(const SkeletonGraph& g, int ub, int threads) {
    SearchOptions opts;
    opts.ub = ub;
    opts.threads = threads;
    return exact_max_weight_clique(g, opts);
}

Clique dive_from_seed(const SkeletonGraph& g, const Clique& seed, const SearchOptions& opts,
                      const BigInt& initial_floor) {
    if (opts.ub < static_cast<int>(seed.size()))
        throw std::invalid_argument("dive_from_seed: cap below seed size");
    DiveEngine engine(g, opts.ub, opts.hook, opts.stop);
    engine.set_prune_floor(initial_floor);
    engine.run(seed);
    return engine.best();
}

namespace {

BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

BigInt johnson_rec(int n, int d, int k, std::map<std::pair<int, int>, BigInt>& memo) {
    if (k < 0 || k > n) return 0;
    if (k == 0) return 1;
    if (d > 2 * k) return 1;
    if (d <= 2) return binomial_big(n, k);
    if (n - k < k) return johnson_rec(n, d, n - k, memo);
    if (d == 2 * k) return n / k;
    const auto key = std::make_pair(n, k);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt val = n * johnson_rec(n - 1, d, k - 1, memo) / k;
    const BigInt all = binomial_big(n, k);
    if (all < val) val = all;
    memo[key] = val;
    return val;
}

}  // namespace

long johnson_ub(int n, int d, int k) {
    if (d % 2 != 0 || d < 2) throw std::invalid_argument("johnson_ub: d must be even and >= 2");
    std::map<std::pair<int, int>, BigInt> memo;
    const BigInt v = johnson_rec(n, d, k, memo);
    if (v > LONG_MAX) return LONG_MAX;
    return static_cast<long>(v);
}

// ------------------------------------------------------------------------
// Unweighted maximum clique: bitset branch and bound with a greedy coloring
// cap (one color class = one independent set, so any clique picks at most
// one vertex per class).

namespace {

class BitsetClique {
  public:
    BitsetClique(const SkeletonGraph& g, long known_ub)
        : n_(g.vertex_count()), words_((n_ + 63) / 64), known_ub_(known_ub) {
        adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (g.adjacent(u, v)) {
                    adj_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
                    adj_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
                }
    }

    int solve(int initial_lb) {
        best_ = std::max(initial_lb, greedy());
        if (done()) return best_;
        std::vector<std::uint64_t> p(words_, 0);
        for (int v = 0; v < n_; ++v) p[v / 64] |= 1ull << (v % 64);
        expand(0, p);
        return best_;
    }

  private:
    bool done() const { return known_ub_ >= 0 && best_ >= known_ub_; }

    const std::uint64_t* row(int v) const { return &adj_[static_cast<std::size_t>(v) * words_]; }

    static int popcount_set(const std::vector<std::uint64_t>& s) {
        int c = 0;
        for (std::uint64_t w : s) c += std::popcount(w);
        return c;
    }

    int greedy() const {
        int best = 0;
        std::mt19937 rng(20240811);
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = i;
        std::vector<std::uint64_t> p(words_);
        for (int round = 0; round < 200; ++round) {
            if (round) std::shuffle(order.begin(), order.end(), rng);
            std::fill(p.begin(), p.end(), ~0ull);
            int size = 0;
            for (int v : order) {
                if (p[v / 64] & (1ull << (v % 64))) {
                    ++size;
                    const std::uint64_t* r = row(v);
                    for (int w = 0; w < words_; ++w) p[w] &= r[w];
                }
            }
            best = std::max(best, size);
            if (known_ub_ >= 0 && best >= known_ub_) break;
        }
        return best;
    }

    void expand(int depth, std::vector<std::uint64_t>& p) {
        if (done()) return;
        // greedy coloring of p; vertices gathered class by class
        std::vector<int> order_vs;
        std::vector<int> order_color;
        {
            std::vector<std::uint64_t> uncolored = p;
            std::vector<std::uint64_t> q(words_);
            int color = 0;
            while (true) {
                int any = -1;
                for (int w = 0; w < words_; ++w)
                    if (uncolored[w]) {
                        any = w;
                        break;
                    }
                if (any < 0) break;
                ++color;
                q = uncolored;
                while (true) {
                    int v = -1;
                    for (int w = 0; w < words_; ++w)
                        if (q[w]) {
                            v = w * 64 + std::countr_zero(q[w]);
                            break;
                        }
                    if (v < 0) break;
                    order_vs.push_back(v);
                    order_color.push_back(color);
                    uncolored[v / 64] &= ~(1ull << (v % 64));
                    const std::uint64_t* r = row(v);
                    for (int w = 0; w < words_; ++w) q[w] &= ~r[w];
                    q[v / 64] &= ~(1ull << (v % 64));
                }
            }
        }
        std::vector<std::uint64_t> child(words_);
        for (int i = static_cast<int>(order_vs.size()) - 1; i >= 0; --i) {
            if (done()) return;
            if (depth + order_color[i] <= best_) return;  // colors only shrink leftwards
            const int v = order_vs[i];
            const std::uint64_t* r = row(v);
            for (int w = 0; w < words_; ++w) child[w] = p[w] & r[w];
            if (popcount_set(child) == 0) {
                if (depth + 1 > best_) best_ = depth + 1;
            } else {
                std::vector<std::uint64_t> saved = child;
                expand(depth + 1, saved);
            }
            p[v / 64] &= ~(1ull << (v % 64));
        }
    }

    int n_;
    int words_;
    long known_ub_;
    std::vector<std::uint64_t> adj_;
    int best_ = 0;
};

}  // namespace

int max_clique_size(const SkeletonGraph& g, int initial_lb, long known_ub) {
    if (g.vertex_count() == 0) return 0;
    BitsetClique solver(g, known_ub);
    return solver.solve(initial_lb);
}

}  // namespace cdc
