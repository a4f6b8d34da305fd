#include "tpp/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <thread>

namespace tpp {

TppTriple canonicalize(const TppTriple& t) {
    std::array<const Subset*, 3> a = {&t.S, &t.T, &t.U};
    std::sort(a.begin(), a.end(), [](const Subset* x, const Subset* y) { return *x < *y; });
    return TppTriple{*a[0], *a[1], *a[2]};
}

namespace {

// Membership bitmap plus insertion list, so a branch can be undone by
// rolling the list back to a saved mark.
struct MarkedSet {
    std::vector<std::uint8_t> in;
    std::vector<int> added;

    void init(int n, bool with_identity) {
        in.assign(n, 0);
        added.clear();
        if (with_identity) in[0] = 1;  // the identity is permanent, not undoable
    }
    std::size_t mark() const { return added.size(); }
    void rollback(std::size_t m) {
        while (added.size() > m) {
            in[added.back()] = 0;
            added.pop_back();
        }
    }
    // False (and no record) if already present.
    bool insert(int v) {
        if (in[v]) return false;
        in[v] = 1;
        added.push_back(v);
        return true;
    }
};

struct SFrame {
    std::size_t rq_mark = 0;
};
struct TFrame {
    bool ok = true;
    std::size_t rq_mark = 0, img_mark = 0;
    bool bumped_st = false;
};
struct UFrame {
    bool ok = true;
    std::size_t rq_mark = 0, img_pq_mark = 0, img_mq_mark = 0;
    bool bumped_tu = false, bumped_su = false;
};

/**
 * One depth-first searcher. S is grown first, then T (kept lex >= S), then
 * U (kept lex >= T); the right-quotient sets of the partial subsets are
 * maintained incrementally with undo marks.
 *
 * Exactness: a violation q1 q2 q3 = 1, (q1,q2,q3) != (1,1,1) pins
 * q3 = (q1 q2)^-1. Violations with q3 = 1 are exactly the non-identity
 * elements of RQ(S) & RQ(T) and are detected while T grows (quotient sets
 * are inverse-closed). The rest are detected while U grows, against the
 * forbidden set M = { (q1 q2)^-1 : (q1,q2) != (1,1) } built once per
 * completed T. A triple that survives both checks satisfies the property,
 * and no property-satisfying triple is ever cut by them.
 */
class Engine {
public:
    Engine(const Group& g, const SearchConfig& cfg, SearchMode mode)
        : g_(g), n_(g.order()), cfg_(cfg), mode_(mode) {
        ceiling_active_ = cfg_.prune_mult_upper && n_ >= 2;
        n3_ = static_cast<unsigned __int128>(n_) * n_ * n_;
        rq_s_.init(n_, true);
        rq_t_.init(n_, true);
        rq_u_.init(n_, true);
        img_mp_.init(n_, false);
        img_pq_.init(n_, false);
        img_mq_.init(n_, false);
        forbidden_.assign(n_, 0);
        remaining_ = cfg_.max_results.value_or(UINT64_MAX);
        if (remaining_ == 0) stopped_ = true;
    }

    // Explore every S whose least element lies in [lo, hi).
    void run(int lo, int hi) {
        for (int first = lo; first < hi && !stopped_; ++first) {
            SFrame f = push_s(first);
            dfs_s(first);
            pop_s(f);
        }
    }

    std::function<void(const SearchResult&)> sink;  // enumerate mode
    std::optional<SearchResult> best;               // maximal mode
    std::atomic<long long>* shared_best = nullptr;  // cross-worker incumbent

private:
    const Group& g_;
    int n_;
    SearchConfig cfg_;
    SearchMode mode_;
    bool ceiling_active_ = false;
    unsigned __int128 n3_ = 0;
    bool stopped_ = false;
    std::uint64_t remaining_ = UINT64_MAX;

    std::vector<int> s_, t_, u_;
    MarkedSet rq_s_, rq_t_, rq_u_;
    MarkedSet img_mp_, img_pq_, img_mq_;
    std::vector<std::uint8_t> forbidden_;  // M, rebuilt per completed T
    std::vector<int> forbidden_list_;
    int shared_st_ = 0, shared_tu_ = 0, shared_su_ = 0;
    long long best_mpq_ = 0;

    // True when even the smallest completion of the current branch breaks
    // the ceiling (mpq)^2 < n^3, which every property triple obeys at n >= 2.
    bool ceiling_cut(long long m, long long p, long long q) const {
        if (!ceiling_active_) return false;
        const unsigned __int128 mpq = static_cast<unsigned __int128>(m * p) * q;
        return mpq * mpq >= n3_;
    }

    long long incumbent() const {
        long long v = best_mpq_;
        if (shared_best) v = std::max(v, shared_best->load(std::memory_order_relaxed));
        return v;
    }

    // In maximal mode, cut when the branch cannot strictly beat the
    // incumbent even at maximum remaining capacity. Strict: equal-mpq
    // triples must survive so the first one in enumeration order wins.
    bool capacity_cut(long long bound) const {
        return mode_ == SearchMode::maximal && cfg_.prune_mult_upper && bound < incumbent();
    }

    // ---- S phase ----

    SFrame push_s(int y) {
        SFrame f;
        f.rq_mark = rq_s_.mark();
        for (int x : s_) {
            rq_s_.insert(g_.mul_u(y, g_.inv_u(x)));
            rq_s_.insert(g_.mul_u(x, g_.inv_u(y)));
        }
        s_.push_back(y);
        return f;
    }
    void pop_s(const SFrame& f) {
        s_.pop_back();
        rq_s_.rollback(f.rq_mark);
    }

    void dfs_s(int last) {
        if (stopped_) return;
        const long long m_min = std::max<long long>(s_.size(), cfg_.min_size);
        if (ceiling_cut(m_min, cfg_.min_size, cfg_.min_size)) return;
        if (capacity_cut(static_cast<long long>(s_.size() + (n_ - 1 - last)) * n_ * n_)) return;
        if (static_cast<int>(s_.size()) >= cfg_.min_size) dfs_t(-1, true);
        for (int y = last + 1; y < n_ && !stopped_; ++y) {
            SFrame f = push_s(y);
            dfs_s(y);
            pop_s(f);
        }
    }

    // ---- T phase (eq: T so far equals the same-length prefix of S) ----

    TFrame push_t(int y) {
        TFrame f;
        f.rq_mark = rq_t_.mark();
        f.img_mark = img_mp_.mark();
        // A nontrivial element shared by RQ(S) and RQ(T) violates the
        // property for every U (take q3 = 1), so reject y outright.
        // y is new to T, so its quotients are never the identity.
        for (int x : t_) {
            const int qa = g_.mul_u(y, g_.inv_u(x));
            const int qb = g_.mul_u(x, g_.inv_u(y));
            for (int q : {qa, qb}) {
                if (!rq_t_.in[q]) {
                    if (rq_s_.in[q]) {
                        f.ok = false;
                        return f;
                    }
                    rq_t_.insert(q);
                }
            }
        }
        if (cfg_.prune_disjointness && std::binary_search(s_.begin(), s_.end(), y)) {
            if (shared_st_ >= 1) {
                f.ok = false;
                return f;
            }
            ++shared_st_;
            f.bumped_st = true;
        }
        if (cfg_.prune_injectivity) {
            for (int s : s_) {
                if (!img_mp_.insert(g_.mul_u(g_.inv_u(s), y))) {
                    f.ok = false;
                    return f;
                }
            }
        }
        t_.push_back(y);
        return f;
    }
    void pop_t(const TFrame& f) {
        if (f.ok) t_.pop_back();
        if (f.bumped_st) --shared_st_;
        img_mp_.rollback(f.img_mark);
        rq_t_.rollback(f.rq_mark);
    }

    void dfs_t(int last, bool eq) {
        if (stopped_) return;
        const long long m = static_cast<long long>(s_.size());
        const long long p_min = std::max<long long>(t_.size(), cfg_.min_size);
        if (ceiling_cut(m, p_min, cfg_.min_size)) return;
        if (capacity_cut(m * static_cast<long long>(t_.size() + (n_ - 1 - last)) * n_)) return;
        const bool complete_ok =
            static_cast<int>(t_.size()) >= cfg_.min_size && !(eq && t_.size() < s_.size());
        if (complete_ok) u_root();
        for (int y = last + 1; y < n_ && !stopped_; ++y) {
            bool next_eq = false;
            if (eq && t_.size() < s_.size()) {
                const int anchor = s_[t_.size()];
                if (y < anchor) continue;  // would make T lex-smaller than S
                next_eq = y == anchor;
            }
            TFrame f = push_t(y);
            if (f.ok) dfs_t(y, next_eq);
            pop_t(f);
        }
    }

    // ---- U phase ----

    void u_root() {
        // Forbidden values for RQ(U): any q3 completing q1 q2 q3 = 1 with
        // (q1,q2) != (1,1). The identity never lands here because the T
        // phase already excluded RQ(S) & RQ(T) != {1}.
        for (int q1 : rq_s_.added) enter_forbidden(g_.inv_u(q1));
        for (int q2 : rq_t_.added) enter_forbidden(g_.inv_u(q2));
        for (int q1 : rq_s_.added)
            for (int q2 : rq_t_.added) enter_forbidden(g_.inv_u(g_.mul_u(q1, q2)));
        dfs_u(-1, true);
        for (int v : forbidden_list_) forbidden_[v] = 0;
        forbidden_list_.clear();
    }

    void enter_forbidden(int v) {
        if (!forbidden_[v]) {
            forbidden_[v] = 1;
            forbidden_list_.push_back(v);
        }
    }

    UFrame push_u(int y) {
        UFrame f;
        f.rq_mark = rq_u_.mark();
        f.img_pq_mark = img_pq_.mark();
        f.img_mq_mark = img_mq_.mark();
        for (int x : u_) {
            const int qa = g_.mul_u(y, g_.inv_u(x));
            const int qb = g_.mul_u(x, g_.inv_u(y));
            for (int q : {qa, qb}) {
                if (!rq_u_.in[q]) {
                    if (forbidden_[q]) {
                        f.ok = false;
                        return f;
                    }
                    rq_u_.insert(q);
                }
            }
        }
        if (cfg_.prune_disjointness) {
            if (std::binary_search(t_.begin(), t_.end(), y)) {
                if (shared_tu_ >= 1) {
                    f.ok = false;
                    return f;
                }
                ++shared_tu_;
                f.bumped_tu = true;
            }
            if (std::binary_search(s_.begin(), s_.end(), y)) {
                if (shared_su_ >= 1) {
                    f.ok = false;
                    return f;
                }
                ++shared_su_;
                f.bumped_su = true;
            }
        }
        if (cfg_.prune_injectivity) {
            for (int t : t_) {
                if (!img_pq_.insert(g_.mul_u(g_.inv_u(t), y))) {
                    f.ok = false;
                    return f;
                }
            }
            for (int s : s_) {
                if (!img_mq_.insert(g_.mul_u(g_.inv_u(s), y))) {
                    f.ok = false;
                    return f;
                }
            }
        }
        u_.push_back(y);
        return f;
    }
    void pop_u(const UFrame& f) {
        if (f.ok) u_.pop_back();
        if (f.bumped_tu) --shared_tu_;
        if (f.bumped_su) --shared_su_;
        img_mq_.rollback(f.img_mq_mark);
        img_pq_.rollback(f.img_pq_mark);
        rq_u_.rollback(f.rq_mark);
    }

    void dfs_u(int last, bool eq) {
        if (stopped_) return;
        const long long m = static_cast<long long>(s_.size());
        const long long p = static_cast<long long>(t_.size());
        const long long q_min = std::max<long long>(u_.size(), cfg_.min_size);
        if (ceiling_cut(m, p, q_min)) return;
        if (capacity_cut(m * p * static_cast<long long>(u_.size() + (n_ - 1 - last)))) return;
        const bool complete_ok =
            static_cast<int>(u_.size()) >= cfg_.min_size && !(eq && u_.size() < t_.size());
        if (complete_ok) emit();
        for (int y = last + 1; y < n_ && !stopped_; ++y) {
            bool next_eq = false;
            if (eq && u_.size() < t_.size()) {
                const int anchor = t_[u_.size()];
                if (y < anchor) continue;  // would make U lex-smaller than T
                next_eq = y == anchor;
            }
            UFrame f = push_u(y);
            if (f.ok) dfs_u(y, next_eq);
            pop_u(f);
        }
    }

    void emit() {
        TppTriple triple{Subset(s_), Subset(t_), Subset(u_)};
        assert(check_tpp_quotient(g_, triple));
        const long long mpq =
            static_cast<long long>(s_.size()) * t_.size() * u_.size();
        if (mode_ == SearchMode::maximal) {
            if (mpq > best_mpq_) {
                best_mpq_ = mpq;
                best = make_result(std::move(triple), mpq);
                if (shared_best) {
                    long long cur = shared_best->load(std::memory_order_relaxed);
                    while (cur < mpq && !shared_best->compare_exchange_weak(
                                            cur, mpq, std::memory_order_relaxed)) {
                    }
                }
            }
            return;
        }
        sink(make_result(std::move(triple), mpq));
        if (--remaining_ == 0) stopped_ = true;
    }

    SearchResult make_result(TppTriple triple, long long mpq) const {
        DisjointnessReport rep = classify(g_, triple);
        const int sum = triple.m() + triple.p() + triple.q();
        return SearchResult{std::move(triple), mpq, sum, std::move(rep), true};
    }
};

void run_search(const Group& g, const SearchConfig& cfg, SearchMode mode,
                const std::function<void(const SearchResult&)>& sink,
                std::optional<SearchResult>* best_out) {
    if (cfg.min_size < 1) throw input_error("min_size must be at least 1");
    if (cfg.workers < 1) throw input_error("workers must be at least 1");
    if (g.order() > kSearchOrderGuard && !cfg.force)
        throw guard_error("group order " + std::to_string(g.order()) +
                          " exceeds the exhaustive-search guard of " +
                          std::to_string(kSearchOrderGuard) +
                          " (the space grows as 2^(3n)); pass force to search anyway");

    const int n = g.order();
    const int workers = std::min(cfg.workers, n);

    if (workers <= 1) {
        Engine e(g, cfg, mode);
        e.sink = sink;
        e.run(0, n);
        if (best_out) *best_out = std::move(e.best);
        return;
    }

    // One partition per least element of S; workers pull partitions off a
    // shared counter, buffer their results, and the buffers are merged in
    // partition order so the stream matches the single-threaded one.
    std::vector<std::vector<SearchResult>> buffers(n);
    std::vector<std::optional<SearchResult>> bests(n);
    std::atomic<long long> shared_best{0};
    std::atomic<int> next_partition{0};
    auto work = [&]() {
        for (;;) {
            const int p = next_partition.fetch_add(1);
            if (p >= n) return;
            Engine e(g, cfg, mode);
            if (mode == SearchMode::maximal)
                e.shared_best = &shared_best;
            else
                e.sink = [&buffers, p](const SearchResult& r) { buffers[p].push_back(r); };
            e.run(p, p + 1);
            bests[p] = std::move(e.best);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    if (mode == SearchMode::maximal) {
        std::optional<SearchResult> chosen;
        for (auto& b : bests)
            if (b && (!chosen || b->mpq > chosen->mpq)) chosen = std::move(b);
        if (best_out) *best_out = std::move(chosen);
        return;
    }
    std::uint64_t left = cfg.max_results.value_or(UINT64_MAX);
    for (auto& buf : buffers)
        for (auto& r : buf) {
            if (left == 0) return;
            sink(r);
            --left;
        }
}

}  // namespace

void enumerate_tpp(const Group& g, const SearchConfig& cfg,
                   const std::function<void(const SearchResult&)>& emit) {
    run_search(g, cfg, SearchMode::enumerate, emit, nullptr);
}

std::vector<SearchResult> enumerate_tpp_all(const Group& g, const SearchConfig& cfg) {
    std::vector<SearchResult> out;
    enumerate_tpp(g, cfg, [&out](const SearchResult& r) { out.push_back(r); });
    return out;
}

std::optional<SearchResult> find_maximal(const Group& g, const SearchConfig& cfg) {
    std::optional<SearchResult> best;
    run_search(g, cfg, SearchMode::maximal, {}, &best);
    return best;
}

}  // namespace tpp
