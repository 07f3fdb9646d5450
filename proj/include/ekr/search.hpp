#pragma once

// Exhaustive extremal search for cross t-intersecting pairs.
//
// A pair is determined by A alone: the best partner of A is D(A), the set of
// all items compatible with every member of A. The engine enumerates A over a
// universe of at most 64 items (subsets or sequences) with a running AND of
// compatibility masks, keeping only closed A (A = D(D(A))).

#include "ekr/measure.hpp"
#include "ekr/parallel.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>

namespace ekr::search {

struct SearchBudget {
    int max_ground_n = setfam::kMaxIsoGround;
    int max_family_bits = 22; // full mode: at most 2^22 seeds
    bool restrict_shifted = false;
    std::chrono::milliseconds time_limit{0}; // 0 = unlimited
    int workers = default_workers();
};

enum class Construction { F0, F1, Other };

inline const char* construction_name(Construction c)
{
    switch (c) {
    case Construction::F0: return "F0";
    case Construction::F1: return "F1";
    case Construction::Other: return "other";
    }
    return "?";
}

struct SearchResult {
    Rational max_product;
    std::vector<std::pair<Family, Family>> witnesses; // one per isomorphism class
    std::vector<Construction> witness_classes;
    std::optional<Construction> matched_construction;
    bool exhaustive = false;
    std::string mode;      // "full" or "shifted"
    std::uint64_t nodes = 0;
    std::size_t raw_witnesses = 0;  // before isomorphism dedup
    bool partner_shift_hypothesis_held = true;
    double elapsed_ms = 0;
};

namespace detail {

using u128 = unsigned __int128;

inline BigInt to_bigint(u128 x)
{
    BigInt r = static_cast<std::uint64_t>(x >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(x);
    return r;
}

/// Items 0..m-1 with pairwise compatibility masks and positive integer weights.
struct Universe {
    std::vector<std::uint64_t> compat;
    std::vector<std::uint64_t> weight;
    std::vector<std::uint64_t> up; // shifted mode: items that must precede an included item
    std::vector<int> order;        // enumeration order (a linear extension in shifted mode)
    bool shifted = false;

    int size() const { return static_cast<int>(compat.size()); }
    std::uint64_t all() const { return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1; }
    std::uint64_t weigh(std::uint64_t set) const
    {
        std::uint64_t w = 0;
        for (; set; set &= set - 1) w += weight[std::countr_zero(set)];
        return w;
    }
    std::uint64_t partner(std::uint64_t set) const
    {
        std::uint64_t d = all();
        for (; set; set &= set - 1) d &= compat[std::countr_zero(set)];
        return d;
    }
};

struct EngineResult {
    u128 best = 0;
    std::vector<std::uint64_t> argmax;
    std::uint64_t nodes = 0;
    bool complete = true;
    bool hypothesis_held = true;

    void offer(u128 value, std::uint64_t a)
    {
        if (value == 0 || value < best) return;
        if (value > best) {
            best = value;
            argmax.clear();
        }
        argmax.push_back(a);
    }
    // associative, commutative: argmax sorted afterwards
    void merge(const EngineResult& o)
    {
        nodes += o.nodes;
        complete = complete && o.complete;
        hypothesis_held = hypothesis_held && o.hypothesis_held;
        if (o.best == 0 || o.best < best) return;
        if (o.best > best) {
            best = o.best;
            argmax.clear();
        }
        argmax.insert(argmax.end(), o.argmax.begin(), o.argmax.end());
    }
};

class Engine {
public:
    Engine(const Universe& u, std::chrono::milliseconds limit) : u_(u), limit_(limit)
    {
        const int m = u_.size();
        suffix_.assign(m + 1, 0);
        for (int p = m - 1; p >= 0; --p) suffix_[p] = suffix_[p + 1] + u_.weight[u_.order[p]];
        start_ = std::chrono::steady_clock::now();
    }

    EngineResult run(int workers)
    {
        const int m = u_.size();
        const int split = std::min(m, 6);
        const std::size_t tasks = std::size_t{1} << split;
        std::vector<EngineResult> parts(tasks);
        parallel_for(tasks, workers, [&](std::size_t task) {
            std::uint64_t a = 0, excluded = 0;
            for (int p = 0; p < split; ++p) {
                const int e = u_.order[p];
                if ((task >> (split - 1 - p)) & 1) {
                    if (u_.shifted && (u_.up[e] & ~a)) return;
                    a |= std::uint64_t{1} << e;
                } else {
                    excluded |= std::uint64_t{1} << e;
                }
            }
            parts[task].nodes = 1;
            dfs(split, a, excluded, u_.partner(a), u_.weigh(a), parts[task]);
        });
        EngineResult total;
        for (const auto& p : parts) total.merge(p);
        std::sort(total.argmax.begin(), total.argmax.end());
        if (aborted_) total.complete = false;
        return total;
    }

private:
    void dfs(int pos, std::uint64_t a, std::uint64_t excluded, std::uint64_t d, std::uint64_t wa, EngineResult& out)
    {
        if (aborted_) return;
        if ((++out.nodes & 0xFFF) == 0 && limit_.count() > 0 &&
            std::chrono::steady_clock::now() - start_ > limit_) {
            aborted_ = true;
            return;
        }
        const u128 wd = u_.weigh(d);
        // an upper bound for every completion; ties survive so all maxima are kept
        if (u128(wa + suffix_[pos]) * wd < out.best) return;
        if (pos == u_.size()) {
            leaf(a, d, wa, wd, out);
            return;
        }
        const int e = u_.order[pos];
        const std::uint64_t bit = std::uint64_t{1} << e;
        // excluding e is useless when e is compatible with all of D(A): A could not be closed
        if ((d & ~u_.compat[e]) != 0) dfs(pos + 1, a, excluded | bit, d, wa, out);
        if (!u_.shifted || (u_.up[e] & ~a) == 0) dfs(pos + 1, a | bit, excluded, d & u_.compat[e], wa + u_.weight[e], out);
    }

    void leaf(std::uint64_t a, std::uint64_t d, std::uint64_t wa, u128 wd, EngineResult& out)
    {
        if (a == 0 || d == 0) return;
        if (u_.partner(d) != a) return; // not closed
        if (u_.shifted) {
            for (std::uint64_t s = d; s; s &= s - 1)
                if (u_.up[std::countr_zero(s)] & ~d) {
                    out.hypothesis_held = false;
                    break;
                }
        }
        out.offer(u128(wa) * wd, a);
    }

    const Universe& u_;
    std::chrono::milliseconds limit_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::uint64_t> suffix_;
    std::atomic<bool> aborted_{false};
};

/// Universe over subsets: compatible iff they share >= t elements.
inline Universe subset_universe(const std::vector<Mask>& items, int t, const std::vector<std::uint64_t>& weights,
                                bool shifted, int n)
{
    if (items.size() > 64) throw std::invalid_argument("search universe exceeds 64 items");
    Universe u;
    const int m = static_cast<int>(items.size());
    u.compat.assign(m, 0);
    u.weight = weights;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (std::popcount(items[x] & items[y]) >= t) u.compat[x] |= std::uint64_t{1} << y;
    u.order.resize(m);
    std::iota(u.order.begin(), u.order.end(), 0);
    u.shifted = shifted;
    if (shifted) {
        u.up.assign(m, 0);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (x != y && setfam::shifts_to(Subset(n, items[x]), Subset(n, items[y])))
                    u.up[x] |= std::uint64_t{1} << y;
        auto esum = [](Mask s) {
            int r = 0;
            for (; s; s &= s - 1) r += std::countr_zero(s) + 1;
            return r;
        };
        std::stable_sort(u.order.begin(), u.order.end(), [&](int x, int y) {
            int sx = std::popcount(items[x]), sy = std::popcount(items[y]);
            if (sx != sy) return sx > sy;
            return esum(items[x]) < esum(items[y]);
        });
    }
    return u;
}

inline Family family_of(int n, const std::vector<Mask>& items, std::uint64_t set, std::optional<int> k)
{
    std::vector<Mask> out;
    for (; set; set &= set - 1) out.push_back(items[std::countr_zero(set)]);
    return Family(n, std::move(out), k);
}

/// Relabeling-invariant fingerprint of a pair: sorted element and element-pair degrees.
inline std::vector<long> pair_invariant(const Family& a, const Family& b)
{
    const int n = a.ground();
    std::vector<long> single, twin;
    for (int x = 0; x < n; ++x) {
        long da = 0, db = 0;
        for (Mask m : a.masks()) da += (m >> x) & 1;
        for (Mask m : b.masks()) db += (m >> x) & 1;
        single.push_back(da * 4096 + db);
        for (int y = x + 1; y < n; ++y) {
            const Mask xy = (Mask{1} << x) | (Mask{1} << y);
            long ca = 0, cb = 0;
            for (Mask m : a.masks()) ca += (m & xy) == xy;
            for (Mask m : b.masks()) cb += (m & xy) == xy;
            twin.push_back(ca * 4096 + cb);
        }
    }
    std::sort(single.begin(), single.end());
    std::sort(twin.begin(), twin.end());
    std::vector<long> key{static_cast<long>(a.size()), static_cast<long>(b.size()), a == b};
    key.insert(key.end(), single.begin(), single.end());
    key.insert(key.end(), twin.begin(), twin.end());
    return key;
}

inline Construction classify_pair(const Family& a, const Family& b, const Family& f0, const std::optional<Family>& f1)
{
    if (!(a == b)) return Construction::Other;
    if (setfam::are_isomorphic(a, f0)) return Construction::F0;
    if (f1 && setfam::are_isomorphic(a, *f1)) return Construction::F1;
    return Construction::Other;
}

/// Engine over subsets, then isomorphism dedup and classification.
inline SearchResult run_subset_search(int n, const std::vector<Mask>& items, int t,
                                      const std::vector<std::uint64_t>& weights, std::optional<int> k,
                                      const Family& f0, const std::optional<Family>& f1, const SearchBudget& budget,
                                      bool shifted)
{
    auto start = std::chrono::steady_clock::now();
    SearchResult res;
    res.mode = shifted ? "shifted" : "full";
    Universe u = subset_universe(items, t, weights, shifted, n);
    EngineResult er = Engine(u, budget.time_limit).run(budget.workers);
    if (shifted && !er.hypothesis_held) {
        // D(A) of a shifted A was not shifted: the shifted restriction is not justified here
        res.partner_shift_hypothesis_held = false;
        if (static_cast<int>(items.size()) > budget.max_family_bits)
            throw std::runtime_error("shifted partner hypothesis failed and full mode exceeds max_family_bits");
        u = subset_universe(items, t, weights, false, n);
        er = Engine(u, budget.time_limit).run(budget.workers);
        res.mode = "full";
    }
    res.nodes = er.nodes;
    res.exhaustive = er.complete;
    res.max_product = Rational(to_bigint(er.best));
    res.raw_witnesses = er.argmax.size();
    std::vector<std::pair<Family, Family>> raw;
    for (std::uint64_t a : er.argmax)
        raw.emplace_back(family_of(n, items, a, k), family_of(n, items, u.partner(a), k));
    std::map<std::vector<long>, std::vector<std::size_t>> buckets;
    for (auto& [a, b] : raw) {
        auto& bucket = buckets[pair_invariant(a, b)];
        bool seen = false;
        for (std::size_t idx : bucket) {
            const auto& [wa, wb] = res.witnesses[idx];
            if (setfam::are_isomorphic_jointly({wa, wb}, {a, b})) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            bucket.push_back(res.witnesses.size());
            res.witnesses.emplace_back(std::move(a), std::move(b));
        }
    }
    for (const auto& [a, b] : res.witnesses) res.witness_classes.push_back(classify_pair(a, b, f0, f1));
    if (!res.witness_classes.empty()) {
        Construction c = res.witness_classes.front();
        for (Construction x : res.witness_classes)
            if (x != c) c = Construction::Other;
        res.matched_construction = c;
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

} // namespace detail

/// Exact max of |A||B| over cross t-intersecting A, B ⊆ C([n],k).
inline SearchResult max_uniform_product(int n, int k, int t, const SearchBudget& budget = {})
{
    setfam::check_t(t);
    check_ground(n);
    if (k < t || k > n) throw std::invalid_argument("uniform search needs t <= k <= n");
    if (n > budget.max_ground_n) throw std::invalid_argument("budget exceeded: n > max_ground_n");
    const auto items = setfam::layer(n, k);
    if (items.size() > 64) throw std::invalid_argument("budget exceeded: binom(n,k) > 64");
    const bool shifted = budget.restrict_shifted;
    if (!shifted && static_cast<int>(items.size()) > budget.max_family_bits)
        throw std::invalid_argument("budget exceeded: full mode needs binom(n,k) <= max_family_bits");
    std::optional<Family> f1;
    if (t + 2 <= n && k >= t + 1) f1 = setfam::make_frankl_uniform(n, k, t, 1);
    return detail::run_subset_search(n, items, t, std::vector<std::uint64_t>(items.size(), 1), k,
                                     setfam::make_frankl_uniform(n, k, t, 0), f1, budget, shifted);
}

/// Exact max of μ_p(A)μ_p(B) over cross t-intersecting A, B ⊆ 2^[n].
inline SearchResult max_weight_product(int n, int t, const Rational& p, const SearchBudget& budget = {})
{
    setfam::check_t(t);
    measure::WeightParams wp(n, p);
    if (n > budget.max_ground_n) throw std::invalid_argument("budget exceeded: n > max_ground_n");
    if (n > 6) throw std::invalid_argument("budget exceeded: weight search needs n <= 6");
    const bool shifted = budget.restrict_shifted;
    const int items_count = 1 << n;
    if (!shifted && items_count > budget.max_family_bits)
        throw std::invalid_argument("budget exceeded: full mode needs 2^n <= max_family_bits");
    // integer weights a^|F| (b-a)^(n-|F|) with p = a/b; the product is rescaled by b^(2n)
    const BigInt a = numerator(p), b = denominator(p);
    const BigInt total = ipow(b, n);
    if (total >= (BigInt(1) << 62)) throw std::invalid_argument("budget exceeded: denominator of p too large");
    const auto items = setfam::power_set(n);
    std::vector<std::uint64_t> w;
    for (Mask m : items)
        w.push_back(ipow(a, std::popcount(m)).convert_to<std::uint64_t>() *
                    ipow(BigInt(b - a), n - std::popcount(m)).convert_to<std::uint64_t>());
    std::optional<Family> f1;
    if (t + 2 <= n) f1 = setfam::make_frankl(n, t, 1);
    auto res = detail::run_subset_search(n, items, t, w, std::nullopt, setfam::make_frankl(n, t, 0), f1, budget,
                                         shifted);
    res.max_product /= Rational(total * total);
    return res;
}

/// Pseudorandom shifted cross t-intersecting pairs; weight mode (no k) also closes upward.
inline std::vector<std::pair<Family, Family>> generate_shifted_pairs(int n, std::optional<int> k, int t, int count,
                                                                     std::uint64_t seed)
{
    setfam::check_t(t);
    if (n > 10) throw std::invalid_argument("generator is desk-scale: n <= 10");
    if (k && (*k < t || *k > n)) throw std::invalid_argument("generator needs t <= k <= n");
    std::mt19937_64 rng(seed);
    const auto pool = k ? setfam::layer(n, *k) : setfam::power_set(n);
    std::vector<std::pair<Family, Family>> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 1000 * (count + 1)) throw std::runtime_error("generator failed to produce pairs");
        const int seeds = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Mask> s;
        for (int i = 0; i < seeds; ++i) s.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        Family a0(n, s, k);
        Family b0 = setfam::maximal_cross_partner(a0, t, k);
        if (b0.empty()) continue;
        // randomly keep A0 as is or close it
        Family a1 = std::bernoulli_distribution(0.5)(rng) ? setfam::maximal_cross_partner(b0, t, k) : a0;
        auto fx = setfam::shift_pair_to_fixpoint(a1, b0);
        Family a = fx.a, b = fx.b;
        if (!k) {
            a = setfam::upward_closure(a);
            b = setfam::upward_closure(b);
        }
        if (a.empty() || b.empty() || !setfam::is_shifted(a) || !setfam::is_shifted(b) ||
            !setfam::is_cross_t_intersecting(a, b, t))
            continue;
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

} // namespace ekr::search

namespace ekr::measure {

/// f(n) <= f(n+1) for f(n) = max μ_p(A)μ_p(B), plus the lifting identity on an extremal pair.
inline MonotoneCheck product_monotone_check(int n, int t, const Rational& p, const search::SearchBudget& budget = {})
{
    auto lo = search::max_weight_product(n, t, p, budget);
    auto hi = search::max_weight_product(n + 1, t, p, budget);
    MonotoneCheck c{lo.max_product, hi.max_product, lo.max_product <= hi.max_product, true};
    for (const auto& [a, b] : lo.witnesses) {
        Family la = lift(a), lb = lift(b);
        const WeightParams w0(n, p), w1(n + 1, p);
        if (mu(la, w1) != mu(a, w0) || mu(lb, w1) != mu(b, w0) || !setfam::is_cross_t_intersecting(la, lb, t))
            c.lifting_preserves_weight = false;
    }
    return c;
}

} // namespace ekr::measure
