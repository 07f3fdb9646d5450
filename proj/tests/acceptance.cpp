// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only (exit 0 on PASS)

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <queue>
#include <sstream>

using namespace ekr;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream log; // first few failures

    int shown = 0;
    void fail(const std::string& what)
    {
        pass = false;
        if (shown++ >= 8) return;
        std::string line = what;
        std::replace(line.begin(), line.end(), '\n', ' ');
        log << "    " << line << "\n";
    }
    void require(bool ok, const std::string& what)
    {
        if (!ok) fail(what);
    }
};

bool below(Enclosed e, const Rational& c) { return certify_less(e, c).verdict == Verdict::holds; }
bool above(Enclosed e, const Rational& c) { return certify_greater(e, c).verdict == Verdict::holds; }

std::string str(const Rational& r)
{
    if (denominator(r) == 1) return numerator(r).str();
    return to_string(r);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- 1
void scalar_constants(Outcome& o)
{
    using namespace bounds;
    const auto t0 = std::chrono::steady_clock::now();
    const Rational p = rat(1, 15);
    o.require(g_easy(3, 14) * h_easy(1, 14) < rat(87, 100), "g(3,14)h(1,14) < 0.87");
    o.require(g_easy(2, 14) < rat(96, 100), "g(2,14) < 0.96");
    o.require(f_claim(13, 2, p) * f_claim(15, 1, p) < rat(68, 100), "f(13,2)f(15,1) < 0.68");
    o.require(ipow(f_claim(14, 2, p), 2) < rat(46, 100), "f(14,2)^2 < 0.46");
    o.require(below([](int n) { return g_case1(7, n); }, rat(999, 1000)), "g_case1(7) < 0.999");
    o.require(g_case2(13) < 1, "g_case2(13) < 1");
    o.require(below([](int n) { return g2_case2(14, n); }, 1), "g2(14) < 1");
    o.require(below([](int n) { return h_case3(13, n); }, rat(96, 100)), "h_case3(13) < 0.96");
    o.require(below([](int n) { return e_prefactor(8, n); }, 1), "e^(2+1/8)/9 < 1");
    o.require(pow_prefactor(14) < rat(1, 2), "(1+1/14)^29/15 < 1/2");
    o.require(h_k(14, 14, 2) == rat(153, 225), "h(14,14,2) = 153/225");
    o.require(h_k(14, 28, 2) < rat(221, 100), "h(14,28,2) < 2.21");
    o.require(h_k(14, 16, 1) == rat(6, 5), "h(14,16,1) = 6/5");
    o.require(above([](int n) { return extremal_f(8, 1, n); }, rat(12, 10)), "f(8,1) > 1.2");
    o.require(ucase3_exact(14) < 1, "uniform case 3 at t=14");
    o.require(ucase3_exact(15) < 1, "uniform case 3 at t=15");
    o.require(below([](int n) { return ucase3_eform(16, n); }, 1), "uniform case 3 at t=16");
    o.require(stability_ratio(14, p) == 1, "stability g(1/15) = 1 at t=14");
    const double s = seconds_since(t0);
    o.require(s < 5, "runtime " + std::to_string(s) + " s exceeds 5 s");
}

// ---------------------------------------------------------------- 2
void finite_check(Outcome& o)
{
    for (int t = 14; t <= 18; ++t) {
        bounds::Case2Options opt;
        opt.workers = default_workers();
        auto r = bounds::case2_finite(t, opt);
        if (t == 14) o.require(r.n0_floor == 1023, "floor(n0(14)) = " + to_string(r.n0_floor));
        o.require(!r.first_failure, "t=" + std::to_string(t) + " has a cell with ratio >= 1");
        o.require(r.max_ratio < 1, "t=" + std::to_string(t) + " max ratio " + str(r.max_ratio));
        std::cout << "    t=" << t << " cells=" << r.cells << " n0=" << to_string(r.n0_floor) << "\n";
        if (t == 14) o.require(r.cells > 20000, "t=14 covers only " + std::to_string(r.cells) + " cells");
    }
}

// ---------------------------------------------------------------- 3
void walk_oracle(Outcome& o)
{
    int cells = 0;
    for (int len = 1; len <= 12; ++len)
        for (int y0 = 0; y0 <= len; ++y0) {
            const int x0 = len - y0;
            for (int c = 1; c < y0; ++c) {
                if (!(y0 < x0 + c)) continue;
                long hit = 0, miss = 0;
                for (std::uint32_t m = 0; m < (1u << len); ++m) {
                    if (std::popcount(m) != y0) continue;
                    int x = 0, y = 0;
                    bool touched = false;
                    for (int s = 0; s < len; ++s) {
                        if ((m >> s) & 1) ++y;
                        else ++x;
                        touched = touched || y - x == c;
                    }
                    (touched ? hit : miss)++;
                }
                ++cells;
                const std::string at = "(" + std::to_string(x0) + "," + std::to_string(y0) + "," + std::to_string(c) + ")";
                o.require(walks::count_hit(x0, y0, c) == hit, "count_hit mismatch at " + at);
                o.require(walks::count_miss(x0, y0, c) == miss, "count_miss mismatch at " + at);
            }
        }
    std::cout << "    cells=" << cells << "\n";
    o.require(cells == 95, "expected 95 admissible cells");
}

// ---------------------------------------------------------------- 4
// Sum of p^|F| q^(n-|F|) over the members of [n]'s power set picked by `member`.
Rational enumerate_weight(int n, const Rational& p, const std::function<bool(std::uint32_t)>& member)
{
    std::vector<long> by_size(n + 1, 0);
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (member(m)) ++by_size[std::popcount(m)];
    Rational total = 0;
    for (int j = 0; j <= n; ++j)
        if (by_size[j]) total += Rational(by_size[j]) * ipow(p, j) * ipow(1 - p, n - j);
    return total;
}

void measure_oracle(Outcome& o)
{
    int checks = 0;
    for (Rational p : {rat(1, 3), rat(1, 4), rat(1, 5), rat(1, 15)})
        for (int n = 1; n <= 12; ++n)
            for (int t = 1; t <= std::min(4, n); ++t) {
                const std::string at = " n=" + std::to_string(n) + " t=" + std::to_string(t) + " p=" + str(p);
                const std::uint32_t head = (1u << t) - 1;
                const Rational star = enumerate_weight(n, p, [&](std::uint32_t m) { return (m & head) == head; });
                o.require(star == ipow(p, t), "p^t" + at);
                for (int i = 0; i <= 2 && t + 2 * i <= n; ++i) {
                    const std::uint32_t win = (1u << (t + 2 * i)) - 1;
                    const Rational fi = enumerate_weight(n, p, [&](std::uint32_t m) { return std::popcount(m & win) >= t + i; });
                    o.require(fi == measure::mu_frankl_closed(n, t, i, p), "binomial tail i=" + std::to_string(i) + at);
                    o.require(fi == measure::mu(setfam::make_frankl(n, t, i), measure::WeightParams(n, p)),
                              "mu of F_i i=" + std::to_string(i) + at);
                    ++checks;
                }
                if (n >= t + 1) {
                    // passes through (1,t) but not (0,t): exactly t ups among the first t+1 steps, the last one up
                    const std::uint32_t w = (1u << (t + 1)) - 1, last = 1u << t;
                    const Rational ev = enumerate_weight(n, p, [&](std::uint32_t m) {
                        return std::popcount(m & w) == t && (m & last);
                    });
                    o.require(ev == measure::mu_hit_1t_not_0t_closed(t, p), "t p^t q" + at);
                    // (F_0 minus [t]) plus the co-singletons [n]\{i}, i <= t
                    const std::uint32_t all = (1u << n) - 1;
                    const Rational g = enumerate_weight(n, p, [&](std::uint32_t m) {
                        if ((m & head) == head && m != head) return true;
                        for (int i = 0; i < t; ++i)
                            if (m == (all & ~(1u << i))) return true;
                        return false;
                    });
                    o.require(g == measure::mu_stability_family_closed(n, t, p), "G formula" + at);
                    if (n >= t + 2)
                        o.require(g == measure::mu(setfam::stability_weight_family(n, t), measure::WeightParams(n, p)),
                                  "mu of G" + at);
                    checks += 2;
                }
            }
    std::cout << "    checks=" << checks << "\n";
}

// ---------------------------------------------------------------- 5
bool is_star_pair(const Family& a, const Family& b, int n, int k)
{
    const Family star = setfam::make_frankl_uniform(n, k, 1, 0);
    return setfam::are_isomorphic_jointly({a, b}, {star, star}).has_value();
}

void uniform_t1(Outcome& o)
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
        const std::string at = " at (" + std::to_string(n) + "," + std::to_string(k) + ")";
        auto r = search::max_uniform_product(n, k, 1);
        const BigInt expect = binom(n - 1, k - 1) * binom(n - 1, k - 1);
        o.require(r.exhaustive, "search not exhaustive" + at);
        o.require(r.max_product == Rational(expect), "max " + str(r.max_product) + " != " + to_string(expect) + at);
        int non_star = 0;
        for (const auto& [a, b] : r.witnesses) {
            o.require(setfam::is_cross_t_intersecting(a, b, 1), "witness not cross intersecting" + at);
            if (!is_star_pair(a, b, n, k)) {
                ++non_star;
                o.fail("non-star extremal witness" + at + ": A=" + family_to_string(a) + " B=" + family_to_string(b));
            }
        }
        if (binom(n, k) <= 12)
            o.require(Rational(oracle::brute_uniform(n, k, 1)) == r.max_product, "brute force disagrees" + at);
        std::cout << "    (" << n << "," << k << ") max=" << str(r.max_product) << " classes=" << r.witnesses.size()
                  << " non-star=" << non_star << "\n";
    }
}

// ---------------------------------------------------------------- 6
void weighted(Outcome& o)
{
    for (auto [n, t, p] : std::vector<std::tuple<int, int, Rational>>{{3, 1, rat(1, 3)}, {4, 1, rat(1, 3)}, {4, 2, rat(1, 4)}}) {
        const std::string at = " at (" + std::to_string(n) + "," + std::to_string(t) + "," + str(p) + ")";
        auto r = search::max_weight_product(n, t, p);
        o.require(r.exhaustive, "not exhaustive" + at);
        o.require(r.max_product == ipow(p, 2 * t), "max " + str(r.max_product) + at);
        o.require(!r.witnesses.empty(), "no witness" + at);
        const Family f0 = setfam::make_frankl(n, t, 0);
        for (const auto& [a, b] : r.witnesses)
            o.require(setfam::are_isomorphic_jointly({a, b}, {f0, f0}).has_value(), "witness not (F0,F0)" + at);
        if (n <= 3) o.require(oracle::brute_weight(n, t, p) == r.max_product, "brute force disagrees" + at);
    }
}

// ---------------------------------------------------------------- 7
void lemma_harness(Outcome& o)
{
    long pairs = 0;
    auto run = [&](const Family& a, const Family& b, int t, bool uniform) {
        for (const auto& v : oracle::shifted_pair_violations(a, b, t, uniform)) o.fail(v);
        ++pairs;
    };
    // every shifted pair in small layers
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            if (binom(n, k) > 16) continue;
            const auto fams = oracle::all_shifted(n, k, false);
            for (int t = 1; t <= k; ++t)
                for (const auto& a : fams)
                    for (const auto& b : fams)
                        if (setfam::is_cross_t_intersecting(a, b, t)) run(a, b, t, true);
        }
    // every maximal shifted pair in the power sets
    for (int n = 1; n <= 4; ++n) {
        const auto fams = oracle::all_shifted(n, std::nullopt, true);
        for (int t = 1; t <= n; ++t)
            for (const auto& a : fams)
                for (const auto& b : fams)
                    if (setfam::is_cross_t_intersecting(a, b, t)) run(a, b, t, false);
    }
    const long exhaustive = pairs;
    // 500 generated pairs
    int generated = 0;
    for (auto [n, k, t] : std::vector<std::tuple<int, std::optional<int>, int>>{
             {5, std::nullopt, 1}, {6, std::nullopt, 1}, {6, std::nullopt, 2}, {6, 2, 1}, {6, 3, 1}}) {
        for (const auto& [a, b] : search::generate_shifted_pairs(n, k, t, 100, 17 + n + 10 * t)) {
            o.require(setfam::is_shifted(a) && setfam::is_shifted(b), "generated pair not shifted");
            o.require(setfam::is_cross_t_intersecting(a, b, t), "generated pair not cross intersecting");
            run(a, b, t, k.has_value());
            ++generated;
        }
    }
    // shifting keeps sizes, weights and the cross property
    std::mt19937_64 rng(99);
    int shifted = 0;
    for (int n = 3; n <= 6; ++n)
        for (int t = 1; t <= 2; ++t)
            for (std::optional<int> k : {std::optional<int>{}, std::optional<int>{3}}) {
                if (k && *k < t) continue;
                for (int rep = 0; rep < 25; ++rep) {
                    auto [a, b] = oracle::random_cross_pair(n, k, t, rng);
                    for (const auto& v : oracle::shift_violations(a, b, t, rat(1, 3))) o.fail(v + " n=" + std::to_string(n));
                    // and the full shifting process ends in a shifted pair
                    auto fx = setfam::shift_pair_to_fixpoint(a, b);
                    o.require(setfam::is_shifted(fx.a) && setfam::is_shifted(fx.b), "fixpoint not shifted");
                    o.require(setfam::is_cross_t_intersecting(fx.a, fx.b, t), "fixpoint lost cross intersection");
                    ++shifted;
                }
            }
    std::cout << "    exhaustive pairs=" << exhaustive << " generated=" << generated << " shift pairs=" << shifted << "\n";
    o.require(generated == 500, "expected 500 generated pairs");
}

// ---------------------------------------------------------------- 8
void constructions(Outcome& o)
{
    {
        const int n = 8, k = 3, t = 1;
        Family f = setfam::stability_uniform_family(n, k, t);
        o.require(setfam::is_shifted(f), "uniform counterexample not shifted");
        o.require(setfam::is_t_intersecting(f, t), "uniform counterexample not t-intersecting");
        // star members meeting [t+1,k+1], plus the t sets [k+1]\{i}
        long count = 0;
        for (Mask m : setfam::layer(n, k)) {
            const bool in_star = (m & full_mask(t)) == full_mask(t);
            const bool meets = (m >> t) & full_mask(k + 1 - t);
            if (in_star && meets) ++count;
        }
        count += t;
        o.require(long(f.size()) == count, "uniform counterexample size " + std::to_string(f.size()));
        o.require(BigInt(long(f.size())) == binom(n - t, k - t) - binom(n - k - 1, k - t) + t, "uniform size formula");
        o.require(!setfam::find_star_copy_containing(f, t), "uniform counterexample sits in a star");
    }
    {
        const int n = 6, t = 2;
        Family g = setfam::stability_weight_family(n, t);
        o.require(setfam::is_shifted(g), "weight counterexample not shifted");
        o.require(setfam::is_t_intersecting(g, t), "weight counterexample not t-intersecting");
        for (Rational p : {rat(1, 3), rat(1, 5), rat(1, 15)})
            o.require(measure::mu(g, measure::WeightParams(n, p)) == measure::mu_stability_family_closed(n, t, p),
                      "weight formula at p=" + str(p));
        o.require(!setfam::find_star_copy_containing(g, t), "weight counterexample sits in a star");
        const Family f0 = setfam::make_frankl(n, t, 0);
        std::size_t sym = 0;
        for (Mask m : g.masks()) sym += !f0.contains(Subset(n, m));
        for (Mask m : f0.masks()) sym += !g.contains(Subset(n, m));
        o.require(sym == std::size_t(t + 1), "symmetric difference with F0 is " + std::to_string(sym));
    }
    // D walks land in the claimed classes
    using namespace walks;
    int cells = 0;
    for (int n = 8; n <= 16; ++n)
        for (int t = 2; t <= 5; ++t) {
            for (int i = 1; i <= n - t - 2; ++i) {
                o.require(classify(make_D_walk(DKind::A10, n, t, 0, i), t - 1) == WalkClass{Tag::Hat, 1}, "D^A class");
                o.require(classify(make_D_walk(DKind::B10, n, t, 0, i), t + 1) == WalkClass{Tag::Hat, 0}, "D^B class");
                cells += 2;
            }
            for (int s = 0; s <= 1; ++s)
                for (int i = 1; i <= i_max(n, t, s); ++i) {
                    Subset d = make_D_walk(DKind::Ext, n, t, s, i);
                    o.require(classify(d, t) == WalkClass{Tag::Hat, s}, "D_i class at n=" + std::to_string(n));
                    ++cells;
                }
        }
    std::cout << "    D-walk cells=" << cells << "\n";
}

// ---------------------------------------------------------------- 9
bool two_colourable(const graph::Graph& g)
{
    std::vector<int> col(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v]) {
                if (col[w] < 0) {
                    col[w] = 1 - col[v];
                    q.push(w);
                } else if (col[w] == col[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

void graph_facts(Outcome& o)
{
    for (int n = 3; n <= 9; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            auto g = graph::kneser_graph(n, k);
            const std::string at = " K(" + std::to_string(n) + "," + std::to_string(k) + ")";
            o.require(graph::is_connected(g), "disconnected" + at);
            o.require(!graph::is_bipartite(g), "bipartite" + at);
            o.require(!two_colourable(g), "two-colourable" + at);
        }
    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 20; ++rep) {
        const int a = std::uniform_int_distribution<int>(2, 10)(rng), b = std::uniform_int_distribution<int>(2, 10)(rng);
        auto g = graph::random_connected_graph(a, rep % 3 == 0 ? 0.0 : 0.3, rng);
        auto h = graph::random_connected_graph(b, rep % 4 == 0 ? 0.0 : 0.3, rng);
        const bool expect = graph::is_connected(g) && graph::is_connected(h) && (!two_colourable(g) || !two_colourable(h));
        o.require(graph::is_connected(graph::direct_product(g, h)) == expect, "product connectivity, pair " + std::to_string(rep));
    }
}

// ---------------------------------------------------------------- 10
void sequences(Outcome& o)
{
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int t = 1; t <= n; ++t) {
                o.require(BigInt(seq::make_H(n, m, t, 0).size()) == ipow(BigInt(m), n - t), "|H_0| mismatch");
                for (int i = 0; t + 2 * i <= n; ++i) {
                    const Rational expect = Rational(ipow(BigInt(m), n)) *
                                            measure::mu(setfam::make_frankl(n, t, i), measure::WeightParams(n, rat(1, m)));
                    o.require(Rational(long(seq::make_H(n, m, t, i).size())) == expect,
                              "|H_i| mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n));
                }
            }
    for (auto [n, m, t] : std::vector<std::array<int, 3>>{{2, 2, 1}, {2, 3, 1}, {3, 2, 1}}) {
        auto r = seq::verify_seq_theorem(n, m, t);
        const Rational expect = Rational(ipow(ipow(BigInt(m), n - t), 2));
        o.require(r.exhaustive, "seq search not exhaustive");
        o.require(r.max_product == expect, "seq max " + str(r.max_product) + " at (" + std::to_string(n) + "," +
                                               std::to_string(m) + "," + std::to_string(t) + ")");
    }
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> kCriteria{
    {"scalar constants", scalar_constants},
    {"finite case check", finite_check},
    {"walk-count oracle", walk_oracle},
    {"measure oracle", measure_oracle},
    {"uniform t=1 search", uniform_t1},
    {"weighted search", weighted},
    {"lemma harness", lemma_harness},
    {"constructions", constructions},
    {"graph facts", graph_facts},
    {"sequence suite", sequences},
};

bool run(int c)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        kCriteria[c - 1].second(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c << " (" << kCriteria[c - 1].first << "): " << (o.pass ? "PASS" : "FAIL") << " ["
              << seconds_since(t0) << " s]\n"
              << o.log.str() << std::flush;
    return o.pass;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> which;
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
        const int c = std::atoi(argv[2]);
        if (c < 1 || c > static_cast<int>(kCriteria.size())) {
            std::cerr << "criterion must be 1.." << kCriteria.size() << "\n";
            return 64;
        }
        which.push_back(c);
    } else if (argc == 1) {
        for (int c = 1; c <= static_cast<int>(kCriteria.size()); ++c) which.push_back(c);
    } else {
        std::cerr << "usage: acceptance [--criterion N]\n";
        return 64;
    }
    bool all = true;
    for (int c : which) all = run(c) && all;
    return all ? 0 : 1;
}
