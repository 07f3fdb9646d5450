#pragma once

// Families of integer sequences in [m]^n under Hamming agreement.

#include "ekr/search.hpp"

#include <istream>
#include <sstream>

namespace ekr::seq {

inline constexpr long kMaxSequences = 1000000;

class Sequence {
public:
    Sequence() = default;
    Sequence(int m, std::vector<int> values) : m_(m), v_(std::move(values))
    {
        if (m_ < 2) throw std::invalid_argument("alphabet size m must be >= 2");
        if (v_.empty() || static_cast<int>(v_.size()) > kMaxGround) throw std::invalid_argument("sequence length outside [1,64]");
        for (int x : v_)
            if (x < 1 || x > m_) throw std::invalid_argument("sequence value outside [1,m]");
    }
    int m() const { return m_; }
    int n() const { return static_cast<int>(v_.size()); }
    int operator[](int i) const { return v_.at(i - 1); } // 1-based
    const std::vector<int>& values() const { return v_; }

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence& a, const Sequence& b) { return a.v_ <=> b.v_; }

private:
    int m_ = 2;
    std::vector<int> v_;
};

/// Base-m index of a sequence, first coordinate most significant.
inline long encode(const Sequence& s)
{
    long r = 0;
    for (int x : s.values()) r = r * s.m() + (x - 1);
    return r;
}

inline Sequence decode(int m, int n, long idx)
{
    std::vector<int> v(n);
    for (int i = n - 1; i >= 0; --i) {
        v[i] = static_cast<int>(idx % m) + 1;
        idx /= m;
    }
    return Sequence(m, std::move(v));
}

inline long sequence_count(int m, int n)
{
    long c = 1;
    for (int i = 0; i < n; ++i) {
        c *= m;
        if (c > kMaxSequences) throw std::invalid_argument("m^n exceeds the enumeration budget of 10^6");
    }
    return c;
}

class SeqFamily {
public:
    SeqFamily(int m, int n) : m_(m), n_(n)
    {
        if (m < 2 || n < 1 || n > kMaxGround) throw std::invalid_argument("SeqFamily needs m >= 2 and 1 <= n <= 64");
    }
    SeqFamily(int m, int n, std::vector<Sequence> members) : SeqFamily(m, n)
    {
        for (const auto& s : members)
            if (s.m() != m || s.n() != n) throw std::invalid_argument("sequence shape differs from family");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
    }
    int m() const { return m_; }
    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Sequence>& members() const { return members_; }
    bool contains(const Sequence& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

    friend bool operator==(const SeqFamily&, const SeqFamily&) = default;

private:
    int m_, n_;
    std::vector<Sequence> members_;
};

inline SeqFamily all_sequences(int m, int n)
{
    const long c = sequence_count(m, n);
    std::vector<Sequence> out;
    out.reserve(c);
    for (long i = 0; i < c; ++i) out.push_back(decode(m, n, i));
    return SeqFamily(m, n, std::move(out));
}

/// {i : a_i = 1}
inline Subset sigma(const Sequence& s)
{
    Mask b = 0;
    for (int i = 0; i < s.n(); ++i)
        if (s.values()[i] == 1) b |= Mask{1} << i;
    return Subset(s.n(), b);
}

inline Family sigma(const SeqFamily& f)
{
    std::vector<Mask> out;
    for (const auto& s : f.members()) out.push_back(sigma(s).bits());
    return Family(f.n(), std::move(out));
}

inline int agreement(const Sequence& a, const Sequence& b)
{
    int c = 0;
    for (int i = 0; i < a.n(); ++i) c += a.values()[i] == b.values()[i];
    return c;
}

inline bool seq_cross_t_intersecting(const SeqFamily& a, const SeqFamily& b, int t)
{
    setfam::check_t(t);
    if (a.m() != b.m() || a.n() != b.n()) throw std::invalid_argument("sequence families differ in (m,n)");
    for (const auto& x : a.members())
        for (const auto& y : b.members())
            if (agreement(x, y) < t) return false;
    return true;
}

/// H_i^t(n) = { a in [m]^n : σ(a) in F_i^t(n) }
inline SeqFamily make_H(int n, int m, int t, int i)
{
    setfam::check_t(t);
    if (i < 0 || t + 2 * i > n) throw std::invalid_argument("H_i^t(n) needs i >= 0 and t+2i <= n");
    const long c = sequence_count(m, n);
    const Mask head = range_mask(1, t + 2 * i);
    std::vector<Sequence> out;
    for (long idx = 0; idx < c; ++idx) {
        Sequence s = decode(m, n, idx);
        if (std::popcount(sigma(s).bits() & head) >= t + i) out.push_back(std::move(s));
    }
    return SeqFamily(m, n, std::move(out));
}

/// S_j^c: a with a_j = c becomes a with a_j = 1 unless that sequence is already present.
inline SeqFamily shift_S(const SeqFamily& f, int j, int c)
{
    if (j < 1 || j > f.n() || c < 1 || c > f.m()) throw std::invalid_argument("S_j^c needs 1 <= j <= n, 1 <= c <= m");
    std::vector<Sequence> out;
    for (const auto& s : f.members()) {
        if (s[j] != c) {
            out.push_back(s);
            continue;
        }
        auto v = s.values();
        v[j - 1] = 1;
        Sequence moved(f.m(), std::move(v));
        out.push_back(f.contains(moved) ? s : moved);
    }
    return SeqFamily(f.m(), f.n(), std::move(out));
}

inline bool is_S_shifted(const SeqFamily& f)
{
    for (int j = 1; j <= f.n(); ++j)
        for (int c = 2; c <= f.m(); ++c)
            if (!(shift_S(f, j, c) == f)) return false;
    return true;
}

/// Applies every S_j^c to both families until neither changes.
inline std::pair<SeqFamily, SeqFamily> shift_S_pair_to_fixpoint(SeqFamily a, SeqFamily b)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 1; j <= a.n(); ++j)
            for (int c = 2; c <= a.m(); ++c) {
                SeqFamily na = shift_S(a, j, c), nb = shift_S(b, j, c);
                if (na == a && nb == b) continue;
                a = std::move(na);
                b = std::move(nb);
                changed = true;
            }
    }
    return {std::move(a), std::move(b)};
}

/// Σ_{x in σ(A)} (m-1)^(n-|x|)
inline BigInt bridge_bound(const SeqFamily& f)
{
    BigInt total = 0;
    const Family images = sigma(f);
    for (Mask x : images.masks()) total += ipow(BigInt(f.m() - 1), f.n() - std::popcount(x));
    return total;
}

/// r = floor((t-1)/(m-2)); undefined for m = 2.
inline int ak_radius(int m, int t)
{
    setfam::check_t(t);
    if (m == 2) throw std::invalid_argument("r = floor((t-1)/(m-2)) is undefined for m = 2");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    return (t - 1) / (m - 2);
}

// ---- isomorphism under coordinate permutations and per-coordinate symbol permutations

inline constexpr long kMaxSeqGroup = 2000000;

namespace detail {

inline long factorial(int x)
{
    long r = 1;
    for (int i = 2; i <= x; ++i) r *= i;
    return r;
}

inline bool same_multiset_invariants(const std::vector<SeqFamily>& xs, const std::vector<SeqFamily>& ys)
{
    for (std::size_t r = 0; r < xs.size(); ++r) {
        if (xs[r].size() != ys[r].size()) return false;
        // multiset over coordinates of the sorted symbol-frequency vector
        auto profile = [](const SeqFamily& f) {
            std::vector<std::vector<int>> p(f.n(), std::vector<int>(f.m(), 0));
            for (const auto& s : f.members())
                for (int i = 0; i < f.n(); ++i) ++p[i][s.values()[i] - 1];
            for (auto& v : p) std::sort(v.begin(), v.end());
            std::sort(p.begin(), p.end());
            return p;
        };
        if (profile(xs[r]) != profile(ys[r])) return false;
    }
    return true;
}

} // namespace detail

/// True iff one group element carries ys[r] onto xs[r] for every r.
inline bool are_isomorphic_jointly(const std::vector<SeqFamily>& xs, const std::vector<SeqFamily>& ys)
{
    if (xs.empty() || xs.size() != ys.size()) throw std::invalid_argument("joint isomorphism needs matched lists");
    const int m = xs.front().m(), n = xs.front().n();
    for (std::size_t r = 0; r < xs.size(); ++r)
        if (xs[r].m() != m || ys[r].m() != m || xs[r].n() != n || ys[r].n() != n)
            throw std::invalid_argument("sequence families differ in (m,n)");
    long group = detail::factorial(n);
    for (int i = 0; i < n; ++i) {
        group *= detail::factorial(m);
        if (group > kMaxSeqGroup) throw std::invalid_argument("iso search budget exceeded");
    }
    if (!detail::same_multiset_invariants(xs, ys)) return false;

    std::vector<int> coord(n);
    std::iota(coord.begin(), coord.end(), 0);
    std::vector<int> base(m);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> all_sym;
    do all_sym.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));

    std::vector<int> pick(n, 0);
    do {
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            bool ok = true;
            for (std::size_t r = 0; r < xs.size() && ok; ++r)
                for (const auto& s : ys[r].members()) {
                    std::vector<int> v(n);
                    for (int i = 0; i < n; ++i) v[coord[i]] = all_sym[pick[i]][s.values()[i] - 1] + 1;
                    if (!xs[r].contains(Sequence(m, std::move(v)))) {
                        ok = false;
                        break;
                    }
                }
            if (ok) return true;
            int i = 0;
            while (i < n && ++pick[i] == static_cast<int>(all_sym.size())) pick[i++] = 0;
            if (i == n) break;
        }
    } while (std::next_permutation(coord.begin(), coord.end()));
    return false;
}

inline bool are_isomorphic(const SeqFamily& a, const SeqFamily& b) { return are_isomorphic_jointly({a}, {b}); }

// ---- extremal search

struct SeqSearchResult {
    Rational max_product;
    Rational bound; // (m^(n-t))^2
    std::vector<std::pair<SeqFamily, SeqFamily>> witnesses;
    std::vector<search::Construction> witness_classes; // F0 ~ H_0, F1 ~ H_1
    std::optional<search::Construction> matched_construction;
    bool exhaustive = false;
    std::uint64_t nodes = 0;
    std::size_t raw_witnesses = 0;
    double elapsed_ms = 0;
};

/// Exact max of |A||B| over cross t-intersecting A, B ⊆ [m]^n, with witness classes.
inline SeqSearchResult verify_seq_theorem(int n, int m, int t, const search::SearchBudget& budget = {})
{
    setfam::check_t(t);
    if (t > n) throw std::invalid_argument("t must not exceed n");
    auto start = std::chrono::steady_clock::now();
    const long count = sequence_count(m, n);
    if (count > 64) throw std::invalid_argument("budget exceeded: m^n > 64");
    if (count > budget.max_family_bits) throw std::invalid_argument("budget exceeded: m^n > max_family_bits");
    std::vector<Sequence> items;
    for (long i = 0; i < count; ++i) items.push_back(decode(m, n, i));

    search::detail::Universe u;
    u.compat.assign(count, 0);
    u.weight.assign(count, 1);
    for (long x = 0; x < count; ++x)
        for (long y = 0; y < count; ++y)
            if (agreement(items[x], items[y]) >= t) u.compat[x] |= std::uint64_t{1} << y;
    u.order.resize(count);
    std::iota(u.order.begin(), u.order.end(), 0);
    auto er = search::detail::Engine(u, budget.time_limit).run(budget.workers);

    SeqSearchResult res;
    res.max_product = Rational(search::detail::to_bigint(er.best));
    res.bound = Rational(ipow(ipow(BigInt(m), n - t), 2));
    res.exhaustive = er.complete;
    res.nodes = er.nodes;
    res.raw_witnesses = er.argmax.size();
    auto fam = [&](std::uint64_t set) {
        std::vector<Sequence> out;
        for (; set; set &= set - 1) out.push_back(items[std::countr_zero(set)]);
        return SeqFamily(m, n, std::move(out));
    };
    for (std::uint64_t a : er.argmax) {
        SeqFamily fa = fam(a), fb = fam(u.partner(a));
        bool seen = false;
        for (const auto& [wa, wb] : res.witnesses)
            if (are_isomorphic_jointly({wa, wb}, {fa, fb})) {
                seen = true;
                break;
            }
        if (!seen) res.witnesses.emplace_back(std::move(fa), std::move(fb));
    }
    const SeqFamily h0 = make_H(n, m, t, 0);
    std::optional<SeqFamily> h1;
    if (t + 2 <= n) h1 = make_H(n, m, t, 1);
    for (const auto& [a, b] : res.witnesses) {
        search::Construction c = search::Construction::Other;
        if (a == b && are_isomorphic(a, h0)) c = search::Construction::F0;
        else if (a == b && h1 && are_isomorphic(a, *h1)) c = search::Construction::F1;
        res.witness_classes.push_back(c);
    }
    if (!res.witness_classes.empty()) {
        auto c = res.witness_classes.front();
        for (auto x : res.witness_classes)
            if (x != c) c = search::Construction::Other;
        res.matched_construction = c;
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

// ---- serialization: header "m=<m> n=<n>", then one comma-separated sequence per line

inline void write_seq_family(std::ostream& os, const SeqFamily& f)
{
    os << "m=" << f.m() << " n=" << f.n() << '\n';
    for (const auto& s : f.members()) {
        for (int i = 0; i < s.n(); ++i) os << (i ? "," : "") << s.values()[i];
        os << '\n';
    }
}

inline std::string seq_family_to_string(const SeqFamily& f)
{
    std::ostringstream os;
    write_seq_family(os, f);
    return os.str();
}

inline SeqFamily read_seq_family(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("missing sequence family header");
    int m = 0, n = 0;
    if (std::sscanf(line.c_str(), "m=%d n=%d", &m, &n) != 2) throw std::invalid_argument("bad header: " + line);
    std::vector<Sequence> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<int> v;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("sequence length differs from n: " + line);
        out.emplace_back(m, std::move(v));
    }
    return SeqFamily(m, n, std::move(out));
}

inline SeqFamily seq_family_from_string(const std::string& s)
{
    std::istringstream is(s);
    return read_seq_family(is);
}

} // namespace ekr::seq
