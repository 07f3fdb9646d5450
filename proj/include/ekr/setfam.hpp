#pragma once

#include "ekr/family.hpp"
#include "ekr/rational.hpp"

#include <array>
#include <map>
#include <numeric>

namespace ekr {

struct ShiftIndex {
    int i = 1;
    int j = 2;
    friend bool operator==(const ShiftIndex&, const ShiftIndex&) = default;
};

/// Relabeling of [n]: perm[x-1] is the image of x.
using Permutation = std::vector<int>;

namespace setfam {

/// All k-subsets of [n] in increasing numeric order.
inline std::vector<Mask> layer(int n, int k)
{
    check_ground(n);
    std::vector<Mask> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {0};
    Mask m = full_mask(k);
    const Mask last = full_mask(n) ^ full_mask(n - k);
    while (true) {
        out.push_back(m);
        if (m == last) break;
        Mask c = m & (~m + 1);
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

inline constexpr int kMaxPowerSetGround = 24;

inline std::vector<Mask> power_set(int n)
{
    check_ground(n);
    if (n > kMaxPowerSetGround) throw std::invalid_argument("power set budget exceeded (n > 24)");
    std::vector<Mask> out(std::size_t{1} << n);
    std::iota(out.begin(), out.end(), Mask{0});
    return out;
}

inline Family uniform_layer(int n, int k) { return Family(n, layer(n, k), k); }
inline Family all_subsets(int n) { return Family(n, power_set(n)); }

inline void check_t(int t)
{
    if (t < 1) throw std::invalid_argument("t must be at least 1");
}

inline bool is_cross_t_intersecting(const Family& a, const Family& b, int t)
{
    require_same_ground(a, b);
    check_t(t);
    for (Mask x : a.masks())
        for (Mask y : b.masks())
            if (std::popcount(x & y) < t) return false;
    return true;
}

inline bool is_t_intersecting(const Family& f, int t) { return is_cross_t_intersecting(f, f, t); }

inline void check_shift_index(const Family& f, ShiftIndex s)
{
    if (s.i < 1 || s.i >= s.j || s.j > f.ground())
        throw std::invalid_argument("shift index must satisfy 1 <= i < j <= n");
}

/// s_ij: replace j by i in a member unless the image is already present.
inline Family shift(const Family& f, ShiftIndex s)
{
    check_shift_index(f, s);
    const Mask bi = Mask{1} << (s.i - 1), bj = Mask{1} << (s.j - 1);
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask m : f.masks()) {
        if ((m & bj) && !(m & bi)) {
            Mask img = (m & ~bj) | bi;
            out.push_back(f.contains(img) ? m : img);
        } else {
            out.push_back(m);
        }
    }
    return Family(f.ground(), std::move(out), f.uniform_k());
}

inline bool is_shifted(const Family& f)
{
    for (Mask m : f.masks()) {
        for (Mask b = m; b; b &= b - 1) {
            int j = std::countr_zero(b);
            // every i < j outside m must give an image inside f
            for (Mask holes = ~m & full_mask(j); holes; holes &= holes - 1) {
                int i = std::countr_zero(holes);
                if (!f.contains((m & ~(Mask{1} << j)) | (Mask{1} << i))) return false;
            }
        }
    }
    return true;
}

/// Sum over members of the sum of their elements; strictly drops under a nontrivial shift.
inline long potential(const Family& f)
{
    long s = 0;
    for (Mask m : f.masks())
        for (Mask b = m; b; b &= b - 1) s += std::countr_zero(b) + 1;
    return s;
}

struct ShiftFixpoint {
    Family a, b;
    std::vector<ShiftIndex> trace;
};

/// Applies s_ij to both families in lexicographic sweeps until a full pass changes nothing.
inline ShiftFixpoint shift_pair_to_fixpoint(Family a, Family b)
{
    require_same_ground(a, b);
    ShiftFixpoint r;
    const int n = a.ground();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                Family na = shift(a, {i, j}), nb = shift(b, {i, j});
                if (na == a && nb == b) continue;
                a = std::move(na);
                b = std::move(nb);
                r.trace.push_back({i, j});
                changed = true;
            }
        }
    }
    r.a = std::move(a);
    r.b = std::move(b);
    return r;
}

inline Family upward_closure(const Family& f)
{
    const int n = f.ground();
    if (n > kMaxPowerSetGround) throw std::invalid_argument("upward closure budget exceeded (n > 24)");
    std::vector<char> in(std::size_t{1} << n, 0);
    for (Mask m : f.masks()) in[m] = 1;
    for (int b = 0; b < n; ++b) {
        const Mask bit = Mask{1} << b;
        for (Mask m = 0; m < in.size(); ++m)
            if (in[m] && !(m & bit)) in[m | bit] = 1;
    }
    std::vector<Mask> out;
    for (Mask m = 0; m < in.size(); ++m)
        if (in[m]) out.push_back(m);
    return Family(n, std::move(out));
}

inline bool is_inclusion_maximal(const Family& f)
{
    const Mask all = full_mask(f.ground());
    for (Mask m : f.masks())
        for (Mask holes = ~m & all; holes; holes &= holes - 1)
            if (!f.contains(m | (holes & (~holes + 1)))) return false;
    return true;
}

/// A -> B: |A| <= |B| and (A)_i >= (B)_i for all i <= |A|.
inline bool shifts_to(const Subset& a, const Subset& b)
{
    if (a.ground() != b.ground()) throw std::invalid_argument("ground-set mismatch");
    if (a.size() > b.size()) return false;
    for (int i = 1; i <= a.size(); ++i)
        if (a.element(i) < b.element(i)) return false;
    return true;
}

/// [(A)_t - 1] ∪ ([n] \ A)
inline Subset dual_t(const Subset& a, int t)
{
    check_t(t);
    if (a.size() < t) throw std::invalid_argument("t-th element undefined");
    const int n = a.ground();
    return Subset(n, range_mask(1, a.element(t) - 1) | (~a.bits() & full_mask(n)));
}

inline Subset first_k(const Subset& a, int k)
{
    if (k < 0 || a.size() < k) throw std::invalid_argument("first_k: fewer than k elements");
    if (k == 0) return Subset(a.ground(), 0);
    return Subset(a.ground(), a.bits() & full_mask(a.element(k)));
}

inline Subset dual_t_k(const Subset& a, int t, int k)
{
    if (a.size() != k || k < t) throw std::invalid_argument("dual_t_k needs |A| = k >= t");
    Subset d = dual_t(a, t);
    if (d.size() < k) throw std::invalid_argument("dual_t_k: dual has fewer than k elements");
    return first_k(d, k);
}

/// F_i^t(n,k) = { F in C([n],k) : |F ∩ [t+2i]| >= t+i }
inline Family make_frankl_uniform(int n, int k, int t, int i)
{
    check_ground(n);
    check_t(t);
    if (k < t || k > n) throw std::invalid_argument("F_i^t(n,k) needs t <= k <= n");
    if (i < 0 || i > k - t) throw std::invalid_argument("F_i^t(n,k) needs 0 <= i <= k-t");
    if (t + 2 * i > n) throw std::invalid_argument("F_i^t(n,k) needs t+2i <= n");
    const Mask head = range_mask(1, t + 2 * i);
    std::vector<Mask> out;
    for (Mask m : layer(n, k))
        if (std::popcount(m & head) >= t + i) out.push_back(m);
    return Family(n, std::move(out), k);
}

/// F_i^t(n) = { F ⊆ [n] : |F ∩ [t+2i]| >= t+i }
inline Family make_frankl(int n, int t, int i)
{
    check_ground(n);
    check_t(t);
    if (i < 0 || t + 2 * i > n) throw std::invalid_argument("F_i^t(n) needs i >= 0 and t+2i <= n");
    const Mask head = range_mask(1, t + 2 * i);
    std::vector<Mask> out;
    for (Mask m : power_set(n))
        if (std::popcount(m & head) >= t + i) out.push_back(m);
    return Family(n, std::move(out));
}

/// F_[u] = [u] ∪ { u+2i in [n] : i >= 1 }
inline Subset make_F_bracket(int n, int u)
{
    check_ground(n);
    if (u < 0) throw std::invalid_argument("F_[u] needs u >= 0");
    Mask m = range_mask(1, std::min(u, n));
    for (int x = u + 2; x <= n; x += 2) m |= Mask{1} << (x - 1);
    return Subset(n, m);
}

inline Subset make_F_bracket_k(int n, int k, int u) { return first_k(make_F_bracket(n, u), k); }

inline Family apply_permutation(const Family& f, const Permutation& perm)
{
    const int n = f.ground();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size differs from n");
    std::vector<Mask> out;
    out.reserve(f.size());
    for (Mask m : f.masks()) {
        Mask img = 0;
        for (Mask b = m; b; b &= b - 1) img |= Mask{1} << (perm[std::countr_zero(b)] - 1);
        out.push_back(img);
    }
    return Family(n, std::move(out), f.uniform_k());
}

inline constexpr int kMaxIsoGround = 12;

namespace detail {

/// Joint isomorphism search: one permutation carrying every ys[r] onto xs[r].
class IsoSearch {
public:
    IsoSearch(const std::vector<Family>& xs, const std::vector<Family>& ys) : xs_(xs), ys_(ys)
    {
        n_ = xs.front().ground();
        for (std::size_t r = 0; r < xs.size(); ++r) {
            sigx_.push_back(signatures(xs[r]));
            sigy_.push_back(signatures(ys[r]));
        }
        // assign frequent elements first: they constrain most
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<long> weight(n_, 0);
        for (const auto& y : ys)
            for (Mask m : y.masks())
                for (Mask b = m; b; b &= b - 1) ++weight[std::countr_zero(b)];
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return weight[a] > weight[b]; });
        image_.assign(n_, -1);
        used_.assign(n_, false);
    }

    std::optional<Permutation> run()
    {
        if (!dfs(0)) return std::nullopt;
        Permutation p(n_);
        for (int x = 0; x < n_; ++x) p[x] = image_[x] + 1;
        return p;
    }

private:
    // per element: counts of members of each size containing it, for every family
    using Sig = std::vector<int>;
    std::vector<Sig> signatures(const Family& f) const
    {
        std::vector<Sig> s(n_, Sig(n_ + 1, 0));
        for (Mask m : f.masks()) {
            int sz = std::popcount(m);
            for (Mask b = m; b; b &= b - 1) ++s[std::countr_zero(b)][sz];
        }
        return s;
    }

    bool compatible(int x, int y) const
    {
        for (std::size_t r = 0; r < xs_.size(); ++r)
            if (sigy_[r][x] != sigx_[r][y]) return false;
        return true;
    }

    bool projections_match(Mask dom, Mask cod) const
    {
        for (std::size_t r = 0; r < xs_.size(); ++r) {
            std::vector<Mask> py, px;
            py.reserve(ys_[r].size());
            px.reserve(xs_[r].size());
            for (Mask m : ys_[r].masks()) {
                Mask img = 0;
                for (Mask b = m & dom; b; b &= b - 1) img |= Mask{1} << image_[std::countr_zero(b)];
                py.push_back(img);
            }
            for (Mask m : xs_[r].masks()) px.push_back(m & cod);
            std::sort(py.begin(), py.end());
            std::sort(px.begin(), px.end());
            if (py != px) return false;
        }
        return true;
    }

    bool dfs(int depth)
    {
        if (depth == n_) return true;
        const int x = order_[depth];
        for (int y = 0; y < n_; ++y) {
            if (used_[y] || !compatible(x, y)) continue;
            image_[x] = y;
            used_[y] = true;
            dom_ |= Mask{1} << x;
            cod_ |= Mask{1} << y;
            if (projections_match(dom_, cod_) && dfs(depth + 1)) return true;
            dom_ &= ~(Mask{1} << x);
            cod_ &= ~(Mask{1} << y);
            used_[y] = false;
            image_[x] = -1;
        }
        return false;
    }

    const std::vector<Family>& xs_;
    const std::vector<Family>& ys_;
    int n_ = 0;
    std::vector<std::vector<Sig>> sigx_, sigy_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<bool> used_;
    Mask dom_ = 0, cod_ = 0;
};

} // namespace detail

/// A permutation f with xs[r] = f(ys[r]) for every r simultaneously, if one exists.
inline std::optional<Permutation> are_isomorphic_jointly(const std::vector<Family>& xs,
                                                         const std::vector<Family>& ys)
{
    if (xs.empty() || xs.size() != ys.size()) throw std::invalid_argument("joint isomorphism needs matched lists");
    const int n = xs.front().ground();
    for (std::size_t r = 0; r < xs.size(); ++r) {
        if (xs[r].ground() != n || ys[r].ground() != n) throw std::invalid_argument("ground-set mismatch");
    }
    if (n > kMaxIsoGround) throw std::invalid_argument("iso search budget exceeded");
    for (std::size_t r = 0; r < xs.size(); ++r) {
        if (xs[r].size() != ys[r].size()) return std::nullopt;
        std::vector<int> hx(n + 1, 0), hy(n + 1, 0);
        for (Mask m : xs[r].masks()) ++hx[std::popcount(m)];
        for (Mask m : ys[r].masks()) ++hy[std::popcount(m)];
        if (hx != hy) return std::nullopt;
    }
    return detail::IsoSearch(xs, ys).run();
}

/// A relabeling carrying b onto a.
inline std::optional<Permutation> are_isomorphic(const Family& a, const Family& b)
{
    return are_isomorphic_jointly({a}, {b});
}

/// D(A): every subset (k-subset when k is given) meeting each member of A in >= t elements.
inline Family maximal_cross_partner(const Family& a, int t, std::optional<int> k = std::nullopt)
{
    check_t(t);
    const int n = a.ground();
    std::vector<Mask> cand = k ? layer(n, *k) : power_set(n);
    std::vector<Mask> out;
    for (Mask c : cand) {
        bool ok = true;
        for (Mask m : a.masks())
            if (std::popcount(m & c) < t) {
                ok = false;
                break;
            }
        if (ok) out.push_back(c);
    }
    return Family(n, std::move(out), k);
}

struct StabilityCounterexamples {
    Family uniform; // (F_0^t(n,k) \ T) ∪ H
    Family weight;  // (F_0^t(n) \ {[t]}) ∪ { [n]\{i} : i <= t }
};

inline Family stability_uniform_family(int n, int k, int t)
{
    check_t(t);
    if (k < t + 1) throw std::invalid_argument("stability construction needs k >= t+1");
    if (n < k + 1) throw std::invalid_argument("stability construction needs n >= k+1");
    const Mask mid = range_mask(t + 1, k + 1);
    std::vector<Mask> out;
    const Family star = make_frankl_uniform(n, k, t, 0);
    for (Mask m : star.masks())
        if (m & mid) out.push_back(m);
    for (int i = 1; i <= t; ++i) out.push_back(range_mask(1, k + 1) & ~(Mask{1} << (i - 1)));
    return Family(n, std::move(out), k);
}

inline Family stability_weight_family(int n, int t)
{
    check_t(t);
    if (n < t + 2) throw std::invalid_argument("stability construction needs n >= t+2");
    const Mask head = range_mask(1, t);
    std::vector<Mask> out;
    const Family star = make_frankl(n, t, 0);
    for (Mask m : star.masks())
        if (m != head) out.push_back(m);
    for (int i = 1; i <= t; ++i) out.push_back(full_mask(n) & ~(Mask{1} << (i - 1)));
    return Family(n, std::move(out));
}

inline StabilityCounterexamples make_stability_counterexamples(int n, int k, int t)
{
    return {stability_uniform_family(n, k, t), stability_weight_family(n, t)};
}

/// A t-set T contained in every member, i.e. f sits inside the copy of F_0^t labelled by T.
inline std::optional<Subset> find_star_copy_containing(const Family& f, int t)
{
    check_t(t);
    const int n = f.ground();
    for (Mask tm : layer(n, t)) {
        bool all = true;
        for (Mask m : f.masks())
            if ((m & tm) != tm) {
                all = false;
                break;
            }
        if (all) return Subset(n, tm);
    }
    return std::nullopt;
}

/// Preimages of f under s_ij: members in `fixed` are forced; each slot offers {Y+i, Y+j}.
struct ShiftPreimages {
    std::vector<Mask> fixed;
    std::vector<std::array<Mask, 2>> slots;
    bool exists = true; // false when f itself is not s_ij-stable
};

inline ShiftPreimages shift_preimages(const Family& f, ShiftIndex s)
{
    check_shift_index(f, s);
    const Mask bi = Mask{1} << (s.i - 1), bj = Mask{1} << (s.j - 1);
    ShiftPreimages r;
    for (Mask m : f.masks()) {
        const bool hi = m & bi, hj = m & bj;
        if (hi == hj) {
            r.fixed.push_back(m);
        } else if (hi) {
            Mask partner = (m & ~bi) | bj;
            if (f.contains(partner)) r.fixed.push_back(m);
            else r.slots.push_back({m, partner});
        } else {
            Mask partner = (m & ~bj) | bi;
            if (f.contains(partner)) r.fixed.push_back(m);
            else r.exists = false;
        }
    }
    return r;
}

} // namespace setfam
} // namespace ekr
