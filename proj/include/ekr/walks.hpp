#pragma once

// A subset F of [n] read as an n-step lattice walk: step j is up iff j is in F.
// After j steps the walk sits on the line y = x + d_j with d_j = 2|F ∩ [j]| - j.

#include "ekr/setfam.hpp"

#include <set>
#include <variant>

namespace ekr::walks {

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Point reached after the first j steps of F.
inline LatticePoint position(const Subset& f, int j)
{
    int up = f.count_upto(j);
    return {j - up, up};
}

/// d_1..d_n (index 0 holds d_0 = 0).
inline std::vector<int> heights(const Subset& f)
{
    std::vector<int> d(f.ground() + 1, 0);
    for (int j = 1; j <= f.ground(); ++j) d[j] = d[j - 1] + (f.contains(j) ? 1 : -1);
    return d;
}

inline int max_height(const Subset& f)
{
    int h = 0, best = 0;
    for (int j = 1; j <= f.ground(); ++j) {
        h += f.contains(j) ? 1 : -1;
        best = std::max(best, h);
    }
    return best;
}

inline void check_line(int u)
{
    if (u < 1) throw std::invalid_argument("line offset u must be at least 1");
}

inline bool hits_line(const Subset& f, int u)
{
    check_line(u);
    return max_height(f) >= u;
}

/// Lattice points of y = x+u visited before the walk first goes above that line.
inline int hit_count(const Subset& f, int u)
{
    check_line(u);
    int h = 0, count = 0;
    for (int j = 1; j <= f.ground(); ++j) {
        h += f.contains(j) ? 1 : -1;
        if (h > u) break;
        if (h == u) ++count;
    }
    return count;
}

inline int lambda(const Subset& f) { return max_height(f); }

inline int lambda(const Family& f)
{
    if (f.empty()) throw std::invalid_argument("λ undefined for the empty family");
    int best = f.ground();
    for (Mask m : f.masks()) best = std::min(best, max_height(Subset(f.ground(), m)));
    return best;
}

enum class Tag { Tilde, Hat, DoubleHat, Miss };

inline const char* tag_name(Tag t)
{
    switch (t) {
    case Tag::Tilde: return "Tilde";
    case Tag::Hat: return "Hat";
    case Tag::DoubleHat: return "DoubleHat";
    case Tag::Miss: return "Miss";
    }
    return "?";
}

struct WalkClass {
    Tag tag = Tag::Miss;
    std::optional<int> s_index; // first touch at (s, u+s)
    friend bool operator==(const WalkClass&, const WalkClass&) = default;
};

inline WalkClass classify(const Subset& f, int u)
{
    check_line(u);
    int h = 0, touches = 0, first = -1;
    for (int j = 1; j <= f.ground(); ++j) {
        h += f.contains(j) ? 1 : -1;
        if (h > u) return {Tag::Tilde, std::nullopt};
        if (h == u && touches++ == 0) first = j;
    }
    if (touches == 0) return {Tag::Miss, std::nullopt};
    return {touches == 1 ? Tag::Hat : Tag::DoubleHat, (first - u) / 2};
}

/// Members of f with the given tag at line u.
inline Family part(const Family& f, int u, Tag tag)
{
    std::vector<Mask> out;
    for (Mask m : f.masks())
        if (classify(Subset(f.ground(), m), u).tag == tag) out.push_back(m);
    return Family(f.ground(), std::move(out), f.uniform_k());
}

struct StructureIndices {
    int s = 0;
    int s_prime = 0;
};

struct StructureViolation {
    std::string reason;
    std::vector<Subset> witnesses;
};

using StructureOutcome = std::variant<StructureIndices, StructureViolation>;

/// The unique (s, s') with hats and double hats of A inside F_s^u and of B inside F_{s'}^v,
/// or a witness that no such pair exists.
inline StructureOutcome structure_indices(const Family& a, const Family& b, int u, int v)
{
    require_same_ground(a, b);
    std::vector<std::string> unmet;
    if (u < 1) unmet.push_back("u >= 1");
    if (v < 1) unmet.push_back("v >= 1");
    if ((u + v) % 2 != 0) unmet.push_back("u+v even");
    const int t = (u + v) / 2;
    if (a.empty() || b.empty()) {
        unmet.push_back("A and B nonempty");
    } else {
        if (lambda(a) != u) unmet.push_back("u = λ(A)");
        if (lambda(b) != v) unmet.push_back("v = λ(B)");
    }
    if (!setfam::is_shifted(a)) unmet.push_back("A shifted");
    if (!setfam::is_shifted(b)) unmet.push_back("B shifted");
    if (t >= 1 && !setfam::is_cross_t_intersecting(a, b, t)) unmet.push_back("A,B cross t-intersecting with t=(u+v)/2");
    if (u >= 1 && v >= 1) {
        if (part(a, u, Tag::Hat).empty()) unmet.push_back("Â nonempty");
        if (part(b, v, Tag::Hat).empty()) unmet.push_back("B̂ nonempty");
    }
    if (!unmet.empty()) {
        std::string msg = "structure_indices preconditions unmet:";
        for (const auto& s : unmet) msg += " [" + s + "]";
        throw std::invalid_argument(msg);
    }

    const int n = a.ground();
    auto hat_indices = [&](const Family& f, int line, std::vector<Subset>& reps) {
        std::map<int, Subset> seen;
        for (Mask m : f.masks()) {
            auto c = classify(Subset(n, m), line);
            if (c.tag == Tag::Hat) seen.emplace(*c.s_index, Subset(n, m));
        }
        for (auto& [s, w] : seen) reps.push_back(w);
        std::set<int> idx;
        for (auto& [s, w] : seen) idx.insert(s);
        return idx;
    };
    std::vector<Subset> ra, rb;
    auto sa = hat_indices(a, u, ra);
    auto sb = hat_indices(b, v, rb);
    if (sa.size() != 1) return StructureViolation{"hats of A touch at several points", ra};
    if (sb.size() != 1) return StructureViolation{"hats of B touch at several points", rb};
    const int s = *sa.begin(), sp = *sb.begin();
    if (2 * (s - sp) != v - u)
        return StructureViolation{"s - s' differs from (v-u)/2", {ra.front(), rb.front()}};
    // double hats must pass through the same touching point
    auto in_frankl = [&](Mask m, int line, int idx) {
        return std::popcount(m & range_mask(1, line + 2 * idx)) >= line + idx;
    };
    for (Mask m : a.masks())
        if (classify(Subset(n, m), u).tag == Tag::DoubleHat && !in_frankl(m, u, s))
            return StructureViolation{"a double hat of A avoids F_s^u", {Subset(n, m)}};
    for (Mask m : b.masks())
        if (classify(Subset(n, m), v).tag == Tag::DoubleHat && !in_frankl(m, v, sp))
            return StructureViolation{"a double hat of B avoids F_s'^v", {Subset(n, m)}};
    return StructureIndices{s, sp};
}

inline void check_hit_range(int x0, int y0, int c)
{
    if (!(0 < c && c < y0 && y0 < x0 + c))
        throw std::invalid_argument("closed walk counts need 0 < c < y0 < x0 + c");
}

/// Walks from (0,0) to (x0,y0) that hit y = x + c.
inline BigInt count_hit(int x0, int y0, int c)
{
    check_hit_range(x0, y0, c);
    return binom(x0 + y0, y0 - c);
}

inline BigInt count_miss(int x0, int y0, int c)
{
    check_hit_range(x0, y0, c);
    return binom(x0 + y0, x0) - binom(x0 + y0, y0 - c);
}

inline constexpr int kMaxEnumeratedSteps = 24;

/// Exhaustive count of walks to (x0,y0) satisfying pred.
template <class Pred>
std::uint64_t enumerate_walks(int x0, int y0, Pred&& pred)
{
    if (x0 < 0 || y0 < 0 || x0 + y0 < 1) throw std::invalid_argument("walk endpoint must be a nonzero lattice point");
    if (x0 + y0 > kMaxEnumeratedSteps) throw std::invalid_argument("walk enumeration budget exceeded (x0+y0 > 24)");
    const int n = x0 + y0;
    std::uint64_t count = 0;
    for (Mask m : setfam::layer(n, y0))
        if (pred(Subset(n, m))) ++count;
    return count;
}

/// Mirrors the steps between the first and second touch of y = x + c.
inline Subset reflect_after_first_touch(const Subset& f, int c)
{
    check_line(c);
    int h = 0, first = -1, second = -1;
    for (int j = 1; j <= f.ground(); ++j) {
        h += f.contains(j) ? 1 : -1;
        if (h > c) throw std::invalid_argument("reflection domain: walk hits y = x + c + 1");
        if (h == c) {
            if (first < 0) first = j;
            else if (second < 0) second = j;
        }
    }
    if (second < 0) throw std::invalid_argument("reflection domain: walk touches y = x + c fewer than twice");
    const Mask seg = range_mask(first + 1, second);
    return Subset(f.ground(), (f.bits() & ~seg) | (~f.bits() & seg));
}

enum class DKind { A10, B10, Ext };

inline int i_max(int n, int t, int s) { return n - t - 2 * s - 1; }
inline int i_kmax(int k, int t, int s) { return k - t - s; }

/// D^A_i, D^B_i (the (s,s') = (1,0) walks) and D_i; with k, first_k of each.
/// s only matters for Ext.
inline Subset make_D_walk(DKind kind, int n, int t, int s, int i, std::optional<int> k = std::nullopt)
{
    check_ground(n);
    setfam::check_t(t);
    Mask head = 0;
    int tail_from = 0; // tail elements tail_from + 2l, l >= 1
    int lo = 1, hi = 0;
    switch (kind) {
    case DKind::A10:
        if (t < 2) throw std::invalid_argument("D^A needs t >= 2");
        head = range_mask(1, t - 2) | range_mask(t, t + 1);
        tail_from = t + 1 + i;
        hi = k ? n - 2 * *k + t - 1 : n - t - 2;
        break;
    case DKind::B10:
        head = range_mask(1, t + 1);
        tail_from = t + 1 + i;
        hi = k ? n - 2 * *k + t + 1 : n - t - 2;
        break;
    case DKind::Ext:
        if (s < 0) throw std::invalid_argument("D_i needs s >= 0");
        head = range_mask(1, t - 1) | range_mask(t + s, t + s) | range_mask(t + 2 * s, t + 2 * s);
        tail_from = t + 2 * s + i;
        hi = k ? i_kmax(*k, t, s) : i_max(n, t, s);
        break;
    }
    if (i < lo || i > hi)
        throw std::invalid_argument("D-walk index " + std::to_string(i) + " outside [1," + std::to_string(hi) + "]");
    if (head & ~full_mask(n)) throw std::invalid_argument("D-walk head does not fit in [n]");
    Mask m = head;
    for (int x = tail_from + 2; x <= n; x += 2) m |= Mask{1} << (x - 1);
    Subset d(n, m);
    return k ? setfam::first_k(d, *k) : d;
}

} // namespace ekr::walks
