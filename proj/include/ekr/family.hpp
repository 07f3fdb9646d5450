#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ekr {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Mask of [lo, hi] (1-based, empty when lo > hi).
inline Mask range_mask(int lo, int hi)
{
    if (lo < 1) lo = 1;
    if (hi < lo) return 0;
    return full_mask(hi) & ~full_mask(lo - 1);
}

inline void check_ground(int n)
{
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("ground set size must be in [1,64]");
}

/// A subset of [n]; element x sits at bit x-1. Also read as a lattice walk.
class Subset {
public:
    Subset() = default;
    Subset(int n, Mask bits) : n_(n), bits_(bits)
    {
        check_ground(n);
        if (bits & ~full_mask(n)) throw std::invalid_argument("subset has elements outside [n]");
    }
    Subset(int n, std::initializer_list<int> elems) : Subset(n, std::vector<int>(elems)) {}
    Subset(int n, const std::vector<int>& elems) : n_(n)
    {
        check_ground(n);
        for (int x : elems) {
            if (x < 1 || x > n) throw std::invalid_argument("element outside [n]");
            bits_ |= Mask{1} << (x - 1);
        }
    }
    /// [lo, hi] as a subset of [n].
    static Subset interval(int n, int lo, int hi)
    {
        check_ground(n);
        return Subset(n, range_mask(lo, std::min(hi, n)));
    }

    int ground() const { return n_; }
    Mask bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int x) const { return x >= 1 && x <= n_ && ((bits_ >> (x - 1)) & 1); }

    /// (A)_i, the i-th smallest element.
    int element(int i) const
    {
        if (i < 1 || i > size()) throw std::out_of_range("element index outside [1,|A|]");
        Mask b = bits_;
        for (int j = 1; j < i; ++j) b &= b - 1;
        return std::countr_zero(b) + 1;
    }

    std::vector<int> elements() const
    {
        std::vector<int> out;
        for (Mask b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    Subset with(int x) const { return Subset(n_, bits_ | (Mask{1} << (x - 1))); }
    Subset without(int x) const { return Subset(n_, bits_ & ~(Mask{1} << (x - 1))); }
    Subset complement() const { return Subset(n_, ~bits_ & full_mask(n_)); }
    /// |A ∩ [j]|
    int count_upto(int j) const { return std::popcount(bits_ & full_mask(std::max(0, j))); }

    friend Subset operator&(const Subset& a, const Subset& b) { return Subset(a.n_, a.bits_ & b.bits_); }
    friend Subset operator|(const Subset& a, const Subset& b) { return Subset(a.n_, a.bits_ | b.bits_); }
    friend Subset operator-(const Subset& a, const Subset& b) { return Subset(a.n_, a.bits_ & ~b.bits_); }
    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset& a, const Subset& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

    std::string str() const
    {
        std::string s = "{";
        bool first = true;
        for (int x : elements()) {
            if (!first) s += ',';
            s += std::to_string(x);
            first = false;
        }
        return s + "}";
    }

private:
    int n_ = 1;
    Mask bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Subset& s) { return os << s.str(); }

/// Sorted duplicate-free collection of subsets of a common ground set.
class Family {
public:
    Family() = default;
    explicit Family(int n, std::optional<int> uniform_k = std::nullopt) : n_(n), k_(uniform_k)
    {
        check_ground(n);
        if (k_ && (*k_ < 0 || *k_ > n)) throw std::invalid_argument("uniform size outside [0,n]");
    }
    Family(int n, std::vector<Mask> sets, std::optional<int> uniform_k = std::nullopt)
        : Family(n, uniform_k)
    {
        sets_ = std::move(sets);
        normalize();
    }
    Family(int n, std::initializer_list<std::initializer_list<int>> sets,
           std::optional<int> uniform_k = std::nullopt)
        : Family(n, uniform_k)
    {
        for (auto s : sets) sets_.push_back(Subset(n, std::vector<int>(s)).bits());
        normalize();
    }
    static Family from_subsets(int n, const std::vector<Subset>& sets,
                               std::optional<int> uniform_k = std::nullopt)
    {
        std::vector<Mask> m;
        m.reserve(sets.size());
        for (const auto& s : sets) {
            if (s.ground() != n) throw std::invalid_argument("ground-set mismatch");
            m.push_back(s.bits());
        }
        return Family(n, std::move(m), uniform_k);
    }

    int ground() const { return n_; }
    std::optional<int> uniform_k() const { return k_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    const std::vector<Mask>& masks() const { return sets_; }
    Subset operator[](std::size_t i) const { return Subset(n_, sets_[i]); }

    bool contains(Mask m) const { return std::binary_search(sets_.begin(), sets_.end(), m); }
    bool contains(const Subset& s) const { return s.ground() == n_ && contains(s.bits()); }

    std::vector<Subset> subsets() const
    {
        std::vector<Subset> out;
        out.reserve(sets_.size());
        for (Mask m : sets_) out.emplace_back(n_, m);
        return out;
    }

    /// Same sets with the uniformity tag recomputed (kept only when all sizes agree).
    Family with_uniform_tag() const
    {
        std::optional<int> k;
        if (!sets_.empty()) {
            k = std::popcount(sets_.front());
            for (Mask m : sets_)
                if (std::popcount(m) != *k) k.reset();
        }
        return Family(n_, sets_, k);
    }

    /// Equality ignores the uniformity tag.
    friend bool operator==(const Family& a, const Family& b)
    {
        return a.n_ == b.n_ && a.sets_ == b.sets_;
    }

private:
    void normalize()
    {
        std::sort(sets_.begin(), sets_.end());
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
        const Mask outside = ~full_mask(n_);
        for (Mask m : sets_) {
            if (m & outside) throw std::invalid_argument("family member outside [n]");
            if (k_ && std::popcount(m) != *k_)
                throw std::invalid_argument("member size differs from uniform k");
        }
    }

    int n_ = 1;
    std::optional<int> k_;
    std::vector<Mask> sets_;
};

inline void require_same_ground(const Family& a, const Family& b)
{
    if (a.ground() != b.ground()) throw std::invalid_argument("ground-set mismatch");
}

/// Header "n=<n> k=<k|*>" then one member per line, elements comma separated.
/// The empty set is written as an empty line.
inline void write_family(std::ostream& os, const Family& f)
{
    os << "n=" << f.ground() << " k=";
    if (f.uniform_k()) os << *f.uniform_k();
    else os << '*';
    os << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto el = f[i].elements();
        for (std::size_t j = 0; j < el.size(); ++j) os << (j ? "," : "") << el[j];
        os << '\n';
    }
}

inline std::string family_to_string(const Family& f)
{
    std::ostringstream os;
    write_family(os, f);
    return os.str();
}

inline Family read_family(std::istream& is)
{
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("family: missing header");
    int n = 0;
    std::string kfield;
    {
        std::istringstream hs(header);
        std::string a, b;
        hs >> a >> b;
        if (a.rfind("n=", 0) != 0 || b.rfind("k=", 0) != 0)
            throw std::runtime_error("family: bad header '" + header + "'");
        n = std::stoi(a.substr(2));
        kfield = b.substr(2);
    }
    std::optional<int> k;
    if (kfield != "*") k = std::stoi(kfield);
    std::vector<Mask> sets;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<int> el;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ','))
            if (!tok.empty()) el.push_back(std::stoi(tok));
        sets.push_back(Subset(n, el).bits());
    }
    return Family(n, std::move(sets), k);
}

inline Family family_from_string(const std::string& s)
{
    std::istringstream is(s);
    return read_family(is);
}

} // namespace ekr
