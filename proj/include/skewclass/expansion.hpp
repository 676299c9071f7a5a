#pragma once

// h-basis expansions of skew Schur functions of thickened ribbons, computed
// three ways: the last-row recursion, the signed sum over coarsenings, and
// the Jacobi–Trudi determinant of the embedded skew shape.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "shapes.hpp"

namespace skewclass {

// Homogeneous polynomial in h_1, h_2, … keyed by the partition of the
// monomial. Zero coefficients are never stored. Iteration is in decreasing
// lexicographic order of partitions.
class HExpansion {
public:
    using Terms = std::map<Partition, Coefficient, std::greater<>>;

    explicit HExpansion(int degree = 0) : degree_(degree) {}

    static HExpansion one() { return monomial(Partition{}, 1); }

    static HExpansion monomial(const Partition& p, Coefficient c)
    {
        HExpansion e(p.size());
        e.add(p, c);
        return e;
    }

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coefficient coeff(const Partition& lam) const
    {
        auto it = terms_.find(lam);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Partition& p, Coefficient c)
    {
        if (c == 0)
            return;
        if (p.size() != degree_)
            throw std::invalid_argument("term " + format_partition(p) +
                                        " breaks homogeneity of degree " +
                                        std::to_string(degree_));
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    HExpansion& operator+=(const HExpansion& other)
    {
        if (other.is_zero())
            return *this;
        if (is_zero())
            degree_ = other.degree_;
        if (other.degree_ != degree_)
            throw std::invalid_argument("adding expansions of different degree");
        for (const auto& [p, c] : other.terms_)
            add(p, c);
        return *this;
    }

    HExpansion& operator-=(const HExpansion& other)
    {
        return *this += other.scaled(-1);
    }

    HExpansion scaled(Coefficient factor) const
    {
        HExpansion out(degree_);
        if (factor == 0)
            return out;
        for (const auto& [p, c] : terms_)
            out.terms_.emplace(p, checked_mul(c, factor));
        return out;
    }

    // Multiplies by h_{parts[0]} h_{parts[1]} …; parts need not be sorted.
    HExpansion times_h(const std::vector<int>& parts) const
    {
        int extra = 0;
        for (int a : parts) {
            if (a < 0)
                return HExpansion(degree_);
            extra += a;
        }
        HExpansion out(degree_ + extra);
        for (const auto& [p, c] : terms_) {
            std::vector<int> merged = p.parts();
            for (int a : parts)
                if (a > 0)
                    merged.push_back(a);
            out.add(Partition::sorted(std::move(merged)), c);
        }
        return out;
    }

    friend HExpansion operator*(const HExpansion& a, const HExpansion& b)
    {
        HExpansion out(a.degree_ + b.degree_);
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_) {
                std::vector<int> merged = pa.parts();
                merged.insert(merged.end(), pb.parts().begin(), pb.parts().end());
                out.add(Partition::sorted(std::move(merged)), checked_mul(ca, cb));
            }
        return out;
    }

    friend HExpansion operator+(HExpansion a, const HExpansion& b) { return a += b; }
    friend HExpansion operator-(HExpansion a, const HExpansion& b) { return a -= b; }

    // Zero polynomials compare equal regardless of nominal degree.
    friend bool operator==(const HExpansion& a, const HExpansion& b)
    {
        if (a.is_zero() || b.is_zero())
            return a.is_zero() && b.is_zero();
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::size_t hash() const noexcept
    {
        std::size_t h = std::hash<int>{}(degree_);
        auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        for (const auto& [p, c] : terms_) {
            for (int part : p.parts())
                mix(std::hash<int>{}(part));
            mix(0xffff);
            mix(std::hash<Coefficient>{}(c));
        }
        return h;
    }

private:
    int degree_;
    Terms terms_;
};

struct HExpansionHash {
    std::size_t operator()(const HExpansion& e) const noexcept { return e.hash(); }
};

inline Coefficient coeff(const HExpansion& e, const Partition& lam)
{
    return e.coeff(lam);
}

// s_D = s_{D_1} h_{α_k} − s_{D_2}, or − h_{m−1} s_{D_2} when α_k follows a
// box-dot. Every intermediate diagram is a prefix of D whose last part may
// have absorbed later parts, so states are memoised on (index, last part).
inline HExpansion expand_recursive(const BoxDottedComposition& d)
{
    const auto parts = d.underlying().parts();
    const auto dots = d.dots();
    const int m = d.m();

    std::map<std::pair<std::size_t, int>, HExpansion> memo;
    std::function<const HExpansion&(std::size_t, int)> prefix =
        [&](std::size_t j, int last) -> const HExpansion& {
        auto key = std::make_pair(j, last);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        HExpansion value;
        if (j == 0) {
            value = HExpansion::one().times_h({last});
        } else {
            const bool dotted = dots[j - 1];
            value = prefix(j - 1, parts[j - 1]).times_h({last});
            int merged = parts[j - 1] + last - (dotted ? m - 1 : 0);
            const HExpansion& shorter = prefix(j - 1, merged);
            value -= dotted ? shorter.times_h({m - 1}) : shorter;
        }
        return memo.emplace(key, std::move(value)).first->second;
    };
    return prefix(parts.size() - 1, parts.back());
}

// Signed sum over all coarsenings: (−1)^{ℓ(D)+ℓ(S)} h_{m−1}^k h_{λ(S)}.
inline HExpansion expand_poset(const BoxDottedComposition& d)
{
    const int m = d.m();
    const std::size_t len = d.length();
    HExpansion out(d.size());
    for (const auto& [s, k] : coarsenings(d)) {
        std::vector<int> parts = s.underlying().parts();
        parts.insert(parts.end(), static_cast<std::size_t>(k), m - 1);
        const Coefficient sign = ((len + s.length()) % 2 == 0) ? 1 : -1;
        out.add(Partition::sorted(std::move(parts)), sign);
    }
    return out;
}

// det(h_{λ_i − μ_j − i + j}) with h_0 = 1 and h_{<0} = 0, expanded row by
// row with minors memoised on the set of used columns.
inline HExpansion expand_determinant(const SkewShape& s)
{
    const std::size_t size = s.rows();
    if (size == 0)
        return HExpansion::one();
    if (size > 24)
        throw std::length_error("determinant too large for subset expansion");
    const auto& lambda = s.lambda();

    auto entry = [&](std::size_t i, std::size_t j) {
        return lambda.at(i) - s.mu_at(j) - static_cast<int>(i) + static_cast<int>(j);
    };

    std::unordered_map<std::uint32_t, HExpansion> level{{0u, HExpansion::one()}};
    for (std::size_t row = 0; row < size; ++row) {
        std::unordered_map<std::uint32_t, HExpansion> next;
        for (const auto& [mask, minor] : level) {
            for (std::size_t col = 0; col < size; ++col) {
                const std::uint32_t bit = 1u << col;
                if (mask & bit)
                    continue;
                const int index = entry(row, col);
                if (index < 0)
                    continue;
                // Inversions contributed: used columns to the right of col.
                const int inversions = __builtin_popcount(mask & ~((bit << 1) - 1));
                HExpansion term = minor.times_h({index});
                if (inversions % 2)
                    term = term.scaled(-1);
                auto [it, inserted] = next.try_emplace(mask | bit, std::move(term));
                if (!inserted)
                    it->second += term;
            }
        }
        level = std::move(next);
    }
    auto it = level.find((1u << size) - 1u);
    if (it == level.end())
        return HExpansion(s.cell_count());
    HExpansion out = it->second;
    if (out.is_zero())
        return HExpansion(s.cell_count());
    return out;
}

inline bool equivalent(const BoxDottedComposition& d, const BoxDottedComposition& e)
{
    if (d.m() != e.m())
        throw std::invalid_argument("equivalence needs diagrams with the same m");
    if (d.size() != e.size())
        return false;
    return expand_recursive(d) == expand_recursive(e);
}

// Sum of h-monomials, e.g. "h3^3*h1 - 2*h5*h3*h1^2"; "0" for zero.
inline std::string format_expansion(const HExpansion& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : e.terms()) {
        const Coefficient mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;

        std::vector<std::string> factors;
        if (mag != 1 || p.empty())
            factors.push_back(std::to_string(mag));
        const auto& parts = p.parts();
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i])
                ++j;
            std::string f = "h" + std::to_string(parts[i]);
            if (j - i > 1)
                f += "^" + std::to_string(j - i);
            factors.push_back(std::move(f));
            i = j;
        }
        for (std::size_t i = 0; i < factors.size(); ++i)
            os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

} // namespace skewclass
