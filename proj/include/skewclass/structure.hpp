#pragma once

// Invariants of thickened ribbons with a single box-dot D = α ⊡ β: the sign
// function h_D on {1,…,n−m}, element types, the integer equivalence classes
// and their A/B/C/D taxonomy, and canonical representatives.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shapes.hpp"

namespace skewclass {

class OneDotDiagram {
public:
    OneDotDiagram(Composition alpha, Composition beta, int m)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), m_(m)
    {
        if (m_ < 2)
            throw std::invalid_argument("block width m must be at least 2");
        if (alpha_.empty() || beta_.empty())
            throw std::invalid_argument("both ribbons of a one-dot diagram must be nonempty");
        if (alpha_.back() < m_ || beta_.front() < m_)
            throw std::invalid_argument("box-dot neighbours must be at least m");
    }

    explicit OneDotDiagram(const BoxDottedComposition& d)
        : OneDotDiagram(segment(d, 0), segment(d, 1), d.m())
    {
    }

    const Composition& alpha() const noexcept { return alpha_; }
    const Composition& beta() const noexcept { return beta_; }
    int m() const noexcept { return m_; }
    int size_alpha() const { return alpha_.size(); }
    int size_beta() const { return beta_.size(); }
    int n() const { return size_alpha() + size_beta(); }

    BoxDottedComposition diagram() const { return BoxDottedComposition({alpha_, beta_}, m_); }
    OneDotDiagram antipodal() const { return OneDotDiagram(reverse(beta_), reverse(alpha_), m_); }

    auto operator<=>(const OneDotDiagram&) const = default;

private:
    static const Composition& segment(const BoxDottedComposition& d, std::size_t i)
    {
        if (d.dot_count() != 1)
            throw std::invalid_argument("expected exactly one box-dot, found " +
                                        std::to_string(d.dot_count()));
        return d.segments()[i];
    }

    Composition alpha_;
    Composition beta_;
    int m_;
};

inline std::string format_diagram(const OneDotDiagram& d)
{
    return format_diagram(d.diagram());
}

inline OneDotDiagram parse_one_dot(std::string_view text, int m)
{
    auto d = parse_diagram(text, m);
    if (d.dot_count() != 1)
        throw std::invalid_argument("expected exactly one box-dot in '" + std::string(text) + "'");
    return OneDotDiagram(d);
}

// r = gcd(|α|−m+1, |β|−m+1).
inline int r_value(const OneDotDiagram& d)
{
    return std::gcd(d.size_alpha() - d.m() + 1, d.size_beta() - d.m() + 1);
}

enum class Sign { plus, minus };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

class SignTable {
public:
    SignTable(int n, int m, int size_alpha, int size_beta, std::vector<Sign> signs)
        : n_(n), m_(m), size_alpha_(size_alpha), size_beta_(size_beta), signs_(std::move(signs))
    {
        if (static_cast<int>(signs_.size()) != n_ - m_)
            throw std::invalid_argument("sign table must cover {1,...,n-m}");
    }

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int size_alpha() const noexcept { return size_alpha_; }
    int size_beta() const noexcept { return size_beta_; }
    int domain_max() const noexcept { return n_ - m_; }

    Sign sign(int x) const
    {
        if (x < 1 || x > domain_max())
            throw std::out_of_range("sign argument " + std::to_string(x) + " outside {1,...,n-m}");
        return signs_[static_cast<std::size_t>(x - 1)];
    }
    bool plus(int x) const { return sign(x) == Sign::plus; }

    // x ↦ n−m+1−x
    int mirror(int x) const { return n_ - m_ + 1 - x; }

    friend bool operator==(const SignTable&, const SignTable&) = default;

private:
    int n_, m_, size_alpha_, size_beta_;
    std::vector<Sign> signs_;
};

// h_D(x) = + exactly on the cut set of the glued composition
// α_1 … (α_k + β_1 − m + 1) … β_l, i.e. SET(α) ∪ (|α|−m+1 + SET(β)).
inline SignTable sign_function(const OneDotDiagram& d)
{
    const int n = d.n(), m = d.m();
    std::vector<Sign> signs(static_cast<std::size_t>(n - m), Sign::minus);
    for (int x : set_of(d.alpha()))
        signs[static_cast<std::size_t>(x - 1)] = Sign::plus;
    const int shift = d.size_alpha() - m + 1;
    for (int x : set_of(d.beta()))
        signs[static_cast<std::size_t>(shift + x - 1)] = Sign::plus;
    return SignTable(n, m, d.size_alpha(), d.size_beta(), std::move(signs));
}

// The literal definition: + iff (x, n−m+1−x; 1) coarsens (D). Exponential.
inline SignTable sign_function_by_coarsenings(const OneDotDiagram& d)
{
    const int n = d.n(), m = d.m();
    std::vector<Sign> signs(static_cast<std::size_t>(n - m), Sign::minus);
    for (const auto& [s, k] : coarsenings(d.diagram())) {
        if (k != 1 || s.length() != 2)
            continue;
        const int x = s.underlying()[0];
        if (x >= 1 && x <= n - m)
            signs[static_cast<std::size_t>(x - 1)] = Sign::plus;
    }
    return SignTable(n, m, d.size_alpha(), d.size_beta(), std::move(signs));
}

// Number of + among h_D(x), h_D(n−m+1−x).
inline int element_type(const SignTable& t, int x)
{
    return (t.plus(x) ? 1 : 0) + (t.plus(t.mirror(x)) ? 1 : 0);
}

struct IntClassPartition {
    int r = 1;
    int domain_max = 0;
    // Blocks sorted internally and by minimum element.
    std::vector<std::vector<int>> blocks;
    // block_index[x−1] is the block holding x.
    std::vector<std::size_t> block_index;

    const std::vector<int>& block_of(int x) const
    {
        return blocks.at(block_index.at(static_cast<std::size_t>(x - 1)));
    }
    int representative(int x) const { return block_of(x).front(); }
};

// Transitive closure on {1,…,n−m} of
//   i ~ n−m+1−i,  i ~ |α|−i (i ≤ |α|−1),  i ~ |α|+n−2m+2−i (i ≥ |α|−m+2).
inline IntClassPartition int_classes(const OneDotDiagram& d)
{
    const int n = d.n(), m = d.m(), a = d.size_alpha();
    const int top = n - m;
    std::vector<int> parent(static_cast<std::size_t>(top + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int x, int y) {
        if (x < 1 || y < 1 || x > top || y > top)
            return;
        x = find(x);
        y = find(y);
        if (x != y)
            parent[std::max(x, y)] = std::min(x, y);
    };
    for (int i = 1; i <= top; ++i) {
        unite(i, top + 1 - i);
        if (i <= a - 1)
            unite(i, a - i);
        if (i >= a - m + 2)
            unite(i, a + n - 2 * m + 2 - i);
    }

    IntClassPartition out;
    out.r = r_value(d);
    out.domain_max = top;
    out.block_index.assign(static_cast<std::size_t>(top), 0);
    std::vector<int> root_to_block(static_cast<std::size_t>(top + 1), -1);
    for (int x = 1; x <= top; ++x) {
        int root = find(x);
        if (root_to_block[root] < 0) {
            root_to_block[root] = static_cast<int>(out.blocks.size());
            out.blocks.emplace_back();
        }
        out.blocks[root_to_block[root]].push_back(x);
        out.block_index[static_cast<std::size_t>(x - 1)] =
            static_cast<std::size_t>(root_to_block[root]);
    }
    return out;
}

enum class ClassLabel { A, B, C, D };

inline char label_char(ClassLabel l)
{
    switch (l) {
    case ClassLabel::A: return 'A';
    case ClassLabel::B: return 'B';
    case ClassLabel::C: return 'C';
    case ClassLabel::D: return 'D';
    }
    return '?';
}

struct ClassTaxonomy {
    enum class Case { equal, unequal };
    Case size_case = Case::unequal;
    // (min element of class, label), ascending by min element.
    std::vector<std::pair<int, ClassLabel>> labels;

    std::optional<ClassLabel> label_of_representative(int rep) const
    {
        for (const auto& [min, l] : labels)
            if (min == rep)
                return l;
        return std::nullopt;
    }
    bool has(ClassLabel l) const
    {
        return std::any_of(labels.begin(), labels.end(),
                           [l](const auto& e) { return e.second == l; });
    }
    friend bool operator==(const ClassTaxonomy&, const ClassTaxonomy&) = default;
};

namespace detail {

struct TypeCounts {
    int type0 = 0, type1 = 0, type2 = 0;
};

inline TypeCounts count_types(const SignTable& t, const std::vector<int>& block)
{
    TypeCounts c;
    for (int x : block) {
        switch (element_type(t, x)) {
        case 0: ++c.type0; break;
        case 1: ++c.type1; break;
        default: ++c.type2; break;
        }
    }
    return c;
}

// Rules (1)–(4) for the unequal case on a class avoiding the special handling.
inline ClassLabel generic_unequal_label(const SignTable& t, const std::vector<int>& block, int r)
{
    const auto c = count_types(t, block);
    const int size = static_cast<int>(block.size());
    const int limit = t.domain_max() - r;
    bool periodic = true;
    for (int j : block)
        if (j >= 1 && j <= limit && t.sign(j) != t.sign(j + r))
            periodic = false;

    if (c.type1 == size && periodic)
        return ClassLabel::A;
    if (c.type1 > 0 && !periodic)
        return ClassLabel::B;
    if (c.type0 == size || c.type2 == size)
        return ClassLabel::C;
    if (c.type1 == 0 && c.type0 > 0 && c.type2 > 0)
        return ClassLabel::D;
    // Mixed types with a periodic sign cannot occur away from [m−1].
    throw std::logic_error("class escapes the four-way taxonomy");
}

} // namespace detail

// Unequal case |α| ≠ |β|. Every class is labelled; the class containing m−1
// follows the dedicated rules unless m−1 has type 0.
inline ClassTaxonomy classify_unequal(const OneDotDiagram& d)
{
    if (d.size_alpha() == d.size_beta())
        throw std::invalid_argument("classify_unequal needs |alpha| != |beta|");
    const auto t = sign_function(d);
    const auto classes = int_classes(d);
    const int r = classes.r, m = d.m(), n = d.n();
    const int a = d.size_alpha(), b = d.size_beta();
    const int top = n - m;

    // (i): h(j) = h(m−1) for j ≡ m−1 (mod r), j ≠ |α|.
    // (ii): h(j) = h(n−2m+2) for j ≡ 0 (mod r), j ≠ |α|−m+1.
    auto condition_i = [&] {
        for (int j = 1; j <= top; ++j)
            if (j != a && (j - (m - 1)) % r == 0 && t.sign(j) != t.sign(m - 1))
                return false;
        return true;
    };
    auto condition_ii = [&] {
        for (int j = 1; j <= top; ++j)
            if (j != a - m + 1 && j % r == 0 && t.sign(j) != t.sign(n - 2 * m + 2))
                return false;
        return true;
    };

    ClassTaxonomy out;
    out.size_case = ClassTaxonomy::Case::unequal;
    for (const auto& block : classes.blocks) {
        const bool holds_m1 = std::find(block.begin(), block.end(), m - 1) != block.end();
        const int type_m1 = holds_m1 ? element_type(t, m - 1) : 0;
        ClassLabel label;
        if (!holds_m1 || type_m1 == 0) {
            label = detail::generic_unequal_label(t, block, r);
        } else if (type_m1 == 1) {
            label = condition_i() && condition_ii() ? ClassLabel::A : ClassLabel::B;
        } else {
            const std::set<int> exceptional{a - m + 1, a, b - m + 1, b};
            bool stray_type1 = false;
            for (int x : block)
                if (element_type(t, x) == 1 && !exceptional.count(x))
                    stray_type1 = true;
            if (stray_type1)
                label = ClassLabel::B;
            else
                label = condition_i() && condition_ii() ? ClassLabel::C : ClassLabel::D;
        }
        out.labels.emplace_back(block.front(), label);
    }
    return out;
}

// Equal case |α| = |β| over classes [i], i = min[i] ≤ |α|/2.
inline ClassTaxonomy classify_equal(const OneDotDiagram& d)
{
    if (d.size_alpha() != d.size_beta())
        throw std::invalid_argument("classify_equal needs |alpha| == |beta|");
    const auto t = sign_function(d);
    const auto classes = int_classes(d);
    const int a = d.size_alpha();

    ClassTaxonomy out;
    out.size_case = ClassTaxonomy::Case::equal;
    for (const auto& block : classes.blocks) {
        const int i = block.front();
        if (2 * i > a)
            throw std::logic_error("class minimum exceeds |alpha|/2");
        const auto c = detail::count_types(t, block);
        const int size = static_cast<int>(block.size());
        ClassLabel label;
        if (c.type1 == size)
            label = t.sign(i) != t.sign(a - i) ? ClassLabel::A : ClassLabel::B;
        else if (c.type1 > 0)
            label = ClassLabel::B;
        else
            label = ClassLabel::C;
        out.labels.emplace_back(i, label);
    }
    return out;
}

inline ClassTaxonomy classify(const OneDotDiagram& d)
{
    return d.size_alpha() == d.size_beta() ? classify_equal(d) : classify_unequal(d);
}

// Unequal case: |α| < |β|. Equal case: + at the smallest type-1 element of
// the first nonempty of B, A; vacuously true when A = B = ∅ (D = D*).
inline bool is_canonical(const OneDotDiagram& d)
{
    if (d.size_alpha() != d.size_beta())
        return d.size_alpha() < d.size_beta();

    const auto t = sign_function(d);
    const auto classes = int_classes(d);
    const auto tax = classify_equal(d);
    auto first_in = [&](ClassLabel wanted) -> std::optional<int> {
        for (int x = 1; x <= t.domain_max(); ++x) {
            if (element_type(t, x) != 1)
                continue;
            if (tax.label_of_representative(classes.representative(x)) == wanted)
                return x;
        }
        return std::nullopt;
    };
    if (auto k = first_in(ClassLabel::B))
        return t.plus(*k);
    if (auto k = first_in(ClassLabel::A))
        return t.plus(*k);
    return true;
}

} // namespace skewclass
