#pragma once

// Compositions, partitions, box-dotted compositions (m-regular thickened
// ribbons) and the skew shapes they embed into.
//
// Row convention: a composition lists row lengths from the bottom row up.
// Within a ribbon consecutive rows share exactly one column; across a
// box-dot they share exactly m columns.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewclass {

class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("composition parts must be positive");
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int front() const { return parts_.at(0); }
    int back() const { return parts_.at(parts_.size() - 1); }
    int operator[](std::size_t i) const { return parts_[i]; }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

// Weakly decreasing sequence of positive integers; no trailing zeros.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    // Sorts arbitrary positive parts into a partition.
    static Partition sorted(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Zero beyond the last part.
    int at(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const
    {
        std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++out[j];
        return Partition(std::move(out));
    }

    // Lexicographic on parts, so (3,1) < (3,2) < (4).
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// An m-regular thickened ribbon D_1 ⊡ D_2 ⊡ ... ⊡ D_k.
class BoxDottedComposition {
public:
    BoxDottedComposition(std::vector<Composition> segments, int m)
        : segments_(std::move(segments)), m_(m)
    {
        if (m_ < 2)
            throw std::invalid_argument("block width m must be at least 2");
        if (segments_.empty())
            throw std::invalid_argument("box-dotted composition needs at least one segment");
        for (const auto& s : segments_)
            if (s.empty())
                throw std::invalid_argument("box-dotted composition segments must be nonempty");
        for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
            if (segments_[i].back() < m_ || segments_[i + 1].front() < m_)
                throw std::invalid_argument("box-dot neighbours must be at least m");
        // A single row between two box-dots shares 2m − len columns with both
        // neighbours; two or more would form a 3 × 2 block.
        for (std::size_t i = 1; i + 1 < segments_.size(); ++i)
            if (segments_[i].length() == 1 && segments_[i].front() < 2 * m_ - 1)
                throw std::invalid_argument("a row between two box-dots needs at least 2m-1 boxes");
    }

    // Builds from flat parts and a per-adjacency box-dot flag.
    static BoxDottedComposition from_parts(const std::vector<int>& parts,
                                           const std::vector<bool>& dots, int m)
    {
        if (parts.empty() || dots.size() + 1 != parts.size())
            throw std::invalid_argument("dots must mark every adjacency");
        std::vector<Composition> segments;
        std::vector<int> current{parts[0]};
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (dots[i - 1]) {
                segments.emplace_back(std::move(current));
                current.clear();
            }
            current.push_back(parts[i]);
        }
        segments.emplace_back(std::move(current));
        return BoxDottedComposition(std::move(segments), m);
    }

    const std::vector<Composition>& segments() const noexcept { return segments_; }
    int m() const noexcept { return m_; }
    std::size_t dot_count() const noexcept { return segments_.size() - 1; }

    // α(D): the underlying composition with box-dots removed.
    Composition underlying() const
    {
        std::vector<int> out;
        for (const auto& s : segments_)
            out.insert(out.end(), s.parts().begin(), s.parts().end());
        return Composition(std::move(out));
    }

    // dots()[i] is true when a box-dot separates parts i and i+1 of α(D).
    std::vector<bool> dots() const
    {
        std::vector<bool> out;
        for (std::size_t s = 0; s < segments_.size(); ++s) {
            for (std::size_t j = 0; j + 1 < segments_[s].length(); ++j)
                out.push_back(false);
            if (s + 1 < segments_.size())
                out.push_back(true);
        }
        return out;
    }

    // Number of boxes; also the degree of s_D.
    int size() const
    {
        int n = 0;
        for (const auto& s : segments_)
            n += s.size();
        return n;
    }
    std::size_t length() const
    {
        std::size_t l = 0;
        for (const auto& s : segments_)
            l += s.length();
        return l;
    }

    auto operator<=>(const BoxDottedComposition&) const = default;

private:
    std::vector<Composition> segments_;
    int m_;
};

// (D;k): a diagram together with k consumed box-dots.
struct CoarsePair {
    BoxDottedComposition diagram;
    int k = 0;

    int size() const { return diagram.size() + k * (diagram.m() - 1); }
    auto operator<=>(const CoarsePair&) const = default;
};

// λ/μ with μ stored unpadded; mu_at pads with zeros.
class SkewShape {
public:
    SkewShape(Partition lambda, Partition mu) : lambda_(std::move(lambda)), mu_(std::move(mu))
    {
        if (mu_.length() > lambda_.length())
            throw std::invalid_argument("skew shape needs mu contained in lambda");
        for (std::size_t i = 0; i < mu_.length(); ++i)
            if (mu_.at(i) > lambda_.at(i))
                throw std::invalid_argument("skew shape needs mu contained in lambda");
    }

    const Partition& lambda() const noexcept { return lambda_; }
    const Partition& mu() const noexcept { return mu_; }
    int mu_at(std::size_t i) const noexcept { return mu_.at(i); }
    std::size_t rows() const noexcept { return lambda_.length(); }
    int cell_count() const { return lambda_.size() - mu_.size(); }

    bool contains(int row, int col) const
    {
        if (row < 0 || static_cast<std::size_t>(row) >= rows())
            return false;
        return col >= mu_at(row) && col < lambda_.at(row);
    }

    // (row from top, column from left), row-major.
    std::vector<std::pair<int, int>> cells() const
    {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = 0; i < rows(); ++i)
            for (int j = mu_at(i); j < lambda_.at(i); ++j)
                out.emplace_back(static_cast<int>(i), j);
        return out;
    }

    auto operator<=>(const SkewShape&) const = default;

private:
    Partition lambda_;
    Partition mu_;
};

// SET(α): the proper partial sums.
inline std::set<int> set_of(const Composition& alpha)
{
    if (alpha.empty())
        throw std::invalid_argument("set_of needs a nonempty composition");
    std::set<int> out;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
        sum += alpha[i];
        out.insert(sum);
    }
    return out;
}

// Comp(S) for S ⊆ {1,…,n−1}.
inline Composition comp_of(const std::set<int>& cuts, int n)
{
    if (n < 1)
        throw std::invalid_argument("comp_of needs n >= 1");
    std::vector<int> parts;
    int prev = 0;
    for (int s : cuts) {
        if (s < 1 || s > n - 1)
            throw std::invalid_argument("cut " + std::to_string(s) + " outside {1,...,n-1}");
        parts.push_back(s - prev);
        prev = s;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

inline Composition reverse(const Composition& alpha)
{
    std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
    return Composition(std::move(parts));
}

inline Partition lambda_of(const Composition& alpha)
{
    return Partition::sorted(alpha.parts());
}

inline Partition lambda_of(const BoxDottedComposition& d)
{
    return lambda_of(d.underlying());
}

// D* = D_k* ⊡ … ⊡ D_1*.
inline BoxDottedComposition antipodal(const BoxDottedComposition& d)
{
    std::vector<Composition> segments;
    for (auto it = d.segments().rbegin(); it != d.segments().rend(); ++it)
        segments.push_back(reverse(*it));
    return BoxDottedComposition(std::move(segments), d.m());
}

// Half-open column interval [left, right) of one row.
struct RowSpan {
    int left;
    int right;
    int length() const { return right - left; }
};

// Row spans from the bottom row up; bottom row starts at column 0.
inline std::vector<RowSpan> row_spans(const BoxDottedComposition& d)
{
    const auto parts = d.underlying().parts();
    const auto dots = d.dots();
    std::vector<RowSpan> rows;
    rows.push_back({0, parts[0]});
    for (std::size_t i = 1; i < parts.size(); ++i) {
        int overlap = dots[i - 1] ? d.m() : 1;
        int left = rows.back().right - overlap;
        rows.push_back({left, left + parts[i]});
    }
    return rows;
}

// Inverse of row_spans: reads a box-dotted composition off bottom-up rows.
// Adjacent rows must overlap in exactly 1 or m columns and shift weakly right.
inline BoxDottedComposition from_row_spans(const std::vector<RowSpan>& rows, int m)
{
    if (rows.empty())
        throw std::invalid_argument("no rows");
    std::vector<int> parts;
    std::vector<bool> dots;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].length() < 1)
            throw std::invalid_argument("empty row");
        parts.push_back(rows[i].length());
        if (i == 0)
            continue;
        const auto& lo = rows[i - 1];
        const auto& hi = rows[i];
        if (hi.left < lo.left || hi.right < lo.right)
            throw std::invalid_argument("rows do not form a skew shape");
        int overlap = lo.right - hi.left;
        if (overlap == 1)
            dots.push_back(false);
        else if (overlap == m)
            dots.push_back(true);
        else
            throw std::invalid_argument("row overlap " + std::to_string(overlap) +
                                        " is neither 1 nor m");
    }
    return BoxDottedComposition::from_parts(parts, dots, m);
}

inline SkewShape to_skew_shape(const BoxDottedComposition& d)
{
    auto rows = row_spans(d);
    std::vector<int> lambda, mu;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        lambda.push_back(it->right);
        if (it->left > 0)
            mu.push_back(it->left);
    }
    // Nestedness follows from validity of d; Partition and SkewShape recheck it.
    return SkewShape(Partition(std::move(lambda)), Partition(std::move(mu)));
}

inline SkewShape transpose_skew(const SkewShape& s)
{
    return SkewShape(s.lambda().conjugate(), s.mu().conjugate());
}

// Every (S;k) ⪰ (D), one per subset of merged adjacencies, mask order.
inline std::vector<CoarsePair> coarsenings(const BoxDottedComposition& d)
{
    const auto parts = d.underlying().parts();
    const auto dots = d.dots();
    const std::size_t gaps = dots.size();
    if (gaps >= 8 * sizeof(unsigned long) - 1)
        throw std::length_error("too many parts to enumerate coarsenings");
    const int m = d.m();

    std::vector<CoarsePair> out;
    out.reserve(std::size_t{1} << gaps);
    for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
        std::vector<int> merged{parts[0]};
        std::vector<bool> merged_dots;
        int k = 0;
        for (std::size_t i = 0; i < gaps; ++i) {
            if (mask & (1UL << i)) {
                merged.back() += parts[i + 1];
                if (dots[i]) {
                    merged.back() -= m - 1;
                    ++k;
                }
            } else {
                merged.push_back(parts[i + 1]);
                merged_dots.push_back(dots[i]);
            }
        }
        out.push_back({BoxDottedComposition::from_parts(merged, merged_dots, m), k});
    }
    return out;
}

// Text grammar: parts separated by ',', box-dots by '|'; whitespace ignored.
inline BoxDottedComposition parse_diagram(std::string_view text, int m)
{
    std::vector<Composition> segments;
    std::vector<int> current;
    std::string digits;
    bool expecting_part = true;

    auto flush = [&] {
        if (digits.empty())
            throw std::invalid_argument("malformed diagram '" + std::string(text) + "'");
        if (digits.size() > 9)
            throw std::invalid_argument("part too large in '" + std::string(text) + "'");
        current.push_back(std::stoi(digits));
        digits.clear();
    };

    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            continue;
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            expecting_part = false;
        } else if (c == ',' || c == '|') {
            flush();
            expecting_part = true;
            if (c == '|') {
                segments.emplace_back(std::move(current));
                current.clear();
            }
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in diagram");
        }
    }
    if (expecting_part && digits.empty())
        throw std::invalid_argument("malformed diagram '" + std::string(text) + "'");
    flush();
    segments.emplace_back(std::move(current));
    return BoxDottedComposition(std::move(segments), m);
}

inline std::string format_composition(const Composition& c)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < c.length(); ++i)
        os << (i ? "," : "") << c[i];
    return os.str();
}

inline std::string format_diagram(const BoxDottedComposition& d)
{
    std::string out;
    for (std::size_t s = 0; s < d.segments().size(); ++s) {
        if (s)
            out += '|';
        out += format_composition(d.segments()[s]);
    }
    return out;
}

inline std::string format_partition(const Partition& p)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i)
        os << (i ? "," : "") << p.parts()[i];
    os << ')';
    return os.str();
}

inline Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::string digits;
    for (char c : text) {
        if (c >= '0' && c <= '9')
            digits.push_back(c);
        else if (c == ',' || c == ' ' || c == '(' || c == ')') {
            if (!digits.empty()) {
                parts.push_back(std::stoi(digits));
                digits.clear();
            }
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in partition");
        }
    }
    if (!digits.empty())
        parts.push_back(std::stoi(digits));
    return Partition(std::move(parts));
}

} // namespace skewclass
