#pragma once

// Kostka numbers of skew shapes by direct enumeration of semistandard
// fillings. Used as an equivalence test independent of the h-expansion.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shapes.hpp"

namespace skewclass {

inline constexpr int default_kostka_guard = 10;

// All partitions of n, decreasing lexicographic order: (n), (n−1,1), ….
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

struct KostkaVector {
    int degree = 0;
    // Every ν ⊢ degree appears, zeros included.
    std::map<Partition, std::int64_t, std::greater<>> entries;

    std::int64_t at(const Partition& nu) const
    {
        auto it = entries.find(nu);
        return it == entries.end() ? 0 : it->second;
    }
    friend bool operator==(const KostkaVector&, const KostkaVector&) = default;
};

namespace detail {

// Counts fillings of `shape` with content `nu`: rows weakly increase left to
// right, columns strictly increase top to bottom. Cells are visited in
// row-major order so that the left and upper neighbours are already set.
inline std::int64_t count_ssyt(const SkewShape& shape, const Partition& nu)
{
    const auto cells = shape.cells();
    if (static_cast<int>(cells.size()) != nu.size())
        return 0;
    if (cells.empty())
        return 1;

    const std::size_t rows = shape.rows();
    const int width = shape.lambda().at(0);
    std::vector<int> grid(rows * static_cast<std::size_t>(width), 0);
    auto at = [&](int r, int c) -> int& { return grid[static_cast<std::size_t>(r) * width + c]; };

    std::vector<int> remaining = nu.parts();
    const int letters = static_cast<int>(remaining.size());
    std::int64_t count = 0;

    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        int low = 1;
        if (shape.contains(r, c - 1))
            low = std::max(low, at(r, c - 1));
        if (shape.contains(r - 1, c))
            low = std::max(low, at(r - 1, c) + 1);
        for (int v = low; v <= letters; ++v) {
            if (remaining[v - 1] == 0)
                continue;
            --remaining[v - 1];
            at(r, c) = v;
            place(idx + 1);
            ++remaining[v - 1];
        }
        at(r, c) = 0;
    };
    place(0);
    return count;
}

} // namespace detail

inline KostkaVector kostka_vector(const SkewShape& shape, int guard = default_kostka_guard)
{
    const int n = shape.cell_count();
    if (n > guard)
        throw std::length_error("skew shape has " + std::to_string(n) +
                                " cells, above the Kostka enumeration guard of " +
                                std::to_string(guard));
    KostkaVector out;
    out.degree = n;
    for (const auto& nu : partitions_of(n))
        out.entries.emplace(nu, detail::count_ssyt(shape, nu));
    return out;
}

inline bool equivalent_by_kostka(const BoxDottedComposition& d, const BoxDottedComposition& e,
                                 int guard = default_kostka_guard)
{
    if (d.m() != e.m())
        throw std::invalid_argument("equivalence needs diagrams with the same m");
    if (d.size() != e.size())
        return false;
    return kostka_vector(to_skew_shape(d), guard) == kostka_vector(to_skew_shape(e), guard);
}

} // namespace skewclass
