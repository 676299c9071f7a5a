#pragma once

// The composition S ∘_W T of a two-row ribbon S = (p, q) with a ribbon T,
// W a row of m−1 boxes, built cell by cell in the plane; the factorization
// recovered from a periodic sign function; and the orbit
// {S∘T, S∘T*, S*∘T, S*∘T*} of equivalent diagrams.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shapes.hpp"
#include "structure.hpp"

namespace skewclass {

enum class Attachment { horizontal, vertical };

struct RibbonType {
    Attachment bottom;
    Attachment top;
    friend bool operator==(const RibbonType&, const RibbonType&) = default;
};

inline std::string format_ribbon_type(const RibbonType& t)
{
    std::string out = "W";
    out += t.bottom == Attachment::horizontal ? "->" : "^";
    out += "O";
    out += t.top == Attachment::horizontal ? "->" : "^";
    out += "W";
    return out;
}

// How the bottom and top copies of W sit on T: a first (last) part ≥ m
// leaves W inside the bottom (top) row, a part equal to m−1 is W itself.
// Undefined when an end row is shorter than m−1 or T is no larger than W.
inline std::optional<RibbonType> ribbon_type(const Composition& t, int m)
{
    if (t.empty() || t.size() < m)
        return std::nullopt;
    if (t.front() < m - 1 || t.back() < m - 1)
        return std::nullopt;
    return RibbonType{t.front() >= m ? Attachment::horizontal : Attachment::vertical,
                      t.back() >= m ? Attachment::horizontal : Attachment::vertical};
}

namespace detail {

struct Cell {
    int row;  // upward
    int col;  // rightward
    auto operator<=>(const Cell&) const = default;
};

inline Cell operator+(Cell a, Cell b) { return {a.row + b.row, a.col + b.col}; }

inline std::set<Cell> ribbon_cells(const Composition& t)
{
    std::set<Cell> cells;
    int left = 0;
    for (std::size_t i = 0; i < t.length(); ++i) {
        for (int c = 0; c < t[i]; ++c)
            cells.insert({static_cast<int>(i), left + c});
        left += t[i] - 1;
    }
    return cells;
}

inline BoxDottedComposition cells_to_diagram(const std::set<Cell>& cells, int m)
{
    std::map<int, std::vector<int>> rows;
    for (const auto& c : cells)
        rows[c.row].push_back(c.col);
    std::vector<RowSpan> spans;
    int expected_row = rows.begin()->first;
    for (auto& [row, cols] : rows) {
        if (row != expected_row)
            throw std::invalid_argument("composed cells skip a row");
        ++expected_row;
        std::sort(cols.begin(), cols.end());
        if (cols.back() - cols.front() + 1 != static_cast<int>(cols.size()))
            throw std::invalid_argument("composed row is not contiguous");
        spans.push_back({cols.front(), cols.back() + 1});
    }
    return from_row_spans(spans, m);
}

} // namespace detail

// S = (p, q): bottom row of p boxes, top row of q boxes whose first box sits
// above the last bottom box. Each box of S places a translate of T; west-east
// neighbours share a copy of W, and the single south-north step follows the
// attachment type of T.
inline OneDotDiagram compose(int p, int q, const Composition& t, int m)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("compose needs p, q >= 1");
    const auto type = ribbon_type(t, m);
    if (!type)
        throw std::invalid_argument("ribbon " + format_composition(t) +
                                    " has no bottom and top copy of W for m = " +
                                    std::to_string(m));
    using detail::Cell;
    const auto base = detail::ribbon_cells(t);
    const int top_row = static_cast<int>(t.length()) - 1;
    const int top_right = std::max_element(base.begin(), base.end())->col;
    // The upper W of a copy occupies (top_row, glue.col … glue.col+m−2);
    // the lower W occupies (0, 0 … m−2).
    const Cell glue{top_row, top_right - m + 2};

    std::set<Cell> cells;
    auto place = [&](Cell offset) {
        for (const auto& c : base)
            cells.insert(c + offset);
    };
    auto upper_w = [&](Cell offset, Cell shift) {
        for (int k = 0; k < m - 1; ++k)
            cells.insert(offset + glue + Cell{0, k} + shift);
    };

    Cell offset{0, 0};
    place(offset);
    for (int i = 1; i < p; ++i) {
        offset = offset + glue;
        place(offset);
    }
    const Cell last_bottom = offset;
    const bool bottom_h = type->bottom == Attachment::horizontal;
    const bool top_h = type->top == Attachment::horizontal;
    if (bottom_h && top_h) {
        // W→O→W: lower W of the next copy one step northwest
        offset = offset + glue + Cell{1, -1};
    } else if (!bottom_h && !top_h) {
        // W↑O↑W: one step southeast
        offset = offset + glue + Cell{-1, 1};
    } else if (bottom_h) {
        // W→O↑W: glue, plus a copy of W southeast of the shared one
        offset = offset + glue;
        upper_w(last_bottom, Cell{-1, 1});
    } else {
        // W↑O→W: glue, plus a copy of W northwest of the shared one
        offset = offset + glue;
        upper_w(last_bottom, Cell{1, -1});
    }
    place(offset);
    for (int i = 1; i < q; ++i) {
        offset = offset + glue;
        place(offset);
    }

    const int expected = (p + q) * t.size() - (p + q - 2) * (m - 1);
    if (static_cast<int>(cells.size()) != expected)
        throw std::invalid_argument("composition produced overlapping copies");
    auto d = detail::cells_to_diagram(cells, m);
    if (d.dot_count() != 1)
        throw std::invalid_argument("composition did not produce exactly one box-dot");
    return OneDotDiagram(d);
}

struct Factorization {
    int p;
    int q;
    Composition t;
    int m;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// True iff h_D is r-periodic once the forced minus signs at |α|−m+1 and |α|
// are set aside.
inline bool sign_is_periodic(const OneDotDiagram& d)
{
    const auto t = sign_function(d);
    const int r = r_value(d);
    const int a = d.size_alpha(), m = d.m();
    std::vector<std::optional<Sign>> residue(static_cast<std::size_t>(r));
    for (int x = 1; x <= t.domain_max(); ++x) {
        if (x == a - m + 1 || x == a)
            continue;
        auto& slot = residue[static_cast<std::size_t>(x % r)];
        if (!slot)
            slot = t.sign(x);
        else if (*slot != t.sign(x))
            return false;
    }
    return true;
}

// The factorization with the largest T, (|α|−m+1)/r boxes below and
// (|β|−m+1)/r above, when h_D is periodic. T is Comp{x < r : h_D(x) = +}
// with m−1 added to its last part, or appended as a new last part when
// h_D(n−2m+2) = +.
inline std::optional<Factorization> factorize(const OneDotDiagram& d)
{
    if (!sign_is_periodic(d))
        return std::nullopt;
    const auto t = sign_function(d);
    const int r = r_value(d);
    const int m = d.m();

    std::set<int> cuts;
    for (int x = 1; x < r; ++x)
        if (t.plus(x))
            cuts.insert(x);
    const std::vector<int> base = comp_of(cuts, r).parts();
    auto build = [&](bool top_vertical) {
        std::vector<int> parts = base;
        if (top_vertical)
            parts.push_back(m - 1);
        else
            parts.back() += m - 1;
        return Composition(std::move(parts));
    };

    // h_D(n−2m+2) can land on a forced minus (when |β|−m+1 = m−1), in which
    // case it carries no information and both attachments are tried.
    const int a = d.size_alpha();
    const int probe = d.n() - 2 * m + 2;
    std::vector<bool> choices{t.plus(probe)};
    if (probe == a || probe == a - m + 1)
        choices.push_back(!choices.front());

    for (bool top_vertical : choices) {
        Factorization f{(a - m + 1) / r, (d.size_beta() - m + 1) / r, build(top_vertical), m};
        if (!ribbon_type(f.t, m))
            continue;
        try {
            if (compose(f.p, f.q, f.t, m) == d)
                return f;
        } catch (const std::invalid_argument&) {
        }
    }
    return std::nullopt;
}

struct Orbit {
    std::vector<OneDotDiagram> members;  // sorted, distinct
    int kappa = 0;
    std::optional<Factorization> factorization;
};

inline Orbit mvw_orbit(const OneDotDiagram& d)
{
    Orbit out;
    std::set<OneDotDiagram> members;
    out.factorization = factorize(d);
    if (const auto& f = out.factorization) {
        const Composition t_rev = reverse(f->t);
        members.insert(compose(f->p, f->q, f->t, f->m));
        members.insert(compose(f->p, f->q, t_rev, f->m));
        members.insert(compose(f->q, f->p, f->t, f->m));
        members.insert(compose(f->q, f->p, t_rev, f->m));
        out.kappa = (f->p != f->q ? 1 : 0) + (f->t != t_rev ? 1 : 0);
    } else {
        members.insert(d);
        members.insert(d.antipodal());
        out.kappa = d != d.antipodal() ? 1 : 0;
    }
    out.members.assign(members.begin(), members.end());
    return out;
}

} // namespace skewclass
