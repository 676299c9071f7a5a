#pragma once

// Exhaustive checks over every one-dot thickened ribbon of a given size:
// grouping by skew Schur function, comparison with the predicted orbits,
// and brute-force determination of sign positions.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "expansion.hpp"
#include "factor.hpp"
#include "shapes.hpp"
#include "structure.hpp"

namespace skewclass {

// Applies fn to every input on up to `workers` threads; output order matches
// input order whatever the worker count.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn, unsigned workers = 0)
    -> std::vector<decltype(fn(inputs.front()))>
{
    using Out = decltype(fn(inputs.front()));
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::optional<Out>> slots(inputs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++)
            slots[i].emplace(fn(inputs[i]));
    };
    if (workers == 1 || inputs.size() < 2) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, inputs.size()); ++w)
            pool.emplace_back(work);
    }
    std::vector<Out> out;
    out.reserve(inputs.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

namespace detail {

// Compositions of `size`; with first_at_least / last_at_least bounds.
inline std::vector<Composition> bounded_compositions(int size, int first_at_least,
                                                     int last_at_least)
{
    std::vector<Composition> out;
    if (size < 1)
        return out;
    const int gaps = size - 1;
    for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
        std::set<int> cuts;
        for (int i = 0; i < gaps; ++i)
            if (mask & (1UL << i))
                cuts.insert(i + 1);
        auto c = comp_of(cuts, size);
        if (c.front() >= first_at_least && c.back() >= last_at_least)
            out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// Every α ⊡ β with |α| + |β| = n, sorted.
inline std::vector<OneDotDiagram> enumerate_all(int n, int m)
{
    std::vector<OneDotDiagram> out;
    if (m < 2 || n < 2 * m)
        return out;
    for (int a = m; a <= n - m; ++a) {
        const auto alphas = detail::bounded_compositions(a, 1, m);
        const auto betas = detail::bounded_compositions(n - a, m, 1);
        for (const auto& al : alphas)
            for (const auto& be : betas)
                out.emplace_back(al, be, m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

using EquivalenceClass = std::vector<OneDotDiagram>;

// Groups diagrams by equal h-expansion. Classes and members are sorted.
inline std::vector<EquivalenceClass> group_by_expansion(const std::vector<OneDotDiagram>& diagrams,
                                                        unsigned workers = 0)
{
    auto expansions = parallel_map(
        diagrams, [](const OneDotDiagram& d) { return expand_recursive(d.diagram()); }, workers);
    std::unordered_map<HExpansion, std::size_t, HExpansionHash> index;
    std::vector<EquivalenceClass> classes;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        auto [it, inserted] = index.try_emplace(std::move(expansions[i]), classes.size());
        if (inserted)
            classes.emplace_back();
        classes[it->second].push_back(diagrams[i]);
    }
    for (auto& c : classes)
        std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

inline std::vector<EquivalenceClass> equivalence_classes(int n, int m, unsigned workers = 0)
{
    return group_by_expansion(enumerate_all(n, m), workers);
}

struct ClassFailure {
    EquivalenceClass observed;
    std::vector<OneDotDiagram> predicted;
    int kappa = 0;
};

struct VerificationReport {
    int n = 0;
    int m = 0;
    std::size_t diagram_count = 0;
    std::size_t class_count = 0;
    // Keys 1, 2, 4 and 0 for any other size.
    std::map<int, std::size_t> size_histogram{{1, 0}, {2, 0}, {4, 0}, {0, 0}};
    std::vector<ClassFailure> failures;

    bool confirmed() const { return failures.empty(); }
};

inline VerificationReport check_theorem(const std::vector<EquivalenceClass>& classes, int n, int m)
{
    VerificationReport report;
    report.n = n;
    report.m = m;
    report.class_count = classes.size();
    for (const auto& c : classes) {
        report.diagram_count += c.size();
        const std::size_t size = c.size();
        const bool usual = size == 1 || size == 2 || size == 4;
        ++report.size_histogram[usual ? static_cast<int>(size) : 0];

        const auto orbit = mvw_orbit(c.front());
        const bool matches = orbit.members == c && (std::size_t{1} << orbit.kappa) == size;
        if (!usual || !matches)
            report.failures.push_back({c, orbit.members, orbit.kappa});
    }
    return report;
}

inline VerificationReport check_theorem(int n, int m, unsigned workers = 0)
{
    return check_theorem(equivalence_classes(n, m, workers), n, m);
}

// Members of one class share λ(D).
inline bool check_lambda_necessary(const std::vector<EquivalenceClass>& classes)
{
    for (const auto& c : classes)
        for (const auto& d : c)
            if (lambda_of(d.diagram()) != lambda_of(c.front().diagram()))
                return false;
    return true;
}

inline bool check_lambda_necessary(int n, int m, unsigned workers = 0)
{
    return check_lambda_necessary(equivalence_classes(n, m, workers));
}

// Positions where the signs of canonical members of D's class disagree.
inline std::set<int> undetermined_elements(const OneDotDiagram& d, const EquivalenceClass& cls)
{
    if (!is_canonical(d))
        throw std::invalid_argument("undetermined_elements needs a canonical diagram");
    if (std::find(cls.begin(), cls.end(), d) == cls.end())
        throw std::invalid_argument("diagram is not a member of the given class");
    const auto base = sign_function(d);
    std::set<int> out;
    for (const auto& e : cls) {
        if (!is_canonical(e))
            continue;
        const auto other = sign_function(e);
        for (int x = 1; x <= base.domain_max(); ++x)
            if (base.sign(x) != other.sign(x))
                out.insert(x);
    }
    return out;
}

inline std::set<int> undetermined_elements(const OneDotDiagram& d)
{
    const auto target = expand_recursive(d.diagram());
    EquivalenceClass cls;
    for (const auto& e : enumerate_all(d.n(), d.m()))
        if (lambda_of(e.diagram()) == lambda_of(d.diagram()) &&
            expand_recursive(e.diagram()) == target)
            cls.push_back(e);
    return undetermined_elements(d, cls);
}

// Equivalence through determinants of the transposed shapes agrees with
// equivalence of the diagrams: on every within-class pair, and on `samples`
// random pairs from distinct classes with equal λ(D) where available.
inline bool check_transpose_duality(const std::vector<EquivalenceClass>& classes,
                                    std::size_t samples = 200, unsigned seed = 7)
{
    auto transposed = [](const OneDotDiagram& d) {
        return expand_determinant(transpose_skew(to_skew_shape(d.diagram())));
    };
    for (const auto& c : classes) {
        const auto ref = transposed(c.front());
        for (std::size_t i = 1; i < c.size(); ++i)
            if (transposed(c[i]) != ref)
                return false;
    }

    std::map<Partition, std::vector<std::size_t>> by_lambda;
    for (std::size_t i = 0; i < classes.size(); ++i)
        by_lambda[lambda_of(classes[i].front().diagram())].push_back(i);
    std::vector<std::vector<std::size_t>> buckets;
    for (auto& [lam, idx] : by_lambda)
        if (idx.size() > 1)
            buckets.push_back(idx);
    if (classes.size() < 2)
        return true;

    std::mt19937 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t i, j;
        if (!buckets.empty()) {
            const auto& b = buckets[rng() % buckets.size()];
            i = b[rng() % b.size()];
            do {
                j = b[rng() % b.size()];
            } while (j == i);
        } else {
            i = rng() % classes.size();
            do {
                j = rng() % classes.size();
            } while (j == i);
        }
        if (transposed(classes[i].front()) == transposed(classes[j].front()))
            return false;
    }
    return true;
}

inline bool check_transpose_duality(int n, int m, unsigned workers = 0)
{
    return check_transpose_duality(equivalence_classes(n, m, workers));
}

} // namespace skewclass
