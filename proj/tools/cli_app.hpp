#pragma once

#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewclass/skewclass.hpp"

namespace skewclass::cli {

// Largest n the exhaustive verbs accept without --max-n.
inline int default_budget(int m) { return m == 2 ? 14 : 15; }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int m = 0;
    int n = 0;
    bool json = false;
    std::string method = "recursive";
    std::optional<int> max_n;
    unsigned threads = 0;
    std::string diagram;
    std::vector<std::string> diagrams;
    std::string partition;
    int p = 0;
    int q = 0;
    std::string ribbon;
};

inline HExpansion expand_with(const BoxDottedComposition& d, const std::string& method)
{
    if (method == "recursive")
        return expand_recursive(d);
    if (method == "poset")
        return expand_poset(d);
    if (method == "det")
        return expand_determinant(to_skew_shape(d));
    throw UsageError("method '" + method + "' does not produce an h-expansion");
}

inline void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline int do_expand(const Options& o, std::ostream& out)
{
    const auto d = parse_diagram(o.diagrams.at(0), o.m);
    const auto e = expand_with(d, o.method);
    if (o.json)
        print_json(out, to_json(e));
    else
        out << format_expansion(e) << '\n';
    return 0;
}

inline int do_coeff(const Options& o, std::ostream& out)
{
    const auto d = parse_diagram(o.diagrams.at(0), o.m);
    const auto lam = parse_partition(o.partition);
    if (lam.size() != d.size())
        throw UsageError("partition " + format_partition(lam) + " does not have size " +
                         std::to_string(d.size()));
    const auto c = expand_with(d, o.method).coeff(lam);
    if (o.json)
        print_json(out, {{"partition", lam.parts()}, {"coeff", c}});
    else
        out << c << '\n';
    return 0;
}

inline int do_equiv(const Options& o, std::ostream& out)
{
    const auto d = parse_diagram(o.diagrams.at(0), o.m);
    const auto e = parse_diagram(o.diagrams.at(1), o.m);
    bool same;
    if (o.method == "kostka")
        same = equivalent_by_kostka(d, e, o.max_n.value_or(default_kostka_guard));
    else
        same = d.size() == e.size() && expand_with(d, o.method) == expand_with(e, o.method);
    if (o.json)
        print_json(out, {{"equivalent", same}});
    else
        out << "equivalent: " << (same ? "true" : "false") << '\n';
    return 0;
}

inline int do_sign_table(const Options& o, std::ostream& out)
{
    const auto d = parse_one_dot(o.diagrams.at(0), o.m);
    const auto t = sign_function(d);
    if (o.json) {
        print_json(out, to_json(t));
        return 0;
    }
    out << std::left << std::setw(4) << "x" << std::setw(6) << "type" << "sign\n";
    for (int x = 1; x <= t.domain_max(); ++x)
        out << std::setw(4) << x << std::setw(6) << element_type(t, x) << sign_char(t.sign(x))
            << '\n';
    return 0;
}

inline int do_classify(const Options& o, std::ostream& out)
{
    const auto d = parse_one_dot(o.diagrams.at(0), o.m);
    const auto classes = int_classes(d);
    const auto tax = classify(d);
    if (o.json) {
        auto j = to_json(classes, tax);
        j["canonical"] = is_canonical(d);
        print_json(out, j);
        return 0;
    }
    out << "r = " << classes.r << '\n';
    out << "case: " << (tax.size_case == ClassTaxonomy::Case::equal ? "equal" : "unequal") << '\n';
    out << "canonical: " << (is_canonical(d) ? "true" : "false") << '\n';
    for (const auto& block : classes.blocks) {
        const auto label = tax.label_of_representative(block.front());
        out << (label ? label_char(*label) : '-') << " {";
        for (std::size_t i = 0; i < block.size(); ++i)
            out << (i ? "," : "") << block[i];
        out << "}\n";
    }
    return 0;
}

inline int do_factorize(const Options& o, std::ostream& out)
{
    const auto d = parse_one_dot(o.diagrams.at(0), o.m);
    const auto f = factorize(d);
    if (o.json) {
        print_json(out, f ? to_json(*f) : json(nullptr));
        return 0;
    }
    if (!f) {
        out << "trivial factorization only\n";
        return 0;
    }
    out << "S = (" << f->p << "," << f->q << ")\n";
    out << "T = " << format_composition(f->t) << '\n';
    out << "type: " << format_ribbon_type(*ribbon_type(f->t, f->m)) << '\n';
    return 0;
}

inline int do_compose(const Options& o, std::ostream& out)
{
    const auto t = parse_diagram(o.ribbon, o.m);
    if (t.dot_count() != 0)
        throw std::invalid_argument("the ribbon T must not contain a box-dot");
    const auto d = compose(o.p, o.q, t.underlying(), o.m);
    if (o.json)
        print_json(out, {{"diagram", format_diagram(d)}});
    else
        out << format_diagram(d) << '\n';
    return 0;
}

inline int do_orbit(const Options& o, std::ostream& out)
{
    const auto orbit = mvw_orbit(parse_one_dot(o.diagrams.at(0), o.m));
    if (o.json) {
        print_json(out, to_json(orbit));
        return 0;
    }
    for (const auto& d : orbit.members)
        out << format_diagram(d) << '\n';
    out << "kappa: " << orbit.kappa << '\n';
    return 0;
}

inline int do_kostka(const Options& o, std::ostream& out)
{
    const auto d = parse_diagram(o.diagrams.at(0), o.m);
    const auto k = kostka_vector(to_skew_shape(d), o.max_n.value_or(default_kostka_guard));
    if (o.json) {
        print_json(out, to_json(k));
        return 0;
    }
    for (const auto& [nu, c] : k.entries)
        out << format_partition(nu) << ' ' << c << '\n';
    return 0;
}

inline void check_budget(const Options& o)
{
    const int limit = o.max_n.value_or(default_budget(o.m));
    if (o.n > limit)
        throw UsageError("n = " + std::to_string(o.n) + " exceeds the budget of " +
                         std::to_string(limit) + " for m = " + std::to_string(o.m) +
                         "; raise it with --max-n");
}

inline int do_verify(const Options& o, std::ostream& out)
{
    check_budget(o);
    const auto report = check_theorem(o.n, o.m, o.threads);
    if (o.json) {
        print_json(out, to_json(report));
    } else {
        out << "n = " << report.n << ", m = " << report.m << '\n';
        out << "diagrams: " << report.diagram_count << '\n';
        out << "classes: " << report.class_count << '\n';
        out << "class sizes: 1 -> " << report.size_histogram.at(1) << ", 2 -> "
            << report.size_histogram.at(2) << ", 4 -> " << report.size_histogram.at(4)
            << ", other -> " << report.size_histogram.at(0) << '\n';
        for (const auto& f : report.failures) {
            out << "mismatch: class {";
            for (std::size_t i = 0; i < f.observed.size(); ++i)
                out << (i ? " " : "") << format_diagram(f.observed[i]);
            out << "} predicted {";
            for (std::size_t i = 0; i < f.predicted.size(); ++i)
                out << (i ? " " : "") << format_diagram(f.predicted[i]);
            out << "}\n";
        }
        out << "failures: " << report.failures.size() << '\n';
    }
    return report.confirmed() ? 0 : 1;
}

inline int do_enumerate(const Options& o, std::ostream& out)
{
    check_budget(o);
    const auto all = enumerate_all(o.n, o.m);
    if (o.json) {
        json list = json::array();
        for (const auto& d : all)
            list.push_back(format_diagram(d));
        print_json(out, list);
        return 0;
    }
    for (const auto& d : all)
        out << format_diagram(d) << '\n';
    return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Skew Schur functions of thickened ribbons with one 2 x m block"};
    app.name("skewclass");
    app.require_subcommand(1);

    auto add_m = [&](CLI::App* sub) {
        sub->add_option("--m", o.m, "block width m")->required()->check(CLI::Range(2, 64));
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
    auto add_method = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--method", o.method, "expansion engine")
            ->check(CLI::IsMember(std::move(allowed)));
    };

    auto* expand = app.add_subcommand("expand", "h-expansion of a diagram");
    expand->add_option("diagram", o.diagram)->required();
    add_m(expand);
    add_method(expand, {"recursive", "poset", "det"});
    add_json(expand);

    auto* coeff = app.add_subcommand("coeff", "one coefficient of the h-expansion");
    coeff->add_option("diagram", o.diagram)->required();
    coeff->add_option("partition", o.partition)->required();
    add_m(coeff);
    add_method(coeff, {"recursive", "poset", "det"});
    add_json(coeff);

    auto* equiv = app.add_subcommand("equiv", "test two diagrams for equal skew Schur functions");
    equiv->add_option("diagrams", o.diagrams)->required()->expected(2);
    add_m(equiv);
    add_method(equiv, {"recursive", "poset", "det", "kostka"});
    equiv->add_option("--max-n", o.max_n, "cell limit for the kostka method");
    add_json(equiv);

    auto* sign = app.add_subcommand("sign-table", "sign function and element types");
    sign->add_option("diagram", o.diagram)->required();
    add_m(sign);
    add_json(sign);

    auto* cls = app.add_subcommand("classify", "integer classes and their labels");
    cls->add_option("diagram", o.diagram)->required();
    add_m(cls);
    add_json(cls);

    auto* fac = app.add_subcommand("factorize", "nontrivial factorization, if any");
    fac->add_option("diagram", o.diagram)->required();
    add_m(fac);
    add_json(fac);

    auto* comp = app.add_subcommand("compose", "compose the two-row ribbon (p,q) with T");
    comp->add_option("p", o.p)->required()->check(CLI::PositiveNumber);
    comp->add_option("q", o.q)->required()->check(CLI::PositiveNumber);
    comp->add_option("T", o.ribbon)->required();
    add_m(comp);
    add_json(comp);

    auto* orbit = app.add_subcommand("orbit", "predicted equivalence class");
    orbit->add_option("diagram", o.diagram)->required();
    add_m(orbit);
    add_json(orbit);

    auto* kostka = app.add_subcommand("kostka", "Kostka numbers of the skew shape");
    kostka->add_option("diagram", o.diagram)->required();
    add_m(kostka);
    kostka->add_option("--max-n", o.max_n, "cell limit for enumeration");
    add_json(kostka);

    auto* verify = app.add_subcommand("verify", "check the classification for all diagrams of size n");
    auto* enumerate = app.add_subcommand("enumerate", "list all diagrams of size n");
    for (auto* sub : {verify, enumerate}) {
        sub->add_option("--n", o.n, "total size")->required()->check(CLI::NonNegativeNumber);
        add_m(sub);
        sub->add_option("--max-n", o.max_n, "override the size budget");
        add_json(sub);
    }
    verify->add_option("--threads", o.threads, "worker threads, 0 for all cores");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (!o.diagram.empty())
        o.diagrams = {o.diagram};
    try {
        if (*expand) return do_expand(o, out);
        if (*coeff) return do_coeff(o, out);
        if (*equiv) return do_equiv(o, out);
        if (*sign) return do_sign_table(o, out);
        if (*cls) return do_classify(o, out);
        if (*fac) return do_factorize(o, out);
        if (*comp) return do_compose(o, out);
        if (*orbit) return do_orbit(o, out);
        if (*kostka) return do_kostka(o, out);
        if (*verify) return do_verify(o, out);
        if (*enumerate) return do_enumerate(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace skewclass::cli
