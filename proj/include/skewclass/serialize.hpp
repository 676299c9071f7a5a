#pragma once

// JSON forms of the library's results, built on nlohmann::json.

#include <string>

#include <nlohmann/json.hpp>

#include "expansion.hpp"
#include "factor.hpp"
#include "structure.hpp"
#include "tableaux.hpp"
#include "verify.hpp"

namespace skewclass {

using nlohmann::json;

inline json to_json(const HExpansion& e)
{
    json terms = json::array();
    for (const auto& [p, c] : e.terms())
        terms.push_back({{"partition", p.parts()}, {"coeff", c}});
    return {{"degree", e.degree()}, {"terms", std::move(terms)}};
}

inline HExpansion expansion_from_json(const json& j)
{
    HExpansion e(j.at("degree").get<int>());
    for (const auto& t : j.at("terms"))
        e.add(Partition(t.at("partition").get<std::vector<int>>()), t.at("coeff").get<Coefficient>());
    return e;
}

inline json to_json(const KostkaVector& k)
{
    json terms = json::array();
    for (const auto& [p, c] : k.entries)
        terms.push_back({{"partition", p.parts()}, {"kostka", c}});
    return {{"degree", k.degree}, {"terms", std::move(terms)}};
}

inline json to_json(const SignTable& t)
{
    json rows = json::array();
    for (int x = 1; x <= t.domain_max(); ++x)
        rows.push_back({{"x", x},
                        {"type", element_type(t, x)},
                        {"sign", std::string(1, sign_char(t.sign(x)))}});
    return {{"n", t.n()},
            {"m", t.m()},
            {"size_alpha", t.size_alpha()},
            {"size_beta", t.size_beta()},
            {"rows", std::move(rows)}};
}

inline json to_json(const IntClassPartition& c, const ClassTaxonomy& tax)
{
    json classes = json::array();
    for (const auto& block : c.blocks) {
        json entry{{"elements", block}};
        if (auto l = tax.label_of_representative(block.front()))
            entry["label"] = std::string(1, label_char(*l));
        else
            entry["label"] = nullptr;
        classes.push_back(std::move(entry));
    }
    return {{"r", c.r},
            {"case", tax.size_case == ClassTaxonomy::Case::equal ? "equal" : "unequal"},
            {"classes", std::move(classes)}};
}

inline json to_json(const Factorization& f)
{
    return {{"s", {f.p, f.q}}, {"t", format_composition(f.t)}, {"m", f.m},
            {"type", format_ribbon_type(*ribbon_type(f.t, f.m))}};
}

inline json to_json(const Orbit& o)
{
    json members = json::array();
    for (const auto& d : o.members)
        members.push_back(format_diagram(d));
    json out{{"members", std::move(members)}, {"kappa", o.kappa}};
    out["factorization"] = o.factorization ? to_json(*o.factorization) : json(nullptr);
    return out;
}

inline json to_json(const VerificationReport& r)
{
    json failures = json::array();
    for (const auto& f : r.failures) {
        json observed = json::array(), predicted = json::array();
        for (const auto& d : f.observed)
            observed.push_back(format_diagram(d));
        for (const auto& d : f.predicted)
            predicted.push_back(format_diagram(d));
        failures.push_back(
            {{"class", std::move(observed)}, {"predicted", std::move(predicted)}, {"kappa", f.kappa}});
    }
    return {{"n", r.n},
            {"m", r.m},
            {"diagram_count", r.diagram_count},
            {"class_count", r.class_count},
            {"size_histogram",
             {{"1", r.size_histogram.at(1)},
              {"2", r.size_histogram.at(2)},
              {"4", r.size_histogram.at(4)},
              {"other", r.size_histogram.at(0)}}},
            {"failures", std::move(failures)},
            {"confirmed", r.confirmed()}};
}

} // namespace skewclass
