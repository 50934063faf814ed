#include "orbsec/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbsec {

SectorAnalysis analyze(const OrbifoldComplex& oc) {
    InertiaComplex inertia(oc);
    auto components = sector_components(inertia);
    SectorPoset poset(components);
    auto plausibility = almost_complex_plausibility(oc, components);
    return {std::move(inertia), std::move(components), std::move(poset), std::move(plausibility)};
}

GaussBonnetReport verify_inertia_gauss_bonnet(const SectorAnalysis& analysis) {
    GaussBonnetReport report;
    for (const auto& c : analysis.components)
        report.sector_sum += c.chi_orb;
    report.euler = euler_characteristic(analysis.orbifold().complex());
    report.ok = report.sector_sum == Rational(report.euler);
    return report;
}

GaussBonnetReport verify_inertia_gauss_bonnet(const OrbifoldComplex& oc) {
    return verify_inertia_gauss_bonnet(analyze(oc));
}

AdditivityReport verify_additivity(const OrbifoldComplex& oc, const SimplexSet& a, const SimplexSet& b) {
    const auto& k = oc.complex();
    for (const auto* part : {&a, &b}) {
        if (!std::is_sorted(part->begin(), part->end()) ||
            std::adjacent_find(part->begin(), part->end()) != part->end())
            throw std::invalid_argument("subcomplex ids must be sorted and distinct");
        if (!part->empty() && part->back() >= k.size())
            throw std::invalid_argument("simplex id out of range");
        if (!k.is_face_closed(*part))
            throw std::invalid_argument("subcomplex is not face closed");
    }
    SimplexSet both, either;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(either));
    if (either.size() != k.size())
        throw std::invalid_argument("subcomplexes do not cover the complex");

    AdditivityReport report;
    report.a = euler_satake(oc, a);
    report.b = euler_satake(oc, b);
    report.intersection = euler_satake(oc, both);
    report.total = euler_satake(oc);
    report.ok = report.a + report.b - report.intersection == report.total;
    return report;
}

std::pair<SimplexSet, SimplexSet> star_complement_split(const SimplicialComplex& complex,
                                                        const std::vector<Vertex>& vertices) {
    std::vector<Vertex> marked(vertices);
    std::sort(marked.begin(), marked.end());
    SimplexSet star, rest;
    for (SimplexId id = 0; id < complex.size(); ++id) {
        auto s = complex.simplex(id);
        const bool touches = std::any_of(s.begin(), s.end(),
                                         [&](Vertex v) { return std::binary_search(marked.begin(), marked.end(), v); });
        (touches ? star : rest).push_back(id);
    }
    return {complex.closure(star), rest};
}

CharacteristicSplit split_characteristic(const InertiaComplex& inertia, const SectorComponent& c) {
    const auto& oc = inertia.orbifold();
    std::int64_t generic_count = 0;
    WeightedSum singular;
    for (NodeId n : c.nodes) {
        const SimplexId s = inertia.simplex_of(n);
        const int sign = oc.complex().dim(s) % 2 == 0 ? 1 : -1;
        if (oc.order(s) == c.element_order)
            generic_count += sign;
        else
            singular.add(oc.order(s), sign);
    }
    return {Rational(BigInt(generic_count), BigInt(c.element_order)), singular.value()};
}

std::string to_string(InductionOutcome outcome) {
    switch (outcome) {
    case InductionOutcome::verified: return "verified";
    case InductionOutcome::failed: return "failed";
    case InductionOutcome::premise_gap: return "premise_gap";
    case InductionOutcome::nonvanishing_predecessor: return "nonvanishing_predecessor";
    }
    return "unknown";
}

bool InductionReport::ok() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const auto& e) { return e.outcome == InductionOutcome::failed; });
}

std::vector<std::size_t> InductionReport::premise_gaps() const {
    std::vector<std::size_t> out;
    for (const auto& e : entries)
        if (e.outcome == InductionOutcome::premise_gap)
            out.push_back(e.component);
    return out;
}

InductionReport verify_induction_identity(const SectorAnalysis& analysis) {
    const auto& oc = analysis.orbifold();
    const auto& comps = analysis.components;
    InductionReport report;
    SimplexSet covered, merged;
    for (const auto& c : comps) {
        InductionEntry entry{c.id, InductionOutcome::verified, c.chi_orb,
                             Rational(BigInt(c.chi), BigInt(c.element_order)), {}};
        const auto preds = analysis.poset.strict_predecessors(c.id);
        const bool vanishing = std::all_of(preds.begin(), preds.end(), [&](std::size_t p) {
            return comps[p].chi == 0 && comps[p].chi_orb == 0;
        });
        if (!vanishing) {
            entry.outcome = InductionOutcome::nonvanishing_predecessor;
            report.entries.push_back(std::move(entry));
            continue;
        }
        covered.clear();
        for (std::size_t p : preds) {
            merged.clear();
            std::set_union(covered.begin(), covered.end(), comps[p].image.begin(), comps[p].image.end(),
                           std::back_inserter(merged));
            covered.swap(merged);
        }
        for (SimplexId s : c.image) {
            if (oc.order(s) > c.element_order && !std::binary_search(covered.begin(), covered.end(), s)) {
                if (entry.uncovered_simplices_sample.size() < 8)
                    entry.uncovered_simplices_sample.push_back(s);
                entry.outcome = InductionOutcome::premise_gap;
            }
        }
        if (entry.outcome != InductionOutcome::premise_gap && entry.chi_orb != entry.scaled_chi)
            entry.outcome = InductionOutcome::failed;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string Decision::verdict() const {
    if (!admits)
        return "not theorem-applicable";
    return *admits ? "admits a nonvanishing vector field" : "admits no nonvanishing vector field";
}

Decision decide_nonvanishing(const SectorAnalysis& analysis) {
    Decision d;
    d.condition_iii = true;
    d.condition_iv = true;
    for (const auto& c : analysis.components) {
        const bool chi_zero = c.chi == 0;
        const bool orb_zero = c.chi_orb == 0;
        d.condition_iii = d.condition_iii && chi_zero;
        d.condition_iv = d.condition_iv && orb_zero;
        if (!chi_zero || !orb_zero)
            d.witnesses.push_back(c.id);
    }
    d.consistent = d.condition_iii == d.condition_iv;
    if (d.consistent)
        d.admits = d.condition_iii;
    d.classical_chi_orb = euler_satake(analysis.orbifold());
    d.classical_chi = euler_characteristic(analysis.orbifold().complex());
    d.plausibility = analysis.plausibility;
    return d;
}

Decision decide_nonvanishing(const OrbifoldComplex& oc) {
    return decide_nonvanishing(analyze(oc));
}

}  // namespace orbsec
