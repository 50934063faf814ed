#include "orbsec/report.hpp"

#include "orbsec/io.hpp"

#include <algorithm>

namespace orbsec::report {

using nlohmann::ordered_json;

namespace {

ordered_json simplex_json(const SimplicialComplex& k, SimplexId id) {
    auto s = k.simplex(id);
    return ordered_json(std::vector<Vertex>(s.begin(), s.end()));
}

}  // namespace

std::vector<std::string> VerifierResults::violations(const SectorAnalysis& analysis, const Decision& decision) const {
    std::vector<std::string> out;
    if (!gauss_bonnet.ok)
        out.push_back("sector Euler-Satake sum " + to_string(gauss_bonnet.sector_sum) +
                      " differs from the Euler characteristic " + std::to_string(gauss_bonnet.euler));
    for (std::size_t i = 0; i < additivity.size(); ++i)
        if (!additivity[i].ok)
            out.push_back("additivity fails on split " + std::to_string(i));
    for (const auto& e : induction.entries)
        if (e.outcome == InductionOutcome::failed)
            out.push_back("induction identity fails on component " + std::to_string(e.component));
    if (analysis.plausibility.plausible()) {
        if (!decision.consistent)
            out.push_back("conditions (iii) and (iv) disagree on a plausible input");
        if (!intersection_closure.passed())
            out.push_back("component images are not closed under intersection");
    }
    return out;
}

VerifierResults run_verifiers(const SectorAnalysis& analysis, std::size_t max_splits) {
    VerifierResults r;
    const auto& oc = analysis.orbifold();
    const auto& k = oc.complex();
    r.gauss_bonnet = verify_inertia_gauss_bonnet(analysis);
    const std::size_t n = k.vertex_count();
    const std::size_t splits = std::min(n, max_splits);
    for (std::size_t i = 0; i < splits; ++i) {
        const auto v = static_cast<Vertex>(i * n / splits);
        if (!k.find(std::span<const Vertex>(&v, 1)))
            continue;
        auto [a, b] = star_complement_split(k, {v});
        r.additivity.push_back(verify_additivity(oc, a, b));
    }
    r.minimal_components = check_minimal_components(analysis.inertia, analysis.components, analysis.poset);
    r.intersection_closure = check_intersection_closure(analysis.components);
    r.induction = verify_induction_identity(analysis);
    return r;
}

ordered_json validation_json(const OrbifoldComplex& oc, const ValidationReport& validation) {
    const auto& k = oc.complex();
    ordered_json findings = ordered_json::array();
    for (const auto& f : validation.findings) {
        ordered_json entry;
        entry["kind"] = to_string(f.kind);
        entry["simplex"] = simplex_json(k, f.simplex);
        entry["face"] = f.face ? simplex_json(k, *f.face) : ordered_json(nullptr);
        entry["message"] = f.message;
        findings.push_back(std::move(entry));
    }
    ordered_json out;
    out["mode"] = validation.mode == ValidationMode::strict ? "strict" : "lax";
    out["ok"] = validation.ok();
    out["findings"] = std::move(findings);
    return out;
}

ordered_json build(const OrbifoldComplex& oc, const ValidationReport& validation, const SectorAnalysis* analysis,
                   const Sections& sections, const Decision* decision, const VerifierResults* verifiers) {
    const auto& k = oc.complex();
    ordered_json doc;
    doc["format_version"] = io::format_version;
    doc["input"] = {{"digest", "sha256:" + io::digest(oc)},
                    {"vertices", k.vertex_count()},
                    {"simplices", k.size()},
                    {"dimension", k.dimension()},
                    {"reduced", oc.is_reduced()}};
    doc["validation"] = validation_json(oc, validation);

    if (sections.euler) {
        doc["euler"] = {{"chi", euler_characteristic(k)}, {"chi_orb", to_string(euler_satake(oc))}};
    }
    if (!analysis)
        return doc;

    const auto& comps = analysis->components;
    if (sections.components) {
        ordered_json list = ordered_json::array();
        for (const auto& c : comps) {
            const auto split = split_characteristic(analysis->inertia, c);
            list.push_back({{"id", c.id},
                            {"element_order", c.element_order},
                            {"dim", c.dim},
                            {"chi", c.chi},
                            {"chi_orb", to_string(c.chi_orb)},
                            {"node_count", c.nodes.size()},
                            {"image_size", c.image.size()},
                            {"minimal", analysis->poset.is_minimal(c.id)},
                            {"nontwisted", c.is_nontwisted},
                            {"pure", c.pure},
                            {"generic", to_string(split.generic)},
                            {"singular", to_string(split.singular)}});
        }
        doc["components"] = std::move(list);

        ordered_json edges = ordered_json::array();
        for (auto [a, b] : analysis->poset.strict_pairs())
            edges.push_back({a, b});
        ordered_json minimal = ordered_json::array();
        for (std::size_t m : analysis->poset.minimal_classes())
            minimal.push_back(analysis->poset.classes()[m]);
        doc["poset"] = {{"edges", std::move(edges)},
                        {"classes", analysis->poset.classes()},
                        {"minimal_classes", std::move(minimal)}};
    }

    ordered_json plaus_findings = ordered_json::array();
    for (const auto& f : analysis->plausibility.findings)
        plaus_findings.push_back({{"kind", to_string(f.kind)},
                                  {"component", f.component ? ordered_json(*f.component) : ordered_json(nullptr)},
                                  {"message", f.message}});
    doc["plausibility"] = {{"plausible", analysis->plausibility.plausible()}, {"findings", std::move(plaus_findings)}};

    if (sections.decision && decision) {
        ordered_json witnesses = ordered_json::array();
        for (std::size_t w : decision->witnesses)
            witnesses.push_back({{"id", w}, {"chi", comps[w].chi}, {"chi_orb", to_string(comps[w].chi_orb)}});
        doc["decision"] = {{"condition_iii", decision->condition_iii},
                           {"condition_iv", decision->condition_iv},
                           {"consistent", decision->consistent},
                           {"admits", decision->admits ? ordered_json(*decision->admits) : ordered_json(nullptr)},
                           {"verdict", decision->verdict()},
                           {"granularity", "connected_component"},
                           {"witnesses", std::move(witnesses)},
                           {"classical",
                            {{"chi_orb", to_string(decision->classical_chi_orb)}, {"chi", decision->classical_chi}}}};
    }

    if (sections.verifiers && verifiers) {
        const auto& v = *verifiers;
        ordered_json additivity = ordered_json::array();
        bool additivity_ok = true;
        for (const auto& a : v.additivity) {
            additivity_ok = additivity_ok && a.ok;
            additivity.push_back({{"ok", a.ok},
                                  {"a", to_string(a.a)},
                                  {"b", to_string(a.b)},
                                  {"intersection", to_string(a.intersection)},
                                  {"total", to_string(a.total)}});
        }
        ordered_json minimal = ordered_json::array();
        for (const auto& c : v.minimal_components.checks)
            minimal.push_back({{"component", c.component},
                               {"constant_order", c.constant_order},
                               {"pure", c.pure},
                               {"generates", c.generates},
                               {"note", c.note}});
        ordered_json closure_failures = ordered_json::array();
        for (const auto& f : v.intersection_closure.failures)
            closure_failures.push_back({{"a", f.a}, {"b", f.b}, {"uncovered", f.uncovered.size()}});
        ordered_json induction = ordered_json::array();
        for (const auto& e : v.induction.entries)
            induction.push_back({{"component", e.component},
                                 {"outcome", to_string(e.outcome)},
                                 {"chi_orb", to_string(e.chi_orb)},
                                 {"scaled_chi", to_string(e.scaled_chi)}});
        doc["verifiers"] = {
            {"gauss_bonnet",
             {{"ok", v.gauss_bonnet.ok},
              {"sector_sum", to_string(v.gauss_bonnet.sector_sum)},
              {"euler", v.gauss_bonnet.euler}}},
            {"additivity", {{"ok", additivity_ok}, {"splits", std::move(additivity)}}},
            {"minimal_components",
             {{"passed", v.minimal_components.passed()}, {"checks", std::move(minimal)}}},
            {"intersection_closure",
             {{"passed", v.intersection_closure.passed()},
              {"pairs_checked", v.intersection_closure.pairs_checked},
              {"failures", std::move(closure_failures)}}},
            {"induction",
             {{"ok", v.induction.ok()},
              {"entries", std::move(induction)},
              {"premise_gaps", v.induction.premise_gaps()}}}};
    }
    return doc;
}

}  // namespace orbsec::report
