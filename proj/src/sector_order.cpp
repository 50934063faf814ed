#include "orbsec/sector_order.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbsec {

SectorPoset::SectorPoset(const std::vector<SectorComponent>& components)
    : n_(components.size()), leq_(n_ * n_, 0), class_of_(n_) {
    for (std::size_t a = 0; a < n_; ++a) {
        const auto& ia = components[a].image;
        for (std::size_t b = 0; b < n_; ++b) {
            const auto& ib = components[b].image;
            leq_[a * n_ + b] = ia.size() <= ib.size() && std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
        }
    }
    std::map<std::size_t, std::size_t> class_by_rep;
    for (std::size_t c = 0; c < n_; ++c) {
        std::size_t rep = c;
        for (std::size_t d = 0; d < c; ++d)
            if (equivalent(c, d)) {
                rep = d;
                break;
            }
        auto [it, inserted] = class_by_rep.try_emplace(rep, classes_.size());
        if (inserted)
            classes_.emplace_back();
        classes_[it->second].push_back(c);
        class_of_[c] = it->second;
    }
    for (std::size_t k = 0; k < classes_.size(); ++k)
        if (strict_predecessors(classes_[k].front()).empty())
            minimal_.push_back(k);
}

std::vector<std::pair<std::size_t, std::size_t>> SectorPoset::strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (strictly_below(a, b))
                out.emplace_back(a, b);
    return out;
}

std::vector<std::size_t> SectorPoset::strict_predecessors(std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < n_; ++a)
        if (strictly_below(a, b))
            out.push_back(a);
    return out;
}

bool SectorPoset::is_minimal(std::size_t c) const {
    return std::binary_search(minimal_.begin(), minimal_.end(), class_of_[c]);
}

SectorPoset image_poset(const std::vector<SectorComponent>& components) {
    return SectorPoset(components);
}

bool MinimalComponentsReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.constant_order && c.pure; });
}

std::vector<std::size_t> MinimalComponentsReport::warnings() const {
    std::vector<std::size_t> out;
    for (const auto& c : checks)
        if (!c.constant_order || !c.pure)
            out.push_back(c.component);
    return out;
}

MinimalComponentsReport check_minimal_components(const InertiaComplex& inertia,
                                                 const std::vector<SectorComponent>& components,
                                                 const SectorPoset& poset) {
    const auto& oc = inertia.orbifold();
    MinimalComponentsReport report;
    for (std::size_t k : poset.minimal_classes()) {
        for (std::size_t c : poset.classes()[k]) {
            const auto& comp = components[c];
            MinimalComponentCheck check{c, true, comp.pure, true, {}};
            const Order m0 = oc.order(comp.image.front());
            for (SimplexId s : comp.image) {
                if (oc.order(s) != m0)
                    check.constant_order = false;
                if (oc.order(s) != comp.element_order)
                    check.generates = false;
            }
            if (!check.constant_order)
                check.note = "isotropy order varies over the component";
            else if (!check.pure)
                check.note = "component is not pure-dimensional";
            else if (!check.generates)
                check.note = "element of order " + std::to_string(comp.element_order) +
                             " does not generate the isotropy group of order " + std::to_string(m0);
            report.checks.push_back(std::move(check));
        }
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const auto& a, const auto& b) { return a.component < b.component; });
    return report;
}

IntersectionClosureReport check_intersection_closure(const std::vector<SectorComponent>& components) {
    IntersectionClosureReport report;
    SimplexSet meet, covered, merged, uncovered;
    for (std::size_t a = 0; a < components.size(); ++a) {
        for (std::size_t b = a + 1; b < components.size(); ++b) {
            ++report.pairs_checked;
            const auto& ia = components[a].image;
            const auto& ib = components[b].image;
            meet.clear();
            std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(meet));
            if (meet.empty())
                continue;
            covered.clear();
            for (const auto& c : components) {
                if (c.image.size() > meet.size() ||
                    !std::includes(meet.begin(), meet.end(), c.image.begin(), c.image.end()))
                    continue;
                merged.clear();
                std::set_union(covered.begin(), covered.end(), c.image.begin(), c.image.end(),
                               std::back_inserter(merged));
                covered.swap(merged);
            }
            if (covered.size() != meet.size()) {
                uncovered.clear();
                std::set_difference(meet.begin(), meet.end(), covered.begin(), covered.end(),
                                    std::back_inserter(uncovered));
                report.failures.push_back({a, b, uncovered});
            }
        }
    }
    return report;
}

std::vector<NodeId> embedded_nodes(const InertiaComplex& inertia, const SectorComponent& sub,
                                   const SectorComponent& target) {
    if (!std::includes(target.image.begin(), target.image.end(), sub.image.begin(), sub.image.end()))
        throw std::invalid_argument("component " + std::to_string(sub.id) + " is not below component " +
                                    std::to_string(target.id));
    std::vector<NodeId> out;
    for (NodeId n : target.nodes)
        if (std::binary_search(sub.image.begin(), sub.image.end(), inertia.simplex_of(n)))
            out.push_back(n);
    return out;
}

}  // namespace orbsec
