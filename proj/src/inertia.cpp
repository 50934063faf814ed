#include "orbsec/inertia.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace orbsec {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), NodeId{0});
    }

    NodeId find(NodeId x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<NodeId> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace

InertiaComplex::InertiaComplex(OrbifoldComplex oc) : oc_(std::move(oc)) {
    auto report = validate(oc_);
    if (!report.ok())
        throw LabelError("invalid labeling: " + report.findings.front().message);
    const auto& k = oc_.complex();
    offset_.resize(k.size() + 1);
    offset_[0] = 0;
    for (SimplexId id = 0; id < k.size(); ++id)
        offset_[id + 1] = offset_[id] + oc_.order(id);
    if (offset_.back() > std::numeric_limits<NodeId>::max())
        throw LabelError("inertia complex too large");
}

NodeId InertiaComplex::node_id(SimplexId simplex, Element g) const {
    if (g >= oc_.order(simplex))
        throw LabelError("element out of range");
    return static_cast<NodeId>(offset_[simplex] + g);
}

SimplexId InertiaComplex::simplex_of(NodeId id) const {
    auto it = std::upper_bound(offset_.begin(), offset_.end(), std::size_t{id});
    return static_cast<SimplexId>(it - offset_.begin() - 1);
}

InertiaNode InertiaComplex::node(NodeId id) const {
    const SimplexId s = simplex_of(id);
    return {s, static_cast<Element>(id - offset_[s])};
}

std::size_t InertiaComplex::edge_count() const {
    const auto& k = oc_.complex();
    std::size_t n = 0;
    for (SimplexId id = 0; id < k.size(); ++id)
        n += k.facets(id).size() * oc_.order(id);
    return n;
}

std::vector<std::pair<NodeId, NodeId>> InertiaComplex::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for_each_edge([&](NodeId a, NodeId b) { out.emplace_back(a, b); });
    return out;
}

InertiaComplex build_inertia(const OrbifoldComplex& oc) {
    return InertiaComplex(oc);
}

SectorComponent component_invariants(const InertiaComplex& inertia, SectorComponent c) {
    const auto& oc = inertia.orbifold();
    const auto& k = oc.complex();
    if (!std::is_sorted(c.nodes.begin(), c.nodes.end()))
        std::sort(c.nodes.begin(), c.nodes.end());
    c.image.clear();
    c.chi = 0;
    c.dim = -1;
    WeightedSum weighted;
    std::optional<Order> common;
    SimplexId current = 0;
    int d = 0;
    for (NodeId n : c.nodes) {
        if (n < inertia.first_node(current) || n >= inertia.first_node(current) + oc.order(current)) {
            current = inertia.simplex_of(n);
            d = k.dim(current);
        }
        const SimplexId s = current;
        const Order m = oc.order(s);
        const Order ord = element_order(n - inertia.first_node(s), m);
        if (common && *common != ord)
            throw std::logic_error("element order varies over a sector component");
        common = ord;
        const int sign = d % 2 == 0 ? 1 : -1;
        c.chi += sign;
        weighted.add(m, sign);
        c.dim = std::max(c.dim, d);
        if (c.image.empty() || c.image.back() != s)
            c.image.push_back(s);
    }
    c.chi_orb = weighted.value();
    c.element_order = common.value_or(1);
    c.is_nontwisted = c.element_order == 1;

    // Sweep down from the top-dimensional image simplices. Large images get
    // a dense index instead of binary searches.
    std::vector<char> covered(c.image.size(), 0);
    const bool dense = c.image.size() * 16 >= k.size();
    constexpr auto absent = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(dense ? k.size() : 0, absent);
    if (dense)
        for (std::size_t i = 0; i < c.image.size(); ++i)
            index[c.image[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = c.image.size(); i-- > 0;) {
        const SimplexId s = c.image[i];
        if (k.dim(s) == c.dim)
            covered[i] = 1;
        if (!covered[i])
            continue;
        for (SimplexId f : k.facets(s)) {
            if (dense) {
                if (index[f] != absent)
                    covered[index[f]] = 1;
                continue;
            }
            auto it = std::lower_bound(c.image.begin(), c.image.end(), f);
            if (it != c.image.end() && *it == f)
                covered[static_cast<std::size_t>(it - c.image.begin())] = 1;
        }
    }
    c.pure = std::all_of(covered.begin(), covered.end(), [](char x) { return x != 0; });
    return c;
}

std::vector<SectorComponent> sector_components(const InertiaComplex& inertia) {
    const std::size_t n = inertia.node_count();
    UnionFind uf(n);
    inertia.for_each_edge([&](NodeId a, NodeId b) { uf.unite(a, b); });

    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> slot(n, unset);
    std::vector<SectorComponent> comps;
    for (NodeId v = 0; v < n; ++v) {
        const NodeId r = uf.find(v);
        if (slot[r] == unset) {
            slot[r] = static_cast<std::uint32_t>(comps.size());
            comps.emplace_back();
        }
        comps[slot[r]].nodes.push_back(v);  // ascending, so nodes[0] is the smallest
    }
    for (auto& c : comps)
        c = component_invariants(inertia, std::move(c));
    std::sort(comps.begin(), comps.end(), [](const SectorComponent& a, const SectorComponent& b) {
        if (a.element_order != b.element_order)
            return a.element_order < b.element_order;
        return a.nodes.front() < b.nodes.front();
    });
    for (std::size_t i = 0; i < comps.size(); ++i)
        comps[i].id = i;
    return comps;
}

std::string to_string(PlausibilityKind kind) {
    switch (kind) {
    case PlausibilityKind::odd_dimension: return "odd_dimension";
    case PlausibilityKind::impure_component: return "impure_component";
    case PlausibilityKind::odd_component: return "odd_component";
    case PlausibilityKind::codimension: return "codimension";
    }
    return "unknown";
}

PlausibilityReport almost_complex_plausibility(const OrbifoldComplex& oc,
                                               const std::vector<SectorComponent>& components) {
    PlausibilityReport report;
    // Nontwisted components are the connected pieces of the complex.
    std::vector<std::size_t> piece_of(oc.complex().size(), 0);
    for (const auto& c : components) {
        if (!c.is_nontwisted)
            continue;
        for (SimplexId s : c.image)
            piece_of[s] = c.id;
        if (c.dim % 2 != 0)
            report.findings.push_back({PlausibilityKind::odd_dimension, c.id,
                                       "connected piece of dimension " + std::to_string(c.dim) + " is odd-dimensional"});
    }
    for (const auto& c : components) {
        const auto id = std::to_string(c.id);
        if (!c.pure)
            report.findings.push_back({PlausibilityKind::impure_component, c.id,
                                       "component " + id + " is not pure-dimensional"});
        if (c.dim % 2 != 0)
            report.findings.push_back({PlausibilityKind::odd_component, c.id,
                                       "component " + id + " has odd dimension " + std::to_string(c.dim)});
        if (c.is_nontwisted || c.image.empty())
            continue;
        const auto& piece = components[piece_of[c.image.front()]];
        if (c.image.size() != piece.image.size() && c.dim > piece.dim - 2)
            report.findings.push_back({PlausibilityKind::codimension, c.id,
                                       "twisted component " + id + " has dimension " + std::to_string(c.dim) +
                                           " in a " + std::to_string(piece.dim) + "-dimensional piece"});
    }
    return report;
}

}  // namespace orbsec
