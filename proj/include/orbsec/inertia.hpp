#pragma once

#include "orbsec/orbifold.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbsec {

using NodeId = std::uint32_t;

struct InertiaNode {
    SimplexId simplex;
    Element element;

    bool operator==(const InertiaNode&) const = default;
};

/**
 * Nodes (simplex, g) for every g in Z_{m_simplex}, joined by an edge to
 * (facet, restriction of g) for every facet incidence. Node ids are dense:
 * the nodes over one simplex are consecutive, in element order.
 */
class InertiaComplex {
public:
    /// Throws LabelError when `oc` fails lax validation.
    explicit InertiaComplex(OrbifoldComplex oc);

    const OrbifoldComplex& orbifold() const { return oc_; }

    std::size_t node_count() const { return offset_.back(); }
    NodeId node_id(SimplexId simplex, Element g) const;
    InertiaNode node(NodeId id) const;
    SimplexId simplex_of(NodeId id) const;
    NodeId first_node(SimplexId simplex) const { return static_cast<NodeId>(offset_[simplex]); }

    std::size_t edge_count() const;

    /// Calls f(a, b) once per facet incidence and element, where a lies over
    /// the larger simplex.
    template <class F>
    void for_each_edge(F&& f) const {
        const auto& k = oc_.complex();
        for (SimplexId id = 0; id < k.size(); ++id) {
            const std::uint64_t m = oc_.order(id);
            const auto facets = k.facets(id);
            const auto units = oc_.units(id);
            const auto from = static_cast<NodeId>(offset_[id]);
            for (std::size_t pos = 0; pos < facets.size(); ++pos) {
                const NodeId base = first_node(facets[pos]);
                if (m == 1) {
                    f(from, base);
                    continue;
                }
                const std::uint64_t scale = oc_.order(facets[pos]) / m;
                const std::uint64_t u = units[pos];
                for (std::uint64_t g = 0; g < m; ++g)
                    f(static_cast<NodeId>(from + g), static_cast<NodeId>(base + (g * u % m) * scale));
            }
        }
    }

    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    OrbifoldComplex oc_;
    std::vector<std::size_t> offset_;
};

InertiaComplex build_inertia(const OrbifoldComplex& oc);

/// A connected component of the inertia complex.
struct SectorComponent {
    std::size_t id = 0;
    std::vector<NodeId> nodes;  // sorted
    Order element_order = 1;
    SimplexSet image;           // simplices under the nodes
    std::int64_t chi = 0;       // sum over nodes of (-1)^dim
    Rational chi_orb;           // sum over nodes of (-1)^dim / m
    int dim = -1;
    bool is_nontwisted = false;
    bool pure = false;          // every image simplex lies in one of dimension `dim`
};

/// Components ordered by (element_order, smallest node), so nontwisted
/// components come first; invariants are filled in.
std::vector<SectorComponent> sector_components(const InertiaComplex& inertia);

/// Recomputes every derived field of `c` from its node set.
SectorComponent component_invariants(const InertiaComplex& inertia, SectorComponent c);

enum class PlausibilityKind { odd_dimension, impure_component, odd_component, codimension };

std::string to_string(PlausibilityKind kind);

struct PlausibilityFinding {
    PlausibilityKind kind;
    std::optional<std::size_t> component;
    std::string message;
};

/// Necessary conditions for a closed almost-complex orbifold. Passing only
/// means "plausible".
struct PlausibilityReport {
    std::vector<PlausibilityFinding> findings;

    bool plausible() const { return findings.empty(); }
};

PlausibilityReport almost_complex_plausibility(const OrbifoldComplex& oc,
                                               const std::vector<SectorComponent>& components);

}  // namespace orbsec
