#pragma once

#include "orbsec/complex.hpp"
#include "orbsec/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbsec {

using Order = std::uint32_t;
using Element = std::uint32_t;

class LabelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Cyclic isotropy data on a complex.
 *
 * `order[id]` is the order m of the cyclic group on the open stratum of
 * simplex `id`. `unit[incidence_index(id, pos)]` encodes the monomorphism
 * Z_{m_id} -> Z_{m_facet}, sending the generator to unit * (m_facet / m_id).
 */
struct CyclicLabeling {
    std::vector<Order> order;
    std::vector<std::uint32_t> unit;

    static CyclicLabeling trivial(const SimplicialComplex& complex);
};

/**
 * A simplicial complex with a cyclic isotropy labeling. Immutable; copies
 * share storage. Construction only checks shapes and ranges; the label
 * axioms are checked by validate().
 */
class OrbifoldComplex {
public:
    OrbifoldComplex() : OrbifoldComplex(SimplicialComplex{}) {}
    explicit OrbifoldComplex(SimplicialComplex complex);
    OrbifoldComplex(SimplicialComplex complex, CyclicLabeling labeling);

    const SimplicialComplex& complex() const { return complex_; }
    const CyclicLabeling& labeling() const { return *labeling_; }

    Order order(SimplexId id) const { return labeling_->order[id]; }
    std::uint32_t unit(SimplexId id, std::size_t pos) const {
        return labeling_->unit[complex_.incidence_index(id, pos)];
    }
    /// Units of every facet incidence of `id`, by facet position.
    std::span<const std::uint32_t> units(SimplexId id) const {
        const auto n = complex_.facets(id).size();
        if (n == 0)
            return {};
        return {labeling_->unit.data() + complex_.incidence_index(id, 0), n};
    }

    /// Unit of the composite monomorphism from `from` down to its face `to`,
    /// taken along the chain that drops the lowest extra vertex first.
    /// Reduced modulo order(from).
    std::uint64_t unit_between(SimplexId from, SimplexId to) const;

    /// All maximal simplices carry the trivial group.
    bool is_reduced() const;

private:
    SimplicialComplex complex_;
    std::shared_ptr<const CyclicLabeling> labeling_;
};

enum class ValidationMode { lax, strict };

enum class FindingKind { divisibility, unit_coprimality, diamond, not_pure, facet_count };

std::string to_string(FindingKind kind);

struct Finding {
    FindingKind kind;
    SimplexId simplex;
    std::optional<SimplexId> face;
    std::string message;
};

struct ValidationReport {
    ValidationMode mode = ValidationMode::lax;
    std::vector<Finding> findings;

    bool ok() const { return findings.empty(); }
};

ValidationReport validate(const OrbifoldComplex& oc, ValidationMode mode = ValidationMode::lax);

/// Image of g in Z_{m_to} under the restriction from `from` to its face `to`.
Element restrict_element(const OrbifoldComplex& oc, SimplexId from, SimplexId to, Element g);

/// Additive order of g in Z_m.
Order element_order(Element g, Order m);

/// Sum of (-1)^dim / m over all simplices.
Rational euler_satake(const OrbifoldComplex& oc);
Rational euler_satake(const OrbifoldComplex& oc, std::span<const SimplexId> subset);

/// Barycentric subdivision. A chain s_0 < ... < s_k becomes a simplex on the
/// barycenters (vertex i of the result is the barycenter of simplex id i)
/// labeled by the order of s_k.
OrbifoldComplex barycentric_subdivide(const OrbifoldComplex& oc);

}  // namespace orbsec
