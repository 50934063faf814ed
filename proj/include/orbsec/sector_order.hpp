#pragma once

#include "orbsec/inertia.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orbsec {

/// Components ordered by containment of their images.
class SectorPoset {
public:
    SectorPoset() = default;
    explicit SectorPoset(const std::vector<SectorComponent>& components);

    std::size_t size() const { return n_; }
    /// image(a) is a subset of image(b).
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
    bool equivalent(std::size_t a, std::size_t b) const { return leq(a, b) && leq(b, a); }
    bool strictly_below(std::size_t a, std::size_t b) const { return leq(a, b) && !leq(b, a); }

    /// Pairs (a, b) with a strictly below b, in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
    std::vector<std::size_t> strict_predecessors(std::size_t b) const;

    /// Equal-image classes, each sorted, ordered by smallest member.
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t c) const { return class_of_[c]; }
    /// Indices into classes() of the classes with no strict predecessor.
    const std::vector<std::size_t>& minimal_classes() const { return minimal_; }
    bool is_minimal(std::size_t c) const;

private:
    std::size_t n_ = 0;
    std::vector<char> leq_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
    std::vector<std::size_t> minimal_;
};

SectorPoset image_poset(const std::vector<SectorComponent>& components);

struct MinimalComponentCheck {
    std::size_t component;
    bool constant_order;
    bool pure;
    /// The element generates the isotropy group at every node.
    bool generates;
    std::string note;
};

/// Minimal components should be manifolds with trivial action: constant
/// isotropy order and pure dimension. Violations are warnings.
struct MinimalComponentsReport {
    std::vector<MinimalComponentCheck> checks;

    bool passed() const;
    std::vector<std::size_t> warnings() const;
};

MinimalComponentsReport check_minimal_components(const InertiaComplex& inertia,
                                                 const std::vector<SectorComponent>& components,
                                                 const SectorPoset& poset);

struct IntersectionFailure {
    std::size_t a;
    std::size_t b;
    /// Simplices of the intersection not covered by any component image
    /// inside it.
    SimplexSet uncovered;
};

struct IntersectionClosureReport {
    std::size_t pairs_checked = 0;
    std::vector<IntersectionFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// For every pair, the intersection of the images must be a union of
/// component images.
IntersectionClosureReport check_intersection_closure(const std::vector<SectorComponent>& components);

/// Nodes of `target` lying over image(sub). Throws std::invalid_argument
/// unless image(sub) is contained in image(target).
std::vector<NodeId> embedded_nodes(const InertiaComplex& inertia, const SectorComponent& sub,
                                   const SectorComponent& target);

}  // namespace orbsec
