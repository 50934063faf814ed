#pragma once

#include "orbsec/orbifold.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbsec::builders {

class BuilderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Plain triangulations.
SimplicialComplex octahedron();
/// The 7-vertex torus.
SimplicialComplex torus7();
/// Closed orientable surface of genus g >= 2: the 4g-gon with the standard
/// word, subdivided twice barycentrically.
SimplicialComplex polygon_surface(int genus);
/// Octahedron, 7-vertex torus, or polygon_surface(genus).
SimplicialComplex closed_surface(int genus);
std::size_t closed_surface_vertex_count(int genus);

/// Closed genus-g surface with cone points of the given orders on
/// vertices 0, 1, ... .
OrbifoldComplex surface_orbifold(int genus, const std::vector<Order>& cone_orders);

/// Staircase triangulation of oc x plain; every product simplex carries
/// the order of its projection to oc.
OrbifoldComplex product_with_manifold(const OrbifoldComplex& oc, const SimplicialComplex& plain);

/// Vertices of b are shifted past those of a.
OrbifoldComplex disjoint_union(const OrbifoldComplex& a, const OrbifoldComplex& b);

/// 3-cycle with order m everywhere; the restriction from edge [1,2] onto
/// vertex [1] carries `unit`, all others are the identity.
OrbifoldComplex circle_with_monodromy(Order m, std::uint32_t unit);

struct RandomProfile {
    int dimension = 2;  // 2 or 4
    std::size_t max_vertices = 64;
    Order max_order = 6;
};

/// Valid by construction and deterministic per seed. Strata are random
/// vertices (occasionally edges), optionally on top of a global order;
/// restriction units are a random gauge, so all diamonds commute. The
/// 4-dimensional profile multiplies a random 2-dimensional one by a plain
/// sphere or torus.
OrbifoldComplex random_orbifold(std::uint64_t seed, const RandomProfile& profile = {});

enum class BuilderKind { surface_orbifold, product_with_manifold, disjoint_union, circle_with_monodromy, random };

/// Declarative description of a builder invocation, as accepted by the
/// CLI's `gen` subcommand.
struct BuilderSpec {
    BuilderKind kind = BuilderKind::surface_orbifold;
    int genus = 0;
    std::vector<Order> cone_orders;
    int manifold_genus = 0;           // product_with_manifold: genus of the plain factor
    Order order = 1;                  // circle_with_monodromy
    std::uint32_t unit = 1;           // circle_with_monodromy
    std::uint64_t seed = 0;           // random
    RandomProfile profile;            // random
    std::vector<BuilderSpec> parts;   // product: {orbifold factor}; union: {a, b}
    bool has_seed = false;
};

OrbifoldComplex build(const BuilderSpec& spec);

/// teardrop3, torus_cone2, sphere236, pentacircle, football33xT2, headline4d.
const std::vector<std::string>& fixture_names();
OrbifoldComplex fixture(const std::string& name);

}  // namespace orbsec::builders
