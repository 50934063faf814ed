#include "orbsec/builders.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

namespace orbsec::builders {

SimplicialComplex octahedron() {
    // Antipodal pairs {0,1}, {2,3}, {4,5}.
    std::vector<std::vector<Vertex>> tris;
    for (Vertex a : {0u, 1u})
        for (Vertex b : {2u, 3u})
            for (Vertex c : {4u, 5u})
                tris.push_back({a, b, c});
    return SimplicialComplex::from_maximal(6, tris);
}

SimplicialComplex torus7() {
    std::vector<std::vector<Vertex>> tris;
    for (Vertex i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_maximal(7, tris);
}

SimplicialComplex polygon_surface(int genus) {
    if (genus < 2)
        throw BuilderError("polygon_surface needs genus >= 2");
    const auto g = static_cast<Vertex>(genus);
    const Vertex sides = 4 * g;
    // Cells of the once-subdivided polygon: the corner class, one midpoint
    // per generator, the center, then edges and triangles.
    const Vertex corner = 0;
    auto midpoint = [](Vertex gen) { return 1 + gen; };
    const Vertex center = 2 * g + 1;
    const Vertex half_base = center + 1;            // half-sides: 2 per generator
    const Vertex spoke_mid_base = half_base + 4 * g; // center to side midpoint, per side
    const Vertex spoke_corner_base = spoke_mid_base + sides;
    const Vertex tri_base = spoke_corner_base + sides;
    const Vertex cell_count = tri_base + 2 * sides;

    std::vector<std::vector<Vertex>> cell_vertices(cell_count);
    auto half = [&](Vertex gen, Vertex h) { return half_base + 2 * gen + h; };
    for (Vertex gen = 0; gen < 2 * g; ++gen)
        for (Vertex h = 0; h < 2; ++h)
            cell_vertices[half(gen, h)] = {corner, midpoint(gen)};

    std::vector<std::vector<Vertex>> chains;
    auto add_triangle = [&](Vertex tri, std::vector<Vertex> edges) {
        for (Vertex e : edges)
            for (Vertex v : cell_vertices[e])
                chains.push_back({v, e, tri});
    };
    for (Vertex i = 0; i < sides; ++i) {
        // Word a_t b_t a_t^-1 b_t^-1 per block of four sides.
        const Vertex block = i / 4, slot = i % 4;
        const Vertex gen = 2 * block + (slot % 2);
        const bool forward = slot < 2;
        const Vertex first_half = forward ? 0 : 1;
        const Vertex spoke_mid = spoke_mid_base + i;
        const Vertex spoke_here = spoke_corner_base + i;
        const Vertex spoke_next = spoke_corner_base + (i + 1) % sides;
        cell_vertices[spoke_mid] = {midpoint(gen), center};
        cell_vertices[spoke_here] = {corner, center};
        cell_vertices[spoke_next] = {corner, center};
        add_triangle(tri_base + 2 * i, {half(gen, first_half), spoke_mid, spoke_here});
        add_triangle(tri_base + 2 * i + 1, {half(gen, 1 - first_half), spoke_mid, spoke_next});
    }
    for (auto& c : chains)
        std::sort(c.begin(), c.end());
    return SimplicialComplex::from_maximal(cell_count, chains);
}

SimplicialComplex closed_surface(int genus) {
    if (genus < 0)
        throw BuilderError("negative genus");
    if (genus == 0)
        return octahedron();
    if (genus == 1)
        return torus7();
    return polygon_surface(genus);
}

OrbifoldComplex surface_orbifold(int genus, const std::vector<Order>& cone_orders) {
    auto surface = closed_surface(genus);
    if (euler_characteristic(surface) != 2 - 2 * genus)
        throw BuilderError("surface triangulation failed its Euler characteristic check");
    if (cone_orders.size() > surface.vertex_count())
        throw BuilderError("more cone points than vertices");
    auto labels = CyclicLabeling::trivial(surface);
    for (std::size_t i = 0; i < cone_orders.size(); ++i) {
        if (cone_orders[i] < 2)
            throw BuilderError("cone order must be at least 2");
        const Vertex v = static_cast<Vertex>(i);
        labels.order[surface.id_of(std::span<const Vertex>(&v, 1))] = cone_orders[i];
    }
    return OrbifoldComplex(std::move(surface), std::move(labels));
}

OrbifoldComplex product_with_manifold(const OrbifoldComplex& oc, const SimplicialComplex& plain) {
    const auto& a = oc.complex();
    if (a.empty() || plain.empty())
        throw BuilderError("product with an empty factor");
    const std::size_t nb = plain.vertex_count();
    auto pair_id = [nb](Vertex x, Vertex y) { return static_cast<Vertex>(x * nb + y); };

    std::vector<std::vector<Vertex>> maximal;
    std::vector<Vertex> cell;
    for (SimplexId ia : a.maximal_simplices()) {
        auto alpha = a.simplex(ia);
        for (SimplexId ib : plain.maximal_simplices()) {
            auto beta = plain.simplex(ib);
            const std::size_t p = alpha.size() - 1, q = beta.size() - 1;
            // Each lattice path from (0,0) to (p,q) is one top simplex.
            std::vector<char> steps(p + q, 0);
            std::fill(steps.begin() + static_cast<std::ptrdiff_t>(q), steps.end(), 1);
            do {
                cell.clear();
                std::size_t i = 0, j = 0;
                cell.push_back(pair_id(alpha[0], beta[0]));
                for (char step : steps) {
                    (step ? i : j) += 1;
                    cell.push_back(pair_id(alpha[i], beta[j]));
                }
                maximal.push_back(cell);
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    auto product = SimplicialComplex::from_maximal(a.vertex_count() * nb, maximal);

    CyclicLabeling labels;
    labels.order.resize(product.size());
    labels.unit.assign(product.incidence_count(), 1);
    std::vector<Vertex> proj;
    for (SimplexId id = 0; id < product.size(); ++id) {
        auto s = product.simplex(id);
        proj.clear();
        for (Vertex v : s)
            proj.push_back(static_cast<Vertex>(v / nb));
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        const SimplexId base = a.id_of(proj);
        labels.order[id] = oc.order(base);
        for (std::size_t pos = 0; s.size() > 1 && pos < s.size(); ++pos) {
            const Vertex x = static_cast<Vertex>(s[pos] / nb);
            const bool shared = (pos > 0 && s[pos - 1] / nb == x) || (pos + 1 < s.size() && s[pos + 1] / nb == x);
            if (shared)
                continue;
            const auto at = static_cast<std::size_t>(std::find(proj.begin(), proj.end(), x) - proj.begin());
            labels.unit[product.incidence_index(id, pos)] = oc.unit(base, at);
        }
    }
    return OrbifoldComplex(std::move(product), std::move(labels));
}

OrbifoldComplex disjoint_union(const OrbifoldComplex& a, const OrbifoldComplex& b) {
    if (b.complex().empty())
        return a;
    if (a.complex().empty())
        return b;
    const auto& ka = a.complex();
    const auto& kb = b.complex();
    const auto shift = static_cast<Vertex>(ka.vertex_count());
    std::vector<std::vector<Vertex>> maximal;
    for (SimplexId id : ka.maximal_simplices()) {
        auto s = ka.simplex(id);
        maximal.emplace_back(s.begin(), s.end());
    }
    for (SimplexId id : kb.maximal_simplices()) {
        auto s = kb.simplex(id);
        auto& dst = maximal.emplace_back();
        for (Vertex v : s)
            dst.push_back(v + shift);
    }
    auto joined = SimplicialComplex::from_maximal(ka.vertex_count() + kb.vertex_count(), maximal);
    CyclicLabeling labels;
    labels.order.resize(joined.size());
    labels.unit.resize(joined.incidence_count());
    std::vector<Vertex> local;
    for (SimplexId id = 0; id < joined.size(); ++id) {
        auto s = joined.simplex(id);
        const bool from_a = s[0] < shift;
        const auto& src = from_a ? a : b;
        local.assign(s.begin(), s.end());
        if (!from_a)
            for (auto& v : local)
                v -= shift;
        const SimplexId sid = src.complex().id_of(local);
        labels.order[id] = src.order(sid);
        for (std::size_t pos = 0; pos < joined.facets(id).size(); ++pos)
            labels.unit[joined.incidence_index(id, pos)] = src.unit(sid, pos);
    }
    return OrbifoldComplex(std::move(joined), std::move(labels));
}

OrbifoldComplex circle_with_monodromy(Order m, std::uint32_t unit) {
    if (m == 0)
        throw BuilderError("order must be positive");
    if (std::gcd<std::uint64_t, std::uint64_t>(unit, m) != 1)
        throw BuilderError("unit " + std::to_string(unit) + " is not invertible mod " + std::to_string(m));
    auto circle = SimplicialComplex::from_maximal(3, {{0, 1}, {0, 2}, {1, 2}});
    auto labels = CyclicLabeling::trivial(circle);
    std::fill(labels.order.begin(), labels.order.end(), m);
    const std::vector<Vertex> edge{1, 2};
    labels.unit[circle.incidence_index(circle.id_of(edge), 1)] = m == 1 ? 1 : unit % m;
    return OrbifoldComplex(std::move(circle), std::move(labels));
}

namespace {

// Portable bounded draw; std distributions differ between standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
    }
    return static_cast<std::uint64_t>((t % static_cast<std::int64_t>(m) + static_cast<std::int64_t>(m)) %
                                      static_cast<std::int64_t>(m));
}

std::uint64_t random_unit(std::mt19937_64& rng, std::uint64_t m) {
    if (m == 1)
        return 1;
    for (;;) {
        const std::uint64_t u = 1 + draw(rng, m - 1);
        if (std::gcd(u, m) == 1)
            return u;
    }
}

// Conjugates every restriction by a random per-simplex unit. Compositions
// along chains change by the same factor, so diamonds still commute.
OrbifoldComplex regauge(const OrbifoldComplex& oc, std::mt19937_64& rng) {
    const auto& k = oc.complex();
    std::vector<std::uint64_t> gauge(k.size());
    for (SimplexId id = 0; id < k.size(); ++id)
        gauge[id] = random_unit(rng, oc.order(id));
    CyclicLabeling labels = oc.labeling();
    for (SimplexId id = 0; id < k.size(); ++id) {
        const std::uint64_t m = oc.order(id);
        if (m == 1)
            continue;
        const std::uint64_t inv = inverse_mod(gauge[id], m);
        auto facets = k.facets(id);
        for (std::size_t pos = 0; pos < facets.size(); ++pos) {
            const std::size_t inc = k.incidence_index(id, pos);
            labels.unit[inc] = static_cast<std::uint32_t>(gauge[facets[pos]] % m * labels.unit[inc] % m * inv % m);
        }
    }
    return OrbifoldComplex(k, std::move(labels));
}

OrbifoldComplex random_surface_orbifold(std::mt19937_64& rng, const RandomProfile& profile) {
    std::vector<int> genera;
    for (int g : {0, 1, 2})
        if (closed_surface_vertex_count(g) <= profile.max_vertices)
            genera.push_back(g);
    const int genus = genera[draw(rng, genera.size())];
    auto surface = closed_surface(genus);
    auto labels = CyclicLabeling::trivial(surface);
    const std::uint64_t order_span = profile.max_order - 1;
    auto random_order = [&] { return static_cast<Order>(2 + draw(rng, order_span)); };

    const Order base = draw(rng, 4) == 0 ? random_order() : 1;
    std::vector<std::vector<Vertex>> strata;
    const std::size_t cones = draw(rng, 4);
    for (std::size_t i = 0; i < cones; ++i)
        strata.push_back({static_cast<Vertex>(draw(rng, surface.vertex_count()))});
    if (draw(rng, 8) == 0) {
        const std::size_t edges = surface.count(1);
        auto e = surface.simplex(static_cast<SimplexId>(surface.first_id(1) + draw(rng, edges)));
        strata.emplace_back(e.begin(), e.end());
    }
    std::fill(labels.order.begin(), labels.order.end(), base);
    for (const auto& stratum : strata) {
        const Order p = random_order();
        const SimplexId sid = surface.id_of(stratum);
        const auto table = surface.face_table(sid);
        for (std::size_t mask = 1; mask < table.size(); ++mask) {
            auto& m = labels.order[table[mask]];
            m = std::lcm(m, base * p);
        }
    }
    return OrbifoldComplex(std::move(surface), std::move(labels));
}

}  // namespace

std::size_t closed_surface_vertex_count(int genus) {
    if (genus == 0)
        return 6;
    if (genus == 1)
        return 7;
    return 2 + 22 * static_cast<std::size_t>(genus);
}

OrbifoldComplex random_orbifold(std::uint64_t seed, const RandomProfile& profile) {
    if (profile.dimension != 2 && profile.dimension != 4)
        throw BuilderError("random profile dimension must be 2 or 4");
    if (profile.max_order < 2)
        throw BuilderError("random profile needs max_order >= 2");
    const std::size_t needed = profile.dimension == 2 ? 6 : 36;
    if (profile.max_vertices < needed)
        throw BuilderError("random profile needs at least " + std::to_string(needed) + " vertices");

    std::mt19937_64 rng(seed);
    if (profile.dimension == 2)
        return regauge(random_surface_orbifold(rng, profile), rng);

    RandomProfile base_profile = profile;
    base_profile.dimension = 2;
    base_profile.max_vertices = std::min<std::size_t>(profile.max_vertices / 6, 7);
    auto base = random_surface_orbifold(rng, base_profile);
    const int plain_genus =
        base.complex().vertex_count() * 7 <= profile.max_vertices ? static_cast<int>(draw(rng, 2)) : 0;
    return regauge(product_with_manifold(base, closed_surface(plain_genus)), rng);
}

OrbifoldComplex build(const BuilderSpec& spec) {
    switch (spec.kind) {
    case BuilderKind::surface_orbifold:
        return surface_orbifold(spec.genus, spec.cone_orders);
    case BuilderKind::product_with_manifold: {
        if (spec.parts.size() != 1)
            throw BuilderError("product_with_manifold takes exactly one orbifold part");
        return product_with_manifold(build(spec.parts[0]), closed_surface(spec.manifold_genus));
    }
    case BuilderKind::disjoint_union: {
        if (spec.parts.size() != 2)
            throw BuilderError("disjoint_union takes exactly two parts");
        return disjoint_union(build(spec.parts[0]), build(spec.parts[1]));
    }
    case BuilderKind::circle_with_monodromy:
        return circle_with_monodromy(spec.order, spec.unit);
    case BuilderKind::random:
        if (!spec.has_seed)
            throw BuilderError("random builder needs a seed");
        return random_orbifold(spec.seed, spec.profile);
    }
    throw BuilderError("unknown builder kind");
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"teardrop3",    "torus_cone2",  "sphere236",
                                                "pentacircle",  "football33xT2", "headline4d"};
    return names;
}

OrbifoldComplex fixture(const std::string& name) {
    if (name == "teardrop3")
        return surface_orbifold(0, {3});
    if (name == "torus_cone2")
        return surface_orbifold(1, {2});
    if (name == "sphere236")
        return surface_orbifold(0, {2, 3, 6});
    if (name == "pentacircle")
        return circle_with_monodromy(5, 2);
    if (name == "football33xT2")
        return product_with_manifold(surface_orbifold(0, {3, 3}), torus7());
    if (name == "headline4d") {
        // Z_3 on {p} x S^2 inside T^2 x S^2, and on {p} x genus-2 inside T^2 x genus-2.
        const auto cone_torus = surface_orbifold(1, {3});
        return disjoint_union(product_with_manifold(cone_torus, octahedron()),
                              product_with_manifold(cone_torus, polygon_surface(2)));
    }
    throw BuilderError("unknown fixture '" + name + "'");
}

}  // namespace orbsec::builders
