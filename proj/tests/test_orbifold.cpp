#include "oracles.hpp"
#include "support.hpp"

#include "orbsec/builders.hpp"
#include "orbsec/orbifold.hpp"

#include <doctest.h>

#include <random>

using namespace orbsec;
using support::labeled;

namespace {

bool has_finding(const ValidationReport& r, FindingKind kind) {
    return std::any_of(r.findings.begin(), r.findings.end(), [&](const Finding& f) { return f.kind == kind; });
}

const SimplicialComplex& triangle() {
    static const auto k = build_complex({{0, 1, 2}});
    return k;
}

std::vector<std::pair<std::vector<Vertex>, Order>> everywhere(const SimplicialComplex& k, Order m) {
    std::vector<std::pair<std::vector<Vertex>, Order>> out;
    for (SimplexId id = 0; id < k.size(); ++id) {
        auto s = k.simplex(id);
        out.emplace_back(std::vector<Vertex>(s.begin(), s.end()), m);
    }
    return out;
}

}  // namespace

TEST_CASE("teardrop Euler-Satake characteristic") {
    const auto oc = builders::fixture("teardrop3");
    // Sphere with one cone point of order 3: 2 - 1 + 1/3.
    CHECK(euler_satake(oc) == Rational(4, 3));
    CHECK(euler_satake(oc) == oracle::euler_satake(oracle::explicit_copy(oc)));
    CHECK(euler_characteristic(oc.complex()) == 2);
    CHECK(validate(oc, ValidationMode::strict).ok());
    CHECK(oc.is_reduced());
}

TEST_CASE("trivial labels reproduce the Euler characteristic") {
    for (int g = 0; g <= 2; ++g) {
        const OrbifoldComplex oc(builders::closed_surface(g));
        CHECK(euler_satake(oc) == Rational(euler_characteristic(oc.complex())));
        CHECK(validate(oc, ValidationMode::strict).ok());
    }
}

TEST_CASE("divisibility violation") {
    const auto oc = labeled(triangle(), {{{0, 1}, 2}});
    const auto r = validate(oc);
    CHECK(has_finding(r, FindingKind::divisibility));
    REQUIRE_FALSE(r.ok());
    CHECK(r.findings.front().message.find("does not divide") != std::string::npos);
}

TEST_CASE("non-invertible unit") {
    const auto k = build_complex({{0, 1}, {1, 2}, {0, 2}});
    const auto oc = labeled(k, everywhere(k, 4), {{{1, 2}, {1}, 2}});
    CHECK(has_finding(validate(oc), FindingKind::unit_coprimality));
}

TEST_CASE("non-commuting diamond") {
    const auto oc = labeled(triangle(), everywhere(triangle(), 5), {{{0, 1, 2}, {1, 2}, 2}});
    const auto r = validate(oc);
    CHECK(has_finding(r, FindingKind::diamond));
    CHECK_FALSE(has_finding(r, FindingKind::divisibility));
}

TEST_CASE("commuting diamond with nontrivial units") {
    // Gauge by a = 2 on [0,1,2]: every facet unit out of the triangle becomes 2.
    const auto oc = labeled(triangle(), everywhere(triangle(), 5),
                            {{{0, 1, 2}, {1, 2}, 2}, {{0, 1, 2}, {0, 2}, 2}, {{0, 1, 2}, {0, 1}, 2}});
    CHECK(validate(oc).ok());
}

TEST_CASE("strict mode checks the pseudomanifold structure") {
    CHECK(validate(OrbifoldComplex(triangle()), ValidationMode::lax).ok());
    const auto r = validate(OrbifoldComplex(triangle()), ValidationMode::strict);
    CHECK(has_finding(r, FindingKind::facet_count));
    const auto mixed = validate(OrbifoldComplex(build_complex({{0, 1, 2}, {2, 3}})), ValidationMode::strict);
    CHECK(has_finding(mixed, FindingKind::not_pure));
    for (const auto& name : builders::fixture_names()) {
        if (name == "headline4d")
            continue;
        CAPTURE(name);
        CHECK(validate(builders::fixture(name), ValidationMode::strict).ok());
    }
}

TEST_CASE("labeling shape errors") {
    const auto& k = triangle();
    auto labels = CyclicLabeling::trivial(k);
    labels.order.pop_back();
    CHECK_THROWS_AS(OrbifoldComplex(k, labels), LabelError);
    labels = CyclicLabeling::trivial(k);
    labels.unit.pop_back();
    CHECK_THROWS_AS(OrbifoldComplex(k, labels), LabelError);
    labels = CyclicLabeling::trivial(k);
    labels.order[0] = 0;
    CHECK_THROWS_AS(OrbifoldComplex(k, labels), LabelError);
    labels = CyclicLabeling::trivial(k);
    labels.unit[0] = 0;
    CHECK_THROWS_AS(OrbifoldComplex(k, labels), LabelError);
}

TEST_CASE("element order") {
    CHECK(element_order(0, 6) == 1);
    CHECK(element_order(1, 6) == 6);
    CHECK(element_order(2, 6) == 3);
    CHECK(element_order(3, 6) == 2);
    CHECK(element_order(4, 6) == 3);
    CHECK(element_order(0, 1) == 1);
}

TEST_CASE("restriction of elements") {
    const auto oc = builders::circle_with_monodromy(5, 2);
    const auto& k = oc.complex();
    const SimplexId edge = k.id_of(std::vector<Vertex>{1, 2});
    const SimplexId v1 = k.id_of(std::vector<Vertex>{1});
    const SimplexId v2 = k.id_of(std::vector<Vertex>{2});
    CHECK(restrict_element(oc, edge, v1, 1) == 2);
    CHECK(restrict_element(oc, edge, v1, 3) == 1);
    CHECK(restrict_element(oc, edge, v2, 3) == 3);
    CHECK(restrict_element(oc, edge, edge, 4) == 4);
    CHECK_THROWS_AS(restrict_element(oc, v1, edge, 0), LabelError);
    CHECK_THROWS_AS(restrict_element(oc, edge, v1, 5), LabelError);

    // Scaling into a larger face group.
    const auto cone = labeled(triangle(), {{{0}, 6}, {{0, 1}, 2}});
    const auto& t = cone.complex();
    CHECK(restrict_element(cone, t.id_of(std::vector<Vertex>{0, 1}), t.id_of(std::vector<Vertex>{0}), 1) == 3);
    CHECK(restrict_element(cone, t.id_of(std::vector<Vertex>{0, 1, 2}), t.id_of(std::vector<Vertex>{0}), 0) == 0);
}

TEST_CASE("restriction is independent of the path") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        builders::RandomProfile profile;
        profile.dimension = seed % 4 == 3 ? 4 : 2;
        const auto oc = builders::random_orbifold(seed, profile);
        const auto& k = oc.complex();
        std::mt19937_64 rng(seed * 31 + 7);
        for (int trial = 0; trial < 30; ++trial) {
            const auto from = static_cast<SimplexId>(k.first_id(k.dimension()) + rng() % k.count(k.dimension()));
            const std::uint64_t m = oc.order(from);
            const auto g = static_cast<Element>(rng() % m);
            // Drop vertices one at a time in a random order, pushing the
            // element through each facet map.
            SimplexId cur = from;
            std::uint64_t x = g;
            const auto steps = rng() % (k.dim(from) + 1);
            for (std::size_t s = 0; s < steps; ++s) {
                const auto pos = rng() % k.facets(cur).size();
                const SimplexId next = k.facet(cur, pos);
                const std::uint64_t mc = oc.order(cur);
                const std::uint64_t mn = oc.order(next);
                x = (oc.unit(cur, pos) * x % mc) * (mn / mc);
                cur = next;
            }
            CAPTURE(seed);
            CHECK(restrict_element(oc, from, cur, g) == x);
        }
    }
}

TEST_CASE("restriction preserves element order") {
    const auto oc = builders::fixture("sphere236");
    const auto& k = oc.complex();
    for (SimplexId id = 0; id < k.size(); ++id)
        for (SimplexId f : k.facets(id))
            for (Element g = 0; g < oc.order(id); ++g)
                CHECK(element_order(restrict_element(oc, id, f, g), oc.order(f)) == element_order(g, oc.order(id)));
}

TEST_CASE("barycentric subdivision preserves the invariants") {
    std::vector<OrbifoldComplex> inputs;
    for (const auto& name : {"teardrop3", "torus_cone2", "sphere236", "pentacircle"})
        inputs.push_back(builders::fixture(name));
    for (std::uint64_t seed = 100; seed < 110; ++seed)
        inputs.push_back(builders::random_orbifold(seed));
    inputs.push_back(labeled(triangle(), everywhere(triangle(), 5),
                             {{{0, 1, 2}, {1, 2}, 2}, {{0, 1, 2}, {0, 2}, 2}, {{0, 1, 2}, {0, 1}, 2}}));
    for (const auto& oc : inputs) {
        const auto sd = barycentric_subdivide(oc);
        CHECK(sd.complex().vertex_count() == oc.complex().size());
        CHECK(validate(sd).ok());
        CHECK(euler_characteristic(sd.complex()) == euler_characteristic(oc.complex()));
        CHECK(euler_satake(sd) == euler_satake(oc));
        CHECK(sd.complex().dimension() == oc.complex().dimension());
        // Vertex i of the subdivision is the barycenter of simplex i.
        for (SimplexId id = 0; id < oc.complex().size(); ++id)
            CHECK(sd.order(sd.complex().id_of(std::vector<Vertex>{id})) == oc.order(id));
    }
}

TEST_CASE("subdivision of a closed surface is a closed surface") {
    const auto sd = barycentric_subdivide(builders::fixture("teardrop3"));
    CHECK(validate(sd, ValidationMode::strict).ok());
    const auto& k = sd.complex();
    const auto& base = builders::fixture("teardrop3").complex();
    // One triangle per flag.
    CHECK(k.count(2) == base.count(2) * 6);
}

TEST_CASE("Euler-Satake over a subset") {
    const auto oc = builders::fixture("teardrop3");
    const std::vector<SimplexId> cone_vertex{0};
    CHECK(euler_satake(oc, cone_vertex) == Rational(1, 3));
    CHECK(euler_satake(oc, std::vector<SimplexId>{}) == 0);
}

TEST_CASE("unit_between composes along facets") {
    const auto oc = builders::circle_with_monodromy(5, 2);
    const auto& k = oc.complex();
    CHECK(oc.unit_between(k.id_of(std::vector<Vertex>{1, 2}), k.id_of(std::vector<Vertex>{1})) == 2);
    CHECK(oc.unit_between(k.id_of(std::vector<Vertex>{1, 2}), k.id_of(std::vector<Vertex>{2})) == 1);
    CHECK_THROWS_AS(oc.unit_between(k.id_of(std::vector<Vertex>{1, 2}), k.id_of(std::vector<Vertex>{0})), LabelError);
}
