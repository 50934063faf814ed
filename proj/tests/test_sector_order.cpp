#include "orbsec/builders.hpp"
#include "orbsec/invariants.hpp"

#include <doctest.h>

using namespace orbsec;

TEST_CASE("poset of the teardrop") {
    const auto a = analyze(builders::fixture("teardrop3"));
    const auto& p = a.poset;
    REQUIRE(p.size() == 3);
    CHECK(p.equivalent(1, 2));
    CHECK(p.strictly_below(1, 0));
    CHECK(p.strictly_below(2, 0));
    CHECK_FALSE(p.leq(0, 1));
    CHECK(p.strict_pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 0}});
    CHECK(p.strict_predecessors(0) == std::vector<std::size_t>{1, 2});
    REQUIRE(p.classes().size() == 2);
    CHECK(p.classes()[0] == std::vector<std::size_t>{0});
    CHECK(p.classes()[1] == std::vector<std::size_t>{1, 2});
    CHECK(p.class_of(2) == 1);
    CHECK(p.minimal_classes() == std::vector<std::size_t>{1});
    CHECK(p.is_minimal(1));
    CHECK_FALSE(p.is_minimal(0));
}

TEST_CASE("poset axioms") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto a = analyze(builders::random_orbifold(seed));
        const auto& p = a.poset;
        const auto n = p.size();
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(p.leq(i, i));
            for (std::size_t j = 0; j < n; ++j) {
                const auto& ii = a.components[i].image;
                const auto& jj = a.components[j].image;
                CHECK(p.leq(i, j) == std::includes(jj.begin(), jj.end(), ii.begin(), ii.end()));
                for (std::size_t k = 0; k < n; ++k)
                    if (p.leq(i, j) && p.leq(j, k))
                        CHECK(p.leq(i, k));
            }
        }
        std::size_t members = 0;
        for (const auto& c : p.classes()) {
            members += c.size();
            for (std::size_t x : c)
                CHECK(p.equivalent(x, c.front()));
        }
        CHECK(members == n);
        // Minimal classes have no strict predecessor.
        for (std::size_t m : p.minimal_classes())
            CHECK(p.strict_predecessors(p.classes()[m].front()).empty());
    }
}

TEST_CASE("minimal components have trivial action") {
    for (const auto& name : {"teardrop3", "torus_cone2", "sphere236", "football33xT2"}) {
        CAPTURE(name);
        const auto a = analyze(builders::fixture(name));
        const auto r = check_minimal_components(a.inertia, a.components, a.poset);
        CHECK(r.passed());
        CHECK(r.warnings().empty());
        for (const auto& c : r.checks) {
            CHECK(c.constant_order);
            CHECK(c.pure);
        }
    }
}

TEST_CASE("minimal component warnings") {
    // A dangling edge: the only component is minimal but not pure.
    const auto a = analyze(OrbifoldComplex(build_complex({{0, 1, 2}, {2, 3}})));
    const auto r = check_minimal_components(a.inertia, a.components, a.poset);
    CHECK_FALSE(r.passed());
    CHECK(r.warnings() == std::vector<std::size_t>{0});
}

TEST_CASE("intersection closure") {
    for (const auto& name : {"teardrop3", "torus_cone2", "sphere236", "football33xT2", "pentacircle"}) {
        CAPTURE(name);
        const auto a = analyze(builders::fixture(name));
        const auto r = check_intersection_closure(a.components);
        CHECK(r.passed());
        CHECK(r.pairs_checked == a.components.size() * (a.components.size() - 1) / 2);
    }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto a = analyze(builders::random_orbifold(seed));
        if (a.plausibility.plausible())
            CHECK(check_intersection_closure(a.components).passed());
    }
}

TEST_CASE("embedded nodes") {
    const auto a = analyze(builders::fixture("teardrop3"));
    const auto nodes = embedded_nodes(a.inertia, a.components[1], a.components[0]);
    REQUIRE(nodes.size() == 1);
    CHECK(a.inertia.node(nodes[0]) == InertiaNode{0, 0});
    CHECK_THROWS_AS(embedded_nodes(a.inertia, a.components[0], a.components[1]), std::invalid_argument);
}
