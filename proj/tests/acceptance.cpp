// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "orbsec/builders.hpp"
#include "orbsec/invariants.hpp"
#include "orbsec/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace orbsec;

namespace {

constexpr double time_limit_s = 10.0;
constexpr std::uint64_t random_inputs = 200;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
};

builders::RandomProfile profile_for(std::uint64_t seed) {
    builders::RandomProfile p;
    p.dimension = seed % 10 == 9 ? 4 : 2;
    return p;
}

std::vector<Rational> sorted_chi_orb(const SectorAnalysis& a) {
    std::vector<Rational> out;
    for (const auto& c : a.components)
        out.push_back(c.chi_orb);
    std::sort(out.begin(), out.end());
    return out;
}

bool admits_false(const Decision& d) {
    return d.admits.has_value() && !*d.admits;
}

void teardrop(Outcome& o) {
    const auto oc = builders::fixture("teardrop3");
    const auto a = analyze(oc);
    o.require(euler_satake(oc) == Rational(4, 3), "chi_orb != 4/3");
    o.require(euler_characteristic(oc.complex()) == 2, "chi != 2");
    o.require(a.components.size() == 3, "component count != 3");
    o.require(sorted_chi_orb(a) == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(4, 3)},
              "component chi_orb values differ from {4/3, 1/3, 1/3}");
    const auto gb = verify_inertia_gauss_bonnet(a);
    o.require(gb.ok && gb.sector_sum == 2, "sector sum != 2");
    o.require(admits_false(decide_nonvanishing(a)), "decide != false");
}

void torus_cone(Outcome& o) {
    const auto oc = builders::fixture("torus_cone2");
    o.require(euler_satake(oc) == Rational(-1, 2), "chi_orb != -1/2");
    o.require(euler_characteristic(oc.complex()) == 0, "chi != 0");
    o.require(admits_false(decide_nonvanishing(oc)), "decide != false");
}

void sphere236(Outcome& o) {
    const auto oc = builders::fixture("sphere236");
    const auto a = analyze(oc);
    o.require(euler_satake(oc) == 0, "chi_orb != 0");
    o.require(euler_characteristic(oc.complex()) == 2, "chi != 2");
    o.require(admits_false(decide_nonvanishing(a)), "decide != false");
    const auto& k = oc.complex();
    SimplexId cone6 = 0;
    for (SimplexId v = 0; v < k.count(0); ++v)
        if (oc.order(v) == 6)
            cone6 = v;
    o.require(oc.order(cone6) == 6, "no order-6 vertex");
    const auto induction = verify_induction_identity(a);
    std::size_t gaps = 0;
    for (const auto& e : induction.entries) {
        o.require(e.outcome != InductionOutcome::failed, "induction identity failed");
        const auto& c = a.components[e.component];
        if (c.is_nontwisted || c.image != SimplexSet{cone6})
            continue;
        // Elements whose order is below 6 sit in a larger group at the vertex.
        if (c.element_order < 6) {
            o.require(e.outcome == InductionOutcome::premise_gap, "order-6 vertex component not flagged");
            ++gaps;
        }
    }
    o.require(gaps > 0, "no premise gaps at the order-6 vertex");
}

void headline(Outcome& o) {
    const auto oc = builders::fixture("headline4d");
    const auto a = analyze(oc);
    o.require(euler_satake(oc) == 0, "chi_orb != 0");
    o.require(euler_characteristic(oc.complex()) == 0, "chi != 0");
    const auto d = decide_nonvanishing(a);
    o.require(admits_false(d), "decide != false");
    bool plus2 = false, minus2 = false;
    for (std::size_t w : d.witnesses) {
        plus2 = plus2 || a.components[w].chi == 2;
        minus2 = minus2 || a.components[w].chi == -2;
    }
    o.require(plus2 && minus2, "missing witnesses with chi = +2 and -2");
}

void football(Outcome& o) {
    const auto a = analyze(builders::fixture("football33xT2"));
    const auto d = decide_nonvanishing(a);
    o.require(d.admits.has_value() && *d.admits, "decide != true");
    for (const auto& c : a.components)
        o.require(c.chi == 0 && c.chi_orb == 0, "component with nonzero invariant");
    o.require(d.condition_iii == d.condition_iv, "conditions disagree");
}

std::vector<OrbifoldComplex> fixtures() {
    std::vector<OrbifoldComplex> out;
    for (const auto& name : builders::fixture_names())
        out.push_back(builders::fixture(name));
    return out;
}

void gauss_bonnet(Outcome& o) {
    auto inputs = fixtures();
    for (std::uint64_t seed = 0; seed < random_inputs; ++seed)
        inputs.push_back(builders::random_orbifold(seed, profile_for(seed)));
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto a = analyze(inputs[i]);
        const auto gb = verify_inertia_gauss_bonnet(a);
        Rational sum = 0;
        for (const auto& c : a.components)
            sum += c.chi_orb;
        o.require(gb.ok && sum == Rational(euler_characteristic(inputs[i].complex())),
                  "sector sum differs from chi on input " + std::to_string(i));
        // A failure must surface as a verifier violation (exit code 2).
        report::VerifierResults v;
        v.gauss_bonnet = gb;
        o.require(gb.ok || !v.violations(a, decide_nonvanishing(a)).empty(),
                  "failure not reported as a violation on input " + std::to_string(i));
    }
}

void additivity(Outcome& o) {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < random_inputs; ++seed) {
        const auto oc = builders::random_orbifold(seed, profile_for(seed));
        const auto& k = oc.complex();
        std::vector<SimplexId> left, right;
        for (SimplexId id : k.maximal_simplices())
            (rng() % 2 ? left : right).push_back(id);
        const auto r = verify_additivity(oc, k.closure(left), k.closure(right));
        o.require(r.ok && r.total == euler_satake(oc), "additivity fails on seed " + std::to_string(seed));
    }
}

void consistency(Outcome& o) {
    auto inputs = fixtures();
    for (std::uint64_t seed = 0; seed < random_inputs; ++seed)
        inputs.push_back(builders::random_orbifold(seed, profile_for(seed)));
    std::size_t checked = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto a = analyze(inputs[i]);
        if (!a.plausibility.plausible())
            continue;
        ++checked;
        const auto d = decide_nonvanishing(a);
        o.require(d.condition_iii == d.condition_iv, "conditions disagree on input " + std::to_string(i));
    }
    o.require(checked > 0, "no plausible inputs");
    o.detail << (o.ok ? std::to_string(checked) + " plausible inputs" : "");
}

void subdivision(Outcome& o) {
    for (const auto& name : builders::fixture_names()) {
        const auto oc = builders::fixture(name);
        const auto sd = barycentric_subdivide(oc);
        const auto a = analyze(oc);
        const auto b = analyze(sd);
        o.require(euler_characteristic(oc.complex()) == euler_characteristic(sd.complex()), name + ": chi changed");
        o.require(euler_satake(oc) == euler_satake(sd), name + ": chi_orb changed");
        o.require(a.components.size() == b.components.size(), name + ": component count changed");
        const auto da = decide_nonvanishing(a);
        const auto db = decide_nonvanishing(b);
        o.require(da.admits == db.admits, name + ": verdict changed");
    }
}

void pentacircle(Outcome& o) {
    const auto oc = builders::fixture("pentacircle");
    const auto a = analyze(oc);
    o.require(a.components.size() == 2, "component count != 2");
    if (a.components.size() != 2)
        return;
    const auto& t = a.components[1];
    o.require(t.element_order == 5, "element order != 5");
    o.require(t.nodes.size() == 24, "node count != 24");
    o.require(t.chi == 0, "chi != 0");
    const auto& k = oc.complex();
    const SimplexId edge = k.id_of(std::vector<Vertex>{1, 2});
    const SimplexId vertex = k.id_of(std::vector<Vertex>{1});
    std::vector<Element> orbit;
    Element g = 1;
    for (int i = 0; i < 4; ++i) {
        orbit.push_back(g);
        g = restrict_element(oc, edge, vertex, g);
    }
    o.require(orbit == std::vector<Element>{1, 2, 4, 3}, "monodromy orbit != {1,2,4,3}");
    std::vector<Element> over;
    for (NodeId n : t.nodes)
        if (a.inertia.node(n).simplex == vertex)
            over.push_back(a.inertia.node(n).element);
    std::sort(over.begin(), over.end());
    o.require(over == std::vector<Element>{1, 2, 3, 4}, "component misses part of the orbit");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"teardrop3 invariants and verdict", teardrop},
        {"torus_cone2: chi = 0 yet no field", torus_cone},
        {"sphere236: chi_orb = 0 yet no field, premise gaps", sphere236},
        {"headline4d: chi = chi_orb = 0 yet no field", headline},
        {"football33xT2 admits a field", football},
        {"sector Gauss-Bonnet on fixtures and random inputs", gauss_bonnet},
        {"additivity on random covers", additivity},
        {"chi and chi_orb conditions agree on plausible inputs", consistency},
        {"subdivision invariance", subdivision},
        {"pentacircle monodromy orbit", pentacircle},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(seconds < time_limit_s, "took longer than the time limit");
        failures += o.ok ? 0 : 1;
        const auto detail = o.detail.str();
        std::printf("[%2zu] %s  %-52s %6.2fs%s%s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    seconds, detail.empty() ? "" : "  ", detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
