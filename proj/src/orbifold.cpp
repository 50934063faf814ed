#include "orbsec/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbsec {

CyclicLabeling CyclicLabeling::trivial(const SimplicialComplex& complex) {
    return {std::vector<Order>(complex.size(), 1), std::vector<std::uint32_t>(complex.incidence_count(), 1)};
}

OrbifoldComplex::OrbifoldComplex(SimplicialComplex complex)
    : OrbifoldComplex(complex, CyclicLabeling::trivial(complex)) {}

OrbifoldComplex::OrbifoldComplex(SimplicialComplex complex, CyclicLabeling labeling)
    : complex_(std::move(complex)) {
    if (labeling.order.size() != complex_.size())
        throw LabelError("labeling has " + std::to_string(labeling.order.size()) + " orders for " +
                         std::to_string(complex_.size()) + " simplices");
    if (labeling.unit.size() != complex_.incidence_count())
        throw LabelError("labeling unit table does not match the facet incidences");
    for (SimplexId id = 0; id < complex_.size(); ++id)
        if (labeling.order[id] == 0)
            throw LabelError("isotropy order 0 on simplex " + format_simplex(complex_.simplex(id)));
    for (std::uint32_t u : labeling.unit)
        if (u == 0)
            throw LabelError("restriction unit 0");
    labeling_ = std::make_shared<const CyclicLabeling>(std::move(labeling));
}

std::uint64_t OrbifoldComplex::unit_between(SimplexId from, SimplexId to) const {
    const std::uint64_t m = order(from);
    auto target = complex_.simplex(to);
    std::uint64_t u = 1 % m;
    SimplexId cur = from;
    while (cur != to) {
        auto s = complex_.simplex(cur);
        std::size_t pos = 0;
        while (pos < s.size() && std::binary_search(target.begin(), target.end(), s[pos]))
            ++pos;
        if (pos == s.size() || s.size() <= target.size())
            throw LabelError(format_simplex(target) + " is not a face of " +
                             format_simplex(complex_.simplex(from)));
        u = (u * unit(cur, pos)) % m;
        cur = complex_.facet(cur, pos);
    }
    return u;
}

bool OrbifoldComplex::is_reduced() const {
    for (SimplexId id : complex_.maximal_simplices())
        if (order(id) != 1)
            return false;
    return true;
}

std::string to_string(FindingKind kind) {
    switch (kind) {
    case FindingKind::divisibility: return "divisibility";
    case FindingKind::unit_coprimality: return "unit_coprimality";
    case FindingKind::diamond: return "diamond";
    case FindingKind::not_pure: return "not_pure";
    case FindingKind::facet_count: return "facet_count";
    }
    return "unknown";
}

ValidationReport validate(const OrbifoldComplex& oc, ValidationMode mode) {
    const auto& k = oc.complex();
    ValidationReport report;
    report.mode = mode;
    auto name = [&](SimplexId id) { return format_simplex(k.simplex(id)); };

    for (SimplexId id = 0; id < k.size(); ++id) {
        const Order m = oc.order(id);
        const auto facets = k.facets(id);
        const auto units = oc.units(id);
        for (std::size_t pos = 0; pos < facets.size(); ++pos) {
            const Order mf = oc.order(facets[pos]);
            if (mf % m != 0)
                report.findings.push_back({FindingKind::divisibility, id, facets[pos],
                                           "order " + std::to_string(m) + " on " + name(id) +
                                               " does not divide order " + std::to_string(mf) +
                                               " on face " + name(facets[pos])});
            if (m > 1 && std::gcd<std::uint64_t, std::uint64_t>(units[pos], m) != 1)
                report.findings.push_back({FindingKind::unit_coprimality, id, facets[pos],
                                           "unit " + std::to_string(units[pos]) + " on " + name(id) + " -> " +
                                               name(facets[pos]) + " is not invertible mod " +
                                               std::to_string(m)});
        }
    }

    // Both facet chains onto every codimension-2 face must agree. Nothing to
    // compare modulo 1.
    for (int d = 2; d <= k.dimension(); ++d) {
        const SimplexId end = k.first_id(d) + static_cast<SimplexId>(k.count(d));
        for (SimplexId id = k.first_id(d); id < end; ++id) {
            const std::uint64_t m = oc.order(id);
            if (m == 1)
                continue;
            const auto facets = k.facets(id);
            const auto units = oc.units(id);
            for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
                for (std::size_t j = i + 1; j <= static_cast<std::size_t>(d); ++j) {
                    const SimplexId a = facets[i];  // drop i, then j (now at j - 1)
                    const SimplexId b = facets[j];  // drop j, then i
                    const SimplexId face = k.facet(a, j - 1);
                    if (oc.order(a) % m || oc.order(b) % m || oc.order(face) % oc.order(a) ||
                        oc.order(face) % oc.order(b))
                        continue;  // already reported as a divisibility finding
                    const std::uint64_t ua = units[i] * std::uint64_t{oc.unit(a, j - 1)} % m;
                    const std::uint64_t ub = units[j] * std::uint64_t{oc.unit(b, i)} % m;
                    if (ua != ub)
                        report.findings.push_back(
                            {FindingKind::diamond, id, face,
                             "restrictions from " + name(id) + " to " + name(face) + " disagree (units " +
                                 std::to_string(ua) + " and " + std::to_string(ub) + " mod " +
                                 std::to_string(m) + ")"});
                }
            }
        }
    }

    if (mode == ValidationMode::strict && !k.empty()) {
        const int top = k.dimension();
        for (SimplexId id : k.maximal_simplices())
            if (k.dim(id) != top)
                report.findings.push_back({FindingKind::not_pure, id, std::nullopt,
                                           "maximal simplex " + name(id) + " has dimension " +
                                               std::to_string(k.dim(id)) + " < " + std::to_string(top)});
        if (top >= 1) {
            std::vector<std::uint32_t> cofaces(k.count(top - 1), 0);
            const SimplexId base = k.first_id(top - 1);
            for (SimplexId id = k.first_id(top); id < k.size(); ++id)
                for (SimplexId f : k.facets(id))
                    ++cofaces[f - base];
            for (std::size_t i = 0; i < cofaces.size(); ++i)
                if (cofaces[i] != 2) {
                    const auto id = static_cast<SimplexId>(base + i);
                    report.findings.push_back({FindingKind::facet_count, id, std::nullopt,
                                               "codimension-1 simplex " + name(id) + " bounds " +
                                                   std::to_string(cofaces[i]) + " top simplices"});
                }
        }
    }
    return report;
}

Order element_order(Element g, Order m) {
    return m / std::gcd(g % m, m);
}

Element restrict_element(const OrbifoldComplex& oc, SimplexId from, SimplexId to, Element g) {
    const auto& k = oc.complex();
    if (!k.is_face(to, from))
        throw LabelError(format_simplex(k.simplex(to)) + " is not a face of " + format_simplex(k.simplex(from)));
    const std::uint64_t m = oc.order(from);
    const std::uint64_t mt = oc.order(to);
    if (g >= m)
        throw LabelError("element " + std::to_string(g) + " out of range for order " + std::to_string(m));
    if (mt % m != 0)
        throw LabelError("order " + std::to_string(m) + " does not divide " + std::to_string(mt));
    const std::uint64_t u = oc.unit_between(from, to);
    return static_cast<Element>((g * u % m) * (mt / m));
}

Rational euler_satake(const OrbifoldComplex& oc) {
    WeightedSum sum;
    const auto& k = oc.complex();
    for (SimplexId id = 0; id < k.size(); ++id)
        sum.add(oc.order(id), k.dim(id) % 2 == 0 ? 1 : -1);
    return sum.value();
}

Rational euler_satake(const OrbifoldComplex& oc, std::span<const SimplexId> subset) {
    WeightedSum sum;
    for (SimplexId id : subset)
        sum.add(oc.order(id), oc.complex().dim(id) % 2 == 0 ? 1 : -1);
    return sum.value();
}

namespace {

// Depth-first over chains c_0 < c_1 < ... with children in ascending id
// order, so each length comes out in lexicographic order.
void emit_chains(const std::vector<std::vector<SimplexId>>& cofaces, std::vector<SimplexId>& chain,
                 std::vector<std::vector<Vertex>>& flat) {
    auto& dst = flat[chain.size() - 1];
    dst.insert(dst.end(), chain.begin(), chain.end());
    for (SimplexId next : cofaces[chain.back()]) {
        chain.push_back(next);
        emit_chains(cofaces, chain, flat);
        chain.pop_back();
    }
}

}  // namespace

OrbifoldComplex barycentric_subdivide(const OrbifoldComplex& oc) {
    const auto& k = oc.complex();
    // All proper cofaces of every simplex, ascending.
    std::vector<std::vector<SimplexId>> cofaces(k.size());
    for (SimplexId id = 0; id < k.size(); ++id) {
        const auto table = k.face_table(id);
        for (std::size_t mask = 1; mask + 1 < table.size(); ++mask)
            cofaces[table[mask]].push_back(id);
    }
    std::vector<std::vector<Vertex>> flat(static_cast<std::size_t>(std::max(k.dimension() + 1, 0)));
    std::vector<SimplexId> chain;
    for (SimplexId id = 0; id < k.size(); ++id) {
        chain.assign(1, id);
        emit_chains(cofaces, chain, flat);
    }
    auto sd = SimplicialComplex::from_closed(k.size(), std::move(flat));

    CyclicLabeling labels;
    labels.order.resize(sd.size());
    labels.unit.assign(sd.incidence_count(), 1);
    for (SimplexId id = 0; id < sd.size(); ++id) {
        auto s = sd.simplex(id);
        const SimplexId top = s.back();
        const Order m = oc.order(top);
        labels.order[id] = m;
        if (s.size() >= 2 && m > 1) {
            // Only dropping the top of the chain changes the stratum.
            const auto u = oc.unit_between(top, s[s.size() - 2]);
            labels.unit[sd.incidence_index(id, s.size() - 1)] = static_cast<std::uint32_t>(u);
        }
    }
    return OrbifoldComplex(std::move(sd), std::move(labels));
}

}  // namespace orbsec
