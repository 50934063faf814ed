#pragma once

#include "orbsec/orbifold.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace support {

using orbsec::Order;
using orbsec::Vertex;

struct Restriction {
    std::vector<Vertex> from;
    std::vector<Vertex> to;
    std::uint32_t unit;
};

inline orbsec::OrbifoldComplex labeled(const orbsec::SimplicialComplex& k,
                                       const std::vector<std::pair<std::vector<Vertex>, Order>>& orders,
                                       const std::vector<Restriction>& restrictions = {}) {
    auto labels = orbsec::CyclicLabeling::trivial(k);
    for (const auto& [s, m] : orders)
        labels.order[k.id_of(s)] = m;
    for (const auto& r : restrictions) {
        const auto from = k.id_of(r.from);
        std::size_t pos = 0;
        while (pos < r.to.size() && r.from[pos] == r.to[pos])
            ++pos;
        labels.unit[k.incidence_index(from, pos)] = r.unit;
    }
    return orbsec::OrbifoldComplex(k, std::move(labels));
}

}  // namespace support
