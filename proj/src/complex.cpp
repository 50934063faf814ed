#include "orbsec/complex.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

namespace orbsec {

namespace {

// Sorts the fixed-width rows of `flat` lexicographically and drops repeats.
void sort_rows(std::vector<Vertex>& flat, std::size_t width) {
    const std::size_t rows = flat.size() / width;
    bool ascending = true;
    for (std::size_t r = 1; r < rows && ascending; ++r) {
        const Vertex* a = flat.data() + (r - 1) * width;
        ascending = std::lexicographical_compare(a, a + width, a + width, a + 2 * width);
    }
    if (ascending)
        return;
    std::vector<std::uint32_t> order(rows);
    std::iota(order.begin(), order.end(), 0u);
    auto row = [&](std::uint32_t r) { return flat.data() + std::size_t{r} * width; };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(row(a), row(a) + width, row(b), row(b) + width);
    });
    std::vector<Vertex> out;
    out.reserve(flat.size());
    const Vertex* prev = nullptr;
    for (std::uint32_t r : order) {
        const Vertex* cur = row(r);
        if (prev && std::equal(prev, prev + width, cur))
            continue;
        out.insert(out.end(), cur, cur + width);
        prev = cur;
    }
    // `prev` points into `flat`, so swap only after the loop.
    flat.swap(out);
}

std::optional<std::size_t> find_row(const std::vector<Vertex>& flat, std::size_t width,
                                    std::span<const Vertex> key, std::size_t lo, std::size_t hi) {
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const Vertex* r = flat.data() + mid * width;
        if (std::lexicographical_compare(r, r + width, key.begin(), key.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < flat.size() / width && std::equal(key.begin(), key.end(), flat.data() + lo * width))
        return lo;
    return std::nullopt;
}

// first[v] .. first[v + 1] are the rows starting with vertex v. Rows must be
// sorted, so checking the last entry bounds the whole row.
std::vector<std::size_t> first_vertex_index(const std::vector<Vertex>& flat, std::size_t width,
                                            std::size_t vertex_count) {
    std::vector<std::size_t> first(vertex_count + 1, 0);
    for (std::size_t r = 0; r * width < flat.size(); ++r) {
        if (flat[r * width + width - 1] >= vertex_count)
            throw ComplexError("vertex index out of range");
        ++first[flat[r * width] + 1];
    }
    std::partial_sum(first.begin(), first.end(), first.begin());
    return first;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : data_(std::make_shared<Data>()) {}

SimplicialComplex SimplicialComplex::from_maximal(std::size_t vertex_count,
                                                  const std::vector<std::vector<Vertex>>& maximal) {
    std::vector<std::vector<Vertex>> flat;
    std::vector<Vertex> s;
    for (const auto& input : maximal) {
        if (input.empty())
            throw ComplexError("empty simplex in input");
        s = input;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ComplexError("repeated vertex in simplex " + format_simplex(input));
        if (s.back() >= vertex_count)
            throw ComplexError("vertex index out of range in simplex " + format_simplex(input));
        if (s.size() > 24)
            throw ComplexError("simplex dimension too large");
        if (flat.size() < s.size())
            flat.resize(s.size());
        const std::uint32_t full = (1u << s.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            auto& dst = flat[std::popcount(mask) - 1];
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask & (1u << i))
                    dst.push_back(s[i]);
        }
    }
    return finish(vertex_count, std::move(flat));
}

SimplicialComplex SimplicialComplex::from_closed(std::size_t vertex_count,
                                                 std::vector<std::vector<Vertex>> flat_by_dim) {
    for (std::size_t d = 0; d < flat_by_dim.size(); ++d) {
        const auto& f = flat_by_dim[d];
        for (std::size_t i = 0; i < f.size(); i += d + 1) {
            if (!std::is_sorted(f.begin() + i, f.begin() + i + d + 1) ||
                std::adjacent_find(f.begin() + i, f.begin() + i + d + 1) != f.begin() + i + d + 1)
                throw ComplexError("unsorted or repeated vertices in closed input");
        }
    }
    auto out = finish(vertex_count, std::move(flat_by_dim));
    return out;
}

SimplicialComplex SimplicialComplex::finish(std::size_t vertex_count,
                                            std::vector<std::vector<Vertex>> flat) {
    while (!flat.empty() && flat.back().empty())
        flat.pop_back();
    auto data = std::make_shared<Data>();
    data->vertex_count = vertex_count;
    data->dim_offset.assign(1, 0);
    for (std::size_t d = 0; d < flat.size(); ++d) {
        sort_rows(flat[d], d + 1);
        if (flat[d].empty())
            throw ComplexError("complex is not face closed");
        data->dim_offset.push_back(data->dim_offset.back() + flat[d].size() / (d + 1));
    }
    if (data->dim_offset.back() > std::numeric_limits<SimplexId>::max())
        throw ComplexError("too many simplices");

    data->first_row.resize(flat.size());
    for (std::size_t d = 0; d < flat.size(); ++d)
        data->first_row[d] = first_vertex_index(flat[d], d + 1, vertex_count);

    data->boundary.resize(flat.size());
    data->inc_offset.assign(1, 0);
    for (std::size_t d = 0; d < flat.size(); ++d)
        data->inc_offset.push_back(data->inc_offset.back() + (d == 0 ? 0 : flat[d].size()));
    std::vector<Vertex> key;
    for (std::size_t d = 1; d < flat.size(); ++d) {
        const auto& rows = flat[d];
        auto& bnd = data->boundary[d];
        bnd.resize(rows.size());
        for (std::size_t r = 0; r * (d + 1) < rows.size(); ++r) {
            const Vertex* s = rows.data() + r * (d + 1);
            for (std::size_t j = 0; j <= d; ++j) {
                key.assign(s, s + d + 1);
                key.erase(key.begin() + static_cast<std::ptrdiff_t>(j));
                const auto& first = data->first_row[d - 1];
                auto hit = find_row(flat[d - 1], d, key, first[key[0]], first[key[0] + 1]);
                if (!hit)
                    throw ComplexError("complex is not face closed: missing " + format_simplex(key));
                bnd[r * (d + 1) + j] = static_cast<SimplexId>(data->dim_offset[d - 1] + *hit);
            }
        }
    }
    data->flat = std::move(flat);
    return SimplicialComplex(std::move(data));
}

std::size_t SimplicialComplex::count(int dim) const {
    if (dim < 0 || dim > dimension())
        return 0;
    return data_->dim_offset[dim + 1] - data_->dim_offset[dim];
}

int SimplicialComplex::dim(SimplexId id) const {
    const auto& off = data_->dim_offset;
    auto it = std::upper_bound(off.begin(), off.end(), std::size_t{id});
    return static_cast<int>(it - off.begin()) - 1;
}

std::span<const Vertex> SimplicialComplex::simplex(SimplexId id) const {
    const int d = dim(id);
    const std::size_t w = static_cast<std::size_t>(d) + 1;
    const std::size_t r = id - data_->dim_offset[d];
    return {data_->flat[d].data() + r * w, w};
}

SimplexId SimplicialComplex::facet(SimplexId id, std::size_t pos) const {
    return facets(id)[pos];
}

std::span<const SimplexId> SimplicialComplex::facets(SimplexId id) const {
    const int d = dim(id);
    if (d == 0)
        return {};
    const std::size_t w = static_cast<std::size_t>(d) + 1;
    const std::size_t r = id - data_->dim_offset[d];
    return {data_->boundary[d].data() + r * w, w};
}

std::size_t SimplicialComplex::incidence_index(SimplexId id, std::size_t pos) const {
    const int d = dim(id);
    return data_->inc_offset[d] + (id - data_->dim_offset[d]) * (static_cast<std::size_t>(d) + 1) + pos;
}

std::optional<SimplexId> SimplicialComplex::find(std::span<const Vertex> vertices) const {
    if (vertices.empty() || vertices.size() > data_->flat.size())
        return std::nullopt;
    const std::size_t d = vertices.size() - 1;
    if (vertices[0] >= data_->vertex_count)
        return std::nullopt;
    const auto& first = data_->first_row[d];
    auto hit = find_row(data_->flat[d], d + 1, vertices, first[vertices[0]], first[vertices[0] + 1]);
    if (!hit)
        return std::nullopt;
    return static_cast<SimplexId>(data_->dim_offset[d] + *hit);
}

SimplexId SimplicialComplex::id_of(std::span<const Vertex> vertices) const {
    auto id = find(vertices);
    if (!id)
        throw ComplexError("simplex " + format_simplex(vertices) + " not in complex");
    return *id;
}

bool SimplicialComplex::is_face(SimplexId face, SimplexId of) const {
    auto a = simplex(face);
    auto b = simplex(of);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<SimplexId> SimplicialComplex::maximal_simplices() const {
    std::vector<char> covered(size(), 0);
    for (SimplexId id = 0; id < size(); ++id)
        for (SimplexId f : facets(id))
            covered[f] = 1;
    std::vector<SimplexId> out;
    for (SimplexId id = 0; id < size(); ++id)
        if (!covered[id])
            out.push_back(id);
    return out;
}

SimplexSet SimplicialComplex::closure(std::span<const SimplexId> ids) const {
    std::vector<char> in(size(), 0);
    for (SimplexId id : ids)
        in.at(id) = 1;
    // Faces have smaller ids, so one descending sweep suffices.
    for (std::size_t id = size(); id-- > 0;)
        if (in[id])
            for (SimplexId f : facets(static_cast<SimplexId>(id)))
                in[f] = 1;
    SimplexSet out;
    for (SimplexId id = 0; id < size(); ++id)
        if (in[id])
            out.push_back(id);
    return out;
}

bool SimplicialComplex::is_face_closed(std::span<const SimplexId> ids) const {
    std::vector<char> in(size(), 0);
    for (SimplexId id : ids)
        in.at(id) = 1;
    for (SimplexId id : ids)
        for (SimplexId f : facets(id))
            if (!in[f])
                return false;
    return true;
}

std::vector<SimplexId> SimplicialComplex::face_table(SimplexId id) const {
    const std::size_t n = simplex(id).size();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<SimplexId> table(std::size_t{full} + 1, 0);
    table[full] = id;
    // Drop the lowest missing bit of `mask` from the parent mask | bit.
    for (std::uint32_t mask = full; mask-- > 1;) {
        const std::uint32_t missing = ~mask & full;
        const std::uint32_t bit = missing & (~missing + 1);
        const std::uint32_t parent = mask | bit;
        // Position of `bit` among the set bits of `parent`.
        const int pos = std::popcount(parent & (bit - 1));
        table[mask] = facet(table[parent], static_cast<std::size_t>(pos));
    }
    return table;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return data_->vertex_count == other.data_->vertex_count && data_->flat == other.data_->flat;
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal_simplices) {
    if (maximal_simplices.empty())
        throw ComplexError("no simplices given");
    Vertex top = 0;
    for (const auto& s : maximal_simplices)
        for (Vertex v : s)
            top = std::max(top, v);
    return SimplicialComplex::from_maximal(std::size_t{top} + 1, maximal_simplices);
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
    std::int64_t chi = 0;
    for (int d = 0; d <= complex.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(complex.count(d));
    return chi;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex, std::span<const SimplexId> subset) {
    std::int64_t chi = 0;
    for (SimplexId id : subset)
        chi += complex.dim(id) % 2 == 0 ? 1 : -1;
    return chi;
}

std::string format_simplex(std::span<const Vertex> vertices) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < vertices.size(); ++i)
        os << (i ? "," : "") << vertices[i];
    os << ']';
    return os.str();
}

}  // namespace orbsec
