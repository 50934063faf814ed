#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbsec {

using Vertex = std::uint32_t;
using SimplexId = std::uint32_t;

/// Raised when a complex cannot be built from its input (empty input,
/// repeated vertices, ...).
class ComplexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sorted list of simplex ids; the representation used for subcomplexes.
using SimplexSet = std::vector<SimplexId>;

/**
 * Immutable, face-closed abstract simplicial complex.
 *
 * Simplices are stored per dimension as flat vertex arrays, sorted
 * lexicographically. Ids are assigned in (dimension, lex) order, so every
 * proper face of a simplex has a smaller id than the simplex itself.
 * Copies share storage.
 */
class SimplicialComplex {
public:
    SimplicialComplex();

    /// Face closure of the given maximal simplices. Vertex lists may be
    /// unsorted; a list containing the same vertex twice is rejected.
    static SimplicialComplex from_maximal(std::size_t vertex_count,
                                          const std::vector<std::vector<Vertex>>& maximal);

    /// Takes already face-closed per-dimension flat arrays (rows sorted
    /// internally, may be in any order). Used by constructions that
    /// enumerate every simplex directly.
    static SimplicialComplex from_closed(std::size_t vertex_count,
                                         std::vector<std::vector<Vertex>> flat_by_dim);

    std::size_t vertex_count() const { return data_->vertex_count; }
    std::size_t size() const { return data_->dim_offset.back(); }
    bool empty() const { return size() == 0; }
    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(data_->flat.size()) - 1; }

    std::size_t count(int dim) const;
    SimplexId first_id(int dim) const { return static_cast<SimplexId>(data_->dim_offset[dim]); }

    int dim(SimplexId id) const;
    std::span<const Vertex> simplex(SimplexId id) const;

    /// Facet obtained by deleting the vertex at position `pos`.
    SimplexId facet(SimplexId id, std::size_t pos) const;
    std::span<const SimplexId> facets(SimplexId id) const;

    /// Dense index of the incidence (id, facet at `pos`); ranges over
    /// [0, incidence_count()).
    std::size_t incidence_index(SimplexId id, std::size_t pos) const;
    std::size_t incidence_count() const { return data_->inc_offset.back(); }

    std::optional<SimplexId> find(std::span<const Vertex> vertices) const;
    SimplexId id_of(std::span<const Vertex> vertices) const;

    /// True when `face` is a (not necessarily proper) face of `of`.
    bool is_face(SimplexId face, SimplexId of) const;

    /// Simplices not contained in a larger one, in id order.
    std::vector<SimplexId> maximal_simplices() const;

    /// Smallest face-closed set containing `ids`.
    SimplexSet closure(std::span<const SimplexId> ids) const;
    bool is_face_closed(std::span<const SimplexId> ids) const;

    /// Ids of all faces of `id`, indexed by vertex bitmask (bit i keeps the
    /// i-th vertex). Entry 0 is unused.
    std::vector<SimplexId> face_table(SimplexId id) const;

    bool operator==(const SimplicialComplex& other) const;

private:
    struct Data {
        std::size_t vertex_count = 0;
        std::vector<std::vector<Vertex>> flat;      // per dim, (d+1) entries per simplex
        std::vector<std::size_t> dim_offset{0};     // first id of each dim, plus total
        std::vector<std::vector<SimplexId>> boundary;  // per dim >= 1, (d+1) facet ids per simplex
        std::vector<std::size_t> inc_offset{0};     // first incidence index of each dim, plus total
        std::vector<std::vector<std::size_t>> first_row;  // per dim, row range by first vertex
    };

    explicit SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static SimplicialComplex finish(std::size_t vertex_count, std::vector<std::vector<Vertex>> flat);

    std::shared_ptr<const Data> data_;
};

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal_simplices);

/// Alternating count over the whole complex.
std::int64_t euler_characteristic(const SimplicialComplex& complex);
/// Alternating count over a subset of simplices.
std::int64_t euler_characteristic(const SimplicialComplex& complex, std::span<const SimplexId> subset);

std::string format_simplex(std::span<const Vertex> vertices);

}  // namespace orbsec
