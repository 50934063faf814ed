#pragma once

#include "orbsec/builders.hpp"
#include "orbsec/orbifold.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace orbsec::io {

inline constexpr const char* format_version = "1";

/// Malformed or inconsistent input document. `where` is a JSON pointer to
/// the offending value ("" for the whole document).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/**
 * Orbifold file, format_version "1":
 *
 *   { "format_version": "1",
 *     "vertices": 6,
 *     "maximal_simplices": [[0,2,4], ...],
 *     "isotropy": [{"simplex": [0], "order": 3}],                 // default 1
 *     "restrictions": [{"from": [1,2], "to": [1], "unit": 2}] }  // default 1
 *
 * Faces of the maximal simplices are added on load. `to` must be a facet of
 * `from`, and 1 <= unit < order(from) (unit 1 when the order is 1).
 */
OrbifoldComplex parse_string(const std::string& text);
OrbifoldComplex parse(const std::filesystem::path& path);

/// Canonical form: simplices in id order, only non-default isotropy and
/// restriction entries, one entry per line.
std::string serialize(const OrbifoldComplex& oc);
void serialize(const OrbifoldComplex& oc, const std::filesystem::path& path);

/// Hex SHA-256 of the canonical serialization.
std::string digest(const OrbifoldComplex& oc);

/// Builder spec as JSON, e.g.
///   {"kind": "surface_orbifold", "genus": 0, "cone_orders": [3]}
///   {"kind": "product_with_manifold", "manifold_genus": 1, "parts": [{...}]}
///   {"kind": "random", "seed": 7, "dimension": 4}
builders::BuilderSpec parse_builder_spec(const std::string& text);

}  // namespace orbsec::io
