#include "orbsec/io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace orbsec::io {

using nlohmann::json;

namespace {

std::uint64_t read_unsigned(const json& j, const std::string& where, std::uint64_t min = 0) {
    if (!j.is_number_integer())
        throw ParseError(where, "expected an integer");
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v < min)
            throw ParseError(where, "must be at least " + std::to_string(min));
        return v;
    }
    const auto v = j.get<std::int64_t>();
    if (v < static_cast<std::int64_t>(min))
        throw ParseError(where, "must be at least " + std::to_string(min));
    return static_cast<std::uint64_t>(v);
}

std::vector<Vertex> read_simplex(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where, "expected a nonempty array of vertex indices");
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto v = read_unsigned(j[i], where + "/" + std::to_string(i));
        if (v > std::numeric_limits<Vertex>::max())
            throw ParseError(where + "/" + std::to_string(i), "vertex index too large");
        out.push_back(static_cast<Vertex>(v));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw ParseError(where, "repeated vertex");
    return out;
}

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError("", std::string("missing field '") + key + "'");
    return *it;
}

json simplex_json(std::span<const Vertex> s) {
    return json(std::vector<Vertex>(s.begin(), s.end()));
}

}  // namespace

OrbifoldComplex parse_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("", "document must be a JSON object");
    const auto& version = require(doc, "format_version");
    if (!version.is_string() || version.get<std::string>() != format_version)
        throw ParseError("/format_version", "unsupported format version " + version.dump());

    const auto vertex_count = read_unsigned(require(doc, "vertices"), "/vertices");
    const auto& maximal_json = require(doc, "maximal_simplices");
    if (!maximal_json.is_array() || maximal_json.empty())
        throw ParseError("/maximal_simplices", "expected a nonempty array");
    std::vector<std::vector<Vertex>> maximal;
    for (std::size_t i = 0; i < maximal_json.size(); ++i) {
        const auto where = "/maximal_simplices/" + std::to_string(i);
        auto s = read_simplex(maximal_json[i], where);
        if (s.back() >= vertex_count)
            throw ParseError(where, "vertex " + std::to_string(s.back()) + " out of range");
        maximal.push_back(std::move(s));
    }
    SimplicialComplex complex;
    try {
        complex = SimplicialComplex::from_maximal(vertex_count, maximal);
    } catch (const ComplexError& e) {
        throw ParseError("/maximal_simplices", e.what());
    }

    auto labels = CyclicLabeling::trivial(complex);
    auto lookup = [&](const std::vector<Vertex>& s, const std::string& where) {
        auto id = complex.find(s);
        if (!id)
            throw ParseError(where, "simplex " + format_simplex(s) + " is not in the complex");
        return *id;
    };

    if (auto it = doc.find("isotropy"); it != doc.end()) {
        if (!it->is_array())
            throw ParseError("/isotropy", "expected an array");
        std::vector<char> seen(complex.size(), 0);
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto where = "/isotropy/" + std::to_string(i);
            const auto& entry = (*it)[i];
            if (!entry.is_object())
                throw ParseError(where, "expected an object");
            const auto id = lookup(read_simplex(require(entry, "simplex"), where + "/simplex"), where + "/simplex");
            const auto order = read_unsigned(require(entry, "order"), where + "/order", 1);
            if (order > std::numeric_limits<Order>::max())
                throw ParseError(where + "/order", "order too large");
            if (seen[id]++)
                throw ParseError(where, "duplicate isotropy entry");
            labels.order[id] = static_cast<Order>(order);
        }
    }

    if (auto it = doc.find("restrictions"); it != doc.end()) {
        if (!it->is_array())
            throw ParseError("/restrictions", "expected an array");
        std::vector<char> seen(complex.incidence_count(), 0);
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto where = "/restrictions/" + std::to_string(i);
            const auto& entry = (*it)[i];
            if (!entry.is_object())
                throw ParseError(where, "expected an object");
            const auto from_s = read_simplex(require(entry, "from"), where + "/from");
            const auto to_s = read_simplex(require(entry, "to"), where + "/to");
            const auto from = lookup(from_s, where + "/from");
            if (to_s.size() + 1 != from_s.size() ||
                !std::includes(from_s.begin(), from_s.end(), to_s.begin(), to_s.end()))
                throw ParseError(where + "/to", format_simplex(to_s) + " is not a facet of " + format_simplex(from_s));
            std::size_t pos = 0;
            while (pos < to_s.size() && from_s[pos] == to_s[pos])
                ++pos;
            const auto m = labels.order[from];
            const auto unit = read_unsigned(require(entry, "unit"), where + "/unit", 1);
            if (unit >= std::max<std::uint64_t>(m, 2))
                throw ParseError(where + "/unit", "unit " + std::to_string(unit) + " out of range for order " +
                                                      std::to_string(m));
            const auto inc = complex.incidence_index(from, pos);
            if (seen[inc]++)
                throw ParseError(where, "duplicate restriction entry");
            labels.unit[inc] = static_cast<std::uint32_t>(unit);
        }
    }

    for (const auto& [key, value] : doc.items())
        if (key != "format_version" && key != "vertices" && key != "maximal_simplices" && key != "isotropy" &&
            key != "restrictions")
            throw ParseError("/" + key, "unknown field");

    return OrbifoldComplex(std::move(complex), std::move(labels));
}

OrbifoldComplex parse(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("", "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

std::string serialize(const OrbifoldComplex& oc) {
    const auto& k = oc.complex();
    std::ostringstream os;
    auto write_list = [&](const char* key, const std::vector<std::string>& items, bool last) {
        os << "  \"" << key << "\": [";
        for (std::size_t i = 0; i < items.size(); ++i)
            os << (i ? ",\n    " : "\n    ") << items[i];
        os << (items.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
    };
    os << "{\n  \"format_version\": \"" << format_version << "\",\n";
    os << "  \"vertices\": " << k.vertex_count() << ",\n";

    std::vector<std::string> items;
    for (SimplexId id : k.maximal_simplices())
        items.push_back(simplex_json(k.simplex(id)).dump());
    write_list("maximal_simplices", items, false);

    items.clear();
    for (SimplexId id = 0; id < k.size(); ++id)
        if (oc.order(id) != 1) {
            json entry = json::object();
            entry["simplex"] = simplex_json(k.simplex(id));
            entry["order"] = oc.order(id);
            items.push_back(entry.dump());
        }
    write_list("isotropy", items, false);

    items.clear();
    for (SimplexId id = 0; id < k.size(); ++id) {
        auto facets = k.facets(id);
        for (std::size_t pos = 0; pos < facets.size(); ++pos)
            if (oc.unit(id, pos) != 1) {
                // nlohmann::json objects keep keys sorted: from, to, unit.
                json entry = json::object();
                entry["from"] = simplex_json(k.simplex(id));
                entry["to"] = simplex_json(k.simplex(facets[pos]));
                entry["unit"] = oc.unit(id, pos);
                items.push_back(entry.dump());
            }
    }
    write_list("restrictions", items, true);
    os << "}\n";
    return os.str();
}

void serialize(const OrbifoldComplex& oc, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << serialize(oc);
}

std::string digest(const OrbifoldComplex& oc) {
    const auto text = serialize(oc);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

namespace {

builders::BuilderSpec spec_from_json(const json& j, const std::string& where) {
    using builders::BuilderKind;
    if (!j.is_object())
        throw ParseError(where, "builder spec must be an object");
    static const std::map<std::string, BuilderKind> kinds{
        {"surface_orbifold", BuilderKind::surface_orbifold},
        {"product_with_manifold", BuilderKind::product_with_manifold},
        {"disjoint_union", BuilderKind::disjoint_union},
        {"circle_with_monodromy", BuilderKind::circle_with_monodromy},
        {"random", BuilderKind::random},
    };
    const auto& kind = j.contains("kind") ? j["kind"] : throw ParseError(where, "missing field 'kind'");
    if (!kind.is_string() || !kinds.count(kind.get<std::string>()))
        throw ParseError(where + "/kind", "unknown builder kind " + kind.dump());

    builders::BuilderSpec spec;
    spec.kind = kinds.at(kind.get<std::string>());
    if (j.contains("genus"))
        spec.genus = static_cast<int>(read_unsigned(j["genus"], where + "/genus"));
    if (j.contains("cone_orders")) {
        const auto& cones = j["cone_orders"];
        if (!cones.is_array())
            throw ParseError(where + "/cone_orders", "expected an array");
        for (std::size_t i = 0; i < cones.size(); ++i)
            spec.cone_orders.push_back(
                static_cast<Order>(read_unsigned(cones[i], where + "/cone_orders/" + std::to_string(i), 2)));
    }
    if (j.contains("manifold_genus"))
        spec.manifold_genus = static_cast<int>(read_unsigned(j["manifold_genus"], where + "/manifold_genus"));
    if (j.contains("order"))
        spec.order = static_cast<Order>(read_unsigned(j["order"], where + "/order", 1));
    if (j.contains("unit"))
        spec.unit = static_cast<std::uint32_t>(read_unsigned(j["unit"], where + "/unit", 1));
    if (j.contains("seed")) {
        spec.seed = read_unsigned(j["seed"], where + "/seed");
        spec.has_seed = true;
    }
    if (j.contains("dimension"))
        spec.profile.dimension = static_cast<int>(read_unsigned(j["dimension"], where + "/dimension"));
    if (j.contains("max_vertices"))
        spec.profile.max_vertices = read_unsigned(j["max_vertices"], where + "/max_vertices");
    if (j.contains("max_order"))
        spec.profile.max_order = static_cast<Order>(read_unsigned(j["max_order"], where + "/max_order"));
    if (j.contains("parts")) {
        const auto& parts = j["parts"];
        if (!parts.is_array())
            throw ParseError(where + "/parts", "expected an array");
        for (std::size_t i = 0; i < parts.size(); ++i)
            spec.parts.push_back(spec_from_json(parts[i], where + "/parts/" + std::to_string(i)));
    }
    return spec;
}

}  // namespace

builders::BuilderSpec parse_builder_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("malformed builder spec: ") + e.what());
    }
    return spec_from_json(doc, "");
}

}  // namespace orbsec::io
