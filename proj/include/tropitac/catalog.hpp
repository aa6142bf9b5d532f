// tropitac/catalog.hpp - named reference polygons
#pragma once

#include "lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropitac::lattice {

enum class CatalogFamily { Kind, Hat, Std };

struct CatalogTag {
    CatalogFamily family = CatalogFamily::Std;
    std::string name;  // "I".."IX", "E", "HAT1".., or a Std name such as "unit-triangle"
    friend bool operator==(const CatalogTag&, const CatalogTag&) = default;
};

struct CatalogEntry {
    CatalogTag tag;
    std::vector<LatticePoint> printed;  // vertex list in the order it is usually written
    LatticePolytope polytope;
    LatticePolytope normal;
};

namespace detail {

inline CatalogEntry entry(CatalogFamily f, std::string name, std::vector<LatticePoint> pts) {
    LatticePolytope P = LatticePolytope::from_vertices(pts);
    return {{f, std::move(name)}, std::move(pts), P, normal_form(P)};
}

inline std::vector<CatalogEntry> build_catalog() {
    using F = CatalogFamily;
    std::vector<CatalogEntry> c;
    c.push_back(entry(F::Kind, "I", {{0, 7}, {1, 0}, {2, 0}}));
    c.push_back(entry(F::Kind, "II", {{0, 7}, {2, 0}, {3, 0}}));
    c.push_back(entry(F::Kind, "III", {{0, 0}, {2, 0}, {1, 3}}));
    c.push_back(entry(F::Kind, "IV", {{0, 0}, {2, 0}, {1, 2}}));
    c.push_back(entry(F::Kind, "V", {{0, 0}, {4, 0}, {0, 1}}));
    c.push_back(entry(F::Kind, "VI", {{1, 0}, {2, 0}, {0, 3}, {1, 3}}));
    c.push_back(entry(F::Kind, "VII", {{0, 0}, {1, 0}, {2, 1}, {0, 1}, {1, 2}}));
    c.push_back(entry(F::Kind, "VIII", {{0, 0}, {1, 0}, {0, 1}, {3, 3}}));
    c.push_back(entry(F::Kind, "IX", {{0, 0}, {1, 0}, {0, 1}, {4, 2}}));
    c.push_back(entry(F::Kind, "E", {{0, 0}, {2, 0}, {0, 1}, {1, 2}}));
    c.push_back(entry(F::Hat, "HAT1", {{2, 0}, {0, 1}, {0, -1}}));
    c.push_back(entry(F::Hat, "HAT2", {{2, 0}, {0, 2}, {0, -1}}));
    c.push_back(entry(F::Hat, "HAT3", {{3, 0}, {0, 1}, {0, -1}}));
    c.push_back(entry(F::Hat, "HAT_III", {{0, -1}, {2, 0}, {0, 3}}));
    c.push_back(entry(F::Hat, "HAT_IV", {{0, -2}, {2, 0}, {0, 2}}));
    c.push_back(entry(F::Hat, "HAT_V", {{0, -1}, {4, 0}, {0, 1}}));
    c.push_back(entry(F::Std, "D3(2;1,1,1)", {{0, 0}, {3, 2}, {2, 3}}));
    c.push_back(entry(F::Std, "D3(1;1,1,1)", {{0, 0}, {1, 2}, {2, 1}}));
    c.push_back(entry(F::Std, "D3(0;3,1,1)", {{0, 0}, {3, 0}, {0, 1}}));
    c.push_back(entry(F::Std, "D3(0;2,1,1)", {{0, 0}, {2, 0}, {0, 1}}));
    c.push_back(entry(F::Std, "unit-triangle", {{0, 0}, {1, 0}, {0, 1}}));
    c.push_back(entry(F::Std, "D4par(1;1,1)", {{0, 0}, {1, 0}, {1, 2}, {2, 2}}));
    c.push_back(entry(F::Std, "D4par(0;2,1)", {{0, 0}, {2, 0}, {0, 1}, {2, 1}}));
    c.push_back(entry(F::Std, "unit-square", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    c.push_back(entry(F::Std, "D3(0;2,2,2)", {{0, 0}, {2, 0}, {0, 2}}));
    c.push_back(entry(F::Std, "D4(0;2,1,1,1)", {{0, 0}, {2, 0}, {0, 1}, {1, 1}}));
    c.push_back(entry(F::Std, "D4(2;1,1,1,1)c", {{1, 0}, {0, 1}, {2, 1}, {1, 3}}));
    return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = detail::build_catalog();
    return c;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.tag.name == name) return e;
    throw std::invalid_argument("unknown catalog tag '" + name + "'");
}

// First match in the order kinds, hats, Std.
inline std::optional<CatalogTag> catalog_match(const LatticePolytope& P) {
    LatticePolytope n = normal_form(P);
    for (const auto& e : catalog())
        if (e.normal == n) return e.tag;
    return std::nullopt;
}

// Every tag whose reference is equivalent to P (several hats coincide with kinds).
inline std::vector<CatalogTag> catalog_matches(const LatticePolytope& P) {
    LatticePolytope n = normal_form(P);
    std::vector<CatalogTag> out;
    for (const auto& e : catalog())
        if (e.normal == n) out.push_back(e.tag);
    return out;
}

}  // namespace tropitac::lattice
