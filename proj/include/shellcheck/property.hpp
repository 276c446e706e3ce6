#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cohen_macaulay.hpp"
#include "partition.hpp"
#include "shelling.hpp"

namespace shellcheck {

enum class PropertyKind { shellable, partitionable, sequentially_cm };

inline constexpr std::array<PropertyKind, 3> all_properties{PropertyKind::shellable, PropertyKind::partitionable,
                                                            PropertyKind::sequentially_cm};

inline std::string_view property_name(PropertyKind p) {
    switch (p) {
    case PropertyKind::shellable: return "shellable";
    case PropertyKind::partitionable: return "partitionable";
    case PropertyKind::sequentially_cm: return "sequentially_cm";
    }
    return "";
}

/// Short key used in catalogs.
inline std::string_view property_key(PropertyKind p) {
    return p == PropertyKind::sequentially_cm ? "scm" : property_name(p);
}

inline std::optional<PropertyKind> parse_property(std::string_view s) {
    if (s == "shellable") return PropertyKind::shellable;
    if (s == "partitionable") return PropertyKind::partitionable;
    if (s == "scm" || s == "sequentially_cm" || s == "sequentially-cm") return PropertyKind::sequentially_cm;
    return std::nullopt;
}

/// Known implications between the properties: shellable implies both others.
inline bool implies(PropertyKind from, PropertyKind to) {
    return from == to || from == PropertyKind::shellable;
}

/// Cached verdict for any of the three properties.
inline bool satisfies(const SimplicialComplex& c, PropertyKind p) {
    switch (p) {
    case PropertyKind::shellable: return shellable(c);
    case PropertyKind::partitionable: return partitionable(c);
    case PropertyKind::sequentially_cm: return sequentially_cm(c);
    }
    throw std::logic_error("unknown property");
}

} // namespace shellcheck
