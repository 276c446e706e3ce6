#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cache.hpp"
#include "property.hpp"

namespace shellcheck {

struct ObstructionReport {
    bool is_obstruction = false;
    bool is_strong = false;
    /// A proper vertex subset whose restriction fails the property.
    std::optional<Face> failing_restriction;
    /// A nonempty face whose link fails the property.
    std::optional<Face> failing_link;
};

struct HereditaryReport {
    bool hereditary = true;
    std::optional<Face> failing_restriction;
};

namespace detail {

inline CanonicalCache<bool>& hereditary_cache(PropertyKind p) {
    static std::array<CanonicalCache<bool>, 3> caches;
    return caches[static_cast<std::size_t>(p)];
}

/// Vertex subsets of `vs` in decreasing size, lexicographic within a size.
inline std::vector<Face> subsets_by_decreasing_size(Face vs, bool proper) {
    std::vector<Face> out;
    vs.for_each_subset([&](Face w) {
        if (!proper || w != vs) out.push_back(w);
    });
    std::sort(out.begin(), out.end(), [](Face a, Face b) { return FaceOrder{}(b, a); });
    return out;
}

} // namespace detail

/// Every restriction, the complex itself included, satisfies the property.
inline bool hereditary(const SimplicialComplex& c, PropertyKind p) {
    return memoized(detail::hereditary_cache(p), c, [p](const SimplicialComplex& x) {
        if (!satisfies(x, p)) return false;
        Face vs = x.vertex_set();
        bool ok = true;
        vs.for_each_vertex([&](int v) {
            if (ok && !hereditary(restriction(x, vs.without(v)), p)) ok = false;
        });
        return ok;
    });
}

/// Direct check over all restrictions, largest first.
inline HereditaryReport is_hereditary(const SimplicialComplex& c, PropertyKind p) {
    HereditaryReport r;
    for (Face w : detail::subsets_by_decreasing_size(c.vertex_set(), false))
        if (!satisfies(restriction(c, w), p)) {
            r.hereditary = false;
            r.failing_restriction = w;
            return r;
        }
    return r;
}

/// Fails the property while every proper restriction satisfies it.
inline bool obstruction(const SimplicialComplex& c, PropertyKind p) {
    if (satisfies(c, p)) return false;
    Face vs = c.vertex_set();
    bool ok = true;
    vs.for_each_vertex([&](int v) {
        if (ok && !hereditary(restriction(c, vs.without(v)), p)) ok = false;
    });
    return ok;
}

inline ObstructionReport is_obstruction(const SimplicialComplex& c, PropertyKind p) {
    ObstructionReport r;
    if (satisfies(c, p)) return r;
    for (Face w : detail::subsets_by_decreasing_size(c.vertex_set(), true))
        if (!satisfies(restriction(c, w), p)) {
            r.failing_restriction = w;
            return r;
        }
    r.is_obstruction = true;
    return r;
}

/// Deletion formulation: Γ∖U satisfies the property for every nonempty U.
inline bool is_obstruction_by_deletion(const SimplicialComplex& c, PropertyKind p) {
    if (satisfies(c, p)) return false;
    bool ok = true;
    c.vertex_set().for_each_subset([&](Face u) {
        if (ok && !u.empty() && !satisfies(deletion(c, u), p)) ok = false;
    });
    return ok;
}

/// Obstruction whose links at nonempty faces all satisfy the property. This
/// is the strong form for link-preserving properties, which all three are.
inline ObstructionReport is_strong_obstruction(const SimplicialComplex& c, PropertyKind p) {
    ObstructionReport r = is_obstruction(c, p);
    if (!r.is_obstruction) return r;
    for (Face tau : all_faces(c)) {
        if (tau.empty()) continue;
        if (!satisfies(link(c, tau), p)) {
            r.failing_link = tau;
            return r;
        }
    }
    r.is_strong = true;
    return r;
}

inline bool strong_obstruction(const SimplicialComplex& c, PropertyKind p) {
    if (!obstruction(c, p)) return false;
    for (Face tau : all_faces(c))
        if (!tau.empty() && !satisfies(link(c, tau), p)) return false;
    return true;
}

/// The unsimplified definition: Γ fails the property and link_{Γ[W]}(τ)
/// satisfies it for every W ⊆ V(Γ) and τ ∈ Γ[W] other than (V(Γ), ∅).
inline bool is_strong_obstruction_by_definition(const SimplicialComplex& c, PropertyKind p) {
    if (satisfies(c, p)) return false;
    Face vs = c.vertex_set();
    bool ok = true;
    vs.for_each_subset([&](Face w) {
        if (!ok) return;
        SimplicialComplex sub = restriction(c, w);
        for (Face tau : all_faces(sub)) {
            if (w == vs && tau.empty()) continue;
            if (!satisfies(link(sub, tau), p)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

/// Hereditary iff no restriction is an obstruction.
inline bool hereditary_by_obstructions(const SimplicialComplex& c, PropertyKind p) {
    bool ok = true;
    c.vertex_set().for_each_subset([&](Face w) {
        if (ok && obstruction(restriction(c, w), p)) ok = false;
    });
    return ok;
}

/// Hereditary iff no link of a face in a restriction is a strong obstruction.
inline bool hereditary_by_strong_obstructions(const SimplicialComplex& c, PropertyKind p) {
    bool ok = true;
    c.vertex_set().for_each_subset([&](Face w) {
        if (!ok) return;
        SimplicialComplex sub = restriction(c, w);
        for (Face tau : all_faces(sub))
            if (strong_obstruction(link(sub, tau), p)) {
                ok = false;
                return;
            }
    });
    return ok;
}

/// Γ[W] for an inclusion-minimal W with Γ[W] failing the property. Descends
/// one vertex at a time while a smaller restriction still contains a failure,
/// trying vertices in increasing order.
inline SimplicialComplex minimal_failing_restriction(const SimplicialComplex& c, PropertyKind p) {
    if (satisfies(c, p))
        throw std::invalid_argument("minimal_failing_restriction: complex is " + std::string(property_name(p)));
    Face w = c.vertex_set();
    for (bool moved = true; moved;) {
        moved = false;
        for (int v : w.vertices()) {
            if (!hereditary(restriction(c, w.without(v)), p)) {
                w = w.without(v);
                moved = true;
                break;
            }
        }
    }
    return restriction(c, w);
}

} // namespace shellcheck
