#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cache.hpp"
#include "complex.hpp"
#include "homology.hpp"

namespace shellcheck {

/// A face whose link has nonvanishing homology below the link's dimension.
struct CMWitness {
    Face face;
    int degree = 0;
    HomologyGroup group;
    /// Dimension of the pure skeleton that failed (sequential check), or the
    /// complex's own dimension.
    int skeleton_dim = 0;
};

struct CMReport {
    bool verdict = true;
    std::optional<CMWitness> witness;
};

namespace detail {

using LowHomology = std::optional<std::pair<int, HomologyGroup>>;

inline CanonicalCache<LowHomology>& low_homology_cache() {
    static CanonicalCache<LowHomology> cache;
    return cache;
}

/// Lowest degree k < dim with H̃_k ≠ 0, if any.
inline LowHomology first_low_homology(const SimplicialComplex& c) {
    return memoized(low_homology_cache(), c, [](const SimplicialComplex& x) -> LowHomology {
        for (int k = -1; k < x.dim(); ++k) {
            HomologyGroup h = reduced_homology(x, k);
            if (!h.is_zero()) return std::make_pair(k, std::move(h));
        }
        return std::nullopt;
    });
}

inline std::optional<CMWitness> cm_witness(const SimplicialComplex& c) {
    std::vector<Face> faces = all_faces(c);
    for (Face tau : faces) {
        if (c.is_facet(tau) && !tau.empty()) continue;
        if (auto low = first_low_homology(link(c, tau)))
            return CMWitness{tau, low->first, std::move(low->second), c.dim()};
    }
    return std::nullopt;
}

} // namespace detail

/// Reisner's criterion over Z: every link, including that of ∅, has reduced
/// homology concentrated in its top dimension. Faces are scanned from ∅
/// upward so the first witness is the smallest face.
inline CMReport is_cohen_macaulay(const SimplicialComplex& c) {
    if (!c.is_pure()) throw purity_error("is_cohen_macaulay: complex is not pure");
    CMReport report;
    if (c.dim() <= 0) return report;
    auto witness = detail::cm_witness(c);
    if (witness) {
        report.verdict = false;
        report.witness = std::move(witness);
    }
    return report;
}

/// Strong connectivity is necessary; failing it settles the verdict without
/// any homology, though a witness still requires the link scan.
inline bool cohen_macaulay(const SimplicialComplex& c) {
    if (!c.is_pure()) throw purity_error("cohen_macaulay: complex is not pure");
    if (c.dim() <= 0) return true;
    if (!strongly_connected(c)) return false;
    return !detail::cm_witness(c).has_value();
}

/// Every pure i-skeleton, 0 <= i <= dim, is Cohen-Macaulay.
inline CMReport is_sequentially_cm(const SimplicialComplex& c) {
    CMReport report;
    for (int i = 0; i <= c.dim(); ++i) {
        SimplicialComplex skel = pure_skeleton(c, i);
        if (!cohen_macaulay(skel)) {
            CMReport sub = is_cohen_macaulay(skel);
            report.verdict = false;
            report.witness = std::move(sub.witness);
            report.witness->skeleton_dim = i;
            return report;
        }
    }
    return report;
}

namespace detail {

inline CanonicalCache<bool>& scm_cache() {
    static CanonicalCache<bool> cache;
    return cache;
}

} // namespace detail

/// Cached sequential Cohen-Macaulay verdict.
inline bool sequentially_cm(const SimplicialComplex& c) {
    return memoized(detail::scm_cache(), c, [](const SimplicialComplex& x) {
        for (int i = 1; i <= x.dim(); ++i)
            if (!cohen_macaulay(pure_skeleton(x, i))) return false;
        return true;
    });
}

} // namespace shellcheck
