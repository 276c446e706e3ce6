#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cache.hpp"
#include "complex.hpp"
#include "exact_cover.hpp"

namespace shellcheck {

/// facet σ -> bottom τ_σ of its interval [τ_σ, σ].
using PartitionAssignment = std::map<Face, Face, FaceOrder>;

struct PartitionResult {
    bool partitionable = false;
    std::optional<PartitionAssignment> certificate;
};

struct PartitionOptions {
    bool want_certificate = false;
    bool use_filters = true;
    bool use_cache = true;
};

/// True iff the intervals [τ_σ, σ] tile the face set of the complex exactly.
inline bool verify_partition(const SimplicialComplex& c, const PartitionAssignment& assignment) {
    for (const auto& [facet, bottom] : assignment) {
        if (!c.is_facet(facet)) throw std::invalid_argument("partition key " + facet.to_string() + " is not a facet");
        if (!bottom.subset_of(facet))
            throw std::invalid_argument("interval bottom " + bottom.to_string() + " is not inside " +
                                        facet.to_string());
    }
    if (assignment.size() != c.n_facets()) return false;
    std::unordered_map<Face, int> hits;
    std::size_t covered = 0;
    for (const auto& [facet, bottom] : assignment) {
        Face free = facet - bottom;
        bool clash = false;
        free.for_each_subset([&](Face s) {
            if (++hits[s | bottom] > 1) clash = true;
            ++covered;
        });
        if (clash) return false;
    }
    return covered == all_faces(c).size();
}

/// Facets of dimension at least 1 none of whose codimension-one faces lies in
/// another facet. Any partition must give such a facet the bottom ∅.
inline std::vector<Face> private_boundary_facets(const SimplicialComplex& c) {
    std::vector<Face> out;
    for (Face f : c.facets()) {
        if (f.size() < 2) continue;
        bool all_private = true;
        f.for_each_vertex([&](int v) {
            Face sub = f.without(v);
            for (Face g : c.facets())
                if (g != f && sub.subset_of(g)) all_private = false;
        });
        if (all_private) out.push_back(f);
    }
    return out;
}

/// Negative filter: two facets with private boundaries rule out a partition.
inline bool two_private_facets(const SimplicialComplex& c) { return private_boundary_facets(c).size() >= 2; }

/// Counting filter: the largest intervals together must reach every face.
inline bool interval_count_sufficient(const SimplicialComplex& c) {
    std::size_t total = 0;
    for (Face f : c.facets()) total += std::size_t{1} << f.size();
    return total >= all_faces(c).size();
}

/// Number of connected components of pure_1 that contain no cycle.
inline int tree_components(const SimplicialComplex& c) {
    SimplicialComplex p = pure_skeleton(c, 1);
    if (p.is_empty_complex()) return 0;
    auto adj = neighbour_masks(p);
    int trees = 0;
    for (Face comp : components(p.vertex_set(), adj)) {
        int edges = 0;
        for (Face e : p.facets())
            if (e.subset_of(comp)) ++edges;
        if (edges == comp.size() - 1) ++trees;
    }
    return trees;
}

/// Exact-cover search without filters or caching.
inline std::optional<PartitionAssignment> find_partition(const SimplicialComplex& c) {
    if (c.is_empty_complex()) return PartitionAssignment{{Face{}, Face{}}};
    std::vector<Face> faces = all_faces(c);
    std::unordered_map<Face, std::size_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
    const auto& facets = c.facets();
    ExactCover problem(faces.size() + facets.size());
    std::vector<std::pair<std::size_t, Face>> rows;
    for (std::size_t k = 0; k < facets.size(); ++k) {
        Face sigma = facets[k];
        std::vector<Face> bottoms;
        sigma.for_each_subset([&](Face t) { bottoms.push_back(t); });
        std::sort(bottoms.begin(), bottoms.end(), FaceOrder{});
        for (Face tau : bottoms) {
            std::vector<std::size_t> items{faces.size() + k};
            (sigma - tau).for_each_subset([&](Face s) { items.push_back(index.at(s | tau)); });
            problem.add_row(items);
            rows.emplace_back(k, tau);
        }
    }
    auto solution = problem.solve();
    if (!solution) return std::nullopt;
    PartitionAssignment out;
    for (std::size_t r : *solution) out.emplace(facets[rows[r].first], rows[r].second);
    return out;
}

namespace detail {

inline CanonicalCache<bool>& partitionable_cache() {
    static CanonicalCache<bool> cache;
    return cache;
}

inline bool partitionable_uncached(const SimplicialComplex& c) {
    if (c.dim() <= 1) return tree_components(c) <= 1;
    if (two_private_facets(c)) return false;
    if (!interval_count_sufficient(c)) return false;
    return find_partition(c).has_value();
}

} // namespace detail

/// Decides partitionability. Complexes of dimension at most one are decided
/// by counting tree components of pure_1; otherwise the two-private-facets
/// and counting filters run before an exact-cover search over intervals.
inline PartitionResult is_partitionable(const SimplicialComplex& c, const PartitionOptions& opts = {}) {
    PartitionResult out;
    if (!opts.use_filters) {
        auto found = find_partition(c);
        out.partitionable = found.has_value();
        if (opts.want_certificate) out.certificate = std::move(found);
        return out;
    }
    out.partitionable = opts.use_cache ? memoized(detail::partitionable_cache(), c, detail::partitionable_uncached)
                                       : detail::partitionable_uncached(c);
    if (out.partitionable && opts.want_certificate) out.certificate = find_partition(c);
    return out;
}

inline bool partitionable(const SimplicialComplex& c) { return is_partitionable(c).partitionable; }

/// Cyclic band: facets {k, k+1, ..., k+d} with indices mod n.
inline SimplicialComplex band_complex(int d, int n) {
    if (d < 1) throw std::invalid_argument("band_complex: dimension must be at least 1");
    if (n < 2 * d + 1)
        throw std::invalid_argument("band_complex: need n >= " + std::to_string(2 * d + 1) + ", got " +
                                    std::to_string(n));
    if (n > max_vertices) throw capacity_error("band_complex: more than 64 vertices");
    std::vector<Face> facets;
    for (int k = 0; k < n; ++k) {
        Face f;
        for (int j = 0; j <= d; ++j) f.insert((k + j) % n);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

/// True iff the pure top skeleton is a cyclic band on at least 2d+1 vertices,
/// the configuration that rules out a partition in dimension d >= 2.
inline bool has_band_pattern(const SimplicialComplex& c) {
    const int d = c.dim();
    if (d < 2) return false;
    SimplicialComplex top = pure_skeleton(c, d);
    const int n = top.n_vertices();
    if (n < 2 * d + 1 || static_cast<int>(top.n_facets()) != n) return false;
    return is_isomorphic(top, band_complex(d, n));
}

} // namespace shellcheck
