#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "obstruction.hpp"
#include "partition.hpp"

namespace shellcheck {

enum class EnumerationMode { obstructions, strong_obstructions, edge_minimal_obstructions };

struct EnumerationTask {
    int dimension = 2;
    int max_vertices = 7;
    PropertyKind property = PropertyKind::shellable;
    EnumerationMode mode = EnumerationMode::obstructions;
    /// Enumerate every complex and filter, instead of the pruned search.
    bool generic = false;
    int workers = 1;
};

/// Largest vertex count for which obstruction searches in each dimension run.
inline int obstruction_vertex_limit(int dim) { return dim <= 1 ? 8 : 7; }

/// Largest vertex count for exhaustive complex enumeration in each dimension.
inline int exhaustive_vertex_limit(int dim) { return dim <= 1 ? 8 : 6; }

namespace detail {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

inline std::vector<std::uint64_t> pair_masks(int n) {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    return out;
}

inline std::vector<std::uint64_t> triple_masks(int n) {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                out.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j) | (std::uint64_t{1} << k));
    return out;
}

inline CanonicalForm form_of(int n, const std::vector<std::uint64_t>& sets) {
    return canonical_labeling(n, sets).form;
}

/// Classes under S_n of families of candidate sets on {0..n-1}, grown one
/// set at a time with isomorph rejection at every size.
inline std::vector<std::vector<std::uint64_t>> set_family_classes(
    int n, const std::vector<std::uint64_t>& base, const std::vector<std::uint64_t>& candidates) {
    std::vector<std::vector<std::uint64_t>> all{{}};
    std::vector<std::vector<std::uint64_t>> level{{}};
    while (!level.empty()) {
        FormSet seen;
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& fam : level) {
            for (std::uint64_t s : candidates) {
                if (std::find(fam.begin(), fam.end(), s) != fam.end()) continue;
                std::vector<std::uint64_t> grown = fam;
                grown.push_back(s);
                std::vector<std::uint64_t> whole = base;
                whole.insert(whole.end(), grown.begin(), grown.end());
                if (seen.insert(form_of(n, whole)).second) next.push_back(std::move(grown));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

inline std::uint64_t union_of(const std::vector<std::uint64_t>& sets) {
    std::uint64_t u = 0;
    for (auto s : sets) u |= s;
    return u;
}

inline SimplicialComplex complex_of(const std::vector<std::uint64_t>& sets) {
    std::vector<Face> fs(sets.begin(), sets.end());
    return SimplicialComplex::from_facets(fs);
}

inline void sort_by_form(std::vector<SimplicialComplex>& cs) {
    std::vector<std::pair<CanonicalForm, SimplicialComplex>> keyed;
    for (auto& c : cs) keyed.emplace_back(canonical_form(c), std::move(c));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cs.clear();
    for (auto& [f, c] : keyed) cs.push_back(from_canonical(f));
}

} // namespace detail

/// Every isomorphism class of complexes of exactly the given dimension on
/// exactly n vertices, each in canonical labeling and sorted by canonical
/// form. In dimension at least 1 isolated vertices are excluded.
///
/// Triangle sets are generated up to isomorphism first; edge sets over pairs
/// outside the triangles are then generated up to the symmetries of each
/// triangle set, since the triangle set of a complex is an isomorphism
/// invariant.
inline std::vector<SimplicialComplex> enumerate_complexes(int dim, int n) {
    if (dim < 0 || dim > 2 || n < 0 || n > exhaustive_vertex_limit(dim))
        throw capacity_error("enumerate_complexes: (dim " + std::to_string(dim) + ", n " + std::to_string(n) +
                             ") is outside the exhaustive range");
    std::vector<SimplicialComplex> out;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (dim == 0) {
        std::vector<Face> points;
        for (int i = 0; i < n; ++i) points.push_back(Face::single(i));
        if (n >= 1) out.push_back(SimplicialComplex::from_facets(points));
        return out;
    }
    const auto pairs = detail::pair_masks(n);
    if (dim == 1) {
        for (const auto& edges : detail::set_family_classes(n, {}, pairs))
            if (!edges.empty() && detail::union_of(edges) == full) out.push_back(detail::complex_of(edges));
        detail::sort_by_form(out);
        return out;
    }
    for (const auto& tris : detail::set_family_classes(n, {}, detail::triple_masks(n))) {
        if (tris.empty()) continue;
        std::vector<std::uint64_t> free;
        for (auto p : pairs)
            if (std::none_of(tris.begin(), tris.end(), [p](std::uint64_t t) { return (p & ~t) == 0; }))
                free.push_back(p);
        for (const auto& edges : detail::set_family_classes(n, tris, free)) {
            std::vector<std::uint64_t> all = tris;
            all.insert(all.end(), edges.begin(), edges.end());
            if (detail::union_of(all) == full) out.push_back(detail::complex_of(all));
        }
    }
    detail::sort_by_form(out);
    return out;
}

namespace detail {

/// Triangle-set property that, together with a connected pure 1-skeleton,
/// decides the property for 2-dimensional complexes.
inline bool triangles_satisfy(const std::vector<std::uint64_t>& tris, PropertyKind p) {
    if (tris.empty()) return true;
    SimplicialComplex t = complex_of(tris);
    return p == PropertyKind::shellable ? shellable(t) : cohen_macaulay(t);
}

/// Vertices of {0..n-1} \ {v} renumbered to {0..n-2}.
inline std::uint64_t squeeze(std::uint64_t mask, int v) {
    std::uint64_t low = mask & ((std::uint64_t{1} << v) - 1);
    std::uint64_t high = (mask >> (v + 1)) << v;
    return low | high;
}

inline std::vector<std::uint64_t> delete_vertex(const std::vector<std::uint64_t>& tris, int v) {
    std::vector<std::uint64_t> out;
    for (auto t : tris)
        if (!((t >> v) & 1u)) out.push_back(squeeze(t, v));
    return out;
}

/// The nonisolated part of the graph restricted to w is connected.
inline bool edge_part_connected(const std::vector<std::uint64_t>& adj, std::uint64_t w) {
    std::uint64_t touched = 0;
    for (std::uint64_t b = w; b; b &= b - 1) {
        int v = std::countr_zero(b);
        if (adj[static_cast<std::size_t>(v)] & w) touched |= std::uint64_t{1} << v;
    }
    if (touched == 0) return true;
    std::uint64_t comp = touched & (~touched + 1), frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
        next &= touched & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp == touched;
}

/// Every proper vertex subset induces a graph whose nonisolated part is
/// connected.
inline bool proper_restrictions_connected(const std::vector<std::uint64_t>& adj, std::uint64_t universe) {
    for (std::uint64_t w = (universe - 1) & universe;; w = (w - 1) & universe) {
        if (!edge_part_connected(adj, w)) return false;
        if (w == 0) return true;
    }
}

inline bool proper_restrictions_connected(const std::vector<std::uint64_t>& adj, int n) {
    return proper_restrictions_connected(adj, (std::uint64_t{1} << n) - 1);
}

inline std::vector<std::uint64_t> adjacency_of(const std::vector<std::uint64_t>& sets, int n) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto s : sets)
        for (std::uint64_t b = s; b; b &= b - 1) {
            int v = std::countr_zero(b);
            adj[static_cast<std::size_t>(v)] |= s & ~(std::uint64_t{1} << v);
        }
    return adj;
}

/// One pass of appending any facet that keeps the ordering a shelling.
/// Success proves shellability; failure proves nothing.
inline bool greedy_shelling_succeeds(const std::vector<std::uint64_t>& tris) {
    std::vector<std::uint64_t> left(tris.begin() + 1, tris.end()), placed{tris.front()};
    while (!left.empty()) {
        bool progress = false;
        for (std::size_t i = 0; i < left.size(); ++i) {
            std::uint64_t f = left[i], r = 0;
            for (std::uint64_t b = f; b; b &= b - 1) {
                std::uint64_t sub = f & ~(b & (~b + 1));
                for (auto g : placed)
                    if ((sub & ~g) == 0) {
                        r |= b & (~b + 1);
                        break;
                    }
            }
            if (std::none_of(placed.begin(), placed.end(), [r](std::uint64_t g) { return (r & ~g) == 0; })) {
                placed.push_back(f);
                left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
                progress = true;
                break;
            }
        }
        if (!progress) return false;
    }
    return true;
}

struct TriangleLayer {
    /// Triangle sets on {0..k-1} (unused vertices allowed) all of whose
    /// restrictions satisfy the triangle property, one per class.
    std::vector<std::vector<std::uint64_t>> hereditary;
    FormSet hereditary_forms;
    /// Triangle sets on exactly {0..k-1} that fail the triangle property while
    /// every proper restriction satisfies it.
    std::vector<std::vector<std::uint64_t>> minimal_failures;
};

/// Builds the layer for k vertices from the layer for k-1: a set on k
/// vertices is the set on the first k-1 plus the triangles through the new
/// vertex, which form a graph on the old vertices.
inline TriangleLayer extend_layer(const TriangleLayer& prev, int k, PropertyKind p, int workers, bool last = false) {
    TriangleLayer out;
    if (k < 3) {
        out.hereditary.push_back({});
        out.hereditary_forms.insert(form_of(k, {}));
        return out;
    }
    const int old = k - 1;
    const auto old_pairs = pair_masks(old);
    // Links of the new vertex: every proper induced subgraph must have a
    // connected nonisolated part, since the link of a vertex in a complex
    // with the triangle property is connected.
    std::vector<std::uint64_t> links;
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << old_pairs.size()); ++sel) {
        std::vector<std::uint64_t> edges;
        for (std::size_t i = 0; i < old_pairs.size(); ++i)
            if ((sel >> i) & 1u) edges.push_back(old_pairs[i]);
        if (proper_restrictions_connected(adjacency_of(edges, old), old)) links.push_back(sel);
    }

    const std::uint64_t apex = std::uint64_t{1} << old;
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    // Neighbours of each old vertex in the link of the new vertex.
    std::vector<std::vector<std::uint64_t>> link_nbrs;
    link_nbrs.reserve(links.size());
    for (std::uint64_t sel : links) {
        std::vector<std::uint64_t> nb(static_cast<std::size_t>(old), 0);
        for (std::size_t i = 0; i < old_pairs.size(); ++i)
            if ((sel >> i) & 1u) {
                int a = std::countr_zero(old_pairs[i]), b = 63 - std::countl_zero(old_pairs[i]);
                nb[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                nb[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
            }
        link_nbrs.push_back(std::move(nb));
    }
    // Edge masks index the pairs of old vertices in the order of old_pairs.
    std::unordered_map<std::uint64_t, std::uint64_t> triangle_edges;
    for (auto t : triple_masks(old)) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < old_pairs.size(); ++i)
            if ((old_pairs[i] & ~t) == 0) m |= std::uint64_t{1} << i;
        triangle_edges.emplace(t, m);
    }
    std::vector<std::uint64_t> pairs_within(std::size_t{1} << old, 0);
    for (std::uint64_t sub = 0; sub < pairs_within.size(); ++sub)
        for (std::size_t i = 0; i < old_pairs.size(); ++i)
            if ((old_pairs[i] & ~sub) == 0) pairs_within[sub] |= std::uint64_t{1} << i;
    struct Found {
        std::vector<std::pair<CanonicalForm, std::vector<std::uint64_t>>> hereditary, failures;
    };
    std::vector<Found> found(prev.hereditary.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (std::size_t idx = cursor++; idx < prev.hereditary.size(); idx = cursor++) {
            const auto& base = prev.hereditary[idx];
            // admissible[x][m]: with the new vertex joined to the old vertices
            // in m inside the link of x, every proper restriction of that
            // link still has a connected nonisolated part.
            std::vector<std::vector<char>> admissible(static_cast<std::size_t>(old),
                                                      std::vector<char>(std::size_t{1} << old, 0));
            for (int x = 0; x < old; ++x) {
                const std::uint64_t xb = std::uint64_t{1} << x;
                std::vector<std::uint64_t> link_adj(static_cast<std::size_t>(k), 0);
                for (auto t : base)
                    if (t & xb) {
                        std::uint64_t e = t & ~xb;
                        int a = std::countr_zero(e), b = 63 - std::countl_zero(e);
                        link_adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                        link_adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
                    }
                const std::uint64_t others = (full & ~xb) & ~apex;
                for (std::uint64_t m = others;; m = (m - 1) & others) {
                    auto adj = link_adj;
                    adj[static_cast<std::size_t>(old)] = m;
                    for (std::uint64_t b = m; b; b &= b - 1) adj[static_cast<std::size_t>(std::countr_zero(b))] |= apex;
                    admissible[static_cast<std::size_t>(x)][m] = proper_restrictions_connected(adj, full & ~xb);
                    if (m == 0) break;
                }
            }
            // Restrictions that contain the new vertex: the triangles of the
            // base inside S, their strong components as edge masks, and the
            // covered vertices and edges. With the cone over the link added,
            // each restriction must stay strongly connected and keep a
            // nonnegative reduced Euler characteristic (H̃_1 = 0).
            const std::size_t n_sub = std::size_t{1} << old;
            std::vector<std::vector<std::uint64_t>> comps(n_sub);
            std::vector<std::uint64_t> cov_v(n_sub, 0), cov_e(n_sub, 0);
            std::vector<int> n_tri(n_sub, 0);
            for (std::uint64_t sub = 0; sub < n_sub; ++sub) {
                std::vector<std::uint64_t> inside;
                for (auto t : base)
                    if ((t & ~sub) == 0) inside.push_back(t);
                n_tri[sub] = static_cast<int>(inside.size());
                std::vector<int> comp_of(inside.size(), -1);
                int n_comp = 0;
                for (std::size_t i = 0; i < inside.size(); ++i) {
                    if (comp_of[i] >= 0) continue;
                    std::vector<std::size_t> stack{i};
                    comp_of[i] = n_comp;
                    std::uint64_t edges = 0;
                    while (!stack.empty()) {
                        std::size_t a = stack.back();
                        stack.pop_back();
                        edges |= triangle_edges.at(inside[a]);
                        for (std::size_t b = 0; b < inside.size(); ++b)
                            if (comp_of[b] < 0 && std::popcount(inside[a] & inside[b]) == 2) {
                                comp_of[b] = n_comp;
                                stack.push_back(b);
                            }
                    }
                    comps[sub].push_back(edges);
                    cov_e[sub] |= edges;
                    ++n_comp;
                }
                for (auto t : inside) cov_v[sub] |= t;
            }
            auto quick_reject = [&](std::uint64_t sel, const std::vector<std::uint64_t>& nb) {
                for (std::uint64_t sub = 0; sub + 1 < n_sub; ++sub) {
                    const std::uint64_t in_link = sel & pairs_within[sub];
                    if (in_link == 0) continue;
                    for (auto c : comps[sub])
                        if ((c & in_link) == 0) return true;
                    std::uint64_t link_vertices = 0;
                    for (std::uint64_t b = sub; b; b &= b - 1) {
                        int x = std::countr_zero(b);
                        if (nb[static_cast<std::size_t>(x)] & sub) link_vertices |= std::uint64_t{1} << x;
                    }
                    const int f0 = std::popcount(cov_v[sub] | link_vertices) + 1;
                    const int f1 = std::popcount(cov_e[sub] | in_link) + std::popcount(link_vertices);
                    const int f2 = n_tri[sub] + std::popcount(in_link);
                    if (-1 + f0 - f1 + f2 < 0) return true;
                }
                return false;
            };
            FormSet local;
            for (std::size_t li = 0; li < links.size(); ++li) {
                const auto& nb = link_nbrs[li];
                bool ok = true;
                for (int x = 0; x < old && ok; ++x) ok = admissible[static_cast<std::size_t>(x)][nb[static_cast<std::size_t>(x)]];
                if (!ok || quick_reject(links[li], nb)) continue;
                std::vector<std::uint64_t> tris = base;
                for (std::size_t i = 0; i < old_pairs.size(); ++i)
                    if ((links[li] >> i) & 1u) tris.push_back(old_pairs[i] | apex);
                // In the last layer only failures on all k vertices matter, and
                // a successful greedy shelling settles the property cheaply.
                if (last && (union_of(tris) != full || greedy_shelling_succeeds(tris))) continue;
                const bool satisfied = !last && triangles_satisfy(tris, p);
                if (last && triangles_satisfy(tris, p)) continue;
                if (!satisfied && union_of(tris) != full) continue;
                for (int v = 0; v < old && ok; ++v)
                    ok = prev.hereditary_forms.count(form_of(old, delete_vertex(tris, v))) > 0;
                if (!ok) continue;
                CanonicalForm f = form_of(k, tris);
                if (!local.insert(f).second) continue;
                if (satisfied)
                    found[idx].hereditary.emplace_back(std::move(f), std::move(tris));
                else
                    found[idx].failures.emplace_back(std::move(f), std::move(tris));
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::map<CanonicalForm, std::vector<std::uint64_t>> her, fail;
    for (auto& f : found) {
        for (auto& [form, tris] : f.hereditary) her.emplace(form, std::move(tris));
        for (auto& [form, tris] : f.failures) fail.emplace(form, std::move(tris));
    }
    for (auto& [form, tris] : her) {
        out.hereditary_forms.insert(form);
        out.hereditary.push_back(std::move(tris));
    }
    for (auto& [form, tris] : fail) out.minimal_failures.push_back(std::move(tris));
    return out;
}

/// All 2-dimensional obstructions on exactly n vertices whose triangle set
/// is `tris`, for a property decided by the triangle property together with
/// a connected pure 1-skeleton. Edge sets over pairs outside the triangles
/// are kept when every proper restriction has a connected pure 1-skeleton.
inline void edge_completions(const std::vector<std::uint64_t>& tris, int n, FormSet& seen,
                             std::vector<CanonicalForm>& out) {
    const auto pairs = pair_masks(n);
    std::vector<std::uint64_t> free;
    for (auto p : pairs)
        if (std::none_of(tris.begin(), tris.end(), [p](std::uint64_t t) { return (p & ~t) == 0; }))
            free.push_back(p);
    const auto base_adj = adjacency_of(tris, n);
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << free.size()); ++sel) {
        auto adj = base_adj;
        std::vector<std::uint64_t> sets = tris;
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((sel >> i) & 1u) {
                sets.push_back(free[i]);
                int a = std::countr_zero(free[i]), b = 63 - std::countl_zero(free[i]);
                adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
            }
        if (!proper_restrictions_connected(adj, n)) continue;
        CanonicalForm f = form_of(n, sets);
        if (seen.insert(f).second) out.push_back(std::move(f));
    }
}

struct ObstructionStore {
    std::mutex mutex;
    std::map<std::tuple<int, int, int, bool>, std::vector<CanonicalForm>> lists;
};

inline ObstructionStore& obstruction_store() {
    static ObstructionStore store;
    return store;
}

inline std::vector<CanonicalForm> generic_obstructions(int dim, int n, PropertyKind p) {
    std::vector<CanonicalForm> out;
    for (const auto& c : enumerate_complexes(dim, n))
        if (obstruction(c, p)) out.push_back(canonical_form(c));
    std::sort(out.begin(), out.end());
    return out;
}

/// Pruned dimension-2 search for shellability or sequential CM, all vertex
/// counts up to n_max at once. Returns obstruction forms per vertex count.
inline std::map<int, std::vector<CanonicalForm>> pruned_obstructions_dim2(int n_max, PropertyKind p, int workers) {
    std::map<int, std::vector<CanonicalForm>> out;
    TriangleLayer layer;
    layer.hereditary.push_back({});
    layer.hereditary_forms.insert(form_of(0, {}));
    for (int k = 1; k <= n_max; ++k) {
        layer = extend_layer(layer, k, p, workers, k == n_max);
        FormSet seen;
        std::vector<CanonicalForm> found;
        for (const auto& tris : layer.minimal_failures) edge_completions(tris, k, seen, found);
        std::sort(found.begin(), found.end());
        out[k] = std::move(found);
    }
    return out;
}

inline SimplicialComplex graph_complex(int n, const std::vector<std::uint64_t>& edges) {
    std::vector<Face> fs(edges.begin(), edges.end());
    const std::uint64_t covered = union_of(edges);
    for (int v = 0; v < n; ++v)
        if (!((covered >> v) & 1u)) fs.push_back(Face::single(v));
    return SimplicialComplex::from_facets(fs);
}

/// Dimension-1 search. A graph, isolated vertices allowed, has each of the
/// properties iff its nonisolated part is connected, so the hereditary
/// graphs are those whose restrictions all have connected nonisolated part.
/// They are grown one vertex at a time; a one-vertex extension whose proper
/// restrictions pass that test but which itself fails the exact property
/// check is an obstruction.
inline std::map<int, std::vector<CanonicalForm>> pruned_obstructions_dim1(int n_max, PropertyKind p) {
    std::map<int, std::vector<CanonicalForm>> out;
    std::vector<std::vector<std::uint64_t>> layer{{}};
    for (int k = 1; k <= n_max; ++k) {
        const int fresh = k - 1;
        const std::uint64_t everything = (std::uint64_t{1} << k) - 1;
        std::vector<std::vector<std::uint64_t>> next;
        FormSet seen;
        std::vector<CanonicalForm> found;
        for (const auto& edges : layer)
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << fresh); ++nbrs) {
                std::vector<std::uint64_t> grown = edges;
                for (int u = 0; u < fresh; ++u)
                    if ((nbrs >> u) & 1u) grown.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << fresh));
                if (!proper_restrictions_connected(adjacency_of(grown, k), everything)) continue;
                if (!seen.insert(form_of(k, grown)).second) continue;
                SimplicialComplex c = graph_complex(k, grown);
                if (satisfies(c, p))
                    next.push_back(std::move(grown));
                else if (union_of(grown) == everything)
                    found.push_back(canonical_form(c));
            }
        std::sort(found.begin(), found.end());
        out[k] = std::move(found);
        layer = std::move(next);
    }
    return out;
}

} // namespace detail

/// Canonical forms of all obstructions of exactly the given dimension on
/// exactly n vertices, sorted. Results are memoized per process.
inline std::vector<CanonicalForm> obstruction_forms(int dim, int n, PropertyKind p, bool generic = false,
                                                    int workers = 1) {
    if (dim < 0 || dim > 2 || n < 0 || n > obstruction_vertex_limit(dim))
        throw capacity_error("obstruction search: (dim " + std::to_string(dim) + ", n " + std::to_string(n) +
                             ") is outside the supported range");
    const bool use_generic = generic || n <= 2;
    if (use_generic && dim == 2 && n > exhaustive_vertex_limit(2))
        throw capacity_error("generic obstruction search supports at most " +
                             std::to_string(exhaustive_vertex_limit(2)) + " vertices in dimension 2");
    auto& store = detail::obstruction_store();
    auto key = std::make_tuple(dim, n, static_cast<int>(p), use_generic);
    {
        std::lock_guard lock(store.mutex);
        if (auto it = store.lists.find(key); it != store.lists.end()) return it->second;
    }
    std::vector<CanonicalForm> result;
    if (dim == 0) {
        // Every 0-dimensional complex has all three properties.
    } else if (use_generic) {
        result = detail::generic_obstructions(dim, n, p);
    } else if (dim == 1) {
        auto all = detail::pruned_obstructions_dim1(obstruction_vertex_limit(1), p);
        std::lock_guard lock(store.mutex);
        for (auto& [k, forms] : all) store.lists[std::make_tuple(1, k, static_cast<int>(p), false)] = forms;
        return store.lists[key];
    } else if (p == PropertyKind::partitionable) {
        // A partitionability obstruction Γ is not shellable, so it contains
        // a shellability obstruction Γ[W]. Every shellability obstruction
        // fails partitionability, which forces W = V(Γ). Hence the list is
        // the shellability list filtered by the partitionability test.
        for (const auto& f : obstruction_forms(dim, n, PropertyKind::shellable, false, workers))
            if (obstruction(from_canonical(f), p)) result.push_back(f);
    } else {
        auto all = detail::pruned_obstructions_dim2(obstruction_vertex_limit(2), p, workers);
        std::lock_guard lock(store.mutex);
        for (auto& [k, forms] : all) store.lists[std::make_tuple(2, k, static_cast<int>(p), false)] = forms;
        return store.lists[key];
    }
    std::lock_guard lock(store.mutex);
    store.lists[key] = result;
    return result;
}

/// Drops every memoized obstruction list.
inline void clear_obstruction_lists() {
    auto& store = detail::obstruction_store();
    std::lock_guard lock(store.mutex);
    store.lists.clear();
}

/// An obstruction from which deleting any 1-dimensional facet leaves a
/// non-obstruction.
inline bool edge_minimal(const SimplicialComplex& c, PropertyKind p) {
    for (Face f : c.facets())
        if (f.size() == 2 && obstruction(without_facet(c, f), p)) return false;
    return true;
}

} // namespace shellcheck
