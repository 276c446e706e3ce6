#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "cache.hpp"
#include "complex.hpp"
#include "homology.hpp"

namespace shellcheck {

/// A shelling order together with the restriction set R(F_i) of each facet:
/// the vertices v of F_i such that F_i - v lies in an earlier facet.
struct ShellingCertificate {
    std::vector<Face> ordering;
    std::vector<Face> restriction_sets;
};

struct ShellingVerification {
    bool is_shelling = false;
    std::vector<Face> restriction_sets;
};

struct ShellingResult {
    bool shellable = false;
    std::optional<ShellingCertificate> certificate;
};

struct ShellingOptions {
    bool want_certificate = false;
    /// Low-dimension criteria and the homology prescreen.
    bool use_fast_paths = true;
    bool use_cache = true;
    /// Restrict the search to orderings of nonincreasing facet dimension.
    bool nonincreasing_only = true;
};

/// R(F_i) for every position of the ordering.
inline std::vector<Face> restriction_sets(std::span<const Face> ordering) {
    std::vector<Face> out;
    out.reserve(ordering.size());
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        Face r;
        ordering[i].for_each_vertex([&](int v) {
            Face sub = ordering[i].without(v);
            for (std::size_t j = 0; j < i; ++j)
                if (sub.subset_of(ordering[j])) {
                    r.insert(v);
                    break;
                }
        });
        out.push_back(r);
    }
    return out;
}

/// The ordering is a shelling iff R(F_i) ⊆ F_k implies i <= k.
inline bool is_shelling_by_restriction(std::span<const Face> ordering) {
    auto r = restriction_sets(ordering);
    for (std::size_t i = 0; i < ordering.size(); ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (r[i].subset_of(ordering[k])) return false;
    return true;
}

/// Literal check: the intersection of the j-th facet's closure with the union
/// of the earlier closures is pure of dimension dim F_j - 1, for every j >= 2.
inline bool is_shelling_by_definition(std::span<const Face> ordering) {
    for (std::size_t j = 1; j < ordering.size(); ++j) {
        std::vector<Face> meets;
        for (std::size_t i = 0; i < j; ++i) meets.push_back(ordering[i] & ordering[j]);
        for (Face m : SimplicialComplex::maximal_faces(std::move(meets)))
            if (m.size() != ordering[j].size() - 1) return false;
    }
    return true;
}

namespace detail {

inline void require_permutation(const SimplicialComplex& c, std::span<const Face> ordering) {
    std::vector<Face> sorted(ordering.begin(), ordering.end());
    std::sort(sorted.begin(), sorted.end(), FaceOrder{});
    if (sorted != c.facets())
        throw std::invalid_argument("ordering is not a permutation of the facets");
}

} // namespace detail

/// Checks a facet ordering with the restriction-map criterion.
inline ShellingVerification verify_shelling(const SimplicialComplex& c, std::span<const Face> ordering) {
    detail::require_permutation(c, ordering);
    ShellingVerification out;
    out.is_shelling = is_shelling_by_restriction(ordering);
    if (out.is_shelling) out.restriction_sets = restriction_sets(ordering);
    return out;
}

namespace detail {

// Depth-first extension of a partial ordering. Whether a facet may be appended
// depends only on the set already placed, so failed sets are remembered.
class ShellingSearch {
  public:
    ShellingSearch(std::span<const Face> facets, bool nonincreasing)
        : facets_(facets.begin(), facets.end()), nonincreasing_(nonincreasing),
          words_((facets_.size() + 63) / 64) {
        // Largest facets first; FaceOrder within a size keeps the search deterministic.
        std::stable_sort(facets_.begin(), facets_.end(), [](Face a, Face b) { return a.size() > b.size(); });
    }

    std::optional<std::vector<Face>> run() {
        std::vector<std::uint64_t> placed(words_, 0);
        if (facets_.empty()) return std::vector<Face>{};
        if (dfs(placed)) return order_;
        return std::nullopt;
    }

  private:
    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
            std::uint64_t h = 0xcbf29ce484222325ull;
            for (auto w : k) h = (h ^ w) * 0x100000001b3ull;
            return static_cast<std::size_t>(h);
        }
    };

    std::vector<Face> facets_;
    bool nonincreasing_;
    std::size_t words_;
    std::vector<Face> order_;
    std::unordered_set<std::vector<std::uint64_t>, KeyHash> failed_;

    static bool test(const std::vector<std::uint64_t>& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1u; }
    static void flip(std::vector<std::uint64_t>& s, std::size_t i) { s[i / 64] ^= std::uint64_t{1} << (i % 64); }

    Face restriction_of(Face f) const {
        Face r;
        f.for_each_vertex([&](int v) {
            Face sub = f.without(v);
            for (Face g : order_)
                if (sub.subset_of(g)) {
                    r.insert(v);
                    break;
                }
        });
        return r;
    }

    bool dfs(std::vector<std::uint64_t>& placed) {
        if (order_.size() == facets_.size()) return true;
        if (failed_.count(placed)) return false;

        int max_size = -1;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (!test(placed, i)) max_size = std::max(max_size, facets_[i].size());

        struct Candidate {
            std::size_t index;
            int covered;
        };
        std::vector<Candidate> candidates;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (test(placed, i)) continue;
            if (nonincreasing_ && facets_[i].size() != max_size) continue;
            Face r = restriction_of(facets_[i]);
            bool ok = std::none_of(order_.begin(), order_.end(), [r](Face g) { return r.subset_of(g); });
            if (ok) candidates.push_back({i, r.size()});
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) { return a.covered > b.covered; });
        for (const auto& cand : candidates) {
            flip(placed, cand.index);
            order_.push_back(facets_[cand.index]);
            if (dfs(placed)) return true;
            order_.pop_back();
            flip(placed, cand.index);
        }
        failed_.insert(placed);
        return false;
    }
};

} // namespace detail

/// Exhaustive shelling search without fast paths or caching. Returns an
/// ordering when one exists.
inline std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& c, bool nonincreasing_only = true) {
    if (c.is_empty_complex()) return std::vector<Face>{};
    return detail::ShellingSearch(c.facets(), nonincreasing_only).run();
}

namespace detail {

inline CanonicalCache<bool>& shellable_cache() {
    static CanonicalCache<bool> cache;
    return cache;
}

/// Reduced homology of a pure complex vanishes below its dimension.
inline bool homology_vanishes_below_top(const SimplicialComplex& c) {
    for (int k = 0; k < c.dim(); ++k)
        if (!reduced_homology(c, k).is_zero()) return false;
    return true;
}

inline bool pure_one_skeleton_connected(const SimplicialComplex& c) {
    return connected(pure_skeleton(c, 1));
}

bool shellable_verdict(const SimplicialComplex& c, bool use_cache);

inline bool shellable_uncached(const SimplicialComplex& c, bool use_cache) {
    const int d = c.dim();
    if (d <= 0) return true;
    if (d == 1) return pure_one_skeleton_connected(c);
    if (d == 2) {
        if (!pure_one_skeleton_connected(c)) return false;
        SimplicialComplex top = pure_skeleton(c, 2);
        if (top == c) {
            if (!homology_vanishes_below_top(c)) return false;
            return find_shelling(c).has_value();
        }
        return shellable_verdict(top, use_cache);
    }
    if (c.is_pure()) {
        if (!homology_vanishes_below_top(c)) return false;
    } else {
        for (int i = 1; i <= d; ++i) {
            SimplicialComplex skel = pure_skeleton(c, i);
            if (!homology_vanishes_below_top(skel)) return false;
        }
    }
    return find_shelling(c).has_value();
}

inline bool shellable_verdict(const SimplicialComplex& c, bool use_cache) {
    if (!use_cache) return shellable_uncached(c, false);
    return memoized(shellable_cache(), c, [](const SimplicialComplex& x) { return shellable_uncached(x, true); });
}

} // namespace detail

/// Decides shellability, optionally producing a verified shelling order.
///
/// Dimension 0 is always shellable, dimension 1 iff the pure 1-skeleton is
/// connected, dimension 2 iff additionally the pure 2-skeleton is shellable.
/// Pure complexes with nonvanishing homology below the top are rejected
/// before the search; otherwise a backtracking search over orderings of
/// nonincreasing dimension decides exactly.
inline ShellingResult is_shellable(const SimplicialComplex& c, const ShellingOptions& opts = {}) {
    ShellingResult out;
    if (opts.use_fast_paths) {
        out.shellable = detail::shellable_verdict(c, opts.use_cache);
        if (out.shellable && opts.want_certificate) {
            auto order = find_shelling(c, opts.nonincreasing_only);
            out.certificate = ShellingCertificate{*order, restriction_sets(*order)};
        }
        return out;
    }
    auto order = find_shelling(c, opts.nonincreasing_only);
    out.shellable = order.has_value();
    if (order && opts.want_certificate) out.certificate = ShellingCertificate{*order, restriction_sets(*order)};
    return out;
}

/// Cached shellability verdict.
inline bool shellable(const SimplicialComplex& c) { return detail::shellable_verdict(c, true); }

/// For complexes of dimension at most 2, the low-dimension criteria agree
/// with the generic search.
inline bool fast_paths_agree(const SimplicialComplex& c) {
    if (c.dim() > 2)
        throw dimension_error("fast_paths_agree: complex has dimension " + std::to_string(c.dim()) +
                              ", expected at most 2");
    bool fast = detail::shellable_uncached(c, false);
    bool generic = find_shelling(c).has_value();
    return fast == generic;
}

} // namespace shellcheck
