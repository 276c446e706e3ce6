#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "complex.hpp"

namespace shellcheck {

/// Largest vertex count accepted by the canonical labeling search.
inline constexpr int max_canonical_vertices = 16;

/// Isomorphism-invariant representative of a set family on n vertices: the
/// facet masks under the relabeling, among the leaves of the refinement
/// search, that makes the sorted mask list lexicographically smallest.
struct CanonicalForm {
    int n_vertices = 0;
    std::vector<std::uint64_t> facets;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (auto c = a.n_vertices <=> b.n_vertices; c != 0) return c;
        if (auto c = a.facets.size() <=> b.facets.size(); c != 0) return c;
        return a.facets <=> b.facets;
    }
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// perm[v] is the canonical id of input vertex v.
    std::vector<int> perm;
};

namespace detail {

class CanonicalSearch {
  public:
    CanonicalSearch(int n, std::span<const std::uint64_t> sets)
        : n_(n), sets_(sets.begin(), sets.end()), incident_(static_cast<std::size_t>(n)) {
        std::sort(sets_.begin(), sets_.end());
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
        for (std::size_t i = 0; i < sets_.size(); ++i)
            for (std::uint64_t b = sets_[i]; b; b &= b - 1)
                incident_[static_cast<std::size_t>(std::countr_zero(b))].push_back(i);
    }

    CanonicalLabeling run() {
        std::vector<int> colors(static_cast<std::size_t>(n_), 0);
        refine(colors);
        search(colors);
        CanonicalLabeling out;
        out.form.n_vertices = n_;
        out.form.facets = std::move(best_);
        out.perm = std::move(best_perm_);
        return out;
    }

  private:
    int n_;
    std::vector<std::uint64_t> sets_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::uint64_t> best_;
    std::vector<int> best_perm_;
    bool have_best_ = false;

    static int count_colors(const std::vector<int>& colors) {
        return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    }

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    // Equitable-style refinement: a vertex's new colour ranks its old colour
    // together with a hash of the multiset of (set size, colours of the other
    // members) over its incident sets. The hash is built from invariant data
    // only, so a collision can coarsen a refinement but never break it.
    void refine(std::vector<int>& colors) const {
        int ncolors = count_colors(colors);
        std::vector<std::pair<int, std::uint64_t>> sig(static_cast<std::size_t>(n_));
        std::vector<std::pair<int, std::uint64_t>> ranked;
        while (true) {
            for (int v = 0; v < n_; ++v) {
                std::uint64_t total = 0;
                for (std::size_t si : incident_[static_cast<std::size_t>(v)]) {
                    std::uint64_t members = static_cast<std::uint64_t>(std::popcount(sets_[si])) << 48;
                    for (std::uint64_t b = sets_[si] & ~(std::uint64_t{1} << v); b; b &= b - 1)
                        members += mix(static_cast<std::uint64_t>(colors[static_cast<std::size_t>(std::countr_zero(b))]));
                    total += mix(members);
                }
                sig[static_cast<std::size_t>(v)] = {colors[static_cast<std::size_t>(v)], total};
            }
            ranked.assign(sig.begin(), sig.end());
            std::sort(ranked.begin(), ranked.end());
            ranked.erase(std::unique(ranked.begin(), ranked.end()), ranked.end());
            for (int v = 0; v < n_; ++v)
                colors[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(ranked.begin(), ranked.end(), sig[static_cast<std::size_t>(v)]) -
                    ranked.begin());
            int now = static_cast<int>(ranked.size());
            if (now == ncolors) return;
            ncolors = now;
        }
    }

    bool has_set(std::uint64_t s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

    // Swapping u and w is an automorphism fixing every other vertex.
    bool twins(int u, int w) const {
        const std::uint64_t bu = std::uint64_t{1} << u, bw = std::uint64_t{1} << w;
        for (std::size_t si : incident_[static_cast<std::size_t>(u)]) {
            std::uint64_t s = sets_[si];
            if (s & bw) continue;
            if (!has_set((s & ~bu) | bw)) return false;
        }
        return incident_[static_cast<std::size_t>(u)].size() ==
               incident_[static_cast<std::size_t>(w)].size();
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<std::uint64_t> image;
        image.reserve(sets_.size());
        for (std::uint64_t s : sets_) {
            std::uint64_t t = 0;
            for (std::uint64_t b = s; b; b &= b - 1)
                t |= std::uint64_t{1} << colors[static_cast<std::size_t>(std::countr_zero(b))];
            image.push_back(t);
        }
        std::sort(image.begin(), image.end());
        if (!have_best_ || image < best_) {
            best_ = std::move(image);
            best_perm_ = colors;
            have_best_ = true;
        }
    }

    void search(const std::vector<int>& colors) {
        const int ncolors = count_colors(colors);
        if (ncolors == n_) {
            leaf(colors);
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(ncolors), 0);
        for (int c : colors) ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] == 1) ++target;
        std::vector<int> cell;
        for (int v = 0; v < n_; ++v)
            if (colors[static_cast<std::size_t>(v)] == target) cell.push_back(v);

        std::vector<int> tried;
        for (int u : cell) {
            bool redundant = std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, u); });
            if (redundant) continue;
            tried.push_back(u);
            std::vector<int> next(colors.size());
            for (int v = 0; v < n_; ++v) {
                int c = colors[static_cast<std::size_t>(v)];
                next[static_cast<std::size_t>(v)] = 2 * c + (c == target && v != u ? 1 : 0);
            }
            std::vector<int> ranks(next);
            std::sort(ranks.begin(), ranks.end());
            ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
            for (auto& c : next)
                c = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), c) - ranks.begin());
            refine(next);
            search(next);
        }
    }
};

} // namespace detail

/// Canonical labeling of a family of vertex sets over {0, ..., n-1}.
///
/// Individualization-refinement search; interchangeable twin vertices are
/// explored once per cell.
inline CanonicalLabeling canonical_labeling(int n, std::span<const std::uint64_t> sets) {
    if (n > max_canonical_vertices)
        throw capacity_error("canonical form: " + std::to_string(n) + " vertices exceeds the limit of " +
                             std::to_string(max_canonical_vertices));
    return detail::CanonicalSearch(n, sets).run();
}

inline CanonicalLabeling canonical_labeling(const SimplicialComplex& c) {
    SimplicialComplex k = compact(c);
    std::vector<std::uint64_t> masks;
    masks.reserve(k.n_facets());
    for (Face f : k.facets()) masks.push_back(f.bits());
    CanonicalLabeling lab = canonical_labeling(k.n_vertices(), masks);
    // Express perm in terms of the original vertex ids.
    Face vs = c.vertex_set();
    std::vector<int> perm(static_cast<std::size_t>(vs.max_vertex() + 1), -1);
    int i = 0;
    vs.for_each_vertex([&](int v) { perm[static_cast<std::size_t>(v)] = lab.perm[static_cast<std::size_t>(i++)]; });
    lab.perm = std::move(perm);
    return lab;
}

inline CanonicalForm canonical_form(const SimplicialComplex& c) { return canonical_labeling(c).form; }

/// The complex relabeled into its canonical vertex order.
inline SimplicialComplex canonical_complex(const SimplicialComplex& c) {
    CanonicalLabeling lab = canonical_labeling(c);
    return relabel(c, lab.perm);
}

inline SimplicialComplex from_canonical(const CanonicalForm& form) {
    std::vector<Face> fs;
    fs.reserve(form.facets.size());
    for (std::uint64_t m : form.facets) fs.emplace_back(m);
    return SimplicialComplex::from_facets(fs);
}

inline bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n_vertices() != b.n_vertices() || a.n_facets() != b.n_facets()) return false;
    return canonical_form(a) == canonical_form(b);
}

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(f.n_vertices);
        for (std::uint64_t m : f.facets) {
            h ^= m + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

} // namespace shellcheck
