#pragma once

// Brute-force reference implementations. They share only the Face and
// SimplicialComplex containers with the library; every decision is made here
// from first principles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <shellcheck/shellcheck.hpp>

namespace oracle {

using shellcheck::Face;
using shellcheck::SimplicialComplex;
using Rational = boost::multiprecision::cpp_rational;

inline std::set<std::uint64_t> face_set(const SimplicialComplex& c) {
    std::set<std::uint64_t> out;
    for (Face f : c.facets()) {
        std::uint64_t m = f.bits();
        for (std::uint64_t s = m;; s = (s - 1) & m) {
            out.insert(s);
            if (s == 0) break;
        }
    }
    if (out.empty()) out.insert(0);
    return out;
}

/// Definition check: each facet meets the union of the earlier ones in a
/// pure complex of dimension one less than the facet.
inline bool is_shelling(const std::vector<Face>& order) {
    for (std::size_t j = 1; j < order.size(); ++j) {
        const std::uint64_t s = order[j].bits();
        std::vector<std::uint64_t> common;
        for (std::uint64_t t = s;; t = (t - 1) & s) {
            for (std::size_t i = 0; i < j; ++i)
                if ((t & ~order[i].bits()) == 0) {
                    common.push_back(t);
                    break;
                }
            if (t == 0) break;
        }
        const int need = std::popcount(s) - 1;
        for (std::uint64_t t : common) {
            bool maximal = std::none_of(common.begin(), common.end(),
                                        [&](std::uint64_t u) { return u != t && (t & ~u) == 0; });
            if (maximal && std::popcount(t) != need) return false;
        }
    }
    return true;
}

/// Tries every ordering of the facets.
inline bool shellable(const SimplicialComplex& c) {
    std::vector<Face> order = c.facets();
    if (order.size() <= 1) return true;
    std::sort(order.begin(), order.end(), [](Face a, Face b) { return a.bits() < b.bits(); });
    do {
        if (is_shelling(order)) return true;
    } while (std::next_permutation(order.begin(), order.end(), [](Face a, Face b) { return a.bits() < b.bits(); }));
    return false;
}

/// Tries every choice of interval bottoms.
inline bool partitionable(const SimplicialComplex& c) {
    const std::set<std::uint64_t> faces = face_set(c);
    const std::vector<Face> facets = c.facets();
    if (facets.empty()) return true;
    std::vector<std::uint64_t> bottoms(facets.size(), 0);
    auto next = [&]() {
        for (std::size_t i = 0; i < facets.size(); ++i) {
            const std::uint64_t m = facets[i].bits();
            bottoms[i] = (bottoms[i] - m) & m;
            if (bottoms[i] != 0) return true;
        }
        return false;
    };
    do {
        std::size_t covered = 0;
        std::set<std::uint64_t> seen;
        bool ok = true;
        for (std::size_t i = 0; i < facets.size() && ok; ++i) {
            const std::uint64_t top = facets[i].bits(), free = top & ~bottoms[i];
            for (std::uint64_t s = free;; s = (s - 1) & free) {
                if (!seen.insert(bottoms[i] | s).second) {
                    ok = false;
                    break;
                }
                ++covered;
                if (s == 0) break;
            }
        }
        if (ok && covered == faces.size()) return true;
    } while (next());
    return false;
}

/// Lexicographically least sorted facet list over all vertex permutations.
inline std::vector<std::uint64_t> canonical_form(const SimplicialComplex& c) {
    const std::vector<int> vs = c.vertex_set().vertices();
    std::vector<int> perm(vs.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
        std::vector<std::uint64_t> image;
        for (Face f : c.facets()) {
            std::uint64_t m = 0;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (f.contains(vs[i])) m |= std::uint64_t{1} << perm[i];
            image.push_back(m);
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.insert(best.begin(), vs.size());
    return best;
}

inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational factor = m[r][col] / m[rank][col];
            for (std::size_t k = col; k < cols; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::uint64_t> faces_of_size(const std::set<std::uint64_t>& faces, int size) {
    std::vector<std::uint64_t> out;
    for (auto f : faces)
        if (std::popcount(f) == size) out.push_back(f);
    return out;
}

/// Boundary map from faces of size k+1 to faces of size k, the empty face
/// included, with signs from the sorted vertex order.
inline std::vector<std::vector<Rational>> boundary(const std::set<std::uint64_t>& faces, int k) {
    auto rows = faces_of_size(faces, k), cols = faces_of_size(faces, k + 1);
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int pos = 0;
        for (std::uint64_t b = cols[j]; b; b &= b - 1, ++pos) {
            std::uint64_t sub = cols[j] & ~(b & (~b + 1));
            auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            m[static_cast<std::size_t>(it - rows.begin())][j] = pos % 2 ? -1 : 1;
        }
    }
    return m;
}

/// Reduced Betti number over the rationals.
inline std::int64_t betti(const SimplicialComplex& c, int k) {
    auto faces = face_set(c);
    auto n_k = static_cast<std::int64_t>(faces_of_size(faces, k + 1).size());
    auto rank_down = static_cast<std::int64_t>(rational_rank(boundary(faces, k)));
    auto rank_up = static_cast<std::int64_t>(rational_rank(boundary(faces, k + 1)));
    return n_k - rank_down - rank_up;
}

/// Random complex on at most n vertices with facets of size 1..max_size.
inline SimplicialComplex random_complex(std::mt19937& rng, int n, int max_size, int max_facets) {
    std::uniform_int_distribution<int> count(1, max_facets), size(1, max_size);
    std::vector<Face> faces;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<int> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 0);
        std::shuffle(vs.begin(), vs.end(), rng);
        Face f;
        for (int j = 0; j < std::min(n, size(rng)); ++j) f.insert(vs[static_cast<std::size_t>(j)]);
        faces.push_back(f);
    }
    return SimplicialComplex::from_facets(faces);
}

/// Random simple graph with the given edge probability.
inline shellcheck::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    shellcheck::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

} // namespace oracle
