#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "homology.hpp"
#include "obstruction.hpp"

namespace shellcheck {

/// Simple undirected graph on vertices 0..n-1 stored as adjacency masks.
class Graph {
  public:
    explicit Graph(int n = 0) : adj_(static_cast<std::size_t>(n), 0) {
        if (n > max_vertices) throw capacity_error("graph: " + std::to_string(n) + " vertices exceeds 64");
    }

    int n() const { return static_cast<int>(adj_.size()); }
    std::uint64_t neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("graph: loops are not allowed");
        if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::out_of_range("graph: vertex out of range");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    std::size_t n_edges() const {
        std::size_t twice = 0;
        for (auto a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
        return twice / 2;
    }

    Graph complement() const {
        Graph g(n());
        for (int u = 0; u < n(); ++u)
            for (int v = u + 1; v < n(); ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

  private:
    std::vector<std::uint64_t> adj_;
};

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

namespace detail {

// Bron-Kerbosch with pivoting, run on non-adjacency so cliques are
// independent sets.
inline void maximal_independent_sets(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                                     std::vector<Face>& out) {
    if (p == 0 && x == 0) {
        out.emplace_back(r);
        return;
    }
    const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    auto non_nbrs = [&](int v) { return all & ~g.neighbours(v) & ~(std::uint64_t{1} << v); };
    int pivot = std::countr_zero(p | x);
    std::uint64_t best = 0;
    for (std::uint64_t b = p | x; b; b &= b - 1) {
        int u = std::countr_zero(b);
        std::uint64_t cover = p & non_nbrs(u);
        if (std::popcount(cover) > std::popcount(best)) {
            best = cover;
            pivot = u;
        }
    }
    for (std::uint64_t b = p & ~non_nbrs(pivot); b; b &= b - 1) {
        int v = std::countr_zero(b);
        std::uint64_t bit = std::uint64_t{1} << v;
        maximal_independent_sets(g, r | bit, p & non_nbrs(v), x & non_nbrs(v), out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace detail

/// The complex of independent sets; facets are the maximal independent sets.
inline SimplicialComplex independence_complex(const Graph& g) {
    if (g.n() == 0) return SimplicialComplex{};
    std::vector<Face> facets;
    const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    detail::maximal_independent_sets(g, 0, all, 0, facets);
    return SimplicialComplex::from_facets(facets);
}

/// Graph on 0..max vertex joining two vertices of the complex when they do
/// not span an edge. Its independence complex is the flag complex spanned by
/// the complex's 1-skeleton.
inline Graph non_edge_graph(const SimplicialComplex& c) {
    Face vs = c.vertex_set();
    Graph g(vs.max_vertex() + 1);
    for (int u : vs.vertices())
        for (int v : vs.vertices())
            if (u < v && !c.contains(Face{}.with(u).with(v))) g.add_edge(u, v);
    return g;
}

struct FlagReport {
    bool flag = true;
    std::vector<Face> minimal_nonfaces;
};

/// Minimal nonfaces: vertex sets outside the complex whose proper subsets are
/// all faces.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    std::vector<Face> faces = all_faces(c);
    std::unordered_set<Face> is_face(faces.begin(), faces.end());
    Face vs = c.vertex_set();
    std::vector<Face> out;
    std::unordered_set<Face> seen;
    for (Face f : faces) {
        for (int v : (vs - f).vertices()) {
            Face s = f.with(v);
            if (is_face.count(s) || !seen.insert(s).second) continue;
            bool boundary_present = true;
            s.for_each_vertex([&](int u) { boundary_present = boundary_present && is_face.count(s.without(u)); });
            if (boundary_present) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), FaceOrder{});
    return out;
}

inline FlagReport is_flag(const SimplicialComplex& c) {
    FlagReport r;
    r.minimal_nonfaces = minimal_nonfaces(c);
    for (Face f : r.minimal_nonfaces)
        if (f.size() != 2) r.flag = false;
    return r;
}

struct IndependenceCycleCheck {
    int n = 0;
    int dim = 0;
    bool dim_matches = false;
    /// Even n: the two alternating facets are present and disjoint.
    /// Odd n: the top pure skeleton is the cyclic band of that dimension.
    bool facet_structure = false;
    bool shellable = false;
    bool obstruction = false;
    bool strong_obstruction = false;
    bool partitionable = false;
    bool sequentially_cm = false;
    /// Even n: two facets with private boundaries. Odd n: band pattern.
    bool partition_witness = false;
    /// Even n: top skeleton not strongly connected. Odd n: H̃_1 of the top
    /// skeleton is Z.
    bool scm_witness = false;
    std::string top_h1;
    bool expected = false;
    bool ok = false;
};

/// Examines Ind(C_n): an obstruction to shellability exactly when n != 5,
/// and each such obstruction neither partitionable nor sequentially
/// Cohen-Macaulay with the structural reason attached.
inline IndependenceCycleCheck check_independence_cycle(int n) {
    IndependenceCycleCheck r;
    r.n = n;
    SimplicialComplex c = independence_complex(cycle_graph(n));
    r.dim = c.dim();
    r.dim_matches = r.dim == n / 2 - 1;
    SimplicialComplex top = pure_skeleton(c, r.dim);
    r.top_h1 = reduced_homology(top, 1).to_string();
    if (n % 2 == 0) {
        Face evens, odds;
        for (int i = 0; i < n; i += 2) evens.insert(i);
        for (int i = 1; i < n; i += 2) odds.insert(i);
        r.facet_structure = c.is_facet(evens) && c.is_facet(odds) && !evens.intersects(odds);
        r.partition_witness = two_private_facets(c);
        r.scm_witness = !strongly_connected(top);
    } else {
        r.facet_structure = r.dim >= 1 && is_isomorphic(top, band_complex(r.dim, n));
        r.partition_witness = has_band_pattern(c);
        r.scm_witness = reduced_homology(top, 1).is_free_rank(1);
    }
    r.shellable = shellable(c);
    r.obstruction = obstruction(c, PropertyKind::shellable);
    r.strong_obstruction = r.obstruction && strong_obstruction(c, PropertyKind::shellable);
    r.partitionable = partitionable(c);
    r.sequentially_cm = sequentially_cm(c);
    r.expected = n != 5;
    r.ok = r.dim_matches && r.facet_structure && r.obstruction == r.expected;
    if (r.expected)
        r.ok = r.ok && r.strong_obstruction && !r.partitionable && !r.sequentially_cm && r.partition_witness &&
               r.scm_witness;
    else
        r.ok = r.ok && r.shellable && hereditary(c, PropertyKind::shellable);
    return r;
}

struct IndependenceCycleReport {
    std::vector<IndependenceCycleCheck> rows;
    bool ok = true;
    /// The statement is universal in n; only this finite range was examined.
    int n_max = 0;
};

inline IndependenceCycleReport verify_woodroofe_small(int n_max = 9) {
    if (n_max > 10) throw std::invalid_argument("verify_woodroofe_small: n_max must be at most 10");
    IndependenceCycleReport report;
    report.n_max = n_max;
    for (int n = 4; n <= n_max; ++n) {
        report.rows.push_back(check_independence_cycle(n));
        report.ok = report.ok && report.rows.back().ok;
    }
    return report;
}

} // namespace shellcheck
