#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "face.hpp"

namespace shellcheck {

class invalid_face_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class dimension_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class purity_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A finite abstract simplicial complex stored by its facets.
///
/// The facet list is an antichain sorted by FaceOrder, so structurally equal
/// complexes compare equal. The vertex set is the union of the facets. The
/// smallest representable complex is {∅}, whose only facet is the empty face.
class SimplicialComplex {
  public:
    SimplicialComplex() : facets_{Face{}} {}

    /// The complex generated by the candidate faces. Non-maximal candidates are
    /// absorbed; an empty candidate list gives {∅}.
    static SimplicialComplex from_facets(std::span<const Face> candidates) {
        std::vector<Face> faces(candidates.begin(), candidates.end());
        return SimplicialComplex(maximal_faces(std::move(faces)));
    }
    static SimplicialComplex from_facets(std::initializer_list<Face> candidates) {
        return from_facets(std::span<const Face>(candidates.begin(), candidates.size()));
    }
    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& candidates) {
        std::vector<Face> faces;
        faces.reserve(candidates.size());
        for (const auto& c : candidates) faces.push_back(Face::from_vertices(c));
        return from_facets(faces);
    }

    const std::vector<Face>& facets() const { return facets_; }
    std::size_t n_facets() const { return facets_.size(); }

    Face vertex_set() const {
        Face u;
        for (Face f : facets_) u = u | f;
        return u;
    }
    int n_vertices() const { return vertex_set().size(); }
    int dim() const { return facets_.back().dim(); }
    bool is_pure() const { return facets_.front().size() == facets_.back().size(); }
    /// True for {∅}.
    bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }

    bool contains(Face f) const {
        return std::any_of(facets_.begin(), facets_.end(),
                           [f](Face s) { return f.subset_of(s); });
    }
    bool is_facet(Face f) const {
        return std::binary_search(facets_.begin(), facets_.end(), f, FaceOrder{});
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (i) s += ' ';
            s += facets_[i].to_string();
        }
        return s + "]";
    }

    /// Inclusion-maximal members of `faces`, sorted by FaceOrder. An empty
    /// input yields the single empty face.
    static std::vector<Face> maximal_faces(std::vector<Face> faces) {
        if (faces.empty()) return {Face{}};
        std::sort(faces.begin(), faces.end(),
                  [](Face a, Face b) { return FaceOrder{}(b, a); });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<Face> kept;
        kept.reserve(faces.size());
        for (Face f : faces) {
            bool absorbed = std::any_of(kept.begin(), kept.end(),
                                        [f](Face k) { return f.subset_of(k); });
            if (!absorbed) kept.push_back(f);
        }
        std::reverse(kept.begin(), kept.end());
        return kept;
    }

  private:
    explicit SimplicialComplex(std::vector<Face> facets) : facets_(std::move(facets)) {}

    std::vector<Face> facets_;
};

/// Every face of the complex exactly once, including ∅, in FaceOrder.
inline std::vector<Face> all_faces(const SimplicialComplex& c) {
    std::vector<Face> out;
    for (Face f : c.facets()) f.for_each_subset([&](Face s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), FaceOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Faces of dimension k, in FaceOrder.
inline std::vector<Face> faces_of_dim(const SimplicialComplex& c, int k) {
    std::vector<Face> out;
    const int size = k + 1;
    if (size < 0) return out;
    for (Face f : c.facets()) {
        if (f.size() < size) continue;
        if (f.size() == size) {
            out.push_back(f);
            continue;
        }
        f.for_each_subset([&](Face s) {
            if (s.size() == size) out.push_back(s);
        });
    }
    std::sort(out.begin(), out.end(), FaceOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// f-vector indexed from dimension -1: entry 0 counts ∅.
inline std::vector<std::int64_t> f_vector(const SimplicialComplex& c) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(c.dim() + 2), 0);
    for (Face s : all_faces(c)) ++f[static_cast<std::size_t>(s.size())];
    return f;
}

inline SimplicialComplex restriction(const SimplicialComplex& c, Face w) {
    std::vector<Face> parts;
    parts.reserve(c.n_facets());
    for (Face f : c.facets()) parts.push_back(f & w);
    return SimplicialComplex::from_facets(parts);
}

inline SimplicialComplex deletion(const SimplicialComplex& c, Face u) {
    return restriction(c, c.vertex_set() - u);
}

inline SimplicialComplex link(const SimplicialComplex& c, Face tau) {
    std::vector<Face> parts;
    for (Face f : c.facets())
        if (tau.subset_of(f)) parts.push_back(f - tau);
    if (parts.empty())
        throw invalid_face_error("link: " + tau.to_string() + " is not a face");
    return SimplicialComplex::from_facets(parts);
}

/// The subcomplex generated by all i-dimensional faces; {∅} when there are none.
inline SimplicialComplex pure_skeleton(const SimplicialComplex& c, int i) {
    if (i < 0 || i > c.dim()) return SimplicialComplex{};
    return SimplicialComplex::from_facets(faces_of_dim(c, i));
}

/// Adjacency of the 1-skeleton as neighbour masks, indexed by vertex id.
inline std::vector<std::uint64_t> neighbour_masks(const SimplicialComplex& c) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(c.vertex_set().max_vertex() + 1), 0);
    for (Face f : c.facets())
        f.for_each_vertex([&](int v) { adj[static_cast<std::size_t>(v)] |= f.without(v).bits(); });
    return adj;
}

/// Connected components of the vertex set under the given adjacency.
inline std::vector<Face> components(Face vertices, std::span<const std::uint64_t> adj) {
    std::vector<Face> out;
    std::uint64_t left = vertices.bits();
    while (left) {
        std::uint64_t comp = left & (~left + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b; b &= b - 1)
                next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
            next &= vertices.bits() & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(Face(comp));
        left &= ~comp;
    }
    return out;
}

/// Connectivity of the 1-skeleton; {∅} and a single vertex count as connected.
inline bool connected(const SimplicialComplex& c) {
    auto adj = neighbour_masks(c);
    return components(c.vertex_set(), adj).size() <= 1;
}

/// Facets connected through shared codimension-one faces. Requires a pure complex.
inline bool strongly_connected(const SimplicialComplex& c) {
    if (!c.is_pure()) throw purity_error("strongly_connected: complex is not pure");
    const auto& fs = c.facets();
    const int d = c.dim();
    std::vector<char> seen(fs.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < fs.size(); ++j) {
            if (seen[j] || (fs[i] & fs[j]).size() != d) continue;
            seen[j] = 1;
            ++reached;
            stack.push_back(j);
        }
    }
    return reached == fs.size();
}

enum class EdgeKind { boundary, nonboundary };

/// Labels each edge of a 2-dimensional complex: nonboundary when it lies in at
/// least two 2-facets, boundary otherwise (including edges in no 2-facet).
inline std::map<Face, EdgeKind, FaceOrder> boundary_classification(const SimplicialComplex& c) {
    if (c.dim() != 2)
        throw dimension_error("boundary_classification: complex has dimension " +
                              std::to_string(c.dim()) + ", expected 2");
    std::map<Face, EdgeKind, FaceOrder> out;
    for (Face e : faces_of_dim(c, 1)) {
        int count = 0;
        for (Face f : c.facets())
            if (f.size() == 3 && e.subset_of(f)) ++count;
        out.emplace(e, count >= 2 ? EdgeKind::nonboundary : EdgeKind::boundary);
    }
    return out;
}

/// Applies a vertex relabeling; perm[v] is the new id of vertex v.
inline SimplicialComplex relabel(const SimplicialComplex& c, std::span<const int> perm) {
    std::vector<Face> out;
    out.reserve(c.n_facets());
    for (Face f : c.facets()) {
        Face g;
        f.for_each_vertex([&](int v) { g.insert(perm[static_cast<std::size_t>(v)]); });
        out.push_back(g);
    }
    return SimplicialComplex::from_facets(out);
}

/// Relabels vertices to 0..n-1 preserving their relative order.
inline SimplicialComplex compact(const SimplicialComplex& c) {
    Face vs = c.vertex_set();
    if (vs == Face::range(vs.size())) return c;
    std::vector<int> perm(static_cast<std::size_t>(vs.max_vertex() + 1), -1);
    int next = 0;
    vs.for_each_vertex([&](int v) { perm[static_cast<std::size_t>(v)] = next++; });
    return relabel(c, perm);
}

/// Adds the given faces to the complex.
inline SimplicialComplex with_faces(const SimplicialComplex& c, std::span<const Face> extra) {
    std::vector<Face> all(c.facets().begin(), c.facets().end());
    all.insert(all.end(), extra.begin(), extra.end());
    return SimplicialComplex::from_facets(all);
}

/// Removes a facet; its proper faces stay when other facets contain them or
/// become new facets otherwise.
inline SimplicialComplex without_facet(const SimplicialComplex& c, Face facet) {
    std::vector<Face> rest;
    for (Face f : c.facets())
        if (f != facet) rest.push_back(f);
    facet.for_each_vertex([&](int v) { rest.push_back(facet.without(v)); });
    return SimplicialComplex::from_facets(rest);
}

} // namespace shellcheck
