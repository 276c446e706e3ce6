#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "complex.hpp"
#include "smith.hpp"

namespace shellcheck {

/// A finitely generated abelian group Z^betti ⊕ Z/t1 ⊕ ... ⊕ Z/tm with
/// t1 | t2 | ... | tm and every ti > 1.
struct HomologyGroup {
    std::int64_t betti = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool is_free_rank(std::int64_t r) const { return betti == r && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
        for (const auto& t : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.str();
        }
        return s;
    }
};

/// Matrix of the boundary map from k-faces to (k-1)-faces with the sorted
/// vertex orientation: the face obtained by omitting the i-th smallest vertex
/// gets sign (-1)^i. For k = 0 the single row is the empty face (augmentation).
inline IntMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    std::vector<Face> cols = faces_of_dim(c, k);
    std::vector<Face> rows = faces_of_dim(c, k - 1);
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int pos = 0;
        cols[j].for_each_vertex([&](int v) {
            Face g = cols[j].without(v);
            auto it = std::lower_bound(rows.begin(), rows.end(), g, FaceOrder{});
            m[static_cast<std::size_t>(it - rows.begin())][j] = (pos % 2 == 0) ? 1 : -1;
            ++pos;
        });
    }
    return m;
}

namespace detail {

inline std::size_t boundary_rank(const SimplicialComplex& c, int k, SmithNormalForm* snf_out = nullptr) {
    if (k < 0 || k > c.dim()) return 0;
    SmithNormalForm snf = smith_normal_form(boundary_matrix(c, k));
    std::size_t r = snf.rank;
    if (snf_out) *snf_out = std::move(snf);
    return r;
}

inline std::int64_t count_faces(const SimplicialComplex& c, int k) {
    return static_cast<std::int64_t>(faces_of_dim(c, k).size());
}

} // namespace detail

/// H̃_k over Z computed from boundary matrices and Smith normal form only.
inline HomologyGroup reduced_homology_via_matrices(const SimplicialComplex& c, int k) {
    HomologyGroup h;
    if (k < -1 || k > c.dim()) return h;
    const std::int64_t fk = detail::count_faces(c, k);
    const auto rank_k = static_cast<std::int64_t>(detail::boundary_rank(c, k));
    SmithNormalForm next;
    const auto rank_next = static_cast<std::int64_t>(detail::boundary_rank(c, k + 1, &next));
    h.betti = fk - rank_k - rank_next;
    for (const auto& d : next.factors)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

/// Reduced homology H̃_k(Γ; Z). Degree 0 is read off the connected
/// components; higher degrees go through Smith normal form.
inline HomologyGroup reduced_homology(const SimplicialComplex& c, int k) {
    HomologyGroup h;
    if (k < -1 || k > c.dim()) return h;
    if (k == -1) {
        h.betti = c.is_empty_complex() ? 1 : 0;
        return h;
    }
    if (k == 0) {
        auto adj = neighbour_masks(c);
        h.betti = static_cast<std::int64_t>(components(c.vertex_set(), adj).size()) - 1;
        return h;
    }
    return reduced_homology_via_matrices(c, k);
}

/// Σ (-1)^i f_i over i >= -1.
inline std::int64_t reduced_euler_characteristic(const SimplicialComplex& c) {
    auto f = f_vector(c);
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? -1 : 1) * f[i];
    return chi;
}

} // namespace shellcheck
