#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace shellcheck;
using V = std::vector<std::vector<int>>;

namespace {

std::vector<BigInt> big(std::initializer_list<int> xs) { return std::vector<BigInt>(xs.begin(), xs.end()); }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    IntMatrix out(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

std::size_t oracle_rank(const IntMatrix& m) {
    std::vector<std::vector<oracle::Rational>> q;
    for (const auto& row : m) q.emplace_back(row.begin(), row.end());
    return oracle::rational_rank(q);
}

// Six-vertex real projective plane.
SimplicialComplex rp2() {
    return SimplicialComplex::from_facets(V{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

} // namespace

TEST_CASE("Smith normal form examples") {
    auto id = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(id.factors == big({1, 1, 1}));
    CHECK(id.rank == 3);
    auto m = smith_normal_form({{2, 4}, {6, 8}});
    CHECK(m.factors == big({2, 4}));
    CHECK(m.rank == 2);
    auto zero = smith_normal_form({{0, 0}, {0, 0}});
    CHECK(zero.factors.empty());
    CHECK(zero.rank == 0);
}

TEST_CASE("Smith normal form against a rational-rank oracle") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m(static_cast<std::size_t>(dim(rng)), std::vector<std::int64_t>(static_cast<std::size_t>(dim(rng))));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng) * (trial % 3 == 0 ? 1000003 : 1);
        auto snf = smith_normal_form(m);
        CHECK(snf.rank == oracle_rank(m));
        CHECK(snf.factors.size() == snf.rank);
        for (std::size_t i = 0; i + 1 < snf.factors.size(); ++i) CHECK(snf.factors[i + 1] % snf.factors[i] == 0);
        CHECK(smith_normal_form_bigint(m).factors == snf.factors);
    }
}

TEST_CASE("reduced homology examples") {
    SimplicialComplex hollow = SimplicialComplex::from_facets(V{{0, 1}, {1, 2}, {0, 2}});
    CHECK(reduced_homology(hollow, 1).is_free_rank(1));
    CHECK(reduced_homology(hollow, 0).is_zero());
    CHECK(reduced_homology(SimplicialComplex::from_facets(V{{0, 1}, {2, 3}}), 0).is_free_rank(1));
    for (int n : {5, 6, 7}) CHECK(reduced_homology(band_complex(2, n), 1).is_free_rank(1));
    SimplicialComplex ind7 = independence_complex(cycle_graph(7));
    CHECK(reduced_homology(pure_skeleton(ind7, 2), 1).is_free_rank(1));
    CHECK(reduced_homology(SimplicialComplex{}, -1).is_free_rank(1));
    CHECK(reduced_homology(hollow, -1).is_zero());
    CHECK(reduced_homology(hollow, 4).is_zero());
    HomologyGroup h1 = reduced_homology(rp2(), 1);
    CHECK(h1.betti == 0);
    CHECK(h1.torsion == big({2}));
    CHECK(reduced_homology(rp2(), 2).is_zero());
}

TEST_CASE("reduced Euler characteristic") {
    CHECK(reduced_euler_characteristic(SimplicialComplex::from_facets(V{{0, 1, 2, 3}})) == 0);
    CHECK(reduced_euler_characteristic(SimplicialComplex::from_facets(V{{0, 1}, {2, 3}})) == 1);
    CHECK(reduced_euler_characteristic(band_complex(2, 5)) == -1);
}

TEST_CASE("boundary, Betti and Euler invariants on random complexes") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        SimplicialComplex c = oracle::random_complex(rng, 6, 4, 7);
        std::int64_t alternating = 0;
        for (int k = -1; k <= c.dim(); ++k) {
            auto product = multiply(boundary_matrix(c, k), boundary_matrix(c, k + 1));
            for (const auto& row : product)
                for (auto x : row) CHECK(x == 0);
            HomologyGroup h = reduced_homology(c, k);
            CHECK(h.betti == oracle::betti(c, k));
            CHECK(reduced_homology_via_matrices(c, k) == h);
            alternating += (k % 2 == 0 ? 1 : -1) * h.betti;
        }
        CHECK(alternating == reduced_euler_characteristic(c));
    }
}

TEST_CASE("shellable pure skeleta have Cohen-Macaulay homology") {
    std::mt19937 rng(13);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        SimplicialComplex c = oracle::random_complex(rng, 6, 4, 6);
        if (!shellable(c)) continue;
        for (int i = 0; i <= c.dim(); ++i) {
            SimplicialComplex s = pure_skeleton(c, i);
            if (!shellable(s)) continue;
            ++checked;
            for (Face tau : all_faces(s)) {
                SimplicialComplex l = link(s, tau);
                for (int k = -1; k < l.dim(); ++k) CHECK(reduced_homology(l, k).is_zero());
            }
        }
    }
    CHECK(checked > 100);
}
