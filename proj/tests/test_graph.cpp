#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace shellcheck;
using V = std::vector<std::vector<int>>;

namespace {

SimplicialComplex from(const V& v) { return SimplicialComplex::from_facets(v); }

} // namespace

TEST_CASE("independence complexes of cycles") {
    CHECK(independence_complex(cycle_graph(4)) == from({{0, 2}, {1, 3}}));
    SimplicialComplex ind5 = independence_complex(cycle_graph(5));
    CHECK(ind5.n_facets() == 5);
    CHECK(ind5.dim() == 1);
    CHECK(is_isomorphic(ind5, band_complex(1, 5)));
    SimplicialComplex ind7 = independence_complex(cycle_graph(7));
    std::vector<int> doubling(7);
    for (int k = 0; k < 7; ++k) doubling[static_cast<std::size_t>(k)] = (2 * k) % 7;
    CHECK(relabel(band_complex(2, 7), doubling) == pure_skeleton(ind7, 2));
    CHECK(is_isomorphic(independence_complex(cycle_graph(6)),
                        from({{0, 1, 2}, {3, 4, 5}, {0, 3}, {1, 4}, {2, 5}})));
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("independence complex against brute force") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 6;
        Graph g = oracle::random_graph(rng, n, 0.4);
        SimplicialComplex c = independence_complex(g);
        std::set<std::uint64_t> independent;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if ((s >> u) & 1u) ok = (g.neighbours(u) & s) == 0;
            if (ok) independent.insert(s);
        }
        CHECK(oracle::face_set(c) == independent);
    }
}

TEST_CASE("flag recognition") {
    auto hollow = is_flag(from({{0, 1}, {1, 2}, {0, 2}}));
    CHECK_FALSE(hollow.flag);
    CHECK(hollow.minimal_nonfaces == std::vector<Face>{Face{0, 1, 2}});
    auto two_k2 = is_flag(from({{0, 1}, {2, 3}}));
    CHECK(two_k2.flag);
    CHECK(two_k2.minimal_nonfaces.size() == 4);
    for (int n = 4; n <= 10; ++n) CHECK(is_flag(independence_complex(cycle_graph(n))).flag);
    std::mt19937 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        SimplicialComplex c = compact(oracle::random_complex(rng, 6, 3, 6));
        const bool flag = is_flag(c).flag;
        CHECK(flag == (independence_complex(non_edge_graph(c)) == c));
        for (Face f : is_flag(c).minimal_nonfaces) {
            CHECK_FALSE(c.contains(f));
            f.for_each_vertex([&](int v) { CHECK(c.contains(f.without(v))); });
        }
    }
}

TEST_CASE("independence complexes of cycles as obstructions") {
    auto report = verify_woodroofe_small(9);
    CHECK(report.ok);
    CHECK(report.n_max == 9);
    REQUIRE(report.rows.size() == 6);
    for (const auto& row : report.rows) {
        INFO("n = " << row.n);
        CHECK(row.ok);
        CHECK(row.obstruction == (row.n != 5));
        CHECK(row.dim == row.n / 2 - 1);
    }
    CHECK(report.rows[1].shellable);
    CHECK(report.rows[3].top_h1 == "Z");
    CHECK(report.rows[5].top_h1 == "Z");
    CHECK_THROWS_AS(verify_woodroofe_small(11), std::invalid_argument);
}
