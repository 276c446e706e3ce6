#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace shellcheck;
using V = std::vector<std::vector<int>>;

namespace {

SimplicialComplex from(const V& v) { return SimplicialComplex::from_facets(v); }

SimplicialComplex one_a() { return from({{0, 1, 2}, {3, 4, 5}, {0, 3}, {1, 4}, {2, 5}}); }

} // namespace

TEST_CASE("property metadata") {
    CHECK(implies(PropertyKind::shellable, PropertyKind::partitionable));
    CHECK(implies(PropertyKind::shellable, PropertyKind::sequentially_cm));
    CHECK_FALSE(implies(PropertyKind::partitionable, PropertyKind::sequentially_cm));
    CHECK_FALSE(implies(PropertyKind::sequentially_cm, PropertyKind::partitionable));
    for (PropertyKind p : all_properties) {
        CHECK(parse_property(property_name(p)) == p);
        CHECK(parse_property(property_key(p)) == p);
    }
    CHECK_FALSE(parse_property("vertex_decomposable"));
}

TEST_CASE("obstruction examples") {
    const auto sh = PropertyKind::shellable;
    auto r = is_obstruction(from({{0, 1}, {2, 3}}), sh);
    CHECK(r.is_obstruction);
    CHECK(is_obstruction(one_a(), sh).is_obstruction);
    for (PropertyKind p : all_properties) CHECK_FALSE(is_obstruction(from({{0, 1, 2}}), p).is_obstruction);
    CHECK(obstruction(independence_complex(cycle_graph(6)), sh));
    auto larger = is_obstruction(from({{0, 1}, {2, 3}, {4, 5}}), sh);
    CHECK_FALSE(larger.is_obstruction);
    REQUIRE(larger.failing_restriction);
    CHECK(larger.failing_restriction->size() == 5);
}

TEST_CASE("strong obstruction examples") {
    const auto sh = PropertyKind::shellable;
    CHECK(is_strong_obstruction(from({{0, 1}, {2, 3}}), sh).is_strong);
    SimplicialComplex three_a = from({{0, 1, 2}, {1, 3, 4}, {2, 3, 4}});
    auto r = is_strong_obstruction(three_a, sh);
    CHECK(r.is_obstruction);
    CHECK_FALSE(r.is_strong);
    REQUIRE(r.failing_link);
    CHECK_FALSE(connected(link(three_a, *r.failing_link)));
    CHECK(is_strong_obstruction(band_complex(2, 5), sh).is_strong);
}

TEST_CASE("hereditary examples") {
    const auto sh = PropertyKind::shellable;
    CHECK(is_hereditary(from({{0, 1, 2, 3}}), sh).hereditary);
    auto r = is_hereditary(from({{0, 1}, {2, 3}}), sh);
    CHECK_FALSE(r.hereditary);
    REQUIRE(r.failing_restriction);
    CHECK(*r.failing_restriction == Face{0, 1, 2, 3});
    CHECK(is_hereditary(independence_complex(cycle_graph(5)), sh).hereditary);
}

TEST_CASE("minimal failing restriction") {
    const auto sh = PropertyKind::shellable;
    SimplicialComplex c = from({{0, 1}, {2, 3}, {4, 5}});
    SimplicialComplex m = minimal_failing_restriction(c, sh);
    CHECK(m.n_vertices() == 4);
    CHECK(is_isomorphic(m, from({{0, 1}, {2, 3}})));
    CHECK(minimal_failing_restriction(one_a(), sh) == one_a());
    CHECK_THROWS_AS(minimal_failing_restriction(from({{0, 1}}), sh), std::invalid_argument);
    std::mt19937 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        SimplicialComplex x = oracle::random_complex(rng, 6, 3, 6);
        for (PropertyKind p : all_properties) {
            if (satisfies(x, p)) continue;
            SimplicialComplex w = minimal_failing_restriction(x, p);
            CHECK(is_obstruction(w, p).is_obstruction);
            CHECK(restriction(x, w.vertex_set()) == w);
        }
    }
}

TEST_CASE("equivalent formulations agree on random complexes") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 250; ++trial) {
        SimplicialComplex c = oracle::random_complex(rng, 6, 3, 6);
        for (PropertyKind p : all_properties) {
            const bool obs = obstruction(c, p);
            CHECK(is_obstruction(c, p).is_obstruction == obs);
            CHECK(is_obstruction_by_deletion(c, p) == obs);
            const bool strong = strong_obstruction(c, p);
            CHECK(is_strong_obstruction(c, p).is_strong == strong);
            CHECK(is_strong_obstruction_by_definition(c, p) == strong);
            if (strong) CHECK(obs);
            const bool her = hereditary(c, p);
            CHECK(is_hereditary(c, p).hereditary == her);
            CHECK(hereditary_by_obstructions(c, p) == her);
            CHECK(hereditary_by_strong_obstructions(c, p) == her);
        }
        const bool hs = hereditary(c, PropertyKind::shellable);
        CHECK(hereditary(c, PropertyKind::partitionable) == hs);
        CHECK(hereditary(c, PropertyKind::sequentially_cm) == hs);
    }
}

TEST_CASE("hereditary properties coincide on flag complexes") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        shellcheck::Graph g = oracle::random_graph(rng, 4 + trial % 5, 0.45);
        SimplicialComplex c = independence_complex(g);
        const bool hs = hereditary(c, PropertyKind::shellable);
        CHECK(hereditary(c, PropertyKind::partitionable) == hs);
        CHECK(hereditary(c, PropertyKind::sequentially_cm) == hs);
    }
}
