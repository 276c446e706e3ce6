#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace shellcheck;
using V = std::vector<std::vector<int>>;

namespace {

SimplicialComplex from(const V& v) { return SimplicialComplex::from_facets(v); }

// Every complex on exactly n vertices with facets of size at most dim+1,
// reduced to isomorphism classes through the permutation oracle.
std::size_t brute_class_count(int dim, int n) {
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
        if (std::popcount(s) <= dim + 1 && (dim == 0 || std::popcount(s) >= 2)) candidates.push_back(s);
    std::set<std::vector<std::uint64_t>> classes;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
        std::vector<Face> faces;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if ((pick >> i) & 1u) faces.push_back(Face(candidates[i]));
        SimplicialComplex c = SimplicialComplex::from_facets(faces);
        if (c.dim() != dim || c.n_vertices() != n) continue;
        if (dim >= 1 && std::any_of(c.facets().begin(), c.facets().end(), [](Face f) { return f.size() == 1; }))
            continue;
        classes.insert(oracle::canonical_form(c));
    }
    return classes.size();
}

} // namespace

TEST_CASE("enumerate_complexes counts") {
    CHECK(enumerate_complexes(0, 3).size() == 1);
    CHECK(enumerate_complexes(1, 3).size() == 2);
    CHECK(enumerate_complexes(1, 4).size() == 7);
    CHECK(enumerate_complexes(1, 4).size() == brute_class_count(1, 4));
    CHECK(enumerate_complexes(2, 4).size() == brute_class_count(2, 4));
    CHECK_THROWS_AS(enumerate_complexes(2, 7), capacity_error);
    CHECK_THROWS_AS(enumerate_complexes(3, 4), capacity_error);
    auto cs = enumerate_complexes(2, 5);
    std::set<CanonicalForm> forms;
    for (const auto& c : cs) {
        CHECK(c.dim() == 2);
        CHECK(c.n_vertices() == 5);
        forms.insert(canonical_form(c));
    }
    CHECK(forms.size() == cs.size());
}

TEST_CASE("low-dimensional obstruction catalogs") {
    EnumerationTask t;
    t.dimension = 0;
    t.max_vertices = 8;
    CHECK(enumerate_obstructions(t).entries.empty());
    t.dimension = 1;
    Catalog one = enumerate_obstructions(t);
    REQUIRE(one.entries.size() == 1);
    CHECK(is_isomorphic(one.entries[0].complex, from({{0, 1}, {2, 3}})));
    CHECK(one.entries[0].label == "2K2");
    t.max_vertices = 9;
    CHECK_THROWS_AS(enumerate_obstructions(t), capacity_error);
}

TEST_CASE("pruned and generic searches agree") {
    for (PropertyKind p : all_properties)
        for (int n = 3; n <= 7; ++n) {
            INFO("dimension 1, " << property_name(p) << ", n = " << n);
            CHECK(obstruction_forms(1, n, p, false) == obstruction_forms(1, n, p, true));
        }
    for (PropertyKind p : all_properties)
        for (int n = 3; n <= 6; ++n) {
            INFO(property_name(p) << ", n = " << n);
            CHECK(obstruction_forms(2, n, p, false) == obstruction_forms(2, n, p, true));
        }
}

TEST_CASE("enumerated obstructions satisfy the structural lemmas") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& f : obstruction_forms(2, n, PropertyKind::shellable)) {
            SimplicialComplex c = from_canonical(f);
            CHECK(is_obstruction(c, PropertyKind::shellable).is_obstruction);
            CHECK(connected(c));
            for (Face facet : c.facets()) CHECK(facet.size() >= 2);
            CHECK(faces_of_dim(c, 2).size() >= 2);
        }
}

TEST_CASE("edge-minimal catalog and labels") {
    EnumerationTask t;
    t.mode = EnumerationMode::edge_minimal_obstructions;
    Catalog cat = enumerate_obstructions(t);
    REQUIRE(cat.entries.size() == 12);
    std::map<std::string, int> families;
    std::set<std::string> labels;
    for (const auto& e : cat.entries) {
        REQUIRE(e.label);
        labels.insert(*e.label);
        ++families[label_family(*e.label)];
    }
    CHECK(families == std::map<std::string, int>{{"1", 3}, {"2", 1}, {"3", 5}, {"4", 3}});
    CHECK(labels.size() == 12);
    for (const auto& [label, ref] : reference_complexes()) {
        if (label == "2K2") continue;
        bool found = false;
        for (const auto& e : cat.entries) found = found || (e.label == label && is_isomorphic(e.complex, ref));
        CHECK(found);
    }
}

TEST_CASE("edge-addition closure and catalog determinism") {
    EnumerationTask t;
    Catalog cat = enumerate_obstructions(t);
    ClosureReport r = verify_edge_addition_closure(cat);
    CHECK(r.ok());
    CHECK(r.augmentations_checked > 0);
    SimplicialComplex one_a = from({{0, 1, 2}, {3, 4, 5}, {0, 3}, {1, 4}, {2, 5}});
    std::vector<Face> diagonal{Face{0, 4}};
    CHECK(obstruction(with_faces(one_a, diagonal), PropertyKind::shellable));
    SimplicialComplex two_full = from({{0, 1, 2}, {0, 3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(obstruction(two_full, PropertyKind::shellable));
    const std::string first = catalog_to_json(cat).dump();
    t.workers = 2;
    clear_obstruction_lists();
    CHECK(catalog_to_json(enumerate_obstructions(t)).dump() == first);
    EnumerationTask low;
    low.dimension = 1;
    CHECK_THROWS_AS(verify_edge_addition_closure(enumerate_obstructions(low)), dimension_error);
}

TEST_CASE("catalog JSON layout") {
    EnumerationTask t;
    t.dimension = 1;
    t.max_vertices = 5;
    auto j = catalog_to_json(enumerate_obstructions(t));
    CHECK(j["version"] == catalog_schema_version);
    REQUIRE(j["entries"].size() == 1);
    const auto& e = j["entries"][0];
    CHECK(e["label"] == "2K2");
    CHECK(e["n_vertices"] == 4);
    CHECK(e["facets"].size() == 2);
    CHECK(e["obstruction"]["scm"] == true);
    CHECK(e["strong_obstruction"]["partitionable"] == true);
    CHECK(e["edge_minimal"] == true);
    SimplicialComplex back = SimplicialComplex::from_facets(e["facets"].get<std::vector<std::vector<int>>>());
    CHECK(is_isomorphic(back, from({{0, 1}, {2, 3}})));
}
