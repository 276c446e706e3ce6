#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumeration.hpp"
#include "graph.hpp"

namespace shellcheck {

struct CatalogEntry {
    std::string id;
    std::optional<std::string> label;
    /// Labels of the edge-minimal entries this one extends by edges.
    std::vector<std::string> contains;
    SimplicialComplex complex;
    CanonicalForm form;
    bool shellable = false;
    bool partitionable = false;
    bool sequentially_cm = false;
    std::array<bool, 3> obstruction{};
    std::array<bool, 3> strong_obstruction{};
    bool edge_minimal = false;
};

struct Catalog {
    int dimension = 0;
    int max_vertices = 0;
    PropertyKind property = PropertyKind::shellable;
    EnumerationMode mode = EnumerationMode::obstructions;
    std::vector<CatalogEntry> entries;
};

inline std::string_view mode_name(EnumerationMode m) {
    switch (m) {
    case EnumerationMode::obstructions: return "obstructions";
    case EnumerationMode::strong_obstructions: return "strong_obstructions";
    case EnumerationMode::edge_minimal_obstructions: return "edge_minimal_obstructions";
    }
    return "";
}

/// The named constructions of the edge-minimal list. Vertices a..f are 0..5.
inline std::vector<std::pair<std::string, SimplicialComplex>> reference_complexes() {
    using V = std::vector<std::vector<int>>;
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    out.emplace_back("2K2", SimplicialComplex::from_facets(V{{0, 1}, {2, 3}}));
    out.emplace_back("1a", SimplicialComplex::from_facets(V{{0, 1, 2}, {3, 4, 5}, {0, 3}, {1, 4}, {2, 5}}));
    out.emplace_back("1b", SimplicialComplex::from_facets(V{{0, 1, 2}, {3, 4, 5}, {0, 3}, {0, 4}, {1, 4}, {2, 3}}));
    out.emplace_back("1c", SimplicialComplex::from_facets(V{{0, 1, 2}, {3, 4, 5}, {0, 3}, {0, 4}, {1, 3}, {1, 4}}));
    out.emplace_back("2", SimplicialComplex::from_facets(V{{0, 1, 2}, {0, 3, 4}, {1, 3}}));
    out.emplace_back("4a", band_complex(2, 5));
    out.emplace_back("4b", band_complex(2, 6));
    out.emplace_back("4c", band_complex(2, 7));
    return out;
}

/// Label family: "1", "2", "3", "4", or "2K2".
inline std::string label_family(const std::string& label) { return label == "2K2" ? label : label.substr(0, 1); }

namespace detail {

inline std::vector<Face> facets_of_dim(const SimplicialComplex& c, int d) {
    std::vector<Face> out;
    for (Face f : c.facets())
        if (f.dim() == d) out.push_back(f);
    return out;
}

/// Forms of every complex obtained by deleting a subset of the 1-facets.
inline std::vector<std::pair<CanonicalForm, std::size_t>> edge_reductions(const SimplicialComplex& c) {
    std::vector<Face> edges = facets_of_dim(c, 1), rest;
    for (Face f : c.facets())
        if (f.dim() != 1) rest.push_back(f);
    std::vector<std::pair<CanonicalForm, std::size_t>> out;
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << edges.size()); ++sel) {
        std::vector<Face> fs = rest;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if ((sel >> i) & 1u) fs.push_back(edges[i]);
        SimplicialComplex sub = SimplicialComplex::from_facets(fs);
        if (sub.vertex_set() != c.vertex_set()) continue;
        out.emplace_back(canonical_form(sub), static_cast<std::size_t>(std::popcount(sel)));
    }
    return out;
}

inline std::string padded(std::size_t v, int width) {
    std::string s = std::to_string(v);
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

} // namespace detail

/// Names the edge-minimal entries after the reference constructions. The
/// five remaining 5-vertex entries with a nonboundary edge are lettered
/// 3a..3e in catalog order. Other entries list the labels they contain.
inline void assign_labels(std::vector<CatalogEntry>& entries) {
    std::map<CanonicalForm, std::string> named;
    for (const auto& [label, c] : reference_complexes()) named.emplace(canonical_form(c), label);
    char next_letter = 'a';
    for (auto& e : entries) {
        if (!e.edge_minimal) continue;
        if (auto it = named.find(e.form); it != named.end()) {
            e.label = it->second;
            continue;
        }
        bool type3_shape = false;
        if (e.complex.dim() == 2 && e.complex.n_vertices() == 5) {
            const auto kinds = boundary_classification(e.complex);
            type3_shape = std::any_of(kinds.begin(), kinds.end(),
                                      [](const auto& kv) { return kv.second == EdgeKind::nonboundary; });
        }
        if (type3_shape && next_letter <= 'e') {
            e.label = std::string("3") + next_letter++;
            named.emplace(e.form, *e.label);
        }
    }
    for (auto& e : entries) {
        std::set<std::string> found;
        for (const auto& [form, removed] : detail::edge_reductions(e.complex))
            if (auto it = named.find(form); it != named.end() && (removed > 0 || !e.label)) found.insert(it->second);
        if (e.label) found.erase(*e.label);
        e.contains.assign(found.begin(), found.end());
    }
}

inline CatalogEntry make_entry(const CanonicalForm& form, PropertyKind p) {
    CatalogEntry e;
    e.form = form;
    e.complex = from_canonical(form);
    e.shellable = shellable(e.complex);
    e.partitionable = partitionable(e.complex);
    e.sequentially_cm = sequentially_cm(e.complex);
    for (PropertyKind q : all_properties) {
        const auto i = static_cast<std::size_t>(q);
        e.obstruction[i] = obstruction(e.complex, q);
        e.strong_obstruction[i] = e.obstruction[i] && strong_obstruction(e.complex, q);
    }
    e.edge_minimal = e.obstruction[static_cast<std::size_t>(p)] && edge_minimal(e.complex, p);
    return e;
}

/// Runs the search described by the task and returns the sorted, labeled
/// catalog. Entries are ordered by vertex count, facet count, then canonical
/// form.
inline Catalog enumerate_obstructions(const EnumerationTask& task) {
    if (task.dimension < 0 || task.dimension > 2)
        throw capacity_error("obstruction search supports dimensions 0 to 2");
    if (task.max_vertices > obstruction_vertex_limit(task.dimension))
        throw capacity_error("obstruction search in dimension " + std::to_string(task.dimension) +
                             " supports at most " + std::to_string(obstruction_vertex_limit(task.dimension)) +
                             " vertices");
    if (task.generic && task.dimension == 2 && task.max_vertices > exhaustive_vertex_limit(2))
        throw capacity_error("the generic search supports at most " + std::to_string(exhaustive_vertex_limit(2)) +
                             " vertices in dimension 2");
    Catalog cat;
    cat.dimension = task.dimension;
    cat.max_vertices = task.max_vertices;
    cat.property = task.property;
    cat.mode = task.mode;
    std::vector<CanonicalForm> forms;
    for (int n = 0; n <= task.max_vertices; ++n)
        for (auto& f : obstruction_forms(task.dimension, n, task.property, task.generic, task.workers))
            forms.push_back(f);
    std::sort(forms.begin(), forms.end());
    std::vector<CatalogEntry> all;
    for (const auto& f : forms) all.push_back(make_entry(f, task.property));
    assign_labels(all);
    std::map<int, std::size_t> per_n;
    for (auto& e : all) {
        bool keep = task.mode == EnumerationMode::obstructions ||
                    (task.mode == EnumerationMode::strong_obstructions &&
                     e.strong_obstruction[static_cast<std::size_t>(task.property)]) ||
                    (task.mode == EnumerationMode::edge_minimal_obstructions && e.edge_minimal);
        if (!keep) continue;
        e.id = "d" + std::to_string(task.dimension) + "-n" + std::to_string(e.form.n_vertices) + "-" +
               detail::padded(++per_n[e.form.n_vertices], 3);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

inline nlohmann::ordered_json entry_to_json(const CatalogEntry& e) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    if (e.label) j["label"] = *e.label;
    if (!e.contains.empty()) j["contains"] = e.contains;
    j["n_vertices"] = e.form.n_vertices;
    nlohmann::ordered_json facets = nlohmann::ordered_json::array();
    for (Face f : e.complex.facets()) facets.push_back(f.vertices());
    j["facets"] = facets;
    j["dim"] = e.complex.dim();
    j["shellable"] = e.shellable;
    j["partitionable"] = e.partitionable;
    j["sequentially_cm"] = e.sequentially_cm;
    auto flags = [](const std::array<bool, 3>& a) {
        nlohmann::ordered_json o;
        for (PropertyKind q : all_properties) o[std::string(property_key(q))] = a[static_cast<std::size_t>(q)];
        return o;
    };
    j["obstruction"] = flags(e.obstruction);
    j["strong_obstruction"] = flags(e.strong_obstruction);
    j["edge_minimal"] = e.edge_minimal;
    return j;
}

inline constexpr int catalog_schema_version = 1;

inline nlohmann::ordered_json catalog_to_json(const Catalog& cat) {
    nlohmann::ordered_json j;
    j["schema"] = "shellcheck-catalog";
    j["version"] = catalog_schema_version;
    j["dimension"] = cat.dimension;
    j["max_vertices"] = cat.max_vertices;
    j["property"] = std::string(property_name(cat.property));
    j["mode"] = std::string(mode_name(cat.mode));
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : cat.entries) entries.push_back(entry_to_json(e));
    j["entries"] = entries;
    return j;
}

/// Counts per label family; unlabeled entries are grouped by the family of
/// the labels they contain.
inline std::map<std::string, std::size_t> family_counts(const Catalog& cat) {
    std::map<std::string, std::size_t> out;
    for (const auto& e : cat.entries) {
        if (e.label) {
            ++out[label_family(*e.label)];
        } else if (!e.contains.empty()) {
            ++out[label_family(e.contains.front()) + "+edges"];
        } else {
            ++out["unlabeled"];
        }
    }
    return out;
}

// Verification reports over the obstruction lists.

struct CoincidenceReport {
    int dimension = 0;
    int max_vertices = 0;
    std::array<std::size_t, 3> counts{};
    bool identical = false;
    /// Every shellability obstruction fails the other two properties.
    bool all_fail_others = false;
    /// Every shellability obstruction carries the structural witness that
    /// explains the failure for its family.
    bool witnesses_found = false;
    std::vector<std::string> problems;
};

/// A vertex whose link has two tree components in its pure 1-skeleton.
inline std::optional<int> vertex_with_split_link(const SimplicialComplex& c) {
    for (int v : c.vertex_set().vertices()) {
        SimplicialComplex l = link(c, Face::single(v));
        if (l.dim() >= 1 && tree_components(l) >= 2 && !connected(pure_skeleton(l, 1))) return v;
    }
    return std::nullopt;
}

/// Checks the family-specific reason a shellability obstruction is neither
/// partitionable nor sequentially Cohen-Macaulay.
inline bool family_witness(const SimplicialComplex& c, const std::string& family) {
    if (family == "2K2") return tree_components(c) >= 2 && !connected(pure_skeleton(c, 1));
    SimplicialComplex top = pure_skeleton(c, 2);
    if (family == "1") return two_private_facets(c) && !strongly_connected(top);
    if (family == "2" || family == "3") return vertex_with_split_link(c).has_value();
    if (family == "4") return has_band_pattern(c) && reduced_homology(top, 1).is_free_rank(1);
    return false;
}

inline CoincidenceReport verify_coincidence(int dim, int max_vertices, int workers = 1) {
    CoincidenceReport r;
    r.dimension = dim;
    r.max_vertices = max_vertices;
    std::array<std::vector<CanonicalForm>, 3> lists;
    for (PropertyKind q : all_properties) {
        auto& l = lists[static_cast<std::size_t>(q)];
        for (int n = 0; n <= max_vertices; ++n)
            for (auto& f : obstruction_forms(dim, n, q, false, workers)) l.push_back(f);
        std::sort(l.begin(), l.end());
        r.counts[static_cast<std::size_t>(q)] = l.size();
    }
    const bool lists_equal = lists[0] == lists[1] && lists[0] == lists[2];
    if (!lists_equal) r.problems.push_back("obstruction lists differ");
    r.all_fail_others = true;
    r.witnesses_found = true;
    std::vector<CatalogEntry> entries;
    for (const auto& f : lists[0]) entries.push_back(make_entry(f, PropertyKind::shellable));
    assign_labels(entries);
    for (const auto& e : entries) {
        if (e.partitionable || e.sequentially_cm) {
            r.all_fail_others = false;
            r.problems.push_back(e.complex.to_string() + " satisfies a weaker property");
        }
        std::string fam = e.label ? label_family(*e.label)
                                  : (e.contains.empty() ? std::string() : label_family(e.contains.front()));
        if (!family_witness(e.complex, fam)) {
            r.witnesses_found = false;
            r.problems.push_back(e.complex.to_string() + " lacks the witness for family '" + fam + "'");
        }
    }
    // The dimension-2 partitionability list is derived from the shellability
    // list, which is only sound when every shellability obstruction fails.
    r.identical = lists_equal && r.all_fail_others;
    return r;
}

struct ClosureReport {
    std::size_t augmentations_checked = 0;
    std::vector<std::string> failures;
    /// Every obstruction reduces to an edge-minimal one by deleting edges.
    bool every_contains_edge_minimal = true;
    bool ok() const { return failures.empty() && every_contains_edge_minimal; }
};

/// For every obstruction in the catalog and every vertex pair that is not an
/// edge, adding the pair gives an obstruction again.
inline ClosureReport verify_edge_addition_closure(const Catalog& cat) {
    if (cat.dimension != 2)
        throw dimension_error("edge-addition closure is a statement about dimension-2 obstructions");
    ClosureReport r;
    for (const auto& e : cat.entries) {
        if (!e.edge_minimal && e.contains.empty()) r.every_contains_edge_minimal = false;
        const auto vs = e.complex.vertex_set().vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                Face pair = Face{}.with(vs[i]).with(vs[j]);
                if (e.complex.contains(pair)) continue;
                ++r.augmentations_checked;
                std::vector<Face> extra{pair};
                if (!obstruction(with_faces(e.complex, extra), cat.property))
                    r.failures.push_back(e.complex.to_string() + " + " + pair.to_string());
            }
    }
    return r;
}

} // namespace shellcheck
