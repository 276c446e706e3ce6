#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <shellcheck/shellcheck.hpp>

namespace fs = std::filesystem;
using namespace shellcheck;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

std::string adjective(PropertyKind p, bool holds) {
    switch (p) {
    case PropertyKind::shellable: return holds ? "shellable" : "nonshellable";
    case PropertyKind::partitionable: return holds ? "partitionable" : "nonpartitionable";
    case PropertyKind::sequentially_cm:
        return holds ? "sequentially Cohen-Macaulay" : "not sequentially Cohen-Macaulay";
    }
    return "";
}

std::string noun(PropertyKind p) {
    switch (p) {
    case PropertyKind::shellable: return "shellability";
    case PropertyKind::partitionable: return "partitionability";
    case PropertyKind::sequentially_cm: return "sequential Cohen-Macaulayness";
    }
    return "";
}

struct FaceWriter {
    const std::vector<std::string>& labels;

    std::string operator()(Face f) const {
        std::string s = "{";
        bool first = true;
        f.for_each_vertex([&](int v) {
            if (!first) s += ",";
            first = false;
            s += static_cast<std::size_t>(v) < labels.size() ? labels[static_cast<std::size_t>(v)] : std::to_string(v);
        });
        return s + "}";
    }

    json list(Face f) const {
        json a = json::array();
        f.for_each_vertex([&](int v) {
            if (static_cast<std::size_t>(v) < labels.size())
                a.push_back(labels[static_cast<std::size_t>(v)]);
            else
                a.push_back(v);
        });
        return a;
    }
};

struct CheckOptions {
    std::string path;
    std::string property = "shellable";
    std::string variant = "plain";
    bool json_out = false;
    bool certificate = false;
};

struct Verdict {
    bool holds = false;
    std::string text;
    json certificate;
    std::vector<std::string> certificate_lines;
};

void add_scm_witness(Verdict& v, const FaceWriter& fw, const CMWitness& w) {
    v.certificate["face"] = fw.list(w.face);
    v.certificate["skeleton_dim"] = w.skeleton_dim;
    v.certificate["degree"] = w.degree;
    v.certificate["group"] = w.group.to_string();
    v.certificate_lines.push_back("pure " + std::to_string(w.skeleton_dim) + "-skeleton: link of " + fw(w.face) +
                                  " has reduced H_" + std::to_string(w.degree) + " = " + w.group.to_string());
}

Verdict plain_verdict(const SimplicialComplex& c, PropertyKind p, bool want_cert, const FaceWriter& fw) {
    Verdict v;
    switch (p) {
    case PropertyKind::shellable: {
        ShellingOptions opts;
        opts.want_certificate = want_cert;
        auto r = is_shellable(c, opts);
        v.holds = r.shellable;
        if (r.certificate) {
            json order = json::array();
            for (std::size_t i = 0; i < r.certificate->ordering.size(); ++i) {
                Face f = r.certificate->ordering[i], rs = r.certificate->restriction_sets[i];
                order.push_back({{"facet", fw.list(f)}, {"restriction", fw.list(rs)}});
                v.certificate_lines.push_back(std::to_string(i + 1) + ". " + fw(f) + "  R = " + fw(rs));
            }
            v.certificate["shelling"] = order;
        }
        break;
    }
    case PropertyKind::partitionable: {
        PartitionOptions opts;
        opts.want_certificate = want_cert;
        auto r = is_partitionable(c, opts);
        v.holds = r.partitionable;
        if (r.certificate) {
            json intervals = json::array();
            for (const auto& [facet, bottom] : *r.certificate) {
                intervals.push_back({{"bottom", fw.list(bottom)}, {"top", fw.list(facet)}});
                v.certificate_lines.push_back("[" + fw(bottom) + ", " + fw(facet) + "]");
            }
            v.certificate["intervals"] = intervals;
        }
        break;
    }
    case PropertyKind::sequentially_cm: {
        auto r = is_sequentially_cm(c);
        v.holds = r.verdict;
        if (want_cert && r.witness) add_scm_witness(v, fw, *r.witness);
        break;
    }
    }
    v.text = adjective(p, v.holds);
    return v;
}

Verdict variant_verdict(const SimplicialComplex& c, PropertyKind p, const std::string& variant, bool want_cert,
                        const FaceWriter& fw) {
    if (variant == "plain") return plain_verdict(c, p, want_cert, fw);
    Verdict v;
    if (variant == "hereditary") {
        auto r = is_hereditary(c, p);
        v.holds = r.hereditary;
        v.text = std::string(v.holds ? "hereditary-" : "not hereditary-") + adjective(p, true);
        if (want_cert && r.failing_restriction) {
            v.certificate["failing_restriction"] = fw.list(*r.failing_restriction);
            v.certificate_lines.push_back("restriction to " + fw(*r.failing_restriction) + " is " +
                                          adjective(p, false));
        }
        return v;
    }
    const bool strong = variant == "strong_obstruction";
    auto r = strong ? is_strong_obstruction(c, p) : is_obstruction(c, p);
    v.holds = strong ? r.is_strong : r.is_obstruction;
    const std::string kind = strong ? "a strong obstruction" : "an obstruction";
    v.text = (v.holds ? "is " : "is not ") + kind + " to " + noun(p);
    if (want_cert) {
        if (r.failing_restriction) {
            v.certificate["failing_restriction"] = fw.list(*r.failing_restriction);
            v.certificate_lines.push_back("restriction to " + fw(*r.failing_restriction) + " is " +
                                          adjective(p, false));
        } else if (r.failing_link) {
            v.certificate["failing_link"] = fw.list(*r.failing_link);
            v.certificate_lines.push_back("link of " + fw(*r.failing_link) + " is " + adjective(p, false));
        } else if (!v.holds) {
            v.certificate_lines.push_back("the complex is " + adjective(p, true));
        }
    }
    return v;
}

int run_check(const CheckOptions& o) {
    auto p = parse_property(o.property);
    if (!p) {
        std::cerr << "unknown property '" << o.property << "'\n";
        return exit_usage;
    }
    ParsedComplex parsed;
    try {
        parsed = read_facet_list_file(o.path);
    } catch (const parse_error& e) {
        std::cerr << o.path << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
    for (const auto& w : parsed.warnings) std::cerr << o.path << ": warning: " << w << '\n';
    FaceWriter fw{parsed.labels};
    Verdict v = variant_verdict(parsed.complex, *p, o.variant, o.certificate, fw);
    if (o.json_out) {
        json j;
        j["schema"] = "shellcheck-check";
        j["version"] = 1;
        j["path"] = o.path;
        j["property"] = std::string(property_name(*p));
        j["variant"] = o.variant;
        j["holds"] = v.holds;
        j["verdict"] = v.text;
        if (o.certificate && !v.certificate.is_null()) j["certificate"] = v.certificate;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << v.text << '\n';
        for (const auto& line : v.certificate_lines) std::cout << "  " << line << '\n';
    }
    return v.holds ? exit_holds : exit_fails;
}

struct EnumerateOptions {
    int dim = 2;
    std::string property = "shellable";
    bool edge_minimal = false;
    bool strong = false;
    bool summary = false;
    std::vector<std::string> compare;
    std::string out;
    int workers = 1;
    bool generic = false;
    int max_vertices = -1;
};

std::string summary_text(const Catalog& cat) {
    std::ostringstream s;
    s << "dimension " << cat.dimension << ", property " << property_name(cat.property) << ", "
      << mode_name(cat.mode) << ", n <= " << cat.max_vertices << ": " << cat.entries.size() << " classes\n";
    std::map<int, std::size_t> per_n;
    for (const auto& e : cat.entries) ++per_n[e.form.n_vertices];
    for (const auto& [n, k] : per_n) s << "  " << n << " vertices: " << k << '\n';
    for (const auto& [fam, k] : family_counts(cat)) s << "  type " << fam << ": " << k << '\n';
    return s.str();
}

int run_enumerate(const EnumerateOptions& o) {
    auto p = parse_property(o.property);
    if (!p) {
        std::cerr << "unknown property '" << o.property << "'\n";
        return exit_usage;
    }
    if (o.edge_minimal && o.strong) {
        std::cerr << "--edge-minimal and --strong are exclusive\n";
        return exit_usage;
    }
    EnumerationTask task;
    task.dimension = o.dim;
    task.property = *p;
    task.generic = o.generic;
    task.workers = o.workers;
    task.mode = o.edge_minimal ? EnumerationMode::edge_minimal_obstructions
                : o.strong     ? EnumerationMode::strong_obstructions
                               : EnumerationMode::obstructions;
    try {
        task.max_vertices = o.max_vertices >= 0 ? o.max_vertices : obstruction_vertex_limit(std::max(0, o.dim));
        Catalog cat = enumerate_obstructions(task);
        const std::string text = catalog_to_json(cat).dump(2) + "\n";
        if (!o.out.empty()) {
            std::ofstream f(o.out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + o.out);
            f << text;
        } else if (!o.summary && o.compare.empty()) {
            std::cout << text;
        }
        if (o.summary) std::cout << summary_text(cat);
        if (!o.compare.empty()) {
            std::vector<PropertyKind> others;
            for (const auto& name : o.compare) {
                auto q = parse_property(name);
                if (!q) {
                    std::cerr << "unknown property '" << name << "'\n";
                    return exit_usage;
                }
                others.push_back(*q);
            }
            CoincidenceReport r = verify_coincidence(task.dimension, task.max_vertices, task.workers);
            bool same = r.identical;
            for (PropertyKind q : others)
                same = same && r.counts[static_cast<std::size_t>(q)] == r.counts[static_cast<std::size_t>(*p)];
            std::cout << (same ? "IDENTICAL" : "DIFFERENT") << '\n';
            for (PropertyKind q : all_properties)
                std::cout << "  " << property_name(q) << ": " << r.counts[static_cast<std::size_t>(q)]
                          << " obstructions\n";
            for (const auto& problem : r.problems) std::cout << "  " << problem << '\n';
            return same ? exit_holds : exit_fails;
        }
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
    return exit_holds;
}

int run_atlas(const std::string& out_dir, int workers) {
    try {
        fs::create_directories(fs::path(out_dir) / "entries");
        json catalogs = json::array();
        std::ostringstream table;
        table << "id            label  contains     n  facets  strong  edge-minimal\n";
        for (int d = 0; d <= 2; ++d) {
            EnumerationTask task;
            task.dimension = d;
            task.max_vertices = obstruction_vertex_limit(d);
            task.workers = workers;
            Catalog cat = enumerate_obstructions(task);
            catalogs.push_back(catalog_to_json(cat));
            for (const auto& e : cat.entries) {
                std::ofstream f(fs::path(out_dir) / "entries" / (e.id + ".cplx"), std::ios::binary);
                f << "# " << e.id;
                if (e.label) f << " (" << *e.label << ")";
                f << '\n';
                write_facet_list(f, e.complex);
                std::string contains;
                for (const auto& l : e.contains) contains += (contains.empty() ? "" : ",") + l;
                char line[160];
                std::snprintf(line, sizeof line, "%-13s %-6s %-12s %-2d %-7zu %-7s %s\n", e.id.c_str(),
                              e.label ? e.label->c_str() : "-", contains.empty() ? "-" : contains.c_str(),
                              e.form.n_vertices, e.complex.n_facets(), e.strong_obstruction[0] ? "yes" : "no",
                              e.edge_minimal ? "yes" : "no");
                table << line;
            }
        }
        json atlas;
        atlas["schema"] = "shellcheck-atlas";
        atlas["version"] = catalog_schema_version;
        atlas["catalogs"] = catalogs;
        std::ofstream(fs::path(out_dir) / "catalog.json", std::ios::binary) << atlas.dump(2) << '\n';
        std::ofstream(fs::path(out_dir) / "summary.txt", std::ios::binary) << table.str();
        std::cout << "wrote atlas to " << out_dir << '\n';
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
    return exit_holds;
}

int run_indcycle(int n) {
    if (n < 4 || n > 10) {
        std::cerr << "indcycle: n must lie in [4, 10]\n";
        return exit_usage;
    }
    IndependenceCycleCheck r = check_independence_cycle(n);
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "# Ind(C_" << n << "), dimension " << r.dim << '\n'
              << "# shellable: " << yes(r.shellable) << '\n'
              << "# obstruction: " << yes(r.obstruction) << '\n'
              << "# strong obstruction: " << yes(r.strong_obstruction) << '\n'
              << "# partitionable: " << yes(r.partitionable) << '\n'
              << "# sequentially CM: " << yes(r.sequentially_cm) << '\n'
              << "# H_1 of the top pure skeleton: " << r.top_h1 << '\n'
              << "# consistent with the expected verdicts: " << yes(r.ok) << '\n';
    write_facet_list(std::cout, independence_complex(cycle_graph(n)));
    return r.ok ? exit_holds : exit_fails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide shellability, partitionability and sequential Cohen-Macaulayness of simplicial complexes, "
                 "and enumerate their obstructions."};
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Decide a property for a facet-list file");
    check_cmd->add_option("path", check.path, "Facet-list file")->required();
    check_cmd->add_option("--property,-p", check.property, "shellable | partitionable | scm");
    check_cmd->add_option("--variant", check.variant, "plain | hereditary | obstruction | strong_obstruction")
        ->check(CLI::IsMember({"plain", "hereditary", "obstruction", "strong_obstruction"}));
    check_cmd->add_flag("--json", check.json_out, "Print a JSON report");
    check_cmd->add_flag("--certificate", check.certificate, "Print the certificate or witness");

    EnumerateOptions en;
    auto* en_cmd = app.add_subcommand("enumerate", "Enumerate obstructions up to isomorphism");
    en_cmd->add_option("--dim", en.dim, "Dimension (0, 1 or 2)");
    en_cmd->add_option("--property,-p", en.property, "shellable | partitionable | scm");
    en_cmd->add_flag("--edge-minimal", en.edge_minimal, "Keep only edge-minimal obstructions");
    en_cmd->add_flag("--strong", en.strong, "Keep only strong obstructions");
    en_cmd->add_flag("--summary", en.summary, "Print counts per vertex number and label");
    en_cmd->add_option("--compare", en.compare, "Compare with the obstruction list of another property");
    en_cmd->add_option("--out,-o", en.out, "Write the catalog JSON here");
    en_cmd->add_option("--workers,-j", en.workers, "Worker threads")->check(CLI::PositiveNumber);
    en_cmd->add_flag("--generic", en.generic, "Use the exhaustive generic search");
    en_cmd->add_option("--max-vertices", en.max_vertices, "Largest vertex count searched");

    std::string atlas_dir;
    int atlas_workers = 1;
    auto* atlas_cmd = app.add_subcommand("atlas", "Write the full obstruction atlas in dimensions 0 to 2");
    atlas_cmd->add_option("out_dir", atlas_dir, "Output directory")->required();
    atlas_cmd->add_option("--workers,-j", atlas_workers, "Worker threads")->check(CLI::PositiveNumber);

    int cycle_n = 0;
    auto* ind_cmd = app.add_subcommand("indcycle", "Print the independence complex of the n-cycle with its verdicts");
    ind_cmd->add_option("n", cycle_n, "Cycle length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (*check_cmd) return run_check(check);
    if (*en_cmd) return run_enumerate(en);
    if (*atlas_cmd) return run_atlas(atlas_dir, atlas_workers);
    if (*ind_cmd) return run_indcycle(cycle_n);
    return exit_usage;
}
