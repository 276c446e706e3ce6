#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "complex.hpp"

namespace shellcheck {

class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

struct ParsedComplex {
    SimplicialComplex complex;
    /// labels[id] is the token that named vertex id. Empty when the input used
    /// plain integer ids.
    std::vector<std::string> labels;
    std::vector<std::string> warnings;
};

namespace detail {

inline bool is_integer_token(const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

inline bool is_label_token(const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-' || c == '.';
    });
}

} // namespace detail

/// Reads the facet-list text format: one facet per line, vertices separated by
/// whitespace, `#` starts a comment, blank lines are ignored.
///
/// When every token is a non-negative integer the integers are the vertex ids.
/// Otherwise every token is a label and labels get ids in order of first
/// appearance.
inline ParsedComplex read_facet_list(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<int> row_lines;
    std::string line;
    int lineno = 0;
    bool all_integers = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) {
            if (!detail::is_label_token(t)) throw parse_error(lineno, "invalid vertex token '" + t + "'");
            all_integers = all_integers && detail::is_integer_token(t);
            tokens.push_back(std::move(t));
        }
        if (tokens.empty()) continue;
        rows.push_back(std::move(tokens));
        row_lines.push_back(lineno);
    }

    ParsedComplex out;
    std::unordered_map<std::string, int> ids;
    std::vector<Face> faces;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Face f;
        for (const auto& t : rows[r]) {
            int id;
            if (all_integers) {
                if (t.size() > 3 || std::stoi(t) >= max_vertices)
                    throw parse_error(row_lines[r], "vertex id " + t + " exceeds the limit of 63");
                id = std::stoi(t);
            } else {
                auto [it, inserted] = ids.emplace(t, static_cast<int>(ids.size()));
                if (inserted) out.labels.push_back(t);
                id = it->second;
                if (id >= max_vertices)
                    throw parse_error(row_lines[r], "more than 64 distinct vertex labels");
            }
            f.insert(id);
        }
        faces.push_back(f);
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = 0; j < faces.size(); ++j) {
            if (i == j || !faces[i].subset_of(faces[j])) continue;
            if (faces[i] == faces[j] && i < j) continue;
            out.warnings.push_back("line " + std::to_string(row_lines[i]) + ": facet is contained in line " +
                                   std::to_string(row_lines[j]) + " and was absorbed");
            break;
        }
    }
    out.complex = SimplicialComplex::from_facets(faces);
    return out;
}

inline ParsedComplex read_facet_list(const std::string& text) {
    std::istringstream in(text);
    return read_facet_list(in);
}

inline ParsedComplex read_facet_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_facet_list(in);
}

/// Writes one facet per line with ascending vertex ids (or their labels).
/// {∅} produces no facet lines.
inline void write_facet_list(std::ostream& out, const SimplicialComplex& c,
                             const std::vector<std::string>& labels = {}) {
    if (c.is_empty_complex()) return;
    for (Face f : c.facets()) {
        bool first = true;
        f.for_each_vertex([&](int v) {
            if (!first) out << ' ';
            first = false;
            if (static_cast<std::size_t>(v) < labels.size())
                out << labels[static_cast<std::size_t>(v)];
            else
                out << v;
        });
        out << '\n';
    }
}

inline std::string to_facet_list(const SimplicialComplex& c, const std::vector<std::string>& labels = {}) {
    std::ostringstream out;
    write_facet_list(out, c, labels);
    return out.str();
}

} // namespace shellcheck
