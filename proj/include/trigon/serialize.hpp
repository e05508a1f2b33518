#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "trigon/bijection.hpp"
#include "trigon/complex.hpp"
#include "trigon/graph.hpp"
#include "trigon/plane.hpp"
#include "trigon/presentation.hpp"
#include "trigon/shift.hpp"

namespace trigon {

using ordered_json = nlohmann::ordered_json;

// All emitters are canonical: fixed key order, ascending enumeration,
// integers only, two-space indent, trailing newline. Identical inputs
// produce byte-identical text.

// Incidence text format: line 1 "q <order>", then one line per geometric
// line holding its space-separated point ids.
std::string emit_plane_text(const ProjectivePlane& plane);
ProjectivePlane load_plane_text(const std::string& text);

ordered_json plane_to_json(const ProjectivePlane& plane);
ProjectivePlane plane_from_json(const ordered_json& j);

// Bipartite graph in DOT; side-0 nodes render as circles, side-1 as boxes.
std::string emit_graph_dot(const Graph& g, const std::string& name,
                           const std::string& side0_prefix = "p",
                           const std::string& side1_prefix = "l");

ordered_json bijection_to_json(int q, const std::vector<int>& T);
// Returns (q, T); structural validation only, verification is the caller's.
std::pair<int, std::vector<int>> bijection_from_json(const ordered_json& j);

ordered_json presentation_to_json(const Presentation& pres);
// Rebuilds the presentation over the given plane: T is recovered from K,
// then every stored field is re-derived and compared. Throws ParseError on
// malformed structure, InvalidPresentation on any mismatch.
Presentation presentation_from_json(const ordered_json& j,
                                    const ProjectivePlane& plane);
// Convenience: reconstructs the canonical plane of order j["q"] first.
Presentation presentation_from_json(const ordered_json& j);

ordered_json complex_to_json(const Polyhedron& poly);
// Structural re-validation against a presentation rebuilt elsewhere.
void validate_complex_json(const ordered_json& j, const Polyhedron& poly);

// MatrixMarket coordinate integer format, 1-based, entries sorted
// row-major. `comment` lands on the second line after a "%".
std::string emit_matrix_market(const BitMatrix& m, const std::string& comment);
BitMatrix load_matrix_market(const std::string& text);

std::string emit_matrix_csv(const BitMatrix& m);
BitMatrix load_matrix_csv(const std::string& text);

ordered_json hypothesis_report_to_json(const HypothesisReport& rep);
// Parses the verdict fields back out (structure check for round-trips).
struct ParsedHypothesisReport {
    std::string reading;
    int q = 0;
    int N = 0;
    bool h0 = false, h1a = false, h1b = false, unique_completion = false;
    bool h2 = false, h3 = false, all_pass = false;
};
ParsedHypothesisReport hypothesis_report_from_json(const ordered_json& j);

ordered_json words_to_json(const ShiftSystem& sys, int m1, int m2,
                           const std::vector<std::vector<int>>& words);
// Validates every stored word against the system; returns the word grids.
std::vector<std::vector<int>> words_from_json(const ordered_json& j,
                                              const ShiftSystem& sys);

// File helpers (ParseError on unreadable input).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
ordered_json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const ordered_json& j);

} // namespace trigon
