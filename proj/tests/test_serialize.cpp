#include "doctest.h"

#include <cstdio>
#include <string>
#include <vector>

#include "trigon/bijection.hpp"
#include "trigon/complex.hpp"
#include "trigon/errors.hpp"
#include "trigon/field.hpp"
#include "trigon/plane.hpp"
#include "trigon/presentation.hpp"
#include "trigon/serialize.hpp"
#include "trigon/shift.hpp"

using namespace trigon;

namespace {

const ProjectivePlane& plane2() {
    static ProjectivePlane pl = ProjectivePlane::build(Field(2));
    return pl;
}

const Presentation& pres2() {
    static Presentation p =
        build_presentation(plane2(), *search_basic_bijection(plane2()).T);
    return p;
}

bool same_incidence(const ProjectivePlane& a, const ProjectivePlane& b) {
    if (a.q() != b.q() || a.n() != b.n()) return false;
    for (int p = 0; p < a.n(); ++p)
        for (int l = 0; l < a.n(); ++l)
            if (a.incident(p, l) != b.incident(p, l)) return false;
    return true;
}

} // namespace

TEST_CASE("plane text round-trip is byte-stable") {
    std::string text = emit_plane_text(plane2());
    ProjectivePlane loaded = load_plane_text(text);
    CHECK(same_incidence(plane2(), loaded));
    CHECK_FALSE(loaded.has_coords());
    CHECK(emit_plane_text(loaded) == text);
}

TEST_CASE("plane text rejects malformed input") {
    CHECK_THROWS_AS(load_plane_text(""), ParseError);
    CHECK_THROWS_AS(load_plane_text("order 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(load_plane_text("q 2 extra\n0 1 2\n"), ParseError);
    std::string text = emit_plane_text(plane2());
    CHECK_THROWS_AS(load_plane_text(text + "0 x 1\n"), ParseError);
}

TEST_CASE("plane JSON round-trip") {
    ordered_json j = plane_to_json(plane2());
    ProjectivePlane loaded = plane_from_json(j);
    CHECK(same_incidence(plane2(), loaded));
    CHECK(plane_to_json(loaded) == j);
}

TEST_CASE("plane JSON rejects tampering") {
    ordered_json j = plane_to_json(plane2());

    ordered_json disordered = j;
    disordered["points"][0] = 6;
    CHECK_THROWS_AS(plane_from_json(disordered), ParseError);

    ordered_json bad_ids = j;
    bad_ids["lines"][3]["id"] = 5;
    CHECK_THROWS_AS(plane_from_json(bad_ids), ParseError);

    ordered_json dropped = j;
    dropped["lines"].erase(6);
    CHECK_THROWS_AS(plane_from_json(dropped), Error);
}

TEST_CASE("dot output is deterministic and names both sides") {
    Graph g = incidence_graph(plane2());
    std::string dot = emit_graph_dot(g, "plane");
    CHECK(dot == emit_graph_dot(g, "plane"));
    CHECK(dot.rfind("graph plane {", 0) == 0);
    CHECK(dot.find("p0 [shape=circle]") != std::string::npos);
    CHECK(dot.find("l7 [shape=box]") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("bijection JSON round-trip") {
    auto T = *search_basic_bijection(plane2()).T;
    ordered_json j = bijection_to_json(2, T);
    auto [q, loaded] = bijection_from_json(j);
    CHECK(q == 2);
    CHECK(loaded == T);
    CHECK_THROWS_AS(bijection_from_json(ordered_json::object()), ParseError);
}

TEST_CASE("presentation JSON round-trip re-verifies everything") {
    ordered_json j = presentation_to_json(pres2());
    Presentation a = presentation_from_json(j, plane2());
    CHECK(a.K == pres2().K);
    CHECK(a.T == pres2().T);
    CHECK(a.tuples == pres2().tuples);
    // plane-free overload rebuilds the plane from q
    Presentation b = presentation_from_json(j);
    CHECK(b.K == pres2().K);
    CHECK(presentation_to_json(a) == j);
}

TEST_CASE("presentation JSON rejects tampering") {
    ordered_json j = presentation_to_json(pres2());

    ordered_json unsorted = j;
    std::swap(unsorted["K"][0], unsorted["K"][1]);
    CHECK_THROWS_AS(presentation_from_json(unsorted, plane2()), InvalidPresentation);

    ordered_json corrupt = j;
    corrupt["K"][0][1] = (pres2().K[0][1] + 1) % pres2().n();
    CHECK_THROWS_AS(presentation_from_json(corrupt, plane2()), Error);

    ordered_json bad_tuple = j;
    bad_tuple["tuples"][0][0]["i"] = (pres2().idx_of(pres2().tuples[0][0]) + 1) % 7;
    CHECK_THROWS_AS(presentation_from_json(bad_tuple, plane2()), InvalidPresentation);

    ordered_json no_lambda = j;
    no_lambda.erase("lambda");
    CHECK_THROWS_AS(presentation_from_json(no_lambda, plane2()), ParseError);
}

TEST_CASE("complex JSON validates against the polyhedron") {
    Polyhedron poly = build_polyhedron(pres2());
    ordered_json j = complex_to_json(poly);
    CHECK_NOTHROW(validate_complex_json(j, poly));
    CHECK(j["vertices"] == 3);
    CHECK(j["edges"].size() == 21);
    CHECK(j["faces"].size() == 21);

    ordered_json bad_face = j;
    std::swap(bad_face["faces"][0], bad_face["faces"][1]);
    CHECK_THROWS_AS(validate_complex_json(bad_face, poly), InvalidPresentation);

    ordered_json bad_vertices = j;
    bad_vertices["vertices"] = 4;
    CHECK_THROWS_AS(validate_complex_json(bad_vertices, poly), InvalidPresentation);

    ordered_json bad_edge = j;
    bad_edge["edges"][0].erase("label");
    CHECK_THROWS_AS(validate_complex_json(bad_edge, poly), ParseError);
}

TEST_CASE("MatrixMarket round-trip") {
    auto sys = build_transition_matrices(pres2());
    std::string mm = emit_matrix_market(sys.M1, "M1");
    BitMatrix loaded = load_matrix_market(mm);
    CHECK(loaded == sys.M1);
    CHECK(emit_matrix_market(loaded, "M1") == mm);
}

TEST_CASE("MatrixMarket rejects malformed input") {
    const std::string header = "%%MatrixMarket matrix coordinate integer general\n";
    CHECK_THROWS_AS(load_matrix_market("junk\n1 1 0\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_market(header), ParseError);
    CHECK_THROWS_AS(load_matrix_market(header + "2 3 0\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_market(header + "2 2 2\n1 1 1\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_market(header + "2 2 1\n3 1 1\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_market(header + "2 2 1\n1 1 2\n"), ParseError);
    BitMatrix ok = load_matrix_market(header + "% comment\n2 2 1\n2 1 1\n");
    CHECK(ok.get(1, 0));
    CHECK(ok.total() == 1);
}

TEST_CASE("CSV round-trip") {
    auto sys = build_transition_matrices(pres2());
    std::string csv = emit_matrix_csv(sys.M2);
    BitMatrix loaded = load_matrix_csv(csv);
    CHECK(loaded == sys.M2);
    CHECK(emit_matrix_csv(loaded) == csv);

    CHECK_THROWS_AS(load_matrix_csv(""), ParseError);
    CHECK_THROWS_AS(load_matrix_csv("0,1\n1\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_csv("0,2\n0,0\n"), ParseError);
}

TEST_CASE("hypothesis report JSON round-trip") {
    auto rep = run_hypothesis_checks(pres2(), Reading::Geometric, 1, {2, 2});
    ordered_json j = hypothesis_report_to_json(rep);
    CHECK(j == hypothesis_report_to_json(
                   run_hypothesis_checks(pres2(), Reading::Geometric, 1, {2, 2})));
    CHECK(j["h3"]["scope"] ==
          "all nonzero p with |p1|,|p2| <= p_max; finite check, not a proof");

    auto parsed = hypothesis_report_from_json(j);
    CHECK(parsed.reading == "geometric");
    CHECK(parsed.q == 2);
    CHECK(parsed.N == 63);
    CHECK(parsed.h0);
    CHECK(parsed.h1a);
    CHECK_FALSE(parsed.h1b);
    CHECK_FALSE(parsed.unique_completion);
    CHECK(parsed.h2);
    CHECK(parsed.h3);
    CHECK_FALSE(parsed.all_pass);

    ordered_json lied = j;
    lied["all_pass"] = true;
    CHECK_THROWS_AS(hypothesis_report_from_json(lied), ParseError);

    ordered_json truncated = j;
    truncated.erase("h2");
    CHECK_THROWS_AS(hypothesis_report_from_json(truncated), ParseError);
}

TEST_CASE("adopted hypothesis JSON carries the reading scan at q=2") {
    auto rep = run_hypothesis_checks(pres2(), Reading::Adopted, 1, {2, 2});
    ordered_json j = hypothesis_report_to_json(rep);
    REQUIRE(j.contains("reading_scan"));
    CHECK(j["reading_scan"]["pairs_tested"] == 5184);
    CHECK(j["reading_scan"]["passing"].empty());
    auto parsed = hypothesis_report_from_json(j);
    CHECK(parsed.reading == "adopted");
    CHECK_FALSE(parsed.all_pass);
}

TEST_CASE("words JSON round-trip validates admissibility") {
    auto sys = build_transition_matrices(pres2(), Reading::Geometric);
    auto words = enumerate_words(sys, 1, 1, 4);
    REQUIRE(words.size() == 4);
    ordered_json j = words_to_json(sys, 1, 1, words);
    CHECK(j["alphabet"].size() == 63);
    auto loaded = words_from_json(j, sys);
    CHECK(loaded == words);

    ordered_json bad = j;
    bad["words"][0][0] = sys.N; // out-of-range letter can never be admissible
    CHECK_THROWS_AS(words_from_json(bad, sys), ParseError);

    ordered_json short_word = j;
    short_word["words"][0].erase(3);
    CHECK_THROWS_AS(words_from_json(short_word, sys), ParseError);

    ordered_json wrong_q = j;
    wrong_q["q"] = 3;
    CHECK_THROWS_AS(words_from_json(wrong_q, sys), ParseError);

    ordered_json small_alpha = j;
    small_alpha["alphabet"].erase(0);
    CHECK_THROWS_AS(words_from_json(small_alpha, sys), ParseError);
}

TEST_CASE("file helpers round-trip and reject missing or invalid files") {
    const std::string path = "/tmp/trigon_serialize_test.json";
    ordered_json j = bijection_to_json(2, *search_basic_bijection(plane2()).T);
    write_json_file(path, j);
    CHECK(load_json_file(path) == j);
    std::string text = read_text_file(path);
    CHECK(text.back() == '\n');

    write_text_file(path, "not json");
    CHECK_THROWS_AS(load_json_file(path), ParseError);
    CHECK_THROWS_AS(read_text_file("/tmp/definitely_missing_trigon_file"), ParseError);
    std::remove(path.c_str());
}
