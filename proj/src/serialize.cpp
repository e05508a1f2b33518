#include "trigon/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "trigon/errors.hpp"

namespace trigon {

namespace {

int expect_int(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

const ordered_json& expect_array(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("missing array field \"") + key + "\"");
    return j[key];
}

std::vector<int> int_vector(const ordered_json& arr, const char* what) {
    std::vector<int> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw ParseError(std::string(what) + ": expected integer entries");
        out.push_back(v.get<int>());
    }
    return out;
}

ordered_json letter_json(const Presentation& pres, int letter) {
    ordered_json j;
    j["t"] = pres.tag_of(letter);
    j["i"] = pres.idx_of(letter);
    return j;
}

int letter_from_json(const ordered_json& j, int n) {
    if (!j.is_object()) throw ParseError("letter: expected object {t,i}");
    int t = expect_int(j, "t");
    int i = expect_int(j, "i");
    if (t < 1 || t > 3 || i < 0 || i >= n)
        throw ParseError("letter: tag or index out of range");
    return (t - 1) * n + i;
}

} // namespace

std::string emit_plane_text(const ProjectivePlane& plane) {
    std::ostringstream os;
    os << "q " << plane.q() << "\n";
    for (int l = 0; l < plane.n(); ++l) {
        const auto& pts = plane.points_on(l);
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) os << ' ';
            os << pts[i];
        }
        os << "\n";
    }
    return os.str();
}

ProjectivePlane load_plane_text(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw ParseError("empty incidence file");
    std::istringstream hs(header);
    std::string tag;
    int q = 0;
    if (!(hs >> tag >> q) || tag != "q")
        throw ParseError("incidence file must start with \"q <order>\"");
    std::string extra;
    if (hs >> extra) throw ParseError("trailing tokens after the order header");
    std::vector<std::vector<int>> lines;
    std::string row;
    while (std::getline(is, row)) {
        if (row.empty()) continue;
        std::istringstream rs(row);
        std::vector<int> pts;
        long long v;
        while (rs >> v) pts.push_back(static_cast<int>(v));
        if (!rs.eof()) throw ParseError("non-integer token in incidence line");
        if (!pts.empty()) lines.push_back(std::move(pts));
    }
    return ProjectivePlane::from_lines(q, lines);
}

ordered_json plane_to_json(const ProjectivePlane& plane) {
    ordered_json j;
    j["q"] = plane.q();
    ordered_json pts = ordered_json::array();
    for (int p = 0; p < plane.n(); ++p) pts.push_back(p);
    j["points"] = std::move(pts);
    ordered_json lines = ordered_json::array();
    for (int l = 0; l < plane.n(); ++l) {
        ordered_json jl;
        jl["id"] = l;
        jl["points"] = plane.points_on(l);
        lines.push_back(std::move(jl));
    }
    j["lines"] = std::move(lines);
    return j;
}

ProjectivePlane plane_from_json(const ordered_json& j) {
    int q = expect_int(j, "q");
    const auto& jp = expect_array(j, "points");
    const auto& jl = expect_array(j, "lines");
    std::vector<int> pts = int_vector(jp, "points");
    for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i] != static_cast<int>(i))
            throw ParseError("points must be 0..n-1 in order");
    std::vector<std::vector<int>> lines;
    lines.reserve(jl.size());
    int expect_id = 0;
    for (const auto& entry : jl) {
        if (!entry.is_object()) throw ParseError("line entries must be objects");
        if (expect_int(entry, "id") != expect_id++)
            throw ParseError("line ids must be 0..n-1 in order");
        lines.push_back(int_vector(expect_array(entry, "points"), "line points"));
    }
    return ProjectivePlane::from_lines(q, lines);
}

std::string emit_graph_dot(const Graph& g, const std::string& name,
                           const std::string& side0_prefix,
                           const std::string& side1_prefix) {
    auto node_name = [&](int v) {
        if (g.side[v] == 1) return side1_prefix + std::to_string(v);
        return side0_prefix + std::to_string(v);
    };
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.n; ++v) {
        os << "  " << node_name(v) << " [shape="
           << (g.side[v] == 1 ? "box" : "circle") << "];\n";
    }
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (v < w) os << "  " << node_name(v) << " -- " << node_name(w) << ";\n";
    os << "}\n";
    return os.str();
}

ordered_json bijection_to_json(int q, const std::vector<int>& T) {
    ordered_json j;
    j["q"] = q;
    j["T"] = T;
    return j;
}

std::pair<int, std::vector<int>> bijection_from_json(const ordered_json& j) {
    int q = expect_int(j, "q");
    std::vector<int> T = int_vector(expect_array(j, "T"), "T");
    return {q, std::move(T)};
}

ordered_json presentation_to_json(const Presentation& pres) {
    ordered_json j;
    j["q"] = pres.q();
    ordered_json jk = ordered_json::array();
    for (const auto& t : pres.K) jk.push_back({t[0], t[1], t[2]});
    j["K"] = std::move(jk);
    j["lambda"] = "x_i^t -> y_i^{t+1 mod 3}";
    ordered_json jt = ordered_json::array();
    for (const auto& t : pres.tuples) {
        ordered_json row = ordered_json::array();
        for (int letter : t) row.push_back(letter_json(pres, letter));
        jt.push_back(std::move(row));
    }
    j["tuples"] = std::move(jt);
    return j;
}

Presentation presentation_from_json(const ordered_json& j,
                                    const ProjectivePlane& plane) {
    int q = expect_int(j, "q");
    if (q != plane.q())
        throw InvalidPresentation("stored q does not match the plane order");
    if (!j.contains("lambda") || !j["lambda"].is_string())
        throw ParseError("missing \"lambda\" descriptor");
    const int n = plane.n();
    std::vector<std::array<int, 3>> K;
    for (const auto& row : expect_array(j, "K")) {
        std::vector<int> t = int_vector(row, "K entry");
        if (t.size() != 3) throw ParseError("K entries must be triples");
        for (int v : t)
            if (v < 0 || v >= n) throw ParseError("K entry index out of range");
        K.push_back({t[0], t[1], t[2]});
    }
    if (K.empty()) throw ParseError("empty K");

    // Recover T: the middle coordinates of triples with first coordinate i
    // are exactly the points of the line T(i).
    std::vector<std::vector<int>> mids(n);
    for (const auto& t : K) mids[t[0]].push_back(t[1]);
    std::vector<int> T(n, -1);
    for (int i = 0; i < n; ++i) {
        std::sort(mids[i].begin(), mids[i].end());
        mids[i].erase(std::unique(mids[i].begin(), mids[i].end()), mids[i].end());
        if (mids[i].size() < 2)
            throw InvalidPresentation("K does not determine T at point " +
                                      std::to_string(i));
        T[i] = plane.line_through(mids[i][0], mids[i][1]);
    }

    Presentation pres = tag_presentation(K, plane, T);
    // tag_presentation re-verifies T and pair uniqueness; confirm the stored
    // fields agree with the re-derivation.
    if (pres.K != K)
        throw InvalidPresentation("stored K is not canonically sorted");
    std::vector<std::array<int, 3>> rebuilt = build_triples(plane, T);
    if (rebuilt != pres.K)
        throw InvalidPresentation("stored K disagrees with the reconstruction");

    const auto& jt = expect_array(j, "tuples");
    if (jt.size() != pres.tuples.size())
        throw InvalidPresentation("stored tuple count disagrees");
    size_t idx = 0;
    for (const auto& row : jt) {
        if (!row.is_array() || row.size() != 3)
            throw ParseError("tuples entries must be triples of letters");
        std::array<int, 3> t{};
        for (int c = 0; c < 3; ++c) t[c] = letter_from_json(row[c], n);
        if (t != pres.tuples[idx])
            throw InvalidPresentation("stored tuple " + std::to_string(idx) +
                                      " disagrees with the reconstruction");
        ++idx;
    }
    return pres;
}

Presentation presentation_from_json(const ordered_json& j) {
    int q = expect_int(j, "q");
    Field f(q);
    return presentation_from_json(j, ProjectivePlane::build(f));
}

ordered_json complex_to_json(const Polyhedron& poly) {
    const Presentation& pres = poly.presentation();
    ordered_json j;
    j["vertices"] = 3;
    ordered_json edges = ordered_json::array();
    for (int letter = 0; letter < pres.n_letters(); ++letter) {
        ordered_json e;
        e["label"] = letter_json(pres, letter);
        int t = pres.tag_of(letter);
        e["tail"] = t;
        e["head"] = t % 3 + 1;
        edges.push_back(std::move(e));
    }
    j["edges"] = std::move(edges);
    ordered_json faces = ordered_json::array();
    for (const auto& f : poly.faces()) {
        ordered_json row = ordered_json::array();
        for (int letter : f) row.push_back(letter_json(pres, letter));
        faces.push_back(std::move(row));
    }
    j["faces"] = std::move(faces);
    return j;
}

void validate_complex_json(const ordered_json& j, const Polyhedron& poly) {
    const Presentation& pres = poly.presentation();
    const int n = pres.n();
    if (expect_int(j, "vertices") != 3)
        throw InvalidPresentation("complex must have 3 vertices");
    const auto& edges = expect_array(j, "edges");
    if (static_cast<int>(edges.size()) != pres.n_letters())
        throw InvalidPresentation("complex edge count disagrees");
    int expect_letter = 0;
    for (const auto& e : edges) {
        if (!e.is_object() || !e.contains("label"))
            throw ParseError("edge entries must carry a label");
        int letter = letter_from_json(e["label"], n);
        if (letter != expect_letter++)
            throw InvalidPresentation("edge labels must enumerate the letters");
        int t = pres.tag_of(letter);
        if (expect_int(e, "tail") != t || expect_int(e, "head") != t % 3 + 1)
            throw InvalidPresentation("edge endpoints disagree with the tag");
    }
    const auto& faces = expect_array(j, "faces");
    if (faces.size() != poly.faces().size())
        throw InvalidPresentation("complex face count disagrees");
    size_t idx = 0;
    for (const auto& row : faces) {
        if (!row.is_array() || row.size() != 3)
            throw ParseError("faces must be letter triples");
        std::array<int, 3> f{};
        for (int c = 0; c < 3; ++c) f[c] = letter_from_json(row[c], n);
        if (f != poly.faces()[idx])
            throw InvalidPresentation("face " + std::to_string(idx) +
                                      " disagrees with the complex");
        ++idx;
    }
}

std::string emit_matrix_market(const BitMatrix& m, const std::string& comment) {
    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate integer general\n";
    if (!comment.empty()) os << "% " << comment << "\n";
    os << m.size() << " " << m.size() << " " << m.total() << "\n";
    for (int r = 0; r < m.size(); ++r)
        for (int c : m.row_bits(r)) os << r + 1 << " " << c + 1 << " 1\n";
    return os.str();
}

BitMatrix load_matrix_market(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) ||
        line.rfind("%%MatrixMarket matrix coordinate integer general", 0) != 0)
        throw ParseError("bad MatrixMarket header");
    do {
        if (!std::getline(is, line)) throw ParseError("missing size line");
    } while (!line.empty() && line[0] == '%');
    std::istringstream ss(line);
    long long rows = 0, cols = 0, nnz = 0;
    if (!(ss >> rows >> cols >> nnz) || rows != cols || rows <= 0)
        throw ParseError("bad MatrixMarket size line");
    BitMatrix m(static_cast<int>(rows));
    long long seen = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream es(line);
        long long r = 0, c = 0, v = 0;
        if (!(es >> r >> c >> v)) throw ParseError("bad MatrixMarket entry");
        if (r < 1 || r > rows || c < 1 || c > cols || v != 1)
            throw ParseError("MatrixMarket entry out of range");
        m.set(static_cast<int>(r - 1), static_cast<int>(c - 1));
        ++seen;
    }
    if (seen != nnz) throw ParseError("MatrixMarket entry count disagrees");
    return m;
}

std::string emit_matrix_csv(const BitMatrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c) {
            if (c) os << ',';
            os << (m.get(r, c) ? 1 : 0);
        }
        os << "\n";
    }
    return os.str();
}

BitMatrix load_matrix_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<int>> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            if (cell != "0" && cell != "1")
                throw ParseError("CSV cells must be 0 or 1");
            row.push_back(cell == "1" ? 1 : 0);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty CSV matrix");
    const int n = static_cast<int>(rows.size());
    BitMatrix m(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw ParseError("CSV matrix must be square");
        for (int c = 0; c < n; ++c)
            if (rows[r][c]) m.set(r, c);
    }
    return m;
}

namespace {

ordered_json scan_pattern_json(const ScanPattern& p) {
    ordered_json j;
    j["shape"] = p.shape;
    j["row_pos"] = p.row_pos;
    j["col_pos"] = p.col_pos;
    j["distinct_row"] = p.distinct_row;
    j["distinct_col"] = p.distinct_col;
    return j;
}

} // namespace

ordered_json hypothesis_report_to_json(const HypothesisReport& rep) {
    ordered_json j;
    j["reading"] = reading_name(rep.reading);
    j["q"] = rep.q;
    j["N"] = rep.N;
    j["row_sums_m1"] = rep.row_sums_m1;
    j["row_sums_m2"] = rep.row_sums_m2;
    j["col_sums_m1"] = rep.col_sums_m1;
    j["col_sums_m2"] = rep.col_sums_m2;

    ordered_json h0;
    h0["pass"] = rep.h0.pass();
    h0["m1_nonzero"] = rep.h0.m1_nonzero;
    h0["m2_nonzero"] = rep.h0.m2_nonzero;
    j["h0"] = std::move(h0);

    ordered_json h1;
    h1["h1a"] = rep.h1.h1a;
    h1["differing_entries"] = rep.h1.differing_entries;
    h1["first_difference"] = rep.h1.first_difference;
    h1["h1b"] = rep.h1.h1b;
    h1["entries_over_one"] = rep.h1.entries_over_one;
    h1["max_entry"] = rep.h1.max_entry;
    h1["first_over"] = rep.h1.first_over;
    h1["sum_m1m2"] = rep.h1.sum_m1m2;
    h1["sum_m2m1"] = rep.h1.sum_m2m1;
    j["h1"] = std::move(h1);

    ordered_json uc;
    uc["pass"] = rep.uc.pass();
    uc["chains"] = rep.uc.chains;
    uc["zero_completions"] = rep.uc.zero_completions;
    uc["unique_completions"] = rep.uc.unique_completions;
    uc["multi_completions"] = rep.uc.multi_completions;
    uc["max_completions"] = rep.uc.max_completions;
    uc["witness"] = rep.uc.witness;
    j["unique_completion"] = std::move(uc);

    ordered_json h2;
    h2["pass"] = rep.h2.pass();
    h2["union_strong"] = rep.h2.union_strong;
    h2["m1_strong"] = rep.h2.m1_strong;
    h2["m2_strong"] = rep.h2.m2_strong;
    h2["witness"] = rep.h2.witness;
    j["h2"] = std::move(h2);

    ordered_json h3;
    h3["pass"] = rep.h3.pass();
    h3["scope"] = "all nonzero p with |p1|,|p2| <= p_max; finite check, not a proof";
    h3["p_max"] = rep.h3.p_max;
    h3["window"] = rep.h3.window;
    h3["periods_tested"] = rep.h3.periods_tested;
    h3["periods_witnessed"] = rep.h3.periods_witnessed;
    ordered_json fails = ordered_json::array();
    for (const auto& p : rep.h3.failures) fails.push_back({p[0], p[1]});
    h3["failures"] = std::move(fails);
    j["h3"] = std::move(h3);

    ordered_json colors;
    colors["shifts_m1"] = rep.colors.shifts_m1;
    colors["shifts_m2"] = rep.colors.shifts_m2;
    colors["m1_cubed_diag_positive"] = rep.colors.m1_cubed_diag_positive;
    colors["m2_cubed_diag_positive"] = rep.colors.m2_cubed_diag_positive;
    j["colors"] = std::move(colors);

    if (rep.scan) {
        ordered_json scan;
        scan["patterns_per_role"] = rep.scan->patterns;
        scan["pairs_tested"] = rep.scan->pairs_tested;
        ordered_json passing = ordered_json::array();
        for (const auto& pr : rep.scan->passing) {
            ordered_json pair;
            pair["m1"] = scan_pattern_json(pr[0]);
            pair["m2"] = scan_pattern_json(pr[1]);
            passing.push_back(std::move(pair));
        }
        scan["passing"] = std::move(passing);
        j["reading_scan"] = std::move(scan);
    }
    if (!rep.scan_note.empty()) j["scan_note"] = rep.scan_note;
    j["all_pass"] = rep.all_pass();
    return j;
}

ParsedHypothesisReport hypothesis_report_from_json(const ordered_json& j) {
    ParsedHypothesisReport p;
    if (!j.contains("reading") || !j["reading"].is_string())
        throw ParseError("missing \"reading\"");
    p.reading = j["reading"].get<std::string>();
    p.q = expect_int(j, "q");
    p.N = expect_int(j, "N");
    auto flag = [&](const char* sec, const char* key) {
        if (!j.contains(sec) || !j[sec].is_object() || !j[sec].contains(key) ||
            !j[sec][key].is_boolean())
            throw ParseError(std::string("missing boolean \"") + sec + "." + key +
                             "\"");
        return j[sec][key].get<bool>();
    };
    p.h0 = flag("h0", "pass");
    p.h1a = flag("h1", "h1a");
    p.h1b = flag("h1", "h1b");
    p.unique_completion = flag("unique_completion", "pass");
    p.h2 = flag("h2", "pass");
    p.h3 = flag("h3", "pass");
    if (!j.contains("all_pass") || !j["all_pass"].is_boolean())
        throw ParseError("missing \"all_pass\"");
    p.all_pass = j["all_pass"].get<bool>();
    bool recomputed =
        p.h0 && p.h1a && p.h1b && p.unique_completion && p.h2 && p.h3;
    if (recomputed != p.all_pass)
        throw ParseError("all_pass disagrees with the individual verdicts");
    return p;
}

ordered_json words_to_json(const ShiftSystem& sys, int m1, int m2,
                           const std::vector<std::vector<int>>& words) {
    ordered_json j;
    j["q"] = sys.q;
    j["reading"] = reading_name(sys.reading);
    j["shape"] = {m1, m2};
    ordered_json alphabet = ordered_json::array();
    const int n = sys.q * sys.q + sys.q + 1;
    for (const auto& t : sys.alphabet) {
        ordered_json row = ordered_json::array();
        for (int letter : t) {
            ordered_json lj;
            lj["t"] = letter / n + 1;
            lj["i"] = letter % n;
            row.push_back(std::move(lj));
        }
        alphabet.push_back(std::move(row));
    }
    j["alphabet"] = std::move(alphabet);
    ordered_json jw = ordered_json::array();
    for (const auto& w : words) jw.push_back(w);
    j["words"] = std::move(jw);
    return j;
}

std::vector<std::vector<int>> words_from_json(const ordered_json& j,
                                              const ShiftSystem& sys) {
    if (expect_int(j, "q") != sys.q) throw ParseError("word file q disagrees");
    const auto& shape = expect_array(j, "shape");
    if (shape.size() != 2) throw ParseError("shape must have two entries");
    int m1 = shape[0].get<int>(), m2 = shape[1].get<int>();
    const auto& alphabet = expect_array(j, "alphabet");
    if (static_cast<int>(alphabet.size()) != sys.N)
        throw ParseError("alphabet size disagrees with the system");
    std::vector<std::vector<int>> out;
    for (const auto& row : expect_array(j, "words")) {
        std::vector<int> w = int_vector(row, "word");
        if (!word_admissible(sys, m1, m2, w))
            throw ParseError("stored word is not admissible");
        out.push_back(std::move(w));
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << content;
    if (!f) throw ParseError("short write to " + path);
}

ordered_json load_json_file(const std::string& path) {
    std::string text = read_text_file(path);
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return j;
}

void write_json_file(const std::string& path, const ordered_json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace trigon
