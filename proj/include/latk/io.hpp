// JSON formats for every artifact the CLI reads or writes. Rationals
// serialize as bare integers or "p/q" strings; omitted edges mean identity
// transports and omitted triangles mean zero cochain values.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "algebroid.hpp"
#include "latk.hpp"

namespace latk {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::int64_t parse_int64(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(where + ": not an integer: \"" + s + "\"");
    }
}

} // namespace detail

inline Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(detail::parse_int64(s, where));
        std::int64_t num = detail::parse_int64(s.substr(0, slash), where);
        std::int64_t den = detail::parse_int64(s.substr(slash + 1), where);
        if (den == 0) throw ParseError(where + ": zero denominator in \"" + s + "\"");
        return Rational(num, den);
    }
    throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

inline json rational_to_json(const Rational& r) {
    if (r.den() == 1) return json(r.num());
    return json(r.str());
}

inline Vec vec_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of rationals");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rational_to_json(r));
    return out;
}

inline Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a nonempty array of rows");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(vec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError(where + ": ragged rows");
        for (std::size_t c = 0; c < rows[i].size(); ++c)
            m(static_cast<int>(i), static_cast<int>(c)) = rows[i][c];
    }
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
    return out;
}

// ---- Lie algebra: { "dim": n, "brackets": [ {"i","j","value"} ] } ----------

inline LieAlgebra lie_algebra_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.rfind("builtin:", 0) == 0) {
            try {
                return builtin_lie_algebra(s.substr(8));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("lie_algebra: ") + e.what());
            }
        }
        throw ParseError("lie_algebra: unexpected string \"" + s + "\"");
    }
    if (!j.is_object() || !j.contains("dim"))
        throw ParseError("lie_algebra: expected an object with \"dim\"");
    int dim = j.at("dim").get<int>();
    std::vector<std::tuple<int, int, Vec>> brackets;
    if (j.contains("brackets")) {
        const json& bs = j.at("brackets");
        if (!bs.is_array()) throw ParseError("lie_algebra.brackets: expected an array");
        for (std::size_t k = 0; k < bs.size(); ++k) {
            const json& b = bs[k];
            std::string where = "lie_algebra.brackets[" + std::to_string(k) + "]";
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("value"))
                throw ParseError(where + ": expected {\"i\",\"j\",\"value\"}");
            brackets.emplace_back(b.at("i").get<int>(), b.at("j").get<int>(),
                                  vec_from_json(b.at("value"), where + ".value"));
        }
    }
    try {
        return LieAlgebra::from_brackets(dim, brackets);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("lie_algebra: ") + e.what());
    }
}

inline json lie_algebra_to_json(const LieAlgebra& g) {
    json brackets = json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            Vec v = g.bracket_basis(i, j);
            if (vec_is_zero(v)) continue;
            brackets.push_back(json{{"i", i}, {"j", j}, {"value", vec_to_json(v)}});
        }
    return json{{"dim", g.dim()}, {"brackets", brackets}};
}

// ---- Complex: { "vertices": n, "simplices": [[...]] }, maximal listed ------

inline SimplicialComplex complex_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.rfind("builtin:", 0) == 0) {
            try {
                return builtin_complex(s.substr(8));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("complex: ") + e.what());
            }
        }
        throw ParseError("complex: unexpected string \"" + s + "\"");
    }
    if (!j.is_object() || !j.contains("vertices"))
        throw ParseError("complex: expected an object with \"vertices\"");
    int vertices = j.at("vertices").get<int>();
    std::vector<Simplex> maximal;
    if (j.contains("simplices")) {
        const json& ss = j.at("simplices");
        if (!ss.is_array()) throw ParseError("complex.simplices: expected an array");
        for (std::size_t k = 0; k < ss.size(); ++k) {
            if (!ss[k].is_array())
                throw ParseError("complex.simplices[" + std::to_string(k) + "]: expected an array");
            maximal.push_back(ss[k].get<Simplex>());
        }
    }
    try {
        return SimplicialComplex::from_maximal(vertices, maximal);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("complex: ") + e.what());
    }
}

inline json complex_to_json(const SimplicialComplex& k) {
    // list maximal simplices only; loaders complete the faces
    json simplices = json::array();
    for (const auto& s : k.simplices()) {
        bool maximal = true;
        for (const auto& t : k.simplices()) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal && s.size() > 1) simplices.push_back(json(s));
    }
    return json{{"vertices", k.vertex_count()}, {"simplices", simplices}};
}

// ---- Local system ----------------------------------------------------------

inline SystemHandle local_system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("complex") || !j.contains("fiber_dim"))
        throw ParseError("local_system: expected {\"complex\",\"fiber_dim\",\"transports\"}");
    SimplicialComplex base = complex_from_json(j.at("complex"));
    int fiber = j.at("fiber_dim").get<int>();
    std::map<std::pair<int, int>, Matrix> transports;
    if (j.contains("transports")) {
        const json& ts = j.at("transports");
        if (!ts.is_array()) throw ParseError("local_system.transports: expected an array");
        for (std::size_t k = 0; k < ts.size(); ++k) {
            const json& t = ts[k];
            std::string where = "local_system.transports[" + std::to_string(k) + "]";
            if (!t.is_object() || !t.contains("edge") || !t.contains("matrix"))
                throw ParseError(where + ": expected {\"edge\",\"matrix\"}");
            auto edge = t.at("edge").get<std::vector<int>>();
            if (edge.size() != 2) throw ParseError(where + ".edge: expected two vertices");
            transports.emplace(std::make_pair(edge[0], edge[1]),
                               matrix_from_json(t.at("matrix"), where + ".matrix"));
        }
    }
    try {
        return make_system(std::move(base), fiber, std::move(transports));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("local_system: ") + e.what());
    }
}

// ---- Descriptor -------------------------------------------------------------

inline AlgebroidDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lie_algebra") || !j.contains("complex"))
        throw ParseError("descriptor: expected {\"lie_algebra\",\"complex\",...}");
    LieAlgebra g = lie_algebra_from_json(j.at("lie_algebra"));
    SimplicialComplex base = complex_from_json(j.at("complex"));
    std::map<std::pair<int, int>, Matrix> edge_phi;
    if (j.contains("edge_phi")) {
        const json& es = j.at("edge_phi");
        if (!es.is_array()) throw ParseError("descriptor.edge_phi: expected an array");
        for (std::size_t k = 0; k < es.size(); ++k) {
            const json& e = es[k];
            std::string where = "descriptor.edge_phi[" + std::to_string(k) + "]";
            if (!e.is_object() || !e.contains("edge") || !e.contains("matrix"))
                throw ParseError(where + ": expected {\"edge\",\"matrix\"}");
            auto edge = e.at("edge").get<std::vector<int>>();
            if (edge.size() != 2) throw ParseError(where + ".edge: expected two vertices");
            edge_phi.emplace(std::make_pair(edge[0], edge[1]),
                             matrix_from_json(e.at("matrix"), where + ".matrix"));
        }
    }
    std::map<Simplex, Vec> omega2;
    if (j.contains("omega2")) {
        const json& os = j.at("omega2");
        if (!os.is_array()) throw ParseError("descriptor.omega2: expected an array");
        for (std::size_t k = 0; k < os.size(); ++k) {
            const json& o = os[k];
            std::string where = "descriptor.omega2[" + std::to_string(k) + "]";
            if (!o.is_object() || !o.contains("triangle") || !o.contains("value"))
                throw ParseError(where + ": expected {\"triangle\",\"value\"}");
            auto tri = o.at("triangle").get<Simplex>();
            omega2.emplace(std::move(tri), vec_from_json(o.at("value"), where + ".value"));
        }
    }
    try {
        return AlgebroidDescriptor(std::move(g), std::move(base), std::move(edge_phi),
                                   std::move(omega2));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("descriptor: ") + e.what());
    }
}

inline json descriptor_to_json(const AlgebroidDescriptor& d) {
    json edge_phi = json::array();
    for (const auto& [edge, m] : d.edge_phi())
        edge_phi.push_back(json{{"edge", {edge.first, edge.second}}, {"matrix", matrix_to_json(m)}});
    json omega2 = json::array();
    for (const auto& [tri, v] : d.omega2())
        omega2.push_back(json{{"triangle", tri}, {"value", vec_to_json(v)}});
    return json{{"lie_algebra", lie_algebra_to_json(d.g())},
                {"complex", complex_to_json(d.base())},
                {"edge_phi", edge_phi},
                {"omega2", omega2}};
}

// ---- Simplicial map ----------------------------------------------------------

inline SimplicialMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.contains("vertex_map"))
        throw ParseError("map: expected {\"source\",\"target\",\"vertex_map\"}");
    SimplicialMap f{complex_from_json(j.at("source")), complex_from_json(j.at("target")),
                    j.at("vertex_map").get<std::vector<int>>()};
    return f;
}

// ---- Gauge datum (witness output) -------------------------------------------

inline json gauge_datum_to_json(const GaugeDatum& h) {
    json eta = json::array();
    for (const auto& [v, m] : h.eta)
        eta.push_back(json{{"vertex", v}, {"matrix", matrix_to_json(m)}});
    json mv = json::array();
    for (const auto& [edge, value] : h.m)
        mv.push_back(json{{"edge", {edge.first, edge.second}}, {"value", vec_to_json(value)}});
    return json{{"eta", eta}, {"m", mv}};
}

// ---- Polynomials and local gauge maps ----------------------------------------

inline Poly poly_from_json(const json& j, int nvars, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of terms");
    Poly p(nvars);
    for (std::size_t k = 0; k < j.size(); ++k) {
        const json& t = j[k];
        std::string tw = where + "[" + std::to_string(k) + "]";
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
            throw ParseError(tw + ": expected {\"exponents\",\"coeff\"}");
        auto e = t.at("exponents").get<std::vector<int>>();
        if (static_cast<int>(e.size()) != nvars)
            throw ParseError(tw + ".exponents: expected " + std::to_string(nvars) + " entries");
        for (int x : e)
            if (x < 0) throw ParseError(tw + ".exponents: negative exponent");
        p.add_term(e, rational_from_json(t.at("coeff"), tw + ".coeff"));
    }
    return p;
}

inline json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json{{"exponents", e}, {"coeff", rational_to_json(c)}});
    return out;
}

struct GaugeMapFile {
    LieAlgebra g;
    GaugeMap map;
};

/// { "lie_algebra": ..., "chart_dim": d, "phi": n x n array of polys,
///   "omega": d entries, each n polys }
inline GaugeMapFile gauge_map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lie_algebra") || !j.contains("chart_dim"))
        throw ParseError("gauge: expected {\"lie_algebra\",\"chart_dim\",\"phi\",\"omega\"}");
    LieAlgebra g = lie_algebra_from_json(j.at("lie_algebra"));
    int d = j.at("chart_dim").get<int>();
    if (d < 1) throw ParseError("gauge.chart_dim: must be at least 1");
    int n = g.dim();
    GaugeMap a = GaugeMap::identity(d, n);
    if (j.contains("phi")) {
        const json& rows = j.at("phi");
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw ParseError("gauge.phi: expected " + std::to_string(n) + " rows");
        for (int i = 0; i < n; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
                throw ParseError("gauge.phi: expected square shape");
            for (int c = 0; c < n; ++c)
                a.phi[i][c] = poly_from_json(rows[i][c], d,
                                             "gauge.phi[" + std::to_string(i) + "][" +
                                                 std::to_string(c) + "]");
        }
    }
    if (j.contains("omega")) {
        const json& comps = j.at("omega");
        if (!comps.is_array() || static_cast<int>(comps.size()) != d)
            throw ParseError("gauge.omega: expected " + std::to_string(d) + " components");
        for (int i = 0; i < d; ++i) {
            if (!comps[i].is_array() || static_cast<int>(comps[i].size()) != n)
                throw ParseError("gauge.omega[" + std::to_string(i) + "]: expected " +
                                 std::to_string(n) + " fiber entries");
            for (int c = 0; c < n; ++c)
                a.omega.components[i].components[c] =
                    poly_from_json(comps[i][c], d,
                                   "gauge.omega[" + std::to_string(i) + "][" +
                                       std::to_string(c) + "]");
        }
    }
    return GaugeMapFile{std::move(g), std::move(a)};
}

// ---- File helpers -------------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace latk
