// JSON serialization of matrices, point sets, matroids and reports, plus the
// string formats for exact scalars: rationals as "p/q", Gaussian entries as
// "re", "re+im*i" or "re-im*i".

#ifndef WTPOLY_IO_HPP
#define WTPOLY_IO_HPP

#include "wtpoly/exact.hpp"
#include "wtpoly/matroid.hpp"
#include "wtpoly/normality.hpp"
#include "wtpoly/polytope.hpp"
#include "wtpoly/roots.hpp"
#include "wtpoly/weights.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace wtpoly::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Scalar strings
// ---------------------------------------------------------------------------

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational string");
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid(num, true) || !valid(den, false))
        throw ParseError("malformed rational: '" + s + "'");
    Integer n(num), d(den);
    if (d == 0) throw ParseError("zero denominator: '" + s + "'");
    return Rational(n) / Rational(d);
}

inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline GaussianRational parse_gaussian(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty matrix entry");
    if (s.size() < 2 || s.substr(s.size() - 2) != "*i") return {parse_rational(s), Rational(0)};
    std::string body = s.substr(0, s.size() - 2);
    // Split at the sign that separates the real part from the imaginary
    // coefficient: a '+' or '-' directly following a digit or '/'.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if (body[i] != '+' && body[i] != '-') continue;
        char prev = body[i - 1];
        if (std::isdigit(static_cast<unsigned char>(prev)) || prev == '/') split = i;
    }
    if (split == std::string::npos)
        throw ParseError("malformed entry (pure imaginary must be written 0+a*i): '" + raw + "'");
    Rational re = parse_rational(body.substr(0, split));
    std::string ims = body.substr(split + 1);
    Rational im = parse_rational(ims);
    if (body[split] == '-') im = -im;
    return {std::move(re), std::move(im)};
}

inline std::string gaussian_to_string(const GaussianRational& g) {
    if (g.im == 0) return g.re.str();
    if (g.im < 0) return g.re.str() + "-" + Rational(-g.im).str() + "*i";
    return g.re.str() + "+" + g.im.str() + "*i";
}

// ---------------------------------------------------------------------------
// Matrices and point sets
// ---------------------------------------------------------------------------

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(gaussian_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline Mat mat_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON must have rows, cols, entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& e = j.at("entries");
    if (!e.is_array() || e.size() != rows) throw ParseError("matrix JSON: wrong number of rows");
    std::vector<GaussianRational> entries;
    entries.reserve(rows * cols);
    for (const json& row : e) {
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix JSON: wrong number of columns");
        for (const json& x : row) entries.push_back(parse_gaussian(x.get<std::string>()));
    }
    return {rows, cols, std::move(entries)};
}

inline json pointset_to_json(const PointSet& p) {
    json pts = json::array();
    for (const Vec& v : p.points()) pts.push_back(v);
    return {{"dim", p.dim()}, {"points", pts}};
}

inline PointSet pointset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw ParseError("point set JSON must have dim, points");
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<Vec> pts;
    for (const json& v : j.at("points")) pts.push_back(v.get<Vec>());
    return {dim, std::move(pts)};
}

// ---------------------------------------------------------------------------
// Matroids and reports (1-based ground set elements in all I/O)
// ---------------------------------------------------------------------------

inline json matroid_to_json(const Matroid& m) {
    json bases = json::array();
    for (const auto& b : m.bases()) {
        json jb = json::array();
        for (std::size_t e : b) jb.push_back(e + 1);
        bases.push_back(std::move(jb));
    }
    return {{"n", m.ground_size()}, {"k", m.rank()}, {"bases", bases}};
}

inline Matroid matroid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("bases"))
        throw ParseError("matroid JSON must have n, k, bases");
    std::size_t n = j.at("n").get<std::size_t>();
    std::size_t k = j.at("k").get<std::size_t>();
    std::vector<std::vector<std::size_t>> bases;
    for (const json& jb : j.at("bases")) {
        std::vector<std::size_t> b;
        for (const json& e : jb) {
            std::size_t x = e.get<std::size_t>();
            if (x < 1 || x > n) throw ParseError("matroid JSON: element out of range");
            b.push_back(x - 1);
        }
        bases.push_back(std::move(b));
    }
    return {n, k, std::move(bases)};
}

inline json bracket_monomial_to_json(const BracketMonomial& m) {
    json factors = json::array();
    for (const auto& f : m.factors) {
        json rows = json::array();
        for (std::size_t r : f.rows) rows.push_back(r + 1);
        factors.push_back({{"k", f.k}, {"I", rows}});
    }
    return factors;
}

inline json hull_certificate_to_json(const HullCertificate& c) {
    json j;
    if (c.inside) {
        j["type"] = "convex_combination";
        json w = json::array();
        for (const Rational& x : c.weights) w.push_back(rational_to_string(x));
        j["weights"] = w;
    } else {
        j["type"] = "separating_functional";
        json f = json::array();
        for (const Rational& x : c.functional) f.push_back(rational_to_string(x));
        j["functional"] = f;
        j["bound"] = rational_to_string(c.bound);
    }
    return j;
}

inline json semistability_report_to_json(const SemistabilityReport& r) {
    json j;
    j["semistable"] = r.semistable;
    j["in_root_lattice_case"] = r.in_root_lattice_case;
    j["witness_degree"] = r.witness_degree ? json(*r.witness_degree) : json(nullptr);
    j["witness"] = r.witness ? bracket_monomial_to_json(*r.witness) : json(nullptr);
    j["normalized_target"] = r.normalized_target;
    j["hull_certificate"] = hull_certificate_to_json(r.hull_certificate);
    return j;
}

inline json saturation_report_to_json(const SaturationReport& r) {
    json viol = json::array();
    for (const auto& [u, v] : r.edge_violations) viol.push_back(json::array({u, v}));
    return {{"is_saturated", r.is_saturated},
            {"edge_violations", viol},
            {"missing_points", pointset_to_json(r.missing_points)}};
}

inline json hole_report_to_json(const HoleReport& r) {
    json holes = json::array();
    for (const auto& h : r.holes) holes.push_back({{"degree", h.degree}, {"point", h.point}});
    return {{"checked_up_to", r.checked_up_to},
            {"holes", holes},
            {"normal_up_to_D", r.normal_up_to_degree}};
}

// ---------------------------------------------------------------------------
// Files and CLI argument formats
// ---------------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

/// Comma-separated integer list, e.g. "2,1,0".
inline Vec parse_int_list(const std::string& s) {
    Vec out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("malformed integer list: '" + s + "'");
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("malformed integer list: '" + s + "'");
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

/// Dominant weights on the CLI are partition strings; a nonzero last entry is
/// normalized away (the lift subtracts it from every coordinate).
inline DominantWeight parse_dominant(const std::string& s) {
    Vec c = parse_int_list(s);
    std::int64_t last = c.back();
    if (last != 0)
        for (auto& x : c) x -= last;
    return DominantWeight(std::move(c));
}

}  // namespace wtpoly::io

#endif  // WTPOLY_IO_HPP
