#pragma once

// JSON file formats and report serialization.
//
//   quiver:    {"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2","degree":0}]}
//   gentle:    quiver fields plus "relations":[["b1","b1"],...]  (first-applied, second-applied)
//   canonical: {"weights":[2,3,5],"lambdas":[1]}
//   matrix:    [["1","-1/2"],["0","3"]]
//
// Exact values are written as JSON integers or "p/q" strings. Floating
// point values are written as {"value":x,"exact":false,"tol":t} with x
// rounded to a fixed number of decimals.

#include "quiverlab/algebra.hpp"
#include "quiverlab/cyclotomic.hpp"
#include "quiverlab/polynomial.hpp"
#include "quiverlab/quiver.hpp"
#include "quiverlab/resolution.hpp"
#include "quiverlab/serre.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace quiverlab {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_document(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw Error(std::string("parse error: ") + e.what());
    }
}

inline std::string vertex_name(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error("parse error: vertex names must be strings or integers");
}

inline const Json& member(const Json& obj, const char* key, const char* where)
{
    if (!obj.is_object()) throw Error(std::string("parse error: ") + where + " must be an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw Error(std::string("parse error: ") + where + " is missing \"" + key + "\"");
    return *it;
}

inline Rational rational_value(const Json& x)
{
    if (x.is_number_integer()) return Rational(Integer(std::to_string(x.get<long long>())));
    if (x.is_string()) return parse_rational(x.get<std::string>());
    throw Error("parse error: expected an integer or a \"p/q\" string");
}

} // namespace detail

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Quiver quiver_from_json(const Json& doc)
{
    const Json& vs = detail::member(doc, "vertices", "quiver");
    const Json& as = detail::member(doc, "arrows", "quiver");
    if (!vs.is_array() || !as.is_array()) throw Error("parse error: \"vertices\" and \"arrows\" must be arrays");

    std::vector<std::string> vertices;
    for (const auto& v : vs) vertices.push_back(detail::vertex_name(v));
    auto index = [&](const Json& name, const std::string& arrow) {
        const std::string n = detail::vertex_name(name);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == n) return i;
        throw Error("arrow '" + arrow + "' references unknown vertex '" + n + "'");
    };

    std::vector<Arrow> arrows;
    for (const auto& a : as) {
        const Json& id = detail::member(a, "id", "arrow");
        if (!id.is_string()) throw Error("parse error: arrow ids must be strings");
        Arrow arrow;
        arrow.id = id.get<std::string>();
        arrow.source = index(detail::member(a, "from", "arrow"), arrow.id);
        arrow.target = index(detail::member(a, "to", "arrow"), arrow.id);
        if (auto d = a.find("degree"); d != a.end()) {
            if (!d->is_number_integer()) throw Error("parse error: degree of arrow '" + arrow.id + "' must be an integer");
            arrow.degree = d->get<int>();
        }
        arrows.push_back(std::move(arrow));
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

inline Quiver parse_quiver(std::string_view text) { return quiver_from_json(detail::parse_document(text)); }

inline GentlePresentation gentle_from_json(const Json& doc)
{
    GentlePresentation pres{quiver_from_json(doc), {}};
    const Json& rel = detail::member(doc, "relations", "gentle presentation");
    if (!rel.is_array()) throw Error("parse error: \"relations\" must be an array");
    for (const auto& r : rel) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
            throw Error("parse error: each relation is a pair of arrow ids");
        pres.relations.push_back({r[0].get<std::string>(), r[1].get<std::string>()});
    }
    return pres;
}

inline GentlePresentation parse_gentle(std::string_view text) { return gentle_from_json(detail::parse_document(text)); }

inline CanonicalSpec canonical_from_json(const Json& doc)
{
    CanonicalSpec spec;
    const Json& w = detail::member(doc, "weights", "canonical spec");
    if (!w.is_array()) throw Error("parse error: \"weights\" must be an array");
    for (const auto& x : w) {
        if (!x.is_number_integer() || x.get<long long>() < 1) throw Error("parse error: weights must be positive integers");
        spec.weights.push_back(x.get<unsigned>());
    }
    if (auto l = doc.find("lambdas"); l != doc.end()) {
        if (!l->is_array()) throw Error("parse error: \"lambdas\" must be an array");
        for (const auto& x : *l) spec.lambdas.push_back(detail::rational_value(x));
    }
    validate(spec);
    return spec;
}

inline CanonicalSpec parse_canonical(std::string_view text) { return canonical_from_json(detail::parse_document(text)); }

inline RatMatrix parse_matrix(std::string_view text)
{
    const Json doc = detail::parse_document(text);
    if (!doc.is_array() || doc.empty()) throw Error("parse error: matrix must be a nonempty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : doc) {
        if (!r.is_array()) throw Error("parse error: matrix rows must be arrays");
        std::vector<Rational> row;
        for (const auto& x : r) row.push_back(detail::rational_value(x));
        if (!rows.empty() && row.size() != rows.front().size()) throw Error("parse error: matrix rows have different lengths");
        rows.push_back(std::move(row));
    }
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

/// Algebra described by a file: a gentle presentation when "relations" is
/// present, a canonical algebra when "weights" is present, otherwise the
/// path algebra of the quiver.
struct AlgebraInput {
    std::string kind;  // "path", "gentle" or "canonical"
    SCAlgebra algebra;
    std::optional<Quiver> quiver;
};

inline AlgebraInput parse_algebra(std::string_view text)
{
    const Json doc = detail::parse_document(text);
    if (doc.is_object() && doc.contains("weights")) return {"canonical", canonical_algebra(canonical_from_json(doc)), std::nullopt};
    if (doc.is_object() && doc.contains("relations")) {
        auto pres = gentle_from_json(doc);
        auto a = gentle_algebra(pres);
        return {"gentle", std::move(a), std::move(pres.quiver)};
    }
    Quiver q = quiver_from_json(doc);
    auto a = path_algebra(q);
    return {"path", std::move(a), std::move(q)};
}

// ---------------------------------------------------------------------------
// Output.

/// FNV-1a 64-bit digest of the input bytes, as hex.
inline std::string input_digest(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline double fixed(double x, int decimals = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return std::strtod(buf, nullptr);
}

/// tol <= 0 means no stated tolerance (fit diagnostics).
inline Json approx_json(double x, double tol, int decimals = 6)
{
    Json j{{"value", fixed(x, decimals)}, {"exact", false}};
    if (tol > 0) j["tol"] = tol;
    return j;
}

inline Json to_json(const Rational& q)
{
    if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

inline Json to_json(const RatMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const Polynomial& p)
{
    Json coeffs = Json::array();
    for (long k = 0; k <= p.degree(); ++k) coeffs.push_back(to_json(p.coeff(static_cast<std::size_t>(k))));
    return Json{{"text", p.to_string()}, {"coefficients", coeffs}};
}

inline Json to_json(const QuiverType& t)
{
    Json j{{"type", type_name(t)}};
    if (const auto* a = std::get_if<AffineType>(&t)) j["radical_vector"] = a->radical_vector;
    return j;
}

inline Json to_json(const CycloProfile& p)
{
    Json j{{"is_cyclotomic", p.is_cyclotomic}};
    Json orders = Json::array();
    for (const auto& f : p.orders) orders.push_back(Json{{"d", f.order}, {"multiplicity", f.multiplicity}});
    j["orders"] = orders;
    j["periodic"] = p.periodic;
    j["period"] = p.period ? Json(*p.period) : Json(nullptr);
    j["witness"] = p.witness ? Json{{"n", p.witness->n}, {"l", p.witness->l}} : Json(nullptr);
    return j;
}

inline Json to_json(const SerreVerdict& v)
{
    Json j{{"kind", kind_name(v)}};
    auto opt = [](const std::optional<std::int64_t>& x) { return x ? Json(*x) : Json(nullptr); };
    if (const auto* s = std::get_if<SerreCyclotomic>(&v)) {
        j["l"] = s->l;
        j["m"] = opt(s->m);
        j["n"] = opt(s->n);
    } else if (const auto* f = std::get_if<FractionallyCalabiYau>(&v)) {
        j["l"] = 1;
        j["m"] = opt(f->m);
        j["n"] = opt(f->n);
        if (f->coxeter_period) j["coxeter_period"] = *f->coxeter_period;
    }
    j["reason"] = reason(v);
    return j;
}

inline Json to_json(const ResolutionTrace& t)
{
    return Json{{"betti", t.betti}, {"truncated_by", to_string(t.truncated_by)}};
}

inline Json to_json(const ComplexityEstimate& e)
{
    Json j;
    switch (e.kind) {
    case ComplexityEstimate::Kind::Finite:
        j["kind"] = "finite";
        j["k"] = e.k;
        break;
    case ComplexityEstimate::Kind::Infinite: j["kind"] = "infinite"; break;
    case ComplexityEstimate::Kind::Inconclusive: j["kind"] = "inconclusive"; break;
    }
    j["reason"] = e.reason;
    auto fit = [](double x) { return std::isnan(x) ? Json(nullptr) : approx_json(x, 0.0, 4); };
    j["loglog_slope"] = fit(e.loglog_slope);
    j["loglog_residual"] = fit(e.loglog_residual);
    j["exp_slope"] = fit(e.exp_slope);
    j["exp_residual"] = fit(e.exp_residual);
    return j;
}

inline Json to_json(const CoxeterCheck& c)
{
    Json j{{"status", to_string(c.status)}, {"message", c.message}, {"profile", to_json(c.profile)}};
    j["witness"] = c.witness ? Json{{"n", c.witness->n}, {"l", c.witness->l}} : Json(nullptr);
    j["necessary_only"] = true;
    return j;
}

} // namespace quiverlab
