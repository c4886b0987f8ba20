/**
 * JSON documents for polytopes, slices and certificates.
 *
 * Rationals are written as strings "p/q" (or "p"); plain JSON integers are
 * accepted on input. Syntax errors carry file:line:col, semantic errors the
 * JSON pointer of the offending value.
 */
#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/certificate.hpp"

namespace toric {

using json = nlohmann::json;

struct PolytopeDocument {
    std::string name;
    std::string citation;
    Polytope polytope;
    std::vector<RatVec> marked_points;
};

struct SliceDocument {
    AffineReduction slice = AffineReduction::identity(0);
    /// Metadata for the reduced document.
    std::string result_name;
    std::string result_citation;
};

// ---------------------------------------------------------------------------
// scalars

inline std::optional<Rational> parse_rational_text(const std::string& s) {
    static const std::regex re(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) return std::nullopt;
    Integer num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
    Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
    if (den == 0) return std::nullopt;
    return Rational(num, den);
}

namespace detail {

inline std::string where(const json::json_pointer& at) {
    auto s = at.to_string();
    return s.empty() ? "/" : s;
}

[[noreturn]] inline void bad(const json::json_pointer& at, const std::string& msg) {
    throw Error(ErrorCode::ParseError, where(at) + ": " + msg);
}

inline const json& field(const json& j, const json::json_pointer& at, const char* key) {
    if (!j.is_object()) bad(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(at, std::string("missing field \"") + key + "\"");
    return *it;
}

inline Integer integer_of(const json& j, const json::json_pointer& at) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        static const std::regex re(R"(\s*[+-]?\d+\s*)");
        auto s = j.get<std::string>();
        if (std::regex_match(s, re)) {
            auto t = s.substr(s.find_first_not_of(" \t"));
            t = t.substr(0, t.find_last_not_of(" \t") + 1);
            return Integer(t[0] == '+' ? t.substr(1) : t);
        }
    }
    bad(at, "expected an integer");
}

inline Rational rational_of(const json& j, const json::json_pointer& at) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string())
        if (auto q = parse_rational_text(j.get<std::string>())) return *q;
    if (j.is_number_float()) bad(at, "floating-point value; write exact rationals as \"p/q\"");
    bad(at, "expected a rational \"p/q\" or an integer");
}

inline IntVec int_vec_of(const json& j, const json::json_pointer& at) {
    if (!j.is_array()) bad(at, "expected an array of integers");
    IntVec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_of(j[i], at / i));
    return out;
}

inline RatVec rat_vec_of(const json& j, const json::json_pointer& at) {
    if (!j.is_array()) bad(at, "expected an array of rationals");
    RatVec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_of(j[i], at / i));
    return out;
}

inline IntMat int_mat_of(const json& j, const json::json_pointer& at) {
    if (!j.is_array() || j.empty()) bad(at, "expected a nonempty array of integer rows");
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(int_vec_of(j[i], at / i));
        if (rows.back().size() != rows.front().size()) bad(at / i, "ragged matrix row");
    }
    return IntMat::from_rows(rows);
}

// Runs `build`, prefixing library errors with the document location while
// keeping their code.
template <class F>
auto located(const json::json_pointer& at, F&& build) -> decltype(build()) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        std::string msg = e.what();
        auto colon = msg.find(": ");
        throw Error(e.code(), where(at) + ": " + (colon == std::string::npos ? msg : msg.substr(colon + 2)));
    }
}

inline std::string quoted(const std::string& s) { return json(s).dump(); }

inline std::string rat_list(const RatVec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + quoted(to_string(v[i]));
    return out + "]";
}

inline std::string int_list(const IntVec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
    return out + "]";
}

inline std::string int_rows(const IntMat& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) out += (r ? ", " : "") + int_list(m.row(r));
    return out + "]";
}

inline std::string indent(const std::string& text, const std::string& pad) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (start) out += '\n' + pad;
        out += text.substr(start, end - start);
        start = end + 1;
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// text -> json

inline json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        auto pos = what.find("syntax error");
        throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                               (pos == std::string::npos ? what : what.substr(pos)));
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json load_json_file(const std::string& path) { return parse_json_text(read_text_file(path), path); }

// ---------------------------------------------------------------------------
// polytopes

inline Polytope polytope_from_json(const json& j, const json::json_pointer& at = json::json_pointer()) {
    const json& dim_j = detail::field(j, at, "dim");
    if (!dim_j.is_number_unsigned()) detail::bad(at / "dim", "expected a nonnegative integer");
    const auto dim = dim_j.get<std::size_t>();
    const json& fj = detail::field(j, at, "facets");
    if (!fj.is_array()) detail::bad(at / "facets", "expected an array");
    std::vector<Facet> facets;
    for (std::size_t i = 0; i < fj.size(); ++i) {
        auto fat = at / "facets" / i;
        IntVec normal = detail::int_vec_of(detail::field(fj[i], fat, "normal"), fat / "normal");
        Rational offset = detail::rational_of(detail::field(fj[i], fat, "offset"), fat / "offset");
        facets.push_back({std::move(normal), std::move(offset)});
    }
    return detail::located(at, [&] { return Polytope(dim, std::move(facets)); });
}

inline PolytopeDocument polytope_document_from_json(const json& j, const json::json_pointer& at = json::json_pointer()) {
    PolytopeDocument doc;
    doc.polytope = polytope_from_json(j, at);
    if (j.contains("name")) doc.name = j["name"].get<std::string>();
    if (j.contains("citation")) doc.citation = j["citation"].get<std::string>();
    if (j.contains("marked_points")) {
        const json& mp = j["marked_points"];
        if (!mp.is_array()) detail::bad(at / "marked_points", "expected an array of points");
        for (std::size_t i = 0; i < mp.size(); ++i) {
            auto p = detail::rat_vec_of(mp[i], at / "marked_points" / i);
            if (p.size() != doc.polytope.dim())
                detail::bad(at / "marked_points" / i, "point length differs from dim");
            doc.marked_points.push_back(std::move(p));
        }
    }
    return doc;
}

inline PolytopeDocument load_polytope(const std::string& path) {
    auto j = load_json_file(path);
    try {
        return polytope_document_from_json(j);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + std::string(e.what()).substr(std::string(to_string(e.code())).size() + 2));
    }
}

/// Facets in the polytope's own order; one facet per line.
inline std::string polytope_body(const Polytope& p) {
    std::string out = "\"dim\": " + std::to_string(p.dim()) + ",\n\"facets\": [";
    for (std::size_t i = 0; i < p.facet_count(); ++i) {
        const auto& f = p.facet(i);
        out += std::string(i ? "," : "") + "\n  {\"normal\": " + detail::int_list(f.normal) +
               ", \"offset\": " + detail::quoted(to_string(f.offset)) + "}";
    }
    return out + (p.facet_count() ? "\n]" : "]");
}

inline std::string polytope_inline(const Polytope& p) { return "{\n  " + detail::indent(polytope_body(p), "  ") + "\n}"; }

inline std::string to_json_text(const PolytopeDocument& doc) {
    std::string out = "{\n";
    if (!doc.name.empty()) out += "  \"name\": " + detail::quoted(doc.name) + ",\n";
    if (!doc.citation.empty()) out += "  \"citation\": " + detail::quoted(doc.citation) + ",\n";
    out += "  " + detail::indent(polytope_body(doc.polytope), "  ");
    if (!doc.marked_points.empty()) {
        out += ",\n  \"marked_points\": [";
        for (std::size_t i = 0; i < doc.marked_points.size(); ++i)
            out += (i ? ", " : "") + detail::rat_list(doc.marked_points[i]);
        out += "]";
    }
    return out + "\n}\n";
}

// ---------------------------------------------------------------------------
// slices

inline AffineReduction slice_from_json(const json& j, const json::json_pointer& at = json::json_pointer()) {
    IntMat a = detail::int_mat_of(detail::field(j, at, "A"), at / "A");
    RatVec x0 = j.contains("x0") ? detail::rat_vec_of(j["x0"], at / "x0") : RatVec(a.rows());
    return detail::located(at, [&] { return AffineReduction(std::move(a), std::move(x0)); });
}

/// Inline form "a11,a12/a21,a22/...;x1,x2,..." (rows separated by '/', the
/// base point after ';' and optional).
inline AffineReduction parse_slice_spec(const std::string& spec) {
    auto semi = spec.find(';');
    std::string rows_part = spec.substr(0, semi);
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::string cur;
        std::istringstream in(s);
        while (std::getline(in, cur, sep)) out.push_back(cur);
        if (!s.empty() && s.back() == sep) out.emplace_back();
        return out;
    };
    std::vector<IntVec> rows;
    static const std::regex int_re(R"(\s*[+-]?\d+\s*)");
    for (const auto& r : split(rows_part, '/')) {
        IntVec row;
        for (const auto& e : split(r, ',')) {
            if (!std::regex_match(e, int_re))
                throw Error(ErrorCode::ParseError, "slice spec: bad integer \"" + e + "\"");
            auto t = e.substr(e.find_first_not_of(" \t"));
            t = t.substr(0, t.find_last_not_of(" \t") + 1);
            row.emplace_back(t[0] == '+' ? t.substr(1) : t);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error(ErrorCode::ParseError, "slice spec: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::ParseError, "slice spec: empty matrix");
    IntMat a = IntMat::from_rows(rows);
    RatVec x0(a.rows());
    if (semi != std::string::npos) {
        x0.clear();
        for (const auto& e : split(spec.substr(semi + 1), ',')) {
            auto q = parse_rational_text(e);
            if (!q) throw Error(ErrorCode::ParseError, "slice spec: bad rational \"" + e + "\"");
            x0.push_back(*q);
        }
    }
    return AffineReduction(std::move(a), std::move(x0));
}

inline SliceDocument slice_document_from_json(const json& j) {
    SliceDocument doc{slice_from_json(j), {}, {}};
    if (j.contains("result")) {
        const json& r = j["result"];
        if (r.contains("name")) doc.result_name = r["name"].get<std::string>();
        if (r.contains("citation")) doc.result_citation = r["citation"].get<std::string>();
    }
    return doc;
}

// ---------------------------------------------------------------------------
// certificates

inline ClaimKind claim_kind_of(const json& j, const json::json_pointer& at) {
    if (j == "TT") return ClaimKind::TT;
    if (j == "TR") return ClaimKind::TR;
    detail::bad(at, "claim kind must be \"TT\" or \"TR\"");
}

inline BaseKind base_kind_of(const json& j, const json::json_pointer& at) {
    for (auto k : {BaseKind::CliffordTorus, BaseKind::WeightedProjective, BaseKind::CP1, BaseKind::OMinusOne})
        if (j == to_string(k)) return k;
    detail::bad(at, "unknown base fact " + j.dump());
}

inline CertNode cert_node_from_json(const json& j, const json::json_pointer& at) {
    if (!j.is_object()) detail::bad(at, "expected a certificate node");
    if (j.contains("base")) {
        BaseFact f;
        f.kind = base_kind_of(j["base"], at / "base");
        f.instance = polytope_from_json(detail::field(j, at, "instance"), at / "instance");
        if (j.contains("weights")) f.weights = detail::int_vec_of(j["weights"], at / "weights");
        if (f.kind == BaseKind::WeightedProjective && f.weights.empty())
            detail::bad(at, "WeightedProjective leaf needs \"weights\"");
        if (j.contains("basis_change")) f.basis_change = detail::int_mat_of(j["basis_change"], at / "basis_change");
        if (j.contains("kind")) f.kind_override = claim_kind_of(j["kind"], at / "kind");
        return CertNode::leaf(std::move(f));
    }
    if (j.contains("product")) {
        const json& list = j["product"];
        if (!list.is_array() || list.empty()) detail::bad(at / "product", "expected a nonempty array");
        std::vector<CertNode> kids;
        for (std::size_t i = 0; i < list.size(); ++i) kids.push_back(cert_node_from_json(list[i], at / "product" / i));
        return CertNode::product(std::move(kids));
    }
    if (j.contains("reduce")) {
        auto rat = at / "reduce";
        const json& r = j["reduce"];
        auto slice = slice_from_json(r, rat);
        auto child = cert_node_from_json(detail::field(r, rat, "child"), rat / "child");
        std::optional<Polytope> target;
        if (r.contains("target")) target = polytope_from_json(r["target"], rat / "target");
        return CertNode::reduction(std::move(child), std::move(slice), std::move(target));
    }
    detail::bad(at, "node must have one of \"base\", \"product\", \"reduce\"");
}

inline Certificate certificate_from_json(const json& j) {
    json::json_pointer root;
    Certificate c;
    if (j.contains("name")) c.name = j["name"].get<std::string>();
    if (j.contains("citation")) c.citation = j["citation"].get<std::string>();
    const json& claim = detail::field(j, root, "claim");
    auto cat = root / "claim";
    c.kind = claim_kind_of(detail::field(claim, cat, "kind"), cat / "kind");
    if (claim.contains("target")) c.target = polytope_from_json(claim["target"], cat / "target");
    if (claim.contains("marked_point")) c.marked_point = detail::rat_vec_of(claim["marked_point"], cat / "marked_point");
    c.root = cert_node_from_json(detail::field(j, root, "tree"), root / "tree");
    return c;
}

inline Certificate load_certificate(const std::string& path) {
    auto j = load_json_file(path);
    try {
        return certificate_from_json(j);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + std::string(e.what()).substr(std::string(to_string(e.code())).size() + 2));
    }
}

namespace detail {

inline std::string slice_fields(const AffineReduction& s) {
    return "\"A\": " + int_rows(s.linear_part()) + ",\n\"x0\": " + rat_list(s.base_point());
}

inline std::string node_text(const CertNode& n) {
    switch (n.type) {
    case CertNode::Type::Leaf: {
        const BaseFact& f = *n.fact;
        std::string out = "{\n  \"base\": " + quoted(to_string(f.kind));
        if (!f.weights.empty()) out += ",\n  \"weights\": " + int_list(f.weights);
        if (f.kind_override) out += ",\n  \"kind\": " + quoted(to_string(*f.kind_override));
        if (f.basis_change) out += ",\n  \"basis_change\": " + int_rows(*f.basis_change);
        out += ",\n  \"instance\": " + indent(polytope_inline(f.instance), "  ");
        return out + "\n}";
    }
    case CertNode::Type::Product: {
        std::string out = "{\"product\": [";
        for (std::size_t i = 0; i < n.children.size(); ++i)
            out += std::string(i ? "," : "") + "\n  " + indent(node_text(n.children[i]), "  ");
        return out + "\n]}";
    }
    case CertNode::Type::Reduction: {
        std::string out = "{\"reduce\": {\n  " + indent(slice_fields(*n.slice), "  ");
        if (n.target) out += ",\n  \"target\": " + indent(polytope_inline(*n.target), "  ");
        out += ",\n  \"child\": " + indent(node_text(n.children.front()), "  ");
        return out + "\n}}";
    }
    }
    return "{}";
}

}  // namespace detail

inline std::string to_json_text(const Certificate& c) {
    std::string out = "{\n";
    if (!c.name.empty()) out += "  \"name\": " + detail::quoted(c.name) + ",\n";
    if (!c.citation.empty()) out += "  \"citation\": " + detail::quoted(c.citation) + ",\n";
    out += "  \"claim\": {\"kind\": " + detail::quoted(to_string(c.kind));
    if (c.marked_point) out += ", \"marked_point\": " + detail::rat_list(*c.marked_point);
    if (c.target) out += ",\n    \"target\": " + detail::indent(polytope_inline(*c.target), "    ");
    out += "},\n  \"tree\": " + detail::indent(detail::node_text(c.root), "  ");
    return out + "\n}\n";
}

}  // namespace toric
