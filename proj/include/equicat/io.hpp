// JSON document model for objects and morphisms.
//
// Format: UTF-8 JSON, one document per file. Rationals are strings like
// "3/7", negatives with a leading U+2212 minus sign (never floats; an
// ASCII minus is accepted on input, U+2212 is emitted, so canonical files
// round-trip byte-exactly). Linear maps are
// {"rows": r, "cols": c, "entries": [[...], ...]}
// with a row-major grid of rational strings. Subspaces are arrays of
// columns, each an array of `ambient` rational strings; any spanning set is
// accepted and re-canonicalized on load. Morphism documents embed their
// source and target objects inline, so a file is self-contained.
//
// serialize() emits a canonical form (fixed field order, two-space indent,
// trailing newline), so serialize(parse(text)) == text for canonical files.
#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "equicat/categories.hpp"
#include "equicat/matrix.hpp"
#include "equicat/rational.hpp"
#include "equicat/subspace.hpp"

namespace equicat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Document = std::variant<CObject, A2Object, A1Object, CMorphism, A2Morphism>;

inline const char* kind_name(const Document& d) {
    struct Namer {
        const char* operator()(const CObject&) const { return "c-object"; }
        const char* operator()(const A2Object&) const { return "a2-object"; }
        const char* operator()(const A1Object&) const { return "a1-object"; }
        const char* operator()(const CMorphism&) const { return "c-morphism"; }
        const char* operator()(const A2Morphism&) const { return "a2-morphism"; }
    };
    return std::visit(Namer{}, d);
}

namespace detail {

using Json = nlohmann::ordered_json;

// Guards allocations against absurd declared dimensions in hostile input.
inline constexpr std::size_t kMaxDocDim = 4096;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

inline void reject_unknown_fields(const Json& j, std::initializer_list<const char*> known,
                                  const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) fail(path, "unexpected field '" + it.key() + "'");
    }
}

inline std::size_t size_from(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
    auto n = j.get<std::uint64_t>();
    if (n > kMaxDocDim) fail(path, "dimension exceeds limit " + std::to_string(kMaxDocDim));
    return static_cast<std::size_t>(n);
}

inline Rational rational_from(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a rational string (floats are not accepted)");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

inline Matrix matrix_from(const Json& j, const std::string& path) {
    reject_unknown_fields(j, {"rows", "cols", "entries"}, path);
    std::size_t rows = size_from(field(j, "rows", path), path + ".rows");
    std::size_t cols = size_from(field(j, "cols", path), path + ".cols");
    const Json& entries = field(j, "entries", path);
    if (!entries.is_array() || entries.size() != rows)
        fail(path + ".entries", "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = entries[r];
        std::string row_path = path + ".entries[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != cols)
            fail(row_path, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rational_from(row[c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

inline Subspace subspace_from(const Json& j, std::size_t ambient, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of columns");
    if (j.size() > kMaxDocDim) fail(path, "too many columns");
    Matrix cols(ambient, j.size());
    for (std::size_t c = 0; c < j.size(); ++c) {
        const Json& col = j[c];
        std::string col_path = path + "[" + std::to_string(c) + "]";
        if (!col.is_array() || col.size() != ambient)
            fail(col_path, "expected " + std::to_string(ambient) + " entries (the ambient dim)");
        for (std::size_t r = 0; r < ambient; ++r)
            cols.at(r, c) = rational_from(col[r], col_path + "[" + std::to_string(r) + "]");
    }
    return Subspace(ambient, cols);
}

inline CObject c_object_from(const Json& j, const std::string& path) {
    reject_unknown_fields(j, {"kind", "ambient", "a1", "a2", "b1", "b2"}, path);
    std::size_t ambient = size_from(field(j, "ambient", path), path + ".ambient");
    return {ambient, subspace_from(field(j, "a1", path), ambient, path + ".a1"),
            subspace_from(field(j, "a2", path), ambient, path + ".a2"),
            subspace_from(field(j, "b1", path), ambient, path + ".b1"),
            subspace_from(field(j, "b2", path), ambient, path + ".b2")};
}

inline A2Object a2_object_from(const Json& j, const std::string& path) {
    reject_unknown_fields(j, {"kind", "delta_minus", "gamma_minus", "delta_plus", "gamma_plus"},
                          path);
    return {matrix_from(field(j, "delta_minus", path), path + ".delta_minus"),
            matrix_from(field(j, "gamma_minus", path), path + ".gamma_minus"),
            matrix_from(field(j, "delta_plus", path), path + ".delta_plus"),
            matrix_from(field(j, "gamma_plus", path), path + ".gamma_plus")};
}

inline A1Object a1_object_from(const Json& j, const std::string& path) {
    reject_unknown_fields(j, {"kind", "u", "v"}, path);
    return {matrix_from(field(j, "u", path), path + ".u"),
            matrix_from(field(j, "v", path), path + ".v")};
}

inline std::string kind_of(const Json& j, const std::string& path) {
    const Json& k = field(j, "kind", path);
    if (!k.is_string()) fail(path + ".kind", "expected a string");
    return k.get<std::string>();
}

inline void require_kind(const Json& j, const char* expected, const std::string& path) {
    std::string k = kind_of(j, path);
    if (k != expected)
        fail(path + ".kind", "expected \"" + std::string(expected) + "\", got \"" + k + "\"");
}

inline CMorphism c_morphism_from(const Json& j, const std::string& path) {
    reject_unknown_fields(j, {"kind", "source", "target", "map"}, path);
    const Json& src = field(j, "source", path);
    const Json& tgt = field(j, "target", path);
    require_kind(src, "c-object", path + ".source");
    require_kind(tgt, "c-object", path + ".target");
    return {c_object_from(src, path + ".source"), c_object_from(tgt, path + ".target"),
            matrix_from(field(j, "map", path), path + ".map")};
}

inline A2Morphism a2_morphism_from(const Json& j, const std::string& path) {
    reject_unknown_fields(j, {"kind", "source", "target", "e_minus", "e_zero", "e_plus"}, path);
    const Json& src = field(j, "source", path);
    const Json& tgt = field(j, "target", path);
    require_kind(src, "a2-object", path + ".source");
    require_kind(tgt, "a2-object", path + ".target");
    return {a2_object_from(src, path + ".source"), a2_object_from(tgt, path + ".target"),
            matrix_from(field(j, "e_minus", path), path + ".e_minus"),
            matrix_from(field(j, "e_zero", path), path + ".e_zero"),
            matrix_from(field(j, "e_plus", path), path + ".e_plus")};
}

// Canonical form has a positive denominator, so a minus can only lead.
inline std::string rational_text(const Rational& q) {
    std::string s = q.str();
    if (!s.empty() && s[0] == '-') s.replace(0, 1, "\xe2\x88\x92");  // U+2212
    return s;
}

inline Json matrix_json(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_text(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(entries);
    return j;
}

inline Json subspace_json(const Subspace& s) {
    Json cols = Json::array();
    const Matrix& b = s.basis();
    for (std::size_t c = 0; c < b.cols(); ++c) {
        Json col = Json::array();
        for (std::size_t r = 0; r < b.rows(); ++r) col.push_back(rational_text(b.at(r, c)));
        cols.push_back(std::move(col));
    }
    return cols;
}

inline Json object_json(const CObject& x) {
    Json j;
    j["kind"] = "c-object";
    j["ambient"] = x.ambient;
    j["a1"] = subspace_json(x.a1);
    j["a2"] = subspace_json(x.a2);
    j["b1"] = subspace_json(x.b1);
    j["b2"] = subspace_json(x.b2);
    return j;
}

inline Json object_json(const A2Object& e) {
    Json j;
    j["kind"] = "a2-object";
    j["delta_minus"] = matrix_json(e.delta_minus);
    j["gamma_minus"] = matrix_json(e.gamma_minus);
    j["delta_plus"] = matrix_json(e.delta_plus);
    j["gamma_plus"] = matrix_json(e.gamma_plus);
    return j;
}

inline Json object_json(const A1Object& p) {
    Json j;
    j["kind"] = "a1-object";
    j["u"] = matrix_json(p.u);
    j["v"] = matrix_json(p.v);
    return j;
}

inline Json object_json(const CMorphism& f) {
    Json j;
    j["kind"] = "c-morphism";
    j["source"] = object_json(f.source);
    j["target"] = object_json(f.target);
    j["map"] = matrix_json(f.map);
    return j;
}

inline Json object_json(const A2Morphism& f) {
    Json j;
    j["kind"] = "a2-morphism";
    j["source"] = object_json(f.source);
    j["target"] = object_json(f.target);
    j["e_minus"] = matrix_json(f.e_minus);
    j["e_zero"] = matrix_json(f.e_zero);
    j["e_plus"] = matrix_json(f.e_plus);
    return j;
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
    detail::Json j;
    try {
        j = detail::Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports line and column in the message.
        throw ParseError(e.what());
    }
    std::string kind = detail::kind_of(j, "document");
    if (kind == "c-object") return detail::c_object_from(j, "document");
    if (kind == "a2-object") return detail::a2_object_from(j, "document");
    if (kind == "a1-object") return detail::a1_object_from(j, "document");
    if (kind == "c-morphism") return detail::c_morphism_from(j, "document");
    if (kind == "a2-morphism") return detail::a2_morphism_from(j, "document");
    detail::fail("document.kind", "unknown kind \"" + kind + "\"");
}

inline Document load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

inline std::string serialize(const Document& d) {
    detail::Json j = std::visit([](const auto& x) { return detail::object_json(x); }, d);
    return j.dump(2) + "\n";
}

inline void save_document(const Document& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << serialize(d);
}

}  // namespace equicat
