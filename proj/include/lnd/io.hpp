#pragma once
// Structured documents for rings, actions, cochains, deformations,
// automorphisms and constant tables.  Exact scalars are serialized as
// decimal strings (rationals as "p/q"); parsers also accept plain JSON
// integers.  Output is canonical: sorted keys, two-space indent, entries in
// canonical sequence order, so emitted documents are byte-stable.

#include <filesystem>
#include <json.hpp>

#include "lnd/deformation.hpp"

namespace lnd {

using json = nlohmann::json;

// ------------------------------------------------------------- scalars ---

template <class R>
json scalar_to_json(const R& ring, const typename R::Elem& v) {
    return ring.to_string(v);
}

template <class R>
typename R::Elem scalar_from_json(const R& ring, const json& j) {
    if (j.is_string()) return ring.parse(j.get<std::string>());
    if (j.is_number_integer()) return ring.from_long(j.get<long>());
    throw ParseError("expected a scalar (string or integer), got " + j.dump());
}

inline json base_to_json(const BaseDesc& b) {
    if (b.kind == BaseDesc::Kind::Zp) return json{{"Zmod", b.p}};
    return b.kind == BaseDesc::Kind::Z ? json("Z") : json("Q");
}

inline BaseDesc base_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "Z") return BaseDesc::z();
        if (s == "Q") return BaseDesc::q();
        throw ParseError("unknown base ring '" + s + "'");
    }
    if (j.is_object() && j.contains("Zmod")) return BaseDesc::zp(j.at("Zmod").get<long>());
    throw ParseError("expected \"Z\", \"Q\" or {\"Zmod\": p}");
}

template <class R>
BaseDesc base_desc_of(const R& ring) {
    if constexpr (std::is_same_v<R, ZRing>) return BaseDesc::z();
    else if constexpr (std::is_same_v<R, QRing>) return BaseDesc::q();
    else return BaseDesc::zp(ring.p);
}

// Calls f with the ring context named by the descriptor.
template <class F>
auto with_base(const BaseDesc& b, F&& f) {
    switch (b.kind) {
        case BaseDesc::Kind::Z: return f(ZRing{});
        case BaseDesc::Kind::Q: return f(QRing{});
        case BaseDesc::Kind::Zp: return f(ZpRing(b.p));
    }
    throw ParseError("bad base descriptor");
}

// ----------------------------------------------------------- sequences ---

inline json seq_to_json(const ExpSeq& s) {
    json arr = json::array();
    for (int v : s.dense()) arr.push_back(v);
    return arr;
}

inline ExpSeq seq_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a sequence array, got " + j.dump());
    std::vector<int> dense;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("sequence entries must be integers");
        dense.push_back(v.get<int>());
        if (dense.back() < 0) throw ParseError("sequence entries must be non-negative");
    }
    return ExpSeq::from_dense(dense);
}

// ------------------------------------------------------------- vectors ---

template <class R>
json vec_to_json(const R& ring, const Vec<R>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(scalar_to_json(ring, x));
    return arr;
}

template <class R>
Vec<R> vec_from_json(const R& ring, const json& j, int expected) {
    if (!j.is_array()) throw ParseError("expected a coordinate array");
    if (static_cast<int>(j.size()) != expected)
        throw MismatchError("coordinate vector has length " + std::to_string(j.size()) +
                            ", expected " + std::to_string(expected));
    Vec<R> out;
    for (const auto& x : j) out.push_back(scalar_from_json(ring, x));
    return out;
}

// Row-major matrix document.
template <class R>
json matrix_to_json(const Matrix<R>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.ring(), m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class R>
Matrix<R> matrix_from_json(const R& ring, const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw MismatchError("matrix has " + std::to_string(j.is_array() ? j.size() : 0) +
                            " rows, expected " + std::to_string(rows));
    Matrix<R> m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw MismatchError("matrix row " + std::to_string(i) + " has wrong length");
        for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(ring, row[static_cast<size_t>(c)]);
    }
    return m;
}

// ---------------------------------------------------------------- rings --

template <class R>
json ring_to_json(const FiniteRing<R>& a) {
    json mult = json::array();
    for (int i = 0; i < a.rank; ++i) {
        json row = json::array();
        for (int j = 0; j < a.rank; ++j)
            row.push_back(vec_to_json(a.base, a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        mult.push_back(row);
    }
    return json{{"kind", "ring"},
                {"base", base_to_json(base_desc_of(a.base))},
                {"rank", a.rank},
                {"basis", a.basis_names},
                {"unit", vec_to_json(a.base, a.unit)},
                {"mult", mult}};
}

template <class R>
FiniteRing<R> ring_from_json(const R& base, const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("unit") || !j.contains("mult"))
        throw ParseError("ring document needs rank, unit and mult");
    FiniteRing<R> a;
    a.base = base;
    a.rank = j.at("rank").get<int>();
    if (a.rank < 1) throw ParseError("ring rank must be positive");
    if (j.contains("basis"))
        a.basis_names = j.at("basis").get<std::vector<std::string>>();
    else
        for (int i = 0; i < a.rank; ++i) a.basis_names.push_back("e" + std::to_string(i + 1));
    if (static_cast<int>(a.basis_names.size()) != a.rank)
        throw MismatchError("basis name count differs from rank");
    a.unit = vec_from_json(base, j.at("unit"), a.rank);
    const auto& mult = j.at("mult");
    if (!mult.is_array() || static_cast<int>(mult.size()) != a.rank)
        throw MismatchError("mult table must have one row per basis element");
    a.mult.assign(static_cast<size_t>(a.rank), std::vector<Vec<R>>(static_cast<size_t>(a.rank)));
    for (int i = 0; i < a.rank; ++i) {
        const auto& row = mult[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != a.rank)
            throw MismatchError("mult row " + std::to_string(i) + " has wrong length");
        for (int c = 0; c < a.rank; ++c)
            a.mult[static_cast<size_t>(i)][static_cast<size_t>(c)] =
                vec_from_json(base, row[static_cast<size_t>(c)], a.rank);
    }
    return a;
}

// ------------------------------------------------------------ file glue --

json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const json& doc);
std::string canonical_dump(const json& doc);

// Resolves an embedded document or a {"file": "..."} reference relative to
// the referencing document's directory.
inline json resolve_ref(const json& j, const std::filesystem::path& dir) {
    if (j.is_object() && j.contains("file"))
        return load_json_file(dir / j.at("file").get<std::string>());
    if (j.is_string()) return load_json_file(dir / j.get<std::string>());
    return j;
}

inline BaseDesc peek_base(const json& doc, const std::filesystem::path& dir) {
    if (doc.contains("base")) return base_from_json(doc.at("base"));
    if (doc.contains("ring")) return peek_base(resolve_ref(doc.at("ring"), dir), dir);
    if (doc.contains("action")) return peek_base(resolve_ref(doc.at("action"), dir), dir);
    throw ParseError("cannot determine the base ring of the document");
}

// --------------------------------------------------------------- actions --

template <class R>
json action_to_json(const ActionTable<R>& t) {
    json entries = json::array();
    for (const auto& [alpha, m] : t.action)
        entries.push_back(json{{"alpha", seq_to_json(alpha)}, {"matrix", matrix_to_json(m)}});
    return json{{"kind", "action"},
                {"ring", ring_to_json(t.ring)},
                {"bound", t.bound},
                {"action", entries}};
}

template <class R>
ActionTable<R> action_from_json(const R& base, const json& j, const std::filesystem::path& dir) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("bound") || !j.contains("action"))
        throw ParseError("action document needs ring, bound and action");
    ActionTable<R> t;
    t.ring = ring_from_json(base, resolve_ref(j.at("ring"), dir));
    t.bound = j.at("bound").get<long>();
    if (t.bound < 0) throw ParseError("bound must be non-negative");
    for (const auto& e : j.at("action")) {
        const ExpSeq alpha = seq_from_json(e.at("alpha"));
        if (alpha.degree() > t.bound)
            throw BoundError("action entry at " + alpha.to_string() + " exceeds bound " +
                             std::to_string(t.bound));
        t.action[alpha] = matrix_from_json(base, e.at("matrix"), t.ring.rank, t.ring.rank);
    }
    t.fill_missing_with_zero();
    return t;
}

// -------------------------------------------------------------- cochains --

// Degree-1 cochain: sparse list of (alpha, matrix), zero entries omitted.
template <class R>
json cochain1_to_json(const Cochain<R>& c) {
    json entries = json::array();
    for (const auto& [alpha, t] : c.tensor) {
        if (t.is_zero()) continue;
        entries.push_back(json{{"alpha", seq_to_json(alpha)}, {"matrix", matrix_to_json(t.vals)}});
    }
    return entries;
}

template <class R>
Cochain<R> cochain1_from_json(const R& base, const json& j, int rank, long bound) {
    if (!j.is_array()) throw ParseError("degree-1 cochain document must be an array");
    Cochain<R> c = Cochain<R>::zero(base, rank, 1, bound);
    for (const auto& e : j) {
        const ExpSeq alpha = seq_from_json(e.at("alpha"));
        if (alpha.degree() > bound)
            throw BoundError("cochain entry at " + alpha.to_string() + " exceeds bound " +
                             std::to_string(bound));
        c.set_matrix(alpha, matrix_from_json(base, e.at("matrix"), rank, rank));
    }
    c.prune();
    return c;
}

// ---------------------------------------------------------- deformations --

template <class R>
json deformation_to_json(const Deformation<R>& d) {
    json coeffs = json::array();
    for (const auto& c : d.coeffs) coeffs.push_back(cochain1_to_json(c));
    return json{{"kind", "deformation"},
                {"action", action_to_json(d.base)},
                {"order", d.order},
                {"coeffs", coeffs}};
}

template <class R>
Deformation<R> deformation_from_json(const R& base, const json& j,
                                     const std::filesystem::path& dir) {
    if (!j.is_object() || !j.contains("action") || !j.contains("order") || !j.contains("coeffs"))
        throw ParseError("deformation document needs action, order and coeffs");
    Deformation<R> d;
    d.base = action_from_json(base, resolve_ref(j.at("action"), dir), dir);
    d.order = j.at("order").get<int>();
    if (d.order < 0) throw ParseError("order must be non-negative");
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != d.order)
        throw MismatchError("deformation needs exactly one coefficient per order");
    for (const auto& c : coeffs)
        d.coeffs.push_back(cochain1_from_json(base, c, d.base.ring.rank, d.base.bound));
    return d;
}

// --------------------------------------------------------- automorphisms --

template <class R>
json automorphism_to_json(const Automorphism<R>& p) {
    json coeffs = json::array();
    for (const auto& m : p.coeffs) coeffs.push_back(matrix_to_json(m));
    return json{{"kind", "automorphism"},
                {"ring", ring_to_json(p.ring)},
                {"order", p.order},
                {"coeffs", coeffs}};
}

template <class R>
Automorphism<R> automorphism_from_json(const R& base, const json& j,
                                       const std::filesystem::path& dir) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("order") || !j.contains("coeffs"))
        throw ParseError("automorphism document needs ring, order and coeffs");
    Automorphism<R> p;
    p.ring = ring_from_json(base, resolve_ref(j.at("ring"), dir));
    p.order = j.at("order").get<int>();
    if (p.order < 0) throw ParseError("order must be non-negative");
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != p.order)
        throw MismatchError("automorphism needs exactly one coefficient per order");
    for (const auto& m : coeffs)
        p.coeffs.push_back(matrix_from_json(base, m, p.ring.rank, p.ring.rank));
    return p;
}

// ------------------------------------------------------ constant tables --

json structure_table_to_json(const StructureTable& t);
StructureTable structure_table_from_json(const json& j);

}  // namespace lnd
