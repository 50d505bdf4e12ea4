#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrmc/matrix_code.hpp"
#include "qrmc/qpolymatroid.hpp"
#include "qrmc/vector_code.hpp"
#include "qrmc/weights.hpp"

/// JSON document formats.
///
/// Matrix-code file:  {kind: "matrix", field: {p, e, modulus}, n, m,
///                     generators: [n x m integer matrices]}
/// Vector-code file:  {kind: "vector", tower: {base, ext}, n,
///                     generators: [length-n integer vectors]}
/// Rank-table file:   {field: {p, e, modulus}, ground_dim,
///                     entries: [{basis, num, den}]} sorted by canonical key
/// Weight profile:    {a: [...], cs: [...], method: "anticode"|"rank-function"}
///
/// The modulus lists polynomial coefficients in ascending degree and may be
/// omitted on input when a default exists for (p, e). Re-serialization is
/// canonical: generators become the reduced-row-echelon basis and output is
/// byte-stable across runs.
namespace qrmc::io {

using json = nlohmann::ordered_json;

/// A parsed code file: exactly one of the two members is set.
struct LoadedCode {
    std::optional<MatrixCode> matrix;
    std::optional<VectorCode> vector;
    std::vector<std::string> notices;

    bool is_vector() const noexcept { return vector.has_value(); }
};

namespace detail {

inline const json& require_key(const json& j, const char* key,
                               const std::string& what) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(what + " is missing the \"" + key + "\" key");
    return *it;
}

inline long require_int(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(what + " must be an integer");
    return j.get<long>();
}

inline void require_object(const json& j, const std::string& what) {
    if (!j.is_object())
        throw std::invalid_argument(what + " must be a JSON object");
}

inline void require_array(const json& j, const std::string& what) {
    if (!j.is_array())
        throw std::invalid_argument(what + " must be a JSON array");
}

/// Range check with a human-readable location, 1-based indices.
inline long checked_entry(const json& j, const Field& f, const std::string& where) {
    const long v = require_int(j, where + ": entry");
    if (v < 0 || v >= f.size())
        throw std::invalid_argument(where + ": entry " + std::to_string(v) +
                                    " is out of range for " + f.name() +
                                    " (values 0.." + std::to_string(f.size() - 1) +
                                    ")");
    return v;
}

}  // namespace detail

inline json field_to_json(const Field& f) {
    json j;
    j["p"] = f.characteristic();
    j["e"] = f.degree();
    j["modulus"] = f.modulus();
    return j;
}

inline FieldPtr field_from_json(const json& j, const std::string& what = "field") {
    detail::require_object(j, what);
    const long p = detail::require_int(detail::require_key(j, "p", what), what + ".p");
    const long e = detail::require_int(detail::require_key(j, "e", what), what + ".e");
    if (e < 1 || e > 64)
        throw std::invalid_argument(what + ".e must be in 1..64");
    std::optional<std::vector<int>> modulus;
    if (auto it = j.find("modulus"); it != j.end()) {
        detail::require_array(*it, what + ".modulus");
        std::vector<int> coeffs;
        for (const json& c : *it)
            coeffs.push_back(static_cast<int>(
                detail::require_int(c, what + ".modulus coefficient")));
        modulus = std::move(coeffs);
    }
    try {
        return Field::create(p, static_cast<int>(e), std::move(modulus));
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument(what + ": " + err.what());
    }
}

inline json tower_to_json(const ExtensionTower& t) {
    json j;
    j["base"] = field_to_json(*t.base());
    j["ext"] = field_to_json(*t.ext());
    return j;
}

inline TowerPtr tower_from_json(const json& j) {
    detail::require_object(j, "tower");
    FieldPtr base = field_from_json(detail::require_key(j, "base", "tower"),
                                    "tower.base");
    FieldPtr ext = field_from_json(detail::require_key(j, "ext", "tower"),
                                   "tower.ext");
    try {
        return ExtensionTower::make(std::move(base), std::move(ext));
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument(std::string("tower: ") + err.what());
    }
}

/// Canonical matrix-code document: generators are the RREF basis.
inline json matrix_code_to_json(const MatrixCode& c) {
    json j;
    j["kind"] = "matrix";
    j["field"] = field_to_json(*c.field());
    j["n"] = c.n();
    j["m"] = c.m();
    json gens = json::array();
    for (int i = 0; i < c.dim(); ++i) {
        const Matrix g = c.generator(i);
        json rows = json::array();
        for (int r = 0; r < g.rows(); ++r) {
            json row = json::array();
            for (int col = 0; col < g.cols(); ++col) row.push_back(g.at(r, col));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    j["generators"] = std::move(gens);
    return j;
}

/// Canonical vector-code document: generators are the RREF basis over the
/// extension field.
inline json vector_code_to_json(const VectorCode& c) {
    json j;
    j["kind"] = "vector";
    j["tower"] = tower_to_json(*c.tower());
    j["n"] = c.n();
    json gens = json::array();
    for (int i = 0; i < c.k(); ++i) {
        json row = json::array();
        for (int col = 0; col < c.n(); ++col) row.push_back(c.gen().at(i, col));
        gens.push_back(std::move(row));
    }
    j["generators"] = std::move(gens);
    return j;
}

inline json code_to_json(const LoadedCode& code) {
    return code.is_vector() ? vector_code_to_json(*code.vector)
                            : matrix_code_to_json(*code.matrix);
}

inline LoadedCode parse_code_file(const json& j) {
    detail::require_object(j, "code file");
    const json& kind = detail::require_key(j, "kind", "code file");
    if (!kind.is_string())
        throw std::invalid_argument("code file \"kind\" must be a string");
    const std::string k = kind.get<std::string>();
    LoadedCode out;

    if (k == "matrix") {
        FieldPtr f = field_from_json(detail::require_key(j, "field", "code file"));
        long n = detail::require_int(detail::require_key(j, "n", "code file"), "n");
        long m = detail::require_int(detail::require_key(j, "m", "code file"), "m");
        if (n < 1 || m < 1)
            throw std::invalid_argument("matrix shape must be at least 1x1");
        const json& gens = detail::require_key(j, "generators", "code file");
        detail::require_array(gens, "generators");
        const bool flip = n > m;
        if (flip) {
            out.notices.push_back("input shape " + std::to_string(n) + "x" +
                                  std::to_string(m) + " transposed to canonical " +
                                  std::to_string(m) + "x" + std::to_string(n) +
                                  " orientation");
            std::swap(n, m);
        }
        std::vector<Matrix> mats;
        int gi = 0;
        for (const json& g : gens) {
            ++gi;
            const std::string gwhere = "generator " + std::to_string(gi);
            detail::require_array(g, gwhere);
            const long rows_in = flip ? m : n;
            const long cols_in = flip ? n : m;
            if (static_cast<long>(g.size()) != rows_in)
                throw std::invalid_argument(gwhere + " must have " +
                                            std::to_string(rows_in) + " rows");
            Matrix mat(f, static_cast<int>(n), static_cast<int>(m));
            for (long r = 0; r < rows_in; ++r) {
                const json& row = g[static_cast<std::size_t>(r)];
                detail::require_array(row, gwhere + ", row " + std::to_string(r + 1));
                if (static_cast<long>(row.size()) != cols_in)
                    throw std::invalid_argument(gwhere + ", row " +
                                                std::to_string(r + 1) + " must have " +
                                                std::to_string(cols_in) + " entries");
                for (long c = 0; c < cols_in; ++c) {
                    const long v = detail::checked_entry(
                        row[static_cast<std::size_t>(c)], *f,
                        gwhere + ", row " + std::to_string(r + 1) + ", column " +
                            std::to_string(c + 1));
                    if (flip)
                        mat.set(static_cast<int>(c), static_cast<int>(r), v);
                    else
                        mat.set(static_cast<int>(r), static_cast<int>(c), v);
                }
            }
            mats.push_back(std::move(mat));
        }
        MatrixCode code = MatrixCode::from_generators(f, static_cast<int>(n),
                                                      static_cast<int>(m), mats);
        if (code.dim() < static_cast<int>(mats.size()))
            out.notices.push_back("generators are dependent: " +
                                  std::to_string(mats.size()) + " given, dimension " +
                                  std::to_string(code.dim()));
        out.matrix = std::move(code);
        return out;
    }

    if (k == "vector") {
        TowerPtr t = tower_from_json(detail::require_key(j, "tower", "code file"));
        long n = detail::require_int(detail::require_key(j, "n", "code file"), "n");
        if (n < 1) throw std::invalid_argument("vector length must be at least 1");
        const json& gens = detail::require_key(j, "generators", "code file");
        detail::require_array(gens, "generators");
        Matrix g(t->ext(), static_cast<int>(gens.size()), static_cast<int>(n));
        int gi = 0;
        for (const json& row : gens) {
            ++gi;
            const std::string gwhere = "generator " + std::to_string(gi);
            detail::require_array(row, gwhere);
            if (static_cast<long>(row.size()) != n)
                throw std::invalid_argument(gwhere + " must have " +
                                            std::to_string(n) + " entries");
            for (long c = 0; c < n; ++c)
                g.set(gi - 1, static_cast<int>(c),
                      detail::checked_entry(row[static_cast<std::size_t>(c)],
                                            *t->ext(),
                                            gwhere + ", column " +
                                                std::to_string(c + 1)));
        }
        VectorCode code = VectorCode::from_generators(t, static_cast<int>(n), g);
        if (code.k() < static_cast<int>(gens.size()))
            out.notices.push_back("generators are dependent: " +
                                  std::to_string(gens.size()) + " given, dimension " +
                                  std::to_string(code.k()));
        out.vector = std::move(code);
        return out;
    }

    throw std::invalid_argument("code file \"kind\" must be \"matrix\" or \"vector\"");
}

/// Rank-table document; entries follow the canonical subspace-key order,
/// which is exactly the lattice enumeration order.
inline json table_to_json(const QPolymatroid& p) {
    json j;
    j["field"] = field_to_json(*p.field());
    j["ground_dim"] = p.ground_dim();
    json entries = json::array();
    for (int i = 0; i < p.lattice()->size(); ++i) {
        const Subspace& s = p.lattice()->spaces()[static_cast<std::size_t>(i)];
        json basis = json::array();
        for (int r = 0; r < s.dim(); ++r) {
            json row = json::array();
            for (int c = 0; c < s.ambient(); ++c) row.push_back(s.basis().at(r, c));
            basis.push_back(std::move(row));
        }
        const Rat& v = p.value_at(static_cast<std::size_t>(i));
        json e;
        e["basis"] = std::move(basis);
        e["num"] = v.numerator();
        e["den"] = v.denominator();
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline QPolymatroid table_from_json(const json& j,
                                    unsigned long long guard = guards::subspaces) {
    detail::require_object(j, "rank-table file");
    FieldPtr f = field_from_json(detail::require_key(j, "field", "rank-table file"));
    const long n = detail::require_int(
        detail::require_key(j, "ground_dim", "rank-table file"), "ground_dim");
    if (n < 1) throw std::invalid_argument("ground_dim must be at least 1");
    LatticePtr lat = SubspaceLattice::get(f, static_cast<int>(n), guard);
    const json& entries = detail::require_key(j, "entries", "rank-table file");
    detail::require_array(entries, "entries");
    if (static_cast<long>(entries.size()) != lat->size())
        throw std::invalid_argument(
            "rank-table file must list every subspace of F_" +
            std::to_string(f->size()) + "^" + std::to_string(n) + " exactly once (" +
            std::to_string(lat->size()) + " entries, got " +
            std::to_string(entries.size()) + ")");
    std::vector<Rat> vals(static_cast<std::size_t>(lat->size()));
    std::vector<bool> seen(static_cast<std::size_t>(lat->size()), false);
    int ei = 0;
    for (const json& e : entries) {
        ++ei;
        const std::string where = "entry " + std::to_string(ei);
        detail::require_object(e, where);
        const json& basis = detail::require_key(e, "basis", where);
        detail::require_array(basis, where + ".basis");
        std::vector<std::vector<long>> rows;
        for (const json& row : basis) {
            detail::require_array(row, where + ".basis row");
            if (static_cast<long>(row.size()) != n)
                throw std::invalid_argument(where + ".basis rows must have " +
                                            std::to_string(n) + " entries");
            std::vector<long> r;
            for (const json& v : row)
                r.push_back(detail::checked_entry(v, *f, where + ".basis"));
            rows.push_back(std::move(r));
        }
        Subspace s = rows.empty()
                         ? Subspace::zero(f, static_cast<int>(n))
                         : Subspace::span(Matrix::from_rows(f, rows));
        if (s.dim() < static_cast<int>(rows.size()))
            throw std::invalid_argument(where + ": basis rows are dependent");
        const int idx = lat->index_of(s);
        if (seen[static_cast<std::size_t>(idx)])
            throw std::invalid_argument(where + ": subspace " + repr(s) +
                                        " appears twice");
        seen[static_cast<std::size_t>(idx)] = true;
        const long long num =
            detail::require_int(detail::require_key(e, "num", where), where + ".num");
        const long long den =
            detail::require_int(detail::require_key(e, "den", where), where + ".den");
        if (den <= 0)
            throw std::invalid_argument(where + ".den must be positive");
        vals[static_cast<std::size_t>(idx)] = Rat(num, den);
    }
    return QPolymatroid(std::move(lat), std::move(vals));
}

inline json profile_to_json(const WeightProfile& p) {
    json j;
    j["a"] = p.a;
    if (p.cs) j["cs"] = *p.cs;
    j["method"] = p.method;
    return j;
}

/// Canonical text form: two-space indent, trailing newline. Byte-stable.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(path + ": " + err.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::invalid_argument("failed writing " + path);
}

inline LoadedCode load_code_file(const std::string& path) {
    return parse_code_file(read_json_file(path));
}

}  // namespace qrmc::io
