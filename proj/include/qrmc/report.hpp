#pragma once

#include "qrmc/io.hpp"

/// Report assembly: a deterministic JSON document whose every number equals
/// the corresponding library call on the parsed code, plus a plain-text
/// rendering of the same document.
namespace qrmc::io {

/// Effective limits for every guarded scan, adjustable from the command line.
struct GuardSet {
    unsigned long long subspaces = guards::subspaces;
    unsigned long long codewords = guards::codewords;
    unsigned long long ambient = guards::ambient_words;
    unsigned long long pairs = guards::map_pairs;

    static GuardSet uniform(unsigned long long n) { return {n, n, n, n}; }
    /// Effectively unlimited; counters saturate well below this.
    static GuardSet unlimited() {
        const unsigned long long inf = count_cap;
        return {inf, inf, inf, inf};
    }
};

struct ReportOptions {
    bool weights = true;
    bool tables = false;
    bool duality = false;
    bool axioms = false;
};

namespace detail {

inline json axiom_report_to_json(const AxiomReport& rep) {
    json j;
    j["ok"] = rep.ok;
    if (!rep.ok) {
        j["axiom"] = rep.axiom;
        json witness = json::array();
        if (rep.a) witness.push_back(repr(*rep.a));
        if (rep.b) witness.push_back(repr(*rep.b));
        j["witness"] = std::move(witness);
        j["detail"] = rep.detail;
    }
    return j;
}

}  // namespace detail

inline json run_report(const LoadedCode& input, const ReportOptions& opt,
                       const GuardSet& g = GuardSet{}) {
    json r;
    r["kind"] = "report";
    std::vector<std::string> notices = input.notices;

    std::optional<MatrixCode> expanded;
    if (input.is_vector()) {
        const VectorCode& v = *input.vector;
        json vs;
        vs["tower"] = tower_to_json(*v.tower());
        vs["n"] = v.n();
        vs["k"] = v.k();
        r["vector"] = std::move(vs);
        expanded = gamma_expand(v);
        notices.push_back(
            "matrix sections describe the expansion under the default power basis");
    }
    const MatrixCode& c = input.is_vector() ? *expanded : *input.matrix;

    r["field"] = field_to_json(*c.field());
    r["n"] = c.n();
    r["m"] = c.m();
    r["dim"] = c.dim();
    if (c.dim() > 0) {
        r["d"] = min_distance(c, g.codewords);
        r["mrd"] = is_mrd(c, g.codewords);
    } else {
        notices.push_back("zero code: minimum distance undefined");
    }
    r["maxrk"] = maxrk(c, g.codewords);
    r["optimal_anticode"] = is_optimal_anticode(c, g.codewords);

    if (opt.weights) {
        if (c.dim() == 0)
            throw std::invalid_argument(
                "weights requested: minimum distance undefined for the zero code");
        WeightProfile wp = gen_weights_anticode(c, g.subspaces);
        wp.cs = support_weights(c, g.subspaces);
        r["weights"] = profile_to_json(wp);
    }

    const bool square = c.n() == c.m();
    if (opt.tables || opt.duality || opt.axioms) {
        QPolymatroid col = build_qpm(c, Side::column, g.subspaces);
        std::optional<QPolymatroid> row;
        if (square) row = build_qpm(c, Side::row, g.subspaces);
        if (opt.tables) {
            json t;
            t["column"] = table_to_json(col);
            if (row) t["row"] = table_to_json(*row);
            r["tables"] = std::move(t);
        }
        if (opt.duality) {
            const MatrixCode cd = dual(c);
            json d = json::array();
            const bool col_ok =
                qpm_equal(qpm_dual(col), build_qpm(cd, Side::column, g.subspaces));
            d.push_back(std::string("P(C,c)* = P(C\xE2\x8A\xA5,c): ") +
                        (col_ok ? "verified" : "FAILED"));
            if (row) {
                const bool row_ok =
                    qpm_equal(qpm_dual(*row), build_qpm(cd, Side::row, g.subspaces));
                d.push_back(std::string("P(C,r)* = P(C\xE2\x8A\xA5,r): ") +
                            (row_ok ? "verified" : "FAILED"));
            }
            r["duality"] = std::move(d);
        }
        if (opt.axioms) {
            json a;
            a["column"] = detail::axiom_report_to_json(check_axioms(col));
            if (row) a["row"] = detail::axiom_report_to_json(check_axioms(*row));
            r["axioms"] = std::move(a);
        }
    }

    r["notices"] = notices;
    return r;
}

/// Plain-text rendering of a report document. Line order is fixed.
inline std::string render_report(const json& r) {
    std::ostringstream out;
    const auto field = r["field"];
    out << "code over F_" << field["p"].get<long>();
    if (field["e"].get<int>() > 1) out << "^" << field["e"].get<int>();
    if (r.contains("vector")) {
        const auto& v = r["vector"];
        out << ", vector length " << v["n"].get<int>() << ", dimension "
            << v["k"].get<int>() << " over the degree-"
            << v["tower"]["ext"]["e"].get<int>() << " extension\n";
    } else {
        out << "\n";
    }
    out << "shape " << r["n"].get<int>() << "x" << r["m"].get<int>() << ", dim "
        << r["dim"].get<int>() << "\n";
    if (r.contains("d")) {
        out << "minimum rank distance d = " << r["d"].get<int>() << "\n";
        out << "MRD: " << (r["mrd"].get<bool>() ? "true" : "false") << "\n";
    }
    out << "maxrk = " << r["maxrk"].get<int>() << "\n";
    out << "optimal anticode: "
        << (r["optimal_anticode"].get<bool>() ? "true" : "false") << "\n";
    if (r.contains("weights")) {
        const auto& w = r["weights"];
        out << "generalized weights a = (";
        for (std::size_t i = 0; i < w["a"].size(); ++i)
            out << (i ? ", " : "") << w["a"][i].get<int>();
        out << ")\n";
        if (w.contains("cs")) {
            out << "support weights cs = (";
            for (std::size_t i = 0; i < w["cs"].size(); ++i)
                out << (i ? ", " : "") << w["cs"][i].get<int>();
            out << ")\n";
        }
    }
    if (r.contains("tables")) {
        out << "rank tables: column";
        if (r["tables"].contains("row")) out << ", row";
        out << " (" << r["tables"]["column"]["entries"].size() << " subspaces)\n";
    }
    if (r.contains("duality"))
        for (const auto& line : r["duality"])
            out << line.get<std::string>() << "\n";
    if (r.contains("axioms")) {
        for (const char* side : {"column", "row"}) {
            if (!r["axioms"].contains(side)) continue;
            const auto& a = r["axioms"][side];
            out << side << " table axioms: "
                << (a["ok"].get<bool>() ? "ok" : ("FAILED " + a["detail"].get<std::string>()))
                << "\n";
        }
    }
    for (const auto& nmsg : r["notices"])
        out << "note: " << nmsg.get<std::string>() << "\n";
    return out.str();
}

}  // namespace qrmc::io
