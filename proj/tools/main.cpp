#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qrmc/report.hpp"

using namespace qrmc;
using io::json;

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < m.rows(); ++r) {
        out << (r ? "; " : "");
        for (int c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m.at(r, c);
    }
    out << "]";
    return out.str();
}

MatrixCode as_matrix_code(const io::LoadedCode& code, std::vector<std::string>& notices) {
    if (!code.is_vector()) return *code.matrix;
    notices.push_back("vector code expanded under the default power basis");
    return gamma_expand(*code.vector);
}

void print_notices(const std::vector<std::string>& notices) {
    for (const std::string& n : notices) std::cout << "note: " << n << "\n";
}

std::vector<long> parse_int_list(const std::string& spec, const char* what) {
    std::vector<long> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stol(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": \"" + item +
                                        "\" is not an integer");
        }
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + " must not be empty");
    return out;
}

void print_profile_line(const WeightProfile& p) {
    std::cout << "a = (";
    for (std::size_t i = 0; i < p.a.size(); ++i)
        std::cout << (i ? ", " : "") << p.a[i];
    std::cout << ") [" << p.method << "]\n";
    if (p.cs) {
        std::cout << "cs = (";
        for (std::size_t i = 0; i < p.cs->size(); ++i)
            std::cout << (i ? ", " : "") << (*p.cs)[i];
        std::cout << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric codes, their generalized weights and q-polymatroids"};
    app.require_subcommand(1);

    bool json_out = false;
    bool force = false;
    long long guard_override = -1;
    int threads = 1;
    app.add_flag("--json", json_out, "machine-readable JSON output");
    app.add_option("--guard", guard_override,
                   "replace every scan limit with this count");
    app.add_flag("--force", force, "disable all scan limits");
    app.add_option("--threads", threads,
                   "reserved; scans are single-threaded and deterministic")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;

    auto guards_now = [&]() {
        if (force) return io::GuardSet::unlimited();
        if (guard_override >= 0)
            return io::GuardSet::uniform(
                static_cast<unsigned long long>(guard_override));
        return io::GuardSet{};
    };

    // ---- report ----
    {
        auto* sub = app.add_subcommand("report", "full invariant report for a code file");
        sub->fallthrough();
        auto file = std::make_shared<std::string>();
        auto opts = std::make_shared<io::ReportOptions>();
        auto weights_flag = std::make_shared<bool>(false);
        auto no_weights_flag = std::make_shared<bool>(false);
        sub->add_option("FILE", *file, "code file")->required();
        sub->add_flag("--weights", *weights_flag, "force the weights section");
        sub->add_flag("--no-weights", *no_weights_flag, "omit the weights section");
        sub->add_flag("--tables", opts->tables, "include both rank tables");
        sub->add_flag("--duality", opts->duality, "verify the duality theorem");
        sub->add_flag("--axioms", opts->axioms, "run the axiom checks");
        sub->callback([&, file, opts, weights_flag, no_weights_flag] {
            action = [&, file, opts, weights_flag, no_weights_flag]() {
                io::LoadedCode code = io::load_code_file(*file);
                const int dim = code.is_vector()
                                    ? code.vector->k() * code.vector->tower()->m()
                                    : code.matrix->dim();
                io::ReportOptions o = *opts;
                // weights are on by default but never implicitly for the
                // zero code, whose distance is undefined
                o.weights = *weights_flag || (!*no_weights_flag && dim > 0);
                json r = io::run_report(code, o, guards_now());
                if (json_out)
                    std::cout << io::dump_canonical(r);
                else
                    std::cout << io::render_report(r);
                return 0;
            };
        });
    }

    // ---- dual ----
    {
        auto* sub = app.add_subcommand("dual", "write the dual code");
        sub->fallthrough();
        auto file = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("FILE", *file, "code file")->required();
        sub->add_option("-o,--output", *out, "output file")->required();
        sub->callback([&, file, out] {
            action = [&, file, out]() {
                io::LoadedCode code = io::load_code_file(*file);
                json doc;
                int dim = 0;
                if (code.is_vector()) {
                    VectorCode d = vdual(*code.vector);
                    dim = d.k();
                    doc = io::vector_code_to_json(d);
                } else {
                    MatrixCode d = dual(*code.matrix);
                    dim = d.dim();
                    doc = io::matrix_code_to_json(d);
                }
                io::write_text_file(*out, io::dump_canonical(doc));
                if (json_out) {
                    json r;
                    r["kind"] = "dual";
                    r["output"] = *out;
                    r["dim"] = dim;
                    r["notices"] = code.notices;
                    std::cout << io::dump_canonical(r);
                } else {
                    print_notices(code.notices);
                    std::cout << "wrote dual code (dim " << dim << ") to " << *out
                              << "\n";
                }
                return 0;
            };
        });
    }

    // ---- weights ----
    {
        auto* sub = app.add_subcommand("weights", "generalized weight profile");
        sub->fallthrough();
        auto file = std::make_shared<std::string>();
        auto method = std::make_shared<std::string>("anticode");
        auto support = std::make_shared<bool>(false);
        sub->add_option("FILE", *file, "code file")->required();
        sub->add_option("--method", *method, "anticode | rank-function | both")
            ->check(CLI::IsMember({"anticode", "rank-function", "both"}));
        sub->add_flag("--support", *support, "also compute support weights");
        sub->callback([&, file, method, support] {
            action = [&, file, method, support]() {
                io::LoadedCode code = io::load_code_file(*file);
                std::vector<std::string> notices = code.notices;
                MatrixCode c = as_matrix_code(code, notices);
                const io::GuardSet g = guards_now();
                std::optional<WeightProfile> anti, qpm;
                if (*method != "rank-function") anti = gen_weights_anticode(c, g.subspaces);
                if (*method != "anticode") qpm = gen_weights_qpm(c, g.subspaces);
                if (*support) {
                    std::vector<int> cs = support_weights(c, g.subspaces);
                    if (anti) anti->cs = cs;
                    if (qpm) qpm->cs = cs;
                }
                if (json_out) {
                    json r;
                    r["kind"] = "weights";
                    if (anti && qpm) {
                        r["anticode"] = io::profile_to_json(*anti);
                        r["rank_function"] = io::profile_to_json(*qpm);
                        r["agree"] = anti->a == qpm->a;
                    } else {
                        r["profile"] = io::profile_to_json(anti ? *anti : *qpm);
                    }
                    r["notices"] = notices;
                    std::cout << io::dump_canonical(r);
                } else {
                    print_notices(notices);
                    if (anti) print_profile_line(*anti);
                    if (qpm) print_profile_line(*qpm);
                    if (anti && qpm)
                        std::cout << "methods agree: "
                                  << (anti->a == qpm->a ? "true" : "false") << "\n";
                }
                return 0;
            };
        });
    }

    // ---- qpm ----
    {
        auto* sub = app.add_subcommand("qpm", "rank table of the code's q-polymatroid");
        sub->fallthrough();
        auto file = std::make_shared<std::string>();
        auto side = std::make_shared<std::string>();
        auto dump = std::make_shared<std::string>();
        sub->add_option("FILE", *file, "code file")->required();
        sub->add_option("--side", *side, "col | row")
            ->required()
            ->check(CLI::IsMember({"col", "row"}));
        sub->add_option("--dump", *dump, "write the full table to this file");
        sub->callback([&, file, side, dump] {
            action = [&, file, side, dump]() {
                io::LoadedCode code = io::load_code_file(*file);
                std::vector<std::string> notices = code.notices;
                MatrixCode c = as_matrix_code(code, notices);
                const io::GuardSet g = guards_now();
                const Side s = *side == "col" ? Side::column : Side::row;
                QPolymatroid p = build_qpm(c, s, g.subspaces);
                AxiomReport ax = check_axioms(p);
                json table = io::table_to_json(p);
                if (!dump->empty())
                    io::write_text_file(*dump, io::dump_canonical(table));
                if (json_out) {
                    json r;
                    r["kind"] = "qpm";
                    r["side"] = *side == "col" ? "column" : "row";
                    r["full_rank"] = to_string(p.full_rank());
                    r["q_matroid"] = is_qmatroid(p);
                    r["axioms"] = io::detail::axiom_report_to_json(ax);
                    r["table"] = std::move(table);
                    r["notices"] = notices;
                    std::cout << io::dump_canonical(r);
                } else {
                    print_notices(notices);
                    std::cout << (*side == "col" ? "column" : "row")
                              << " rank table over F_" << c.field()->size() << "^"
                              << p.ground_dim() << ": " << p.lattice()->size()
                              << " subspaces, full rank " << to_string(p.full_rank())
                              << "\n";
                    std::cout << "q-matroid: " << (is_qmatroid(p) ? "true" : "false")
                              << "\n";
                    std::cout << "axioms: " << (ax.ok ? "ok" : "FAILED " + ax.detail)
                              << "\n";
                    if (!dump->empty())
                        std::cout << "wrote table to " << *dump << "\n";
                }
                return 0;
            };
        });
    }

    // ---- qpm-check ----
    {
        auto* sub = app.add_subcommand("qpm-check", "axiom check for a rank-table file");
        sub->fallthrough();
        auto file = std::make_shared<std::string>();
        sub->add_option("TABLE", *file, "rank-table file")->required();
        sub->callback([&, file] {
            action = [&, file]() {
                QPolymatroid p = io::table_from_json(io::read_json_file(*file),
                                                     guards_now().subspaces);
                AxiomReport ax = check_axioms(p);
                if (json_out) {
                    json r;
                    r["kind"] = "qpm-check";
                    r["axioms"] = io::detail::axiom_report_to_json(ax);
                    r["q_matroid"] = ax.ok && is_qmatroid(p);
                    std::cout << io::dump_canonical(r);
                } else if (ax.ok) {
                    std::cout << "axioms: ok\n";
                    std::cout << "q-matroid: " << (is_qmatroid(p) ? "true" : "false")
                              << "\n";
                } else {
                    std::cout << "axioms: FAILED " << ax.axiom << " " << ax.detail
                              << "\n";
                }
                return 0;
            };
        });
    }

    // ---- qpm-dual ----
    {
        auto* sub = app.add_subcommand("qpm-dual", "write the dual rank table");
        sub->fallthrough();
        auto file = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("TABLE", *file, "rank-table file")->required();
        sub->add_option("-o,--output", *out, "output file")->required();
        sub->callback([&, file, out] {
            action = [&, file, out]() {
                QPolymatroid p = io::table_from_json(io::read_json_file(*file),
                                                     guards_now().subspaces);
                QPolymatroid d = qpm_dual(p);
                io::write_text_file(*out, io::dump_canonical(io::table_to_json(d)));
                if (json_out) {
                    json r;
                    r["kind"] = "qpm-dual";
                    r["output"] = *out;
                    r["full_rank"] = to_string(d.full_rank());
                    std::cout << io::dump_canonical(r);
                } else {
                    std::cout << "wrote dual table (full rank " << to_string(d.full_rank())
                              << ") to " << *out << "\n";
                }
                return 0;
            };
        });
    }

    // ---- equiv ----
    {
        auto* sub = app.add_subcommand("equiv", "search for a code equivalence");
        sub->fallthrough();
        auto f1 = std::make_shared<std::string>();
        auto f2 = std::make_shared<std::string>();
        sub->add_option("FILE1", *f1, "code file")->required();
        sub->add_option("FILE2", *f2, "code file")->required();
        sub->callback([&, f1, f2] {
            action = [&, f1, f2]() {
                io::LoadedCode in1 = io::load_code_file(*f1);
                io::LoadedCode in2 = io::load_code_file(*f2);
                std::vector<std::string> notices = in1.notices;
                notices.insert(notices.end(), in2.notices.begin(), in2.notices.end());
                MatrixCode c1 = as_matrix_code(in1, notices);
                MatrixCode c2 = as_matrix_code(in2, notices);
                const io::GuardSet g = guards_now();
                auto w = is_equivalent(c1, c2, g.pairs, g.codewords);
                if (json_out) {
                    json r;
                    r["kind"] = "equiv";
                    r["equivalent"] = w.has_value();
                    if (w) {
                        json ww;
                        ww["a"] = matrix_to_json(w->a);
                        ww["b"] = matrix_to_json(w->b);
                        ww["transposed"] = w->transposed;
                        r["witness"] = std::move(ww);
                    }
                    r["notices"] = notices;
                    std::cout << io::dump_canonical(r);
                } else {
                    print_notices(notices);
                    if (w) {
                        std::cout << "equivalent: true\n";
                        std::cout << "A = " << matrix_to_text(w->a) << "\n";
                        std::cout << "B = " << matrix_to_text(w->b) << "\n";
                        std::cout << "transposed: " << (w->transposed ? "true" : "false")
                                  << "\n";
                    } else {
                        std::cout << "equivalent: false (search exhausted)\n";
                    }
                }
                return 0;
            };
        });
    }

    // ---- pm-equiv ----
    {
        auto* sub = app.add_subcommand("pm-equiv", "search for a rank-table equivalence");
        sub->fallthrough();
        auto f1 = std::make_shared<std::string>();
        auto f2 = std::make_shared<std::string>();
        sub->add_option("TABLE1", *f1, "rank-table file")->required();
        sub->add_option("TABLE2", *f2, "rank-table file")->required();
        sub->callback([&, f1, f2] {
            action = [&, f1, f2]() {
                const io::GuardSet g = guards_now();
                QPolymatroid p1 =
                    io::table_from_json(io::read_json_file(*f1), g.subspaces);
                QPolymatroid p2 =
                    io::table_from_json(io::read_json_file(*f2), g.subspaces);
                auto phi = qpm_equivalent(p1, p2, g.pairs);
                if (json_out) {
                    json r;
                    r["kind"] = "pm-equiv";
                    r["equivalent"] = phi.has_value();
                    if (phi) r["map"] = matrix_to_json(*phi);
                    std::cout << io::dump_canonical(r);
                } else if (phi) {
                    std::cout << "equivalent: true\n";
                    std::cout << "phi = " << matrix_to_text(*phi) << "\n";
                } else {
                    std::cout << "equivalent: false (search exhausted)\n";
                }
                return 0;
            };
        });
    }

    // ---- expand ----
    {
        auto* sub = app.add_subcommand("expand", "expand a vector code to a matrix code");
        sub->fallthrough();
        auto file = std::make_shared<std::string>();
        auto basis_spec = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("VFILE", *file, "vector-code file")->required();
        sub->add_option("--basis", *basis_spec,
                        "comma-separated extension elements, e.g. 1,2,4,8")
            ->required();
        sub->add_option("-o,--output", *out, "output file")->required();
        sub->callback([&, file, basis_spec, out] {
            action = [&, file, basis_spec, out]() {
                io::LoadedCode code = io::load_code_file(*file);
                if (!code.is_vector())
                    throw std::invalid_argument("expand needs a vector-code file");
                std::vector<int32_t> elems;
                for (long v : parse_int_list(*basis_spec, "--basis"))
                    elems.push_back(static_cast<int32_t>(v));
                ExtensionBasis gamma(code.vector->tower(), std::move(elems));
                MatrixCode m = gamma_expand(*code.vector, gamma);
                io::write_text_file(*out,
                                    io::dump_canonical(io::matrix_code_to_json(m)));
                if (json_out) {
                    json r;
                    r["kind"] = "expand";
                    r["output"] = *out;
                    r["n"] = m.n();
                    r["m"] = m.m();
                    r["dim"] = m.dim();
                    std::cout << io::dump_canonical(r);
                } else {
                    print_notices(code.notices);
                    std::cout << "wrote " << m.n() << "x" << m.m()
                              << " expansion (dim " << m.dim() << ") to " << *out
                              << "\n";
                }
                return 0;
            };
        });
    }

    // ---- gabidulin ----
    {
        auto* sub = app.add_subcommand("gabidulin", "construct a Gabidulin code");
        sub->fallthrough();
        auto qspec = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        sub->add_option("--q", *qspec, "base field as P,E (prime, degree)")->required();
        sub->add_option("--n", *n, "code length; also the extension degree")->required();
        sub->add_option("--k", *k, "code dimension over the extension")->required();
        sub->add_option("-o,--output", *out, "output file");
        sub->callback([&, qspec, n, k, out] {
            action = [&, qspec, n, k, out]() {
                std::vector<long> pe = parse_int_list(*qspec, "--q");
                if (pe.size() != 2)
                    throw std::invalid_argument("--q must be P,E (prime, degree)");
                FieldPtr base = Field::create(pe[0], static_cast<int>(pe[1]));
                if (*n < 1) throw std::invalid_argument("--n must be at least 1");
                FieldPtr ext =
                    Field::create(pe[0], static_cast<int>(pe[1]) * *n);
                TowerPtr t = ExtensionTower::make(std::move(base), std::move(ext));
                VectorCode c = gabidulin(t, *n, *k);
                if (!out->empty())
                    io::write_text_file(
                        *out, io::dump_canonical(io::vector_code_to_json(c)));
                if (json_out) {
                    json r;
                    r["kind"] = "gabidulin";
                    r["n"] = *n;
                    r["k"] = *k;
                    r["d"] = *n - *k + 1;
                    r["code"] = io::vector_code_to_json(c);
                    if (!out->empty()) r["output"] = *out;
                    std::cout << io::dump_canonical(r);
                } else {
                    std::cout << "Gabidulin code: n = " << *n << ", k = " << *k
                              << ", d = " << *n - *k + 1 << " over "
                              << t->ext()->name() << "/" << t->base()->name() << "\n";
                    if (!out->empty()) std::cout << "wrote code to " << *out << "\n";
                }
                return 0;
            };
        });
    }

    // ---- covering-radius ----
    {
        auto* sub = app.add_subcommand("covering-radius",
                                       "exhaustive covering radius of a code");
        sub->fallthrough();
        auto file = std::make_shared<std::string>();
        sub->add_option("FILE", *file, "code file")->required();
        sub->callback([&, file] {
            action = [&, file]() {
                io::LoadedCode code = io::load_code_file(*file);
                std::vector<std::string> notices = code.notices;
                MatrixCode c = as_matrix_code(code, notices);
                const io::GuardSet g = guards_now();
                const int r = covering_radius(c, g.ambient, g.codewords);
                if (json_out) {
                    json doc;
                    doc["kind"] = "covering-radius";
                    doc["covering_radius"] = r;
                    doc["notices"] = notices;
                    std::cout << io::dump_canonical(doc);
                } else {
                    print_notices(notices);
                    std::cout << "covering radius = " << r << "\n";
                }
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        return action ? action() : 1;
    } catch (const guard_exceeded& e) {
        std::cerr << "guard refusal: " << e.what()
                  << "; rerun with --guard or --force\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
