// ncx: command-line front end for N-complex computations.

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncx/io.hpp"
#include "ncx/selftest.hpp"

using namespace ncx;

namespace {

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 42;
    std::size_t cases = 200;
    std::string field = "q";
    int N = 3;
};

// Prefixes parser locations with the file path.
template <typename F>
auto load(const std::string& path, F parse) {
    Json j = read_json_file(path);
    try {
        return parse(j);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw Error(ErrorKind::ParseError, path + ": " + e.what());
        throw;
    }
}

NComplex load_complex(const std::string& path) {
    NComplex x = load(path, [](const Json& j) { return ncomplex_from_json(j); });
    require_valid(x);
    return x;
}

ChainMap load_map(const std::string& path) {
    ChainMap f = load(path, [](const Json& j) { return chainmap_from_json(j); });
    require_valid(f.source());
    require_valid(f.target());
    require_valid_map(f);
    return f;
}

// Text output: arrays of flat objects become aligned tables, everything else "key: value".
void render_text(const Json& j, std::ostream& out, int indent = 0);

bool flat_row(const Json& j) {
    if (!j.is_object()) return false;
    for (const auto& v : j) {
        if (v.is_structured()) return false;
    }
    return true;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_table(const Json& rows, std::ostream& out, int indent) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& k : keys) {
        std::size_t w = k.size();
        for (const auto& row : rows) w = std::max(w, row.contains(k) ? scalar_text(row[k]).size() : 0);
        width.push_back(w);
    }
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    out << pad;
    for (std::size_t c = 0; c < keys.size(); ++c) out << std::setw(static_cast<int>(width[c]) + 2) << keys[c];
    out << "\n";
    for (const auto& row : rows) {
        out << pad;
        for (std::size_t c = 0; c < keys.size(); ++c) out << std::setw(static_cast<int>(width[c]) + 2) << (row.contains(keys[c]) ? scalar_text(row[keys[c]]) : "");
        out << "\n";
    }
}

void render_text(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), flat_row)) {
        render_table(j, out, indent);
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                render_text(v, out, indent + 2);
                out << pad << "--\n";
            } else {
                out << pad << scalar_text(v) << "\n";
            }
        }
    } else if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured()) {
                out << pad << k << ":\n";
                render_text(v, out, indent + 2);
            } else {
                out << pad << k << ": " << scalar_text(v) << "\n";
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

void emit(const Json& j, const Globals& g) {
    if (g.format == "text") {
        render_text(j, std::cout);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

Json map_error_json(const std::optional<MapError>& e) {
    if (!e) return nullptr;
    return Json{{"kind", std::string(to_string(e->kind))}, {"degree", e->degree}, {"message", e->message}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ncx: homological algebra of N-complexes over Q and F_p"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--cases", g.cases, "number of random cases");
    app.add_option("--field", g.field, "q or fp:<p>");
    app.add_option("--N", g.N, "N (for mu, smcatcp2, generate)")->check(CLI::Range(2, 64));

    std::string file, file2, kind = "sigma-le", u_file, only;
    int r = 1, s = 0, t = 0, l = 1, m = 1, n = 0, degree = 0, i = 0, j_opt = 0;
    std::size_t dim = 1, max_dim = 4;
    int window = 8;
    bool has_j = false;

    auto* validate_cmd = app.add_subcommand("validate", "check d^N = 0 and shapes");
    validate_cmd->add_option("file", file)->required();
    auto* homology_cmd = app.add_subcommand("homology", "table of nonzero H^i_(r)");
    homology_cmd->add_option("file", file)->required();
    auto* cone_cmd = app.add_subcommand("cone", "mapping cone of a chain map");
    cone_cmd->add_option("file", file)->required();
    auto* suspend_cmd = app.add_subcommand("suspend", "suspension");
    suspend_cmd->add_option("file", file)->required();
    auto* cosuspend_cmd = app.add_subcommand("cosuspend", "cosuspension");
    cosuspend_cmd->add_option("file", file)->required();
    auto* pcover_cmd = app.add_subcommand("pcover", "projective cover P(X)");
    pcover_cmd->add_option("file", file)->required();
    auto* ihull_cmd = app.add_subcommand("ihull", "injective hull I(X)");
    ihull_cmd->add_option("file", file)->required();
    auto* shift_cmd = app.add_subcommand("shift", "degree shift Theta^t");
    shift_cmd->add_option("file", file)->required();
    shift_cmd->add_option("--t", t)->required();
    auto* mu_cmd = app.add_subcommand("mu", "mu_r^s k^dim");
    mu_cmd->add_option("--r", r)->required();
    mu_cmd->add_option("--s", s)->required();
    mu_cmd->add_option("--dim", dim);
    auto* nullhomotopy_cmd = app.add_subcommand("nullhomotopy", "null-homotopy witness for a chain map");
    nullhomotopy_cmd->add_option("file", file)->required();
    auto* homdim_cmd = app.add_subcommand("homdim", "dim Hom in C_N and K_N");
    homdim_cmd->add_option("source", file)->required();
    homdim_cmd->add_option("target", file2)->required();
    auto* qis_cmd = app.add_subcommand("qis", "quasi-isomorphism test");
    qis_cmd->add_option("file", file)->required();
    auto* les_single_cmd = app.add_subcommand("les-single", "long exact sequence of one complex");
    les_single_cmd->add_option("file", file)->required();
    les_single_cmd->add_option("--l", l)->required();
    les_single_cmd->add_option("--m", m)->required();
    auto* les_ses_cmd = app.add_subcommand("les-ses", "long exact sequence of a short exact sequence");
    les_ses_cmd->add_option("file", file)->required();
    auto* elementary_cmd = app.add_subcommand("elementary", "elementary morphism p(u,i)");
    elementary_cmd->add_option("file", file)->required();
    elementary_cmd->add_option("--u", u_file, "matrix file (rows = dim X^i)")->required();
    elementary_cmd->add_option("--degree", degree)->required();
    auto* square_cmd = app.add_subcommand("exact-square-check", "commutative, exact and pull-back tests");
    square_cmd->add_option("file", file)->required();
    auto* truncate_cmd = app.add_subcommand("truncate", "sigma or tau truncation");
    truncate_cmd->add_option("file", file)->required();
    truncate_cmd->add_option("--n", n)->required();
    truncate_cmd->add_option("--kind", kind)->check(CLI::IsMember({"sigma-le", "sigma-ge", "tau-le", "tau-ge"}));
    auto* mor_cmd = app.add_subcommand("mor", "MorObjects of a complex");
    mor_cmd->add_option("file", file)->required();
    mor_cmd->add_option("--j", j_opt, "single index instead of the full window");
    auto* nhn_cmd = app.add_subcommand("nhn", "homK(mu_r^{i+r-1}k, X) against H^i_(r)(X)");
    nhn_cmd->add_option("file", file)->required();
    auto* smcatcp2_cmd = app.add_subcommand("smcatcp2", "suspension identities for k^c in degree 0");
    smcatcp2_cmd->add_option("--i", i)->required();
    smcatcp2_cmd->add_option("--dim", dim);
    auto* selftest_cmd = app.add_subcommand("selftest", "randomized acceptance suite");
    selftest_cmd->add_option("--only", only, "single criterion id");
    auto* generate_cmd = app.add_subcommand("generate", "random complex with known mu-decomposition");
    generate_cmd->add_option("--max-dim", max_dim);
    generate_cmd->add_option("--window", window)->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    has_j = mor_cmd->count("--j") > 0;

    try {
        const Field field = field_from_flag(g.field);
        if (*validate_cmd) {
            NComplex x = load(file, [](const Json& j) { return ncomplex_from_json(j); });
            auto err = validate(x);
            Json out{{"valid", !err}};
            if (err) out["error"] = Json{{"kind", std::string(to_string(err->kind))}, {"degree", err->degree}, {"message", err->message}};
            emit(out, g);
            return err ? 1 : 0;
        }
        if (*homology_cmd) {
            emit(to_json(homology_table(load_complex(file))), g);
        } else if (*cone_cmd) {
            Triangle tr = cone(load_map(file));
            emit(to_json(BlockComplex{tr.c, tr.blocks}), g);
        } else if (*suspend_cmd) {
            emit(to_json(suspend(load_complex(file))), g);
        } else if (*cosuspend_cmd) {
            emit(to_json(cosuspend(load_complex(file))), g);
        } else if (*pcover_cmd) {
            emit(to_json(pcover_complex(load_complex(file))), g);
        } else if (*ihull_cmd) {
            emit(to_json(ihull_complex(load_complex(file))), g);
        } else if (*shift_cmd) {
            emit(to_json(theta_shift(load_complex(file), t)), g);
        } else if (*mu_cmd) {
            if (r < 1 || r > g.N) throw Error(ErrorKind::InvalidAmplitude, "--r must lie in 1..N");
            emit(to_json(mu(g.N, r, s, dim, field)), g);
        } else if (*nullhomotopy_cmd) {
            ChainMap f = load_map(file);
            auto w = null_homotopy_witness(f);
            Json out{{"null_homotopic", w.has_value()}};
            if (w) out["witness"] = to_json(*w, f.source().field());
            emit(out, g);
        } else if (*homdim_cmd) {
            NComplex x = load_complex(file);
            NComplex y = load_complex(file2);
            if (x.N() != y.N() || x.field() != y.field()) throw Error(ErrorKind::FieldMismatch, "complexes differ in N or field");
            const std::size_t c = chainmap_space_dim(x, y);
            const std::size_t h = homotopy_image_dim(x, y);
            emit(Json{{"hom_C", c}, {"null_homotopic", h}, {"hom_K", c - h}}, g);
        } else if (*qis_cmd) {
            ChainMap f = load_map(file);
            emit(Json{{"qis", is_qis(f)}, {"acyclic_cone", acyclic(cone(f).c)}, {"qis_via_mor", qis_via_mor(f)}}, g);
        } else if (*les_single_cmd) {
            emit(to_json(les_single(load_complex(file), l, m)), g);
        } else if (*les_ses_cmd) {
            ShortExactSeq ses = load(file, [](const Json& j) { return ses_from_json(j); });
            if (auto e = check_exact(ses)) {
                emit(Json{{"exact", false}, {"error", map_error_json(e)}}, g);
                return 1;
            }
            emit(to_json(les_ses_check(ses)), g);
        } else if (*elementary_cmd) {
            NComplex x = load_complex(file);
            Matrix u = load(u_file, [&](const Json& j) {
                const std::size_t cols = j.is_array() && !j.empty() && j[0].is_array() ? j[0].size() : 0;
                return matrix_from_json(j, x.field(), x.dim(degree), cols, "$");
            });
            ElementaryMorphism e = elementary(x, u, degree);
            Elmap02Report rep = verify_elmap02(x, u, degree);
            emit(Json{{"complex", to_json(e.complex)},
                      {"p", to_json(e.p)},
                      {"qis", rep.qis},
                      {"squares_exact", rep.squares_exact},
                      {"composite_exact", rep.composite_exact},
                      {"all_pullbacks", rep.all_pullbacks},
                      {"equivalent", rep.equivalent}},
                 g);
        } else if (*square_cmd) {
            ExactSquare sq = load(file, [](const Json& j) { return square_from_json(j); });
            const bool exact = is_exact_square(sq);
            emit(Json{{"commutative", true}, {"exact", exact}, {"pullback", is_pullback_square(sq)}}, g);
        } else if (*truncate_cmd) {
            NComplex x = load_complex(file);
            NComplex y = kind == "sigma-le" ? sigma_le(x, n) : kind == "sigma-ge" ? sigma_ge(x, n) : kind == "tau-le" ? tau_le(x, n) : tau_ge(x, n);
            emit(to_json(y), g);
        } else if (*mor_cmd) {
            NComplex x = load_complex(file);
            Json out = Json::array();
            auto [jlo, jhi] = x.is_zero() ? std::make_pair(0, -1) : mor_window(x.N(), x.lo(), x.hi());
            if (has_j) jlo = jhi = j_opt;
            for (int j = jlo; j <= jhi; ++j) {
                MorObject mo = mor_homology(x, j);
                if (has_j || !mo.is_zero()) out.push_back(Json{{"j", j}, {"mor", to_json(mo)}});
            }
            emit(out, g);
        } else if (*nhn_cmd) {
            NComplex x = load_complex(file);
            Json out = Json::array();
            for (int d = x.is_zero() ? 0 : x.lo(); !x.is_zero() && d <= x.hi(); ++d) {
                for (int a = 1; a < x.N(); ++a) {
                    NhnResult res = nhn_check(x, d, a);
                    out.push_back(Json{{"degree", d}, {"amplitude", a}, {"hom_K", res.hom_dim}, {"homology", res.homology_dim}, {"equal", res.equal()}});
                }
            }
            emit(out, g);
        } else if (*smcatcp2_cmd) {
            Smcatcp2Report rep = smcatcp2_check(dim, g.N, i, field);
            Json items = Json::array();
            for (const auto& it : rep.items) {
                items.push_back(Json{{"statement", it.statement}, {"r", it.r}, {"theta", it.theta}, {"printed", it.printed}, {"negated", it.negated}});
            }
            emit(Json{{"N", rep.N}, {"i", rep.i}, {"printed_holds", rep.printed_holds()}, {"negated_holds", rep.negated_holds()}, {"items", items}}, g);
        } else if (*selftest_cmd) {
            SelftestOptions o{g.seed, g.cases};
            std::vector<CriterionResult> results;
            if (only.empty()) {
                results = run_all_criteria(o);
            } else {
                results.push_back(run_criterion(only, o));
            }
            bool all = true;
            Json out = Json::array();
            for (const auto& res : results) {
                all = all && res.passed();
                if (g.format == "text") std::cout << format_result(res) << "\n";
                out.push_back(Json{{"id", res.id}, {"title", res.title}, {"passed", res.passed()}, {"cases", res.cases}, {"checks", res.checks},
                                   {"failures", res.failures}, {"detail", res.detail}});
            }
            if (g.format != "text") std::cout << out.dump(2) << "\n";
            return all ? 0 : 1;
        } else if (*generate_cmd) {
            Rng rng(g.seed);
            GeneratorParams p;
            p.N = g.N;
            p.field = field;
            p.max_dim = max_dim;
            p.window = window;
            GeneratedComplex gen = generate_random(p, rng);
            Json out = to_json(gen.complex);
            out["mu_blocks"] = to_json(gen.blocks);
            emit(out, g);
        }
    } catch (const Error& e) {
        std::cerr << "ncx: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "ncx: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
