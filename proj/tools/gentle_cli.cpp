// Command-line front end: validate, threads, ag, surface, gldim,
// injdim, gp, resolve, pd-table, check, gen, opposite.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gentle/generator.hpp"
#include "gentle/homdim.hpp"
#include "gentle/io.hpp"
#include "gentle/oracle.hpp"
#include "gentle/strings.hpp"
#include "gentle/surface.hpp"
#include "gentle/threads.hpp"

using namespace gentle;
using nlohmann::json;

namespace {

int load_or_fail(const std::string& path, std::optional<GentlePresentation>& out) {
    ParseResult res = parse_presentation_file(path);
    if (!res.ok()) {
        for (const auto& d : res.diagnostics) {
            std::cerr << path;
            if (d.line) std::cerr << ":" << d.line;
            std::cerr << ": " << (d.kind == Diagnostic::Kind::Parse ? "error" : "not gentle")
                      << ": " << d.message << "\n";
        }
        return res.exit_code();
    }
    out = std::move(res.presentation);
    return 0;
}

json dim_j(Dim d) {
    return d.is_infinite() ? json{{"value", "infinity"}} : json{{"value", d.value()}};
}

json thread_j(const GentlePresentation& A, const Thread& t) {
    json j;
    j["trivial"] = t.is_trivial();
    j["length"] = t.length();
    if (t.is_trivial())
        j["vertex"] = A.vertex_name(t.trivial_at);
    else {
        json arrows = json::array();
        for (ArrowId a : t.arrows) arrows.push_back(A.arrow_name(a));
        j["arrows"] = arrows;
    }
    return j;
}

json ladder_j(const GentlePresentation& A, const ResolutionLadder& l) {
    json j;
    json degs = json::array();
    for (const auto& deg : l.degrees) {
        json d = json::array();
        for (VertexId v : deg) d.push_back(A.vertex_name(v));
        degs.push_back(d);
    }
    j["degrees"] = degs;
    j["terminates"] = l.terminates;
    if (l.period) {
        json per = json::array();
        for (const auto& deg : *l.period) {
            json d = json::array();
            for (VertexId v : deg) d.push_back(A.vertex_name(v));
            per.push_back(d);
        }
        j["period"] = per;
        j["period_starts_at"] = l.first_period_degree;
    }
    return j;
}

std::string degrees_str(const GentlePresentation& A, const std::vector<VertexId>& deg) {
    std::string s = "{";
    for (std::size_t i = 0; i < deg.size(); ++i)
        s += (i ? "," : "") + A.vertex_name(deg[i]);
    return s + "}";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gentle algebra toolkit: threads, surfaces, homological dimensions"};
    app.require_subcommand(1);
    bool json_out = false;

    std::string file;
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "presentation file")->required();
        sub->add_flag("--json", json_out, "machine readable output");
    };

    auto* c_validate = app.add_subcommand("validate", "check gentleness");
    add_file(c_validate);
    auto* c_threads = app.add_subcommand("threads", "permitted and forbidden threads");
    add_file(c_threads);
    auto* c_ag = app.add_subcommand("ag", "AG-invariant");
    add_file(c_ag);
    auto* c_surface = app.add_subcommand("surface", "combinatorial surface model");
    add_file(c_surface);
    auto* c_gldim = app.add_subcommand("gldim", "global dimension");
    add_file(c_gldim);
    auto* c_injdim = app.add_subcommand("injdim", "self-injective dimension");
    add_file(c_injdim);
    auto* c_gp = app.add_subcommand("gp", "Gorenstein-projective modules");
    add_file(c_gp);
    auto* c_opposite = app.add_subcommand("opposite", "opposite presentation");
    add_file(c_opposite);
    auto* c_pdtable = app.add_subcommand("pd-table", "projective dimensions of all simples and injectives");
    add_file(c_pdtable);

    auto* c_resolve = app.add_subcommand("resolve", "minimal projective resolution");
    add_file(c_resolve);
    std::string simple_v, injective_v;
    unsigned max_terms = 32;
    c_resolve->add_option("--simple", simple_v, "resolve the simple at this vertex");
    c_resolve->add_option("--injective", injective_v, "resolve the injective at this vertex");
    c_resolve->add_option("--max-terms", max_terms, "maximum ladder length");

    auto* c_check = app.add_subcommand("check", "cross-check against the linear-algebra oracle");
    add_file(c_check);
    unsigned field = 2;
    std::string cap_arg = "auto";
    c_check->add_option("--field", field, "prime field (2 or 3)")->check(CLI::IsMember({2u, 3u}));
    c_check->add_option("--cap", cap_arg, "syzygy cap: auto or a number");

    auto* c_gen = app.add_subcommand("gen", "random gentle presentation");
    GeneratorConfig cfg;
    std::string out_path;
    c_gen->add_option("--vertices", cfg.vertex_count, "vertex count")->required();
    c_gen->add_option("--seed", cfg.seed, "64-bit seed")->required();
    c_gen->add_option("--arrows", cfg.target_arrow_count, "target arrow count (0 = auto)");
    c_gen->add_flag("--no-full-cycles{false}", cfg.allow_full_cycles,
                    "reject draws with full-relation cycles");
    c_gen->add_option("--out", out_path, "write to this file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_gen->parsed()) {
            GentlePresentation A = gen_gentle(cfg);
            std::string text = serialize(A);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out_path);
                f << text;
            }
            return 0;
        }

        std::optional<GentlePresentation> loaded;
        if (int rc = load_or_fail(file, loaded); rc != 0) {
            if (c_validate->parsed()) return rc;
            return rc;
        }
        const GentlePresentation& A = *loaded;

        if (c_validate->parsed()) {
            if (json_out) {
                json j;
                j["valid"] = true;
                j["vertices"] = A.vertex_count();
                j["arrows"] = A.arrow_count();
                j["relations"] = A.relations().size();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "gentle: " << A.vertex_count() << " vertices, " << A.arrow_count()
                          << " arrows, " << A.relations().size() << " relations\n";
            }
        } else if (c_threads->parsed()) {
            ThreadSet ts = all_threads(A);
            if (json_out) {
                json j;
                for (const auto& t : ts.permitted) j["permitted"].push_back(thread_j(A, t));
                j["forbidden_finite"] = json::array();
                for (const auto& t : ts.forbidden_finite)
                    j["forbidden_finite"].push_back(thread_j(A, t));
                j["infinite_cycles"] = json::array();
                for (const auto& c : ts.infinite_cycles) {
                    json cyc = json::array();
                    for (ArrowId a : c) cyc.push_back(A.arrow_name(a));
                    j["infinite_cycles"].push_back(cyc);
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "permitted threads (" << ts.permitted.size() << "):\n";
                for (const auto& t : ts.permitted) std::cout << "  " << t.str(A) << "\n";
                std::cout << "forbidden threads, finite (" << ts.forbidden_finite.size()
                          << "):\n";
                for (const auto& t : ts.forbidden_finite) std::cout << "  " << t.str(A) << "\n";
                std::cout << "full-relation cycles (" << ts.infinite_cycles.size() << "):\n";
                for (const auto& c : ts.infinite_cycles) {
                    std::cout << " ";
                    for (ArrowId a : c) std::cout << " " << A.arrow_name(a);
                    std::cout << "\n";
                }
            }
        } else if (c_ag->parsed()) {
            AGInvariant phi = ag_invariant(A);
            if (json_out) {
                std::cout << ag_json(phi) << "\n";
            } else {
                std::cout << "AG-invariant phi_A = " << phi.str() << "\n";
            }
        } else if (c_surface->parsed()) {
            SurfaceModel sm = surface_model(A);
            SurfaceStats st = surface_stats(A);
            if (json_out) {
                json j;
                j["boundary_components"] = json::array();
                for (const auto& bc : sm.boundary_components) {
                    json b;
                    b["marked_points"] = bc.marked_point_count;
                    b["unmarked"] = bc.unmarked;
                    b["polygons"] = json::array();
                    for (std::size_t pi : bc.polygon_indices) {
                        const auto& poly = sm.polygons[pi];
                        json pj;
                        pj["c"] = poly.c_number.is_infinite() ? json("infinity")
                                                              : json(poly.c_number.value());
                        pj["arcs"] = json::array();
                        for (VertexId v : poly.arc_sides) pj["arcs"].push_back(A.vertex_name(v));
                        b["polygons"].push_back(pj);
                    }
                    j["boundary_components"].push_back(b);
                }
                j["marked_total"] = st.marked_total;
                j["arc_count"] = st.arc_count;
                j["polygon_count"] = st.polygon_count;
                j["genus"] = st.genus;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "surface: " << st.boundary_count << " boundary component(s), "
                          << st.marked_total << " marked point(s), " << st.arc_count
                          << " arc(s), " << st.polygon_count << " polygon(s), genus "
                          << st.genus << "\n";
                for (const auto& bc : sm.boundary_components) {
                    std::cout << "  component " << bc.id << (bc.unmarked ? " (unmarked)" : "")
                              << ": m = " << bc.marked_point_count << ", polygons:";
                    for (std::size_t pi : bc.polygon_indices) {
                        const auto& poly = sm.polygons[pi];
                        std::cout << " {";
                        for (std::size_t k = 0; k < poly.arc_sides.size(); ++k)
                            std::cout << (k ? "," : "") << A.vertex_name(poly.arc_sides[k]);
                        std::cout << "}";
                    }
                    std::cout << "\n";
                }
            }
        } else if (c_gldim->parsed()) {
            Dim d = gldim_via_polygons(A);
            if (json_out)
                std::cout << dim_j(d).dump() << "\n";
            else if (d.is_infinite())
                std::cout << "infinity\n";
            else
                std::cout << d.value() << "\n";
        } else if (c_injdim->parsed()) {
            Dim d = injdim(A);
            if (json_out)
                std::cout << dim_j(d).dump() << "\n";
            else if (d.is_infinite())
                std::cout << "infinity\n";
            else
                std::cout << d.value() << "\n";
        } else if (c_gp->parsed()) {
            GorensteinReport gp = gorenstein_projectives(A);
            if (json_out) {
                json j;
                j["projectives"] = json::array();
                for (VertexId v : gp.projectives) j["projectives"].push_back(A.vertex_name(v));
                j["nonprojectives"] = json::array();
                for (const auto& w : gp.nonprojectives)
                    j["nonprojectives"].push_back(w.str(A));
                j["count_by_formula"] = gp.count_by_formula;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << gp.projectives.size() << " indecomposable projectives, "
                          << gp.nonprojectives.size()
                          << " non-projective Gorenstein projectives (formula: "
                          << gp.count_by_formula << ")\n";
                for (const auto& w : gp.nonprojectives) std::cout << "  " << w.str(A) << "\n";
            }
        } else if (c_opposite->parsed()) {
            std::cout << serialize(opposite(A));
        } else if (c_pdtable->parsed()) {
            json js, ji;
            Dim gd(0), id(0);
            for (std::size_t vi = 0; vi < A.vertex_count(); ++vi) {
                const VertexId v = static_cast<VertexId>(vi);
                const Dim ps = pd_simple(A, v);
                const Dim pi = pd_injective(A, v);
                gd = max(gd, ps);
                id = max(id, pi);
                if (json_out) {
                    js[A.vertex_name(v)] = dim_j(ps);
                    ji[A.vertex_name(v)] = dim_j(pi);
                } else {
                    std::cout << "proj.dim S(" << A.vertex_name(v) << ") = " << ps.str()
                              << "\tproj.dim I(" << A.vertex_name(v) << ") = " << pi.str()
                              << "\n";
                }
            }
            if (json_out) {
                json j;
                j["pd_simple"] = js;
                j["pd_injective"] = ji;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "gl.dim = " << gd.str() << ", inj.dim = " << id.str() << "\n";
            }
        } else if (c_resolve->parsed()) {
            if (simple_v.empty() == injective_v.empty()) {
                std::cerr << "resolve: need exactly one of --simple or --injective\n";
                return 1;
            }
            const std::string& name = simple_v.empty() ? injective_v : simple_v;
            auto v = A.vertex_index(name);
            if (!v) {
                std::cerr << "unknown vertex '" << name << "'\n";
                return 1;
            }
            ResolutionLadder l = simple_v.empty() ? resolution_of_injective(A, *v, max_terms)
                                                  : resolution_of_simple(A, *v, max_terms);
            if (json_out) {
                std::cout << ladder_j(A, l).dump() << "\n";
            } else {
                for (std::size_t k = 0; k < l.degrees.size(); ++k)
                    std::cout << "P_" << k << " = " << degrees_str(A, l.degrees[k]) << "\n";
                if (l.terminates)
                    std::cout << "terminates: proj.dim = "
                              << (l.degrees.empty() ? 0 : l.degrees.size() - 1) << "\n";
                else if (l.period) {
                    std::cout << "infinite with period (from degree " << l.first_period_degree
                              << "):";
                    for (const auto& deg : *l.period) std::cout << " " << degrees_str(A, deg);
                    std::cout << "\n";
                } else
                    std::cout << "truncated at " << max_terms << " terms\n";
            }
        } else if (c_check->parsed()) {
            std::uint32_t cap = 0;
            if (cap_arg != "auto") cap = static_cast<std::uint32_t>(std::stoul(cap_arg));
            OracleReport report = check_equalities(A, static_cast<int>(field), cap);
            bool ok = report.all_agree();
            if (json_out) {
                json j;
                j["checks"] = json::array();
                for (const auto& c : report.checks)
                    j["checks"].push_back({{"name", c.name},
                                           {"combinatorial", c.combinatorial},
                                           {"oracle", c.oracle},
                                           {"agree", c.agree}});
                j["all_agree"] = ok;
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& c : report.checks)
                    if (!c.agree)
                        std::cout << "MISMATCH " << c.name << ": " << c.combinatorial
                                  << " vs oracle " << c.oracle << "\n";
                std::cout << (ok ? "all checks agree" : "oracle found disagreements") << " ("
                          << report.checks.size() << " checks, field F_" << field << ")\n";
            }
            return ok ? 0 : 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
