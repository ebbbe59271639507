#include "tifs/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tifs/canonical.hpp"
#include "tifs/construct.hpp"
#include "tifs/enumerate.hpp"
#include "tifs/forbidden.hpp"
#include "tifs/graph_io.hpp"
#include "tifs/ray_io.hpp"
#include "tifs/realize.hpp"
#include "tifs/solver.hpp"

namespace tifs {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << fallback.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Output {
    std::ostream* stream;
    std::ofstream file;

    Output(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            stream = &fallback;
        } else {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
            stream = &file;
        }
    }
    std::ostream& os() { return *stream; }
};

json certificate_json(const Graph& g, int d, const Classification& cls) {
    json j;
    j["graph"] = to_graph6(g);
    j["d"] = d;
    j["kind"] = kind_name(cls.kind);
    j["a"] = cls.a;
    j["b_or_c"] = cls.b_or_c;
    if (cls.witness_sat) {
        auto w = json::array();
        for (bool b : cls.witness_sat->to_bools()) w.push_back(b);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["raw_step2_verdict"] = cls.raw_step2_verdict;
    j["exhaustive"] = true;
    return j;
}

json designated_json(const DesignatedGraph& dg) {
    Classification cls;
    cls.kind = dg.kind;
    cls.a = dg.a;
    cls.b_or_c = dg.b_or_c;
    PartialAssignment fixed;
    fixed.with_true(dg.a);
    cls.witness_sat = find_assignment(dg.graph, dg.d, fixed);
    cls.raw_step2_verdict = true;
    json j = certificate_json(dg.graph, dg.d, cls);
    if (!dg.states.empty() || dg.d >= 3) j["states"] = states_to_string(dg.states);
    auto labels = json::array();
    for (int v = 0; v < dg.graph.size(); ++v) labels.push_back(dg.graph.label(v));
    j["labels"] = std::move(labels);
    return j;
}

std::vector<Graph> graphs_from_text(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '{')
            out.push_back(from_json(line));
        else
            out.push_back(from_graph6(line));
    }
    if (out.empty()) throw std::runtime_error("no graphs in input");
    return out;
}

void emit_graph(std::ostream& os, const Graph& g, const std::string& format, std::optional<int> d) {
    if (format == "graph6") {
        os << to_graph6(g) << '\n';
    } else if (format == "json") {
        os << to_json(g) << '\n';
    } else if (format == "dot") {
        os << to_dot(g, d);
    } else {
        throw std::runtime_error("unknown emit format '" + format + "'");
    }
}

bool parse_shard(const std::string& text, int& index, int& count) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return false;
    try {
        index = std::stoi(text.substr(0, slash));
        count = std::stoi(text.substr(slash + 1));
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out_stream, std::ostream& err) {
    CLI::App app{"search and verification toolkit for minimal true-implies-false and true-implies-true "
                 "proposition sets"};
    app.set_config("--config");
    app.require_subcommand(1);

    // ---- enumerate ----------------------------------------------------
    auto* cmd_enum = app.add_subcommand("enumerate", "emit one representative per isomorphism class of "
                                                     "filtered exclusivity graphs");
    int en_n = 8, en_d = 3, en_workers = 1;
    bool en_all = false;
    std::string en_emit = "graph6", en_out, en_shard, en_checkpoint;
    cmd_enum->add_option("--n", en_n, "vertex count")->required();
    cmd_enum->add_option("--d", en_d, "dimension (filter strength)");
    cmd_enum->add_flag("--all", en_all, "disable all filters (every nonisomorphic graph)");
    cmd_enum->add_option("--emit", en_emit, "graph6, json, or dot");
    cmd_enum->add_option("--out", en_out, "output path (default stdout)");
    cmd_enum->add_option("--workers", en_workers, "parallel shards");
    cmd_enum->add_option("--shard", en_shard, "run a single shard, as i/k");
    cmd_enum->add_option("--checkpoint", en_checkpoint, "append-only shard checkpoint file");

    // ---- search --------------------------------------------------------
    auto* cmd_search = app.add_subcommand("search", "first-hit minimal TIFS search over increasing n");
    int se_d = 3, se_nmax = 8, se_workers = 1;
    double se_budget = 0.0;
    std::string se_out;
    cmd_search->add_option("--d", se_d, "dimension")->required();
    cmd_search->add_option("--n-max", se_nmax, "largest vertex count to try")->required();
    cmd_search->add_option("--workers", se_workers, "parallel shards");
    cmd_search->add_option("--budget", se_budget, "time budget in seconds (0 = none)");
    cmd_search->add_option("--out", se_out, "output path");

    // ---- classify ------------------------------------------------------
    auto* cmd_classify = app.add_subcommand("classify", "TIFS/TITS/true-iff-true verdicts for input graphs");
    int cl_d = 3;
    std::string cl_in, cl_out;
    std::vector<std::string> cl_graphs;
    cmd_classify->add_option("--d", cl_d, "dimension")->required();
    cmd_classify->add_option("--in", cl_in, "input path with graph6 or json lines (default stdin)");
    cmd_classify->add_option("graphs", cl_graphs, "graph6 strings");
    cmd_classify->add_option("--out", cl_out, "output path");

    // ---- construct -----------------------------------------------------
    auto* cmd_construct = app.add_subcommand("construct", "closed-form minimal TIFS/TITS constructions");
    auto* cmd_ctifs = cmd_construct->add_subcommand("tifs", "minimal TIFS for a state multiset");
    auto* cmd_ctits = cmd_construct->add_subcommand("tits", "minimal TITS built from the all-BOTH TIFS");
    cmd_construct->require_subcommand(1);
    int co_d = 3;
    bool co_enumerate = false;
    double co_epsilon = 0.1;
    std::string co_states, co_emit = "json", co_out;
    for (auto* sub : {cmd_ctifs, cmd_ctits}) {
        sub->add_option("--d", co_d, "dimension")->required();
        sub->add_option("--states", co_states, "comma-separated clique vertex states, e.g. A,B,BOTH");
        sub->add_flag("--enumerate", co_enumerate, "emit the whole family for this dimension");
        sub->add_option("--emit", co_emit, "graph6, json, dot, rays, or realization (tifs only)");
        sub->add_option("--epsilon", co_epsilon, "perturbation parameter for rays/realization output");
        sub->add_option("--out", co_out, "output path");
    }

    // ---- reduce ----------------------------------------------------------
    auto* cmd_reduce = app.add_subcommand("reduce", "remove C and the common neighbours of A and C from a "
                                                    "TITS, yielding its contained TIFS");
    std::string re_in, re_out, re_graph;
    int re_a = -1, re_c = -1, re_d = 3;
    cmd_reduce->add_option("--in", re_in, "TITS certificate json (default stdin)");
    cmd_reduce->add_option("--graph", re_graph, "graph6 string (with --a/--c/--d)");
    cmd_reduce->add_option("--a", re_a, "designated true vertex");
    cmd_reduce->add_option("--c", re_c, "designated forced-true vertex");
    cmd_reduce->add_option("--d", re_d, "dimension of the input TITS");
    cmd_reduce->add_option("--out", re_out, "output path");

    // ---- count -----------------------------------------------------------
    auto* cmd_count = app.add_subcommand("count", "closed-form counts of the minimal families");
    int cn_d = 3, cn_dmax = 0;
    std::string cn_out;
    cmd_count->add_option("--d", cn_d, "dimension")->required();
    cmd_count->add_option("--d-max", cn_dmax, "print a table for d..d-max");
    cmd_count->add_option("--out", cn_out, "output path");

    // ---- verify-realization ----------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify-realization", "check rays against a graph");
    std::string vr_graph, vr_rays, vr_out;
    double vr_tol = 1e-12;
    cmd_verify->add_option("--graph", vr_graph, "graph6 string")->required();
    cmd_verify->add_option("--rays", vr_rays, "rays file, one vector per line (default stdin)");
    cmd_verify->add_option("--tolerance", vr_tol, "orthogonality tolerance");
    cmd_verify->add_option("--out", vr_out, "output path");

    // ---- realize-search ----------------------------------------------------
    auto* cmd_rsearch = app.add_subcommand("realize-search", "heuristic numeric orthogonal-representation "
                                                             "search (evidence, not proof)");
    std::string rs_graph, rs_out;
    int rs_d = 3, rs_restarts = 50, rs_iterations = 1500;
    std::uint64_t rs_seed = 1;
    cmd_rsearch->add_option("--graph", rs_graph, "graph6 string")->required();
    cmd_rsearch->add_option("--d", rs_d, "dimension")->required();
    cmd_rsearch->add_option("--restarts", rs_restarts, "random restarts");
    cmd_rsearch->add_option("--iterations", rs_iterations, "descent iterations per restart");
    cmd_rsearch->add_option("--seed", rs_seed, "master random seed");
    cmd_rsearch->add_option("--out", rs_out, "output path");

    // ---- min-angle-search ---------------------------------------------------
    auto* cmd_mangle = app.add_subcommand("min-angle-search", "smallest A-B angle over faithful bug "
                                                              "realizations (empirical)");
    int ma_trials = 200, ma_iterations = 300;
    std::uint64_t ma_seed = 1;
    std::string ma_out;
    cmd_mangle->add_option("--trials", ma_trials, "multi-start trials");
    cmd_mangle->add_option("--iterations", ma_iterations, "ascent iterations per trial");
    cmd_mangle->add_option("--seed", ma_seed, "master random seed");
    cmd_mangle->add_option("--out", ma_out, "output path");

    // ---- angle -----------------------------------------------------------
    auto* cmd_angle = app.add_subcommand("angle", "ray angle between two vectors of a rays file");
    std::string an_rays, an_out;
    int an_a = 0, an_b = 1;
    cmd_angle->add_option("--rays", an_rays, "rays file (default stdin)");
    cmd_angle->add_option("--a", an_a, "first vertex")->required();
    cmd_angle->add_option("--b", an_b, "second vertex")->required();
    cmd_angle->add_option("--out", an_out, "output path");

    // ---- rays-to-graph ------------------------------------------------------
    auto* cmd_rays = app.add_subcommand("rays-to-graph", "orthogonality graph of a ray list");
    std::string rg_rays, rg_emit = "graph6", rg_out;
    double rg_tol = 1e-9;
    int rg_d = 0;
    cmd_rays->add_option("--rays", rg_rays, "rays file (default stdin)");
    cmd_rays->add_option("--tolerance", rg_tol, "orthogonality tolerance");
    cmd_rays->add_option("--emit", rg_emit, "graph6, json, or dot");
    cmd_rays->add_option("--d", rg_d, "context size for dot output");
    cmd_rays->add_option("--out", rg_out, "output path");

    // ---- export ----------------------------------------------------------
    auto* cmd_export = app.add_subcommand("export", "convert between graph formats");
    std::string ex_in, ex_from = "graph6", ex_emit = "json", ex_out;
    int ex_d = 0;
    cmd_export->add_option("--in", ex_in, "input path (default stdin)");
    cmd_export->add_option("--from", ex_from, "input format: graph6, json, or dot");
    cmd_export->add_option("--emit", ex_emit, "output format: graph6, json, or dot");
    cmd_export->add_option("--d", ex_d, "context size for dot output");
    cmd_export->add_option("--out", ex_out, "output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        err << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << "run with --help for usage" << '\n';
        return 2;
    }

    try {
        if (*cmd_enum) {
            Output out(en_out, out_stream);
            std::vector<Graph> graphs;
            int shard_index = 0, shard_count = 1;
            if (!en_shard.empty()) {
                if (!parse_shard(en_shard, shard_index, shard_count))
                    throw std::invalid_argument("--shard expects i/k");
                SearchSpec spec;
                spec.n = en_n;
                spec.d = en_d;
                spec.apply_filters = !en_all;
                spec.shard_index = shard_index;
                spec.shard_count = shard_count;
                graphs = generate_all(spec);
            } else {
                graphs = generate_parallel(en_n, en_d, !en_all, en_workers, en_checkpoint);
            }
            for (const Graph& g : graphs)
                emit_graph(out.os(), g, en_emit, en_all ? std::nullopt : std::optional<int>(en_d));
            err << "enumerate: n=" << en_n << " d=" << en_d << (en_all ? " (unfiltered)" : "") << " -> "
                << graphs.size() << " graphs\n";
            return 0;
        }

        if (*cmd_search) {
            Output out(se_out, out_stream);
            SearchReport report = search_minimal_tifs(se_d, se_nmax, se_workers, se_budget);
            json j;
            j["d"] = report.d;
            j["n_max"] = report.n_max;
            j["first_hit_n"] = report.first_hit_n;
            j["graphs_emitted"] = report.graphs_emitted;
            json per_n = json::object();
            for (auto [n, count] : report.emitted_per_n) per_n[std::to_string(n)] = count;
            j["emitted_per_n"] = std::move(per_n);
            j["distinct_graphs"] = report.distinct_graphs;
            j["incomplete"] = report.incomplete;
            auto cert_to_json = [](const TifsCertificate& cert) {
                Classification cls;
                cls.kind = Kind::TIFS;
                cls.a = cert.a;
                cls.b_or_c = cert.b;
                cls.witness_sat = cert.witness;
                cls.raw_step2_verdict = cert.raw_step2_verdict;
                json c = certificate_json(cert.graph, cert.d, cls);
                switch (cert.realizability) {
                    case RealizabilityCheck::FamilyMatch: c["realizability"] = "family_match"; break;
                    case RealizabilityCheck::NumericWitness: c["realizability"] = "numeric_witness"; break;
                    case RealizabilityCheck::Unconfirmed: c["realizability"] = "unconfirmed"; break;
                }
                return c;
            };
            auto certs = json::array();
            for (const auto& cert : report.tifs_found) certs.push_back(cert_to_json(cert));
            j["tifs"] = std::move(certs);
            auto rejected = json::array();
            for (const auto& cert : report.unconfirmed) rejected.push_back(cert_to_json(cert));
            j["unconfirmed"] = std::move(rejected);
            out.os() << j.dump() << '\n';
            err << "search: d=" << se_d << " first hit n=" << report.first_hit_n << " with "
                << report.tifs_found.size() << " designated certificates (" << report.distinct_graphs
                << " graphs), " << report.unconfirmed.size() << " unconfirmed, " << report.seconds << " s\n";
            return report.incomplete ? 1 : 0;
        }

        if (*cmd_classify) {
            Output out(cl_out, out_stream);
            std::vector<Graph> graphs;
            if (!cl_graphs.empty())
                for (const auto& text : cl_graphs) graphs.push_back(from_graph6(text));
            else
                graphs = graphs_from_text(read_input(cl_in, std::cin));
            for (const Graph& g : graphs) {
                json j;
                j["graph"] = to_graph6(g);
                j["d"] = cl_d;
                auto certs = json::array();
                for (const auto& cls : classify_all_pairs(g, cl_d)) certs.push_back(certificate_json(g, cl_d, cls));
                j["certificates"] = std::move(certs);
                out.os() << j.dump() << '\n';
            }
            return 0;
        }

        if (*cmd_construct) {
            Output out(co_out, out_stream);
            std::vector<DesignatedGraph> built;
            if (co_enumerate) {
                built = enumerate_minimal_tifs(co_d);
            } else {
                built.push_back(minimal_tifs(co_d, states_from_string(co_states)));
            }
            if (*cmd_ctits) {
                std::vector<DesignatedGraph> tits;
                for (auto& t : built) tits.push_back(tits_from_tifs(t));
                built = std::move(tits);
            }
            for (const auto& dg : built) {
                if (co_emit == "rays" || co_emit == "realization") {
                    if (*cmd_ctits)
                        throw std::invalid_argument("rays output covers the TIFS constructions only");
                    Realization r = build_minimal_tifs_realization(dg.d, dg.states, co_epsilon);
                    if (co_emit == "rays")
                        out.os() << format_rays(r.vectors);
                    else
                        out.os() << realization_to_json(r) << '\n';
                } else if (co_emit == "json") {
                    out.os() << designated_json(dg).dump() << '\n';
                } else {
                    emit_graph(out.os(), dg.graph, co_emit, dg.d);
                }
            }
            err << "construct: d=" << co_d << " -> " << built.size() << (*cmd_ctits ? " TITS" : " TIFS")
                << " graph(s)\n";
            return 0;
        }

        if (*cmd_reduce) {
            Output out(re_out, out_stream);
            DesignatedGraph input;
            if (!re_graph.empty()) {
                if (re_a < 0 || re_c < 0) throw std::invalid_argument("--graph requires --a and --c");
                input = DesignatedGraph{from_graph6(re_graph), re_a, re_c, Kind::TITS, re_d, {}};
            } else {
                json j = json::parse(read_input(re_in, std::cin));
                input = DesignatedGraph{from_graph6(j.at("graph").get<std::string>()), j.at("a").get<int>(),
                                        j.at("b_or_c").get<int>(), Kind::TITS, j.at("d").get<int>(), {}};
            }
            auto results = tifs_from_tits(input);
            for (const auto& dg : results) out.os() << designated_json(dg).dump() << '\n';
            err << "reduce: " << results.size() << " TIFS graph(s) with " << results.front().graph.size()
                << " vertices\n";
            return 0;
        }

        if (*cmd_count) {
            Output out(cn_out, out_stream);
            int hi = cn_dmax > 0 ? cn_dmax : cn_d;
            for (int d = cn_d; d <= hi; ++d) {
                json j;
                j["d"] = d;
                j["minimal_tifs"] = count_minimal_tifs(d);
                j["state_multisets"] = count_state_multisets(d);
                j["tifs_vertices"] = d + 5;
                j["tits_vertices"] = d + 7;
                out.os() << j.dump() << '\n';
            }
            return 0;
        }

        if (*cmd_verify) {
            Output out(vr_out, out_stream);
            Graph g = from_graph6(vr_graph);
            auto rays = parse_rays(read_input(vr_rays, std::cin));
            Realization r;
            r.d = static_cast<int>(rays.front().size());
            r.vectors = rays;
            r.tolerance = vr_tol;
            auto report = verify(r, g);
            json j;
            j["pass"] = report.pass;
            j["max_edge_residual"] = report.max_edge_residual;
            j["min_nonedge_overlap"] = report.min_nonedge_overlap;
            j["max_unit_deviation"] = report.max_unit_deviation;
            j["tolerance"] = vr_tol;
            auto detail = json::array();
            for (const auto& p : report.detail)
                detail.push_back({{"u", p.u}, {"v", p.v}, {"edge", p.edge}, {"abs_dot", p.abs_dot}});
            j["pairs"] = std::move(detail);
            out.os() << j.dump() << '\n';
            err << "verify-realization: " << (report.pass ? "pass" : "FAIL")
                << " (max edge residual " << report.max_edge_residual << ", min non-edge overlap "
                << report.min_nonedge_overlap << ")\n";
            return report.pass ? 0 : 1;
        }

        if (*cmd_rsearch) {
            Output out(rs_out, out_stream);
            Graph g = from_graph6(rs_graph);
            auto result = numeric_realization_search(g, rs_d, rs_restarts, rs_seed, rs_iterations);
            json j;
            j["residual"] = result.residual;
            j["realization"] = json::parse(realization_to_json(result.realization));
            out.os() << j.dump() << '\n';
            err << "realize-search: residual " << result.residual << '\n';
            return 0;
        }

        if (*cmd_mangle) {
            Output out(ma_out, out_stream);
            auto result = min_angle_search(ma_trials, ma_iterations, ma_seed);
            json j;
            j["angle"] = result.angle;
            j["realization"] = json::parse(realization_to_json(result.realization));
            out.os() << j.dump() << '\n';
            err << "min-angle-search: " << result.angle << " rad\n";
            return 0;
        }

        if (*cmd_angle) {
            Output out(an_out, out_stream);
            auto rays = parse_rays(read_input(an_rays, std::cin));
            Realization r;
            r.d = static_cast<int>(rays.front().size());
            r.vectors = rays;
            if (an_a < 0 || an_b < 0 || an_a >= static_cast<int>(rays.size()) ||
                an_b >= static_cast<int>(rays.size()))
                throw std::invalid_argument("angle: vertex out of range");
            out.os() << std::setprecision(17) << angle_between(r, an_a, an_b) << '\n';
            return 0;
        }

        if (*cmd_rays) {
            Output out(rg_out, out_stream);
            auto rays = parse_rays(read_input(rg_rays, std::cin));
            Graph g = graph_from_rays(rays, rg_tol);
            emit_graph(out.os(), g, rg_emit, rg_d > 0 ? std::optional<int>(rg_d) : std::nullopt);
            err << "rays-to-graph: " << g.size() << " vertices, " << g.edge_count() << " edges\n";
            return 0;
        }

        if (*cmd_export) {
            Output out(ex_out, out_stream);
            std::string text = read_input(ex_in, std::cin);
            GraphFormat from = format_from_name(ex_from);
            if (from == GraphFormat::Graph6) {
                for (const Graph& g : graphs_from_text(text))
                    emit_graph(out.os(), g, ex_emit, ex_d > 0 ? std::optional<int>(ex_d) : std::nullopt);
            } else {
                Graph g = parse(text, from);
                emit_graph(out.os(), g, ex_emit, ex_d > 0 ? std::optional<int>(ex_d) : std::nullopt);
            }
            return 0;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no command given; run with --help\n";
    return 2;
}

}  // namespace tifs
