#include "commands.hpp"

#include "manifest.hpp"
#include "semilinear/coloring.hpp"
#include "semilinear/errors.hpp"
#include "semilinear/normalize.hpp"
#include "semilinear/ramsey.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace cli {

namespace fs = std::filesystem;
using semilinear::Json;

namespace {

std::string fixed(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << v;
    return s.str();
}

std::string girth_text(const semilinear::AdjacencyGraph& g) {
    const auto girth = semilinear::girth(g);
    return girth ? std::to_string(*girth) : "inf";
}

Manifest base_manifest(const std::string& command, const Context& ctx) {
    Manifest m;
    m.command = command;
    m.args = ctx.args;
    m.seed = ctx.seed;
    m.schedule = nullptr;
    m.inputs = Json::object();
    m.artifacts = Json::object();
    return m;
}

void record(Manifest& m, const Context& ctx, const std::string& name) {
    m.artifacts[name] = sha256_file(ctx.out / name);
}

void record_input(Manifest& m, const std::string& path) {
    if (!path.empty()) m.inputs[path] = sha256_file(path);
}

semilinear::IncidenceGraph incidence_input(const GenOptions& opt) {
    if (!opt.in.empty()) return semilinear::incidence_from_json(read_json(opt.in));
    return semilinear::bcstt_construction(opt.k);
}

std::string params_text(const GenOptions& opt) {
    std::ostringstream s;
    if (opt.family == "shift") s << "m=" << opt.m << ";k=" << opt.k;
    if (opt.family == "fw") s << "p=" << opt.p << ";m=" << opt.m;
    if (opt.family == "bcstt") s << "k=" << opt.k;
    if (opt.family == "girth") s << "m=" << opt.m << ";g=" << opt.g;
    if (opt.family == "superline" || opt.family == "boxes3d") {
        s << (opt.in.empty() ? "k=" + std::to_string(opt.k) : "in=" + fs::path(opt.in).filename().string());
    }
    return s.str();
}

struct Loaded {
    semilinear::GraphFormat format;
    Json doc;
};

Loaded load(const std::string& path) {
    Json doc = read_json(path);
    return {semilinear::detect_format(doc), std::move(doc)};
}

semilinear::AdjacencyGraph materialize_any(const Loaded& in) {
    using semilinear::GraphFormat;
    switch (in.format) {
        case GraphFormat::Semilinear: return semilinear::materialize(semilinear::semilinear_from_json(in.doc));
        case GraphFormat::Dnf: return semilinear::materialize(semilinear::dnf_from_json(in.doc));
        case GraphFormat::QuasiComp: return semilinear::materialize(semilinear::quasicomp_from_json(in.doc));
        case GraphFormat::Adjacency: return semilinear::adjacency_from_json(in.doc);
        case GraphFormat::Incidence: return semilinear::bipartite_graph(semilinear::incidence_from_json(in.doc));
        case GraphFormat::Boxes: {
            std::vector<semilinear::Box> boxes;
            for (const auto& b : in.doc) boxes.push_back(semilinear::box_from_json(b));
            return semilinear::intersection_graph(boxes);
        }
    }
    throw semilinear::InvalidParams("unsupported graph format");
}

}  // namespace

int cmd_gen(const GenOptions& opt, const Context& ctx) {
    Manifest manifest = base_manifest("gen", ctx);
    Json verdicts = Json::array();
    std::size_t n = 0;
    std::size_t edges = 0;
    std::string girth = "";
    std::string iterations = "";

    if (opt.family == "shift" || opt.family == "fw") {
        const auto g = opt.family == "shift" ? semilinear::shift_graph(opt.m, opt.k)
                                             : semilinear::frankl_wilson(opt.p, opt.m);
        write_json(ctx.out / "graph.json", semilinear::to_json(g));
        const auto adj = semilinear::materialize(g);
        n = adj.size();
        edges = adj.edge_count();
        girth = girth_text(adj);
    } else if (opt.family == "bcstt") {
        const auto g = semilinear::bcstt_construction(opt.k);
        write_json(ctx.out / "graph.json", semilinear::to_json(g));
        const auto k22 = semilinear::has_K22(g);
        verdicts.push_back(semilinear::verdict("k22_free", !k22, k22 ? Json(*k22) : Json()));
        const auto adj = semilinear::bipartite_graph(g);
        n = adj.size();
        edges = adj.edge_count();
        girth = girth_text(adj);
    } else if (opt.family == "girth") {
        manifest.schedule = semilinear::to_json(ctx.sched);
        const auto run = semilinear::build_girth_construction(opt.m, opt.g, ctx.sched, ctx.seed);
        write_json(ctx.out / "graph.json", semilinear::to_json(run.graph));
        const auto adj = semilinear::bipartite_graph(run.graph);
        n = adj.size();
        edges = adj.edge_count();
        girth = girth_text(adj);
        iterations = std::to_string(run.iterations);
        const auto measured = semilinear::girth(adj);
        verdicts.push_back(semilinear::verdict("feasible", true, Json{{"feasible", run.feasible},
                                                                      {"iterations", run.iterations}}));
        verdicts.push_back(semilinear::verdict("girth_at_least_" + std::to_string(2 * opt.g),
                                               !measured || *measured >= 2 * opt.g,
                                               measured ? Json(*measured) : Json("inf")));
        verdicts.push_back(semilinear::verdict("incidence_consistent", semilinear::geometry_consistent(run.graph)));
        if (run.feasible) {
            bool degrees_ok = true;
            for (std::size_t p = 0; p < run.graph.points.size(); ++p) {
                degrees_ok = degrees_ok && run.graph.point_degree(p) == run.iterations;
            }
            verdicts.push_back(semilinear::verdict("point_degree_equals_iterations", degrees_ok));
        }
    } else if (opt.family == "superline") {
        record_input(manifest, opt.in);
        const auto g = semilinear::superline_semilinear(incidence_input(opt));
        write_json(ctx.out / "graph.json", semilinear::to_json(g));
        const auto adj = semilinear::materialize(g);
        n = adj.size();
        edges = adj.edge_count();
        girth = girth_text(adj);
    } else if (opt.family == "boxes3d") {
        record_input(manifest, opt.in);
        const auto boxes = semilinear::boxes3d_from_incidence(incidence_input(opt));
        Json doc = Json::array();
        for (const auto& b : boxes) doc.push_back(semilinear::to_json(b));
        write_json(ctx.out / "graph.json", doc);
        const auto adj = semilinear::intersection_graph(boxes);
        n = adj.size();
        edges = adj.edge_count();
        girth = girth_text(adj);
    }

    std::ostringstream csv;
    csv << "generator,params,n,edges,girth,iterations,seed\n";
    csv << opt.family << "," << params_text(opt) << "," << n << "," << edges << "," << girth << ","
        << iterations << "," << ctx.seed << "\n";
    write_text(ctx.out / "stats.csv", csv.str());
    record(manifest, ctx, "graph.json");
    record(manifest, ctx, "stats.csv");
    bool ok = true;
    if (!verdicts.empty()) {
        write_json(ctx.out / "verdicts.json", verdicts);
        record(manifest, ctx, "verdicts.json");
        for (const auto& v : verdicts) ok = ok && v.at("ok").get<bool>();
    }
    write_manifest(ctx.out, manifest);
    std::cout << csv.str().substr(csv.str().find('\n') + 1);
    if (!verdicts.empty()) std::cout << verdicts.dump() << "\n";
    return ok ? kOk : kVerifyFailed;
}

namespace {

struct ColorRun {
    semilinear::Coloring coloring;
    std::size_t n = 0;
    bool proper = false;
};

ColorRun color_loaded(const Loaded& in, std::size_t s) {
    using semilinear::GraphFormat;
    ColorRun run;
    semilinear::AdjacencyGraph adj;
    if (in.format == GraphFormat::Semilinear) {
        const auto g = semilinear::semilinear_from_json(in.doc);
        run.coloring = semilinear::color_semilinear(g, s);
        adj = semilinear::materialize(g);
    } else if (in.format == GraphFormat::Dnf) {
        const auto g = semilinear::dnf_from_json(in.doc);
        run.coloring = semilinear::color_dnf(g, s);
        adj = semilinear::materialize(g);
    } else if (in.format == GraphFormat::QuasiComp) {
        const auto q = semilinear::quasicomp_from_json(in.doc);
        run.coloring = semilinear::color_quasicomp(q, s);
        adj = semilinear::materialize(q);
    } else {
        throw semilinear::InvalidParams("color expects a semilinear, DNF or quasi-comparability graph");
    }
    run.n = adj.size();
    run.proper = !semilinear::is_proper(adj, run.coloring);
    return run;
}

double normalized(std::uint64_t palette, std::size_t n) {
    return static_cast<double>(palette) / (1.0 + std::log2(static_cast<double>(std::max<std::size_t>(n, 1))));
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::size_t v = std::stoul(text);
            return {v, v};
        }
        return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw semilinear::InvalidParams("--m expects lo..hi");
    }
}

}  // namespace

int cmd_color(const ColorOptions& opt, const Context& ctx) {
    Manifest manifest = base_manifest("color", ctx);
    if (!opt.family.empty()) {
        const auto [lo, hi] = parse_range(opt.m_range.empty() ? "4..128" : opt.m_range);
        if (lo < 2 || hi < lo) throw semilinear::InvalidParams("--m range must satisfy 2 <= lo <= hi");
        std::ostringstream csv;
        csv << "family,m,n,palette,normalized_palette,proper\n";
        bool ok = true;
        for (std::size_t m = lo; m <= hi; m *= 2) {
            const auto g = semilinear::shift_graph(m, opt.k);
            const auto coloring = semilinear::color_semilinear(g, opt.s);
            const auto adj = semilinear::materialize(g);
            const bool proper = !semilinear::is_proper(adj, coloring);
            ok = ok && proper;
            csv << opt.family << "," << m << "," << adj.size() << "," << coloring.palette << ","
                << fixed(normalized(coloring.palette, adj.size())) << "," << (proper ? "true" : "false") << "\n";
        }
        write_text(ctx.out / "sweep.csv", csv.str());
        record(manifest, ctx, "sweep.csv");
        write_manifest(ctx.out, manifest);
        std::cout << csv.str();
        return ok ? kOk : kVerifyFailed;
    }
    if (opt.graph.empty()) throw semilinear::InvalidParams("color needs a graph path or --family");

    record_input(manifest, opt.graph);
    const auto start = std::chrono::steady_clock::now();
    const ColorRun run = color_loaded(load(opt.graph), opt.s);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    write_json(ctx.out / "coloring.json", semilinear::to_json(run.coloring));
    std::ostringstream csv;
    csv << "n,palette,normalized_palette,proper\n"
        << run.n << "," << run.coloring.palette << "," << fixed(normalized(run.coloring.palette, run.n)) << ","
        << (run.proper ? "true" : "false") << "\n";
    write_text(ctx.out / "stats.csv", csv.str());
    record(manifest, ctx, "coloring.json");
    record(manifest, ctx, "stats.csv");
    write_manifest(ctx.out, manifest);
    std::cout << csv.str();
    // Wall time stays out of the artifacts so replays compare equal.
    std::cerr << "wall_seconds," << fixed(seconds) << "\n";
    return run.proper ? kOk : kVerifyFailed;
}

int cmd_ramsey(const std::string& graph, const Context& ctx) {
    using semilinear::GraphFormat;
    Manifest manifest = base_manifest("ramsey", ctx);
    record_input(manifest, graph);
    const Loaded in = load(graph);
    semilinear::RamseyWitness witness;
    semilinear::AdjacencyGraph adj;
    if (in.format == GraphFormat::QuasiComp) {
        const auto q = semilinear::quasicomp_from_json(in.doc);
        const auto cotree = semilinear::find_cograph(q);
        witness = semilinear::cograph_witness(cotree);
        adj = semilinear::materialize(q);
        write_json(ctx.out / "cotree.json", semilinear::to_json(cotree));
        record(manifest, ctx, "cotree.json");
    } else if (in.format == GraphFormat::Semilinear || in.format == GraphFormat::Dnf) {
        const auto d = in.format == GraphFormat::Dnf ? semilinear::dnf_from_json(in.doc)
                                                     : semilinear::to_dnf(semilinear::semilinear_from_json(in.doc));
        witness = semilinear::ramsey_witness(d);
        adj = semilinear::materialize(d);
    } else {
        throw semilinear::InvalidParams("ramsey expects a semilinear, DNF or quasi-comparability graph");
    }
    if (!semilinear::witness_consistent(witness, adj)) {
        throw semilinear::ProofInvariantViolated("witness disagrees with the graph", witness.vertices);
    }
    write_json(ctx.out / "witness.json", semilinear::to_json(witness));
    record(manifest, ctx, "witness.json");
    write_manifest(ctx.out, manifest);
    std::cout << "n,kind,size\n"
              << adj.size() << "," << (witness.kind == semilinear::RamseyWitness::Kind::Clique ? "clique" : "is")
              << "," << witness.size() << "\n";
    return kOk;
}

int cmd_verify(const VerifyOptions& opt, const Context& ctx) {
    using semilinear::verdict;
    Json verdicts = Json::array();
    auto parse_failure = [&](const std::string& path, const std::exception& e) {
        verdicts.push_back(verdict("parse:" + path, false, e.what()));
    };

    Loaded in;
    semilinear::AdjacencyGraph adj;
    try {
        in = load(opt.graph);
        adj = materialize_any(in);
    } catch (const std::exception& e) {
        parse_failure(opt.graph, e);
        std::cout << verdicts.dump(2) << "\n";
        return kVerifyFailed;
    }

    if (in.format == semilinear::GraphFormat::Incidence) {
        const Json& doc = in.doc;
        std::vector<semilinear::Vector> points;
        for (const auto& p : doc.at("points")) {
            points.push_back({semilinear::rational_from_json(p.at(0)), semilinear::rational_from_json(p.at(1))});
        }
        std::vector<semilinear::Box> rects;
        for (const auto& r : doc.at("rects")) rects.push_back(semilinear::box_from_json(r));
        std::vector<semilinear::Edge> claimed;
        for (const auto& e : doc.value("edges", Json::array())) claimed.emplace_back(e.at(0), e.at(1));
        const auto diff = semilinear::incidence_check(points, rects, claimed);
        verdicts.push_back(verdict("incidence", diff.ok(), Json{{"missing", diff.missing}, {"extra", diff.extra}}));
        if (opt.k22_free) {
            const auto k22 = semilinear::has_K22(semilinear::make_incidence(points, rects));
            verdicts.push_back(verdict("k22_free", !k22, k22 ? Json(*k22) : Json()));
        }
    } else if (opt.k22_free) {
        verdicts.push_back(verdict("k22_free", false, "not an incidence graph"));
    }

    if (!opt.coloring.empty()) {
        try {
            const auto c = semilinear::coloring_from_json(read_json(opt.coloring));
            if (c.size() != adj.size()) {
                verdicts.push_back(verdict("proper_coloring", false, "coloring size differs from the graph"));
            } else {
                const auto bad = semilinear::is_proper(adj, c);
                verdicts.push_back(verdict("proper_coloring", !bad, bad ? Json::array({bad->first, bad->second}) : Json()));
            }
        } catch (const std::exception& e) {
            parse_failure(opt.coloring, e);
        }
    }
    if (!opt.witness.empty()) {
        try {
            const auto w = semilinear::witness_from_json(read_json(opt.witness));
            verdicts.push_back(verdict("witness", semilinear::witness_consistent(w, adj), w.vertices));
        } catch (const std::exception& e) {
            parse_failure(opt.witness, e);
        }
    }
    if (!opt.cotree.empty()) {
        try {
            const auto c = semilinear::cotree_from_json(read_json(opt.cotree));
            std::optional<semilinear::Edge> bad;
            std::string problem;
            try {
                bad = semilinear::is_cograph_induced(adj, c);
            } catch (const semilinear::InvalidCotree& e) {
                problem = e.what();
            }
            if (!problem.empty()) {
                verdicts.push_back(verdict("cotree", false, problem));
            } else {
                verdicts.push_back(verdict("cotree", !bad, bad ? Json::array({bad->first, bad->second}) : Json()));
            }
        } catch (const std::exception& e) {
            parse_failure(opt.cotree, e);
        }
    }
    if (opt.chromatic) {
        const std::size_t chi = semilinear::exact_chromatic(adj, ctx.budget);
        verdicts.push_back(verdict("chromatic_number", true, chi));
    }
    if (opt.girth_at_least > 0) {
        const auto g = semilinear::girth(adj);
        verdicts.push_back(verdict("girth_at_least_" + std::to_string(opt.girth_at_least),
                                   !g || *g >= opt.girth_at_least, g ? Json(*g) : Json("inf")));
    }

    bool ok = true;
    for (const auto& v : verdicts) ok = ok && v.at("ok").get<bool>();
    std::cout << verdicts.dump(2) << "\n";
    return ok ? kOk : kVerifyFailed;
}

int cmd_replay(const std::string& manifest_path, const Context& ctx) {
    const Manifest m = read_manifest(manifest_path);
    for (const auto& [path, hash] : m.inputs.items()) {
        if (!fs::exists(path) || sha256_file(path) != hash.get<std::string>()) {
            std::cerr << "replay: input " << path << " changed or missing\n";
            return kVerifyFailed;
        }
    }
    std::vector<std::string> args = m.args;
    args.push_back("--out");
    args.push_back(ctx.out.string());
    const int code = run(args);
    if (code != kOk && code != kVerifyFailed) return code;

    Json verdicts = Json::array();
    bool ok = true;
    for (const auto& [name, hash] : m.artifacts.items()) {
        const fs::path produced = ctx.out / name;
        const bool same = fs::exists(produced) && sha256_file(produced) == hash.get<std::string>();
        ok = ok && same;
        verdicts.push_back(semilinear::verdict("identical:" + name, same));
    }
    std::cout << verdicts.dump(2) << "\n";
    return ok ? kOk : kVerifyFailed;
}

}  // namespace cli
