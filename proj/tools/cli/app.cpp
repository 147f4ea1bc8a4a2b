#include "commands.hpp"

#include "semilinear/errors.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

namespace cli {

namespace {

semilinear::ConstantSchedule parse_schedule(const std::string& text) {
    if (text == "standard") return semilinear::ConstantSchedule::standard();
    if (text == "relaxed") return semilinear::ConstantSchedule::relaxed();
    const std::string prefix = "custom:";
    if (text.rfind(prefix, 0) == 0) {
        try {
            return semilinear::schedule_from_json(semilinear::Json::parse(text.substr(prefix.size())));
        } catch (const semilinear::Json::exception& e) {
            throw semilinear::InvalidParams(std::string("--sched: ") + e.what());
        }
    }
    throw semilinear::InvalidParams("--sched must be standard, relaxed or custom:<json>");
}

semilinear::OracleBudget parse_budget(const std::string& text) {
    semilinear::OracleBudget b = semilinear::OracleBudget::clique();
    if (text.empty()) return b;
    try {
        const auto j = semilinear::Json::parse(text);
        b.max_vertices = j.value("max_vertices", b.max_vertices);
        b.max_edges = j.value("max_edges", b.max_edges);
        b.timeout_seconds = j.value("timeout_seconds", b.timeout_seconds);
    } catch (const semilinear::Json::exception& e) {
        throw semilinear::InvalidParams(std::string("--budget: ") + e.what());
    }
    return b;
}

std::vector<std::string> without_out(const std::vector<std::string>& args) {
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--out") {
            ++i;
            continue;
        }
        if (args[i].rfind("--out=", 0) == 0) continue;
        kept.push_back(args[i]);
    }
    return kept;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Semilinear graph coloring, Ramsey witnesses and lower-bound constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx;
    std::string sched = "standard";
    std::string budget;
    std::string out = ".";
    app.add_option("--seed", ctx.seed, "Seed for randomized generators");
    app.add_option("--sched", sched, "Constant schedule: standard, relaxed or custom:<json>");
    app.add_option("--budget", budget, "Oracle budget as JSON");
    app.add_option("--out", out, "Output directory");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
    gen_cmd->add_option("family", gen.family, "shift | fw | bcstt | girth | superline | boxes3d")
        ->required()
        ->check(CLI::IsMember({"shift", "fw", "bcstt", "girth", "superline", "boxes3d"}));
    gen_cmd->add_option("--m", gen.m, "Ground set size / star size");
    gen_cmd->add_option("--k", gen.k, "Tuple length / tensor factor");
    gen_cmd->add_option("--p", gen.p, "Prime for fw");
    gen_cmd->add_option("--g", gen.g, "Half of the target girth");
    gen_cmd->add_option("--in", gen.in, "Incidence graph JSON (superline, boxes3d)");

    ColorOptions color;
    auto* color_cmd = app.add_subcommand("color", "Color a semilinear graph");
    color_cmd->add_option("graph", color.graph, "Graph JSON");
    color_cmd->add_option("--s", color.s, "Clique bound: no clique of size s");
    color_cmd->add_option("--family", color.family, "Sweep a family instead of reading a graph")
        ->check(CLI::IsMember({"shift"}));
    color_cmd->add_option("--m", color.m_range, "Sweep range lo..hi (doubling)");
    color_cmd->add_option("--k", color.k, "Tuple length for the shift family");

    std::string ramsey_graph;
    auto* ramsey_cmd = app.add_subcommand("ramsey", "Extract a clique or independent set");
    ramsey_cmd->add_option("graph", ramsey_graph, "Graph JSON")->required();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check artifacts against a graph");
    verify_cmd->add_option("graph", verify.graph, "Graph JSON")->required();
    verify_cmd->add_option("--coloring", verify.coloring, "Coloring JSON");
    verify_cmd->add_option("--witness", verify.witness, "Witness JSON");
    verify_cmd->add_option("--cotree", verify.cotree, "Cotree JSON");
    verify_cmd->add_flag("--chromatic", verify.chromatic, "Report the exact chromatic number");
    verify_cmd->add_flag("--k22-free", verify.k22_free, "Require an incidence graph without K_{2,2}");
    verify_cmd->add_option("--girth-at-least", verify.girth_at_least, "Required girth");

    std::string manifest;
    auto* replay_cmd = app.add_subcommand("replay", "Re-run a manifest and compare outputs");
    replay_cmd->add_option("manifest", manifest, "manifest.json")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        ctx.sched_name = sched;
        ctx.sched = parse_schedule(sched);
        ctx.budget = parse_budget(budget);
        ctx.out = out;
        ctx.args = without_out(args);
        if (gen_cmd->parsed()) return cmd_gen(gen, ctx);
        if (color_cmd->parsed()) return cmd_color(color, ctx);
        if (ramsey_cmd->parsed()) return cmd_ramsey(ramsey_graph, ctx);
        if (verify_cmd->parsed()) return cmd_verify(verify, ctx);
        if (replay_cmd->parsed()) return cmd_replay(manifest, ctx);
    } catch (const semilinear::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const semilinear::OverBudget& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kBudget;
    } catch (const semilinear::SamplingFailed& e) {
        std::cerr << "sampling: " << e.what() << " (attempts " << e.attempts() << ", best |E(H)| "
                  << e.best_edges() << ")\n";
        return kBudget;
    } catch (const semilinear::TooLarge& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return kBudget;
    } catch (const semilinear::PreconditionViolated& e) {
        std::cerr << "precondition: " << e.what();
        if (!e.witness().empty()) std::cerr << "\nwitness: " << semilinear::Json(e.witness()).dump();
        std::cerr << "\n";
        return kVerifyFailed;
    } catch (const semilinear::ProofInvariantViolated& e) {
        std::cerr << "invariant: " << e.what();
        if (!e.counterexample().empty()) {
            std::cerr << "\ncounterexample: " << semilinear::Json(e.counterexample()).dump();
        }
        std::cerr << "\n";
        return kVerifyFailed;
    } catch (const semilinear::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace cli

