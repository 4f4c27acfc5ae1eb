#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kingpack/encoder.hpp"
#include "kingpack/oracle.hpp"
#include "kingpack/prover.hpp"
#include "kingpack/tiling.hpp"

using json = nlohmann::ordered_json;
using namespace kingpack;

namespace {

constexpr const char* kVersion = "kingpack 1.0.0";

// FNV-1a, hex-encoded; stable fingerprint for input files in certificates.
std::string digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

struct Ctx {
    bool as_json = false;
    long long seed = 0;
    std::vector<std::string> argv;
    json inputs = json::object();  // file path -> content digest

    json certificate(const std::string& command) const {
        json cert;
        cert["tool"] = kVersion;
        cert["command"] = command;
        cert["argv"] = argv;
        cert["seed"] = seed;
        if (!inputs.empty()) cert["inputs"] = inputs;
        return cert;
    }
};

void emit(const Ctx& ctx, const json& doc, const std::string& human) {
    if (ctx.as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

std::string read_file(Ctx& ctx, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    ctx.inputs[path] = digest(bytes);
    return bytes;
}

GridCoord parse_cell(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected x,y: " + text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

std::vector<std::string> split_tags(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

const char* proof_status_name(ProofResult::Status st) {
    switch (st) {
        case ProofResult::Status::REFUTED: return "REFUTED";
        case ProofResult::Status::SATURATED: return "SATURATED";
        default: return "BUDGET_EXCEEDED";
    }
}

const char* solve_status_name(SolveResult::Status st) {
    switch (st) {
        case SolveResult::Status::SAT: return "SAT";
        case SolveResult::Status::UNSAT: return "UNSAT";
        default: return "UNKNOWN";
    }
}

void write_sink(const std::string& out_path, const CnfInstance& cnf) {
    if (out_path.empty()) {
        export_dimacs(cnf, std::cout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot write " + out_path);
    export_dimacs(cnf, out);
}

int run_bounds(Ctx& ctx, long long k) {
    Bounds b = bounds_for_tail(k);
    json doc = ctx.certificate("bounds");
    doc["k"] = k;
    doc["lower"] = b.lower;
    doc["upper"] = b.upper;
    emit(ctx, doc, std::to_string(b.lower) + " " + std::to_string(b.upper) + "\n");
    return 0;
}

int run_verify(Ctx& ctx, const std::string& path, const std::string& s_text,
               int colors) {
    SSequence s = SSequence::parse(s_text);
    std::istringstream in(read_file(ctx, path));
    Coloring c = load_coloring(in, colors);
    VerifyReport report = verify_coloring(c, s);

    json doc = ctx.certificate("verify");
    doc["s"] = s.to_string();
    doc["width"] = c.width();
    doc["height"] = c.height();
    doc["torus"] = c.torus().has_value();
    doc["skipped_cells"] = report.skipped_cells;
    doc["violations"] = json::array();
    std::ostringstream human;
    for (const Violation& v : report.violations) {
        doc["violations"].push_back({{"a", {v.cell_a.x, v.cell_a.y}},
                                     {"b", {v.cell_b.x, v.cell_b.y}},
                                     {"color", v.color},
                                     {"distance", v.distance},
                                     {"required", v.required}});
        human << "violation: color " << v.color << " at (" << v.cell_a.x << ","
              << v.cell_a.y << ") and (" << v.cell_b.x << "," << v.cell_b.y
              << ") distance " << v.distance << " <= " << v.required << "\n";
    }
    doc["valid"] = report.valid();
    if (report.valid()) human << "valid\n";
    emit(ctx, doc, human.str());
    return report.valid() ? 0 : 1;
}

int run_oracle(Ctx& ctx, int w, int h, const std::vector<std::string>& force,
               const std::string& patterns, bool optima, int cell_cap) {
    std::vector<GridCoord> forced;
    for (const auto& f : force) forced.push_back(parse_cell(f));
    std::vector<PatternSet> forbidden =
        patterns.empty() ? std::vector<PatternSet>{}
                         : lemma4_entries(split_tags(patterns));
    CensusResult res = max_color1(w, h, forced, forbidden, {}, cell_cap);

    json doc = ctx.certificate("oracle");
    doc["w"] = w;
    doc["h"] = h;
    doc["patterns"] = split_tags(patterns);
    doc["status"] =
        res.status == CensusResult::Status::OK ? "OK" : "INFEASIBLE";
    std::ostringstream human;
    if (res.status == CensusResult::Status::INFEASIBLE) {
        human << "infeasible\n";
        emit(ctx, doc, human.str());
        return 1;
    }
    doc["max"] = res.max;
    doc["witness"] = json::array();
    for (GridCoord g : res.witness) doc["witness"].push_back({g.x, g.y});
    human << "max=" << res.max << "\n";
    if (optima) {
        auto all = enumerate_optima(w, h, forced, forbidden, {}, cell_cap);
        doc["optima"] = json::array();
        for (const auto& placement : all) {
            json cells = json::array();
            for (GridCoord g : placement) cells.push_back({g.x, g.y});
            doc["optima"].push_back(cells);
        }
        human << "optima=" << all.size() << "\n";
    }
    emit(ctx, doc, human.str());
    return 0;
}

int refute_one(Ctx& ctx, const RefutationTask& task, int radius,
               const ProofBudget& budget, std::ostream& human, json& out) {
    ProofResult res = refute_at_radius(task, radius, budget);
    out = json{{"tag", task.tag},
               {"radius", res.radius},
               {"status", proof_status_name(res.status)},
               {"axioms", task.axioms},
               {"nodes", res.nodes},
               {"conflicts", res.conflicts},
               {"elapsed", res.elapsed}};
    human << task.tag << " radius=" << res.radius << " "
          << proof_status_name(res.status) << " nodes=" << res.nodes
          << " conflicts=" << res.conflicts << "\n";
    switch (res.status) {
        case ProofResult::Status::REFUTED: return 0;
        case ProofResult::Status::SATURATED: return 1;
        default: return 2;
    }
}

int run_refute(Ctx& ctx, const std::string& tag, bool all, int radius,
               long long budget_nodes, double budget_secs) {
    ProofBudget budget{budget_nodes, budget_secs};
    json doc = ctx.certificate("refute");
    doc["results"] = json::array();
    std::ostringstream human;
    int worst = 0;
    if (all) {
        for (const auto& task : standard_tasks()) {
            if (!task.binary) continue;
            json one;
            int code = refute_one(ctx, task, radius >= 0 ? radius : task.radius,
                                  budget, human, one);
            doc["results"].push_back(one);
            worst = std::max(worst, code);
        }
    } else {
        const RefutationTask& task = standard_task(tag);
        json one;
        worst = refute_one(ctx, task, radius >= 0 ? radius : task.radius,
                           budget, human, one);
        doc["results"].push_back(one);
    }
    emit(ctx, doc, human.str());
    return worst;
}

int run_tasks(Ctx& ctx) {
    json doc = ctx.certificate("tasks");
    doc["tasks"] = json::array();
    std::ostringstream human;
    for (const auto& t : standard_tasks()) {
        doc["tasks"].push_back({{"tag", t.tag},
                                {"kind", t.binary ? "binary" : "export"},
                                {"axioms", t.axioms},
                                {"radius", t.radius}});
        human << t.tag << " (" << (t.binary ? "binary" : "export") << ")";
        if (!t.axioms.empty()) {
            human << " axioms:";
            for (const auto& a : t.axioms) human << " " << a;
        }
        human << "\n";
    }
    emit(ctx, doc, human.str());
    return 0;
}

int run_encode(Ctx& ctx, int w, int h, int colors, const std::string& s_text,
               bool torus, const std::string& out_path, bool do_solve) {
    SSequence s = SSequence::parse(s_text);
    std::optional<TorusPeriods> periods;
    if (torus) periods = TorusPeriods{w, h};
    auto [cnf, vm] = encode_window(w, h, colors, s, {}, periods);
    if (!do_solve) {
        write_sink(out_path, cnf);
        return 0;
    }
    SolveResult res = solve(cnf);
    json doc = ctx.certificate("encode");
    doc["w"] = w;
    doc["h"] = h;
    doc["colors"] = colors;
    doc["s"] = s.to_string();
    doc["torus"] = torus;
    doc["status"] = solve_status_name(res.status);
    doc["decisions"] = res.decisions;
    doc["conflicts"] = res.conflicts;
    doc["elapsed"] = res.elapsed;
    std::ostringstream human;
    human << solve_status_name(res.status) << "\n";
    if (res.status == SolveResult::Status::SAT) {
        Coloring c = decode(res.model, vm, periods);
        std::ostringstream grid;
        save_coloring(c, grid);
        doc["coloring"] = grid.str();
        human << grid.str();
    }
    emit(ctx, doc, human.str());
    return res.status == SolveResult::Status::SAT     ? 0
           : res.status == SolveResult::Status::UNSAT ? 1
                                                      : 2;
}

int run_export_task(Ctx& ctx, const std::string& tag, int radius, int colors,
                    const std::string& s_text, const std::string& out_path) {
    std::string lemma = tag == "F-L1" ? "i" : tag == "F-L3" ? "iii" : tag;
    auto [cnf, vm] = export_task(lemma, radius, colors, SSequence::parse(s_text));
    write_sink(out_path, cnf);
    return 0;
}

int run_tile(Ctx& ctx, int p, int q, const std::string& s_text, int colors,
             double budget_secs, const std::string& ledger_path) {
    SSequence s = SSequence::parse(s_text);
    SolveBudget budget;
    budget.max_seconds = budget_secs;
    PeriodicSearchOutcome out = search_periodic(p, q, s, colors, budget);

    if (!ledger_path.empty()) {
        std::ofstream ledger(ledger_path, std::ios::app);
        if (!ledger) throw CLI::ValidationError("cannot write " + ledger_path);
        append_sweep_record(ledger, p, q, s, colors, out);
    }

    json doc = ctx.certificate("tile");
    doc["p"] = p;
    doc["q"] = q;
    doc["s"] = s.to_string();
    doc["colors"] = colors;
    doc["status"] = solve_status_name(out.status);
    doc["decisions"] = out.decisions;
    doc["conflicts"] = out.conflicts;
    doc["elapsed"] = out.elapsed;
    std::ostringstream human;
    human << solve_status_name(out.status) << "\n";
    if (out.coloring) {
        std::ostringstream grid;
        save_coloring(*out.coloring, grid);
        doc["coloring"] = grid.str();
        human << grid.str();
    }
    emit(ctx, doc, human.str());
    return out.status == SolveResult::Status::SAT     ? 0
           : out.status == SolveResult::Status::UNSAT ? 1
                                                      : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-packing coloring workbench for the king grid"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Ctx ctx;
    for (int i = 0; i < argc; ++i) ctx.argv.emplace_back(argv[i]);
    app.add_flag("--json", ctx.as_json, "machine-readable output");
    app.add_option("--seed", ctx.seed, "seed recorded in certificates");

    long long k = 6;
    auto* bounds = app.add_subcommand("bounds", "chromatic bounds for S=(1,k*)");
    bounds->add_option("--k", k, "even tail distance")->required();

    std::string coloring_path, s_text = "1,6*";
    int colors = 0;
    auto* verify = app.add_subcommand("verify", "check a coloring file");
    verify->add_option("--coloring", coloring_path, "grid file")->required();
    verify->add_option("--s", s_text, "S sequence, e.g. 1,6*");
    verify->add_option("--colors", colors, "palette size (0 = infer)");

    int w = 7, h = 7, cell_cap = kDefaultCellCap;
    std::vector<std::string> force;
    std::string patterns;
    bool optima = false;
    auto* oracle = app.add_subcommand("oracle", "color-1 census of a window");
    oracle->set_help_flag("--help", "print help");  // frees -h for --h
    oracle->add_option("--w", w, "window width")->required();
    oracle->add_option("--h", h, "window height")->required();
    oracle->add_option("--force", force, "forced ONE cell x,y (repeatable)");
    oracle->add_option("--patterns", patterns, "forbidden lemma tags, comma-separated");
    oracle->add_flag("--optima", optima, "enumerate all optimal placements");
    oracle->add_option("--cell-cap", cell_cap, "maximum window area");

    std::string task_tag;
    bool all_tasks = false;
    int radius = -1;
    long long budget_nodes = -1;
    double budget_secs = -1.0;
    auto* refute = app.add_subcommand("refute", "binary refutation of a task");
    refute->add_option("--task", task_tag, "task tag, e.g. B-L8");
    refute->add_flag("--all", all_tasks, "run every binary task");
    refute->add_option("--radius", radius, "window inflation radius");
    refute->add_option("--budget-nodes", budget_nodes, "node limit");
    refute->add_option("--budget-secs", budget_secs, "time limit");

    auto* tasks = app.add_subcommand("tasks", "list the task registry");

    int enc_w = 7, enc_h = 7, enc_colors = 39;
    std::string enc_s = "1,6*", out_path;
    bool enc_torus = false, enc_solve = false;
    auto* encode = app.add_subcommand("encode", "full-color window instance");
    encode->set_help_flag("--help", "print help");
    encode->add_option("--w", enc_w, "window width")->required();
    encode->add_option("--h", enc_h, "window height")->required();
    encode->add_option("--colors", enc_colors, "palette size")->required();
    encode->add_option("--s", enc_s, "S sequence");
    encode->add_flag("--torus", enc_torus, "toroidal distances");
    encode->add_option("--out", out_path, "DIMACS output file (default stdout)");
    encode->add_flag("--solve", enc_solve, "solve instead of exporting");

    std::string export_tag;
    int export_radius = 2, export_colors = 39;
    std::string export_s = "1,6*", export_out;
    auto* export_cmd =
        app.add_subcommand("export-task", "full-color lemma instance (F-L1/F-L3)");
    export_cmd->add_option("--task", export_tag, "F-L1 or F-L3")->required();
    export_cmd->add_option("--radius", export_radius, "window inflation radius");
    export_cmd->add_option("--colors", export_colors, "palette size");
    export_cmd->add_option("--s", export_s, "S sequence");
    export_cmd->add_option("--out", export_out, "DIMACS output file");

    int tile_p = 0, tile_q = 0, tile_colors = 0;
    std::string tile_s = "1,6*", ledger_path;
    double tile_secs = -1.0;
    auto* tile = app.add_subcommand("tile", "periodic coloring search");
    tile->add_option("--p", tile_p, "horizontal period")->required();
    tile->add_option("--q", tile_q, "vertical period")->required();
    tile->add_option("--s", tile_s, "S sequence");
    tile->add_option("--colors", tile_colors, "palette size")->required();
    tile->add_option("--budget-secs", tile_secs, "time limit");
    tile->add_option("--ledger", ledger_path, "append JSON-lines sweep record");

    // Let trailing global flags (--json, --seed) reach the parent app.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e, std::cerr, std::cerr);
        return 64;
    }

    try {
        if (bounds->parsed()) return run_bounds(ctx, k);
        if (verify->parsed()) return run_verify(ctx, coloring_path, s_text, colors);
        if (oracle->parsed())
            return run_oracle(ctx, w, h, force, patterns, optima, cell_cap);
        if (refute->parsed()) {
            if (!all_tasks && task_tag.empty()) {
                std::cerr << "refute needs --task or --all\n";
                return 64;
            }
            return run_refute(ctx, task_tag, all_tasks, radius, budget_nodes,
                              budget_secs);
        }
        if (tasks->parsed()) return run_tasks(ctx);
        if (encode->parsed())
            return run_encode(ctx, enc_w, enc_h, enc_colors, enc_s, enc_torus,
                              out_path, enc_solve);
        if (export_cmd->parsed())
            return run_export_task(ctx, export_tag, export_radius, export_colors,
                                   export_s, export_out);
        if (tile->parsed())
            return run_tile(ctx, tile_p, tile_q, tile_s, tile_colors, tile_secs,
                            ledger_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
    return 64;
}
