// bookcross: exact 1-page and 2-page book crossing minimization for sparse
// almost-tree graphs, via biconnected decomposition and kernelization.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bookcross/embedding.hpp"
#include "bookcross/graph.hpp"
#include "bookcross/json_io.hpp"
#include "bookcross/search.hpp"
#include "bookcross/svg.hpp"

namespace {

using namespace bookcross;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

std::string file_stem(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = name.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

const char* style_name(Style s) { return s == Style::OnePage ? "1page" : "2page"; }
const char* objective_name(Objective o) {
    return o == Objective::Crossings ? "crossings" : "crossed-edges";
}

struct CommonOpts {
    Style style = Style::OnePage;
    Objective objective = Objective::Crossings;
    Engine engine = Engine::Auto;
    SolveOptions solve;
};

void add_style_objective(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--style", o.style, "drawing style")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Style>{{"1page", Style::OnePage}, {"2page", Style::TwoPage}}))
        ->default_str("1page");
    cmd->add_option("--objective", o.objective, "quantity to minimize")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Objective>{
            {"crossings", Objective::Crossings}, {"crossed-edges", Objective::CrossedEdges}}))
        ->default_str("crossings");
}

void add_engine_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--engine", o.engine, "search engine")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Engine>{
            {"auto", Engine::Auto},
            {"sjt", Engine::Sjt},
            {"enumeration", Engine::Enumeration},
            {"matmult", Engine::MatMult}}))
        ->default_str("auto");
    cmd->add_option("--budget", o.solve.budget, "max configurations explored before giving up")
        ->envname("BOOKCROSS_BUDGET");
    cmd->add_option("--threads", o.solve.threads, "search worker count");
    cmd->add_option("--sjt-cap", o.solve.sjt_vertex_cap, "1-page kernel vertex cap");
    cmd->add_option("--enum-vertex-cap", o.solve.enum_vertex_cap, "2-page kernel vertex cap");
    cmd->add_option("--enum-edge-cap", o.solve.enum_edge_cap, "2-page kernel edge cap");
    cmd->add_flag_callback("--no-prune", [&o] { o.solve.prune = false; },
                           "disable branch-and-bound pruning (same results, slower)");
}

void reject_matmult_crossed(const CommonOpts& o) {
    if (o.engine == Engine::MatMult && o.objective == Objective::CrossedEdges)
        throw CLI::ValidationError(
            "--engine matmult only minimizes crossings; use sjt/enumeration/auto "
            "for crossed-edges");
}

int cmd_stats(const std::string& input, bool as_json) {
    ParsedGraph parsed = parse_edge_list(slurp(input));
    GraphStats s = stats(parsed.graph);
    std::string name = file_stem(input);
    if (as_json) {
        nlohmann::json j{{"name", name}, {"n", s.n},   {"m", s.m},
                         {"a", s.a},     {"k", s.k},   {"n2", s.n2},
                         {"m2", s.m2},   {"components", s.components}};
        if (parsed.self_loops_dropped > 0) j["self_loops_dropped"] = parsed.self_loops_dropped;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (parsed.self_loops_dropped > 0)
        std::cerr << "warning: dropped " << parsed.self_loops_dropped << " self-loop(s)\n";
    std::cout << "name" << std::string(std::max<size_t>(1, 18 - 4), ' ') << " n     m     a     k     n2    m2\n";
    std::ostringstream row;
    row << name;
    if (name.size() < 18) row << std::string(18 - name.size(), ' ');
    auto col = [&](int v) {
        std::string t = std::to_string(v);
        row << " " << t << std::string(t.size() < 5 ? 5 - t.size() : 1, ' ');
    };
    col(s.n);
    col(s.m);
    col(s.a);
    col(s.k);
    col(s.n2);
    col(s.m2);
    std::cout << row.str() << "\n";
    return 0;
}

int cmd_solve(const std::string& input, const CommonOpts& o, const std::string& output,
              bool as_json) {
    reject_matmult_crossed(o);
    ParsedGraph parsed = parse_edge_list(slurp(input));
    SolveOptions opts = o.solve;
    opts.engine = o.engine;
    SearchResult res = solve(parsed.graph, o.style, o.objective, opts);

    CrossingReport rep = count_fast(parsed.graph, res.layout);
    std::string layout_json = write_layout_json(parsed.graph, res.layout, rep);

    std::ostringstream kernels;
    kernels << "[";
    for (size_t i = 0; i < res.kernels.size(); ++i) {
        const auto& ki = res.kernels[i];
        kernels << (i ? ", " : "") << "block " << ki.block << ": " << ki.kernel_vertices << "v/"
                << ki.kernel_edges << "e (k=" << ki.k << ", ell=" << ki.ell << ")";
    }
    kernels << "]";

    if (!output.empty()) spill(output, layout_json);

    if (as_json) {
        nlohmann::json j{{"style", style_name(o.style)},
                         {"objective", objective_name(o.objective)},
                         {"value", res.value},
                         {"crossings", rep.crossings},
                         {"crossed_edges", rep.crossed_count},
                         {"explored", res.explored},
                         {"wall_seconds", res.wall_seconds}};
        j["kernels"] = nlohmann::json::array();
        for (const auto& ki : res.kernels)
            j["kernels"].push_back({{"block", ki.block},
                                    {"k", ki.k},
                                    {"ell", ki.ell},
                                    {"vertices", ki.kernel_vertices},
                                    {"edges", ki.kernel_edges}});
        std::cout << j.dump(2) << "\n";
        if (output.empty()) std::cerr << layout_json;
        return 0;
    }

    std::ostream& summary = output.empty() ? std::cerr : std::cout;
    if (output.empty()) std::cout << layout_json;
    summary << "style=" << style_name(o.style) << " objective=" << objective_name(o.objective)
            << " value=" << res.value << "\n";
    summary << "kernels=" << kernels.str() << "\n";
    summary << "explored=" << res.explored << " time=" << res.wall_seconds << "s\n";
    return 0;
}

int cmd_kernel(const std::string& input, const CommonOpts& o, const std::string& output) {
    ParsedGraph parsed = parse_edge_list(slurp(input));
    std::string dump = kernel_dump(parsed.graph, o.style, o.objective);
    if (output.empty())
        std::cout << dump;
    else
        spill(output, dump);
    return 0;
}

int cmd_render(const std::string& input, const CommonOpts& o, const std::string& layout_path,
               bool do_solve, const std::string& output) {
    reject_matmult_crossed(o);
    ParsedGraph parsed = parse_edge_list(slurp(input));
    BookEmbedding emb;
    if (do_solve) {
        SolveOptions opts = o.solve;
        opts.engine = o.engine;
        emb = solve(parsed.graph, o.style, o.objective, opts).layout;
    } else if (!layout_path.empty()) {
        emb = read_layout_json(parsed.graph, slurp(layout_path));
    } else {
        throw std::invalid_argument("render needs --layout FILE or --solve");
    }
    CrossingReport rep = count_fast(parsed.graph, emb);
    std::string svg = render_sunburst(parsed.graph, emb, rep);
    if (output.empty())
        std::cout << svg;
    else
        spill(output, svg);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 1-page/2-page book crossing minimization for almost-trees"};
    app.require_subcommand(1);

    std::string input, output, layout_path;
    bool as_json = false, do_solve = false;
    CommonOpts opts;

    CLI::App* stats_cmd = app.add_subcommand("stats", "structural statistics (n m a k n2 m2)");
    stats_cmd->add_option("input", input, "edge-list file")->required();
    stats_cmd->add_flag("--json", as_json, "emit JSON");

    CLI::App* solve_cmd = app.add_subcommand("solve", "compute an optimal layout");
    solve_cmd->add_option("input", input, "edge-list file")->required();
    add_style_objective(solve_cmd, opts);
    add_engine_opts(solve_cmd, opts);
    solve_cmd->add_option("--output", output, "layout JSON path (default: stdout)");
    solve_cmd->add_flag("--json", as_json, "emit the summary as JSON");

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "dump per-block kernels");
    kernel_cmd->add_option("input", input, "edge-list file")->required();
    add_style_objective(kernel_cmd, opts);
    kernel_cmd->add_option("--output", output, "dump path (default: stdout)");

    CLI::App* render_cmd = app.add_subcommand("render", "sunburst SVG of a layout");
    render_cmd->add_option("input", input, "edge-list file")->required();
    render_cmd->add_option("--layout", layout_path, "layout JSON produced by solve");
    render_cmd->add_flag("--solve", do_solve, "solve first, then render");
    add_style_objective(render_cmd, opts);
    add_engine_opts(render_cmd, opts);
    render_cmd->add_option("--output", output, "SVG path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(stats_cmd)) return cmd_stats(input, as_json);
        if (app.got_subcommand(solve_cmd)) return cmd_solve(input, opts, output, as_json);
        if (app.got_subcommand(kernel_cmd)) return cmd_kernel(input, opts, output);
        if (app.got_subcommand(render_cmd))
            return cmd_render(input, opts, layout_path, do_solve, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SizeError& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
