#include "incolor/colorers.hpp"
#include "incolor/errors.hpp"
#include "incolor/generate.hpp"
#include "incolor/latin.hpp"
#include "incolor/oracle.hpp"
#include "incolor/outerplanar.hpp"
#include "incolor/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using nlohmann::json;
using namespace incolor;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUnsupported = 2, kBadInput = 3, kBudget = 4 };

std::string read_all(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << text;
    if (!text.empty() && text.back() != '\n') {
        out << '\n';
    }
}

json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("edges") ||
        !doc["edges"].is_array()) {
        throw InputError("embedded graph must have integer \"n\" and array \"edges\"");
    }
    std::vector<Edge> edges;
    for (const json& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("embedded graph edges must be pairs of integers");
        }
        edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Graph::from_edges(doc["n"].get<Vertex>(), edges);
}

// ---------------------------------------------------------------------------

struct ColorOptions {
    int d = 1;
    std::string in;
    std::string out;
    bool one_based = false;
    bool dot = false;
};

int run_color(const ColorOptions& o)
{
    const Graph g = load_graph(read_all(o.in));
    const DefectiveColoringResult r = color(g, o.d);
    if (o.dot) {
        write_all(o.out, to_dot(g, &r.coloring, o.one_based));
        return kOk;
    }
    json doc = json::parse(coloring_to_json(g, r.coloring, o.one_based));
    doc["d"] = r.d_claimed;
    doc["method"] = r.method;
    doc["optimal"] = r.proven_optimal;
    doc["one_based"] = o.one_based;
    doc["graph"] = graph_to_json(g);
    write_all(o.out, doc.dump(2));
    return kOk;
}

struct VerifyOptions {
    int d = 1;
    int conditional = 0;
    std::string in;
    std::string graph;
    std::string out;
    bool one_based = false;
};

int run_verify(const VerifyOptions& o)
{
    const std::string text = read_all(o.in);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("coloring JSON: ") + e.what());
    }
    Graph g;
    if (!o.graph.empty()) {
        g = load_graph(read_all(o.graph));
    } else if (doc.is_object() && doc.contains("graph")) {
        g = graph_from_json(doc["graph"]);
    } else {
        throw InputError("no graph: pass --graph or verify a document produced by 'color'");
    }
    bool one_based = o.one_based;
    if (doc.is_object() && doc.contains("one_based") && doc["one_based"].is_boolean()) {
        one_based = one_based || doc["one_based"].get<bool>();
    }
    const IncidenceColoring c = coloring_from_json(g, text, one_based);
    const VerificationReport report =
        o.conditional > 0 ? check_conditional(g, c, o.conditional) : check_defective(g, c, o.d);
    json out = json::parse(report_to_json(report));
    out["mode"] = o.conditional > 0 ? "conditional" : "defective";
    if (o.conditional > 0) {
        out["palette"] = o.conditional;
    } else {
        out["d"] = o.d;
    }
    if (const auto def = defect_of(g, c)) {
        out["defect"] = *def;
    } else {
        out["defect"] = nullptr;
    }
    write_all(o.out, out.dump(2));
    return report.valid() ? kOk : kInvalid;
}

struct ChromaticOptions {
    int d = 1;
    int kmax = 0;
    std::string in;
    std::uint64_t budget = kDefaultNodeBudget;
};

int run_chromatic(const ChromaticOptions& o)
{
    const Graph g = load_graph(read_all(o.in));
    const int kmax = o.kmax > 0 ? o.kmax : static_cast<int>(std::max<std::size_t>(1, g.incidence_count()));
    SearchStats stats;
    json doc{{"d", o.d}, {"kmax", kmax}};
    int code = kOk;
    try {
        const auto k = exact_defective_chromatic(g, o.d, kmax, o.budget, &stats);
        doc["value"] = k ? json(*k) : json(nullptr);
    } catch (const BudgetExceeded& e) {
        std::cerr << "incolor: " << e.what() << '\n';
        doc["value"] = nullptr;
        code = kBudget;
    }
    doc["stats"] = json::parse(stats_to_json(stats));
    write_all("", doc.dump(2));
    return code;
}

int run_latin(std::size_t n, const std::string& check)
{
    if (!check.empty()) {
        const LatinSquare l = latin_from_text(read_all(check));
        const auto all = find_intercalates(l, false);
        const auto principal = find_intercalates(l, true);
        json doc{{"order", l.order()},
                 {"latin", true},
                 {"diagonal_constant", l.diagonal_constant()},
                 {"intercalates", all.size()},
                 {"principal_intercalates", principal.size()}};
        write_all("", doc.dump(2));
        return kOk;
    }
    write_all("", latin_to_text(latin_square_no_principal(n)));
    return kOk;
}

int run_inspect(const std::string& what, unsigned jobs)
{
    if (what == "t1") {
        const InspectionReport r = reducibility_inspection(jobs);
        write_all("", inspection_to_json(r, 2));
        return r.residual.empty() ? kOk : kInvalid;
    }
    json cases = json::array();
    for (int c = 1; c <= 4; ++c) {
        for (int d = 1; d <= 4; ++d) {
            if (c == d) {
                continue;
            }
            const auto t = t2_table(c, d);
            cases.push_back({{"c", c}, {"d", d}, {"t", t ? json(*t) : json(nullptr)}});
        }
    }
    write_all("", json{{"cases", cases}}.dump(2));
    return kOk;
}

struct GenOptions {
    std::string kind;
    std::vector<Vertex> sizes;
    std::uint64_t seed = 1;
    double p = 0.5;
    std::size_t max_degree = 0;
    std::string out;
};

int run_gen(const GenOptions& o)
{
    const auto need = [&](std::size_t count) {
        if (o.sizes.size() != count) {
            throw InputError("gen " + o.kind + " takes " + std::to_string(count) + " size argument(s)");
        }
    };
    Graph g;
    if (o.kind == "path") {
        need(1);
        g = make_path(o.sizes[0]);
    } else if (o.kind == "cycle") {
        need(1);
        g = make_cycle(o.sizes[0]);
    } else if (o.kind == "star") {
        need(1);
        g = make_star(o.sizes[0]);
    } else if (o.kind == "complete") {
        need(1);
        g = make_complete(o.sizes[0]);
    } else if (o.kind == "complete-bipartite") {
        need(2);
        g = make_complete_bipartite(o.sizes[0], o.sizes[1]);
    } else if (o.kind == "tree") {
        need(1);
        g = make_random_tree(o.sizes[0], o.seed);
    } else if (o.kind == "fan") {
        need(1);
        g = make_fan(o.sizes[0]);
    } else if (o.kind == "maximal-outerplanar") {
        need(1);
        g = make_random_maximal_outerplanar(o.sizes[0], o.seed);
    } else if (o.kind == "outerplanar") {
        need(1);
        g = make_random_outerplanar(o.sizes[0], o.p, o.seed);
    } else if (o.kind == "petersen") {
        need(0);
        g = make_petersen();
    } else if (o.kind == "obstruction") {
        need(0);
        g = make_obstruction_h();
    } else {
        throw InputError("unknown graph kind '" + o.kind + "'");
    }
    if (o.max_degree > 0) {
        g = trim_max_degree(g, o.max_degree, o.seed);
    }
    write_all(o.out, to_edge_list(g));
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Optimal defective incidence colorings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "incolor 0.1.0");

    ColorOptions color_opts;
    auto* color_cmd = app.add_subcommand("color", "Colour a graph and print the coloring as JSON");
    color_cmd->add_option("--d", color_opts.d, "Defect bound")->check(CLI::PositiveNumber);
    color_cmd->add_option("--in", color_opts.in, "Edge-list input (default stdin)");
    color_cmd->add_option("--out", color_opts.out, "Output file (default stdout)");
    color_cmd->add_flag("--one-based", color_opts.one_based, "Print colours as 1..k");
    color_cmd->add_flag("--dot", color_opts.dot, "Print Graphviz instead of JSON");

    VerifyOptions verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring; exit 0 iff valid");
    verify_cmd->add_option("--d", verify_opts.d, "Defect bound")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--conditional", verify_opts.conditional, "Check the conditional rules for this palette")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--in", verify_opts.in, "Coloring JSON (default stdin)");
    verify_cmd->add_option("--graph", verify_opts.graph, "Edge-list file (default: graph embedded in the JSON)");
    verify_cmd->add_option("--out", verify_opts.out, "Report file (default stdout)");
    verify_cmd->add_flag("--one-based", verify_opts.one_based, "Colours in the input are 1..k");

    ChromaticOptions chrom_opts;
    auto* chrom_cmd = app.add_subcommand("chromatic", "Exact defective incidence chromatic number");
    chrom_cmd->add_option("--d", chrom_opts.d, "Defect bound")->check(CLI::NonNegativeNumber);
    chrom_cmd->add_option("--kmax", chrom_opts.kmax, "Largest palette to try")->check(CLI::PositiveNumber);
    chrom_cmd->add_option("--in", chrom_opts.in, "Edge-list input (default stdin)");
    chrom_cmd->add_option("--budget", chrom_opts.budget, "Node budget per palette size");

    std::size_t latin_n = 0;
    std::string latin_check;
    auto* latin_cmd = app.add_subcommand("latin", "Latin square of order N without principal intercalates");
    auto* latin_n_opt = latin_cmd->add_option("n", latin_n, "Order")->check(CLI::PositiveNumber);
    auto* latin_check_opt = latin_cmd->add_option("--check", latin_check, "Report on the square in FILE");
    latin_n_opt->excludes(latin_check_opt);

    std::string inspect_what;
    unsigned jobs = 1;
    auto* inspect_cmd = app.add_subcommand("inspect", "Reproduce the T1 inspection or list the T2 table");
    inspect_cmd->add_option("what", inspect_what, "t1 or t2")->required()->check(CLI::IsMember({"t1", "t2"}));
    inspect_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 64u));

    GenOptions gen_opts;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
    gen_cmd->add_option("kind", gen_opts.kind,
                        "path|cycle|star|complete|complete-bipartite|tree|fan|maximal-outerplanar|outerplanar|"
                        "petersen|obstruction")
        ->required();
    gen_cmd->add_option("sizes", gen_opts.sizes, "Size arguments");
    gen_cmd->add_option("--seed", gen_opts.seed, "Random seed");
    gen_cmd->add_option("--p", gen_opts.p, "Chord deletion probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--max-degree", gen_opts.max_degree, "Trim to this maximum degree");
    gen_cmd->add_option("--out", gen_opts.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*color_cmd) {
            return run_color(color_opts);
        }
        if (*verify_cmd) {
            return run_verify(verify_opts);
        }
        if (*chrom_cmd) {
            return run_chromatic(chrom_opts);
        }
        if (*latin_cmd) {
            if (latin_check.empty() && latin_n == 0) {
                throw InputError("latin needs an order N or --check FILE");
            }
            return run_latin(latin_n, latin_check);
        }
        if (*inspect_cmd) {
            return run_inspect(inspect_what, jobs);
        }
        if (*gen_cmd) {
            return run_gen(gen_opts);
        }
    } catch (const InputError& e) {
        std::cerr << "incolor: " << e.what() << '\n';
        return kBadInput;
    } catch (const UnsupportedGraph& e) {
        std::cerr << "incolor: unsupported graph: " << e.what() << '\n';
        return kUnsupported;
    } catch (const BudgetExceeded& e) {
        std::cerr << "incolor: budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const InternalError& e) {
        std::cerr << "incolor: internal error: " << e.what() << '\n';
        return kInvalid;
    }
    return kBadInput;
}
