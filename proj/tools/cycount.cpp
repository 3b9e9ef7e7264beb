// Command line front end: cycle/path counting via the connected induced
// subgraph sieve, enumeration and brute-force baselines, and the benchmark
// utilities (random graphs, crossover sweeps, growth fits, pruning).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycount/baselines.hpp"
#include "cycount/bench.hpp"
#include "cycount/graph.hpp"
#include "cycount/labeled.hpp"
#include "cycount/sieve.hpp"
#include "cycount/subgraph_enum.hpp"

namespace {

using cycount::Graph;
using json = nlohmann::ordered_json;

struct InputOptions {
    std::string path;
    std::string labels_path;
    bool directed = false;
    bool use_weights = false;
    std::string format = "auto";
};

struct OutputOptions {
    std::string json_path;
    bool no_timing = false;
};

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void add_input_options(CLI::App* cmd, InputOptions& in, bool with_labels = false) {
    cmd->add_option("input", in.path, "graph file, or - for stdin")->required();
    cmd->add_flag("-d,--directed", in.directed, "treat edges as directed arcs");
    cmd->add_flag("-w,--weights", in.use_weights, "read the third column as edge weight");
    cmd->add_option("--fmt", in.format, "input format: auto, edgelist, konect")
        ->check(CLI::IsMember({"auto", "edgelist", "konect"}));
    if (with_labels)
        cmd->add_option("--labels", in.labels_path, "vertex label file (vertex<TAB>label lines)");
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--json", out.json_path, "write a JSON report to this file");
    cmd->add_flag("--no-timing", out.no_timing,
                  "omit timing from reports, making reruns byte-identical");
}

Graph load_input(const InputOptions& in) {
    cycount::LoadOptions opts;
    opts.directed = in.directed;
    opts.use_weights = in.use_weights;
    if (in.format == "edgelist") opts.format = cycount::FileFormat::EdgeList;
    if (in.format == "konect") opts.format = cycount::FileFormat::Konect;
    Graph g = in.path == "-" ? cycount::parse_graph(std::cin, opts, "<stdin>")
                             : cycount::load_graph(in.path, opts);
    if (!in.labels_path.empty()) cycount::load_labels(g, in.labels_path);
    return g;
}

int vertex_or_throw(const Graph& g, const std::string& name, const char* what) {
    int v = g.vertex_by_name(name);
    if (v < 0) throw std::runtime_error(std::string(what) + ": unknown vertex '" + name + "'");
    return v;
}

std::string fmt_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

json series_json(const cycount::CountSeries& s) {
    json arr = json::array();
    for (int k = 1; k <= s.ell; ++k) arr.push_back(s.str_at(k));
    return arr;
}

json condition_json(const cycount::CountSeries& s) {
    json arr = json::array();
    for (double c : s.condition) arr.push_back(fmt_double(c));
    return arr;
}

void finish_report(json& report, const OutputOptions& out, double started_ms) {
    if (out.json_path.empty()) return;
    if (!out.no_timing) report["timing_ms"] = now_ms() - started_ms;
    std::ofstream f(out.json_path);
    if (!f) throw std::runtime_error("cannot write " + out.json_path);
    f << report.dump(2) << '\n';
}

void graph_header(json& report, const Graph& g) {
    report["n"] = g.n_vertices();
    report["m"] = static_cast<std::int64_t>(g.edge_count());
    report["directed"] = g.directed();
}

void print_series(const char* label, const cycount::CountSeries& s) {
    for (int k = 1; k <= s.ell; ++k)
        std::printf("%s(%d) = %s\n", label, k, s.str_at(k).c_str());
    if (!s.exact) {
        std::printf("# approximate (non-integral weights); condition estimates:");
        for (double c : s.condition) std::printf(" %s", fmt_double(c).c_str());
        std::printf("\n");
    }
    if (s.truncated)
        std::printf("# note: bound exceeds the longest possible object; tail is zero\n");
}

// ---------------------------------------------------------------------------

int run_cycles(const InputOptions& in, const OutputOptions& out, int ell,
               const std::string& root_name, bool verify, bool preprocess) {
    double t0 = now_ms();
    Graph g = load_input(in);
    json report;
    report["command"] = "cycles";
    graph_header(report, g);
    report["ell"] = ell;

    bool root_removed = false;
    int root = -1;
    if (!root_name.empty()) root = vertex_or_throw(g, root_name, "--root");
    if (preprocess) {
        cycount::PreprocessResult red = cycount::preprocess(g);
        report["preprocessed_n"] = red.graph.n_vertices();
        std::printf("# reduced: %d of %d vertices remain\n", red.graph.n_vertices(),
                    g.n_vertices());
        g = std::move(red.graph);
        if (root >= 0) {
            root = g.vertex_by_name(root_name);
            root_removed = root < 0;
        }
    }

    if (!root_name.empty()) {
        report["root"] = root_name;
        cycount::RootedCycleCounts r;
        if (root_removed) {
            // the reduction only deletes vertices that lie on no cycle
            r.gamma.ell = ell;
            r.gamma.exact_values.assign(static_cast<std::size_t>(ell), cycount::BigInt(0));
        } else {
            r = cycount::count_cycles_through(g, root, ell);
        }
        print_series("gamma_root", r.gamma);
        report["exact"] = r.gamma.exact;
        report["truncated"] = r.gamma.truncated;
        report["gamma_root"] = series_json(r.gamma);
        if (!r.gamma.exact) report["condition"] = condition_json(r.gamma);
        finish_report(report, out, t0);
        return 0;
    }

    cycount::CycleCounts c = cycount::count_cycles(g, ell);
    print_series("gamma", c.gamma);
    report["exact"] = c.gamma.exact;
    report["truncated"] = c.gamma.truncated;
    report["gamma"] = series_json(c.gamma);
    if (!c.gamma.exact) report["condition"] = condition_json(c.gamma);

    if (verify) {
        cycount::ConsistencyReport rep = cycount::verify_consistency(g, ell);
        std::printf("consistency (rooted sums vs totals): %s\n", rep.pass ? "pass" : "FAIL");
        report["consistency_pass"] = rep.pass;
        if (!rep.pass) {
            finish_report(report, out, t0);
            return 1;
        }
    }
    finish_report(report, out, t0);
    return 0;
}

int run_paths(const InputOptions& in, const OutputOptions& out, int ell,
              const std::string& from_name, const std::string& to_name) {
    double t0 = now_ms();
    Graph g = load_input(in);
    int from = vertex_or_throw(g, from_name, "--from");
    int to = vertex_or_throw(g, to_name, "--to");
    cycount::PathCounts p = cycount::count_paths(g, from, to, ell);
    print_series("pi", p.pi);
    json report;
    report["command"] = "paths";
    graph_header(report, g);
    report["ell"] = ell;
    report["from"] = from_name;
    report["to"] = to_name;
    report["exact"] = p.pi.exact;
    report["truncated"] = p.pi.truncated;
    report["pi"] = series_json(p.pi);
    if (!p.pi.exact) report["condition"] = condition_json(p.pi);
    finish_report(report, out, t0);
    return 0;
}

json sequences_json(const Graph& g, const cycount::LabelSequenceCounts& seqs) {
    json arr = json::array();
    for (int k = 1; k <= seqs.ell; ++k) {
        for (const cycount::WordCount& wc : seqs.by_length[static_cast<std::size_t>(k - 1)]) {
            json row;
            row["length"] = k;
            row["sequence"] = cycount::render_word(g, wc.word);
            row["count"] = wc.count.get_str();
            arr.push_back(row);
        }
    }
    return arr;
}

void print_sequences(const Graph& g, const cycount::LabelSequenceCounts& seqs,
                     const char* label) {
    for (int k = 1; k <= seqs.ell; ++k) {
        for (const cycount::WordCount& wc : seqs.by_length[static_cast<std::size_t>(k - 1)])
            std::printf("%s(%d) %s = %s\n", label, k, cycount::render_word(g, wc.word).c_str(),
                        wc.count.get_str().c_str());
    }
}

int run_labeled_cycles(const InputOptions& in, const OutputOptions& out, int ell) {
    double t0 = now_ms();
    Graph g = load_input(in);
    cycount::LabelSequenceCounts seqs = cycount::labeled_cycle_sequences(g, ell);
    print_sequences(g, seqs, "gamma");
    json report;
    report["command"] = "labeled-cycles";
    graph_header(report, g);
    report["ell"] = ell;
    report["sequences"] = sequences_json(g, seqs);
    finish_report(report, out, t0);
    return 0;
}

int run_labeled_paths(const InputOptions& in, const OutputOptions& out, int ell,
                      const std::string& from_name, const std::string& to_name) {
    double t0 = now_ms();
    Graph g = load_input(in);
    int from = vertex_or_throw(g, from_name, "--from");
    int to = vertex_or_throw(g, to_name, "--to");
    cycount::LabelSequenceCounts seqs = cycount::labeled_path_sequences(g, from, to, ell);
    print_sequences(g, seqs, "pi");
    json report;
    report["command"] = "labeled-paths";
    graph_header(report, g);
    report["ell"] = ell;
    report["from"] = from_name;
    report["to"] = to_name;
    report["sequences"] = sequences_json(g, seqs);
    finish_report(report, out, t0);
    return 0;
}

json census_json(const cycount::LengthCensus& census) {
    json obj;
    json counts = json::array();
    for (std::uint64_t c : census.count) counts.push_back(std::to_string(c));
    obj["count"] = counts;
    json weights = json::array();
    if (census.exact)
        for (const cycount::BigInt& w : census.weight) weights.push_back(w.get_str());
    else
        for (double w : census.weight_approx) weights.push_back(fmt_double(w));
    obj["weight"] = weights;
    return obj;
}

void print_census(const cycount::LengthCensus& census, const char* what) {
    for (int k = 1; k <= census.ell; ++k) {
        std::string w = census.exact
                            ? census.weight[static_cast<std::size_t>(k - 1)].get_str()
                            : fmt_double(census.weight_approx[static_cast<std::size_t>(k - 1)]);
        std::printf("%s(%d): count = %llu, weight = %s\n", what, k,
                    static_cast<unsigned long long>(census.count[static_cast<std::size_t>(k - 1)]),
                    w.c_str());
    }
    std::printf("total = %llu\n", static_cast<unsigned long long>(census.total()));
}

int run_list_cycles(const InputOptions& in, const OutputOptions& out, int ell, bool print,
                    std::uint64_t print_limit, bool preprocess) {
    double t0 = now_ms();
    Graph g = load_input(in);
    if (preprocess) g = cycount::preprocess(g).graph;
    std::uint64_t printed = 0;
    cycount::LengthCensus tallies = cycount::enumeration_cycle_counts(g, ell);
    if (print) {
        cycount::enumerate_cycles_capped(g, ell, [&](std::span<const int> seq) {
            if (printed >= print_limit) return;
            ++printed;
            std::string line;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i) line += ' ';
                line += g.name(seq[i]);
            }
            std::printf("%s\n", line.c_str());
        });
    }
    print_census(tallies, "cycles");
    json report;
    report["command"] = "list-cycles";
    graph_header(report, g);
    report["ell"] = ell;
    report["census"] = census_json(tallies);
    report["total"] = std::to_string(tallies.total());
    finish_report(report, out, t0);
    return 0;
}

int run_oracle(const InputOptions& in, const OutputOptions& out, int ell,
               const std::string& from_name, const std::string& to_name) {
    double t0 = now_ms();
    Graph g = load_input(in);
    json report;
    report["command"] = "oracle";
    graph_header(report, g);
    report["ell"] = ell;
    if (!from_name.empty() || !to_name.empty()) {
        if (from_name.empty() || to_name.empty())
            throw std::runtime_error("oracle: --from and --to must be given together");
        int from = vertex_or_throw(g, from_name, "--from");
        int to = vertex_or_throw(g, to_name, "--to");
        cycount::LengthCensus census = cycount::brute_force_path_counts(g, from, to, ell);
        print_census(census, "paths");
        report["from"] = from_name;
        report["to"] = to_name;
        report["census"] = census_json(census);
    } else {
        cycount::LengthCensus census = cycount::brute_force_cycle_counts(g, ell);
        print_census(census, "cycles");
        report["census"] = census_json(census);
    }
    finish_report(report, out, t0);
    return 0;
}

int run_subgraphs(const InputOptions& in, const OutputOptions& out, int bound) {
    double t0 = now_ms();
    Graph g = load_input(in);
    std::vector<std::uint64_t> by_size = cycount::count_connected_induced(g, bound);
    std::uint64_t total = 0;
    for (std::size_t h = 0; h < by_size.size(); ++h) {
        std::printf("size %zu: %llu\n", h + 1, static_cast<unsigned long long>(by_size[h]));
        total += by_size[h];
    }
    std::printf("total = %llu\n", static_cast<unsigned long long>(total));
    json report;
    report["command"] = "subgraphs";
    graph_header(report, g);
    report["bound"] = bound;
    json arr = json::array();
    for (std::uint64_t c : by_size) arr.push_back(std::to_string(c));
    report["by_size"] = arr;
    finish_report(report, out, t0);
    return 0;
}

int run_gen_er(const OutputOptions& out, int n, double p, std::uint64_t seed, bool directed,
               const std::string& out_path) {
    double t0 = now_ms();
    Graph g = cycount::gen_er(n, p, seed, directed);
    if (out_path.empty() || out_path == "-") {
        cycount::write_edge_list(g, std::cout);
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        cycount::write_edge_list(g, f);
    }
    json report;
    report["command"] = "gen-er";
    graph_header(report, g);
    report["p"] = p;
    report["seed"] = seed;
    finish_report(report, out, t0);
    return 0;
}

int run_sweep(const OutputOptions& out, std::vector<int> ns, double p_min, double p_max,
              double p_step, int reps, int streak, int ell, std::uint64_t seed) {
    double t0 = now_ms();
    if (p_step <= 0 || p_min <= 0 || p_max < p_min)
        throw std::runtime_error("sweep: need 0 < p-min <= p-max and positive p-step");
    std::vector<double> ps;
    for (double p = p_min; p <= p_max + 1e-12; p += p_step) ps.push_back(std::min(p, 1.0));

    json report;
    report["command"] = "sweep-pc";
    json per_n = json::array();
    std::vector<double> fit_ns, fit_pcs;
    for (int n : ns) {
        cycount::SweepOptions opts;
        opts.reps = reps;
        opts.streak = streak;
        opts.ell = ell;
        opts.seed = seed;
        cycount::SweepResult res = cycount::sweep_crossover(n, ps, opts);
        json jn;
        jn["n"] = n;
        jn["ell"] = res.ell;
        jn["conclusive"] = res.conclusive;
        jn["crossover_p"] = res.conclusive ? json(res.crossover_p) : json(nullptr);
        json pts = json::array();
        for (const cycount::SweepPoint& pt : res.points) {
            json jp;
            jp["p"] = pt.p;
            jp["sieve_ms"] = pt.sieve_ms;
            jp["enum_ms"] = pt.enum_ms;
            jp["mean_cycles"] = pt.mean_cycles;
            jp["sieve_wins"] = pt.sieve_wins;
            pts.push_back(jp);
        }
        jn["points"] = pts;
        per_n.push_back(jn);
        if (res.conclusive) {
            fit_ns.push_back(n);
            fit_pcs.push_back(res.crossover_p);
            std::printf("n = %d: crossover p = %.4f (%zu points timed)\n", n, res.crossover_p,
                        res.points.size());
        } else {
            std::printf("n = %d: inconclusive over [%g, %g]\n", n, p_min, p_max);
        }
    }
    report["sweeps"] = per_n;
    if (fit_ns.size() >= 2) {
        cycount::InverseFit fit = cycount::fit_inverse_n(fit_ns, fit_pcs);
        std::printf("fit: p_c(n) = %.6f + %.4f / n (rmse %.2e)\n", fit.a, fit.b, fit.rmse);
        json jf;
        jf["a"] = fit.a;
        jf["b"] = fit.b;
        jf["rmse"] = fit.rmse;
        report["fit"] = jf;
    }
    finish_report(report, out, t0);
    return 0;
}

int run_fit_growth(const OutputOptions& out, const std::string& path) {
    double t0 = now_ms();
    std::ifstream file;
    std::istream* is = &std::cin;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot read " + path);
        is = &file;
    }
    std::vector<int> ks;
    std::vector<double> ys;
    int k;
    double y;
    while (*is >> k >> y) {
        ks.push_back(k);
        ys.push_back(y);
    }
    cycount::GeometricFit fit = cycount::fit_geometric(ks, ys);
    std::printf("y_k = %.6g * %.9g^k + %.6g (rmse %.2e)\n", fit.scale, fit.ratio, fit.offset,
                fit.rmse);
    json report;
    report["command"] = "fit-growth";
    report["samples"] = ks.size();
    report["ratio"] = fit.ratio;
    report["scale"] = fit.scale;
    report["offset"] = fit.offset;
    report["rmse"] = fit.rmse;
    finish_report(report, out, t0);
    return 0;
}

int run_signed_split(const InputOptions& in, const OutputOptions& out, int ell) {
    double t0 = now_ms();
    Graph g = load_input(in);
    cycount::SignedSplit split = cycount::signed_cycle_split(g, ell);
    for (int k = 1; k <= ell; ++k)
        std::printf("length %d: positive = %s, negative = %s\n", k,
                    split.positive[static_cast<std::size_t>(k - 1)].get_str().c_str(),
                    split.negative[static_cast<std::size_t>(k - 1)].get_str().c_str());
    json report;
    report["command"] = "signed-split";
    graph_header(report, g);
    report["ell"] = ell;
    json pos = json::array(), neg = json::array();
    for (int k = 1; k <= ell; ++k) {
        pos.push_back(split.positive[static_cast<std::size_t>(k - 1)].get_str());
        neg.push_back(split.negative[static_cast<std::size_t>(k - 1)].get_str());
    }
    report["positive"] = pos;
    report["negative"] = neg;
    finish_report(report, out, t0);
    return 0;
}

int run_prune(const InputOptions& in, const OutputOptions& out, std::int64_t min_removed,
              const std::string& prefix) {
    double t0 = now_ms();
    Graph g = load_input(in);
    std::vector<Graph> instances = cycount::prune_by_multiplicity(g, min_removed);
    json report;
    report["command"] = "prune";
    graph_header(report, g);
    report["min_removed"] = min_removed;
    json arr = json::array();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Graph& inst = instances[i];
        std::printf("instance %zu: %d vertices, %lld edges\n", i, inst.n_vertices(),
                    static_cast<long long>(inst.edge_count()));
        json ji;
        ji["n"] = inst.n_vertices();
        ji["m"] = static_cast<std::int64_t>(inst.edge_count());
        if (!prefix.empty()) {
            std::string path = prefix + "_" + std::to_string(i) + ".tsv";
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot write " + path);
            cycount::write_edge_list(inst, f);
            ji["file"] = path;
        }
        arr.push_back(ji);
    }
    report["instances"] = arr;
    finish_report(report, out, t0);
    return 0;
}

int run_advise(const InputOptions& in, const OutputOptions& out, int ell) {
    double t0 = now_ms();
    Graph g = load_input(in);
    cycount::Advice adv = cycount::advise_algorithm(g, ell);
    const char* choice = adv.choice == cycount::Algorithm::Sieve ? "sieve" : "enumeration";
    std::printf("connected induced subgraphs (<= %d vertices): %llu\n", ell,
                static_cast<unsigned long long>(adv.subgraph_count));
    std::printf("simple cycles (length <= %d): %llu\n", ell,
                static_cast<unsigned long long>(adv.cycle_count));
    std::printf("sieve cost model: %s\n", fmt_double(adv.sieve_cost).c_str());
    std::printf("recommendation: %s\n", choice);
    json report;
    report["command"] = "advise";
    graph_header(report, g);
    report["ell"] = ell;
    report["subgraph_count"] = std::to_string(adv.subgraph_count);
    report["cycle_count"] = std::to_string(adv.cycle_count);
    report["sieve_cost"] = fmt_double(adv.sieve_cost);
    report["choice"] = choice;
    finish_report(report, out, t0);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simple cycle and path counting via the connected induced subgraph sieve"};
    app.require_subcommand(1);

    InputOptions in;
    OutputOptions out;
    int ell = 1, bound = 1;
    std::string root_name, from_name, to_name, out_path, prefix, series_path;
    bool verify = false, preprocess = false, print_list = false;
    std::uint64_t print_limit = 1000;
    int n = 10;
    double p = 0.1;
    std::uint64_t seed = 1;
    bool directed = false;
    std::vector<int> ns;
    double p_min = 0.05, p_max = 0.6, p_step = 0.025;
    int reps = 3, streak = 3, sweep_ell = 0;
    std::int64_t min_removed = 80;

    CLI::App* cycles = app.add_subcommand("cycles", "count simple cycles up to a length bound");
    add_input_options(cycles, in);
    cycles->add_option("-l,--ell", ell, "maximum cycle length")->required();
    cycles->add_option("--root", root_name, "count only cycles through this vertex");
    cycles->add_flag("--verify", verify, "cross-check totals against rooted sums");
    cycles->add_flag("--preprocess", preprocess,
                     "strip vertices that cannot lie on any cycle first");
    add_output_options(cycles, out);

    CLI::App* paths = app.add_subcommand("paths", "count simple paths between two vertices");
    add_input_options(paths, in);
    paths->add_option("-l,--ell", ell, "maximum path length (edges)")->required();
    paths->add_option("--from", from_name, "source vertex name")->required();
    paths->add_option("--to", to_name, "target vertex name")->required();
    add_output_options(paths, out);

    CLI::App* lcycles =
        app.add_subcommand("labeled-cycles", "cycle counts refined by vertex label sequence");
    add_input_options(lcycles, in, true);
    lcycles->add_option("-l,--ell", ell, "maximum cycle length")->required();
    add_output_options(lcycles, out);

    CLI::App* lpaths =
        app.add_subcommand("labeled-paths", "path counts refined by vertex label sequence");
    add_input_options(lpaths, in, true);
    lpaths->add_option("-l,--ell", ell, "maximum path length (edges)")->required();
    lpaths->add_option("--from", from_name, "source vertex name")->required();
    lpaths->add_option("--to", to_name, "target vertex name")->required();
    add_output_options(lpaths, out);

    CLI::App* lst = app.add_subcommand("list-cycles", "enumerate simple cycles (baseline)");
    add_input_options(lst, in);
    lst->add_option("-l,--ell", ell, "maximum cycle length")->required();
    lst->add_flag("--print", print_list, "print cycle vertex sequences");
    lst->add_option("--print-limit", print_limit, "maximum sequences to print");
    lst->add_flag("--preprocess", preprocess,
                  "strip vertices that cannot lie on any cycle first");
    add_output_options(lst, out);

    CLI::App* oracle =
        app.add_subcommand("oracle", "exhaustive brute-force census (small graphs)");
    add_input_options(oracle, in);
    oracle->add_option("-l,--ell", ell, "maximum length")->required();
    oracle->add_option("--from", from_name, "path source (with --to, counts paths)");
    oracle->add_option("--to", to_name, "path target");
    add_output_options(oracle, out);

    CLI::App* subs =
        app.add_subcommand("subgraphs", "census of connected induced subgraphs by size");
    add_input_options(subs, in);
    subs->add_option("-b,--bound", bound, "maximum subgraph size")->required();
    add_output_options(subs, out);

    CLI::App* gen = app.add_subcommand("gen-er", "generate a random graph (edge list output)");
    gen->add_option("-n", n, "vertex count")->required();
    gen->add_option("-p", p, "edge probability")->required();
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_flag("-d,--directed", directed, "generate a digraph");
    gen->add_option("-o,--out", out_path, "output file (default stdout)");
    add_output_options(gen, out);

    CLI::App* sweep = app.add_subcommand(
        "sweep-pc", "locate the density where the sieve overtakes enumeration");
    sweep->add_option("-n", ns, "vertex counts to sweep")->required();
    sweep->add_option("--p-min", p_min, "first density");
    sweep->add_option("--p-max", p_max, "last density");
    sweep->add_option("--p-step", p_step, "density increment");
    sweep->add_option("--reps", reps, "random graphs per density");
    sweep->add_option("--streak", streak, "consecutive sieve wins that settle the crossover");
    sweep->add_option("-l,--ell", sweep_ell, "length bound (default: n)");
    sweep->add_option("--seed", seed, "RNG seed");
    add_output_options(sweep, out);

    CLI::App* fitg = app.add_subcommand("fit-growth",
                                        "fit y_k = scale * ratio^k + offset to 'k y' lines");
    fitg->add_option("input", series_path, "series file, or - for stdin");
    add_output_options(fitg, out);

    CLI::App* split = app.add_subcommand("signed-split",
                                         "split cycle counts of a +1/-1 signed graph by sign");
    add_input_options(split, in);
    split->add_option("-l,--ell", ell, "maximum cycle length")->required();
    add_output_options(split, out);

    CLI::App* prune = app.add_subcommand(
        "prune", "nested instances by deleting low-multiplicity edges");
    add_input_options(prune, in);
    prune->add_option("--min-removed", min_removed, "minimum edges removed between instances");
    prune->add_option("--out-prefix", prefix, "write instances to PREFIX_<i>.tsv");
    add_output_options(prune, out);

    CLI::App* advise = app.add_subcommand("advise", "recommend sieve vs enumeration");
    add_input_options(advise, in);
    advise->add_option("-l,--ell", ell, "length bound")->required();
    add_output_options(advise, out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cycles->parsed()) return run_cycles(in, out, ell, root_name, verify, preprocess);
        if (paths->parsed()) return run_paths(in, out, ell, from_name, to_name);
        if (lcycles->parsed()) return run_labeled_cycles(in, out, ell);
        if (lpaths->parsed()) return run_labeled_paths(in, out, ell, from_name, to_name);
        if (lst->parsed())
            return run_list_cycles(in, out, ell, print_list, print_limit, preprocess);
        if (oracle->parsed()) return run_oracle(in, out, ell, from_name, to_name);
        if (subs->parsed()) return run_subgraphs(in, out, bound);
        if (gen->parsed()) return run_gen_er(out, n, p, seed, directed, out_path);
        if (sweep->parsed())
            return run_sweep(out, ns, p_min, p_max, p_step, reps, streak, sweep_ell, seed);
        if (fitg->parsed()) return run_fit_growth(out, series_path);
        if (split->parsed()) {
            in.use_weights = true;  // signs live in the weight column
            return run_signed_split(in, out, ell);
        }
        if (prune->parsed()) return run_prune(in, out, min_removed, prefix);
        if (advise->parsed()) return run_advise(in, out, ell);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
