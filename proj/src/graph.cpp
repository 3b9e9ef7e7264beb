#include "cycount/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cycount {

namespace {

bool is_integral_weight(double w) {
    return std::isfinite(w) && std::nearbyint(w) == w && std::abs(w) <= 9007199254740992.0;
}

}  // namespace

Graph Graph::build(int n_vertices, bool directed,
                   std::vector<std::tuple<int, int, double, long long>> edges,
                   std::vector<std::string> names) {
    Graph g;
    g.n_ = n_vertices;
    g.directed_ = directed;
    g.out_.assign(n_vertices, {});
    if (directed) g.in_.assign(n_vertices, {});

    // Collapse parallel edges: first weight wins, multiplicities sum.
    std::map<std::pair<int, int>, Edge> collapsed;
    for (auto& [u, v, w, mult] : edges) {
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
            throw std::invalid_argument("Graph::build: vertex id out of range");
        int a = u, b = v;
        if (!directed && a > b) std::swap(a, b);
        auto [it, fresh] = collapsed.try_emplace({a, b}, Edge{b, w, mult});
        if (!fresh) it->second.multiplicity += mult;
    }

    for (auto& [key, e] : collapsed) {
        auto [u, v] = key;
        g.out_[u].push_back(Edge{v, e.weight, e.multiplicity});
        if (directed) {
            g.in_[v].push_back(Edge{u, e.weight, e.multiplicity});
        } else if (u != v) {
            g.out_[v].push_back(Edge{u, e.weight, e.multiplicity});
        }
        if (e.weight != 1.0) g.has_weights_ = true;
        if (!is_integral_weight(e.weight)) g.integral_weights_ = false;
    }
    g.m_ = static_cast<std::int64_t>(collapsed.size());

    for (auto& adj : g.out_) std::sort(adj.begin(), adj.end(), [](const Edge& a, const Edge& b) { return a.to < b.to; });
    for (auto& adj : g.in_) std::sort(adj.begin(), adj.end(), [](const Edge& a, const Edge& b) { return a.to < b.to; });

    if (names.empty()) {
        g.names_.resize(n_vertices);
        for (int v = 0; v < n_vertices; ++v) g.names_[v] = std::to_string(v);
    } else {
        if (static_cast<int>(names.size()) != n_vertices)
            throw std::invalid_argument("Graph::build: names size mismatch");
        g.names_ = std::move(names);
    }

    // Undirected-version degree: distinct neighbors over both directions,
    // self-loops counted once.
    std::vector<int> stamp(n_vertices, -1);
    for (int v = 0; v < n_vertices; ++v) {
        int deg = 0;
        auto visit = [&](int u) {
            if (stamp[u] != v) {
                stamp[u] = v;
                ++deg;
            }
        };
        for (const Edge& e : g.out_[v]) visit(e.to);
        if (directed)
            for (const Edge& e : g.in_[v]) visit(e.to);
        g.max_degree_undir_ = std::max(g.max_degree_undir_, deg);
    }
    return g;
}

double Graph::weight(int u, int v) const {
    for (const Edge& e : out_[u])
        if (e.to == v) return e.weight;
    return 0.0;
}

bool Graph::has_edge(int u, int v) const {
    const auto& adj = out_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Edge& e, int t) { return e.to < t; });
    return it != adj.end() && it->to == v;
}

long long Graph::multiplicity(int u, int v) const {
    for (const Edge& e : out_[u])
        if (e.to == v) return e.multiplicity;
    return 0;
}

void Graph::attach_labels(std::vector<int> labels, std::vector<std::string> alphabet) {
    if (static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("attach_labels: one label per vertex required");
    for (int l : labels)
        if (l < 0 || l >= static_cast<int>(alphabet.size()))
            throw std::invalid_argument("attach_labels: label id out of range");
    labels_ = std::move(labels);
    alphabet_ = std::move(alphabet);
}

int Graph::vertex_by_name(const std::string& name) const {
    for (int v = 0; v < n_; ++v)
        if (names_[v] == name) return v;
    return -1;
}

namespace {

struct ParsedLine {
    std::vector<std::string> tokens;
    int number = 0;
};

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream s;
    s << origin << ":" << line << ": " << msg;
    throw std::runtime_error(s.str());
}

double parse_number(const std::string& tok, const std::string& origin, int line) {
    std::size_t pos = 0;
    double val = 0;
    try {
        val = std::stod(tok, &pos);
    } catch (const std::exception&) {
        parse_fail(origin, line, "expected a number, got '" + tok + "'");
    }
    if (pos != tok.size()) parse_fail(origin, line, "expected a number, got '" + tok + "'");
    return val;
}

}  // namespace

Graph parse_graph(std::istream& input, const LoadOptions& opts, const std::string& origin) {
    FileFormat format = opts.format;
    std::vector<ParsedLine> lines;
    std::string raw;
    int lineno = 0;
    bool saw_percent = false;
    while (std::getline(input, raw)) {
        ++lineno;
        std::string line = raw;
        if (!line.empty() && line.front() == '%') {
            saw_percent = true;
            continue;
        }
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        ParsedLine pl;
        pl.number = lineno;
        std::string tok;
        while (ss >> tok) pl.tokens.push_back(tok);
        if (!pl.tokens.empty()) lines.push_back(std::move(pl));
    }
    if (format == FileFormat::Auto)
        format = saw_percent ? FileFormat::Konect : FileFormat::EdgeList;

    std::unordered_map<std::string, int> ids;
    std::vector<std::string> names;
    auto intern = [&](const std::string& tok) {
        auto [it, fresh] = ids.try_emplace(tok, static_cast<int>(names.size()));
        if (fresh) names.push_back(tok);
        return it->second;
    };

    std::vector<std::tuple<int, int, double, long long>> edges;
    for (const ParsedLine& pl : lines) {
        const auto& t = pl.tokens;
        if (t.size() < 2) parse_fail(origin, pl.number, "expected at least two vertex tokens");
        if (format == FileFormat::EdgeList && t.size() > 3)
            parse_fail(origin, pl.number, "expected 'u v [w]'");
        int u = intern(t[0]);
        int v = intern(t[1]);
        double w = 1.0;
        long long mult = 1;
        if (t.size() >= 3) {
            double col3 = parse_number(t[2], origin, pl.number);
            if (opts.use_weights) {
                w = col3;
            } else if (format == FileFormat::Konect) {
                double r = std::nearbyint(col3);
                mult = (r == col3 && r >= 1.0) ? static_cast<long long>(r) : 1;
            }
        }
        edges.emplace_back(u, v, w, mult);
    }
    int n = static_cast<int>(names.size());
    return Graph::build(n, opts.directed, std::move(edges), std::move(names));
}

Graph load_graph(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in, opts, path);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (int u = 0; u < g.n_vertices(); ++u) {
        for (const Edge& e : g.out(u)) {
            if (!g.directed() && e.to < u) continue;  // each logical edge once
            out << g.name(u) << ' ' << g.name(e.to);
            if (g.has_weights()) out << ' ' << e.weight;
            out << '\n';
        }
    }
}

void load_labels(Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open labels file: " + path);
    std::unordered_map<std::string, int> alphabet_ids;
    std::vector<std::string> alphabet;
    std::vector<int> labels(g.n_vertices(), -1);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string vtok, ltok, extra;
        if (!(ss >> vtok)) continue;
        if (!(ss >> ltok) || (ss >> extra)) parse_fail(path, lineno, "expected 'vertex label'");
        int v = g.vertex_by_name(vtok);
        if (v < 0) parse_fail(path, lineno, "unknown vertex '" + vtok + "'");
        auto [it, fresh] = alphabet_ids.try_emplace(ltok, static_cast<int>(alphabet.size()));
        if (fresh) alphabet.push_back(ltok);
        labels[v] = it->second;
    }
    for (int v = 0; v < g.n_vertices(); ++v)
        if (labels[v] < 0)
            throw std::runtime_error(path + ": vertex '" + g.name(v) + "' has no label");
    g.attach_labels(std::move(labels), std::move(alphabet));
}

PreprocessResult preprocess(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<int> out_deg(n), in_deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) {
        out_deg[v] = g.out_degree(v);
        in_deg[v] = g.in_degree(v);
    }
    std::vector<int> queue;
    auto dead = [&](int v) {
        return g.directed() ? (out_deg[v] == 0 || in_deg[v] == 0) : out_deg[v] == 0;
    };
    for (int v = 0; v < n; ++v)
        if (dead(v)) {
            removed[v] = true;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (const Edge& e : g.out(v)) {
            if (removed[e.to]) continue;
            --in_deg[e.to];
            if (!g.directed()) --out_deg[e.to];
            if (dead(e.to)) {
                removed[e.to] = true;
                queue.push_back(e.to);
            }
        }
        if (g.directed()) {
            for (const Edge& e : g.in(v)) {
                if (removed[e.to]) continue;
                --out_deg[e.to];
                if (dead(e.to)) {
                    removed[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
    }

    PreprocessResult res;
    std::vector<int> new_id(n, -1);
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        new_id[v] = static_cast<int>(res.kept.size());
        res.kept.push_back(v);
        names.push_back(g.name(v));
    }
    std::vector<std::tuple<int, int, double, long long>> edges;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        for (const Edge& e : g.out(v)) {
            if (removed[e.to]) continue;
            if (!g.directed() && e.to < v) continue;
            edges.emplace_back(new_id[v], new_id[e.to], e.weight, e.multiplicity);
        }
    }
    res.graph = Graph::build(static_cast<int>(res.kept.size()), g.directed(),
                             std::move(edges), std::move(names));
    if (g.labeled()) {
        std::vector<int> labels;
        labels.reserve(res.kept.size());
        for (int old : res.kept) labels.push_back(g.label(old));
        res.graph.attach_labels(std::move(labels), g.alphabet());
    }
    return res;
}

Graph undirected_version(const Graph& g) {
    std::vector<std::tuple<int, int, double, long long>> edges;
    for (int u = 0; u < g.n_vertices(); ++u)
        for (const Edge& e : g.out(u))
            if (g.directed() || e.to >= u)
                edges.emplace_back(u, e.to, 1.0, 1);
    return Graph::build(g.n_vertices(), false, std::move(edges), g.names());
}

bool DenseMatrix::integral() const {
    for (double x : a)
        if (!is_integral_weight(x)) return false;
    return true;
}

DenseMatrix induced_dense(const Graph& g, std::span<const int> vertices) {
    const int m = static_cast<int>(vertices.size());
    if (m < 1) throw std::invalid_argument("induced_dense: empty vertex set");
    for (int i = 0; i < m; ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.n_vertices())
            throw std::invalid_argument("induced_dense: vertex out of range");
        if (i > 0 && vertices[i - 1] >= vertices[i])
            throw std::invalid_argument("induced_dense: vertices must be sorted and distinct");
    }
    DenseMatrix d(m);
    for (int i = 0; i < m; ++i) {
        for (const Edge& e : g.out(vertices[i])) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), e.to);
            if (it == vertices.end() || *it != e.to) continue;
            int j = static_cast<int>(it - vertices.begin());
            d.at(i, j) = e.weight;
            if (!g.directed()) d.at(j, i) = e.weight;
        }
    }
    return d;
}

}  // namespace cycount
