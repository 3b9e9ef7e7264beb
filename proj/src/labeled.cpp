#include "cycount/labeled.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cycount/subgraph_enum.hpp"

namespace cycount {

namespace {

// Polynomial over noncommuting label symbols: word -> coefficient. Words
// concatenate under multiplication, so the matrix powers below track the
// label sequence of every walk alongside its weight.
using WordPoly = std::map<std::string, mpz_class>;

void mul_acc(WordPoly& out, const WordPoly& x, const WordPoly& y) {
    for (const auto& [wx, cx] : x) {
        if (cx == 0) continue;
        for (const auto& [wy, cy] : y) {
            if (cy == 0) continue;
            out[wx + wy] += cx * cy;
        }
    }
}

void require_labeled_exact(const Graph& g) {
    if (!g.labeled()) throw std::invalid_argument("graph has no vertex labels");
    if (!g.integral_weights())
        throw std::invalid_argument("label sequence counts require integral weights");
    if (g.alphabet().size() > 255)
        throw std::invalid_argument("label alphabet too large (max 255 symbols)");
}

struct LabeledRun {
    const Graph& g;
    int ell_eff;
    int shift;  // 0 cycles (diagonal), 1 paths (single entry)
    int from = -1, to = -1;
    std::vector<std::vector<mpz_class>>* binom_rows;
    std::vector<WordPoly> acc;  // per length k

    std::vector<WordPoly> base, cur, nxt;

    LabeledRun(const Graph& graph, int eff, int shift_) : g(graph), ell_eff(eff), shift(shift_) {
        acc.resize(static_cast<std::size_t>(eff));
    }

    const mpz_class& coef(int nh, int j) {
        auto& rows = *binom_rows;
        if (static_cast<int>(rows.size()) <= nh) rows.resize(static_cast<std::size_t>(nh) + 1);
        auto& row = rows[static_cast<std::size_t>(nh)];
        if (row.empty()) {
            row.resize(static_cast<std::size_t>(ell_eff) + 2);
            for (int i = 0; i < static_cast<int>(row.size()) && i <= nh; ++i)
                mpz_bin_uiui(row[static_cast<std::size_t>(i)].get_mpz_t(),
                             static_cast<unsigned long>(nh), static_cast<unsigned long>(i));
        }
        return row[static_cast<std::size_t>(j)];
    }

    void operator()(const SubgraphVisit& v) {
        int h = v.size();
        int nh = v.neighbor_count;
        int klo = std::max(1, h - shift);
        int khi = std::min(ell_eff, h + nh - shift);
        if (khi < klo) return;

        int m = h;
        std::size_t mm = static_cast<std::size_t>(m) * m;
        base.assign(mm, WordPoly{});
        bool any = false;
        for (int i = 0; i < m; ++i) {
            char sym = static_cast<char>(g.label(v.vertices[static_cast<std::size_t>(i)]));
            for (int j = 0; j < m; ++j) {
                double w = v.at(i, j);
                if (w == 0.0) continue;
                base[static_cast<std::size_t>(i) * m + j][std::string(1, sym)] =
                    static_cast<long>(std::llround(w));
                any = true;
            }
        }
        if (!any) return;
        cur = base;

        bool neg = (m & 1) != 0;
        int pi = -1, pj = -1;
        if (shift == 1) {
            pi = static_cast<int>(
                std::lower_bound(v.vertices.begin(), v.vertices.end(), from) -
                v.vertices.begin());
            pj = static_cast<int>(
                std::lower_bound(v.vertices.begin(), v.vertices.end(), to) - v.vertices.begin());
        }

        for (int k = 1; k <= khi; ++k) {
            if (k > 1) {
                nxt.assign(mm, WordPoly{});
                for (int i = 0; i < m; ++i)
                    for (int x = 0; x < m; ++x) {
                        const WordPoly& cx = cur[static_cast<std::size_t>(i) * m + x];
                        if (cx.empty()) continue;
                        for (int j = 0; j < m; ++j) {
                            const WordPoly& bx = base[static_cast<std::size_t>(x) * m + j];
                            if (bx.empty()) continue;
                            mul_acc(nxt[static_cast<std::size_t>(i) * m + j], cx, bx);
                        }
                    }
                cur.swap(nxt);
            }
            if (k < klo) continue;
            const mpz_class& c = coef(nh, k + shift - h);
            if (c == 0) continue;
            WordPoly& target = acc[static_cast<std::size_t>(k - 1)];
            if (shift == 0) {
                for (int i = 0; i < m; ++i)
                    for (const auto& [w, cv] : cur[static_cast<std::size_t>(i) * m + i]) {
                        if (cv == 0) continue;
                        if (neg)
                            target[w] -= c * cv;
                        else
                            target[w] += c * cv;
                    }
            } else {
                char endsym = static_cast<char>(g.label(to));
                for (const auto& [w, cv] : cur[static_cast<std::size_t>(pi) * m + pj]) {
                    if (cv == 0) continue;
                    std::string full = w + endsym;
                    if (neg)
                        target[full] -= c * cv;
                    else
                        target[full] += c * cv;
                }
            }
        }
    }
};

}  // namespace

std::string canonical_rotation(const std::string& word) {
    std::size_t n = word.size();
    if (n <= 1) return word;
    std::string best = word;
    std::string rot = word;
    for (std::size_t i = 1; i < n; ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

std::string render_word(const Graph& g, const std::string& word) {
    const std::vector<std::string>& alpha = g.alphabet();
    bool single = true;
    for (const std::string& a : alpha)
        if (a.size() != 1) single = false;
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i && !single) out += ',';
        out += alpha[static_cast<unsigned char>(word[i])];
    }
    return out;
}

BigInt LabelSequenceCounts::total(int k) const {
    BigInt t = 0;
    for (const WordCount& wc : by_length[static_cast<std::size_t>(k - 1)]) t += wc.count;
    return t;
}

LabelSequenceCounts labeled_cycle_sequences(const Graph& g, int ell) {
    if (ell < 1) throw std::invalid_argument("length bound must be at least 1");
    require_labeled_exact(g);
    int n = g.n_vertices();
    int eff = std::min(ell, n);
    LabelSequenceCounts out;
    out.ell = ell;
    out.truncated = eff < ell;
    out.by_length.resize(static_cast<std::size_t>(ell));
    if (eff < 1) return out;

    std::vector<std::vector<mpz_class>> binom_rows;
    LabeledRun run(g, eff, 0);
    run.binom_rows = &binom_rows;
    enumerate_connected_induced(g, eff, std::ref(run));

    for (int k = 1; k <= eff; ++k) {
        bool neg = (k & 1) != 0;  // overall sign (-1)^k before dividing by k
        std::map<std::string, mpz_class> merged;
        for (const auto& [w, c] : run.acc[static_cast<std::size_t>(k - 1)]) {
            if (c == 0) continue;
            merged[canonical_rotation(w)] += neg ? mpz_class(-c) : c;
        }
        std::vector<WordCount>& dst = out.by_length[static_cast<std::size_t>(k - 1)];
        for (auto& [w, c] : merged) {
            if (c == 0) continue;
            // Every simple cycle contributes one monomial per starting
            // vertex, so each rotation class carries a multiple of k.
            if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(k)))
                throw std::runtime_error(
                    "internal consistency failure: rotation class not divisible by cycle length");
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
            dst.push_back(WordCount{w, c});
        }
    }
    return out;
}

LabelSequenceCounts labeled_path_sequences(const Graph& g, int from, int to, int ell) {
    if (ell < 1) throw std::invalid_argument("length bound must be at least 1");
    require_labeled_exact(g);
    int n = g.n_vertices();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("path endpoint out of range");
    if (from == to) throw std::invalid_argument("path endpoints must differ");
    int eff = std::min(ell, n - 1);
    LabelSequenceCounts out;
    out.ell = ell;
    out.truncated = eff < ell;
    out.by_length.resize(static_cast<std::size_t>(ell));
    if (eff < 1) return out;

    std::vector<std::vector<mpz_class>> binom_rows;
    LabeledRun run(g, eff, 1);
    run.binom_rows = &binom_rows;
    run.from = from;
    run.to = to;
    int filter[2];
    filter[0] = std::min(from, to);
    filter[1] = std::max(from, to);
    enumerate_connected_induced(g, eff + 1, std::ref(run), std::span<const int>(filter, 2));

    for (int k = 1; k <= eff; ++k) {
        bool neg = (k & 1) == 0;  // overall sign (-1)^(k+1)
        std::vector<WordCount>& dst = out.by_length[static_cast<std::size_t>(k - 1)];
        for (const auto& [w, c] : run.acc[static_cast<std::size_t>(k - 1)]) {
            if (c == 0) continue;
            dst.push_back(WordCount{w, neg ? mpz_class(-c) : c});
        }
    }
    return out;
}

}  // namespace cycount
