#include "cycount/subgraph_enum.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cycount {

namespace {

// Both enumerators below walk the same reverse-search tree over weakly
// connected induced subgraphs of at most `bound` vertices. The canonical
// parent of H is H minus the largest vertex whose removal keeps H connected,
// so the search tree is exactly the inverses of that rule: extending H by u
// is valid iff every member of H + {u} larger than u is a cut vertex of
// H + {u}. Each subgraph is then generated exactly once, with no
// visited-set, and memory stays small.
//
// Candidates below the current maximum are settled against the parent's own
// cut set whenever possible: attaching u by one edge to x makes the
// extension's cut set exactly cut(H) + {x}, and attaching by two or more
// edges can only shrink the cut set, so a non-cut member above u already
// disqualifies. Only the surviving multi-attachment candidates pay for a
// staged articulation scan of H + {u}.

// List-based variant, any graph size. Membership state is the
// insertion-order member list plus its inverse (pos_of_, -1 for
// non-members); the cut vertex test and the dense matrix are produced on
// demand from the adjacency, so pushing a candidate is O(1).
class ListEnumerator {
  public:
    struct Cand {
        int id;
        int deg;    // attachment edges into the current members
        int first;  // one attachment endpoint (the unique one when deg == 1)
    };

    ListEnumerator(const Graph& g, int bound, const SubgraphVisitor& visitor,
                   std::span<const int> filter)
        : g_(g), visitor_(visitor) {
        n_ = g.n_vertices();
        bound_ = std::min(bound, n_);
        cap_ = std::max(bound_, 1);

        // flat undirected adjacency, self-loops dropped
        adj_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
        std::vector<int> merged;
        for (int v = 0; v < n_; ++v) {
            merged.clear();
            for (const Edge& e : g.out(v))
                if (e.to != v) merged.push_back(e.to);
            if (g.directed())
                for (const Edge& e : g.in(v))
                    if (e.to != v) merged.push_back(e.to);
            std::sort(merged.begin(), merged.end());
            merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
            adj_off_[static_cast<std::size_t>(v) + 1] =
                adj_off_[static_cast<std::size_t>(v)] + static_cast<int>(merged.size());
            adj_flat_.insert(adj_flat_.end(), merged.begin(), merged.end());
        }

        pos_of_.assign(n_, -1);
        seen_.assign(n_, -1);
        spos_.assign(n_, 0);
        slot_.assign(n_, 0);
        verts_.reserve(cap_ + 1);
        max_stack_.reserve(cap_);
        emit_verts_.resize(cap_);
        emit_dense_.resize(static_cast<std::size_t>(cap_) * cap_);
        tin_.resize(cap_ + 1);
        low_.resize(cap_ + 1);
        cut_.resize(cap_ + 1);
        fr_pos_.resize(cap_ + 1);
        fr_par_.resize(cap_ + 1);
        fr_it_.resize(cap_ + 1);
        fr_end_.resize(cap_ + 1);
        cands_.resize(cap_);

        filter_flag_.assign(n_, 0);
        filter_size_ = 0;
        for (int v : filter) {
            if (v < 0 || v >= n_)
                throw std::invalid_argument("subgraph filter vertex out of range");
            if (!filter_flag_[v]) {
                filter_flag_[v] = 1;
                ++filter_size_;
            }
        }
        filter_in_ = 0;
    }

    std::uint64_t run() {
        for (int v = 0; v < n_; ++v) {
            push(v);
            visit(0);
            pop();
        }
        return emitted_;
    }

  private:
    void push(int u) {
        max_stack_.push_back(verts_.empty() ? u : std::max(max_stack_.back(), u));
        pos_of_[u] = static_cast<int>(verts_.size());
        verts_.push_back(u);
        filter_in_ += filter_flag_[u];
    }

    void pop() {
        int u = verts_.back();
        verts_.pop_back();
        max_stack_.pop_back();
        pos_of_[u] = -1;
        filter_in_ -= filter_flag_[u];
    }

    // Lowlink DFS over the current members, optionally with a staged extra
    // vertex u (u itself can never be an articulation point). Fills cut_ by
    // position; with `bail` set it returns false the moment some member
    // larger than `bail_above` finishes without a cut mark, since a vertex's
    // status is final once its subtree is done.
    bool cut_scan(int total, bool bail, int bail_above) {
        std::fill(tin_.begin(), tin_.begin() + total, -1);
        std::fill(cut_.begin(), cut_.begin() + total, 0);
        int timer = 0;
        int root_children = 0;
        int sp = 0;
        fr_pos_[0] = 0;
        fr_par_[0] = -1;
        fr_it_[0] = adj_off_[static_cast<std::size_t>(verts_[0])];
        fr_end_[0] = adj_off_[static_cast<std::size_t>(verts_[0]) + 1];
        tin_[0] = low_[0] = timer++;
        while (sp >= 0) {
            int p = fr_pos_[sp];
            bool descended = false;
            while (fr_it_[sp] < fr_end_[sp]) {
                int y = adj_flat_[static_cast<std::size_t>(fr_it_[sp]++)];
                int q = pos_of_[y];
                if (q < 0 || q == fr_par_[sp]) continue;
                if (tin_[q] >= 0) {
                    if (tin_[q] < low_[p]) low_[p] = tin_[q];
                } else {
                    if (p == 0) ++root_children;
                    tin_[q] = low_[q] = timer++;
                    ++sp;
                    fr_pos_[sp] = q;
                    fr_par_[sp] = p;
                    int vq = verts_[static_cast<std::size_t>(q)];
                    fr_it_[sp] = adj_off_[static_cast<std::size_t>(vq)];
                    fr_end_[sp] = adj_off_[static_cast<std::size_t>(vq) + 1];
                    descended = true;
                    break;
                }
            }
            if (descended) continue;
            if (sp > 0) {
                int par = fr_pos_[sp - 1];
                if (low_[p] < low_[par]) low_[par] = low_[p];
                if (low_[p] >= tin_[par] && par != 0) cut_[par] = 1;
            }
            if (p == 0) cut_[0] = root_children > 1;
            if (bail && !cut_[p] && verts_[static_cast<std::size_t>(p)] > bail_above) return false;
            --sp;
        }
        return true;
    }

    // Valid child iff every vertex of the extended set larger than u is an
    // articulation point; then removing the largest removable vertex gets
    // back exactly this parent.
    bool child_is_canonical(int u) {
        int m = static_cast<int>(verts_.size());
        pos_of_[u] = m;
        verts_.push_back(u);
        bool ok = cut_scan(m + 1, true, u);
        verts_.pop_back();
        pos_of_[u] = -1;
        return ok;
    }

    // Articulation points of the members alone, reduced to the two largest
    // member ids without a cut mark. Feeds the O(1) candidate prefilters;
    // results live in the caller's frame because the recursion reuses the
    // scratch arrays.
    void member_cuts(int& maxnc1, int& maxnc2) {
        int m = static_cast<int>(verts_.size());
        cut_scan(m, false, 0);
        maxnc1 = maxnc2 = -1;
        for (int p = 0; p < m; ++p) {
            if (cut_[p]) continue;
            int id = verts_[static_cast<std::size_t>(p)];
            if (id > maxnc1) {
                maxnc2 = maxnc1;
                maxnc1 = id;
            } else if (id > maxnc2) {
                maxnc2 = id;
            }
        }
    }

    void emit(int neighbor_count) {
        ++emitted_;
        if (!visitor_) return;
        int m = static_cast<int>(verts_.size());
        std::copy(verts_.begin(), verts_.end(), emit_verts_.begin());
        std::sort(emit_verts_.begin(), emit_verts_.begin() + m);
        for (int i = 0; i < m; ++i) spos_[emit_verts_[static_cast<std::size_t>(i)]] = i;
        std::fill(emit_dense_.begin(), emit_dense_.begin() + static_cast<std::size_t>(m) * m,
                  0.0);
        for (int x : verts_) {
            double* row = &emit_dense_[static_cast<std::size_t>(spos_[x]) * m];
            for (const Edge& e : g_.out(x))
                if (pos_of_[e.to] >= 0) row[spos_[e.to]] = e.weight;
        }
        SubgraphVisit v;
        v.vertices = std::span<const int>(emit_verts_.data(), static_cast<std::size_t>(m));
        v.neighbor_count = neighbor_count;
        v.dense = std::span<const double>(emit_dense_.data(),
                                          static_cast<std::size_t>(m) * m);
        visitor_(v);
    }

    // A candidate u below the current maximum needs every member above u to
    // be an articulation point of the extension. Two shortcuts against the
    // parent's own cut set settle most candidates without touching the
    // extension: attaching by one edge to x makes the extension's cut set
    // exactly cut(H) + {x}, and attaching by two or more edges can only
    // shrink the cut set, so a non-cut member above u already disqualifies.
    bool accept_candidate(const Cand& c, int m, bool& cuts_ready, int& maxnc1, int& maxnc2) {
        if (m == 1) return false;  // pair has no cut vertex, so u must be the max
        if (!cuts_ready) {
            member_cuts(maxnc1, maxnc2);
            cuts_ready = true;
        }
        if (c.deg == 1) {
            if (maxnc1 <= c.id) return true;
            return maxnc1 == c.first && maxnc2 <= c.id;
        }
        if (maxnc1 > c.id) return false;
        return child_is_canonical(c.id);
    }

    void visit(int depth) {
        int m = static_cast<int>(verts_.size());
        std::vector<Cand>& cands = cands_[depth];
        cands.clear();
        ++stamp_;
        for (int p = 0; p < m; ++p) {
            int x = verts_[static_cast<std::size_t>(p)];
            for (int i = adj_off_[static_cast<std::size_t>(x)];
                 i < adj_off_[static_cast<std::size_t>(x) + 1]; ++i) {
                int y = adj_flat_[static_cast<std::size_t>(i)];
                if (pos_of_[y] >= 0) continue;
                if (seen_[y] == stamp_) {
                    ++cands[static_cast<std::size_t>(slot_[y])].deg;
                    continue;
                }
                seen_[y] = stamp_;
                slot_[y] = static_cast<int>(cands.size());
                cands.push_back({y, 1, x});
            }
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return a.id < b.id; });

        if (filter_in_ == filter_size_) emit(static_cast<int>(cands.size()));
        if (m == bound_) return;

        int max_id = max_stack_.back();
        bool cuts_ready = false;
        int maxnc1 = -1, maxnc2 = -1;
        for (const Cand& c : cands) {
            if (c.id > max_id || accept_candidate(c, m, cuts_ready, maxnc1, maxnc2)) {
                push(c.id);
                visit(depth + 1);
                pop();
            }
        }
    }

    const Graph& g_;
    const SubgraphVisitor& visitor_;
    int n_ = 0;
    int bound_ = 0;
    int cap_ = 1;
    std::vector<int> adj_off_;
    std::vector<int> adj_flat_;

    std::vector<int> verts_;
    std::vector<int> max_stack_;
    std::vector<int> pos_of_;
    std::vector<int> seen_;
    int stamp_ = 0;

    std::vector<int> emit_verts_;
    std::vector<double> emit_dense_;
    std::vector<int> spos_;
    std::vector<int> tin_, low_;
    std::vector<unsigned char> cut_;
    std::vector<int> fr_pos_, fr_par_, fr_it_, fr_end_;
    std::vector<int> slot_;
    std::vector<std::vector<Cand>> cands_;

    std::vector<signed char> filter_flag_;
    int filter_size_ = 0;
    int filter_in_ = 0;
    std::uint64_t emitted_ = 0;
};

// Bitmask variant for graphs with at most 64 vertices: member and candidate
// sets are single words, adjacency is one mask per vertex, and the
// articulation scans run on count-trailing-zeros loops. Same search tree and
// emission contract as the list variant, much lower constant factor.
class MaskEnumerator {
  public:
    MaskEnumerator(const Graph& g, int bound, const SubgraphVisitor& visitor,
                   std::span<const int> filter)
        : g_(g), visitor_(visitor) {
        n_ = g.n_vertices();
        bound_ = std::min(bound, n_);
        int cap = std::max(bound_, 1);

        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t mask = 0;
            for (const Edge& e : g.out(v))
                if (e.to != v) mask |= std::uint64_t(1) << e.to;
            if (g.directed())
                for (const Edge& e : g.in(v))
                    if (e.to != v) mask |= std::uint64_t(1) << e.to;
            adj_[static_cast<std::size_t>(v)] = mask;
        }

        filter_mask_ = 0;
        for (int v : filter) {
            if (v < 0 || v >= n_)
                throw std::invalid_argument("subgraph filter vertex out of range");
            filter_mask_ |= std::uint64_t(1) << v;
        }

        verts_.reserve(cap);
        max_stack_.reserve(cap);
        emit_verts_.resize(cap);
        emit_dense_.resize(static_cast<std::size_t>(cap) * cap);
        spos_.assign(n_, 0);
    }

    std::uint64_t run() {
        for (int v = 0; v < n_; ++v) {
            push(v);
            visit();
            pop();
        }
        return emitted_;
    }

  private:
    void push(int u) {
        max_stack_.push_back(verts_.empty() ? u : std::max(max_stack_.back(), u));
        verts_.push_back(u);
        members_ |= std::uint64_t(1) << u;
    }

    void pop() {
        members_ &= ~(std::uint64_t(1) << verts_.back());
        verts_.pop_back();
        max_stack_.pop_back();
    }

    // Lowlink DFS over `ext` (members, possibly plus a staged vertex),
    // rooted at the first pushed member. Returns the cut-vertex mask; with
    // `bail_above` >= 0 it stops early and reports failure as soon as some
    // vertex above the threshold finishes without a cut mark.
    struct CutScan {
        bool ok;
        std::uint64_t cuts;
    };

    CutScan cut_scan(std::uint64_t ext, int bail_above) {
        int root = verts_[0];
        std::uint64_t visited = std::uint64_t(1) << root;
        std::uint64_t cuts = 0;
        int timer = 0;
        int root_children = 0;
        int sp = 0;
        fid_[0] = root;
        fpar_[0] = -1;
        frem_[0] = adj_[static_cast<std::size_t>(root)] & ext;
        tin_[root] = low_[root] = timer++;
        while (sp >= 0) {
            int v = fid_[sp];
            bool descended = false;
            while (frem_[sp]) {
                int y = std::countr_zero(frem_[sp]);
                frem_[sp] &= frem_[sp] - 1;
                if (y == fpar_[sp]) continue;
                if (visited >> y & 1) {
                    if (tin_[y] < low_[v]) low_[v] = tin_[y];
                } else {
                    if (v == root) ++root_children;
                    visited |= std::uint64_t(1) << y;
                    tin_[y] = low_[y] = timer++;
                    ++sp;
                    fid_[sp] = y;
                    fpar_[sp] = v;
                    frem_[sp] = adj_[static_cast<std::size_t>(y)] & ext;
                    descended = true;
                    break;
                }
            }
            if (descended) continue;
            if (sp > 0) {
                int par = fid_[sp - 1];
                if (low_[v] < low_[par]) low_[par] = low_[v];
                if (low_[v] >= tin_[par] && par != root) cuts |= std::uint64_t(1) << par;
            }
            if (v == root && root_children > 1) cuts |= std::uint64_t(1) << root;
            if (v > bail_above && !(cuts >> v & 1)) return {false, cuts};
            --sp;
        }
        return {true, cuts};
    }

    void emit(int neighbor_count) {
        ++emitted_;
        if (!visitor_) return;
        int m = static_cast<int>(verts_.size());
        int i = 0;
        for (std::uint64_t rest = members_; rest; rest &= rest - 1, ++i) {
            int v = std::countr_zero(rest);
            emit_verts_[static_cast<std::size_t>(i)] = v;
            spos_[static_cast<std::size_t>(v)] = i;
        }
        std::fill(emit_dense_.begin(), emit_dense_.begin() + static_cast<std::size_t>(m) * m,
                  0.0);
        for (int x : verts_) {
            double* row = &emit_dense_[static_cast<std::size_t>(spos_[x]) * m];
            for (const Edge& e : g_.out(x))
                if (members_ >> e.to & 1) row[spos_[e.to]] = e.weight;
        }
        SubgraphVisit v;
        v.vertices = std::span<const int>(emit_verts_.data(), static_cast<std::size_t>(m));
        v.neighbor_count = neighbor_count;
        v.dense = std::span<const double>(emit_dense_.data(),
                                          static_cast<std::size_t>(m) * m);
        visitor_(v);
    }

    void visit() {
        int m = static_cast<int>(verts_.size());
        std::uint64_t cand_mask = 0;
        for (int x : verts_) cand_mask |= adj_[static_cast<std::size_t>(x)];
        cand_mask &= ~members_;

        if ((members_ & filter_mask_) == filter_mask_)
            emit(std::popcount(cand_mask));
        if (m == bound_) return;

        int max_id = max_stack_.back();
        bool cuts_ready = false;
        std::uint64_t noncut_above = 0;  // non-cut members, valid once cuts_ready
        for (std::uint64_t rest = cand_mask; rest; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            if (u <= max_id) {
                if (m == 1) continue;  // pair has no cut vertex, so u must be the max
                if (!cuts_ready) {
                    noncut_above = members_ & ~cut_scan(members_, 64).cuts;
                    cuts_ready = true;
                }
                std::uint64_t high = noncut_above >> u >> 1;  // non-cut members above u
                std::uint64_t att = adj_[static_cast<std::size_t>(u)] & members_;
                if (att & (att - 1)) {
                    // two or more attachment edges
                    if (high) continue;
                    if (!cut_scan(members_ | (std::uint64_t(1) << u), u).ok) continue;
                } else if (high) {
                    // sole attachment endpoint becomes the one new cut vertex
                    int x = std::countr_zero(att);
                    if (x <= u || high != (std::uint64_t(1) << (x - u - 1))) continue;
                }
            }
            push(u);
            visit();
            pop();
        }
    }

    const Graph& g_;
    const SubgraphVisitor& visitor_;
    int n_ = 0;
    int bound_ = 0;
    std::vector<std::uint64_t> adj_;
    std::uint64_t members_ = 0;
    std::uint64_t filter_mask_ = 0;

    std::vector<int> verts_;
    std::vector<int> max_stack_;
    std::vector<int> emit_verts_;
    std::vector<double> emit_dense_;
    std::vector<int> spos_;
    int tin_[64], low_[64];
    int fid_[65], fpar_[65];
    std::uint64_t frem_[65];
    std::uint64_t emitted_ = 0;
};

}  // namespace

std::uint64_t enumerate_connected_induced(const Graph& g, int bound,
                                          const SubgraphVisitor& visitor,
                                          std::span<const int> filter) {
    if (bound < 1) throw std::invalid_argument("subgraph bound must be at least 1");
    if (g.n_vertices() == 0) return 0;
    if (g.n_vertices() <= 64) {
        MaskEnumerator e(g, bound, visitor, filter);
        return e.run();
    }
    ListEnumerator e(g, bound, visitor, filter);
    return e.run();
}

int neighbor_count(const Graph& g, std::span<const int> vertices) {
    int n = g.n_vertices();
    std::vector<signed char> mark(static_cast<std::size_t>(n), 0);  // 1 member, 2 neighbor
    for (int v : vertices) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        mark[v] = 1;
    }
    int count = 0;
    auto scan = [&](std::span<const Edge> es) {
        for (const Edge& e : es) {
            if (mark[e.to]) continue;
            mark[e.to] = 2;
            ++count;
        }
    };
    for (int v : vertices) {
        scan(g.out(v));
        if (g.directed()) scan(g.in(v));
    }
    return count;
}

std::vector<std::uint64_t> count_connected_induced(const Graph& g, int bound) {
    if (bound < 1) throw std::invalid_argument("subgraph bound must be at least 1");
    std::vector<std::uint64_t> by_size(static_cast<std::size_t>(bound), 0);
    enumerate_connected_induced(g, bound, [&](const SubgraphVisit& v) {
        ++by_size[static_cast<std::size_t>(v.size()) - 1];
    });
    return by_size;
}

}  // namespace cycount
