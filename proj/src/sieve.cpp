#include "cycount/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "cycount/subgraph_enum.hpp"

namespace cycount {

namespace {

// ---------------------------------------------------------------------------
// scalar helpers

void set_from_i128(mpz_class& z, __int128 v) {
    bool neg = v < 0;
    unsigned __int128 u =
        neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 64);
    mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(u));
    if (neg) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
}

// Compensated accumulator that also tracks the largest intermediate
// magnitude, so heavy cancellation shows up as a large condition estimate.
struct KahanCell {
    double sum = 0.0;
    double comp = 0.0;
    double peak = 0.0;

    void add(double x) {
        peak = std::max(peak, std::abs(x));
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        peak = std::max(peak, std::abs(sum));
    }
};

// Exact accumulator: a 128-bit fast lane, spilled into an arbitrary
// precision word before it can overflow. Terms are bounded by 2^126 in
// magnitude (products of two signed 64-bit factors), so spilling whenever
// the fast lane exceeds 2^120 leaves room for one more term.
struct AccCell {
    __int128 fast = 0;
    mpz_class big;

    static constexpr __int128 kSpill = static_cast<__int128>(1) << 120;

    void spill() {
        if (fast != 0) {
            mpz_class t;
            set_from_i128(t, fast);
            big += t;
            fast = 0;
        }
    }

    void add(__int128 term) {
        if (fast > kSpill || fast < -kSpill) spill();
        fast += term;
    }

    void add_product(const mpz_class& coef, const mpz_class& value, bool neg) {
        if (neg)
            mpz_submul(big.get_mpz_t(), coef.get_mpz_t(), value.get_mpz_t());
        else
            mpz_addmul(big.get_mpz_t(), coef.get_mpz_t(), value.get_mpz_t());
    }

    mpz_class settle() {
        spill();
        return big;
    }
};

template <typename T, int M>
void matmul_fixed(const T* x, const T* y, T* z) {
    for (int i = 0; i < M; ++i) {
        T* zi = z + static_cast<std::size_t>(i) * M;
        const T* xi = x + static_cast<std::size_t>(i) * M;
        for (int j = 0; j < M; ++j) zi[j] = xi[0] * y[j];
        for (int k = 1; k < M; ++k) {
            T v = xi[k];
            const T* yk = y + static_cast<std::size_t>(k) * M;
            for (int j = 0; j < M; ++j) zi[j] += v * yk[j];
        }
    }
}

template <typename T>
void matmul_general(const T* x, const T* y, T* z, int m) {
    for (int i = 0; i < m; ++i) {
        T* zi = z + static_cast<std::size_t>(i) * m;
        for (int j = 0; j < m; ++j) zi[j] = T(0);
        const T* xi = x + static_cast<std::size_t>(i) * m;
        for (int k = 0; k < m; ++k) {
            T v = xi[k];
            if (v == T(0)) continue;
            const T* yk = y + static_cast<std::size_t>(k) * m;
            for (int j = 0; j < m; ++j) zi[j] += v * yk[j];
        }
    }
}

// Small dimensions dominate, and constant bounds let the compiler unroll
// and vectorize them fully.
template <typename T>
void matmul(const T* x, const T* y, T* z, int m) {
    switch (m) {
        case 1: z[0] = x[0] * y[0]; return;
        case 2: matmul_fixed<T, 2>(x, y, z); return;
        case 3: matmul_fixed<T, 3>(x, y, z); return;
        case 4: matmul_fixed<T, 4>(x, y, z); return;
        case 5: matmul_fixed<T, 5>(x, y, z); return;
        case 6: matmul_fixed<T, 6>(x, y, z); return;
        case 7: matmul_fixed<T, 7>(x, y, z); return;
        case 8: matmul_fixed<T, 8>(x, y, z); return;
        case 9: matmul_fixed<T, 9>(x, y, z); return;
        case 10: matmul_fixed<T, 10>(x, y, z); return;
        case 11: matmul_fixed<T, 11>(x, y, z); return;
        case 12: matmul_fixed<T, 12>(x, y, z); return;
        default: matmul_general(x, y, z, m); return;
    }
}

// Flat dot with four accumulators so the compiler can vectorize the
// reduction. Reassociation is exact here: the double tier only ever holds
// integers small enough that every partial sum is exact.
template <typename T>
T dot_flat(const T* x, const T* y, std::size_t len) {
    T s0 = T(0), s1 = T(0), s2 = T(0), s3 = T(0);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        s0 += x[i] * y[i];
        s1 += x[i + 1] * y[i + 1];
        s2 += x[i + 2] * y[i + 2];
        s3 += x[i + 3] * y[i + 3];
    }
    for (; i < len; ++i) s0 += x[i] * y[i];
    return (s0 + s1) + (s2 + s3);
}

void matmul(const mpz_class* x, const mpz_class* y, mpz_class* z, int m) {
    for (int i = 0; i < m; ++i) {
        mpz_class* zi = z + static_cast<std::size_t>(i) * m;
        for (int j = 0; j < m; ++j) zi[j] = 0;
        const mpz_class* xi = x + static_cast<std::size_t>(i) * m;
        for (int k = 0; k < m; ++k) {
            const mpz_class& v = xi[k];
            if (v == 0) continue;
            const mpz_class* yk = y + static_cast<std::size_t>(k) * m;
            for (int j = 0; j < m; ++j)
                mpz_addmul(zi[j].get_mpz_t(), v.get_mpz_t(), yk[j].get_mpz_t());
        }
    }
}

// Binomial coefficient rows with a fast 64-bit mirror for the hot path.
struct CoefRow {
    std::vector<mpz_class> big;
    std::vector<long long> small;
    std::vector<unsigned char> fits;
};

struct CoefTable {
    int cols = 0;
    std::vector<CoefRow> rows;

    const CoefRow& row(int n) {
        if (static_cast<int>(rows.size()) <= n) rows.resize(static_cast<std::size_t>(n) + 1);
        CoefRow& r = rows[static_cast<std::size_t>(n)];
        if (r.big.empty()) {
            r.big.resize(static_cast<std::size_t>(cols));
            r.small.assign(static_cast<std::size_t>(cols), 0);
            r.fits.assign(static_cast<std::size_t>(cols), 0);
            for (int j = 0; j < cols && j <= n; ++j) {
                mpz_class& b = r.big[static_cast<std::size_t>(j)];
                mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                             static_cast<unsigned long>(j));
                if (b.fits_slong_p()) {
                    r.small[static_cast<std::size_t>(j)] = b.get_si();
                    r.fits[static_cast<std::size_t>(j)] = 1;
                }
            }
        }
        return r;
    }
};

enum class Mode { Cycles, SingleEntry, AllPairs };

// Shared sieve accumulation over the enumerated subgraphs. `shift` is 0 for
// cycle-type sums (term binomial C(nh, k - h)) and 1 for path-type sums
// (C(nh, k + 1 - h)); signs and the division by k are applied afterwards by
// the callers. Matrix powers are taken in the narrowest scalar type that
// provably cannot overflow, sized from the max absolute row sum.
struct SieveRun {
    const Graph& g;
    int ell_eff;
    int shift;
    Mode mode;
    bool exact;

    // SingleEntry extraction target (vertex ids; equal ids hit the diagonal)
    int from = -1;
    int to = -1;

    CoefTable coefs;
    std::vector<AccCell> acc;            // Cycles / SingleEntry, length ell_eff
    std::vector<KahanCell> facc;
    std::vector<AccCell> acc_grid;       // AllPairs, (i*n + j)*ell_eff + (k-1)
    std::vector<KahanCell> facc_grid;

    template <typename T>
    struct TypedWs {
        std::vector<T> a, b, t, qt;
        std::vector<std::vector<T>> pool;  // powers 2..t for the half-power scheme
        std::vector<T*> pw;
    };

    TypedWs<long long> ws64;
    TypedWs<__int128> ws128;
    TypedWs<mpz_class> wsbig;
    TypedWs<double> wsd;
    mpz_class conv;

    SieveRun(const Graph& graph, int eff, int shift_, Mode mode_)
        : g(graph), ell_eff(eff), shift(shift_), mode(mode_) {
        exact = g.integral_weights();
        coefs.cols = ell_eff + 2;
        if (mode == Mode::AllPairs) {
            std::size_t cells = static_cast<std::size_t>(g.n_vertices()) * g.n_vertices() *
                                static_cast<std::size_t>(ell_eff);
            if (exact)
                acc_grid.resize(cells);
            else
                facc_grid.resize(cells);
        } else {
            if (exact)
                acc.resize(static_cast<std::size_t>(ell_eff));
            else
                facc.resize(static_cast<std::size_t>(ell_eff));
        }
    }

    mpz_class settle(int k) { return acc[static_cast<std::size_t>(k - 1)].settle(); }

    void operator()(const SubgraphVisit& v) {
        int h = v.size();
        int nh = v.neighbor_count;
        int klo = std::max(1, h - shift);
        int khi = std::min(ell_eff, h + nh - shift);
        if (khi < klo) return;
        if (mode == Mode::AllPairs && h < 2) return;

        int m = h;
        std::size_t mm = static_cast<std::size_t>(m) * m;
        if (wsd.a.size() < mm) wsd.a.resize(mm);
        double rowsum = 0.0;
        for (int i = 0; i < m; ++i) {
            const double* src = v.dense.data() + static_cast<std::size_t>(i) * m;
            double* dst = wsd.a.data() + static_cast<std::size_t>(i) * m;
            double s = 0.0;
            for (int j = 0; j < m; ++j) {
                dst[j] = src[j];
                s += std::abs(src[j]);
            }
            rowsum = std::max(rowsum, s);
        }
        if (rowsum == 0.0) return;

        if (!exact) {
            run_typed<double>(v, klo, khi);
            return;
        }
        double bits = khi * std::log2(std::max(rowsum, 2.0)) + std::log2(m + 1.0) + 1.0;
        if (bits <= 52.0)
            run_typed<double>(v, klo, khi);  // integer-exact and vectorizes
        else if (bits <= 61.0)
            run_typed<long long>(v, klo, khi);
        else if (bits <= 124.0)
            run_typed<__int128>(v, klo, khi);
        else
            run_typed<mpz_class>(v, klo, khi);
    }

    template <typename T>
    TypedWs<T>& ws() {
        if constexpr (std::is_same_v<T, long long>)
            return ws64;
        else if constexpr (std::is_same_v<T, __int128>)
            return ws128;
        else if constexpr (std::is_same_v<T, mpz_class>)
            return wsbig;
        else
            return wsd;
    }

    template <typename T>
    void run_typed(const SubgraphVisit& v, int klo, int khi) {
        int m = v.size();
        std::size_t mm = static_cast<std::size_t>(m) * m;
        TypedWs<T>& w = ws<T>();
        if (w.a.size() < mm) w.a.resize(mm);
        T* a = w.a.data();
        if constexpr (!std::is_same_v<T, double>) {
            for (std::size_t i = 0; i < mm; ++i) {
                if constexpr (std::is_same_v<T, mpz_class>)
                    a[i] = static_cast<long>(std::llround(v.dense[i]));
                else
                    a[i] = static_cast<T>(std::llround(v.dense[i]));
            }
        }

        const CoefRow& row = coefs.row(v.neighbor_count);
        bool neg = (m & 1) != 0;
        int pi = 0, pj = 0;
        if (mode == Mode::SingleEntry) {
            pi = static_cast<int>(std::lower_bound(v.vertices.begin(), v.vertices.end(), from) -
                                  v.vertices.begin());
            pj = static_cast<int>(std::lower_bound(v.vertices.begin(), v.vertices.end(), to) -
                                  v.vertices.begin());
        }

        // Two exact evaluation plans, chosen by matrix product count. The
        // half-power plan keeps A^2..A^t for t = ceil(khi/2) and reads any
        // higher power's trace or entry as an m^2 dot against A^t; the
        // direct plan reaches A^klo by square and multiply and then steps.
        // AllPairs extraction needs full matrices, so it always steps.
        int half_t = (khi + 1) / 2;
        int pow_cost = klo == 1 ? 0
                                : (31 - __builtin_clz(static_cast<unsigned>(klo))) +
                                      __builtin_popcount(static_cast<unsigned>(klo)) - 1;
        bool use_half = mode != Mode::AllPairs && khi <= 64 &&
                        half_t - 1 < pow_cost + std::max(0, khi - klo - 1);

        if (use_half) {
            if (static_cast<int>(w.pool.size()) < half_t - 1)
                w.pool.resize(static_cast<std::size_t>(half_t - 1));
            if (w.pw.size() < static_cast<std::size_t>(half_t) + 1)
                w.pw.resize(static_cast<std::size_t>(half_t) + 1);
            T** pw = w.pw.data();
            pw[1] = a;
            for (int j = 2; j <= half_t; ++j) {
                std::vector<T>& slot = w.pool[static_cast<std::size_t>(j - 2)];
                if (slot.size() < mm) slot.resize(mm);
                pw[j] = slot.data();
                matmul(pw[j - 1], a, pw[j], m);
            }
            // Dots against the transpose of A^t walk both operands
            // contiguously; the element copies are too dear for mpz, which
            // keeps the strided form instead.
            const T* qt = nullptr;
            if constexpr (!std::is_same_v<T, mpz_class>) {
                if (khi > half_t) {
                    if (w.qt.size() < mm) w.qt.resize(mm);
                    const T* q = pw[half_t];
                    for (int i = 0; i < m; ++i)
                        for (int x = 0; x < m; ++x)
                            w.qt[static_cast<std::size_t>(x) * m + i] =
                                q[static_cast<std::size_t>(i) * m + x];
                    qt = w.qt.data();
                }
            }
            for (int k = klo; k <= khi; ++k) {
                int jc = k + shift - m;
                if (coef_zero(row, jc)) continue;
                T val = T(0);
                if (mode == Mode::Cycles) {
                    if (k <= half_t) {
                        const T* p = pw[k];
                        for (int i = 0; i < m; ++i)
                            val += p[static_cast<std::size_t>(i) * (m + 1)];
                    } else if constexpr (std::is_same_v<T, mpz_class>) {
                        const T* p = pw[k - half_t];
                        const T* q = pw[half_t];
                        for (int i = 0; i < m; ++i)
                            for (int x = 0; x < m; ++x)
                                val += p[static_cast<std::size_t>(i) * m + x] *
                                       q[static_cast<std::size_t>(x) * m + i];
                    } else {
                        val = dot_flat(pw[k - half_t], qt, mm);
                    }
                } else {
                    if (k <= half_t) {
                        val = pw[k][static_cast<std::size_t>(pi) * m + pj];
                    } else if constexpr (std::is_same_v<T, mpz_class>) {
                        const T* p = pw[k - half_t];
                        const T* q = pw[half_t];
                        for (int x = 0; x < m; ++x)
                            val += p[static_cast<std::size_t>(pi) * m + x] *
                                   q[static_cast<std::size_t>(x) * m + pj];
                    } else {
                        val = dot_flat(pw[k - half_t] + static_cast<std::size_t>(pi) * m,
                                       qt + static_cast<std::size_t>(pj) * m,
                                       static_cast<std::size_t>(m));
                    }
                }
                deposit_cell(cell(k), fcell(k), row, jc, val, neg);
            }
            return;
        }

        if (w.b.size() < mm) {
            w.b.resize(mm);
            w.t.resize(mm);
        }
        T* b = w.b.data();
        T* t = w.t.data();
        if (klo == 1) {
            for (std::size_t i = 0; i < mm; ++i) b[i] = a[i];
        } else {
            int msb = 31 - __builtin_clz(static_cast<unsigned>(klo));
            for (std::size_t i = 0; i < mm; ++i) b[i] = a[i];
            for (int bit = msb - 1; bit >= 0; --bit) {
                matmul(b, b, t, m);
                std::swap(b, t);
                if (klo & (1 << bit)) {
                    matmul(b, a, t, m);
                    std::swap(b, t);
                }
            }
        }

        for (int k = klo; k <= khi; ++k) {
            int jc = k + shift - m;
            if (k > klo) {
                if (k == khi && mode != Mode::AllPairs) {
                    // extract straight from B*A without forming the product
                    if (!coef_zero(row, jc)) {
                        if (mode == Mode::Cycles) {
                            T tr = T(0);
                            for (int i = 0; i < m; ++i)
                                for (int x = 0; x < m; ++x)
                                    tr += b[static_cast<std::size_t>(i) * m + x] *
                                          a[static_cast<std::size_t>(x) * m + i];
                            deposit_cell(cell(k), fcell(k), row, jc, tr, neg);
                        } else {
                            T val = T(0);
                            for (int x = 0; x < m; ++x)
                                val += b[static_cast<std::size_t>(pi) * m + x] *
                                       a[static_cast<std::size_t>(x) * m + pj];
                            deposit_cell(cell(k), fcell(k), row, jc, val, neg);
                        }
                    }
                    break;
                }
                matmul(b, a, t, m);
                std::swap(b, t);
            }
            if (coef_zero(row, jc)) continue;

            switch (mode) {
                case Mode::Cycles: {
                    T tr = T(0);
                    for (int i = 0; i < m; ++i) tr += b[static_cast<std::size_t>(i) * m + i];
                    deposit_cell(cell(k), fcell(k), row, jc, tr, neg);
                    break;
                }
                case Mode::SingleEntry: {
                    deposit_cell(cell(k), fcell(k), row, jc,
                                 b[static_cast<std::size_t>(pi) * m + pj], neg);
                    break;
                }
                case Mode::AllPairs: {
                    int n = g.n_vertices();
                    for (int x = 0; x < m; ++x) {
                        for (int y = 0; y < m; ++y) {
                            if (x == y) continue;
                            const T& val = b[static_cast<std::size_t>(x) * m + y];
                            if (val == T(0)) continue;
                            std::size_t idx =
                                (static_cast<std::size_t>(v.vertices[x]) * n + v.vertices[y]) *
                                    ell_eff +
                                (k - 1);
                            deposit_cell(exact ? &acc_grid[idx] : nullptr,
                                         exact ? nullptr : &facc_grid[idx], row, jc, val, neg);
                        }
                    }
                    break;
                }
            }
        }
    }

    static bool coef_zero(const CoefRow& row, int jc) {
        return row.fits[static_cast<std::size_t>(jc)] &&
               row.small[static_cast<std::size_t>(jc)] == 0;
    }

    AccCell* cell(int k) { return exact ? &acc[static_cast<std::size_t>(k - 1)] : nullptr; }
    KahanCell* fcell(int k) { return exact ? nullptr : &facc[static_cast<std::size_t>(k - 1)]; }

    template <typename T>
    void deposit_cell(AccCell* c, KahanCell* fc, const CoefRow& row, int jc, const T& value,
                      bool neg) {
        if constexpr (std::is_same_v<T, double>) {
            if (c) {
                // integer-valued double from the exact small tier
                __int128 iv = static_cast<__int128>(std::llround(value));
                if (row.fits[static_cast<std::size_t>(jc)]) {
                    __int128 term =
                        static_cast<__int128>(row.small[static_cast<std::size_t>(jc)]) * iv;
                    c->add(neg ? -term : term);
                } else {
                    conv = static_cast<long>(std::llround(value));
                    c->add_product(row.big[static_cast<std::size_t>(jc)], conv, neg);
                }
                return;
            }
            double term = row.big[static_cast<std::size_t>(jc)].get_d() * value;
            fc->add(neg ? -term : term);
        } else if constexpr (std::is_same_v<T, long long>) {
            if (row.fits[static_cast<std::size_t>(jc)]) {
                __int128 term = static_cast<__int128>(row.small[static_cast<std::size_t>(jc)]) *
                                value;
                c->add(neg ? -term : term);
            } else {
                conv = static_cast<long>(value);
                c->add_product(row.big[static_cast<std::size_t>(jc)], conv, neg);
            }
        } else if constexpr (std::is_same_v<T, __int128>) {
            set_from_i128(conv, value);
            c->add_product(row.big[static_cast<std::size_t>(jc)], conv, neg);
        } else {
            c->add_product(row.big[static_cast<std::size_t>(jc)], value, neg);
        }
    }
};

void require_length(int ell) {
    if (ell < 1) throw std::invalid_argument("length bound must be at least 1");
}

void require_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.n_vertices())
        throw std::invalid_argument(std::string(what) + " out of range");
}

// Collapses a Kahan accumulator into (value, condition) with the given sign.
std::pair<double, double> settle_approx(const KahanCell& cell, bool negate, double divisor) {
    double value = (negate ? -cell.sum : cell.sum) / divisor + 0.0;  // +0.0 kills -0
    double peak = cell.peak;
    double cond;
    if (peak == 0.0)
        cond = 0.0;
    else if (cell.sum == 0.0)
        cond = std::numeric_limits<double>::infinity();
    else
        cond = peak / std::abs(cell.sum);
    return {value, cond};
}

CountSeries make_series(int ell, int eff, bool exact) {
    CountSeries s;
    s.ell = ell;
    s.exact = exact;
    s.truncated = eff < ell;
    if (exact)
        s.exact_values.assign(static_cast<std::size_t>(ell), mpz_class(0));
    else {
        s.approx_values.assign(static_cast<std::size_t>(ell), 0.0);
        s.condition.assign(static_cast<std::size_t>(ell), 0.0);
    }
    return s;
}

}  // namespace

std::string CountSeries::str_at(int k) const {
    if (exact) return exact_values[static_cast<std::size_t>(k - 1)].get_str();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", approx_values[static_cast<std::size_t>(k - 1)]);
    return buf;
}

std::vector<BigInt> trace_powers(const DenseMatrix& a, int k_max) {
    if (!a.integral())
        throw std::invalid_argument("exact trace powers require integral entries");
    if (k_max < 0) throw std::invalid_argument("power bound must be nonnegative");
    int m = a.m;
    std::vector<BigInt> out(static_cast<std::size_t>(k_max), BigInt(0));
    if (m == 0 || k_max == 0) return out;
    std::size_t mm = static_cast<std::size_t>(m) * m;
    std::vector<mpz_class> base(mm), cur(mm), nxt(mm);
    for (std::size_t i = 0; i < mm; ++i) base[i] = static_cast<long>(std::llround(a.a[i]));
    cur = base;
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) {
            matmul(cur.data(), base.data(), nxt.data(), m);
            cur.swap(nxt);
        }
        mpz_class tr = 0;
        for (int i = 0; i < m; ++i) tr += cur[static_cast<std::size_t>(i) * m + i];
        out[static_cast<std::size_t>(k - 1)] = tr;
    }
    return out;
}

std::vector<double> trace_powers_real(const DenseMatrix& a, int k_max) {
    if (k_max < 0) throw std::invalid_argument("power bound must be nonnegative");
    int m = a.m;
    std::vector<double> out(static_cast<std::size_t>(k_max), 0.0);
    if (m == 0 || k_max == 0) return out;
    std::size_t mm = static_cast<std::size_t>(m) * m;
    std::vector<double> cur = a.a, nxt(mm);
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) {
            matmul(cur.data(), a.a.data(), nxt.data(), m);
            cur.swap(nxt);
        }
        double tr = 0.0;
        for (int i = 0; i < m; ++i) tr += cur[static_cast<std::size_t>(i) * m + i];
        out[static_cast<std::size_t>(k - 1)] = tr;
    }
    return out;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

CycleCounts count_cycles(const Graph& g, int ell) {
    require_length(ell);
    int n = g.n_vertices();
    int eff = std::min(ell, n);
    bool exact = g.integral_weights();
    CycleCounts out;
    out.gamma = make_series(ell, eff, exact);
    if (eff < 1) return out;

    SieveRun run(g, eff, 0, Mode::Cycles);
    enumerate_connected_induced(g, eff, std::ref(run));

    bool unit = g.all_unit_weights();
    for (int k = 1; k <= eff; ++k) {
        bool neg = (k & 1) != 0;  // gamma(k) = (-1)^k / k * acc
        if (exact) {
            mpz_class v = run.settle(k);
            if (neg) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
            if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(k)))
                throw std::runtime_error(
                    "internal consistency failure: cycle accumulator not divisible by its length");
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
            if (unit && v < 0)
                throw std::runtime_error(
                    "internal consistency failure: negative cycle count on unit-weight graph");
            out.gamma.exact_values[static_cast<std::size_t>(k - 1)] = v;
        } else {
            auto [value, cond] =
                settle_approx(run.facc[static_cast<std::size_t>(k - 1)], neg, k);
            out.gamma.approx_values[static_cast<std::size_t>(k - 1)] = value;
            out.gamma.condition[static_cast<std::size_t>(k - 1)] = cond;
        }
    }
    return out;
}

RootedCycleCounts count_cycles_through(const Graph& g, int root, int ell) {
    require_length(ell);
    require_vertex(g, root, "root vertex");
    int n = g.n_vertices();
    int eff = std::min(ell, n);
    bool exact = g.integral_weights();
    RootedCycleCounts out;
    out.root = root;
    out.gamma = make_series(ell, eff, exact);
    if (eff < 1) return out;

    SieveRun run(g, eff, 0, Mode::SingleEntry);
    run.from = run.to = root;
    int filter[1] = {root};
    enumerate_connected_induced(g, eff, std::ref(run), std::span<const int>(filter, 1));

    for (int k = 1; k <= eff; ++k) {
        bool neg = (k & 1) != 0;  // gamma_i(k) = (-1)^k * acc
        if (exact) {
            mpz_class v = run.settle(k);
            if (neg) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
            out.gamma.exact_values[static_cast<std::size_t>(k - 1)] = v;
        } else {
            auto [value, cond] =
                settle_approx(run.facc[static_cast<std::size_t>(k - 1)], neg, 1.0);
            out.gamma.approx_values[static_cast<std::size_t>(k - 1)] = value;
            out.gamma.condition[static_cast<std::size_t>(k - 1)] = cond;
        }
    }
    return out;
}

PathCounts count_paths(const Graph& g, int from, int to, int ell) {
    require_length(ell);
    require_vertex(g, from, "source vertex");
    require_vertex(g, to, "target vertex");
    if (from == to)
        throw std::invalid_argument("path endpoints must differ; use cycle counts for returns");
    int n = g.n_vertices();
    int eff = std::min(ell, n - 1);
    bool exact = g.integral_weights();
    PathCounts out;
    out.from = from;
    out.to = to;
    out.pi = make_series(ell, eff, exact);
    if (eff < 1) return out;

    SieveRun run(g, eff, 1, Mode::SingleEntry);
    run.from = from;
    run.to = to;
    int filter[2];
    filter[0] = std::min(from, to);
    filter[1] = std::max(from, to);
    enumerate_connected_induced(g, eff + 1, std::ref(run), std::span<const int>(filter, 2));

    for (int k = 1; k <= eff; ++k) {
        bool neg = (k & 1) == 0;  // pi(k) = (-1)^(k+1) * acc
        if (exact) {
            mpz_class v = run.settle(k);
            if (neg) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
            out.pi.exact_values[static_cast<std::size_t>(k - 1)] = v;
        } else {
            auto [value, cond] =
                settle_approx(run.facc[static_cast<std::size_t>(k - 1)], neg, 1.0);
            out.pi.approx_values[static_cast<std::size_t>(k - 1)] = value;
            out.pi.condition[static_cast<std::size_t>(k - 1)] = cond;
        }
    }
    return out;
}

std::vector<std::vector<PathCounts>> count_paths_all_pairs(const Graph& g, int ell) {
    require_length(ell);
    int n = g.n_vertices();
    int eff = std::min(ell, n - 1);
    bool exact = g.integral_weights();

    std::vector<std::vector<PathCounts>> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            PathCounts& p = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            p.from = i;
            p.to = j;
            if (i != j) p.pi = make_series(ell, std::max(eff, 0), exact);
        }
    }
    if (n < 2 || eff < 1) return grid;
    std::size_t cells = static_cast<std::size_t>(n) * n * static_cast<std::size_t>(eff);
    if (cells > 50'000'000)
        throw std::invalid_argument("all-pairs path counting is intended for small graphs");

    SieveRun run(g, eff, 1, Mode::AllPairs);
    enumerate_connected_induced(g, eff + 1, std::ref(run));

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            PathCounts& p = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 1; k <= eff; ++k) {
                std::size_t idx =
                    (static_cast<std::size_t>(i) * n + j) * static_cast<std::size_t>(eff) +
                    static_cast<std::size_t>(k - 1);
                bool neg = (k & 1) == 0;
                if (exact) {
                    mpz_class v = run.acc_grid[idx].settle();
                    if (neg) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
                    p.pi.exact_values[static_cast<std::size_t>(k - 1)] = v;
                } else {
                    auto [value, cond] = settle_approx(run.facc_grid[idx], neg, 1.0);
                    p.pi.approx_values[static_cast<std::size_t>(k - 1)] = value;
                    p.pi.condition[static_cast<std::size_t>(k - 1)] = cond;
                }
            }
        }
    }
    return grid;
}

ConsistencyReport verify_consistency(const Graph& g, int ell) {
    require_length(ell);
    int n = g.n_vertices();
    ConsistencyReport rep;
    rep.ell = ell;
    CycleCounts whole = count_cycles(g, ell);
    rep.exact = whole.gamma.exact;

    if (rep.exact) {
        std::vector<BigInt> rooted_sum(static_cast<std::size_t>(ell), BigInt(0));
        for (int i = 0; i < n; ++i) {
            RootedCycleCounts r = count_cycles_through(g, i, ell);
            for (int k = 1; k <= ell; ++k)
                rooted_sum[static_cast<std::size_t>(k - 1)] +=
                    r.gamma.exact_values[static_cast<std::size_t>(k - 1)];
        }
        rep.residuals.resize(static_cast<std::size_t>(ell));
        for (int k = 1; k <= ell; ++k) {
            BigInt lhs = whole.gamma.exact_values[static_cast<std::size_t>(k - 1)] * k;
            rep.residuals[static_cast<std::size_t>(k - 1)] =
                lhs - rooted_sum[static_cast<std::size_t>(k - 1)];
            if (rep.residuals[static_cast<std::size_t>(k - 1)] != 0) rep.pass = false;
        }
    } else {
        std::vector<double> rooted_sum(static_cast<std::size_t>(ell), 0.0);
        for (int i = 0; i < n; ++i) {
            RootedCycleCounts r = count_cycles_through(g, i, ell);
            for (int k = 1; k <= ell; ++k)
                rooted_sum[static_cast<std::size_t>(k - 1)] +=
                    r.gamma.approx_values[static_cast<std::size_t>(k - 1)];
        }
        rep.residuals_approx.resize(static_cast<std::size_t>(ell));
        for (int k = 1; k <= ell; ++k) {
            double lhs = whole.gamma.approx_values[static_cast<std::size_t>(k - 1)] * k;
            double res = lhs - rooted_sum[static_cast<std::size_t>(k - 1)];
            rep.residuals_approx[static_cast<std::size_t>(k - 1)] = res;
            double tol = 1e-6 * std::max(1.0, std::abs(lhs));
            if (std::abs(res) > tol) rep.pass = false;
        }
    }
    return rep;
}

}  // namespace cycount
