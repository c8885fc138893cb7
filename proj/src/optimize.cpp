#include "vdc/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "vdc/parallel.hpp"

namespace vdc {

DifferenceGraph DifferenceGraph::build(i64 N) {
    if (N < 2) throw std::invalid_argument("DifferenceGraph: N must be >= 2");
    DifferenceGraph g;
    g.N = N;
    for (i64 p : primes_upto(N))
        if (p - 1 >= 1 && p - 1 <= N - 1) g.forbidden.push_back(p - 1);
    g.adj.assign(static_cast<size_t>(N), std::vector<bool>(static_cast<size_t>(N), false));
    for (i64 i = 0; i < N; i++)
        for (i64 d : g.forbidden) {
            if (i + d < N) {
                g.adj[static_cast<size_t>(i)][static_cast<size_t>(i + d)] = true;
                g.adj[static_cast<size_t>(i + d)][static_cast<size_t>(i)] = true;
            }
        }
    return g;
}

bool DifferenceGraph::independent(const std::vector<i64> &witness) const {
    for (size_t i = 0; i < witness.size(); i++)
        for (size_t j = i + 1; j < witness.size(); j++) {
            i64 d = std::abs(witness[i] - witness[j]);
            if (std::find(forbidden.begin(), forbidden.end(), d) != forbidden.end()) return false;
        }
    for (i64 v : witness)
        if (v < 1 || v > N) return false;
    return true;
}

namespace {

struct MisSearch {
    int n = 0;
    std::vector<std::uint64_t> mask;  // adjacency, post-ordering
    std::vector<int> order_to_orig;
    int best = 0;
    std::uint64_t best_set = 0;

    void run(std::uint64_t cur, int cur_size, std::uint64_t cand) {
        if (cur_size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            if (cur_size > best) {
                best = cur_size;
                best_set = cur;
            }
            return;
        }
        int v = std::countr_zero(cand);
        // include v
        run(cur | (std::uint64_t(1) << v), cur_size + 1,
            cand & ~mask[static_cast<size_t>(v)] & ~(std::uint64_t(1) << v));
        // exclude v
        run(cur, cur_size, cand & ~(std::uint64_t(1) << v));
    }
};

} // namespace

IndependentSetResult delta_exact(i64 N) {
    if (N > 64) throw std::invalid_argument("delta_exact: N must be <= 64 (use the heuristic)");
    DifferenceGraph g = DifferenceGraph::build(N);
    // Ascending-degree order keeps the search deterministic and effective.
    std::vector<int> deg(static_cast<size_t>(N), 0);
    for (i64 i = 0; i < N; i++)
        for (i64 j = 0; j < N; j++)
            if (g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)]) deg[static_cast<size_t>(i)]++;
    std::vector<int> order(static_cast<size_t>(N));
    for (i64 i = 0; i < N; i++) order[static_cast<size_t>(i)] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[static_cast<size_t>(a)] < deg[static_cast<size_t>(b)]; });
    std::vector<int> pos(static_cast<size_t>(N));
    for (i64 i = 0; i < N; i++) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = static_cast<int>(i);

    MisSearch s;
    s.n = static_cast<int>(N);
    s.order_to_orig.assign(order.begin(), order.end());
    s.mask.assign(static_cast<size_t>(N), 0);
    for (i64 i = 0; i < N; i++)
        for (i64 j = 0; j < N; j++)
            if (g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)])
                s.mask[static_cast<size_t>(pos[static_cast<size_t>(i)])] |=
                    std::uint64_t(1) << pos[static_cast<size_t>(j)];
    std::uint64_t all = (N == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << N) - 1);
    s.run(0, 0, all);

    IndependentSetResult out;
    out.size = s.best;
    for (int v = 0; v < s.n; v++)
        if (s.best_set & (std::uint64_t(1) << v))
            out.witness.push_back(s.order_to_orig[static_cast<size_t>(v)] + 1);
    std::sort(out.witness.begin(), out.witness.end());
    if (!g.independent(out.witness)) throw std::logic_error("delta_exact: witness not independent");
    return out;
}

IndependentSetResult delta_heuristic(i64 N) {
    DifferenceGraph g = DifferenceGraph::build(N);
    std::vector<bool> taken(static_cast<size_t>(N), false);
    auto conflicts = [&](i64 v) {
        for (i64 u = 0; u < N; u++)
            if (taken[static_cast<size_t>(u)] && g.adj[static_cast<size_t>(v)][static_cast<size_t>(u)])
                return true;
        return false;
    };
    for (i64 v = 0; v < N; v++)
        if (!conflicts(v)) taken[static_cast<size_t>(v)] = true;
    // 1-out 2-in swap improvement, first-improvement order.
    bool improved = true;
    while (improved) {
        improved = false;
        for (i64 out = 0; out < N && !improved; out++) {
            if (!taken[static_cast<size_t>(out)]) continue;
            taken[static_cast<size_t>(out)] = false;
            std::vector<i64> ins;
            for (i64 v = 0; v < N; v++)
                if (!taken[static_cast<size_t>(v)] && v != out && !conflicts(v)) {
                    taken[static_cast<size_t>(v)] = true;
                    ins.push_back(v);
                    if (ins.size() == 2) break;
                }
            if (ins.size() >= 2) improved = true;
            else {
                for (i64 v : ins) taken[static_cast<size_t>(v)] = false;
                taken[static_cast<size_t>(out)] = true;
            }
        }
    }
    IndependentSetResult out;
    for (i64 v = 0; v < N; v++)
        if (taken[static_cast<size_t>(v)]) out.witness.push_back(v + 1);
    out.size = static_cast<i64>(out.witness.size());
    if (!g.independent(out.witness)) throw std::logic_error("delta_heuristic: witness not independent");
    return out;
}

namespace {

// Dense two-phase tableau simplex on min c'x, Ax = b, x >= 0.  The artificial
// identity block is kept to the right so the duals y = c_B B^{-1} can be read
// off at the end.  Dantzig pricing with a switch to Bland's rule after a
// degeneracy stall; cycling is impossible under Bland.
template <class T> struct Simplex {
    int m = 0, n = 0;                    // structural columns
    std::vector<std::vector<T>> A;       // m x (n + m), artificial block last
    std::vector<T> b;
    std::vector<T> c;                    // length n
    std::vector<int> basis;
    bool bland = false;
    int stall = 0;

    static bool is_neg(const T &x, double eps) {
        if constexpr (std::is_same_v<T, double>) return x < -eps;
        else return x < 0;
    }
    static double dval(const T &x) {
        if constexpr (std::is_same_v<T, double>) return x;
        else return x.get_d();
    }

    // returns false on iteration blowup
    bool phase(const std::vector<T> &cost, bool allow_artificial) {
        int total = n + m;
        int iters = 0;
        int cap = std::is_same_v<T, double> ? 50000 : 200000;
        while (iters++ < cap) {
            // reduced costs: r_j = cost_j - cost_B' B^{-1} A_j (tableau form
            // keeps A already reduced, so r_j = cost_j - sum_i cost_{basis_i} A_ij)
            std::vector<T> cb(static_cast<size_t>(m));
            for (int i = 0; i < m; i++) cb[static_cast<size_t>(i)] = cost[static_cast<size_t>(basis[static_cast<size_t>(i)])];
            int enter = -1;
            T best{};
            for (int j = 0; j < total; j++) {
                if (!allow_artificial && j >= n) continue;
                bool in_basis = false;
                for (int i = 0; i < m; i++)
                    if (basis[static_cast<size_t>(i)] == j) { in_basis = true; break; }
                if (in_basis) continue;
                T r = cost[static_cast<size_t>(j)];
                for (int i = 0; i < m; i++) r -= cb[static_cast<size_t>(i)] * A[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (is_neg(r, 1e-11)) {
                    if (bland) { enter = j; break; }
                    if (enter < 0 || r < best) { enter = j; best = r; }
                }
            }
            if (enter < 0) return true;   // optimal
            // ratio test; among near-tied ratios in floating mode prefer the
            // largest pivot, which keeps the elimination stable
            int leave = -1;
            T ratio{};
            double best_pivot = 0;
            for (int i = 0; i < m; i++) {
                const T &aij = A[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if constexpr (std::is_same_v<T, double>) {
                    if (!(aij > 1e-11)) continue;
                } else {
                    if (!(aij > 0)) continue;
                }
                T r = b[static_cast<size_t>(i)] / aij;
                bool take = false;
                if (leave < 0) take = true;
                else if constexpr (std::is_same_v<T, double>) {
                    if (r < ratio - 1e-12) take = true;
                    else if (r <= ratio + 1e-12 && std::abs(aij) > best_pivot) take = true;
                } else {
                    if (r < ratio ||
                        (!(r < ratio) && !(ratio < r) &&
                         basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)]))
                        take = true;
                }
                if (take) {
                    leave = i;
                    ratio = r;
                    best_pivot = std::abs(dval(aij));
                }
            }
            if (leave < 0) return false;  // unbounded
            if (dval(ratio) == 0.0) {
                if (++stall > 2 * (m + n)) bland = true;
            } else stall = 0;
            pivot(leave, enter);
        }
        return false;
    }

    void pivot(int row, int col) {
        T p = A[static_cast<size_t>(row)][static_cast<size_t>(col)];
        int total = n + m;
        for (int j = 0; j < total; j++) A[static_cast<size_t>(row)][static_cast<size_t>(j)] /= p;
        b[static_cast<size_t>(row)] /= p;
        for (int i = 0; i < m; i++) {
            if (i == row) continue;
            T f = A[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (dval(f) == 0.0) continue;
            for (int j = 0; j < total; j++)
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * A[static_cast<size_t>(row)][static_cast<size_t>(j)];
            b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(row)];
        }
        basis[static_cast<size_t>(row)] = col;
    }

    // Solve; returns {feasible+bounded, primal objective, x, y}.
    struct Result {
        bool ok = false;
        T objective{};
        std::vector<T> x;
        std::vector<T> y;
    };

    Result solve() {
        Result res;
        // Exact pivots cycle under aggressive pricing on degenerate bases;
        // Bland's rule terminates unconditionally.
        if (!std::is_same_v<T, double>) bland = true;
        int total = n + m;
        basis.resize(static_cast<size_t>(m));
        for (int i = 0; i < m; i++) basis[static_cast<size_t>(i)] = n + i;
        std::vector<T> phase1(static_cast<size_t>(total), T{});
        for (int j = n; j < total; j++) phase1[static_cast<size_t>(j)] = T(1);
        if (!phase(phase1, true)) return res;
        T p1 = T{};
        for (int i = 0; i < m; i++)
            if (basis[static_cast<size_t>(i)] >= n) p1 += b[static_cast<size_t>(i)];
        if (dval(p1) > 1e-8) return res;   // infeasible
        // Drive residual basic artificials out; rows where that fails are
        // structurally zero and stay inert through phase 2.
        for (int i = 0; i < m; i++) {
            if (basis[static_cast<size_t>(i)] < n) continue;
            for (int j = 0; j < n; j++) {
                bool in_basis = false;
                for (int r = 0; r < m; r++)
                    if (basis[static_cast<size_t>(r)] == j) { in_basis = true; break; }
                if (in_basis) continue;
                bool usable;
                if constexpr (std::is_same_v<T, double>)
                    usable = std::abs(A[static_cast<size_t>(i)][static_cast<size_t>(j)]) > 1e-9;
                else
                    usable = A[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0;
                if (usable) {
                    pivot(i, j);
                    break;
                }
            }
        }
        std::vector<T> cost(static_cast<size_t>(total), T{});
        for (int j = 0; j < n; j++) cost[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
        if (!phase(cost, false)) return res;
        res.ok = true;
        res.x.assign(static_cast<size_t>(n), T{});
        for (int i = 0; i < m; i++)
            if (basis[static_cast<size_t>(i)] < n)
                res.x[static_cast<size_t>(basis[static_cast<size_t>(i)])] = b[static_cast<size_t>(i)];
        res.objective = T{};
        for (int j = 0; j < n; j++) res.objective += res.x[static_cast<size_t>(j)] * c[static_cast<size_t>(j)];
        // duals from the artificial identity block: y' = c_B' B^{-1}
        res.y.assign(static_cast<size_t>(m), T{});
        for (int k = 0; k < m; k++) {
            T acc{};
            for (int i = 0; i < m; i++)
                acc += cost[static_cast<size_t>(basis[static_cast<size_t>(i)])] *
                       A[static_cast<size_t>(i)][static_cast<size_t>(n + k)];
            res.y[static_cast<size_t>(k)] = acc;
        }
        return res;
    }
};

struct LPBuild {
    std::vector<i64> shifts;
    std::vector<double> cuts;
};

// rows: equality T(0)=1 first, then T(x) >= 0 per cut (with surplus columns).
template <class T>
typename Simplex<T>::Result solve_gamma_lp(const LPBuild &lp, double *gamma_out) {
    const int k = static_cast<int>(lp.shifts.size());
    const int vars = 2 * (k + 1);                 // split free variables
    const int cuts = static_cast<int>(lp.cuts.size());
    Simplex<T> s;
    s.m = 1 + cuts;
    s.n = vars + cuts;                            // + surplus columns
    s.A.assign(static_cast<size_t>(s.m), std::vector<T>(static_cast<size_t>(s.n + s.m), T{}));
    s.b.assign(static_cast<size_t>(s.m), T{});
    s.c.assign(static_cast<size_t>(s.n), T{});
    auto put = [&](int row, int var, double coef) {
        s.A[static_cast<size_t>(row)][static_cast<size_t>(2 * var)] = T(coef);
        s.A[static_cast<size_t>(row)][static_cast<size_t>(2 * var + 1)] = T(-coef);
    };
    // objective: minimise a_0
    s.c[0] = T(1);
    s.c[1] = T(-1);
    // equality row
    for (int v = 0; v <= k; v++) put(0, v, 1.0);
    s.b[0] = T(1);
    // cut rows
    for (int i = 0; i < cuts; i++) {
        int row = 1 + i;
        put(row, 0, 1.0);
        for (int v = 1; v <= k; v++)
            put(row, v,
                std::cos(2.0 * std::numbers::pi * static_cast<double>(lp.shifts[static_cast<size_t>(v - 1)]) *
                         lp.cuts[static_cast<size_t>(i)]));
        s.A[static_cast<size_t>(row)][static_cast<size_t>(vars + i)] = T(-1); // surplus
        s.b[static_cast<size_t>(row)] = T{};
    }
    // artificial identity block
    for (int i = 0; i < s.m; i++) s.A[static_cast<size_t>(i)][static_cast<size_t>(s.n + i)] = T(1);
    auto res = s.solve();
    if (res.ok && gamma_out)
        *gamma_out = Simplex<T>::dval(res.x[0]) - Simplex<T>::dval(res.x[1]);
    return res;
}

} // namespace

GammaLPResult gamma_lp(i64 N, i64 initial_grid, double tol) {
    if (N < 2 || N > 10000) throw std::invalid_argument("gamma_lp: need 2 <= N <= 10^4");
    GammaLPResult out;
    LPBuild lp;
    for (i64 p : primes_upto(N)) lp.shifts.push_back(p - 1);
    if (lp.shifts.empty()) throw std::logic_error("gamma_lp: no shifts below N");
    const int k = static_cast<int>(lp.shifts.size());

    if (initial_grid == 0) initial_grid = std::max<i64>(16, std::min<i64>(4 * N, 2048));
    for (i64 j = 0; j < initial_grid; j++)
        lp.cuts.push_back(static_cast<double>(j) / static_cast<double>(initial_grid));

    int scan_log2 = 12;
    while ((i64(1) << scan_log2) < 4 * N) scan_log2++;

    std::vector<double> a(static_cast<size_t>(k) + 1, 0.0);
    double gamma = 1.0;
    double prev_value = -std::numeric_limits<double>::infinity();
    bool force_exact = false;
    for (int round = 0; round < 400; round++) {
        out.cut_rounds = round + 1;
        double g = 0;
        auto res = solve_gamma_lp<double>(lp, &g);
        // Growing cut sets can only raise the optimum; a drop, or a solution
        // violating its own cut set, means the floating tableau lost accuracy
        // and the round is redone exactly.
        bool need_exact = force_exact || !res.ok || g < prev_value - 1e-9;
        if (!need_exact) {
            for (size_t v = 0; v < a.size(); v++) a[v] = res.x[2 * v] - res.x[2 * v + 1];
            double drift = 0;
            for (double x : lp.cuts) {
                double acc = a[0];
                for (int v = 1; v <= k; v++)
                    acc += a[static_cast<size_t>(v)] *
                           std::cos(2.0 * std::numbers::pi *
                                    static_cast<double>(lp.shifts[static_cast<size_t>(v - 1)]) * x);
                drift = std::min(drift, acc);
            }
            double norm = 1;
            for (size_t v = 0; v < a.size(); v++) norm -= a[v];
            if (drift < -1e-7 || std::abs(norm) > 1e-7) need_exact = true;
        }
        bool used_exact = need_exact;
        force_exact = false;
        if (!need_exact) {
            out.dual_objective = res.y[0];
        } else {
            out.exact_fallback_used = true;
            auto ex = solve_gamma_lp<mpq_class>(lp, &g);
            if (!ex.ok) throw std::runtime_error("gamma_lp: LP solve failed in exact mode");
            for (size_t v = 0; v < a.size(); v++)
                a[v] = ex.x[2 * v].get_d() - ex.x[2 * v + 1].get_d();
            out.dual_objective = ex.y[0].get_d();  // b = e_1
        }
        gamma = g;
        prev_value = std::max(prev_value, gamma);
        out.duality_gap = std::abs(gamma - out.dual_objective);

        auto Tval = [&](double x) {
            double acc = a[0];
            for (int v = 1; v <= k; v++)
                acc += a[static_cast<size_t>(v)] *
                       std::cos(2.0 * std::numbers::pi *
                                static_cast<double>(lp.shifts[static_cast<size_t>(v - 1)]) * x);
            return acc;
        };
        double nsum = 0, n2sum = 0;
        for (int v = 1; v <= k; v++) {
            double s = static_cast<double>(lp.shifts[static_cast<size_t>(v - 1)]);
            nsum += s * std::abs(a[static_cast<size_t>(v)]);
            n2sum += s * s * std::abs(a[static_cast<size_t>(v)]);
        }
        double deriv = 2.0 * std::numbers::pi * nsum;
        double curv = 4.0 * std::numbers::pi * std::numbers::pi * n2sum;

        // scan, escalating the grid until either a violation or a certificate
        bool added_cut = false;
        for (int lg = scan_log2; lg <= 22 && !added_cut && !out.certified; lg++) {
            const i64 G = i64(1) << lg;
            std::vector<std::complex<double>> buf(static_cast<size_t>(G));
            buf[0] = a[0];
            for (int v = 1; v <= k; v++)
                buf[static_cast<size_t>(lp.shifts[static_cast<size_t>(v - 1)])] +=
                    a[static_cast<size_t>(v)];
            fft_pow2(buf);
            double mn = std::numeric_limits<double>::infinity();
            i64 arg = 0;
            for (i64 j = 0; j < G; j++) {
                double val = buf[static_cast<size_t>(j)].real();
                if (val < mn) { mn = val; arg = j; }
            }
            double h = 1.0 / static_cast<double>(G);
            // local refinement around the grid argmin
            double lo = static_cast<double>(arg) * h - h, hi = static_cast<double>(arg) * h + h;
            const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
            double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
            double f1 = Tval(x1), f2 = Tval(x2);
            for (int it = 0; it < 50; it++) {
                if (f1 < f2) { hi = x2; x2 = x1; f2 = f1; x1 = hi - gr * (hi - lo); f1 = Tval(x1); }
                else { lo = x1; x1 = x2; f1 = f2; x2 = lo + gr * (hi - lo); f2 = Tval(x2); }
            }
            double xstar = f1 < f2 ? x1 : x2;
            double vstar = std::min({mn, f1, f2});
            out.scan_log2 = lg;
            if (vstar < -tol) {
                double cut = vstar == mn ? static_cast<double>(arg) * h : xstar;
                bool dup = false;
                for (double c : lp.cuts)
                    if (std::abs(c - cut) < 1e-9) dup = true;
                if (!dup) {
                    lp.cuts.push_back(cut);
                    added_cut = true;
                    scan_log2 = lg;
                    break;
                }
                // an already-cut point reads negative: the solution vector is
                // numerical noise, so redo the round with exact pivots
                if (!used_exact) {
                    force_exact = true;
                    break;
                }
            }
            double certified = mn - std::min((h / 2.0) * deriv, (h * h / 8.0) * curv);
            if (certified >= -tol) {
                out.certified = true;
                out.certified_min = certified;
            }
        }
        if (out.certified) break;
        if (!added_cut && !force_exact) break;
        if (lp.cuts.size() > 4096) throw std::runtime_error("gamma_lp: cut budget exhausted");
    }

    out.gamma = gamma;
    out.poly.a0 = a[0];
    for (int v = 1; v <= k; v++)
        out.poly.coeffs.emplace_back(lp.shifts[static_cast<size_t>(v - 1)], a[static_cast<size_t>(v)]);
    for (int v = 1; v <= k; v++)
        out.psi.emplace_back(lp.shifts[static_cast<size_t>(v - 1)], a[static_cast<size_t>(v)]);
    return out;
}

CompareRow compare_delta_gamma(i64 N, double tol) {
    CompareRow row;
    row.N = N;
    auto mis = delta_exact(N);
    row.delta_size = mis.size;
    row.delta = static_cast<double>(mis.size) / static_cast<double>(N);
    auto lp = gamma_lp(N);
    row.gamma = lp.gamma;
    row.margin = 2 * lp.gamma + 2 * tol - row.delta;
    if (row.margin < 0) throw std::logic_error("compare_delta_gamma: density exceeded twice gamma");
    return row;
}

std::string compare_csv(const std::vector<CompareRow> &rows) {
    std::ostringstream os;
    os.precision(12);
    os << "N,delta_exact,gamma_lp,two_gamma,margin\n";
    for (const auto &r : rows)
        os << r.N << "," << r.delta << "," << r.gamma << "," << 2 * r.gamma << "," << r.margin << "\n";
    return os.str();
}

} // namespace vdc
