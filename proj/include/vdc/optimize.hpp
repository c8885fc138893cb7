#pragma once

#include <string>
#include <vector>

#include "vdc/arith.hpp"
#include "vdc/construct.hpp"

// Exact and LP computation of the two extremal constants: the density of the
// largest set avoiding shifted-prime differences (maximum independent set on
// the difference graph) and the least constant term of a normalised
// nonnegative cosine polynomial on shifted-prime frequencies (cutting-plane
// LP closed by a derivative-bound certificate).

namespace vdc {

struct DifferenceGraph {
    i64 N = 2;
    std::vector<i64> forbidden;            // {p-1 : p prime, p <= N}
    std::vector<std::vector<bool>> adj;    // symmetric, indices 0..N-1 for 1..N

    static DifferenceGraph build(i64 N);
    bool independent(const std::vector<i64> &witness) const; // values in 1..N
};

struct IndependentSetResult {
    i64 size = 0;
    std::vector<i64> witness;   // elements of {1..N}
};

IndependentSetResult delta_exact(i64 N);       // N <= 64, branch and bound
IndependentSetResult delta_heuristic(i64 N);   // greedy + swap improvement

struct GammaLPResult {
    double gamma = 0;            // LP optimum (discretised lower bracket)
    CosinePolynomial poly;       // optimal polynomial
    bool certified = false;      // nonnegativity certificate for poly
    double certified_min = 0;
    double dual_objective = 0;
    double duality_gap = 0;
    int cut_rounds = 0;
    int scan_log2 = 0;
    bool exact_fallback_used = false;
    // Converted function per the equivalence: Psi(p-1) = a_{p-1} scaled.
    std::vector<std::pair<i64, double>> psi;
};

GammaLPResult gamma_lp(i64 N, i64 initial_grid = 0, double tol = 1e-9);

struct CompareRow {
    i64 N = 0;
    i64 delta_size = 0;
    double delta = 0;
    double gamma = 0;
    double margin = 0;           // 2 gamma + 2 tol - delta
};

CompareRow compare_delta_gamma(i64 N, double tol = 1e-6);
std::string compare_csv(const std::vector<CompareRow> &rows);

} // namespace vdc
