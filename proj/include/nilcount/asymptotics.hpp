#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilcount/census.hpp"
#include "nilcount/int_types.hpp"

namespace nilcount {

struct EstimateParams {
    double x = 0;
    unsigned order = 0;                 // truncation N
    std::optional<double> synthetic_L;  // override of logloglog x for series
                                        // evaluation in its convergent regime

    double L() const;      // logloglog x, or the override; must be > 0
    double log2x() const;  // loglog x; must be > 0
};

// (e^{-gamma} x / L) sum_{k<=N} c_k / L^k
double cyclic_estimate(const EstimateParams& p);

// (e^{-gamma} x / (loglog x * L^2)) sum_{k<=N} b_k / L^k
double strictly_abelian_estimate(const EstimateParams& p);

// (e^{-gamma} x / ((loglog x)^2 * L^2)) sum_{k<=N} d_k / L^k
double strictly_nilpotent_estimate(const EstimateParams& p);

struct CheckRow {
    std::string check;
    std::string param;
    double observed = 0;
    double predicted = 0;
    double ratio = 0;
    int order = -1;                 // -1: not order-indexed
    double residual = 0;
    std::optional<bool> pass;       // empty: report-only row
};

struct CheckReport {
    std::string name;
    std::vector<CheckRow> rows;
    bool hard_pass() const;         // true if no row with pass == false
};

std::string check_rows_to_csv(std::span<const CheckRow> rows);

// Symbolic-vs-quadrature cross-check: |eval(k! C_k) - Gamma^{(k)}(1)| and the
// s = 2 analogue with D_k, for k <= kmax, tolerance 1e-9. Also arbitrates the
// two d_2 closed forms against sum_{i+j=2} c_i Gamma^{(j)}(2): the recurrence
// value must match to 1e-9, the alternative must miss by more than 1e-2.
CheckReport gamma_quadrature_check(unsigned kmax = 8);

// Window integral I = int_{e^{-sqrt L}}^{L} u^{s-1} e^{-u} (1 - ln u / L)^{-1} du
// versus partial sums P_M' = sum_{k<=M'} Gamma^{(k)}(s) / L^k of the
// divergent asymptotic expansion. Rows report |I - P_M'| per order with the
// declared tolerances: residuals decreasing through orders 1..3 and relative
// residual < 1e-3 at order 4.
CheckReport integral_series_check(double L, unsigned s, unsigned M);

struct MertensWindow {
    double lambda = 0; // plays the role of loglog x
    double y = 0;      // lambda / log lambda
    double z = 0;      // lambda * exp(sqrt(log lambda))
    double sigma = 0;  // sum of 1/q over primes in (y, z]
    double tau = 0;    // sum of exp(-lambda/q)/q over the same primes
};

MertensWindow mertens_window(double lambda, u64 sieve_cap = 20'000'000'000ull);

// exp(tau) against (log z / log lambda) exp( sum_{k=1..N} (k-1)! C_k / (log lambda)^k ).
// Report-only: convergence in log lambda is far too slow for a hard bound.
CheckReport tau_expansion_check(double lambda, unsigned N, u64 sieve_cap = 20'000'000'000ull);

// sum_{T<p<=cap} p^{-power} against 1/(T log T), 1/(2 T^2 log T),
// 1/(3 T^3 log T) for power 2, 3, 4. Hard band [0.85, 1.20].
CheckReport lemma_tail_check(double T, int power, u64 cap);

// prod_{p<=z} (1 - 1/p) against e^{-gamma}/log z. Hard band [0.99, 1.01].
CheckReport mertens_product_check(u64 z);

struct CompareRow {
    u64 x = 0;
    u64 cyclic = 0;
    u64 strictly_abelian = 0;
    u64 strictly_nilpotent = 0;
    // Estimates are absent where logloglog x <= 0.
    std::optional<double> cyclic_est, strictly_abelian_est, strictly_nilpotent_est;
    std::optional<double> cyclic_ratio, strictly_abelian_ratio, strictly_nilpotent_ratio;
};

// Joins census checkpoints with the three estimates. The ratios do not
// approach 1 at any computable x (the expansion parameter logloglog x is
// barely above 1 even at x = 10^9); emitted for the record, never asserted.
std::vector<CompareRow> compare_table(std::span<const Checkpoint> checkpoints, unsigned order);

std::string compare_table_to_csv(std::span<const CompareRow> rows);

} // namespace nilcount
