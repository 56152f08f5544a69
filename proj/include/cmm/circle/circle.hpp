#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cmm/rigor/complex.hpp"
#include "cmm/rigor/interval.hpp"
#include "cmm/rigor/report.hpp"

namespace cmm::circle {

// ---------------------------------------------------------------- Laurent data

// Coefficients of B_{r,t}(z) = e^{-Az} / (z (1 - e^{-z})), A = r/t:
//   c_n      = B_{n+2}(1 - A) / (n+2)!                         n >= -2
//   c*_n     = c_n for n <= N-1, (-A)^{n+1} c_{-1} / (n+1)! otherwise
//   b_n      = c_n - (-A)^{n+1} c_{-1} / (n+1)!                n >= 0
// with N = 1 throughout.
struct LaurentCoeffs {
    int r = 1;
    int t = 1;
    int N = 1;
    mpq_class A;
    std::map<int, mpq_class> c;
    std::map<int, mpq_class> c_star;
    std::map<int, mpq_class> b;
};

LaurentCoeffs brt_laurent(int r, int t, int maxN);

// log Gamma(r/t) - log(2 pi) / 2 for (r, t) in {(1,4), (3,4)}.
Interval beta_rt(int r, int t, Precision p = Precision{});

// Upper bound on J_{g_{r,t},2} used inside E: 649/40000 and 5/64.
mpq_class j_constant(int r, int t);

// ----------------------------------------------------------- F and E functions

inline constexpr int kDefaultFTerms = 40;

// F_a^{r,t}(z) on the principal branch; requires Re z > 0 and |z| < 2 pi.
// The power-series part enters with a minus sign (see README).
CInterval eval_F(const mpq_class& a, int r, int t, const CInterval& z, int K = kDefaultFTerms);

// E_a^{r,t}(z); depends on z only through |z|. Requires |a z| < 2 pi.
Interval eval_E(const mpq_class& a, int r, int t, const Interval& abs_z, int K = 60);
Interval eval_E(const mpq_class& a, int r, int t, const CInterval& z, int K = 60);

// 4z (F_1^{1,4}(4z) + F_1^{3,4}(8z) - F_{1/2}^{3,4}(8z))
CInterval combined_F(const CInterval& z, int K = kDefaultFTerms);
// 4|z| (E_1^{1,4}(4z) + E_1^{3,4}(8z) + E_{1/2}^{3,4}(8z))
Interval combined_E(const CInterval& z);

// sum_{m>=0} B_{r,t}((m+a) z) for real z > 0, partial sum plus tail.
Interval brt_sum_real(const mpq_class& a, int r, int t, const Interval& z);

// |sum B_{r,t}((m+a)z) - F_a^{r,t}(z)| < E_a^{r,t}(z) at a real z.
BoundReport lemma_brt_instance(const mpq_class& a, int r, int t, const mpq_class& z, Precision p = Precision{});

// sum_{n=-2}^{10} c_n z^n against the closed form, within the Lehmer tail.
BoundReport laurent_consistency(int r, int t, const mpq_class& z, Precision p = Precision{});

// E_a^{r,t}(z) below the closed-form majorants (649/480000 + 99a/5000)|z|
// and (5/768 + 186a/5000)|z|, for 0 < |a z| < pi/6.
BoundReport e_bounds_check(const mpq_class& a, int r, int t, const Interval& abs_z);

// ------------------------------------------------------------ J integrals

struct JAnalysis {
    int r = 1;
    int t = 4;
    mpq_class g1_at_zero;               // g'(0) = b_1, exact
    std::optional<Interval> alpha;      // zero of g'' when it exists
    std::optional<Interval> g1_at_alpha;
    Interval J;                         // enclosure of int_0^inf |g''|
    double J_quadrature = 0.0;          // non-rigorous Gauss-Legendre value
    bool sign_pattern_certified = false;
};

JAnalysis analyze_j(int r, int t, Precision p = Precision{});
BoundReport j_g_quadrature(int r, int t, Precision p = Precision{});

// g_{r,t} and its first two derivatives at a point or over a small interval.
struct GJet {
    Interval g;
    Interval d1;
    Interval d2;
};
GJet g_jet(int r, int t, const Interval& x);

// -------------------------------------------------------- F expansion (alpha_n)

struct FExpansion {
    Interval alpha_m1;            // coefficient of 1/z
    mpq_class alpha_log;          // coefficient of log z
    Interval alpha_0;             // constant term implied by the F definitions
    Interval alpha_0_closed_form; // beta_{1,4} - (log 2 + gamma)/4
    mpq_class alpha_1;            // coefficient of z implied by the F definitions
    std::vector<mpq_class> alpha;        // alpha_n, n = 0.. (alpha[0] unused)
    std::vector<mpq_class> alpha_quoted; // the quoted closed form for n >= 2
};

FExpansion f_expansion(int max_n = 12, Precision p = Precision{});

// |F(z) - alpha_{-1}/z - alpha_log log z - alpha_0| <= |z|/2, one report per
// sample, using the expansion constants of f_expansion.
std::vector<BoundReport> lemma_F_check(const std::vector<CInterval>& samples);

// ------------------------------------------------------------------ major arc

// Log G(q), q = e^{-z}: sum_{m<=M} q^m / (m (1 + (-1)^{m+1} q^{2m})) + tail.
// M = 0 picks max(64, ceil(40 / x)).
CInterval log_G_direct(const CInterval& z, long M = 0);
Interval log_G_tail(const Interval& x, long M);

BoundReport major_arc_check(const CInterval& z);

// ------------------------------------------------------------------ minor arc

Interval re_log_G(const Interval& x, const Interval& y, long M = 0);

// Re Log G(q) < 1/(5x) at one point of the minor arc; sampled, not global.
BoundReport minor_arc_sample(const Interval& x, const Interval& y);

// 1 - 2 cos(60 m x) e^{-2mx} + e^{-4mx} > alpha^2 x^2 on 0 < x < pi/480.
BoundReport alpha_m_verify(int m, const mpq_class& alpha_squared, Precision p = Precision{});

// The five (m, alpha_m^2) pairs used in the minor-arc argument.
std::vector<std::pair<int, mpq_class>> paper_alpha_squares();

Interval minor_arc_constant(Precision p = Precision{});
BoundReport minor_arc_final_constant(Precision p = Precision{});

// Log P(q) = sum_m q^m / (m (1 - q^m)) for 0 < q < 1, with tail.
Interval log_P(const Interval& q, long M = 0);

// Log (|q|;|q|^2)^{-1} = pi^2/(12x) - log(2)/2 + x/24 + Log P(e^{-4pi^2/x}) - Log P(e^{-2pi^2/x})
Interval eta_transform_rhs(const Interval& x);
BoundReport eta_transform_bound(const Interval& x);

// ---------------------------------------------------------- final reduction

Interval error_budget_E(long n, Precision p = Precision{});

// I_{-3/4}((pi/2) sqrt(n/3)) > E(n) + exp((pi/2) sqrt(n/3)) / (5 n^{7/8}).
// Refines precision by doubling up to 1024 bits while Indeterminate.
BoundReport final_reduction_check(long n, Precision p = Precision{}, bool refine = true);
Verdict final_reduction_verdict(long n, Precision p = Precision{});

struct ThresholdScan {
    long lo = 0;
    long hi = 0;
    std::optional<long> threshold; // largest Failed n in range
    long verified = 0;
    long failed = 0;
    long indeterminate = 0;
    std::vector<long> failures;      // every Failed n, ascending
    std::vector<long> indeterminates;
    bool verified_above_threshold = false;
};

// jobs <= 0 uses the OpenMP default. The result depends only on the range
// and precision, never on the schedule.
ThresholdScan threshold_scan(long lo, long hi, int jobs = 0, Precision p = Precision{});
ThresholdScan threshold_scan_serial(long lo, long hi, Precision p = Precision{});

// pi/(2 sqrt 3) - pi/(4 sqrt 3) - 4 sqrt 3 / (5 pi) > 1/100.
Interval exponent_gap(Precision p = Precision{});
BoundReport exponent_gap_report(Precision p = Precision{});

} // namespace cmm::circle
