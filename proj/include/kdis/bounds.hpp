#ifndef KDIS_BOUNDS_HPP
#define KDIS_BOUNDS_HPP

#include <span>
#include <string>

#include "kdis/errors.hpp"

namespace kdis {

/// Closed-form maxima of maximal-independent-set counts.  Exact integer
/// arithmetic throughout; each evaluator rejects orders outside the range
/// where its case split is integral.
long long moon_moser_formula(int n);    // n >= 2
long long tree_formula(int n);          // n >= 1
long long triangle_free_formula(int n); // n >= 4

/// Reduced fraction, used where a printed formula may evaluate to a
/// non-integer that must be surfaced rather than rounded.
struct Rational {
    long long num = 0;
    long long den = 1;
    bool integral() const { return den == 1; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

/// The connected-family formula exactly as printed, by residue of n mod 3.
/// Returns a rational; callers decide how to treat non-integral values.
Rational connected_formula_printed(int n); // n >= 1

/// Parameters of the upper-bound machinery: base c with
/// c^k = (2+epsilon)^(1/(1+epsilon+1/k)) and threshold B = beta*k.
struct BoundParams {
    long long k = 3;
    double epsilon = 0.053;
    double beta = 0.8;
    double c_pow_k() const;
    double b_threshold() const { return beta * static_cast<double>(k); }
};

/// c^k as a function of k and epsilon.
double c_pow_k(long long k, double epsilon);

enum class SweepFn { F0, F1, F2, F3 };

SweepFn sweep_fn_from_string(const std::string& s);
std::string to_string(SweepFn fn);

/// The four bound functions, transcribed term by term.
double f_eval(SweepFn fn, long long k, double epsilon, double beta);
double f0(long long k, double epsilon, double beta);
double f1(long long k, double epsilon, double beta);
double f2(long long k, double epsilon, double beta);
double f3(long long k, double epsilon, double beta);

/// Quad-precision (>= 30 significant digits) re-evaluations, used when a
/// double-precision value lands inside the positivity slack.
namespace hp {
double c_pow_k(long long k, double epsilon);
double f_eval(SweepFn fn, long long k, double epsilon, double beta);
}

/// Positivity is asserted as value > kPositivitySlack; values inside
/// (-slack, slack] are re-evaluated at extended precision and judged by the
/// sign of that evaluation.
inline constexpr double kPositivitySlack = 1e-9;

struct SweepReport {
    std::string fn;
    long long k_lo = 0, k_hi = 0;
    double epsilon = 0.053, beta = 0.8;
    double min_value = 0.0;
    long long argmin_k = 0;
    bool all_positive = false;
};

/// Evaluate fn at every integer k in [k_lo, k_hi]; deterministic under any
/// worker count.
SweepReport sweep_positivity(SweepFn fn, long long k_lo, long long k_hi, double epsilon,
                             double beta, int jobs = 0);

/// Per-k values for CSV export (small ranges only).
std::string sweep_csv(SweepFn fn, long long k_lo, long long k_hi, double epsilon, double beta);

/// 2^eps > (1 + eps/2)^(1 + 1/k)
bool remark_inequality(double epsilon, long long k);

/// 1 + eps + 1/k <= (2 + eps) ln(2 + eps)
bool appendix_condition(double epsilon, long long k);

/// (2+eps)^(1/(1+eps+1/k)) is non-increasing along an ascending eps grid.
bool f_eps_monotone(long long k, std::span<const double> grid);

/// t^(k/m): the growth-rate lower bound a graph on m vertices with t k-DISes
/// certifies per k vertices.
double construction_rate(long long k, long long t, long long m_value);

/// ((k + delta)/k)^(n/(delta+1))
double nagy_degree_bound(long long k, long long delta, long long n);

} // namespace kdis

#endif
