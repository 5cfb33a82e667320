#include "kdis/bounds.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include <quadmath.h>

#include "parallel.hpp"

namespace kdis {

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

long long moon_moser_formula(int n) {
    if (n < 2) throw_domain("formula defined for n >= 2");
    switch (n % 3) {
        case 0: return ipow(3, n / 3);
        case 1: return 4 * ipow(3, n / 3 - 1);
        default: return 2 * ipow(3, n / 3);
    }
}

long long tree_formula(int n) {
    if (n < 1) throw_domain("formula defined for n >= 1");
    return n % 2 == 0 ? ipow(2, n / 2 - 1) + 1 : ipow(2, n / 2);
}

long long triangle_free_formula(int n) {
    if (n < 4) throw_domain("formula defined for n >= 4");
    return n % 2 == 0 ? ipow(2, n / 2) : 5 * ipow(2, (n - 5) / 2);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Rational make_rational(long long num, long long den) {
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

Rational rat_add(Rational a, Rational b) {
    return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

} // namespace

Rational connected_formula_printed(int n) {
    if (n < 1) throw_domain("formula defined for n >= 1");
    int p = n / 3;
    switch (n % 3) {
        case 0: // 2/3 * 3^(n/3) + 1/2 * 2^(n/3)
            return rat_add(make_rational(2 * ipow(3, p), 3), make_rational(ipow(2, p), 2));
        case 1: // 3^p + 1/2 * 3^p  (as printed)
            return rat_add(Rational{ipow(3, p), 1}, make_rational(ipow(3, p), 2));
        default: // 4/3 * 3^p + 4/3 * 3^p  (as printed: two identical terms)
            return rat_add(make_rational(4 * ipow(3, p), 3), make_rational(4 * ipow(3, p), 3));
    }
}

double c_pow_k(long long k, double epsilon) {
    return std::exp(std::log(2.0 + epsilon) / (1.0 + epsilon + 1.0 / static_cast<double>(k)));
}

double BoundParams::c_pow_k() const { return kdis::c_pow_k(k, epsilon); }

SweepFn sweep_fn_from_string(const std::string& s) {
    if (s == "f0") return SweepFn::F0;
    if (s == "f1") return SweepFn::F1;
    if (s == "f2") return SweepFn::F2;
    if (s == "f3") return SweepFn::F3;
    throw Error(ErrorCode::InvalidArgument, "unknown sweep function: " + s);
}

std::string to_string(SweepFn fn) {
    switch (fn) {
        case SweepFn::F0: return "f0";
        case SweepFn::F1: return "f1";
        case SweepFn::F2: return "f2";
        case SweepFn::F3: return "f3";
    }
    return "?";
}

namespace {

// All four functions are written in terms of c^x = exp(a*x/k) with
// a = ln(2+eps)/(1+eps+1/k), evaluated for a generic floating type so the
// double and quad paths share one transcription.
template <typename R>
struct FEval {
    long long k;
    R eps, beta;
    R a; // ln(c^k)

    FEval(long long k_, R eps_, R beta_) : k(k_), eps(eps_), beta(beta_) {
        R kk = static_cast<R>(k);
        a = log_(R(2) + eps) / (R(1) + eps + R(1) / kk);
    }

    static R log_(R x) {
        if constexpr (sizeof(R) == sizeof(__float128))
            return logq(x);
        else
            return std::log(x);
    }
    static R exp_(R x) {
        if constexpr (sizeof(R) == sizeof(__float128))
            return expq(x);
        else
            return std::exp(x);
    }

    R cpow(R x) const { return exp_(a * x / static_cast<R>(k)); }

    R eval(SweepFn fn) const {
        R kk = static_cast<R>(k);
        R one = R(1);
        switch (fn) {
            case SweepFn::F0:
                return cpow(2 * kk) - cpow(kk - 1) -
                       (one + eps) * ((beta * kk - 1) / (kk - 1)) * cpow(kk - 2) -
                       (one + eps) * (one + eps - beta) * (kk / (kk - 1));
            case SweepFn::F1:
                return cpow(2 * kk) - cpow(kk) - (one + eps) * beta * cpow(kk) -
                       (one + eps) * (one + eps - beta) * (one + R(1) / 1000);
            case SweepFn::F2:
                return cpow(2 * kk) - cpow(kk) -
                       (one + eps - beta) * ((beta * kk - 1) / (kk - 1)) * cpow(kk) -
                       (one + eps - beta) * (one + eps) * (kk / (kk - 1)) -
                       (one + eps) * ((kk * (one + eps) - 1) / (kk - 1)) * cpow(kk - beta * kk);
            case SweepFn::F3:
                return cpow(2 * kk) - cpow(kk) - (one + eps - beta) * beta * cpow(kk) -
                       (one + eps - beta) * (one + eps + R(2) / 1000) -
                       (one + eps) * (one + eps * (one + R(1) / 1000)) * cpow((one - beta) * kk);
        }
        return R(0);
    }
};

} // namespace

double f_eval(SweepFn fn, long long k, double epsilon, double beta) {
    if (k < 3) throw_domain("bound functions defined for k >= 3");
    FEval<double> e(k, epsilon, beta);
    return e.eval(fn);
}

double f0(long long k, double epsilon, double beta) { return f_eval(SweepFn::F0, k, epsilon, beta); }
double f1(long long k, double epsilon, double beta) { return f_eval(SweepFn::F1, k, epsilon, beta); }
double f2(long long k, double epsilon, double beta) { return f_eval(SweepFn::F2, k, epsilon, beta); }
double f3(long long k, double epsilon, double beta) { return f_eval(SweepFn::F3, k, epsilon, beta); }

namespace hp {

double c_pow_k(long long k, double epsilon) {
    __float128 e = epsilon;
    __float128 r = expq(logq(__float128(2) + e) / (__float128(1) + e + __float128(1) / __float128(k)));
    return static_cast<double>(r);
}

double f_eval(SweepFn fn, long long k, double epsilon, double beta) {
    if (k < 3) throw_domain("bound functions defined for k >= 3");
    FEval<__float128> e(k, static_cast<__float128>(epsilon), static_cast<__float128>(beta));
    return static_cast<double>(e.eval(fn));
}

} // namespace hp

namespace {

struct ChunkResult {
    double min_value = 0.0;
    long long argmin_k = 0;
    bool all_positive = true;
    bool used = false;
};

void sweep_chunk(SweepFn fn, long long lo, long long hi, double eps, double beta, ChunkResult& out) {
    ChunkResult r;
    for (long long k = lo; k <= hi; ++k) {
        FEval<double> e(k, eps, beta);
        double v = e.eval(fn);
        bool positive;
        if (v > kPositivitySlack) {
            positive = true;
        } else if (v <= -kPositivitySlack) {
            positive = false;
        } else {
            // inside the slack band: let the extended-precision sign decide
            v = hp::f_eval(fn, k, eps, beta);
            positive = v > 0.0;
        }
        if (!r.used || v < r.min_value) {
            r.min_value = v;
            r.argmin_k = k;
            r.used = true;
        }
        if (!positive) r.all_positive = false;
    }
    out = r;
}

} // namespace

SweepReport sweep_positivity(SweepFn fn, long long k_lo, long long k_hi, double epsilon,
                             double beta, int jobs) {
    if (k_lo < 3) throw_domain("sweeps start at k = 3");
    if (k_hi < k_lo) throw_domain("empty sweep range");
    SweepReport rep;
    rep.fn = to_string(fn);
    rep.k_lo = k_lo;
    rep.k_hi = k_hi;
    rep.epsilon = epsilon;
    rep.beta = beta;

    int workers = resolve_jobs(jobs);
    long long span = k_hi - k_lo + 1;
    long long chunks = std::min<long long>(span, workers * 16LL);
    std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
    parallel_for_index(static_cast<std::size_t>(chunks), workers, [&](std::size_t c) {
        long long lo = k_lo + span * static_cast<long long>(c) / chunks;
        long long hi = k_lo + span * (static_cast<long long>(c) + 1) / chunks - 1;
        sweep_chunk(fn, lo, hi, epsilon, beta, results[c]);
    });

    rep.all_positive = true;
    bool first = true;
    for (const auto& r : results) {
        if (!r.used) continue;
        if (first || r.min_value < rep.min_value) {
            rep.min_value = r.min_value;
            rep.argmin_k = r.argmin_k;
            first = false;
        }
        if (!r.all_positive) rep.all_positive = false;
    }
    return rep;
}

std::string sweep_csv(SweepFn fn, long long k_lo, long long k_hi, double epsilon, double beta) {
    if (k_hi - k_lo > 2'000'000) throw_domain("CSV export limited to 2e6 rows");
    std::string out = "k,value\n";
    char buf[64];
    for (long long k = k_lo; k <= k_hi; ++k) {
        double v = f_eval(fn, k, epsilon, beta);
        std::snprintf(buf, sizeof buf, "%lld,%.17g\n", k, v);
        out += buf;
    }
    return out;
}

bool remark_inequality(double epsilon, long long k) {
    if (k < 1) throw_domain("k must be positive");
    double lhs = std::pow(2.0, epsilon);
    double rhs = std::pow(1.0 + epsilon / 2.0, 1.0 + 1.0 / static_cast<double>(k));
    return lhs > rhs;
}

bool appendix_condition(double epsilon, long long k) {
    if (epsilon < 0) throw_domain("epsilon must be non-negative");
    if (k < 1) throw_domain("k must be positive");
    double lhs = 1.0 + epsilon + 1.0 / static_cast<double>(k);
    double rhs = (2.0 + epsilon) * std::log(2.0 + epsilon);
    return lhs <= rhs;
}

bool f_eps_monotone(long long k, std::span<const double> grid) {
    double prev = 0.0;
    bool first = true;
    for (double eps : grid) {
        double v = std::exp(std::log(2.0 + eps) / (1.0 + eps + 1.0 / static_cast<double>(k)));
        if (!first && v > prev + 1e-15) return false;
        prev = v;
        first = false;
    }
    return true;
}

double construction_rate(long long k, long long t, long long m_value) {
    if (m_value < 1) throw_domain("m must be positive");
    if (t < 1) throw_domain("t must be positive");
    return std::pow(static_cast<double>(t), static_cast<double>(k) / static_cast<double>(m_value));
}

double nagy_degree_bound(long long k, long long delta, long long n) {
    if (k < 1 || delta < k) throw_domain("needs delta >= k >= 1");
    return std::pow(static_cast<double>(k + delta) / static_cast<double>(k),
                    static_cast<double>(n) / static_cast<double>(delta + 1));
}

} // namespace kdis
