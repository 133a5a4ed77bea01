#include "bhopm/math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bhopm::math {

namespace {
constexpr double neg_inf = -std::numeric_limits<double>::infinity();
}

double norm_pdf(double z) {
    return std::exp(-0.5 * z * z - half_log_two_pi);
}

double norm_logpdf(double z) {
    return -0.5 * z * z - half_log_two_pi;
}

double norm_cdf(double z) {
    if (std::isnan(z)) return z;
    // erfc keeps relative accuracy in the left tail where 0.5*(1+erf) would round to 0.
    return 0.5 * std::erfc(-z * inv_sqrt2);
}

// log Phi(z). For z <= -20 the direct log underflows, so switch to the
// asymptotic expansion Phi(z) ~ phi(z)/(-z) * (1 - 1/z^2 + 3/z^4 - ...).
double norm_logcdf(double z) {
    if (std::isnan(z)) return z;
    if (std::isinf(z)) return z > 0 ? 0.0 : neg_inf;
    if (z > 6.0) return -norm_cdf(-z);  // log(1-eps) ~ -eps
    if (z > -20.0) return std::log(norm_cdf(z));

    const double zsq = z * z;
    double term = 1.0;
    double series = 1.0;
    double prev = 0.0;
    double numerator = 1.0;
    double sign = 1.0;
    for (int i = 1; std::fabs(series - prev) > std::numeric_limits<double>::epsilon() && i < 30; ++i) {
        prev = series;
        sign = -sign;
        numerator *= 2 * i - 1;
        term /= zsq;
        series += sign * numerator * term;
    }
    return -0.5 * zsq - std::log(-z) - half_log_two_pi + std::log(series);
}

double log1mexp(double x) {
    // x <= 0; log(1 - e^x) with the usual two-branch split at -log 2.
    if (x >= 0.0) return x == 0.0 ? neg_inf : std::numeric_limits<double>::quiet_NaN();
    if (x > -0.693147180559945309) return std::log(-std::expm1(x));
    return std::log1p(-std::exp(x));
}

double logaddexp(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

double logsumexp(std::span<const double> xs) {
    double m = neg_inf;
    for (double x : xs) m = std::max(m, x);
    if (m == neg_inf || std::isinf(m)) return m;
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - m);
    return m + std::log(acc);
}

double norm_logcdf_diff(double a, double b) {
    if (b <= 0.0) {
        const double lb = norm_logcdf(b);
        const double la = norm_logcdf(a);
        return lb + log1mexp(la - lb);
    }
    if (a >= 0.0) {
        const double lca = norm_logcdf(-a);
        const double lcb = norm_logcdf(-b);
        return lca + log1mexp(lcb - lca);
    }
    // Opposite tails: the erf terms have opposite signs, so the subtraction
    // is an addition of magnitudes and cannot cancel.
    const double p = 0.5 * (std::erf(b * inv_sqrt2) - std::erf(a * inv_sqrt2));
    return std::log(p);
}

double cell_logprob(int grade, double m, double s, std::span<const double> cuts) {
    const int k = static_cast<int>(cuts.size()) + 1;
    double lp;
    if (grade == 1) {
        lp = norm_logcdf((cuts.front() - m) / s);
    } else if (grade == k) {
        lp = norm_logcdf((m - cuts.back()) / s);  // log(1 - Phi((t-m)/s))
    } else {
        lp = norm_logcdf_diff((cuts[grade - 2] - m) / s, (cuts[grade - 1] - m) / s);
    }
    return std::max(lp, cell_log_floor);
}

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 2) return 0.0;
    const double mu = mean(xs);
    double acc = 0.0;
    for (double x : xs) acc += (x - mu) * (x - mu);
    return acc / static_cast<double>(n - 1);
}

}  // namespace bhopm::math
